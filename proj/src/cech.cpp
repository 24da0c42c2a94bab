#include "detloc/cech.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace detloc {

Cochain::Cochain(std::shared_ptr<const Thickening> ctx, int k) : ctx_(std::move(ctx)), k_(k) {
    if (k < 0 || k > kNumVars) throw std::invalid_argument("cochain degree out of range");
}

void Cochain::set(uint8_t mask, LocalizedElement e) {
    if (std::popcount(mask) != k_)
        throw std::invalid_argument("component subset size does not match cochain degree");
    if (e.site()->mask != mask) throw std::invalid_argument("component site mismatch");
    if (e.site()->t != ctx_->t() || e.site()->field != ctx_->field())
        throw std::invalid_argument("component belongs to a different thickening");
    if (e.is_zero())
        comps_.erase(mask);
    else
        comps_.insert_or_assign(mask, std::move(e));
}

LocalizedElement Cochain::at(uint8_t mask) const {
    auto it = comps_.find(mask);
    if (it != comps_.end()) return it->second;
    return LocalizedElement::zero(ctx_->site(mask));
}

bool Cochain::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

std::optional<Multidegree> Cochain::multidegree() const {
    std::optional<Multidegree> d;
    for (const auto& [mask, e] : comps_) {
        if (e.is_zero()) continue;
        auto de = e.multidegree();
        if (!de) return std::nullopt;
        if (!d)
            d = de;
        else if (*d != *de)
            return std::nullopt;
    }
    return d;
}

Cochain Cochain::operator*(const FieldElement& c) const {
    Cochain r(ctx_, k_);
    for (const auto& [mask, e] : comps_) r.set(mask, e * c);
    return r;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("cochain degree mismatch");
    Cochain r(a.ctx_, a.k_);
    for (const auto& [mask, e] : a.comps_) {
        auto it = b.comps_.find(mask);
        r.set(mask, it == b.comps_.end() ? e : e + it->second);
    }
    for (const auto& [mask, e] : b.comps_)
        if (!a.comps_.count(mask)) r.set(mask, e);
    return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
    return a + b * FieldElement(-1, a.ctx_->field());
}

namespace {

// 0-based position of variable v among the set bits of mask.
int position_in(uint8_t mask, int v) {
    return std::popcount(static_cast<uint8_t>(mask & ((1u << v) - 1)));
}

}  // namespace

Cochain differential(const Cochain& c) {
    const auto& ctx = c.context();
    if (c.degree() >= kNumVars) throw std::invalid_argument("differential out of top degree");
    Cochain out(ctx, c.degree() + 1);
    for (uint8_t target : masks_of_size(c.degree() + 1)) {
        LocalizedElement acc = LocalizedElement::zero(ctx->site(target));
        bool any = false;
        for (int v = 0; v < kNumVars; ++v) {
            if (!(target & (1u << v))) continue;
            uint8_t source = static_cast<uint8_t>(target & ~(1u << v));
            auto it = c.components().find(source);
            if (it == c.components().end() || it->second.is_zero()) continue;
            LocalizedElement r = restrict_to(it->second, ctx->site(target));
            if (position_in(target, v) % 2) r = -r;
            acc = any ? acc + r : r;
            any = true;
        }
        if (any && !acc.is_zero()) out.set(target, std::move(acc));
    }
    return out;
}

CocycleResult is_cocycle(const Cochain& c, int jobs) {
    const auto& ctx = c.context();
    auto targets = masks_of_size(c.degree() + 1);
    // Pre-build sites serially so parallel workers only read caches.
    if (jobs > 1)
        for (uint8_t t : targets) ctx->site(t);

    std::vector<std::optional<LocalizedElement>> failures(targets.size());
    auto check = [&](size_t idx) {
        uint8_t target = targets[idx];
        LocalizedElement acc = LocalizedElement::zero(ctx->site(target));
        for (int v = 0; v < kNumVars; ++v) {
            if (!(target & (1u << v))) continue;
            uint8_t source = static_cast<uint8_t>(target & ~(1u << v));
            auto it = c.components().find(source);
            if (it == c.components().end() || it->second.is_zero()) continue;
            LocalizedElement r = restrict_to(it->second, ctx->site(target));
            if (position_in(target, v) % 2) r = -r;
            acc = acc + r;
        }
        if (!acc.is_zero()) failures[idx] = std::move(acc);
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < targets.size(); ++i) check(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < targets.size(); i = next.fetch_add(1))
                    check(i);
            });
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < targets.size(); ++i)
        if (failures[i]) return {false, targets[i], std::move(failures[i])};
    return {true, std::nullopt, std::nullopt};
}

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "inconclusive";
    }
}

GradedSlice graded_slice(const Thickening& th, int k, const Multidegree& d, int cutoff,
                         bool with_stability) {
    GradedSlice s;
    s.masks = masks_of_size(k);
    for (uint8_t mask : s.masks) {
        auto p = th.piece(mask, d, cutoff);
        s.offsets.push_back(s.dim);
        s.dim += p->rank();
        if (with_stability) {
            // A piece participates honestly only if multiplication by the
            // site product is an isomorphism over the last two levels.
            StabilizationReport rep = stabilization_report(th, mask, d, cutoff);
            if (!rep.stable) {
                s.stable = false;
                s.unstable.push_back(mask);
            }
        }
        s.pieces.push_back(std::move(p));
    }
    return s;
}

ExactMatrix differential_matrix(const Thickening& th, const GradedSlice& from,
                                const GradedSlice& to) {
    FieldId f = th.field();
    ExactMatrix m(to.dim, from.dim, f);
    for (size_t si = 0; si < from.masks.size(); ++si) {
        uint8_t source = from.masks[si];
        const GradedPiece& sp = *from.pieces[si];
        for (int j = 0; j < sp.rank(); ++j) {
            size_t col = from.offsets[si] + j;
            const Monomial& mono = sp.monomials[sp.free_cols[j]];
            // Image of mono/(prod S)^N under d in each target component.
            for (size_t ti = 0; ti < to.masks.size(); ++ti) {
                uint8_t target = to.masks[ti];
                if ((target & source) != source) continue;
                uint8_t added = static_cast<uint8_t>(target & ~source);
                if (std::popcount(added) != 1) continue;
                int v = std::countr_zero(added);
                const GradedPiece& tp = *to.pieces[ti];
                Monomial image = mono * mask_product(added).pow(sp.level);
                std::vector<FieldElement> vec(tp.monomials.size(), FieldElement::zero(f));
                FieldElement sign = position_in(target, v) % 2 ? FieldElement(-1, f)
                                                               : FieldElement(1, f);
                vec[tp.monomial_index(image)] = sign;
                std::vector<FieldElement> q = tp.quotient_coords(vec);
                for (size_t i = 0; i < q.size(); ++i) {
                    if (q[i].is_zero()) continue;
                    size_t row = to.offsets[ti] + i;
                    m.at(row, col) = m.at(row, col) + q[i];
                }
            }
        }
    }
    return m;
}

CoboundaryImage coboundary_image(const Thickening& th, int k, const Multidegree& d,
                                 int cutoff) {
    if (k < 1) throw std::invalid_argument("coboundary image requires k >= 1");
    CoboundaryImage img;
    img.sources = graded_slice(th, k - 1, d, cutoff, true);
    img.targets = graded_slice(th, k, d, cutoff, true);
    img.matrix = differential_matrix(th, img.sources, img.targets);
    return img;
}

std::vector<FieldElement> slice_coordinates(const Cochain& c, const GradedSlice& slice) {
    FieldId f = c.context()->field();
    std::vector<FieldElement> coords(slice.dim, FieldElement::zero(f));
    for (size_t i = 0; i < slice.masks.size(); ++i) {
        uint8_t mask = slice.masks[i];
        auto it = c.components().find(mask);
        if (it == c.components().end() || it->second.is_zero()) continue;
        const LocalizedElement& e = it->second;
        const GradedPiece& p = *slice.pieces[i];
        if (e.denom_exp() > p.level)
            throw std::invalid_argument("cutoff " + std::to_string(p.level) +
                                        " too small for component " + mask_name(mask));
        Polynomial num = e.numerator() * e.site()->product.pow(p.level - e.denom_exp());
        std::vector<FieldElement> vec(p.monomials.size(), FieldElement::zero(f));
        for (const auto& t : num.terms()) vec[p.monomial_index(t.mono)] = t.coeff;
        std::vector<FieldElement> q = p.quotient_coords(vec);
        for (size_t j = 0; j < q.size(); ++j) coords[slice.offsets[i] + j] = q[j];
    }
    return coords;
}

namespace {

void name_unstable(const GradedSlice& slice, const Multidegree& d,
                   std::vector<std::string>* out) {
    if (!out) return;
    for (uint8_t mask : slice.unstable) out->push_back(mask_name(mask) + "@" + d.str());
}

}  // namespace

Tri is_coboundary(const Cochain& c, int cutoff, std::vector<std::string>* unstable) {
    auto d = c.multidegree();
    if (!d) {
        if (c.is_zero()) return Tri::True;
        throw std::invalid_argument("is_coboundary requires a homogeneous cochain");
    }
    const Thickening& th = *c.context();
    CoboundaryImage img = coboundary_image(th, c.degree(), *d, cutoff);
    std::vector<FieldElement> v = slice_coordinates(c, img.targets);
    if (in_column_space(img.matrix, v)) return Tri::True;  // constructive preimage
    name_unstable(img.sources, *d, unstable);
    name_unstable(img.targets, *d, unstable);
    return (img.sources.stable && img.targets.stable) ? Tri::False : Tri::Inconclusive;
}

namespace {

Cochain cochain_from_coords(const std::shared_ptr<const Thickening>& th, int k,
                            const GradedSlice& slice, const std::vector<FieldElement>& v);

}  // namespace

std::optional<Cochain> coboundary_preimage(const Cochain& c, int cutoff) {
    auto d = c.multidegree();
    if (!d) {
        if (c.is_zero()) return Cochain(c.context(), c.degree() - 1);
        throw std::invalid_argument("coboundary_preimage requires a homogeneous cochain");
    }
    const auto& th = c.context();
    CoboundaryImage img = coboundary_image(*th, c.degree(), *d, cutoff);
    std::vector<FieldElement> v = slice_coordinates(c, img.targets);
    auto x = solve(img.matrix, v);
    if (!x) return std::nullopt;
    return cochain_from_coords(th, c.degree() - 1, img.sources, *x);
}

namespace {

Cochain cochain_from_coords(const std::shared_ptr<const Thickening>& th, int k,
                            const GradedSlice& slice, const std::vector<FieldElement>& v) {
    Cochain c(th, k);
    for (size_t i = 0; i < slice.masks.size(); ++i) {
        const GradedPiece& p = *slice.pieces[i];
        Polynomial num = Polynomial::zero(th->field());
        for (int j = 0; j < p.rank(); ++j) {
            const FieldElement& coeff = v[slice.offsets[i] + j];
            if (coeff.is_zero()) continue;
            num = num + Polynomial(p.monomials[p.free_cols[j]], coeff);
        }
        if (!num.is_zero())
            c.set(slice.masks[i], LocalizedElement(th->site(slice.masks[i]), num, p.level));
    }
    return c;
}

}  // namespace

CohomologyReport cohomology_rank(const std::shared_ptr<const Thickening>& th, int k,
                                 const Multidegree& d, int cutoff) {
    CohomologyReport rep;
    rep.k = k;
    rep.t = th->t();
    rep.characteristic = th->field().characteristic();
    rep.multidegree = d;
    rep.cutoff = cutoff;

    GradedSlice here = graded_slice(*th, k, d, cutoff, true);
    GradedSlice below = k > 0 ? graded_slice(*th, k - 1, d, cutoff, true)
                              : GradedSlice{};
    GradedSlice above = k < kNumVars ? graded_slice(*th, k + 1, d, cutoff, true)
                                     : GradedSlice{};
    rep.stable = here.stable && below.stable && above.stable;
    name_unstable(below, d, &rep.unstable_pieces);
    name_unstable(here, d, &rep.unstable_pieces);
    name_unstable(above, d, &rep.unstable_pieces);

    ExactMatrix down = k > 0 ? differential_matrix(*th, below, here)
                             : ExactMatrix(here.dim, 0, th->field());
    ExactMatrix up = k < kNumVars ? differential_matrix(*th, here, above)
                                  : ExactMatrix(0, here.dim, th->field());

    size_t rank_up = up.rank();
    size_t rank_down = down.rank();
    size_t nullity = here.dim - rank_up;
    rep.rank = static_cast<int>(nullity) - static_cast<int>(rank_down);

    // Generator classes: kernel vectors extending the coboundary columns.
    ExactMatrix span = down;
    size_t base_rank = rank_down;
    for (const auto& kv : up.kernel_basis()) {
        ExactMatrix trial = span;
        trial.append_col(kv);
        if (trial.rank() > base_rank) {
            span = std::move(trial);
            ++base_rank;
            rep.generators.push_back(cochain_from_coords(th, k, here, kv));
        }
    }
    return rep;
}

IndependenceResult classes_independent(const std::vector<Cochain>& cs, int cutoff) {
    IndependenceResult res{true, true, {}};
    if (cs.empty()) return res;
    const auto& th = cs.front().context();
    for (const auto& c : cs) {
        auto check = is_cocycle(c);
        if (!check.ok)
            throw std::invalid_argument("classes_independent requires cocycles (component " +
                                        mask_name(*check.witness_mask) + " fails)");
    }
    // Distinct multidegrees are independent automatically; check each group.
    std::map<std::array<long, 4>, std::vector<const Cochain*>> groups;
    for (const auto& c : cs) {
        auto d = c.multidegree();
        if (!d) {
            if (c.is_zero()) return {false, true, {}};  // zero cochain is never independent
            throw std::invalid_argument("classes_independent requires homogeneous cochains");
        }
        groups[d->d].push_back(&c);
    }
    for (const auto& [dd, group] : groups) {
        Multidegree d{std::array<long, 4>(dd)};
        CoboundaryImage img = coboundary_image(*th, group.front()->degree(), d, cutoff);
        if (!img.sources.stable || !img.targets.stable) res.stable = false;
        name_unstable(img.sources, d, &res.unstable_pieces);
        name_unstable(img.targets, d, &res.unstable_pieces);
        ExactMatrix span = img.matrix;
        size_t r = span.rank();
        for (const Cochain* c : group) {
            std::vector<FieldElement> v = slice_coordinates(*c, img.targets);
            span.append_col(v);
            size_t r2 = span.rank();
            if (r2 == r) {
                res.independent = false;
                return res;
            }
            r = r2;
        }
    }
    return res;
}

}  // namespace detloc
