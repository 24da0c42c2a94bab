#include "detloc/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace detloc {

IdealPresentation::IdealPresentation(std::vector<Polynomial> gens, FieldId f)
    : field(f) {
    for (auto& g : gens) {
        if (g.field() != f) throw FieldMismatch();
        if (!g.is_zero()) generators.push_back(std::move(g));
    }
    homogeneous = true;  // the zero ideal is vacuously multigraded
    for (const auto& g : generators)
        if (!g.multidegree()) {
            homogeneous = false;
            break;
        }
}

const Term& lead_term(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw std::invalid_argument("lead term of zero");
    const auto& ts = f.terms();
    // Terms are stored descending under the default order already.
    if (order == MonomialOrder::degrevlex()) return ts[0];
    size_t best = 0;
    for (size_t i = 1; i < ts.size(); ++i)
        if (monomial_cmp(ts[i].mono, ts[best].mono, order) == std::strong_ordering::greater)
            best = i;
    return ts[best];
}

namespace {

struct DescCmp {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_cmp(a, b, order) == std::strong_ordering::greater;
    }
};

using WorkMap = std::map<Monomial, FieldElement, DescCmp>;

void work_add(WorkMap& w, const Monomial& m, const FieldElement& c) {
    auto it = w.find(m);
    if (it == w.end()) {
        if (!c.is_zero()) w.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) w.erase(it);
    }
}

Polynomial from_terms(std::vector<Term> ts, FieldId f) {
    Polynomial r = Polynomial::zero(f);
    for (auto& t : ts) r = r + Polynomial(t.mono, t.coeff);
    return r;
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return f;
    return f * lead_term(f, order).coeff.inverse();
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
    FieldId field = f.field();
    WorkMap work{DescCmp{order}};
    for (const auto& t : f.terms()) work_add(work, t.mono, t.coeff);
    std::vector<Term> remainder;
    while (!work.empty()) {
        auto [m, c] = *work.begin();
        work.erase(work.begin());
        const Polynomial* red = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && lead_term(g, order).mono.divides(m)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            remainder.push_back({m, c});
            continue;
        }
        const Term& lt = lead_term(*red, order);
        Monomial q = m.divide(lt.mono);
        FieldElement scale = c / lt.coeff;
        for (const auto& t : red->terms()) {
            if (t.mono == lt.mono) continue;
            work_add(work, t.mono * q, -(t.coeff * scale));
        }
    }
    return from_terms(std::move(remainder), field);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.elements, gb.order);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    FieldId field = f.field();
    WorkMap work{DescCmp{order}};
    for (const auto& t : f.terms()) work_add(work, t.mono, t.coeff);
    const Term& lt = lead_term(g, order);
    Polynomial quotient = Polynomial::zero(field);
    while (!work.empty()) {
        auto [m, c] = *work.begin();
        if (!lt.mono.divides(m)) throw std::invalid_argument("division is not exact");
        work.erase(work.begin());
        Monomial q = m.divide(lt.mono);
        FieldElement scale = c / lt.coeff;
        quotient = quotient + Polynomial(q, scale);
        for (const auto& t : g.terms()) {
            if (t.mono == lt.mono) continue;
            work_add(work, t.mono * q, -(t.coeff * scale));
        }
    }
    return quotient;
}

namespace {

// Replace every element by its normal form against the others until stable.
// Safe on arbitrary generating sets: the span is preserved, only zero
// reductions are dropped.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = make_monic(normal_form(basis[i], others, order), order);
            if (r != basis[i]) {
                basis[i] = std::move(r);
                changed = true;
            }
        }
        std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    }
    return basis;
}

// Post-processing of a completed basis: drop elements with redundant lead
// terms, tail-reduce, sort ascending by lead monomial.  Only valid when the
// input is already a Groebner basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& order) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    // Drop elements whose lead term another element's lead term divides.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& li = lead_term(basis[i], order).mono;
            const Monomial& lj = lead_term(basis[j], order).mono;
            if (lj.divides(li) && !(li == lj && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(make_monic(basis[i], order));
    // Tail-reduce each element against the rest until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others, order);
            r = make_monic(r, order);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
        std::erase_if(minimal, [](const Polynomial& p) { return p.is_zero(); });
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(lead_term(a, order).mono, lead_term(b, order).mono, order) ==
               std::strong_ordering::less;
    });
    return minimal;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const Term& lf = lead_term(f, order);
    const Term& lg = lead_term(g, order);
    Monomial l = lf.mono.lcm(lg.mono);
    Polynomial a = f * Polynomial(l.divide(lf.mono), lf.coeff.inverse());
    Polynomial b = g * Polynomial(l.divide(lg.mono), lg.coeff.inverse());
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order) {
    std::vector<Polynomial> basis = interreduce(ideal.generators, order);

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = lead_term(basis[i], order).mono.lcm(lead_term(basis[j], order).mono);
        return Pair{i, j, l};
    };

    std::vector<Pair> pending;
    std::set<std::pair<size_t, size_t>> popped;
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) pending.push_back(make_pair(i, j));

    while (!pending.empty()) {
        // Normal strategy: smallest lcm first, ties by index for determinism.
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            auto c = monomial_cmp(a.lcm, b.lcm, order);
            if (c == std::strong_ordering::less ||
                (c == std::strong_ordering::equal &&
                 std::pair(a.i, a.j) < std::pair(b.i, b.j)))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + best);
        popped.insert({p.i, p.j});

        const Monomial& li = lead_term(basis[p.i], order).mono;
        const Monomial& lj = lead_term(basis[p.j], order).mono;
        if (li.gcd(lj).is_one()) continue;  // product criterion
        // Chain criterion: a third element divides the lcm and both side
        // pairs have already been handled.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!lead_term(basis[k], order).mono.divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (popped.count({key1.first, key1.second}) && popped.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
        Polynomial r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        size_t n = basis.size() - 1;
        for (size_t i = 0; i < n; ++i) pending.push_back(make_pair(i, n));
    }

    GroebnerBasis gb;
    gb.elements = reduce_basis(std::move(basis), order);
    gb.order = order;
    gb.source = ideal;
    return gb;
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero()) return true;
    return normal_form(f, gb).is_zero();
}

}  // namespace detloc
