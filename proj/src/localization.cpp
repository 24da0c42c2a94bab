#include "detloc/localization.hpp"

#include <algorithm>

namespace detloc {

size_t GradedPiece::monomial_index(const Monomial& m) const {
    for (size_t i = 0; i < monomials.size(); ++i)
        if (monomials[i] == m) return i;
    throw std::invalid_argument("monomial not in graded piece: " + m.str());
}

std::vector<FieldElement> GradedPiece::reduce(std::vector<FieldElement> v) const {
    for (size_t r = 0; r < pivots.size(); ++r) {
        size_t c = pivots[r];
        if (v[c].is_zero()) continue;
        FieldElement f = v[c];
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = v[j] - f * relations.at(r, j);
    }
    return v;
}

std::vector<FieldElement> GradedPiece::quotient_coords(
    const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> red = reduce(v);
    std::vector<FieldElement> out;
    out.reserve(free_cols.size());
    for (size_t c : free_cols) out.push_back(red[c]);
    return out;
}

std::shared_ptr<const Thickening> Thickening::make(const IdealPresentation& base_ideal,
                                                   int t, SaturationStrategy strategy) {
    if (t < 1) throw std::invalid_argument("thickening exponent must be >= 1");
    auto th = std::shared_ptr<Thickening>(new Thickening());
    th->field_ = base_ideal.field;
    th->t_ = t;
    th->strategy_ = strategy;
    th->power_ = ideal_power(base_ideal, t);
    th->gb_ = buchberger(th->power_);
    return th;
}

std::shared_ptr<const LocalizationSite> Thickening::site(uint8_t mask) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = sites_.find(mask);
    if (it != sites_.end()) return it->second;
    auto s = std::make_shared<LocalizationSite>();
    s->mask = mask;
    s->t = t_;
    s->field = field_;
    s->product = mask_product(mask);
    if (mask == 0)
        s->saturated = gb_;
    else if (strategy_ == SaturationStrategy::VariableRotation)
        s->saturated = saturate_homogeneous_by_mask(gb_, mask);
    else
        s->saturated = saturate(gb_, s->product);
    sites_.emplace(mask, s);
    return s;
}

std::shared_ptr<const GradedPiece> Thickening::piece(uint8_t mask, const Multidegree& d,
                                                     int level) const {
    if (level < 0) throw std::invalid_argument("negative denominator level");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = pieces_.find({mask, d.d, level});
        if (it != pieces_.end()) return it->second;
    }
    auto st = site(mask);
    auto piece = std::make_shared<GradedPiece>(field_);
    piece->mask = mask;
    piece->degree = d;
    piece->level = level;
    Multidegree target = d + level * st->product.multidegree();
    piece->monomials = monomials_of_multidegree(target);

    ExactMatrix rel(0, piece->monomials.size(), field_);
    if (!piece->monomials.empty()) {
        std::map<Monomial, size_t> index;
        for (size_t i = 0; i < piece->monomials.size(); ++i)
            index.emplace(piece->monomials[i], i);
        for (const auto& g : st->saturated.elements) {
            auto e = g.multidegree();
            if (!e) throw std::logic_error("saturated basis element is inhomogeneous");
            for (const auto& mult : monomials_of_multidegree(target - *e)) {
                Polynomial row = g * mult;
                std::vector<FieldElement> v(piece->monomials.size(),
                                            FieldElement::zero(field_));
                for (const auto& tm : row.terms()) v[index.at(tm.mono)] = tm.coeff;
                rel.append_row(v);
            }
        }
    }
    piece->pivots = rel.rref();
    // Keep only the nonzero rows of the echelon form.
    ExactMatrix compact(0, piece->monomials.size(), field_);
    for (size_t r = 0; r < piece->pivots.size(); ++r) {
        std::vector<FieldElement> row;
        row.reserve(rel.cols());
        for (size_t c = 0; c < rel.cols(); ++c) row.push_back(rel.at(r, c));
        compact.append_row(row);
    }
    piece->relations = std::move(compact);
    std::vector<bool> is_pivot(piece->monomials.size(), false);
    for (size_t c : piece->pivots) is_pivot[c] = true;
    for (size_t c = 0; c < piece->monomials.size(); ++c)
        if (!is_pivot[c]) piece->free_cols.push_back(c);

    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = pieces_.emplace(std::tuple{mask, d.d, level}, piece);
    return it->second;
}

LocalizedElement::LocalizedElement(std::shared_ptr<const LocalizationSite> site,
                                   Polynomial numerator, int denom_exp)
    : site_(std::move(site)), num_(std::move(numerator)), denom_exp_(denom_exp) {
    if (denom_exp_ < 0) throw std::invalid_argument("negative denominator exponent");
    if (num_.field() != site_->field) throw FieldMismatch();
    // Canonical form: reduce by the saturation, strip common prod-S factors.
    while (true) {
        num_ = normal_form(num_, site_->saturated);
        if (num_.is_zero()) {
            denom_exp_ = 0;
            return;
        }
        if (denom_exp_ == 0 || site_->product.is_one()) return;
        bool divisible = std::all_of(
            num_.terms().begin(), num_.terms().end(),
            [&](const Term& t) { return site_->product.divides(t.mono); });
        if (!divisible) return;
        Polynomial stripped = Polynomial::zero(num_.field());
        for (const auto& t : num_.terms())
            stripped = stripped + Polynomial(t.mono.divide(site_->product), t.coeff);
        num_ = stripped;
        --denom_exp_;
    }
}

LocalizedElement LocalizedElement::zero(std::shared_ptr<const LocalizationSite> site) {
    FieldId f = site->field;
    return LocalizedElement(std::move(site), Polynomial::zero(f), 0);
}

std::optional<Multidegree> LocalizedElement::multidegree() const {
    if (num_.is_zero()) return std::nullopt;
    auto d = num_.multidegree();
    if (!d) return std::nullopt;
    return *d - denom_exp_ * site_->product.multidegree();
}

LocalizedElement LocalizedElement::operator-() const {
    return LocalizedElement(site_, -num_, denom_exp_);
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.site_->mask != b.site_->mask || a.site_->t != b.site_->t ||
        a.site_->field != b.site_->field)
        throw std::invalid_argument("localized elements live at different sites");
    int k = std::max(a.denom_exp_, b.denom_exp_);
    Polynomial num = a.num_ * a.site_->product.pow(k - a.denom_exp_) +
                     b.num_ * b.site_->product.pow(k - b.denom_exp_);
    return LocalizedElement(a.site_, std::move(num), k);
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
    return a + (-b);
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.site_->mask != b.site_->mask || a.site_->t != b.site_->t ||
        a.site_->field != b.site_->field)
        throw std::invalid_argument("localized elements live at different sites");
    return LocalizedElement(a.site_, a.num_ * b.num_, a.denom_exp_ + b.denom_exp_);
}

LocalizedElement LocalizedElement::operator*(const FieldElement& c) const {
    return LocalizedElement(site_, num_ * c, denom_exp_);
}

std::string LocalizedElement::str() const {
    if (denom_exp_ == 0 || num_.is_zero()) return num_.str();
    std::string s = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
    s += " / (" + site_->product.str() + ")";
    if (denom_exp_ != 1) s += "^" + std::to_string(denom_exp_);
    return s;
}

bool loc_is_zero(const LocalizedElement& e) { return e.is_zero(); }

LocalizedElement parse_localized(const std::string& text,
                                 const std::shared_ptr<const LocalizationSite>& site) {
    size_t slash = text.rfind(" / (");
    if (slash == std::string::npos)
        return LocalizedElement(site, Polynomial::parse(text, site->field), 0);
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 4);
    size_t close = den.find(')');
    if (close == std::string::npos)
        throw std::invalid_argument("bad fraction syntax: '" + text + "'");
    Monomial base = Monomial::parse(den.substr(0, close));
    if (base != site->product)
        throw std::invalid_argument("denominator " + base.str() +
                                    " is not the product of site " + site->name());
    int k = 1;
    std::string rest = den.substr(close + 1);
    if (!rest.empty()) {
        if (rest[0] != '^') throw std::invalid_argument("bad fraction syntax: '" + text + "'");
        k = std::stoi(rest.substr(1));
    }
    // Strip the parentheses str() puts around multi-term numerators.
    std::string trimmed = num;
    while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    if (!trimmed.empty() && trimmed.front() == '(' && trimmed.back() == ')')
        trimmed = trimmed.substr(1, trimmed.size() - 2);
    return LocalizedElement(site, Polynomial::parse(trimmed, site->field), k);
}

bool loc_equal(const LocalizedElement& a, const LocalizedElement& b) {
    return (a - b).is_zero();
}

LocalizedElement restrict_to(const LocalizedElement& e,
                             const std::shared_ptr<const LocalizationSite>& target) {
    uint8_t small = e.site()->mask, big = target->mask;
    if ((small & big) != small) throw std::invalid_argument("restrict requires a larger site");
    if (e.site()->t != target->t || e.site()->field != target->field)
        throw std::invalid_argument("restrict across different thickenings");
    Monomial extra = mask_product(static_cast<uint8_t>(big & ~small));
    return LocalizedElement(target, e.numerator() * extra.pow(e.denom_exp()), e.denom_exp());
}

ExactMatrix transition_matrix(const GradedPiece& from, const GradedPiece& to,
                              const Monomial& product) {
    FieldId f = to.relations.field();
    ExactMatrix m(to.free_cols.size(), from.free_cols.size(), f);
    for (size_t j = 0; j < from.free_cols.size(); ++j) {
        const Monomial& src = from.monomials[from.free_cols[j]];
        std::vector<FieldElement> v(to.monomials.size(), FieldElement::zero(f));
        v[to.monomial_index(src * product)] = FieldElement::one(f);
        std::vector<FieldElement> q = to.quotient_coords(v);
        for (size_t i = 0; i < q.size(); ++i) m.at(i, j) = q[i];
    }
    return m;
}

StabilizationReport stabilization_report(const Thickening& th, uint8_t mask,
                                         const Multidegree& d, int level) {
    if (level < 2) throw std::invalid_argument("stabilization report requires level >= 2");
    auto p0 = th.piece(mask, d, level - 2);
    auto p1 = th.piece(mask, d, level - 1);
    auto p2 = th.piece(mask, d, level);
    const Monomial& prod = th.site(mask)->product;
    StabilizationReport rep;
    rep.ranks = {p0->rank(), p1->rank(), p2->rank()};
    auto is_iso = [&](const GradedPiece& a, const GradedPiece& b) {
        if (a.rank() != b.rank()) return false;
        ExactMatrix t = transition_matrix(a, b, prod);
        return t.rank() == static_cast<size_t>(a.rank());
    };
    rep.iso_low = is_iso(*p0, *p1);
    rep.iso_high = is_iso(*p1, *p2);
    rep.stable = rep.iso_low && rep.iso_high;
    return rep;
}

}  // namespace detloc
