#include "detloc/ideal.hpp"

#include <algorithm>
#include <map>

namespace detloc {

IdealPresentation ideal_power(const IdealPresentation& ideal, int t) {
    if (t < 1) throw std::invalid_argument("ideal power requires t >= 1");
    if (ideal.generators.empty()) return ideal;  // powers of the zero ideal
    std::vector<Polynomial> products;
    std::vector<size_t> choice(t, 0);
    // Multisets: non-decreasing index tuples.
    while (true) {
        Polynomial p = Polynomial::one(ideal.field);
        for (size_t idx : choice) p = p * ideal.generators[idx];
        bool dup = std::any_of(products.begin(), products.end(),
                               [&](const Polynomial& q) { return q == p; });
        if (!dup && !p.is_zero()) products.push_back(std::move(p));
        int pos = t - 1;
        while (pos >= 0 && choice[pos] == ideal.generators.size() - 1) --pos;
        if (pos < 0) break;
        ++choice[pos];
        for (int k = pos + 1; k < t; ++k) choice[k] = choice[pos];
    }
    return IdealPresentation(std::move(products), ideal.field);
}

GroebnerBasis colon(const GroebnerBasis& ideal_gb, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("colon by zero");
    FieldId f = g.field();
    if (g.size() == 1 && g.terms()[0].mono.is_one()) {
        GroebnerBasis copy = ideal_gb;
        return copy;  // (J : unit) = J
    }
    Polynomial s = Polynomial(Monomial::var(kAuxVar), f);
    std::vector<Polynomial> gens;
    for (const auto& h : ideal_gb.elements) gens.push_back(s * h);
    gens.push_back((Polynomial::one(f) - s) * g);
    GroebnerBasis elim = buchberger(IdealPresentation(std::move(gens), f),
                                    MonomialOrder::elim_aux());
    std::vector<Polynomial> quotients;
    for (const auto& h : elim.elements) {
        if (h.has_aux()) continue;
        // h lies in J ∩ <g>, hence is exactly divisible by g.
        quotients.push_back(exact_divide(h, g, ideal_gb.order));
    }
    if (quotients.empty()) quotients.push_back(Polynomial::zero(f));
    return buchberger(IdealPresentation(std::move(quotients), f), ideal_gb.order);
}

SaturationResult saturate_with_steps(const GroebnerBasis& ideal_gb, const Monomial& m) {
    if (m.is_one()) return {ideal_gb, 0};
    Polynomial mp(m, ideal_gb.source.field);
    GroebnerBasis cur = ideal_gb;
    int steps = 0;
    while (true) {
        GroebnerBasis next = colon(cur, mp);
        ++steps;
        if (next.same_ideal_basis(cur)) return {cur, steps};
        cur = std::move(next);
    }
}

GroebnerBasis saturate(const GroebnerBasis& ideal_gb, const Monomial& m) {
    return saturate_with_steps(ideal_gb, m).basis;
}

namespace {

Polynomial strip_variable(const Polynomial& g, int var) {
    int low = 1 << 20;
    for (const auto& t : g.terms()) low = std::min(low, t.mono.exponent(var));
    if (low == 0) return g;
    Polynomial r = Polynomial::zero(g.field());
    for (const auto& t : g.terms()) {
        Monomial m = t.mono;
        m.exponent(var) = static_cast<int>(m.exponent(var) - low);
        r = r + Polynomial(m, t.coeff);
    }
    return r;
}

}  // namespace

GroebnerBasis saturate_homogeneous_by_mask(const GroebnerBasis& ideal_gb, uint8_t mask) {
    // (J : (x1...xk)^inf) = ((J : x1^inf) : ...) : xk^inf; for homogeneous J
    // the basis under DegRevLex with xi last yields (J : xi^inf) by dividing
    // each element by its xi power.
    std::vector<Polynomial> gens = ideal_gb.elements;
    FieldId f = ideal_gb.source.field;
    for (int v = 0; v < kNumVars; ++v) {
        if (!(mask & (1u << v))) continue;
        GroebnerBasis gb = buchberger(IdealPresentation(gens, f),
                                      MonomialOrder::degrevlex_last(v));
        gens.clear();
        for (const auto& g : gb.elements) gens.push_back(strip_variable(g, v));
    }
    return buchberger(IdealPresentation(std::move(gens), f), ideal_gb.order);
}

bool graded_membership_oracle(const Polynomial& f, const IdealPresentation& ideal) {
    if (f.is_zero()) return true;
    Multidegree d = multidegree_of(f);  // throws Inhomogeneous on mixed input
    if (!ideal.homogeneous) throw std::invalid_argument("oracle requires homogeneous generators");
    std::vector<Monomial> rows = monomials_of_multidegree(d);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);

    ExactMatrix a(rows.size(), 0, f.field());
    for (const auto& g : ideal.generators) {
        Multidegree e = multidegree_of(g);
        for (const auto& mult : monomials_of_multidegree(d - e)) {
            Polynomial col = g * mult;
            std::vector<FieldElement> v(rows.size(), FieldElement::zero(f.field()));
            for (const auto& t : col.terms()) v[index.at(t.mono)] = t.coeff;
            a.append_col(v);
        }
    }
    std::vector<FieldElement> target(rows.size(), FieldElement::zero(f.field()));
    for (const auto& t : f.terms()) target[index.at(t.mono)] = t.coeff;
    return in_column_space(a, target);
}

}  // namespace detloc
