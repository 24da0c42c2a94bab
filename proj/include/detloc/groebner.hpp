#pragma once

#include <span>

#include "detloc/polynomial.hpp"

namespace detloc {

/// Generators of an ideal of F[u..z].  Generators must be nonzero; the
/// homogeneity flag records whether all of them are multigraded-homogeneous.
struct IdealPresentation {
    std::vector<Polynomial> generators;
    FieldId field;
    bool homogeneous = false;

    IdealPresentation() = default;
    IdealPresentation(std::vector<Polynomial> gens, FieldId f);
};

const Term& lead_term(const Polynomial& f, const MonomialOrder& order);

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by another's lead term, sorted ascending by lead monomial.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    IdealPresentation source;

    bool same_ideal_basis(const GroebnerBasis& o) const { return elements == o.elements; }
};

/// Full remainder: no term of the result is divisible by any lead term of the
/// basis.  Linear over the field; zero exactly on ideal members when the
/// basis is a Groebner basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Quotient of an exact division f = q*g; throws if the division leaves a
/// remainder.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

GroebnerBasis buchberger(const IdealPresentation& ideal,
                         const MonomialOrder& order = MonomialOrder::degrevlex());

bool membership(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace detloc
