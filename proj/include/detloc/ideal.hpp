#pragma once

#include "detloc/groebner.hpp"
#include "detloc/matrix.hpp"

namespace detloc {

/// Generators of J^t: all products of t generators of J (multisets,
/// deduplicated).
IdealPresentation ideal_power(const IdealPresentation& ideal, int t);

/// (J : g) computed through the intersection J ∩ <g> with one auxiliary
/// elimination variable, then exact division by g.
GroebnerBasis colon(const GroebnerBasis& ideal_gb, const Polynomial& g);

struct SaturationResult {
    GroebnerBasis basis;
    int steps;  // colon iterations until consecutive reduced bases agreed
};

/// (J : m^inf): iterate colon by m until the reduced basis stabilizes.
SaturationResult saturate_with_steps(const GroebnerBasis& ideal_gb, const Monomial& m);
GroebnerBasis saturate(const GroebnerBasis& ideal_gb, const Monomial& m);

/// Fast saturation of a homogeneous ideal by the product of the variables in
/// `mask`: one DegRevLex basis per variable with that variable rotated last,
/// stripping the variable from every element.  Agrees with saturate(); kept
/// separate so the two routes can check each other.
GroebnerBasis saturate_homogeneous_by_mask(const GroebnerBasis& ideal_gb, uint8_t mask);

/// Exact-linear-algebra membership test for multigraded-homogeneous f: true
/// iff f lies in the span of {monomial * generator} over all generator and
/// monomial pairs matching f's multidegree.  Independent of the Groebner
/// engine.
bool graded_membership_oracle(const Polynomial& f, const IdealPresentation& ideal);

}  // namespace detloc
