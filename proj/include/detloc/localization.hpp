#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "detloc/ideal.hpp"

namespace detloc {

/// One Cech component ring: the quotient R/I^t localized at the product of
/// the variables in `mask`.  Zero tests run against the cached saturation
/// (I^t : (prod S)^inf).
struct LocalizationSite {
    uint8_t mask = 0;
    int t = 1;
    FieldId field;
    Monomial product;         // prod S
    GroebnerBasis saturated;  // (I^t : product^inf)

    std::string name() const { return mask_name(mask); }
};

/// Finite-dimensional multidegree-d piece of a localized quotient at
/// denominator level N: numerators are spanned by `monomials`, and
/// `relations` (in reduced row echelon form) spans the numerators that are
/// zero in the localization.  Quotient coordinates are the non-pivot
/// positions.
struct GradedPiece {
    uint8_t mask = 0;
    Multidegree degree;
    int level = 0;
    std::vector<Monomial> monomials;
    ExactMatrix relations;
    std::vector<size_t> pivots;
    std::vector<size_t> free_cols;

    GradedPiece(FieldId f) : relations(0, 0, f) {}

    int rank() const { return static_cast<int>(free_cols.size()); }
    size_t monomial_index(const Monomial& m) const;

    /// Canonical representative of v modulo the relation space.
    std::vector<FieldElement> reduce(std::vector<FieldElement> v) const;
    /// reduce() restricted to the free positions.
    std::vector<FieldElement> quotient_coords(const std::vector<FieldElement>& v) const;
};

enum class SaturationStrategy {
    VariableRotation,  // per-variable DegRevLex stripping (homogeneous input)
    Elimination,       // iterated colon through the auxiliary variable
};

/// Shared context for one thickening R/I^t: the power ideal, its Groebner
/// basis, and lazily built caches of localization sites and graded pieces.
/// Caches are mutex-guarded; everything handed out is immutable.
class Thickening : public std::enable_shared_from_this<Thickening> {
public:
    static std::shared_ptr<const Thickening> make(
        const IdealPresentation& base_ideal, int t,
        SaturationStrategy strategy = SaturationStrategy::Elimination);

    FieldId field() const { return field_; }
    int t() const { return t_; }
    const IdealPresentation& power_ideal() const { return power_; }
    const GroebnerBasis& power_gb() const { return gb_; }

    std::shared_ptr<const LocalizationSite> site(uint8_t mask) const;
    std::shared_ptr<const GradedPiece> piece(uint8_t mask, const Multidegree& d,
                                             int level) const;

private:
    Thickening() = default;

    FieldId field_;
    int t_ = 1;
    SaturationStrategy strategy_ = SaturationStrategy::VariableRotation;
    IdealPresentation power_;
    GroebnerBasis gb_;

    mutable std::mutex mutex_;
    mutable std::map<uint8_t, std::shared_ptr<const LocalizationSite>> sites_;
    mutable std::map<std::tuple<uint8_t, std::array<long, 4>, int>,
                     std::shared_ptr<const GradedPiece>>
        pieces_;
};

/// numerator / (prod S)^denom_exp.  Construction canonicalizes: the
/// numerator is reduced by the saturated basis and common prod-S factors are
/// stripped, so is_zero() is a plain emptiness check afterwards.
class LocalizedElement {
public:
    LocalizedElement(std::shared_ptr<const LocalizationSite> site, Polynomial numerator,
                     int denom_exp);
    static LocalizedElement zero(std::shared_ptr<const LocalizationSite> site);

    const std::shared_ptr<const LocalizationSite>& site() const { return site_; }
    const Polynomial& numerator() const { return num_; }
    int denom_exp() const { return denom_exp_; }

    bool is_zero() const { return num_.is_zero(); }
    /// multidegree(numerator) - denom_exp * multidegree(prod S); nullopt for
    /// zero or inhomogeneous numerators.
    std::optional<Multidegree> multidegree() const;

    LocalizedElement operator-() const;
    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
    LocalizedElement operator*(const FieldElement& c) const;

    std::string str() const;

private:
    std::shared_ptr<const LocalizationSite> site_;
    Polynomial num_;
    int denom_exp_ = 0;
};

bool loc_is_zero(const LocalizedElement& e);
bool loc_equal(const LocalizedElement& a, const LocalizedElement& b);

/// Parses "<poly> / (uvxy)^3" (or a plain polynomial) at the given site; the
/// parenthesized monomial must be the site product.  Round-trips with str().
LocalizedElement parse_localized(const std::string& text,
                                 const std::shared_ptr<const LocalizationSite>& site);

/// The same fraction viewed in a larger localization (S subset of target).
LocalizedElement restrict_to(const LocalizedElement& e,
                             const std::shared_ptr<const LocalizationSite>& target);

/// Transition "multiply by prod S" from level-1 quotient coordinates into
/// level quotient coordinates.
ExactMatrix transition_matrix(const GradedPiece& from, const GradedPiece& to,
                              const Monomial& product);

struct StabilizationReport {
    bool stable = false;
    std::array<int, 3> ranks{0, 0, 0};  // levels N-2, N-1, N
    bool iso_low = false, iso_high = false;
};

/// Ranks at levels N-2, N-1, N plus whether both transition maps are
/// isomorphisms.
StabilizationReport stabilization_report(const Thickening& th, uint8_t mask,
                                         const Multidegree& d, int level);

}  // namespace detloc
