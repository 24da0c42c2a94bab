#pragma once

#include "detloc/localization.hpp"

namespace detloc {

/// Degree-k Cech cochain on u,v,w,x,y,z with coefficients in R/I^t: one
/// localized element per k-subset of the variables, absent components being
/// zero.  Components are stored in canonical form.
class Cochain {
public:
    Cochain(std::shared_ptr<const Thickening> ctx, int k);

    int degree() const { return k_; }
    const std::shared_ptr<const Thickening>& context() const { return ctx_; }
    const std::map<uint8_t, LocalizedElement>& components() const { return comps_; }

    void set(uint8_t mask, LocalizedElement e);
    /// Component at `mask` (zero when absent).
    LocalizedElement at(uint8_t mask) const;

    bool is_zero() const;
    /// Common multidegree of the nonzero components; nullopt when mixed or
    /// all-zero.
    std::optional<Multidegree> multidegree() const;

    Cochain operator*(const FieldElement& c) const;
    friend Cochain operator+(const Cochain& a, const Cochain& b);
    friend Cochain operator-(const Cochain& a, const Cochain& b);

private:
    std::shared_ptr<const Thickening> ctx_;
    int k_;
    std::map<uint8_t, LocalizedElement> comps_;
};

/// Alternating sum of restrictions over sorted subsets (u < v < ... < z):
/// (dc)_T = sum over s in T of (-1)^{pos(s,T)} c[T minus s] restricted to T.
Cochain differential(const Cochain& c);

struct CocycleResult {
    bool ok = false;
    std::optional<uint8_t> witness_mask;      // first failing component
    std::optional<LocalizedElement> witness;  // its nonzero value
};

CocycleResult is_cocycle(const Cochain& c, int jobs = 1);

enum class Tri { True, False, Inconclusive };
std::string tri_name(Tri t);

/// Degree-d slice of the complex at cohomological degree k and denominator
/// level `cutoff`: all k-subset graded pieces side by side, in quotient
/// coordinates.
struct GradedSlice {
    std::vector<uint8_t> masks;
    std::vector<std::shared_ptr<const GradedPiece>> pieces;
    std::vector<size_t> offsets;
    size_t dim = 0;
    bool stable = true;              // conjunction of per-piece stabilization
    std::vector<uint8_t> unstable;   // sites whose certification failed
};

GradedSlice graded_slice(const Thickening& th, int k, const Multidegree& d, int cutoff,
                         bool with_stability);

/// Matrix of the Cech differential from the degree-k slice to the
/// degree-(k+1) slice, in quotient coordinates.
ExactMatrix differential_matrix(const Thickening& th, const GradedSlice& from,
                                const GradedSlice& to);

/// Columns: differential images of every (k-1)-subset graded piece basis
/// vector, in the degree-k slice coordinates.
struct CoboundaryImage {
    GradedSlice sources;  // degree k-1
    GradedSlice targets;  // degree k
    ExactMatrix matrix;   // targets.dim x sources.dim

    CoboundaryImage() : matrix(0, 0, FieldId()) {}
};

CoboundaryImage coboundary_image(const Thickening& th, int k, const Multidegree& d,
                                 int cutoff);

/// Slice coordinates of a homogeneous cochain (components brought to the
/// common denominator level).  Throws if a component needs a denominator
/// beyond the cutoff.
std::vector<FieldElement> slice_coordinates(const Cochain& c, const GradedSlice& slice);

/// True when the cochain is a coboundary at this cutoff; False only when the
/// membership fails with every stabilization flag true; Inconclusive
/// otherwise (never an unverified negative).  When `unstable` is given it
/// receives "site@degree" names of the pieces whose certification failed.
Tri is_coboundary(const Cochain& c, int cutoff, std::vector<std::string>* unstable = nullptr);

/// Constructive witness behind a positive is_coboundary: a (k-1)-cochain
/// whose differential equals c.  nullopt when no preimage exists within the
/// cutoff.
std::optional<Cochain> coboundary_preimage(const Cochain& c, int cutoff);

struct CohomologyReport {
    int k = 0;
    int t = 1;
    unsigned characteristic = 0;
    Multidegree multidegree;
    int cutoff = 0;
    int rank = 0;
    bool stable = false;
    std::vector<std::string> unstable_pieces;
    std::vector<Cochain> generators;
};

CohomologyReport cohomology_rank(const std::shared_ptr<const Thickening>& th, int k,
                                 const Multidegree& d, int cutoff);

struct IndependenceResult {
    bool independent = false;
    bool stable = false;
    std::vector<std::string> unstable_pieces;
};

/// No nontrivial combination of the given cocycles is a coboundary.
/// Cochains of distinct multidegrees are handled per degree.  Throws on
/// non-cocycle input.
IndependenceResult classes_independent(const std::vector<Cochain>& cs, int cutoff);

}  // namespace detloc
