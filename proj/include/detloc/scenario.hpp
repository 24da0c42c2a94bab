#pragma once

#include "detloc/cech.hpp"

namespace detloc {

/// The 2x3 determinantal setup: minors of [[u,v,w],[x,y,z]] and the Z^4
/// grading table.
struct DeterminantalData {
    FieldId field;
    Polynomial delta1;  // vz - wy
    Polynomial delta2;  // wx - uz
    Polynomial delta3;  // uy - vx
    std::array<Multidegree, kNumVars> grading;
};

DeterminantalData build_determinantal(FieldId field);
IdealPresentation minors_ideal(FieldId field);

std::shared_ptr<const Thickening> make_thickening(
    FieldId field, int t,
    SaturationStrategy strategy = SaturationStrategy::Elimination);

/// Characteristic-p parameters: q the largest power of p with q <= t-1, q2
/// the smallest power of p with q+q2 >= t, the list of valid m (multiples of
/// q2 in (0, q]) and the rank bound 2*floor(q/q2)-1.
struct CharPParams {
    unsigned p = 2;
    int t = 2;
    long q = 1;
    long q2 = 1;
    std::vector<long> m_list;
    long bound = 1;
};

CharPParams charp_params(unsigned p, int t);
long rank_lower_bound(unsigned p, int t);

/// Rank of the degree-j piece of the top local cohomology of the ambient
/// ring: the number of monomials 1/(u^a...z^f) with all exponents >= 1 and
/// total degree j.
long h6_graded_rank(long j);

/// The telescoping cofactor: phi(zeta, a, b) * (a - b) = a^zeta - b^zeta.
Polynomial phi(int zeta, const Polynomial& a, const Polynomial& b);

/// A polynomial divided by a single monomial; exact intermediate form for
/// building table entries before they become localized elements.
struct MonomialFraction {
    Polynomial num;
    Monomial den;

    static MonomialFraction of(const Polynomial& p) { return {p, Monomial::one()}; }
    friend MonomialFraction operator+(const MonomialFraction& a, const MonomialFraction& b);
    friend MonomialFraction operator-(const MonomialFraction& a, const MonomialFraction& b);
    friend MonomialFraction operator*(const MonomialFraction& a, const MonomialFraction& b);
    bool equals(const MonomialFraction& o) const;  // cross-multiplied equality
};

LocalizedElement to_localized(const MonomialFraction& f,
                              const std::shared_ptr<const LocalizationSite>& site);

/// Table fixtures: the cochain tables with the signs that the
/// cocycle condition forces, loaded from the data directory so the
/// resolutions stay reviewable.
class ScenarioTables {
public:
    /// Loads table_char0.cech, table_charp_eta1.cech, table_charp_eta2.cech.
    static ScenarioTables load(const std::string& dir);
    static std::string default_dir();

    /// The 3-cochain of truncated log series, multidegree (0,0,0,0).
    /// Requires characteristic 0 and t >= 2.
    Cochain eta_char0(const std::shared_ptr<const Thickening>& th) const;

    /// The families of characteristic-p 3-cochains; multidegree
    /// (0,0,0,q-m) for eta1 and its negative for eta2.  At m = q both return
    /// the same Frobenius-power element.
    Cochain eta1(const std::shared_ptr<const Thickening>& th, const CharPParams& params,
                 long m) const;
    Cochain eta2(const std::shared_ptr<const Thickening>& th, const CharPParams& params,
                 long m) const;

    /// Raw table entry as an exact fraction (used by the closed-form
    /// identity checks, which must not pass through ideal reduction).
    MonomialFraction eta1_entry(FieldId field, const CharPParams& params, long m,
                                uint8_t mask) const;

private:
    struct LogTerm {
        int sign;
        Monomial p, q;  // sign * log(p/q)
    };
    struct RatioTerm {
        int coeff;     // +1 / -1
        int sym;       // 0=alpha 1=beta 2=gamma, -1 = constant 1
        int exp_sign;  // +1 -> m, -1 -> -m (unused for constants)
    };
    struct RatioEntry {
        int ratio_num = -1, ratio_den = -1;  // variables of the (a/b)^(q-m) prefactor
        std::vector<RatioTerm> terms;
    };

    std::map<uint8_t, std::vector<LogTerm>> char0_;
    std::map<uint8_t, RatioEntry> eta1_, eta2_;

    Cochain eta_charp(const std::shared_ptr<const Thickening>& th, const CharPParams& params,
                      long m, const std::map<uint8_t, RatioEntry>& table) const;
    MonomialFraction entry_fraction(FieldId field, const CharPParams& params, long m,
                                    const RatioEntry& entry) const;
};

/// Truncation of the vanishing log-series identity: the element
/// sum_{m=1}^{s-1} (1/m)[(D1/vz)^m + (D2/wx)^m + (D3/uy)^m] at the full
/// localization of th, with s = truncation (defaults to th->t()).  The
/// element is zero exactly when the truncation matches the thickening.
/// Characteristic 0 only.
LocalizedElement truncated_log_sum(const std::shared_ptr<const Thickening>& th,
                                   int truncation = -1);

}  // namespace detloc
