#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace detloc {

// The ring is fixed: F[u, v, w, x, y, z].  A seventh exponent slot holds the
// auxiliary variable used internally by colon-ideal elimination; it is always
// zero in monomials that cross a public interface.
inline constexpr int kNumVars = 6;
inline constexpr int kAuxVar = 6;
inline constexpr int kNumSlots = 7;
inline constexpr char kVarNames[kNumVars + 1] = "uvwxyz";

int var_index(char c);

/// Z^4 multidegree.  deg u=(1,0,0,0), v=(0,1,0,0), w=(0,0,1,0),
/// x=(1,0,0,1), y=(0,1,0,1), z=(0,0,1,1); extended by linearity, so entries
/// of localized elements may be negative.
struct Multidegree {
    std::array<long, 4> d{0, 0, 0, 0};

    long operator[](int i) const { return d[i]; }
    long& operator[](int i) { return d[i]; }

    /// Sum of the first three coordinates; for a monomial this equals the
    /// total degree.
    long total() const { return d[0] + d[1] + d[2]; }

    friend Multidegree operator+(Multidegree a, const Multidegree& b) {
        for (int i = 0; i < 4; ++i) a.d[i] += b.d[i];
        return a;
    }
    friend Multidegree operator-(Multidegree a, const Multidegree& b) {
        for (int i = 0; i < 4; ++i) a.d[i] -= b.d[i];
        return a;
    }
    friend Multidegree operator*(long k, Multidegree a) {
        for (int i = 0; i < 4; ++i) a.d[i] *= k;
        return a;
    }
    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

    std::string str() const;
};

Multidegree var_degree(int var);

class Monomial {
public:
    Monomial() { e_.fill(0); }

    static Monomial one() { return Monomial(); }
    static Monomial var(int i, int power = 1);
    /// Parses a plain product like "uv^2z" (no coefficient, no sign).
    static Monomial parse(const std::string& text);

    int exponent(int i) const { return e_[i]; }
    int& exponent(int i) { return e_[i]; }
    int aux_exponent() const { return e_[kAuxVar]; }

    int total_degree() const;  // six ring variables only
    Multidegree multidegree() const;
    bool is_one() const;
    bool has_aux() const { return e_[kAuxVar] != 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // *this / o, requires o | *this
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    Monomial pow(int k) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    /// Arbitrary strict ordering for container keys (not a monomial order).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    std::string str() const;

private:
    std::array<int, kNumSlots> e_;
};

enum class OrderKind {
    DegRevLex,  // graded reverse lex, u > v > w > x > y > z by default
    Lex,        // lexicographic, u > v > w > x > y > z
    ElimAux,    // auxiliary variable first, then DegRevLex on the rest
};

/// A monomial order.  `last` rotates one ring variable to the bottom of the
/// DegRevLex priority list (used for saturation by that variable); -1 keeps
/// the default order.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int last = -1;

    static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, -1}; }
    static MonomialOrder degrevlex_last(int var) { return {OrderKind::DegRevLex, var}; }
    static MonomialOrder lex() { return {OrderKind::Lex, -1}; }
    static MonomialOrder elim_aux() { return {OrderKind::ElimAux, -1}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const MonomialOrder& order);

/// All monomials in the six ring variables with the given multidegree.
/// The result is sorted descending under DegRevLex; empty when the degree is
/// not attainable with non-negative exponents.
std::vector<Monomial> monomials_of_multidegree(const Multidegree& d);

/// Variable-subset masks (bit i = variable i).
std::string mask_name(uint8_t mask);
uint8_t mask_parse(const std::string& name);
Monomial mask_product(uint8_t mask);
std::vector<uint8_t> masks_of_size(int k);

}  // namespace detloc
