#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "detloc/field.hpp"
#include "detloc/monomial.hpp"

namespace detloc {

struct Term {
    Monomial mono;
    FieldElement coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

/// Sparse multivariate polynomial over a runtime field.  Terms are kept
/// sorted descending under DegRevLex (with the auxiliary elimination slot in
/// front), so equal polynomials compare equal term-by-term.
class Polynomial {
public:
    explicit Polynomial(FieldId f = FieldId()) : field_(f) {}
    Polynomial(const FieldElement& c);
    Polynomial(const Monomial& m, FieldId f);
    Polynomial(const Monomial& m, const FieldElement& c);

    static Polynomial zero(FieldId f) { return Polynomial(f); }
    static Polynomial one(FieldId f) { return Polynomial(Monomial::one(), f); }
    static Polynomial variable(int i, FieldId f) { return Polynomial(Monomial::var(i), f); }

    /// Parses e.g. "3uv^2z - 1/2wy".  Round-trips with str().
    static Polynomial parse(const std::string& text, FieldId f);

    FieldId field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    /// Coefficient of m (zero if absent).
    FieldElement coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const FieldElement& c) const;
    Polynomial operator*(const Monomial& m) const;

    Polynomial pow(int k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    int total_degree() const;  // max over terms; -1 for zero
    bool has_aux() const;

    /// The common multidegree of all terms, or nullopt with the two offending
    /// terms reported through `witness` when inhomogeneous.  Zero polynomials
    /// are rejected.
    std::optional<Multidegree> multidegree(std::pair<Monomial, Monomial>* witness = nullptr) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const FieldElement& c);
    void sort_and_compress();

    FieldId field_;
    std::vector<Term> terms_;
};

/// multidegree_of: common multidegree of a nonzero homogeneous polynomial.
/// Throws std::invalid_argument on zero input, Inhomogeneous on mixed terms.
struct Inhomogeneous : std::runtime_error {
    Monomial a, b;
    Inhomogeneous(const Monomial& a_, const Monomial& b_)
        : std::runtime_error("inhomogeneous polynomial: " + a_.str() + " vs " + b_.str()),
          a(a_), b(b_) {}
};

Multidegree multidegree_of(const Polynomial& f);

}  // namespace detloc
