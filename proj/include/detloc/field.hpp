#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace detloc {

struct FieldMismatch : std::runtime_error {
    FieldMismatch() : std::runtime_error("operands belong to different fields") {}
};

struct ZeroInverse : std::runtime_error {
    ZeroInverse() : std::runtime_error("inverse of zero") {}
};

/// Raised when inverting an element that is zero because of the prime
/// characteristic, e.g. inv(m) with p | m.  Callers distinguish this from
/// ZeroInverse: it marks computations that exist in characteristic 0 but
/// have no counterpart mod p.
struct CharacteristicObstruction : std::runtime_error {
    explicit CharacteristicObstruction(const std::string& what)
        : std::runtime_error(what) {}
};

struct BadField : std::runtime_error {
    explicit BadField(const std::string& what) : std::runtime_error(what) {}
};

/// Runtime field descriptor: characteristic 0 (the rationals) or a prime p.
class FieldId {
public:
    FieldId() : p_(0) {}

    static FieldId rationals() { return FieldId(); }
    static FieldId prime(unsigned p);

    unsigned characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    friend bool operator==(FieldId a, FieldId b) { return a.p_ == b.p_; }
    friend bool operator!=(FieldId a, FieldId b) { return a.p_ != b.p_; }

private:
    unsigned p_;
};

/// An exact scalar: a reduced rational over Q, or a residue in [0, p).
/// Immutable value type; all arithmetic is exact.
class FieldElement {
public:
    FieldElement() : v_(0), f_() {}
    FieldElement(long n, FieldId f) : v_(n), f_(f) { normalize(); }
    FieldElement(const mpq_class& v, FieldId f) : v_(v), f_(f) { normalize(); }
    FieldElement(long num, long den, FieldId f);

    static FieldElement zero(FieldId f) { return FieldElement(0, f); }
    static FieldElement one(FieldId f) { return FieldElement(1, f); }

    /// Parses "a", "-a" or "a/b"; residues reduce mod p.
    static FieldElement parse(const std::string& text, FieldId f);

    FieldId field() const { return f_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_ == b.f_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    void normalize();
    static void require_same(const FieldElement& a, const FieldElement& b);

    mpq_class v_;
    FieldId f_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

}  // namespace detloc
