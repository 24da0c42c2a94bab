#include "detloc/field.hpp"

namespace detloc {

FieldId FieldId::prime(unsigned p) {
    if (p < 2) throw BadField("characteristic must be 0 or a prime");
    // Trial division; the characteristics in use are tiny.
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw BadField("characteristic " + std::to_string(p) + " is not prime");
    FieldId f;
    f.p_ = p;
    return f;
}

FieldElement::FieldElement(long num, long den, FieldId f) : v_(num), f_(f) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
    normalize();
}

void FieldElement::normalize() {
    if (f_.is_rational()) {
        v_.canonicalize();
        return;
    }
    const unsigned p = f_.characteristic();
    if (v_.get_den() != 1) {
        // Residue given as a fraction: divide in F_p.
        FieldElement num(mpq_class(v_.get_num()), f_);
        FieldElement den(mpq_class(v_.get_den()), f_);
        v_ = (num * den.inverse()).v_;
        return;
    }
    mpz_class r = v_.get_num() % p;
    if (r < 0) r += p;
    v_ = r;
}

void FieldElement::require_same(const FieldElement& a, const FieldElement& b) {
    if (a.f_ != b.f_) throw FieldMismatch();
}

FieldElement FieldElement::operator-() const {
    return FieldElement(mpq_class(-v_), f_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_same(a, b);
    return FieldElement(mpq_class(a.v_ + b.v_), a.f_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_same(a, b);
    return FieldElement(mpq_class(a.v_ - b.v_), a.f_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_same(a, b);
    return FieldElement(mpq_class(a.v_ * b.v_), a.f_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
    if (f_.is_rational()) {
        if (v_ == 0) throw ZeroInverse();
        return FieldElement(mpq_class(1 / v_), f_);
    }
    const unsigned p = f_.characteristic();
    if (v_ == 0)
        throw CharacteristicObstruction(
            "element is divisible by the characteristic " + std::to_string(p) +
            " and has no inverse");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw CharacteristicObstruction("no inverse mod " + std::to_string(p));
    return FieldElement(mpq_class(inv), f_);
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

FieldElement FieldElement::parse(const std::string& text, FieldId f) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return FieldElement(q, f);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad scalar syntax: '" + text + "'");
    }
}

std::string FieldElement::str() const {
    return v_.get_str();
}

}  // namespace detloc
