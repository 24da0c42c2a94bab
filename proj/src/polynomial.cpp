#include "detloc/polynomial.hpp"

#include <algorithm>
#include <map>

namespace detloc {

namespace {

const MonomialOrder kCanonical = MonomialOrder::degrevlex();

bool term_before(const Term& a, const Term& b) {
    return monomial_cmp(a.mono, b.mono, kCanonical) == std::strong_ordering::greater;
}

}  // namespace

Polynomial::Polynomial(const FieldElement& c) : field_(c.field()) {
    if (!c.is_zero()) terms_.push_back({Monomial::one(), c});
}

Polynomial::Polynomial(const Monomial& m, FieldId f) : field_(f) {
    terms_.push_back({m, FieldElement::one(f)});
}

Polynomial::Polynomial(const Monomial& m, const FieldElement& c) : field_(c.field()) {
    if (!c.is_zero()) terms_.push_back({m, c});
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElement::zero(field_);
}

void Polynomial::sort_and_compress() {
    std::sort(terms_.begin(), terms_.end(), term_before);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = out.back().coeff + t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    Polynomial r(a.field_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    // Merge two descending term lists.
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        auto c = monomial_cmp(a.terms_[i].mono, b.terms_[j].mono, kCanonical);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    Polynomial r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Monomial, FieldElement> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            Monomial m = s.mono * t.mono;
            FieldElement c = s.coeff * t.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second = it->second + c;
        }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    std::sort(r.terms_.begin(), r.terms_.end(), term_before);
    return r;
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
    if (c.field() != field_) throw FieldMismatch();
    Polynomial r(field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
    // Multiplying by a fixed monomial preserves the term order.
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::one(field_);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::has_aux() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.has_aux(); });
}

std::optional<Multidegree> Polynomial::multidegree(
    std::pair<Monomial, Monomial>* witness) const {
    if (terms_.empty()) throw std::invalid_argument("multidegree of the zero polynomial");
    Multidegree d = terms_[0].mono.multidegree();
    for (size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].mono.multidegree() != d) {
            if (witness) *witness = {terms_[0].mono, terms_[i].mono};
            return std::nullopt;
        }
    }
    return d;
}

Multidegree multidegree_of(const Polynomial& f) {
    std::pair<Monomial, Monomial> w;
    auto d = f.multidegree(&w);
    if (!d) throw Inhomogeneous(w.first, w.second);
    return *d;
}

Polynomial Polynomial::parse(const std::string& text, FieldId f) {
    Polynomial out(f);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
        }
        if (i >= text.size()) throw std::invalid_argument("dangling sign in '" + text + "'");
        // Optional coefficient: digits, optionally '/digits'.
        std::string num;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
        std::string den;
        if (!num.empty() && i < text.size() && text[i] == '/') {
            size_t save = i;
            ++i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
            if (den.empty()) {
                i = save;  // the '/' belongs to an enclosing fraction
            }
        }
        FieldElement c = FieldElement::one(f);
        if (!num.empty())
            c = FieldElement::parse(den.empty() ? num : num + "/" + den, f);
        // Variable part.
        std::string vars;
        while (i < text.size()) {
            char ch = text[i];
            if (isspace(static_cast<unsigned char>(ch))) {
                // Whitespace ends the term only if followed by +/- or end.
                size_t j = i;
                while (j < text.size() && isspace(static_cast<unsigned char>(text[j]))) ++j;
                if (j >= text.size() || text[j] == '+' || text[j] == '-' || text[j] == '/') break;
                i = j;
                continue;
            }
            if (ch == '+' || ch == '-' || ch == '/') break;
            if (ch == '^') {
                vars += ch;
                ++i;
                while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                    vars += text[i++];
                continue;
            }
            vars += ch;
            ++i;
        }
        Monomial m = vars.empty() ? Monomial::one() : Monomial::parse(vars);
        if (num.empty() && vars.empty())
            throw std::invalid_argument("empty term in '" + text + "'");
        if (sign < 0) c = -c;
        out.add_term(m, c);
        first = false;
        skip_ws();
    }
    out.sort_and_compress();
    return out;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (c.field() != field_) throw FieldMismatch();
    if (!c.is_zero()) terms_.push_back({m, c});
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        mpq_class v = t.coeff.value();
        bool neg = v < 0;
        mpq_class av = neg ? mpq_class(-v) : v;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string coeff = mpq_class(av).get_str();
        if (t.mono.is_one())
            s += coeff;
        else if (coeff == "1")
            s += t.mono.str();
        else
            s += coeff + t.mono.str();
    }
    return s;
}

}  // namespace detloc
