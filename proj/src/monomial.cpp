#include "detloc/monomial.hpp"

#include <algorithm>
#include <bit>

namespace detloc {

int var_index(char c) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == c) return i;
    throw std::invalid_argument(std::string("unknown variable '") + c + "'");
}

Multidegree var_degree(int var) {
    static const std::array<Multidegree, kNumVars> table = {{
        {{1, 0, 0, 0}},  // u
        {{0, 1, 0, 0}},  // v
        {{0, 0, 1, 0}},  // w
        {{1, 0, 0, 1}},  // x
        {{0, 1, 0, 1}},  // y
        {{0, 0, 1, 1}},  // z
    }};
    return table[var];
}

std::string Multidegree::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

Monomial Monomial::var(int i, int power) {
    Monomial m;
    m.e_[i] = static_cast<int>(power);
    return m;
}

Monomial Monomial::parse(const std::string& text) {
    Monomial m;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int v = var_index(c);
        ++i;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("missing exponent in '" + text + "'");
            e = std::stoi(text.substr(start, i - start));
        }
        m.e_[v] = static_cast<int>(m.e_[v] + e);
    }
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) d += e_[i];
    return d;
}

Multidegree Monomial::multidegree() const {
    Multidegree d;
    for (int i = 0; i < kNumVars; ++i)
        if (e_[i]) d = d + e_[i] * var_degree(i);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumSlots; ++i) r.e_[i] = static_cast<int>(e_[i] + o.e_[i]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kNumSlots; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumSlots; ++i) {
        if (e_[i] < o.e_[i]) throw std::invalid_argument("monomial division is not exact");
        r.e_[i] = static_cast<int>(e_[i] - o.e_[i]);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumSlots; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumSlots; ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative monomial power");
    Monomial r;
    for (int i = 0; i < kNumSlots; ++i) r.e_[i] = static_cast<int>(e_[i] * k);
    return r;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (!e_[i]) continue;
        s += kVarNames[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    if (e_[kAuxVar]) {
        s += "$";
        if (e_[kAuxVar] > 1) s += "^" + std::to_string(e_[kAuxVar]);
    }
    return s;
}

namespace {

// Priority list for DegRevLex: position 0 is the largest variable.  With
// `last` >= 0 that variable is rotated to the bottom.
std::array<int, kNumVars> priority(int last) {
    std::array<int, kNumVars> p{};
    int pos = 0;
    for (int i = 0; i < kNumVars; ++i)
        if (i != last) p[pos++] = i;
    if (last >= 0) p[pos] = last;
    return p;
}

std::strong_ordering degrevlex_cmp(const Monomial& a, const Monomial& b, int last) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto pr = priority(last);
    for (int i = kNumVars - 1; i >= 0; --i) {
        int v = pr[i];
        if (a.exponent(v) != b.exponent(v))
            // Less of the cheapest differing variable means larger.
            return a.exponent(v) < b.exponent(v) ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const MonomialOrder& order) {
    switch (order.kind) {
        case OrderKind::Lex: {
            const auto pr = priority(order.last);
            for (int i = 0; i < kNumVars; ++i) {
                int v = pr[i];
                if (a.exponent(v) != b.exponent(v))
                    return a.exponent(v) > b.exponent(v) ? std::strong_ordering::greater
                                                         : std::strong_ordering::less;
            }
            return std::strong_ordering::equal;
        }
        case OrderKind::ElimAux:
            if (a.aux_exponent() != b.aux_exponent())
                return a.aux_exponent() > b.aux_exponent() ? std::strong_ordering::greater
                                                           : std::strong_ordering::less;
            return degrevlex_cmp(a, b, order.last);
        case OrderKind::DegRevLex:
        default:
            if (a.aux_exponent() != b.aux_exponent())
                return a.aux_exponent() > b.aux_exponent() ? std::strong_ordering::greater
                                                           : std::strong_ordering::less;
            return degrevlex_cmp(a, b, order.last);
    }
}

std::vector<Monomial> monomials_of_multidegree(const Multidegree& d) {
    std::vector<Monomial> out;
    const long a = d[0], b = d[1], c = d[2], s = d[3];
    if (a < 0 || b < 0 || c < 0 || s < 0 || s > a + b + c) return out;
    // Exponents satisfy e_u+e_x=a, e_v+e_y=b, e_w+e_z=c, e_x+e_y+e_z=s.
    for (long ex = 0; ex <= std::min(a, s); ++ex)
        for (long ey = 0; ey <= std::min(b, s - ex); ++ey) {
            long ez = s - ex - ey;
            if (ez < 0 || ez > c) continue;
            Monomial m;
            m.exponent(0) = static_cast<int>(a - ex);
            m.exponent(1) = static_cast<int>(b - ey);
            m.exponent(2) = static_cast<int>(c - ez);
            m.exponent(3) = static_cast<int>(ex);
            m.exponent(4) = static_cast<int>(ey);
            m.exponent(5) = static_cast<int>(ez);
            out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        return monomial_cmp(x, y, MonomialOrder::degrevlex()) == std::strong_ordering::greater;
    });
    return out;
}

std::string mask_name(uint8_t mask) {
    if (mask == 0) return "-";
    std::string s;
    for (int i = 0; i < kNumVars; ++i)
        if (mask & (1u << i)) s += kVarNames[i];
    return s;
}

uint8_t mask_parse(const std::string& name) {
    uint8_t m = 0;
    if (name == "-") return 0;
    for (char c : name) m |= static_cast<uint8_t>(1u << var_index(c));
    return m;
}

Monomial mask_product(uint8_t mask) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i)
        if (mask & (1u << i)) m.exponent(i) = 1;
    return m;
}

std::vector<uint8_t> masks_of_size(int k) {
    std::vector<uint8_t> out;
    for (uint8_t m = 0; m < (1u << kNumVars); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

}  // namespace detloc
