#include "detloc/scenario.hpp"

#include <fstream>
#include <sstream>

namespace detloc {

DeterminantalData build_determinantal(FieldId field) {
    DeterminantalData d;
    d.field = field;
    d.delta1 = Polynomial::parse("vz - wy", field);
    d.delta2 = Polynomial::parse("wx - uz", field);
    d.delta3 = Polynomial::parse("uy - vx", field);
    for (int i = 0; i < kNumVars; ++i) d.grading[i] = var_degree(i);
    return d;
}

IdealPresentation minors_ideal(FieldId field) {
    DeterminantalData d = build_determinantal(field);
    return IdealPresentation({d.delta1, d.delta2, d.delta3}, field);
}

std::shared_ptr<const Thickening> make_thickening(FieldId field, int t,
                                                  SaturationStrategy strategy) {
    return Thickening::make(minors_ideal(field), t, strategy);
}

CharPParams charp_params(unsigned p, int t) {
    if (t < 2) throw std::invalid_argument("thickening parameters need t >= 2");
    FieldId::prime(p);  // validates primality
    CharPParams out;
    out.p = p;
    out.t = t;
    out.q = 1;
    while (out.q * p <= t - 1) out.q *= p;
    out.q2 = 1;
    while (out.q + out.q2 < t) out.q2 *= p;
    for (long m = out.q2; m <= out.q; m += out.q2) out.m_list.push_back(m);
    // q2 > q leaves no valid m and the displayed bound degenerates; the
    // construction then promises nothing.
    out.bound = out.m_list.empty() ? 0 : 2 * (out.q / out.q2) - 1;
    return out;
}

long rank_lower_bound(unsigned p, int t) { return charp_params(p, t).bound; }

long h6_graded_rank(long j) {
    if (j > -6) return 0;
    // Monomials u^-a...z^-f, all exponents >= 1, a+...+f = -j: choose(-j-1, 5).
    long n = -j - 1;
    long r = 1;
    for (long i = 1; i <= 5; ++i) r = r * (n - 5 + i) / i;
    return r;
}

Polynomial phi(int zeta, const Polynomial& a, const Polynomial& b) {
    if (zeta < 1) throw std::invalid_argument("phi requires zeta >= 1");
    Polynomial r = Polynomial::zero(a.field());
    for (int i = 0; i <= zeta - 1; ++i) r = r + a.pow(i) * b.pow(zeta - 1 - i);
    return r;
}

MonomialFraction operator+(const MonomialFraction& a, const MonomialFraction& b) {
    Monomial l = a.den.lcm(b.den);
    return {a.num * l.divide(a.den) + b.num * l.divide(b.den), l};
}

MonomialFraction operator-(const MonomialFraction& a, const MonomialFraction& b) {
    Monomial l = a.den.lcm(b.den);
    return {a.num * l.divide(a.den) - b.num * l.divide(b.den), l};
}

MonomialFraction operator*(const MonomialFraction& a, const MonomialFraction& b) {
    return {a.num * b.num, a.den * b.den};
}

bool MonomialFraction::equals(const MonomialFraction& o) const {
    return num * o.den == o.num * den;
}

LocalizedElement to_localized(const MonomialFraction& f,
                              const std::shared_ptr<const LocalizationSite>& site) {
    int k = 0;
    for (int v = 0; v < kNumVars; ++v) {
        if (f.den.exponent(v) == 0) continue;
        if (!(site->mask & (1u << v)))
            throw std::invalid_argument("denominator variable " +
                                        std::string(1, kVarNames[v]) +
                                        " is not inverted at site " + site->name());
        k = std::max(k, static_cast<int>(f.den.exponent(v)));
    }
    Monomial scale = site->product.pow(k).divide(f.den);
    return LocalizedElement(site, f.num * scale, k);
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Truncated series of ln(p/q) realized over denominator monomial `base`
// (which must be p or q): sum_{j=1}^{t-1} (1/j) ((base - other)/base)^j,
// negated when base = q.
MonomialFraction log_series(const Monomial& p, const Monomial& q, bool over_p, int t,
                            FieldId field) {
    if (!field.is_rational())
        throw CharacteristicObstruction("log series need the coefficients 1/m");
    const Monomial& base = over_p ? p : q;
    const Monomial& other = over_p ? q : p;
    Polynomial diff = Polynomial(base, field) - Polynomial(other, field);
    Polynomial num = Polynomial::zero(field);
    for (int j = 1; j <= t - 1; ++j) {
        FieldElement c(1, j, field);
        num = num + diff.pow(j) * Polynomial(base.pow(t - 1 - j), c);
    }
    MonomialFraction f{num, base.pow(t - 1)};
    if (!over_p) f.num = -f.num;
    return f;
}

}  // namespace

std::string ScenarioTables::default_dir() {
#ifdef DETLOC_DATA_DIR
    return DETLOC_DATA_DIR;
#else
    return "data";
#endif
}

ScenarioTables ScenarioTables::load(const std::string& dir) {
    ScenarioTables tables;

    auto read_lines = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open fixture file " + path);
        std::vector<std::pair<std::string, std::string>> out;
        std::string line;
        while (std::getline(in, line)) {
            std::string s = strip(line);
            if (s.empty() || s[0] == '#') continue;
            size_t colon = s.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error("bad fixture line in " + path + ": " + line);
            out.emplace_back(strip(s.substr(0, colon)), strip(s.substr(colon + 1)));
        }
        return out;
    };

    for (auto& [site, entry] : read_lines(dir + "/table_char0.cech")) {
        uint8_t mask = mask_parse(site);
        std::vector<LogTerm> terms;
        std::istringstream ss(entry);
        std::string tok;
        while (ss >> tok) {
            // Tokens look like "+log[vz/wy]" or "-log[uy/vx]".
            if (tok.size() < 10 || (tok[0] != '+' && tok[0] != '-') ||
                tok.substr(1, 4) != "log[" || tok.back() != ']')
                throw std::runtime_error("bad log token '" + tok + "'");
            std::string body = tok.substr(5, tok.size() - 6);
            size_t slash = body.find('/');
            if (slash == std::string::npos) throw std::runtime_error("bad log token '" + tok + "'");
            terms.push_back({tok[0] == '-' ? -1 : 1, Monomial::parse(body.substr(0, slash)),
                             Monomial::parse(body.substr(slash + 1))});
        }
        tables.char0_.emplace(mask, std::move(terms));
    }

    auto parse_ratio_table = [&](const std::string& path) {
        std::map<uint8_t, RatioEntry> table;
        for (auto& [site, entry] : read_lines(path)) {
            RatioEntry re;
            // Shape: (a/b)^(q-m) * (TERM +/- TERM ...)
            std::istringstream ss(entry);
            std::string prefix;
            ss >> prefix;
            if (prefix.size() != 11 || prefix.substr(5) != "^(q-m)" || prefix[0] != '(' ||
                prefix[2] != '/' || prefix[4] != ')')
                throw std::runtime_error("bad ratio prefix '" + prefix + "' in " + path);
            re.ratio_num = var_index(prefix[1]);
            re.ratio_den = var_index(prefix[3]);
            std::string star, rest;
            ss >> star;
            if (star != "*") throw std::runtime_error("expected '*' in " + path);
            std::getline(ss, rest);
            rest = strip(rest);
            if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
                throw std::runtime_error("expected parenthesized sum in " + path);
            std::istringstream body(rest.substr(1, rest.size() - 2));
            int pending = 1;
            std::string tok;
            while (body >> tok) {
                if (tok == "+") { pending = 1; continue; }
                if (tok == "-") { pending = -1; continue; }
                RatioTerm term{pending, -1, 1};
                if (tok == "1") {
                    // constant
                } else if (tok.size() >= 3 && tok[1] == '^') {
                    int sym = tok[0] == 'A' ? 0 : tok[0] == 'B' ? 1 : tok[0] == 'G' ? 2 : -2;
                    if (sym < 0) throw std::runtime_error("bad symbol token '" + tok + "'");
                    term.sym = sym;
                    std::string e = tok.substr(2);
                    if (e == "m") term.exp_sign = 1;
                    else if (e == "-m") term.exp_sign = -1;
                    else throw std::runtime_error("bad exponent token '" + tok + "'");
                } else {
                    throw std::runtime_error("bad term token '" + tok + "'");
                }
                re.terms.push_back(term);
                pending = 1;
            }
            table.emplace(mask_parse(site), std::move(re));
        }
        return table;
    };

    tables.eta1_ = parse_ratio_table(dir + "/table_charp_eta1.cech");
    tables.eta2_ = parse_ratio_table(dir + "/table_charp_eta2.cech");
    return tables;
}

Cochain ScenarioTables::eta_char0(const std::shared_ptr<const Thickening>& th) const {
    if (!th->field().is_rational())
        throw CharacteristicObstruction(
            "the truncated log element needs every 1/m with m < t");
    if (th->t() < 2) throw std::invalid_argument("eta_char0 requires t >= 2");
    Cochain c(th, 3);
    for (const auto& [mask, terms] : char0_) {
        auto site = th->site(mask);
        MonomialFraction acc = MonomialFraction::of(Polynomial::zero(th->field()));
        for (const auto& lt : terms) {
            bool p_in_site = true, q_in_site = true;
            for (int v = 0; v < kNumVars; ++v) {
                if (lt.p.exponent(v) && !(mask & (1u << v))) p_in_site = false;
                if (lt.q.exponent(v) && !(mask & (1u << v))) q_in_site = false;
            }
            if (!p_in_site && !q_in_site)
                throw std::runtime_error("log term is not realizable at site " +
                                         mask_name(mask));
            MonomialFraction f = log_series(lt.p, lt.q, p_in_site, th->t(), th->field());
            if (lt.sign < 0) f.num = -f.num;
            acc = acc + f;
        }
        c.set(mask, to_localized(acc, site));
    }
    return c;
}

MonomialFraction ScenarioTables::entry_fraction(FieldId field, const CharPParams& params,
                                                long m, const RatioEntry& entry) const {
    long qm = params.q - m;
    // alpha = vx/uy, beta = wy/vz, gamma = uz/wx.
    static const int sym_num[3][2] = {{1, 3}, {2, 4}, {0, 5}};  // vx, wy, uz
    static const int sym_den[3][2] = {{0, 4}, {1, 5}, {2, 3}};  // uy, vz, wx
    MonomialFraction acc{Polynomial::zero(field), Monomial::one()};
    for (const auto& term : entry.terms) {
        MonomialFraction f{Polynomial(FieldElement(term.coeff, field)), Monomial::one()};
        if (term.sym >= 0) {
            Monomial a = Monomial::var(sym_num[term.sym][0]) * Monomial::var(sym_num[term.sym][1]);
            Monomial b = Monomial::var(sym_den[term.sym][0]) * Monomial::var(sym_den[term.sym][1]);
            if (term.exp_sign < 0) std::swap(a, b);
            f = MonomialFraction{Polynomial(a.pow(static_cast<int>(m)),
                                            FieldElement(term.coeff, field)),
                                 b.pow(static_cast<int>(m))};
        }
        acc = acc + f;
    }
    MonomialFraction prefactor{
        Polynomial(Monomial::var(entry.ratio_num).pow(static_cast<int>(qm)), field),
        Monomial::var(entry.ratio_den).pow(static_cast<int>(qm))};
    return prefactor * acc;
}

Cochain ScenarioTables::eta_charp(const std::shared_ptr<const Thickening>& th,
                                  const CharPParams& params, long m,
                                  const std::map<uint8_t, RatioEntry>& table) const {
    if (th->field().characteristic() != params.p)
        throw std::invalid_argument("thickening characteristic does not match parameters");
    if (th->t() != params.t)
        throw std::invalid_argument("thickening exponent does not match parameters");
    if (m <= 0 || m > params.q || m % params.q2 != 0)
        throw std::invalid_argument("m must be a multiple of q2 in (0, q]");
    Cochain c(th, 3);
    for (const auto& [mask, entry] : table) {
        MonomialFraction f = entry_fraction(th->field(), params, m, entry);
        c.set(mask, to_localized(f, th->site(mask)));
    }
    return c;
}

Cochain ScenarioTables::eta1(const std::shared_ptr<const Thickening>& th,
                             const CharPParams& params, long m) const {
    return eta_charp(th, params, m, eta1_);
}

Cochain ScenarioTables::eta2(const std::shared_ptr<const Thickening>& th,
                             const CharPParams& params, long m) const {
    // At m = q the two families meet in the Frobenius-power element.
    if (m == params.q) return eta_charp(th, params, m, eta1_);
    return eta_charp(th, params, m, eta2_);
}

MonomialFraction ScenarioTables::eta1_entry(FieldId field, const CharPParams& params,
                                            long m, uint8_t mask) const {
    auto it = eta1_.find(mask);
    if (it == eta1_.end()) return {Polynomial::zero(field), Monomial::one()};
    return entry_fraction(field, params, m, it->second);
}

LocalizedElement truncated_log_sum(const std::shared_ptr<const Thickening>& th,
                                   int truncation) {
    if (!th->field().is_rational())
        throw CharacteristicObstruction("the log identity needs every 1/m with m < t");
    int s = truncation < 0 ? th->t() : truncation;
    if (s < 2) throw std::invalid_argument("truncated_log_sum requires t >= 2");
    FieldId f = th->field();
    auto site = th->site(mask_parse("uvwxyz"));
    MonomialFraction acc =
        log_series(Monomial::parse("vz"), Monomial::parse("wy"), true, s, f) +
        log_series(Monomial::parse("wx"), Monomial::parse("uz"), true, s, f) +
        log_series(Monomial::parse("uy"), Monomial::parse("vx"), true, s, f);
    return to_localized(acc, site);
}

}  // namespace detloc
