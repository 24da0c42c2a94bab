// Acceptance suite: runs every acceptance criterion and prints one pass/fail
// line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "detloc/verify.hpp"

using namespace detloc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what
              << std::endl;
    if (!ok) ++failures;
}

ScenarioTables& tables() {
    static ScenarioTables t = ScenarioTables::load(ScenarioTables::default_dir());
    return t;
}

Cochain random_cochain(const std::shared_ptr<const Thickening>& th, int k,
                       std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> denom(0, 2);
    std::uniform_int_distribution<int> coin(0, 2);
    Cochain c(th, k);
    for (uint8_t mask : masks_of_size(k)) {
        if (coin(rng) != 0) continue;
        Monomial m;
        for (int v = 0; v < kNumVars; ++v) m.exponent(v) = exp(rng);
        c.set(mask, LocalizedElement(th->site(mask), Polynomial(m, th->field()), denom(rng)));
    }
    return c;
}

// Stabilization of the multidegree-(0,0,0,s) slices is reached at
// denominator level |s|+t-1, so certification over three levels needs this
// cutoff.
int family_cutoff(const CharPParams& p) {
    return static_cast<int>(p.q - p.q2 + p.t + 1);
}

void criterion_1() {
    bool ok = true;
    std::string detail;
    for (int t : {2, 3, 4}) {
        auto started = Clock::now();
        auto th = make_thickening(FieldId::rationals(), t);
        CocycleResult res = is_cocycle(tables().eta_char0(th));
        double secs = std::chrono::duration<double>(Clock::now() - started).count();
        ok = ok && res.ok;
        detail += " t=" + std::to_string(t) + (res.ok ? " ok" : " FAILED") + " (" +
                  std::to_string(secs).substr(0, 4) + "s)";
    }
    report(1, ok, "char-0 cocycle, all 15 Cech image components vanish:" + detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    for (int t : {2, 3}) {
        auto th = make_thickening(FieldId::rationals(), t);
        Tri tri = is_coboundary(tables().eta_char0(th), 4);
        ok = ok && tri == Tri::False;  // inconclusive counts as failure
        detail += " t=" + std::to_string(t) + "=" + tri_name(tri);
    }
    report(2, ok, "char-0 non-coboundary at cutoff 4, stabilization certified:" + detail);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int t : {1, 2, 3}) {
        int expected = t >= 2 ? 1 : 0;
        for (int cutoff : {4, 5}) {
            auto th = make_thickening(FieldId::rationals(), t);
            CohomologyReport rep = cohomology_rank(th, 3, Multidegree{}, cutoff);
            bool here = rep.stable && rep.rank == expected;
            ok = ok && here;
            if (cutoff == 4)
                detail += " t=" + std::to_string(t) + ":rank=" + std::to_string(rep.rank);
        }
    }
    report(3, ok, "H^3 rank at degree 0 is 1 for t=2,3 and 0 for t=1, cutoffs 4 and 5:" +
                      detail);
}

void criterion_4() {
    bool ok = true;
    std::string detail;
    for (int t : {2, 3, 4}) {
        auto th = make_thickening(FieldId::rationals(), t);
        bool zero_here = truncated_log_sum(th).is_zero();
        auto thn = make_thickening(FieldId::rationals(), t + 1);
        bool zero_next = truncated_log_sum(thn, t).is_zero();
        ok = ok && zero_here && !zero_next;
        detail += " t=" + std::to_string(t) + (zero_here && !zero_next ? " ok" : " FAILED");
    }
    report(4, ok, "truncated log identity vanishes at t and not at t+1:" + detail);
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    for (auto [p, t, expected] :
         std::vector<std::tuple<unsigned, int, long>>{{2, 3, 3}, {3, 4, 5}, {2, 5, 7}}) {
        auto started = Clock::now();
        ScenarioConfig cfg;
        cfg.scenario = "charp-family";
        cfg.characteristic = p;
        cfg.t = t;
        cfg.cutoff = family_cutoff(charp_params(p, t));
        VerificationReport rep = run_scenario(cfg);
        double secs = std::chrono::duration<double>(Clock::now() - started).count();
        bool here = rep.outcome == Outcome::Pass &&
                    rep.details["classes"].get<long>() == expected;
        ok = ok && here;
        detail += " (" + std::to_string(p) + "," + std::to_string(t) +
                  "):classes=" + rep.details["classes"].dump() + "/" +
                  std::to_string(expected) + " (" + std::to_string(secs).substr(0, 5) +
                  "s)";
    }
    report(5, ok, "char-p families: cocycles, non-coboundaries, independent classes:" + detail);
}

void criterion_6() {
    bool ok = true;
    int tested = 0;
    for (auto [p, t] : std::vector<std::pair<unsigned, int>>{{2, 3}, {3, 4}, {2, 5}}) {
        CharPParams params = charp_params(p, t);
        FieldId f = FieldId::prime(p);
        DeterminantalData data = build_determinantal(f);
        for (long m : params.m_list) {
            int q = static_cast<int>(params.q), q2 = static_cast<int>(params.q2);
            int mi = static_cast<int>(m), zeta = static_cast<int>(m / params.q2);
            Polynomial phiz =
                phi(zeta, Polynomial::parse("uy", f), Polynomial::parse("vx", f));
            Monomial den1 = Monomial::var(0).pow(q) * Monomial::var(2).pow(q) *
                            Monomial::var(3).pow(mi) * Monomial::var(4).pow(mi);
            MonomialFraction lhs1 = tables().eta1_entry(f, params, m, mask_parse("wxy")) -
                                    tables().eta1_entry(f, params, m, mask_parse("uxy"));
            MonomialFraction rhs1{data.delta2.pow(q) * data.delta3.pow(q2) * phiz.pow(q2),
                                  den1};
            Monomial den2 = Monomial::var(0).pow(q) * Monomial::var(1).pow(q) *
                            Monomial::var(3).pow(mi) * Monomial::var(4).pow(mi);
            MonomialFraction lhs2 = tables().eta1_entry(f, params, m, mask_parse("vxy")) -
                                    tables().eta1_entry(f, params, m, mask_parse("uxy"));
            MonomialFraction rhs2{-(data.delta3.pow(q + q2) * phiz.pow(q2)), den2};
            ok = ok && lhs1.equals(rhs1) && lhs2.equals(rhs2);
            ++tested;
        }
    }
    report(6, ok, "5.2 closed forms hold exactly for all " + std::to_string(tested) +
                      " tested (p,t,m); uwxy clears to D2^q D3^q2 phi^q2, uvxy to "
                      "-D3^(q+q2) phi^q2");
}

void criterion_7() {
    bool ok = true;
    long total = 0;
    for (unsigned p : {0u, 2u}) {
        for (int t : {1, 2, 3}) {
            ScenarioConfig cfg;
            cfg.scenario = "oracle-crosscheck";
            cfg.characteristic = p;
            cfg.t = t;
            cfg.degree_bound = 6;
            VerificationReport rep = run_scenario(cfg);
            ok = ok && rep.outcome == Outcome::Pass;
            total += rep.details["checked"].get<long>();
        }
    }
    report(7, ok, "Groebner membership vs graded oracle: zero disagreements over " +
                      std::to_string(total) + " homogeneous elements, both characteristics");
}

void criterion_8() {
    std::mt19937 rng(20250808);
    bool ok = true;
    for (unsigned p : {0u, 2u}) {
        FieldId f = p == 0 ? FieldId::rationals() : FieldId::prime(p);
        auto th = make_thickening(f, 2);
        for (int k = 0; k <= 4; ++k) {
            for (int trial = 0; trial < 100; ++trial) {
                Cochain dd = differential(differential(random_cochain(th, k, rng)));
                for (const auto& [mask, e] : dd.components())
                    if (!e.is_zero()) ok = false;
            }
        }
    }
    report(8, ok, "d after d vanishes on 100 random sparse cochains per degree k <= 4, "
                  "both characteristics");
}

void criterion_9() {
    bool ok = h6_graded_rank(-6) == 1 && h6_graded_rank(-7) == 6;
    // The scenario additionally compares the formula against direct
    // stars-and-bars enumeration.
    for (long j : {-6L, -7L}) {
        ScenarioConfig cfg;
        cfg.scenario = "h6-rank";
        cfg.j = j;
        ok = ok && run_scenario(cfg).outcome == Outcome::Pass;
    }
    report(9, ok, "top local cohomology counts: rank 1 in degree -6, rank 6 in degree -7, "
                  "formula matching enumeration");
}

void criterion_10() {
    ScenarioConfig cfg;
    cfg.scenario = "charp-rank-report";
    cfg.characteristic = 2;
    cfg.t = 3;
    cfg.cutoff = 7;  // certifies the guard degrees (0,0,0,+-(q+1))
    VerificationReport rep = run_scenario(cfg);
    long computed = rep.details["computed_rank"].get<long>();
    bool reaches = rep.details["reaches_special_bound"].get<bool>();
    bool ok = rep.outcome == Outcome::Pass && computed >= 3;
    report(10, ok,
           "p=2, t=3 degree-0 rank report: computed " + std::to_string(computed) +
               ", displayed bound 3, special-case bound 5 " +
               (reaches ? "reached" : "not reached"));
}

}  // namespace

int main() {
    auto started = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    double secs = std::chrono::duration<double>(Clock::now() - started).count();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << failures << " failing criteria, " << secs << "s total)" << std::endl;
    return failures == 0 ? 0 : 1;
}
