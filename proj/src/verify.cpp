#include "detloc/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace detloc {

using nlohmann::ordered_json;

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        default: return "inconclusive";
    }
}

int exit_code(Outcome o) {
    switch (o) {
        case Outcome::Pass: return 0;
        case Outcome::Fail: return 2;
        default: return 3;
    }
}

nlohmann::ordered_json cohomology_report_json(const CohomologyReport& rep) {
    ordered_json j;
    j["k"] = rep.k;
    j["t"] = rep.t;
    j["characteristic"] = rep.characteristic;
    j["multidegree"] = rep.multidegree.d;
    j["cutoff"] = rep.cutoff;
    j["rank"] = rep.rank;
    j["stable"] = rep.stable;
    ordered_json gens = ordered_json::array();
    for (const auto& g : rep.generators) {
        ordered_json comps = ordered_json::array();
        for (const auto& [mask, e] : g.components()) {
            ordered_json c;
            c["site"] = mask_name(mask);
            c["value"] = e.str();
            comps.push_back(c);
        }
        gens.push_back(comps);
    }
    j["generators"] = gens;
    return j;
}

namespace {

FieldId field_of(const ScenarioConfig& cfg) {
    return cfg.characteristic == 0 ? FieldId::rationals() : FieldId::prime(cfg.characteristic);
}

ScenarioTables load_tables(const ScenarioConfig& cfg) {
    return ScenarioTables::load(cfg.data_dir.empty() ? ScenarioTables::default_dir()
                                                     : cfg.data_dir);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

std::string multidegree_str(const Multidegree& d) { return d.str(); }

void scenario_char0_eta_cocycle(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.characteristic == 0, "char0-eta-cocycle runs in characteristic 0");
    require(cfg.t >= 2, "char0-eta-cocycle needs --t >= 2");
    auto th = make_thickening(field_of(cfg), cfg.t);
    Cochain eta = load_tables(cfg).eta_char0(th);
    CocycleResult res = is_cocycle(eta, cfg.jobs);
    for (uint8_t mask : masks_of_size(4)) {
        bool failed = res.witness_mask && *res.witness_mask == mask;
        rep.rows.push_back({mask_name(mask), failed ? "nonzero" : "zero",
                            failed ? res.witness->str() : ""});
    }
    rep.details["cocycle"] = res.ok;
    if (!res.ok) {
        rep.details["witness_site"] = mask_name(*res.witness_mask);
        rep.details["witness_value"] = res.witness->str();
    }
    rep.outcome = res.ok ? Outcome::Pass : Outcome::Fail;
}

void scenario_char0_eta_noncoboundary(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.characteristic == 0, "char0-eta-noncoboundary runs in characteristic 0");
    require(cfg.t >= 2, "char0-eta-noncoboundary needs --t >= 2");
    require(cfg.cutoff >= 2, "coboundary scenarios need --cutoff >= 2");
    auto th = make_thickening(field_of(cfg), cfg.t);
    Cochain eta = load_tables(cfg).eta_char0(th);
    std::vector<std::string> unstable;
    Tri tri = is_coboundary(eta, cfg.cutoff, &unstable);
    rep.details["is_coboundary"] = tri_name(tri);
    if (!unstable.empty()) rep.details["unstable_pieces"] = unstable;
    rep.rows.push_back({"eta", tri_name(tri), ""});
    rep.outcome = tri == Tri::False
                      ? Outcome::Pass
                      : (tri == Tri::Inconclusive ? Outcome::Inconclusive : Outcome::Fail);
}

void scenario_char0_rank(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.characteristic == 0, "char0-rank runs in characteristic 0");
    require(cfg.cutoff >= 2, "rank scenarios need --cutoff >= 2");
    auto th = make_thickening(field_of(cfg), cfg.t);
    Multidegree d = cfg.multidegree;
    CohomologyReport r = cohomology_rank(th, cfg.k, d, cfg.cutoff);
    rep.details["report"] = cohomology_report_json(r);
    if (!r.unstable_pieces.empty()) rep.details["unstable_pieces"] = r.unstable_pieces;
    rep.rows.push_back({"rank@" + multidegree_str(d), std::to_string(r.rank),
                        r.stable ? "stable" : "unstable"});
    bool canonical = cfg.k == 3 && d == Multidegree{};
    if (!r.stable) {
        rep.outcome = Outcome::Inconclusive;
    } else if (canonical) {
        int expected = cfg.t >= 2 ? 1 : 0;
        rep.details["expected_rank"] = expected;
        rep.outcome = r.rank == expected ? Outcome::Pass : Outcome::Fail;
    } else {
        rep.outcome = Outcome::Pass;
    }
}

void scenario_log_identity(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.characteristic == 0, "log-identity runs in characteristic 0");
    require(cfg.t >= 2, "log-identity needs --t >= 2");
    auto th = make_thickening(field_of(cfg), cfg.t);
    bool zero_here = truncated_log_sum(th).is_zero();
    // The same truncation is an order-t approximation only: at the next
    // thickening it must fail.
    auto th_next = make_thickening(field_of(cfg), cfg.t + 1);
    bool zero_next = truncated_log_sum(th_next, cfg.t).is_zero();
    rep.details["zero_at_t"] = zero_here;
    rep.details["zero_at_next_thickening"] = zero_next;
    rep.rows.push_back({"truncation@t", zero_here ? "zero" : "nonzero", ""});
    rep.rows.push_back({"truncation@t+1", zero_next ? "zero" : "nonzero", ""});
    rep.outcome = (zero_here && !zero_next) ? Outcome::Pass : Outcome::Fail;
}

void scenario_charp_family(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.characteristic > 0, "charp-family needs a prime --char");
    require(cfg.t >= 2, "charp-family needs --t >= 2");
    require(cfg.cutoff >= 2, "coboundary scenarios need --cutoff >= 2");
    ScenarioTables tables = load_tables(cfg);
    CharPParams params = charp_params(cfg.characteristic, cfg.t);
    auto th = make_thickening(field_of(cfg), cfg.t);

    rep.details["q"] = params.q;
    rep.details["q2"] = params.q2;
    rep.details["m_list"] = params.m_list;
    rep.details["bound"] = params.bound;

    bool all_ok = true, any_inconclusive = false;
    std::vector<std::string> unstable;
    std::vector<Cochain> classes;
    ordered_json family = ordered_json::array();
    for (long m : params.m_list) {
        for (int which : {1, 2}) {
            if (which == 2 && m == params.q) continue;  // the families meet at m = q
            Cochain c = which == 1 ? tables.eta1(th, params, m) : tables.eta2(th, params, m);
            std::string name = "eta" + std::to_string(which) + ",m=" + std::to_string(m);
            CocycleResult cyc = is_cocycle(c, cfg.jobs);
            Tri cob = cyc.ok ? is_coboundary(c, cfg.cutoff, &unstable) : Tri::Inconclusive;
            ordered_json item;
            item["element"] = name;
            item["multidegree"] = c.multidegree() ? c.multidegree()->d
                                                  : std::array<long, 4>{0, 0, 0, 0};
            item["cocycle"] = cyc.ok;
            item["coboundary"] = tri_name(cob);
            family.push_back(item);
            rep.rows.push_back({name, cyc.ok ? "cocycle" : "not-a-cocycle",
                                "coboundary=" + tri_name(cob)});
            if (!cyc.ok || cob == Tri::True) all_ok = false;
            if (cob == Tri::Inconclusive) any_inconclusive = true;
            if (cyc.ok) classes.push_back(std::move(c));
        }
    }
    rep.details["elements"] = family;

    IndependenceResult ind = classes_independent(classes, cfg.cutoff);
    rep.details["independent"] = ind.independent;
    rep.details["classes"] = classes.size();
    rep.details["stable"] = ind.stable;
    unstable.insert(unstable.end(), ind.unstable_pieces.begin(), ind.unstable_pieces.end());
    if (!unstable.empty()) rep.details["unstable_pieces"] = unstable;
    rep.rows.push_back({"independence", ind.independent ? "independent" : "dependent",
                        std::to_string(classes.size()) + " classes, bound " +
                            std::to_string(params.bound)});
    bool count_ok = static_cast<long>(classes.size()) == params.bound;
    if (!ind.stable || any_inconclusive)
        rep.outcome = Outcome::Inconclusive;
    else
        rep.outcome = (all_ok && ind.independent && count_ok) ? Outcome::Pass : Outcome::Fail;
}

void scenario_h6_rank(const ScenarioConfig& cfg, VerificationReport& rep) {
    long computed = h6_graded_rank(cfg.j);
    // Stars-and-bars oracle: enumerate exponent vectors directly.
    long brute = 0;
    long total = -cfg.j;
    std::function<void(int, long)> rec = [&](int var, long left) {
        if (var == kNumVars - 1) {
            if (left >= 1) ++brute;
            return;
        }
        for (long e = 1; e <= left - (kNumVars - 1 - var); ++e) rec(var + 1, left - e);
    };
    if (total >= kNumVars) rec(0, total);
    rep.details["j"] = cfg.j;
    rep.details["rank"] = computed;
    rep.details["enumerated"] = brute;
    rep.rows.push_back({"h6@" + std::to_string(cfg.j), std::to_string(computed),
                        "enumerated=" + std::to_string(brute)});
    rep.outcome = computed == brute ? Outcome::Pass : Outcome::Fail;
}

void scenario_oracle_crosscheck(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.t >= 1, "oracle-crosscheck needs --t >= 1");
    FieldId f = field_of(cfg);
    DeterminantalData data = build_determinantal(f);
    IdealPresentation base = minors_ideal(f);
    IdealPresentation power = ideal_power(base, cfg.t);
    GroebnerBasis gb = buchberger(power);

    long checked = 0, disagreements = 0;
    std::vector<Polynomial> minor_products;
    std::vector<int> minor_degrees;
    const Polynomial* minors[3] = {&data.delta1, &data.delta2, &data.delta3};
    for (int a = 0; 2 * a <= cfg.degree_bound; ++a)
        for (int b = 0; 2 * (a + b) <= cfg.degree_bound; ++b)
            for (int c = 0; 2 * (a + b + c) <= cfg.degree_bound; ++c) {
                Polynomial p = minors[0]->pow(a) * minors[1]->pow(b) * minors[2]->pow(c);
                minor_products.push_back(p);
                minor_degrees.push_back(2 * (a + b + c));
            }
    // All monomials of total degree <= bound - product degree.
    std::function<void(Monomial&, int, int, const Polynomial&)> sweep =
        [&](Monomial& mono, int var, int budget, const Polynomial& base_poly) {
            if (var == kNumVars) {
                Polynomial f_poly = base_poly * mono;
                if (f_poly.is_zero()) return;
                bool via_gb = membership(f_poly, gb);
                bool via_oracle = graded_membership_oracle(f_poly, power);
                ++checked;
                if (via_gb != via_oracle) {
                    ++disagreements;
                    rep.rows.push_back({f_poly.str(),
                                        "gb=" + std::to_string(via_gb),
                                        "oracle=" + std::to_string(via_oracle)});
                }
                return;
            }
            for (int e = 0; e <= budget; ++e) {
                mono.exponent(var) = static_cast<int>(e);
                sweep(mono, var + 1, budget - e, base_poly);
            }
            mono.exponent(var) = 0;
        };
    for (size_t i = 0; i < minor_products.size(); ++i) {
        Monomial mono;
        sweep(mono, 0, cfg.degree_bound - minor_degrees[i], minor_products[i]);
    }
    rep.details["checked"] = checked;
    rep.details["disagreements"] = disagreements;
    rep.rows.push_back({"sweep", std::to_string(checked) + " elements",
                        std::to_string(disagreements) + " disagreements"});
    rep.outcome = disagreements == 0 ? Outcome::Pass : Outcome::Fail;
}

void scenario_charp_rank_report(const ScenarioConfig& cfg, VerificationReport& rep) {
    require(cfg.characteristic > 0, "charp-rank-report needs a prime --char");
    require(cfg.t >= 2, "charp-rank-report needs --t >= 2");
    require(cfg.cutoff >= 2, "rank scenarios need --cutoff >= 2");
    CharPParams params = charp_params(cfg.characteristic, cfg.t);
    auto th = make_thickening(field_of(cfg), cfg.t);

    // Standard degree 0 is rendered as the window of multidegrees (0,0,0,s)
    // for |s| <= q, plus a sweep showing the neighboring multidegrees of
    // total degree 0 contribute nothing.
    long window_rank = 0;
    bool stable = true;
    std::vector<std::string> unstable;
    ordered_json window = ordered_json::array();
    for (long s = -params.q; s <= params.q; ++s) {
        Multidegree d{{0, 0, 0, s}};
        CohomologyReport r = cohomology_rank(th, 3, d, cfg.cutoff);
        window_rank += r.rank;
        stable = stable && r.stable;
        unstable.insert(unstable.end(), r.unstable_pieces.begin(), r.unstable_pieces.end());
        ordered_json item;
        item["multidegree"] = d.d;
        item["rank"] = r.rank;
        item["stable"] = r.stable;
        window.push_back(item);
        rep.rows.push_back({"window@" + multidegree_str(d), std::to_string(r.rank),
                            r.stable ? "stable" : "unstable"});
    }
    bool sweep_zero = true;
    ordered_json sweep = ordered_json::array();
    std::vector<std::array<long, 3>> perms = {{1, -1, 0}, {1, 0, -1}, {-1, 1, 0},
                                              {0, 1, -1}, {-1, 0, 1}, {0, -1, 1}};
    std::vector<Multidegree> neighbors;
    for (const auto& p : perms)
        for (long s = -1; s <= 1; ++s) neighbors.push_back(Multidegree{{p[0], p[1], p[2], s}});
    neighbors.push_back(Multidegree{{0, 0, 0, params.q + 1}});
    neighbors.push_back(Multidegree{{0, 0, 0, -(params.q + 1)}});
    for (const auto& d : neighbors) {
        CohomologyReport r = cohomology_rank(th, 3, d, cfg.cutoff);
        stable = stable && r.stable;
        unstable.insert(unstable.end(), r.unstable_pieces.begin(), r.unstable_pieces.end());
        if (r.rank != 0) sweep_zero = false;
        ordered_json item;
        item["multidegree"] = d.d;
        item["rank"] = r.rank;
        item["stable"] = r.stable;
        sweep.push_back(item);
    }

    long general_bound = params.bound;
    bool special_case = false;
    {
        long pe = 1;
        while (pe < cfg.t) {
            if (pe + 1 == cfg.t) special_case = true;
            pe *= params.p;
        }
    }
    long special_bound = 2L * cfg.t - 1;
    rep.details["window"] = window;
    rep.details["neighbor_sweep"] = sweep;
    rep.details["computed_rank"] = window_rank;
    rep.details["general_bound"] = general_bound;
    if (special_case) {
        rep.details["special_case_bound"] = special_bound;
        rep.details["reaches_special_bound"] = window_rank >= special_bound;
    }
    rep.details["stable"] = stable;
    if (!unstable.empty()) rep.details["unstable_pieces"] = unstable;
    rep.rows.push_back({"degree0-rank", std::to_string(window_rank),
                        "general bound " + std::to_string(general_bound) +
                            (special_case ? ", special-case bound " +
                                                std::to_string(special_bound)
                                          : "")});
    if (!stable)
        rep.outcome = Outcome::Inconclusive;
    else
        rep.outcome = (window_rank >= general_bound && sweep_zero) ? Outcome::Pass
                                                                   : Outcome::Fail;
}

}  // namespace

VerificationReport run_scenario(const ScenarioConfig& cfg) {
    VerificationReport rep;
    rep.scenario = cfg.scenario;
    rep.verbosity = cfg.verbosity;
    rep.inputs["characteristic"] = cfg.characteristic;
    rep.inputs["t"] = cfg.t;
    rep.inputs["k"] = cfg.k;
    rep.inputs["multidegree"] = cfg.multidegree.d;
    rep.inputs["cutoff"] = cfg.cutoff;
    rep.inputs["j"] = cfg.j;
    rep.inputs["degree_bound"] = cfg.degree_bound;

    auto started = std::chrono::steady_clock::now();
    if (cfg.scenario == "char0-eta-cocycle")
        scenario_char0_eta_cocycle(cfg, rep);
    else if (cfg.scenario == "char0-eta-noncoboundary")
        scenario_char0_eta_noncoboundary(cfg, rep);
    else if (cfg.scenario == "char0-rank")
        scenario_char0_rank(cfg, rep);
    else if (cfg.scenario == "log-identity")
        scenario_log_identity(cfg, rep);
    else if (cfg.scenario == "charp-family")
        scenario_charp_family(cfg, rep);
    else if (cfg.scenario == "h6-rank")
        scenario_h6_rank(cfg, rep);
    else if (cfg.scenario == "oracle-crosscheck")
        scenario_oracle_crosscheck(cfg, rep);
    else if (cfg.scenario == "charp-rank-report")
        scenario_charp_rank_report(cfg, rep);
    else
        throw UsageError("unknown scenario '" + cfg.scenario + "'");
    rep.duration_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    return rep;
}

std::string emit_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["scenario"] = r.scenario;
        j["inputs"] = r.inputs;
        j["outcome"] = outcome_name(r.outcome);
        j["details"] = r.details;
        return j.dump(2) + "\n";
    }
    if (format == "tsv") {
        std::ostringstream out;
        out << "component\tstatus\tinfo\n";
        for (const auto& row : r.rows) out << row[0] << "\t" << row[1] << "\t" << row[2] << "\n";
        out << "outcome\t" << outcome_name(r.outcome) << "\t\n";
        return out.str();
    }
    if (format == "human") {
        std::ostringstream out;
        out << "scenario: " << r.scenario << "\n";
        out << "inputs:   " << r.inputs.dump() << "\n";
        if (r.verbosity > 0) {
            for (const auto& row : r.rows) {
                out << "  " << row[0] << ": " << row[1];
                if (!row[2].empty()) out << "  (" << row[2] << ")";
                out << "\n";
            }
        }
        out << "outcome:  " << outcome_name(r.outcome) << "\n";
        out << "duration: " << r.duration_ms << " ms\n";
        return out.str();
    }
    throw UsageError("unknown format '" + format + "'");
}

}  // namespace detloc
