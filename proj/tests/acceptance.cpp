// Acceptance suite: one check per shipping criterion, each printed as a
// single PASS/FAIL line. Exits nonzero if any criterion fails.
//
// Criteria that are phrased as CLI invocations run the installed binary and
// parse its JSON; the rest call the library directly. Reference values come
// from the independent test oracle (Machin pi, bisection square roots).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "archimedes/chains.hpp"
#include "archimedes/exhaustion.hpp"
#include "archimedes/polygon.hpp"
#include "archimedes/rectify.hpp"
#include "archimedes/solids.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using nlohmann::json;
using namespace archimedes;

namespace {

struct CliRun {
    int exit_code = -1;
    json doc;
    double elapsed_ms = 0.0;
};

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "acceptance_" + std::to_string(counter++) + ".json";
    const std::string command =
        std::string(ARCHIMEDES_CLI_PATH) + " " + args + " >" + out_path + " 2>/dev/null";
    const auto start = std::chrono::steady_clock::now();
    const int status = std::system(command.c_str());
    const auto stop = std::chrono::steady_clock::now();
    CliRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    if (run.exit_code == 0 && !ss.str().empty()) run.doc = json::parse(ss.str());
    return run;
}

Rational exact(const json& enclosure, const char* key) {
    return Rational::from_string(enclosure[key].get<std::string>());
}

Interval enclosure_of(const json& doc, const std::string& name) {
    const json& e = doc["enclosures"][name];
    return Interval(exact(e, "lo_exact"), exact(e, "hi_exact"));
}

// ---------------------------------------------------------------------------

bool archimedes_bounds(std::string& detail) {
    const CliRun run = run_cli("pi --doublings 4 --bits 128");
    if (run.exit_code != 0) {
        detail = "exit code " + std::to_string(run.exit_code);
        return false;
    }
    const Interval pi = enclosure_of(run.doc, "pi");
    const bool inside = Rational(223, 71) < pi.lo() && pi.hi() < Rational(22, 7);
    std::ostringstream ss;
    ss << "enclosure [" << pi.lo().to_double() << ", " << pi.hi().to_double() << "] in "
       << run.elapsed_ms << " ms";
    detail = ss.str();
    return inside && run.elapsed_ms < 100.0;
}

bool convergence_law(std::string& detail) {
    const auto rows = convergence_report(16, 256);
    for (const auto& row : rows) {
        if (row.doublings < 6) continue;
        if (!row.width_ratio) return false;
        if (*row.width_ratio < Rational(7, 2) || *row.width_ratio > Rational(9, 2)) {
            detail = "ratio out of range at k=" + std::to_string(row.doublings);
            return false;
        }
    }
    const CliRun run = run_cli("pi --doublings 16 --bits 256");
    std::ostringstream ss;
    ss << "ratios in [3.5, 4.5] for k=6..16; cli finished in " << run.elapsed_ms << " ms";
    detail = ss.str();
    return run.exit_code == 0 && run.elapsed_ms < 1000.0;
}

bool prop1_squeeze(std::string& detail) {
    const CliRun run = run_cli("squeeze --doublings 12 --radius 1 --tolerance 1e-6");
    if (run.exit_code != 0) {
        detail = "exit code " + std::to_string(run.exit_code);
        return false;
    }
    const Interval area = enclosure_of(run.doc, "area");
    const Interval half_cr = enclosure_of(run.doc, "half_cr");
    const Rational tol(1, 1000000);
    detail = "area width " + decimal_ceil(area.width(), 9) + ", half_cr width " +
             decimal_ceil(half_cr.width(), 9);
    return run.doc["certified"] == true && area.intersects(half_cr) && area.width() < tol &&
           half_cr.width() < tol;
}

bool sector_inequality(std::string& detail) {
    int certified = 0;
    for (const long n : {6L, 12L, 24L, 48L, 96L}) {
        int j = 0;
        for (long m = n / 6; m > 1; m /= 2) ++j;
        const SectorBounds b = verify_sector(Rational(1, n), j + 6, 128);
        if (b.chord.hi() < b.arc.lo() && b.arc.hi() < b.tangent.lo()) ++certified;
    }
    detail = std::to_string(certified) + "/5 angles certified";
    return certified == 5;
}

bool cycloid_agreement(std::string& detail) {
    const CurveSpec cycloid = make_cycloid(Rational(1), 128);
    const RefinedLength oracle_len = refine_length(cycloid, Rational(1, 1000000), 128);
    const Interval analytic = analytic_length(cycloid, 128);
    if (!analytic.intersects(oracle_len.enclosure)) {
        detail = "no overlap";
        return false;
    }
    const Interval meet = interval_meet(analytic, oracle_len.enclosure);
    detail = "agree within " + decimal_ceil(oracle_len.enclosure.width(), 9) + " using " +
             std::to_string(oracle_len.segments) + " segments";
    return oracle_len.segments <= (1 << 20) && meet.width() < Rational(1, 1000000);
}

bool semicubical_agreement(std::string& detail) {
    const CurveSpec curve = make_semicubical(Rational(1), 128);
    const Interval analytic = analytic_length(curve, 128);
    const RefinedLength oracle_len = refine_length(curve, Rational(1, 1000000), 128);
    if (!analytic.intersects(oracle_len.enclosure)) {
        detail = "no overlap";
        return false;
    }
    const Interval meet = interval_meet(analytic, oracle_len.enclosure);
    detail = "intersection width " + decimal_ceil(meet.width(), 9);
    return meet.width() < Rational(1, 1000000);
}

bool log_spiral_tail_criterion(std::string& detail) {
    const Interval tail = log_spiral_tail(Rational(1), Rational(40), 128);
    const auto sqrt2 = oracle::sqrt_of(Rational(2));
    detail = "width " + decimal_ceil(tail.width(), 12);
    return tail.width() < Rational(1, 1000000000) && tail.lo() <= sqrt2.hi &&
           sqrt2.lo <= tail.hi();
}

bool spiral_subtangent_criterion(std::string& detail) {
    const RectifyResult result = spiral_subtangent(Rational(1), 10, 128);
    // tight reference for 4*pi^2
    const auto pi = oracle::machin_pi();
    const Rational ref_lo = Rational(4) * pi.lo * pi.lo;
    const Rational ref_hi = Rational(4) * pi.hi * pi.hi;
    const bool formula_contains = result.analytic.lo() <= ref_lo && ref_hi <= result.analytic.hi();
    const bool numeric_contains = result.oracle.lo() <= ref_lo && ref_hi <= result.oracle.hi();
    detail = std::string("formula ") + (formula_contains ? "ok" : "miss") + ", numeric " +
             (numeric_contains ? "ok" : "miss");
    return formula_contains && numeric_contains && result.agree;
}

bool quadratrix_criterion(std::string& detail) {
    const RectifyResult result = quadratrix_base(Rational(1), 12, 128);
    const Interval ratio = result.detail.at("ratio_CG_over_CD");
    const auto pi = oracle::machin_pi();
    const Rational half_lo = pi.lo / Rational(2);
    const Rational half_hi = pi.hi / Rational(2);
    detail = "CG/CD width " + decimal_ceil(ratio.width(), 9);
    return result.agree && ratio.lo() <= half_lo && half_hi <= ratio.hi() &&
           ratio.width() < Rational(1, 10000);
}

bool solids_criterion(std::string& detail) {
    const auto ratios = cylinder_sphere_ratios(Rational(1), 10, 128);
    const Rational three_halves(3, 2);
    const Rational tol(1, 1000000);
    const bool ratios_ok =
        ratios.volume_ratio.contains(three_halves) && ratios.surface_ratio.contains(three_halves) &&
        ratios.volume_ratio.width() < tol && ratios.surface_ratio.width() < tol;

    bool chain_ok = true;
    for (int k = 0; k <= 16; k += 4) {
        const Interval c_over_d = pi_enclosure(k, 128);
        const SqueezeState s = squeeze_state(k, Rational(1), 128);
        const Interval a_over_r2 = s.area_bracket();
        const SolidReport report = sphere_constants(Rational(1), k, 128);
        const Interval* chain[] = {&c_over_d, &a_over_r2, &report.six_v_over_d3,
                                   &report.s_over_4r2};
        for (const Interval* a : chain)
            for (const Interval* b : chain) chain_ok = chain_ok && a->intersects(*b);
    }
    detail = std::string("ratio widths ") + decimal_ceil(ratios.volume_ratio.width(), 9) + " / " +
             decimal_ceil(ratios.surface_ratio.width(), 9);
    return ratios_ok && chain_ok;
}

bool axiom_property_suite(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    testutil::Rng rng(1203);

    int axiom1_failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto sample = testutil::random_arch(rng);
        const Chain chord = testutil::chord_of(sample.chain);
        const bool certified =
            compare_chains(chord, sample.chain, 128) == ChainOrdering::InnerShorter;
        const bool exact = testutil::chord_length_squared(sample.chain) <
                           sample.exact_length * sample.exact_length;
        if (certified != exact) ++axiom1_failures;
    }

    int axiom2_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto pair = testutil::nested_arch_pair(rng);
        const bool certified =
            compare_chains(pair.inner, pair.outer, 128) == ChainOrdering::InnerShorter;
        const bool exact = pair.inner_length < pair.outer_length;
        if (certified != exact) ++axiom2_failures;
    }

    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    std::ostringstream ss;
    ss << axiom1_failures << " + " << axiom2_failures << " false orderings in " << seconds << " s";
    detail = ss.str();
    return axiom1_failures == 0 && axiom2_failures == 0 && seconds < 30.0;
}

bool euclid_xii2_criterion(std::string& detail) {
    std::mt19937_64 rng(1931);
    std::uniform_int_distribution<long> num(1, 400);
    std::uniform_int_distribution<long> den(1, 80);
    std::uniform_int_distribution<int> depth(0, 6);
    int passed = 0;
    for (int i = 0; i < 100; ++i) {
        const Rational r1(num(rng), den(rng));
        const Rational r2(num(rng), den(rng));
        if (verify_euclid_xii2(r1, r2, depth(rng), 128)) ++passed;
    }
    detail = std::to_string(passed) + "/100 radius pairs";
    return passed == 100;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"1. Archimedes bounds 223/71 < pi < 22/7 via `pi --doublings 4`", archimedes_bounds},
        {"2. quadratic convergence: width ratios in [3.5, 4.5] for k=6..16", convergence_law},
        {"3. A = (1/2)Cr squeeze at 12 doublings, widths < 1e-6", prop1_squeeze},
        {"4. chord < arc < tangent for pi/6 .. pi/96", sector_inequality},
        {"5. cycloid arch length 8r vs polyline oracle within 1e-6", cycloid_agreement},
        {"6. semicubical parabola (13*sqrt(13)-8)/27 within 1e-6", semicubical_agreement},
        {"7. log spiral tail encloses sqrt(2) at width < 1e-9", log_spiral_tail_criterion},
        {"8. spiral subtangent = first circumference = 4*pi^2", spiral_subtangent_criterion},
        {"9. quadratrix CG/CD encloses pi/2 at width < 1e-4", quadratrix_criterion},
        {"10. cylinder/sphere ratios 3/2 and the constant identity chain", solids_criterion},
        {"11. axiom property suite: 10^4 + 10^3 cases, zero false orderings", axiom_property_suite},
        {"12. Euclid XII.2 area ratios for 100 random radius pairs", euclid_xii2_criterion},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion.name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
