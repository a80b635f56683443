// Command-line front end: every subcommand prints machine-readable JSON (or
// CSV) built exclusively from directed decimal rounding, so printed digits
// never overstate an enclosure.
//
// Exit codes: 0 certified success, 1 usage error, 2 certification failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "archimedes/chains.hpp"
#include "archimedes/constructible.hpp"
#include "archimedes/errors.hpp"
#include "archimedes/exhaustion.hpp"
#include "archimedes/interval.hpp"
#include "archimedes/polygon.hpp"
#include "archimedes/rectify.hpp"
#include "archimedes/solids.hpp"

namespace {

using nlohmann::ordered_json;
using namespace archimedes;

constexpr int kMaxRetryBits = 4096;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json enclosure_json(const Interval& x, int digits) {
    const auto [lo, hi] = to_decimal(x, digits);
    return ordered_json{{"lo", lo},
                        {"hi", hi},
                        {"lo_exact", x.lo().to_string()},
                        {"hi_exact", x.hi().to_string()}};
}

void emit_csv_enclosures(std::ostream& os, const ordered_json& enclosures) {
    os << "field,lo,hi\n";
    for (const auto& [name, value] : enclosures.items())
        os << name << "," << value["lo"].get<std::string>() << ","
           << value["hi"].get<std::string>() << "\n";
}

// Emits the standard document shape and returns the process exit code.
int emit(const ordered_json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump() << "\n";
    } else {
        emit_csv_enclosures(std::cout, doc.at("enclosures"));
    }
    return doc.at("certified").get<bool>() ? 0 : 2;
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
    try {
        return Rational::from_string(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

// Doubles the working precision on PrecisionExhausted, up to the cap.
template <typename F>
auto with_retry(int bits, F&& f) {
    for (;;) {
        try {
            return f(bits);
        } catch (const PrecisionExhausted&) {
            if (bits >= kMaxRetryBits) throw;
            bits = std::min(bits * 2, kMaxRetryBits);
        }
    }
}

struct CommonOptions {
    int bits = kDefaultPrecisionBits;
    int digits = 30;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--bits", opts.bits, "precision bits for interval endpoints")
        ->envname("ARCHIMEDES_BITS")
        ->check(CLI::Range(16, 1 << 20));
    cmd->add_option("--digits", opts.digits, "decimal digits in printed enclosures")
        ->check(CLI::Range(1, 10000));
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

// ---------------------------------------------------------------------------
// pi

int run_pi(int doublings, const CommonOptions& opts) {
    if (doublings < 0) throw UsageError("--doublings must be >= 0");

    struct Run {
        std::vector<ConvergenceRow> rows;
        int bits_used;
    };
    const Run run = with_retry(opts.bits, [&](int bits) -> Run {
        return {convergence_report(std::max(doublings, 1), bits), bits};
    });

    // convergence_report always starts at the hexagon; for doublings = 0 only
    // the first row is relevant.
    std::vector<ConvergenceRow> rows = run.rows;
    if (doublings == 0) rows.resize(1);

    const ConvergenceRow& last = rows.back();
    const Interval pi(last.lower, last.upper, run.bits_used);

    ordered_json rows_json = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r{{"k", row.doublings},
                       {"n", row.sides},
                       {"lower", decimal_floor(row.lower, opts.digits)},
                       {"upper", decimal_ceil(row.upper, opts.digits)},
                       {"width", decimal_ceil(row.width, opts.digits)}};
        r["width_ratio"] =
            row.width_ratio ? ordered_json(decimal_floor(*row.width_ratio, 6)) : ordered_json(nullptr);
        rows_json.push_back(std::move(r));
    }

    ordered_json doc{{"command", "pi"},
                     {"inputs", {{"doublings", doublings}, {"bits", run.bits_used}}},
                     {"enclosures", {{"pi", enclosure_json(pi, opts.digits)}}},
                     {"rows", rows_json},
                     {"certified", true}};

    if (opts.format == "csv") {
        std::cout << "k,n,lower,upper,width,width_ratio\n";
        for (const auto& row : rows_json) {
            std::cout << row["k"] << "," << row["n"] << ","
                      << row["lower"].get<std::string>() << ","
                      << row["upper"].get<std::string>() << ","
                      << row["width"].get<std::string>() << ",";
            if (!row["width_ratio"].is_null()) std::cout << row["width_ratio"].get<std::string>();
            std::cout << "\n";
        }
        return 0;
    }
    return emit(doc, "json");
}

// ---------------------------------------------------------------------------
// squeeze

int run_squeeze(int doublings, const std::string& radius_text, const std::string& tolerance_text,
                const CommonOptions& opts) {
    if (doublings < 0) throw UsageError("--doublings must be >= 0");
    const Rational radius = parse_rational_arg(radius_text, "--radius");
    const Rational tolerance = parse_rational_arg(tolerance_text, "--tolerance");
    if (radius.sign() <= 0) throw UsageError("--radius must be positive");
    if (tolerance.sign() <= 0) throw UsageError("--tolerance must be positive");

    struct Run {
        SqueezeState state;
        Prop1Certificate cert;
        int bits_used;
    };
    const Run run = with_retry(opts.bits, [&](int bits) -> Run {
        return {squeeze_state(doublings, radius, bits),
                verify_prop1(doublings, radius, tolerance, bits), bits};
    });

    const SqueezeState& s = run.state;
    ordered_json doc{
        {"command", "squeeze"},
        {"inputs",
         {{"doublings", doublings},
          {"radius", radius.to_string()},
          {"tolerance", tolerance.to_string()},
          {"bits", run.bits_used},
          {"sides", s.sides}}},
        {"enclosures",
         {{"apothem", enclosure_json(s.apothem, opts.digits)},
          {"area_inscribed", enclosure_json(s.area_lower, opts.digits)},
          {"area_circumscribed", enclosure_json(s.area_upper, opts.digits)},
          {"area", enclosure_json(run.cert.area, opts.digits)},
          {"circumference", enclosure_json(
               Interval(s.circumference_lower.lo(), s.circumference_upper.hi(), run.bits_used),
               opts.digits)},
          {"half_cr", enclosure_json(run.cert.half_cr, opts.digits)}}},
        {"gap", decimal_ceil(run.cert.gap, opts.digits)},
        {"certified", run.cert.certified}};
    return emit(doc, opts.format);
}

// ---------------------------------------------------------------------------
// sector

int run_sector(const std::string& angle_text, int pi_doublings, const CommonOptions& opts) {
    const Rational angle = parse_rational_arg(angle_text, "--angle-over-pi");
    if (pi_doublings == 0) {
        // default: six doublings beyond the angle's own index
        const mpz_class den = angle.denominator();
        mpz_class pow = den / 6;
        int j = 0;
        while (pow > 1 && pow % 2 == 0) {
            pow /= 2;
            ++j;
        }
        pi_doublings = j + 6;
    }

    struct Run {
        SectorBounds bounds;
        int bits_used;
    };
    const int k_ref = pi_doublings;
    const Run run = with_retry(opts.bits, [&](int bits) -> Run {
        return {verify_sector(angle, k_ref, bits), bits};
    });

    ordered_json doc{
        {"command", "sector"},
        {"inputs",
         {{"angle_over_pi", angle.to_string()}, {"pi_doublings", k_ref}, {"bits", run.bits_used}}},
        {"enclosures",
         {{"theta", enclosure_json(run.bounds.theta, opts.digits)},
          {"chord", enclosure_json(run.bounds.chord, opts.digits)},
          {"arc", enclosure_json(run.bounds.arc, opts.digits)},
          {"tangent", enclosure_json(run.bounds.tangent, opts.digits)}}},
        {"certified", true}};
    return emit(doc, opts.format);
}

// ---------------------------------------------------------------------------
// rectify

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> params;
    for (const auto& entry : raw) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects name=value: " + entry);
        params[entry.substr(0, eq)] = parse_rational_arg(entry.substr(eq + 1), "--param " + entry);
    }
    return params;
}

Rational param_or(const std::map<std::string, Rational>& params, const std::string& name,
                  const Rational& fallback) {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

void write_polyline_csv(const CurveSpec& curve, std::int64_t segments, int bits, int digits,
                        const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open polyline output file " + path);
    out << "t,x,y\n";
    for (const auto& row : sample_polyline(curve, segments, bits))
        out << decimal_floor(row.t, digits) << "," << decimal_floor(row.x.lo(), digits) << ","
            << decimal_floor(row.y.lo(), digits) << "\n";
}

int run_rectify(const std::string& curve_name, const std::vector<std::string>& raw_params,
                std::int64_t segments, const std::string& tolerance_text,
                const std::string& truncation_text, int pi_doublings,
                const std::string& polyline_path, const CommonOptions& opts) {
    const CurveKind kind = [&] {
        try {
            return curve_kind_from_name(curve_name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const auto params = parse_params(raw_params);
    const Rational tolerance = parse_rational_arg(tolerance_text, "--tolerance");
    const Rational truncation = parse_rational_arg(truncation_text, "--truncation");
    if (tolerance.sign() <= 0) throw UsageError("--tolerance must be positive");

    ordered_json inputs{{"curve", curve_name}, {"bits", opts.bits}};
    for (const auto& [name, value] : params) inputs[name] = value.to_string();

    ordered_json enclosures;
    ordered_json doc{{"command", "rectify"}, {"inputs", inputs}};
    bool certified = false;

    const auto oracle_for = [&](const CurveSpec& curve) -> std::pair<Interval, std::int64_t> {
        if (segments > 0) return {inscribed_length(curve, segments, opts.bits), 2 * segments};
        const RefinedLength refined = refine_length(curve, tolerance, opts.bits);
        return {refined.enclosure, refined.segments};
    };

    switch (kind) {
        case CurveKind::Segment: {
            const CurveSpec curve = make_segment(
                {param_or(params, "x0", Rational(0)), param_or(params, "y0", Rational(0))},
                {param_or(params, "x1", Rational(1)), param_or(params, "y1", Rational(0))},
                opts.bits);
            const Interval analytic = analytic_length(curve, opts.bits);
            const auto [oracle, used] = oracle_for(curve);
            certified = analytic.intersects(oracle);
            enclosures["analytic"] = enclosure_json(analytic, opts.digits);
            enclosures["oracle"] = enclosure_json(oracle, opts.digits);
            doc["segments"] = used;
            break;
        }
        case CurveKind::Cycloid:
        case CurveKind::Semicubical: {
            const Rational fallback(1);
            const CurveSpec curve = kind == CurveKind::Cycloid
                                        ? make_cycloid(param_or(params, "r", fallback), opts.bits)
                                        : make_semicubical(param_or(params, "a", fallback), opts.bits);
            const Interval analytic = analytic_length(curve, opts.bits);
            const auto [oracle, used] = oracle_for(curve);
            certified = analytic.intersects(oracle);
            enclosures["analytic"] = enclosure_json(analytic, opts.digits);
            enclosures["oracle"] = enclosure_json(oracle, opts.digits);
            doc["segments"] = used;
            if (!polyline_path.empty())
                write_polyline_csv(curve, segments > 0 ? segments : std::min<std::int64_t>(used, 4096),
                                   opts.bits, opts.digits, polyline_path);
            break;
        }
        case CurveKind::Circle: {
            const Rational r = param_or(params, "r", Rational(1));
            const CurveSpec curve = make_circle(r, opts.bits);
            const auto [oracle, used] = oracle_for(curve);
            // Half circle: oracle must agree with pi * r from the polygon
            // iteration.
            const Interval reference = scale(pi_enclosure(pi_doublings, opts.bits), r);
            certified = oracle.intersects(reference);
            enclosures["oracle"] = enclosure_json(oracle, opts.digits);
            enclosures["pi_times_r"] = enclosure_json(reference, opts.digits);
            doc["segments"] = used;
            if (!polyline_path.empty())
                write_polyline_csv(curve, std::min<std::int64_t>(used, 4096), opts.bits, opts.digits,
                                   polyline_path);
            break;
        }
        case CurveKind::LogSpiral: {
            const Rational a = param_or(params, "a", Rational(1));
            if (truncation.sign() < 0) throw UsageError("--truncation must be >= 0");
            const CurveSpec curve = make_log_spiral(a, truncation, opts.bits);
            const Interval analytic = analytic_length(curve, opts.bits);
            const Interval oracle = log_spiral_tail(a, truncation, opts.bits);
            certified = analytic.intersects(oracle);
            enclosures["analytic"] = enclosure_json(analytic, opts.digits);
            enclosures["oracle"] = enclosure_json(oracle, opts.digits);
            if (!polyline_path.empty())
                write_polyline_csv(curve, 1024, opts.bits, opts.digits, polyline_path);
            break;
        }
        case CurveKind::ArchimedeanSpiral: {
            const Rational h = param_or(params, "h", Rational(1));
            const RectifyResult result = with_retry(opts.bits, [&](int bits) {
                return spiral_subtangent(h, pi_doublings, bits);
            });
            certified = result.agree;
            enclosures["analytic"] = enclosure_json(result.analytic, opts.digits);
            enclosures["oracle"] = enclosure_json(result.oracle, opts.digits);
            for (const auto& [name, value] : result.detail)
                enclosures[name] = enclosure_json(value, opts.digits);
            if (!polyline_path.empty())
                write_polyline_csv(make_archimedean_spiral(h, opts.bits), 1024, opts.bits,
                                   opts.digits, polyline_path);
            break;
        }
        case CurveKind::Quadratrix: {
            const Rational a = param_or(params, "a", Rational(1));
            const RectifyResult result = with_retry(opts.bits, [&](int bits) {
                return quadratrix_base(a, pi_doublings, bits);
            });
            certified = result.agree;
            enclosures["analytic"] = enclosure_json(result.analytic, opts.digits);
            enclosures["oracle"] = enclosure_json(result.oracle, opts.digits);
            for (const auto& [name, value] : result.detail)
                enclosures[name] = enclosure_json(value, opts.digits);
            if (!polyline_path.empty())
                write_polyline_csv(make_quadratrix(a, opts.bits), 1024, opts.bits, opts.digits,
                                   polyline_path);
            break;
        }
    }

    doc["enclosures"] = enclosures;
    doc["certified"] = certified;
    return emit(doc, opts.format);
}

// ---------------------------------------------------------------------------
// axioms

Chain parse_chain_json(const std::string& text, const std::string& flag) {
    ordered_json parsed;
    try {
        parsed = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": invalid JSON: " + e.what());
    }
    if (!parsed.is_array()) throw UsageError(flag + ": expected an array of vertices");
    std::vector<Point> vertices;
    for (const auto& vertex : parsed) {
        if (!vertex.is_array() || vertex.size() != 2)
            throw UsageError(flag + ": each vertex must be [[xn,xd],[yn,yd]]");
        Rational coords[2];
        for (int c = 0; c < 2; ++c) {
            const auto& coord = vertex[c];
            if (!coord.is_array() || coord.size() != 2 || !coord[0].is_number_integer() ||
                !coord[1].is_number_integer())
                throw UsageError(flag + ": each coordinate must be an integer pair [num,den]");
            const long num = coord[0].get<long>();
            const long den = coord[1].get<long>();
            if (den == 0) throw UsageError(flag + ": zero denominator in coordinate");
            coords[c] = Rational(num, den);
        }
        vertices.push_back({coords[0], coords[1]});
    }
    try {
        return Chain(std::move(vertices));
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

int run_axioms(const std::string& chain_text, const std::string& inner_text,
               const std::string& outer_text, const CommonOptions& opts) {
    ordered_json enclosures;
    ordered_json doc{{"command", "axioms"}, {"inputs", ordered_json::object()}};
    bool certified = true;

    if (!chain_text.empty()) {
        const Chain chain = parse_chain_json(chain_text, "--chain");
        doc["inputs"]["chain"] = ordered_json::parse(chain_text);
        doc["concave"] = is_concave_same_direction(chain);
        enclosures["length"] = enclosure_json(chain_length(chain, opts.bits), opts.digits);
    } else if (!inner_text.empty() && !outer_text.empty()) {
        const Chain inner = parse_chain_json(inner_text, "--inner");
        const Chain outer = parse_chain_json(outer_text, "--outer");
        doc["inputs"]["inner"] = ordered_json::parse(inner_text);
        doc["inputs"]["outer"] = ordered_json::parse(outer_text);
        doc["concave_inner"] = is_concave_same_direction(inner);
        doc["concave_outer"] = is_concave_same_direction(outer);
        const bool between = chain_between(inner, outer);
        doc["between"] = between;
        enclosures["length_inner"] = enclosure_json(chain_length(inner, opts.bits), opts.digits);
        enclosures["length_outer"] = enclosure_json(chain_length(outer, opts.bits), opts.digits);
        if (between) {
            const ChainOrdering ordering = compare_chains(inner, outer, opts.bits);
            doc["ordering"] =
                ordering == ChainOrdering::InnerShorter ? "inner-shorter" : "overlapping";
            certified = ordering == ChainOrdering::InnerShorter;
        } else {
            certified = false;
        }
    } else {
        throw UsageError("axioms needs either --chain or both --inner and --outer");
    }

    doc["enclosures"] = enclosures;
    doc["certified"] = certified;
    return emit(doc, opts.format);
}

// ---------------------------------------------------------------------------
// construct

int run_construct(const std::string& expr_text, const CommonOptions& opts) {
    const AlgExpr expr = AlgExpr::parse(expr_text);
    const ConstructibilityCertificate cert = is_constructible(expr);
    const Interval value = eval_expr(expr, opts.bits);
    const auto [lo, hi] = to_decimal(value, opts.digits);

    ordered_json doc{{"command", "construct"},
                     {"inputs", {{"expr", expr.to_text()}, {"bits", opts.bits}}},
                     {"constructible", cert.constructible},
                     {"depth", cert.depth},
                     {"lo", lo},
                     {"hi", hi},
                     {"enclosures", {{"value", enclosure_json(value, opts.digits)}}},
                     {"certified", cert.constructible}};
    return emit(doc, opts.format);
}

// ---------------------------------------------------------------------------
// solids

int run_solids(const std::string& radius_text, int pi_doublings, const CommonOptions& opts) {
    const Rational radius = parse_rational_arg(radius_text, "--radius");
    if (radius.sign() <= 0) throw UsageError("--radius must be positive");
    if (pi_doublings < 0) throw UsageError("--doublings must be >= 0");

    struct Run {
        SolidReport report;
        CylinderSphereRatios ratios;
        int bits_used;
    };
    const Run run = with_retry(opts.bits, [&](int bits) -> Run {
        return {sphere_constants(radius, pi_doublings, bits),
                cylinder_sphere_ratios(radius, pi_doublings, bits), bits};
    });

    const Rational three_halves(3, 2);
    const bool ratios_ok = run.ratios.volume_ratio.contains(three_halves) &&
                           run.ratios.surface_ratio.contains(three_halves);
    const bool identity_ok = run.report.six_v_over_d3.intersects(run.report.s_over_4r2) &&
                             run.report.six_v_over_d3.intersects(run.report.pi_ref) &&
                             run.report.s_over_4r2.intersects(run.report.pi_ref);

    ordered_json doc{
        {"command", "solids"},
        {"inputs",
         {{"radius", radius.to_string()}, {"doublings", pi_doublings}, {"bits", run.bits_used}}},
        {"enclosures",
         {{"pi", enclosure_json(run.report.pi_ref, opts.digits)},
          {"volume", enclosure_json(run.report.volume, opts.digits)},
          {"surface", enclosure_json(run.report.surface, opts.digits)},
          {"cylinder_volume", enclosure_json(run.report.cylinder_volume, opts.digits)},
          {"cylinder_surface_total", enclosure_json(run.report.cylinder_surface_total, opts.digits)},
          {"six_v_over_d3", enclosure_json(run.report.six_v_over_d3, opts.digits)},
          {"s_over_4r2", enclosure_json(run.report.s_over_4r2, opts.digits)},
          {"volume_ratio", enclosure_json(run.ratios.volume_ratio, opts.digits)},
          {"surface_ratio", enclosure_json(run.ratios.surface_ratio, opts.digits)}}},
        {"certified", ratios_ok && identity_ok}};
    return emit(doc, opts.format);
}

int emit_error(const std::string& kind, const std::string& message, int code) {
    std::cerr << ordered_json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified enclosures for the classical circle constants"};
    app.require_subcommand(1);

    std::function<int()> action;

    // pi
    {
        auto* cmd = app.add_subcommand("pi", "polygon-doubling enclosure of pi");
        auto opts = std::make_shared<CommonOptions>();
        auto doublings = std::make_shared<int>(4);
        cmd->add_option("--doublings", *doublings, "number of side doublings from the hexagon");
        add_common(cmd, *opts);
        cmd->callback([&action, doublings, opts] {
            action = [doublings, opts] { return run_pi(*doublings, *opts); };
        });
    }

    // squeeze
    {
        auto* cmd = app.add_subcommand("squeeze", "area vs half*C*r squeeze certificate");
        auto opts = std::make_shared<CommonOptions>();
        auto doublings = std::make_shared<int>(12);
        auto radius = std::make_shared<std::string>("1");
        auto tolerance = std::make_shared<std::string>("1e-6");
        cmd->add_option("--doublings", *doublings, "number of side doublings");
        cmd->add_option("--radius", *radius, "circle radius as p/q");
        cmd->add_option("--tolerance", *tolerance, "required bracket width");
        add_common(cmd, *opts);
        cmd->callback([&action, doublings, radius, tolerance, opts] {
            action = [doublings, radius, tolerance, opts] {
                return run_squeeze(*doublings, *radius, *tolerance, *opts);
            };
        });
    }

    // sector
    {
        auto* cmd = app.add_subcommand("sector", "chord < arc < tangent certificate");
        auto opts = std::make_shared<CommonOptions>();
        auto angle = std::make_shared<std::string>("1/6");
        auto pi_doublings = std::make_shared<int>(0);
        cmd->add_option("--angle-over-pi", *angle, "theta as a fraction of pi, 1/(6*2^j)");
        cmd->add_option("--pi-doublings", *pi_doublings,
                        "doublings for the arc enclosure (default: angle index + 6)");
        add_common(cmd, *opts);
        cmd->callback([&action, angle, pi_doublings, opts] {
            action = [angle, pi_doublings, opts] {
                return run_sector(*angle, *pi_doublings, *opts);
            };
        });
    }

    // rectify
    {
        auto* cmd = app.add_subcommand("rectify", "curve rectification with oracle agreement");
        auto opts = std::make_shared<CommonOptions>();
        auto curve = std::make_shared<std::string>();
        auto params = std::make_shared<std::vector<std::string>>();
        auto segments = std::make_shared<std::int64_t>(0);
        auto tolerance = std::make_shared<std::string>("1e-6");
        auto truncation = std::make_shared<std::string>("40");
        auto pi_doublings = std::make_shared<int>(12);
        auto polyline = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "curve kind")->required();
        cmd->add_option("--param", *params, "curve parameter name=p/q (repeatable)");
        cmd->add_option("--segments", *segments, "polyline segments (0 = refine to tolerance)");
        cmd->add_option("--tolerance", *tolerance, "target oracle width for auto refinement");
        cmd->add_option("--truncation", *truncation, "log spiral parameter cutoff T");
        cmd->add_option("--pi-doublings", *pi_doublings, "pi enclosure depth for formula paths");
        cmd->add_option("--emit-polyline", *polyline, "write sampled t,x,y rows to this CSV file");
        add_common(cmd, *opts);
        cmd->callback([&action, curve, params, segments, tolerance, truncation, pi_doublings,
                       polyline, opts] {
            action = [curve, params, segments, tolerance, truncation, pi_doublings, polyline, opts] {
                return run_rectify(*curve, *params, *segments, *tolerance, *truncation,
                                   *pi_doublings, *polyline, *opts);
            };
        });
    }

    // axioms
    {
        auto* cmd = app.add_subcommand("axioms", "concavity, betweenness and length comparison");
        auto opts = std::make_shared<CommonOptions>();
        auto chain = std::make_shared<std::string>();
        auto inner = std::make_shared<std::string>();
        auto outer = std::make_shared<std::string>();
        cmd->add_option("--chain", *chain, "chain as JSON [[ [xn,xd],[yn,yd] ], ...]");
        cmd->add_option("--inner", *inner, "inner chain JSON");
        cmd->add_option("--outer", *outer, "outer chain JSON");
        add_common(cmd, *opts);
        cmd->callback([&action, chain, inner, outer, opts] {
            action = [chain, inner, outer, opts] {
                return run_axioms(*chain, *inner, *outer, *opts);
            };
        });
    }

    // construct
    {
        auto* cmd = app.add_subcommand("construct", "constructibility of an s-expression value");
        auto opts = std::make_shared<CommonOptions>();
        auto expr = std::make_shared<std::string>();
        cmd->add_option("--expr", *expr, "prefix s-expression")->required();
        add_common(cmd, *opts);
        cmd->callback([&action, expr, opts] {
            action = [expr, opts] { return run_construct(*expr, *opts); };
        });
    }

    // solids
    {
        auto* cmd = app.add_subcommand("solids", "sphere and cylinder constant identities");
        auto opts = std::make_shared<CommonOptions>();
        auto radius = std::make_shared<std::string>("1");
        auto doublings = std::make_shared<int>(10);
        cmd->add_option("--radius", *radius, "sphere radius as p/q");
        cmd->add_option("--doublings", *doublings, "pi enclosure depth");
        add_common(cmd, *opts);
        cmd->callback([&action, radius, doublings, opts] {
            action = [radius, doublings, opts] {
                return run_solids(*radius, *doublings, *opts);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << ordered_json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        return emit_error("UsageError", e.what(), 1);
    } catch (const ParseError& e) {
        return emit_error("ParseError", e.what(), 1);
    } catch (const ToleranceUnreachable& e) {
        return emit_error("ToleranceUnreachable", e.what(), 2);
    } catch (const PrecisionExhausted& e) {
        return emit_error("PrecisionExhausted", e.what(), 2);
    } catch (const NonConvergent& e) {
        return emit_error("NonConvergent", e.what(), 2);
    } catch (const UnsupportedAngle& e) {
        return emit_error("UnsupportedAngle", e.what(), 2);
    } catch (const Error& e) {
        return emit_error("CertificationError", e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return emit_error("UsageError", e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error("InternalError", e.what(), 2);
    }
}
