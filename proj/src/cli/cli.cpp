#include "sylvester/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "sylvester/exactnum/decimal.hpp"

namespace sylvester::cli {
namespace {

constexpr int kInternalError = 5;

struct Options {
    std::string body;
    std::string fixed = "none";
    std::optional<long> d;
    std::optional<long> k;
    std::string l = "1";
    std::optional<std::string> n;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> chunk;
    double confidence = 0.99;
    bool json = false;
    bool table = false;
    int digits = 12;
    std::string manifest;
    std::string scenario;
};

// Command output: JSON records plus the same content as table cells.
struct Output {
    std::vector<nlohmann::json> records;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int exit_code = kSuccess;
    std::vector<std::string> diagnostics;
};

std::string timestamp_now()
{
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Accepts plain integers and integer scientific notation such as 1e7.
std::uint64_t parse_count(const std::string& text)
{
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto e = text.find_first_of("eE");
    std::string_view mant = std::string_view(text).substr(0, e);
    std::string_view expo = e == std::string::npos ? std::string_view() : std::string_view(text).substr(e + 1);
    if (!digits(mant) || (e != std::string::npos && !digits(expo)))
        throw UsageError("--n expects a positive integer such as 1000000 or 1e6, got '" + text + "'");
    Integer value{std::string(mant)};
    if (!expo.empty()) {
        if (expo.size() > 2)
            throw UsageError("--n out of range: " + text);
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, std::stoul(std::string(expo)));
        value *= p;
    }
    if (value <= 0 || value > Integer("18446744073709551615"))
        throw UsageError("--n must lie in [1, 2^64): " + text);
    return std::stoull(value.get_str());
}

// "p/q", an integer or a plain decimal such as 2.5.
Rational parse_length(const std::string& text)
{
    try {
        auto dot = text.find('.');
        if (dot == std::string::npos)
            return parse_rational(text);
        std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty() || !std::all_of(frac.begin(), frac.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("bad decimal");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        return parse_rational((whole.empty() ? "0" : whole) + frac + "/" + den.get_str());
    } catch (const std::invalid_argument&) {
        throw UsageError("--l expects a positive length such as 2, 5/2 or 2.5, got '" + text + "'");
    }
}

unsigned thread_cap()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("SYLVESTER_THREADS");
    if (!env || !*env)
        return hw;
    std::string s(env);
    if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 6 ||
        std::stoul(s) == 0)
        throw UsageError("SYLVESTER_THREADS must be a positive integer, got '" + s + "'");
    return std::min(hw, static_cast<unsigned>(std::stoul(s)));
}

std::string dec(const PiPolynomial& value, int digits)
{
    return to_decimal(value, digits).text;
}

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(8) << v;
    return os.str();
}

moments::MomentQuery build_query(const Options& o)
{
    if (o.body.empty())
        throw UsageError("--body is required (interval, ball, halfball, triangle, tetrahedron)");
    auto body = moments::parse_body_kind(o.body);
    if (!body)
        throw UsageError("unknown body '" + o.body + "' (interval, ball, halfball, triangle, tetrahedron)");
    auto fixed = moments::parse_fixed_kind(o.fixed);
    if (!fixed)
        throw UsageError("unknown fixed point '" + o.fixed + "' (none, origin, edge_midpoint, facet_centroid)");
    moments::MomentQuery q;
    q.body = *body;
    q.fixed = *fixed;
    q.k = o.k.value_or(1);
    switch (q.body) {
    case moments::BodyKind::interval:
        q.d = o.d.value_or(1);
        break;
    case moments::BodyKind::triangle:
        q.d = o.d.value_or(2);
        break;
    case moments::BodyKind::tetrahedron:
        q.d = o.d.value_or(3);
        break;
    case moments::BodyKind::ball:
    case moments::BodyKind::halfball:
        if (!o.d)
            throw UsageError("--d is required for " + o.body);
        q.d = *o.d;
        break;
    }
    if (q.d > 64)
        throw UsageError("--d must be at most 64");
    q.length = parse_length(o.l);
    try {
        q.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return q;
}

mc::EstimatorConfig build_config(const Options& o, std::uint64_t default_n)
{
    mc::EstimatorConfig c;
    c.n_samples = o.n ? parse_count(*o.n) : default_n;
    c.seed = o.seed;
    c.chunk_size = o.chunk.value_or(std::min<std::uint64_t>(1 << 16, c.n_samples));
    c.confidence = o.confidence;
    c.threads = thread_cap();
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return c;
}

Output cmd_table1(const Options& o, RunManifest&)
{
    Output out;
    auto computed = table1_computed();
    const auto& expected = table1_expected();
    out.diagnostics = table1_diff(computed, expected);
    out.header = {"k", "E V_Tx^k", "E V_T^k", "ratio", "ratio (dec)", "match"};
    for (size_t i = 0; i < computed.size(); ++i) {
        const auto& r = computed[i];
        bool match = i < expected.size() && r.k == expected[i].k && r.fixed_moment == expected[i].fixed_moment &&
                     r.moment == expected[i].moment && r.ratio == expected[i].ratio;
        out.records.push_back({{"command", "table1"},
                               {"k", r.k},
                               {"fixed_moment", to_string(r.fixed_moment)},
                               {"fixed_moment_decimal", dec(r.fixed_moment, o.digits)},
                               {"moment", to_string(r.moment)},
                               {"moment_decimal", dec(r.moment, o.digits)},
                               {"ratio", to_string(r.ratio)},
                               {"ratio_decimal", dec(r.ratio, o.digits)},
                               {"matches", match}});
        out.rows.push_back({std::to_string(r.k), to_string(r.fixed_moment), to_string(r.moment), to_string(r.ratio),
                            dec(r.ratio, o.digits), match ? "yes" : "NO"});
    }
    if (!out.diagnostics.empty())
        out.exit_code = kExactMismatch;
    return out;
}

Output cmd_exact(const Options& o, RunManifest&)
{
    auto q = build_query(o);
    auto value = moments::exact_moment(q);
    if (!value)
        throw UsageError("no closed form for " + std::string(to_string(q.body)) + "/" +
                         std::string(to_string(q.fixed)) + " d=" + std::to_string(q.d) + " k=" +
                         std::to_string(q.k) + "; supported: " + moments::supported_exact_combinations());
    Output out;
    std::string text = value->to_string(), decimal = dec(*value, o.digits);
    out.records.push_back({{"command", "exact"},
                           {"query", query_to_json(q)},
                           {"exact", to_json(*value)},
                           {"text", text},
                           {"decimal", decimal}});
    out.header = {"field", "value"};
    out.rows = {{"body", std::string(to_string(q.body))},
                {"fixed", std::string(to_string(q.fixed))},
                {"d", std::to_string(q.d)},
                {"k", std::to_string(q.k)},
                {"exact", text},
                {"decimal", decimal}};
    return out;
}

Output cmd_mc(const Options& o, RunManifest& manifest)
{
    auto q = build_query(o);
    auto target = simulation_target(q);
    auto config = build_config(o, 1'000'000);
    config.k = target.k;
    manifest.seeds = {config.seed};
    auto e = mc::estimate_moment(target.body, target.fixed, config);

    Output out;
    nlohmann::json rec = {{"command", "mc"},
                          {"query", query_to_json(q)},
                          {"body", target.body.to_json()},
                          {"fixed_point", target.fixed.to_json()},
                          {"estimate", to_json(e)}};
    out.header = {"field", "value"};
    out.rows = {{"body", std::string(to_string(q.body))},
                {"fixed", std::string(to_string(q.fixed))},
                {"d", std::to_string(q.d)},
                {"k", std::to_string(q.k)},
                {"n", std::to_string(e.n)},
                {"seed", std::to_string(config.seed)},
                {"mean", fmt(e.mean)},
                {"std_error", fmt(e.std_error)},
                {"ci", "[" + fmt(e.ci_low) + ", " + fmt(e.ci_high) + "] @ " + fmt(config.confidence)}};
    if (auto exact = moments::exact_moment(q)) {
        std::string decimal = dec(*exact, o.digits);
        rec["exact"] = {{"text", exact->to_string()}, {"decimal", decimal}};
        out.rows.push_back({"exact", exact->to_string() + " = " + decimal});
        if (e.std_error > 0) {
            double z = (e.mean - to_double(*exact)) / e.std_error;
            rec["exact"]["z"] = z;
            out.rows.push_back({"z", fmt(z)});
        }
    }
    out.records.push_back(std::move(rec));
    return out;
}

Output cmd_counterexample(const Options& o, RunManifest& manifest)
{
    Scenario s = scenario(o.scenario);
    auto config = build_config(o, 10'000'000);
    manifest.seeds = {config.seed, mc::mix_seed(config.seed)};
    auto v = mc::certify_counterexample(s.lhs, s.rhs, config);

    Output out;
    bool certified = v.relation == s.expected;
    out.exit_code = certified                              ? kSuccess
                    : v.relation == mc::Relation::inconclusive ? kInconclusive
                                                           : kOppositeCertified;
    out.records.push_back({{"command", "counterexample"},
                           {"scenario", s.name},
                           {"claim", s.claim},
                           {"expected", std::string(to_string(s.expected))},
                           {"relation", std::string(to_string(v.relation))},
                           {"certified", certified},
                           {"gap", v.lhs.value - v.rhs.value},
                           {"n_samples", config.n_samples},
                           {"seed", config.seed},
                           {"verdict", to_json(v)}});
    out.header = {"side", "value", "low", "high"};
    out.rows = {{"lhs", fmt(v.lhs.value), fmt(v.lhs.low), fmt(v.lhs.high)},
                {"rhs", fmt(v.rhs.value), fmt(v.rhs.low), fmt(v.rhs.high)},
                {"relation", std::string(to_string(v.relation)), "expected", std::string(to_string(s.expected))}};
    return out;
}

Output cmd_qscan(const Options& o, RunManifest&)
{
    auto d = o.d.value_or(2);
    auto scan = run_qscan(d, o.k.value_or(20));
    Output out;
    out.header = {"k", "q", "q (dec)", "q<1"};
    if (d == 3)
        out.header.push_back("ratio bound (dec)");
    for (const auto& r : scan.rows) {
        nlohmann::json rec = {{"command", "qscan"},
                              {"d", d},
                              {"k", r.k},
                              {"q", to_string(r.q)},
                              {"decimal", dec(r.q, o.digits)},
                              {"below_one", r.q < 1}};
        std::vector<std::string> row = {std::to_string(r.k), to_string(r.q), dec(r.q, o.digits), r.q < 1 ? "yes" : ""};
        if (r.ratio_bound) {
            rec["ratio_bound"] = {{"exact", to_json(*r.ratio_bound)},
                                  {"text", r.ratio_bound->to_string()},
                                  {"decimal", dec(*r.ratio_bound, o.digits)}};
            row.push_back(dec(*r.ratio_bound, o.digits));
        }
        out.records.push_back(std::move(rec));
        out.rows.push_back(std::move(row));
    }
    nlohmann::json summary = {{"command", "qscan"},
                              {"summary", true},
                              {"d", d},
                              {"k_max", scan.k_max},
                              {"first_below_one", scan.first_below_one ? nlohmann::json(*scan.first_below_one) : nullptr},
                              {"expected_first_below_one", scan.expected_first_below_one},
                              {"monotone_from", scan.monotone_from},
                              {"strictly_decreasing", scan.strictly_decreasing},
                              {"matches_expected", scan.matches_expected}};
    if (d == 3)
        summary["ratio_bound_k2_is_one"] = moments::exact_ratio_bound(3, 2) == PiPolynomial(1L);
    out.records.push_back(summary);
    if (!scan.strictly_decreasing)
        out.diagnostics.push_back("q(" + std::to_string(d) + ", k) is not strictly decreasing for k >= " +
                                  std::to_string(scan.monotone_from));
    if (!scan.matches_expected)
        out.diagnostics.push_back("first k with q < 1 differs from the published k = " +
                                  std::to_string(scan.expected_first_below_one));
    if (!out.diagnostics.empty())
        out.exit_code = kExactMismatch;
    return out;
}

void render_table(const Output& out, std::ostream& os)
{
    std::vector<size_t> width(out.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    measure(out.header);
    for (const auto& r : out.rows)
        measure(r);
    auto line = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "  " : "");
            if (i + 1 < row.size())
                os << std::left << std::setw(static_cast<int>(width[i])) << row[i];
            else
                os << row[i];
        }
        os << '\n';
    };
    line(out.header);
    size_t total = 0;
    for (size_t w : width)
        total += w + 2;
    os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
    for (const auto& r : out.rows)
        line(r);
}

nlohmann::json parameters_json(const Options& o, const std::string& command)
{
    nlohmann::json p = {{"digits", o.digits}, {"format", o.table ? "table" : "json"}};
    if (command == "exact" || command == "mc") {
        p["body"] = o.body;
        p["fixed"] = o.fixed;
        p["l"] = o.l;
    }
    if (command != "table1")
        p["k"] = o.k ? nlohmann::json(*o.k) : nullptr;
    if (command != "table1" && command != "counterexample")
        p["d"] = o.d ? nlohmann::json(*o.d) : nullptr;
    if (command == "mc" || command == "counterexample") {
        p["n"] = o.n ? nlohmann::json(*o.n) : nullptr;
        p["seed"] = o.seed;
        p["chunk"] = o.chunk ? nlohmann::json(*o.chunk) : nullptr;
        p["confidence"] = o.confidence;
        const char* env = std::getenv("SYLVESTER_THREADS");
        p["SYLVESTER_THREADS"] = env ? nlohmann::json(env) : nullptr;
    }
    if (command == "counterexample")
        p["scenario"] = o.scenario;
    return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact and Monte Carlo moments of random simplex volumes", "sylvester"};
    app.set_version_flag("--version", std::string(artifact_version()));
    app.set_config("--config", "", "key = value file supplying option defaults; command-line flags win");
    app.require_subcommand(1);

    app.add_option("--body", o.body, "interval | ball | halfball | triangle | tetrahedron");
    app.add_option("--fixed", o.fixed, "none | origin | edge_midpoint | facet_centroid")->capture_default_str();
    app.add_option("--d", o.d, "dimension (qscan: 2 or 3)");
    app.add_option("--k", o.k, "moment order (default 1); qscan: largest k (default 20)");
    app.add_option("--l", o.l, "interval length, e.g. 2, 5/2 or 2.5")->capture_default_str();
    app.add_option("--n", o.n, "samples (mc default 1e6, counterexample default 1e7)");
    app.add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    app.add_option("--chunk", o.chunk, "samples per rng stream (default min(65536, n))");
    app.add_option("--confidence", o.confidence, "two-sided confidence level")->capture_default_str();
    auto* json = app.add_flag("--json", o.json, "JSON lines output (default)");
    app.add_flag("--table", o.table, "aligned table output")->excludes(json);
    app.add_option("--digits", o.digits, "significant digits of decimals")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
    app.add_option("--manifest", o.manifest, "write the run manifest here instead of stderr");

    auto* table1 = app.add_subcommand("table1", "exact triangle moments with an edge-midpoint vertex, k = 3..10");
    auto* exact = app.add_subcommand("exact", "closed-form moment for --body/--fixed/--d/--k");
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate for --body/--fixed/--d/--k");
    auto* cex = app.add_subcommand("counterexample", "certify a named counterexample scenario");
    cex->add_option("scenario", o.scenario, "halfball-d3 | tetra-d3 | halfball-d4-k1")->required();
    auto* qscan = app.add_subcommand("qscan", "q(d, k) for k = 1..--k with threshold checks");
    for (auto* sub : {table1, exact, mc, cex, qscan})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << artifact_version() << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kUsageError;
    }

    std::string command = app.get_subcommands().front()->get_name();
    RunManifest manifest;
    manifest.command = command;
    manifest.parameters = parameters_json(o, command);
    manifest.timestamp = timestamp_now();
    manifest.version = std::string(artifact_version());

    Output result;
    try {
        if (command == "table1")
            result = cmd_table1(o, manifest);
        else if (command == "exact")
            result = cmd_exact(o, manifest);
        else if (command == "mc")
            result = cmd_mc(o, manifest);
        else if (command == "counterexample")
            result = cmd_counterexample(o, manifest);
        else
            result = cmd_qscan(o, manifest);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }

    if (o.table) {
        render_table(result, out);
    } else {
        for (const auto& r : result.records)
            out << r.dump() << '\n';
    }
    for (const auto& d : result.diagnostics)
        err << "mismatch: " << d << '\n';

    manifest.records = result.records;
    manifest.exit_code = result.exit_code;
    if (o.manifest.empty()) {
        err << manifest.to_json().dump() << '\n';
    } else {
        std::ofstream f(o.manifest);
        f << manifest.to_json().dump(2) << '\n';
        if (!f) {
            err << "error: cannot write manifest to " << o.manifest << '\n';
            return kUsageError;
        }
    }
    return result.exit_code;
}

}  // namespace sylvester::cli
