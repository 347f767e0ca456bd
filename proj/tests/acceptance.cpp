// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run C1..C10
//   acceptance --only 6   run C6 only
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sylvester/cli.hpp"
#include "sylvester/exactnum/decimal.hpp"
#include "sylvester/exactnum/special.hpp"
#include "sylvester/moments.hpp"
#include "sylvester/montecarlo/certify.hpp"

using namespace sylvester;
using namespace sylvester::moments;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v, int precision = 7)
{
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

void within_time(Outcome& o, Clock::time_point t0, double limit)
{
    double s = seconds_since(t0);
    o.note("runtime " + num(s, 3) + " s (limit " + num(limit, 3) + " s)");
    o.require(s < limit, "runtime under " + num(limit, 3) + " s");
}

mc::EstimatorConfig config(unsigned k, std::uint64_t n, std::uint64_t seed)
{
    mc::EstimatorConfig c;
    c.k = k;
    c.n_samples = n;
    c.seed = seed;
    c.chunk_size = std::min<std::uint64_t>(1 << 16, n);
    return c;
}

// C1 -----------------------------------------------------------------------

Outcome table1()
{
    struct Row {
        long k;
        Rational fixed, free, ratio;
    };
    const Row published[] = {
        {3, ratio(1, 375), ratio(31, 9000), ratio(24, 31)},
        {4, ratio(13, 21600), ratio(1, 900), ratio(13, 24)},
        {5, ratio(151, 987840), ratio(1063, 2469600), ratio(755, 2126)},
        {6, ratio(1, 23520), ratio(403, 2116800), ratio(90, 403)},
        {7, ratio(83, 6531840), ratio(211, 2268000), ratio(2075, 15192)},
        {8, ratio(73, 18144000), ratio(13, 264600), ratio(511, 6240)},
        {9, ratio(1433, 1073318400), ratio(2593, 93915360), ratio(10031, 207440)},
        {10, ratio(647, 1405071360), ratio(697, 42688800), ratio(22645, 802944)},
    };
    Outcome o;
    auto t0 = Clock::now();
    int rows = 0;
    for (const auto& r : published) {
        auto fixed = triangle_midpoint_moment(r.k);
        auto free = triangle_moment(r.k);
        bool ok = fixed == PiPolynomial(r.fixed) && free == PiPolynomial(r.free) &&
                  tx_over_t_ratio(r.k) == r.ratio && fixed * free.inverse() == PiPolynomial(r.ratio);
        o.require(ok, "row k=" + std::to_string(r.k));
        rows += ok;
    }
    o.note(std::to_string(rows) + "/8 rows exact");
    within_time(o, t0, 1.0);
    return o;
}

// C2 -----------------------------------------------------------------------

Outcome identities()
{
    Outcome o;
    auto t0 = Clock::now();
    int checked = 0;
    for (long d = 1; d <= 10; ++d)
        for (long k = 0; k <= 10; ++k, ++checked)
            o.require(halfball_fixed_moment(d, k) == ball_fixed_moment(d, k),
                      "halfball_fixed = ball_fixed at d=" + std::to_string(d) + " k=" + std::to_string(k));
    for (long k = 0; k <= 20; ++k, ++checked)
        o.require(ball_moment(1, k) == interval_moment(k, 2), "ball(1,k) = interval(k,2) at k=" + std::to_string(k));
    for (long k = 0; k <= 20; ++k, ++checked)
        o.require(theorem3_consistency(k) == triangle_midpoint_moment(k),
                  "line decomposition = midpoint moment at k=" + std::to_string(k));
    o.require(exact_ratio_bound(3, 2) == PiPolynomial(1L), "exact_ratio_bound(3,2) = 1");
    o.require(tx_over_t_ratio(2) == 1, "tx_over_t_ratio(2) = 1");
    checked += 2;
    o.note(std::to_string(checked) + " identities");
    within_time(o, t0, 1.0);
    return o;
}

// C3 -----------------------------------------------------------------------

Outcome constants()
{
    Outcome o;
    auto b = ball_fixed_moment(3, 1);
    auto t = tetrahedron_moment_k1();
    o.require(b == PiPolynomial::monomial(ratio(9, 1024), 2), "ball_fixed_moment(3,1) = 9pi/1024");
    o.require(t == PiPolynomial(ratio(13, 720)) - PiPolynomial::monomial(ratio(1, 15015), 4),
              "tetrahedron_moment_k1 = 13/720 - pi^2/15015");
    auto bd = to_decimal(b, 6).text;
    auto td = to_decimal(t, 6).text;
    o.note("9pi/1024 -> " + bd + ", 13/720 - pi^2/15015 -> " + td);
    o.require(bd.rfind("0.027611", 0) == 0, "9pi/1024 prints 0.027611...");
    o.require(td.rfind("0.017398", 0) == 0, "tetrahedron constant prints 0.017398...");
    return o;
}

// C4 -----------------------------------------------------------------------

Outcome qscan()
{
    Outcome o;
    auto t0 = Clock::now();
    for (long d : {2L, 3L}) {
        auto scan = cli::run_qscan(d, 100);
        long from = d == 2 ? 4 : 2, first = d == 2 ? 11 : 4;
        o.require(scan.monotone_from == from && scan.strictly_decreasing,
                  "q(" + std::to_string(d) + ",k) strictly decreasing for " + std::to_string(from) + " <= k <= 100");
        o.require(scan.first_below_one == first, "first q(" + std::to_string(d) + ",k) < 1 at k=" + std::to_string(first));
        o.note("d=" + std::to_string(d) + ": first q<1 at k=" +
               (scan.first_below_one ? std::to_string(*scan.first_below_one) : std::string("none")));
    }
    auto bound = exact_ratio_bound(3, 3);
    auto lo = PiPolynomial(ratio(384, 1000)), hi = PiPolynomial(ratio(385, 1000));
    bool inside = compare(bound, lo) > 0 && compare(bound, hi) < 0;
    o.note("exact_ratio_bound(3,3) = " + bound.to_string() + " = " + to_decimal(bound, 12).text);
    o.require(inside, "exact_ratio_bound(3,3) in (0.384, 0.385)");
    within_time(o, t0, 1.0);
    return o;
}

// C5 -----------------------------------------------------------------------

Outcome oracle_suite()
{
    struct Case {
        std::string label;
        mc::EstimateSpec target;
        PiPolynomial exact;
    };
    std::vector<Case> cases;
    auto add = [&](MomentQuery q) {
        auto exact = exact_moment(q);
        if (!exact)
            throw std::logic_error("missing closed form");
        std::string label = std::string(to_string(q.body)) + "/" + std::string(to_string(q.fixed)) +
                            " d=" + std::to_string(q.d) + " k=" + std::to_string(q.k);
        cases.push_back({label, cli::simulation_target(q), *exact});
    };
    for (long k = 1; k <= 5; ++k)
        add({1, k, BodyKind::interval, FixedKind::none, 1});
    for (long d = 1; d <= 4; ++d)
        for (long k = 1; k <= 3; ++k) {
            add({d, k, BodyKind::ball, FixedKind::none, 1});
            add({d, k, BodyKind::ball, FixedKind::origin, 1});
        }
    for (long d = 1; d <= 3; ++d)
        for (long k = 1; k <= 3; ++k)
            add({d, k, BodyKind::halfball, FixedKind::origin, 1});
    for (long k = 1; k <= 10; ++k) {
        add({2, k, BodyKind::triangle, FixedKind::none, 1});
        add({2, k, BodyKind::triangle, FixedKind::edge_midpoint, 1});
    }

    Outcome o;
    auto t0 = Clock::now();
    int ok = 0, total = 0;
    double worst = 0;
    std::string worst_label;
    for (const auto& c : cases) {
        double exact = to_double(c.exact);
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto e = mc::estimate_moment(c.target.body, c.target.fixed, config(c.target.k, 1'000'000, seed));
            double z = std::abs(e.mean - exact) / e.std_error;
            ++total;
            if (z <= 4)
                ++ok;
            else
                o.require(false, c.label + " seed " + std::to_string(seed) + ": |z| = " + num(z, 3));
            if (z > worst) {
                worst = z;
                worst_label = c.label + " seed " + std::to_string(seed);
            }
        }
    }
    o.note(std::to_string(cases.size()) + " combinations x 3 seeds: " + std::to_string(ok) + "/" +
           std::to_string(total) + " within 4 SE; largest |z| = " + num(worst, 3) + " (" + worst_label + ")");
    within_time(o, t0, 120.0);
    return o;
}

// C6-C8 --------------------------------------------------------------------

Outcome counterexample(const std::string& name, double point_lo, double point_hi, bool estimate_above, double limit,
                       mc::Relation* relation = nullptr)
{
    Outcome o;
    auto t0 = Clock::now();
    auto s = cli::scenario(name);
    auto v = mc::certify_counterexample(s.lhs, s.rhs, config(1, 10'000'000, 1));
    bool lhs_is_estimate = std::holds_alternative<mc::EstimateSpec>(s.lhs);
    const auto& est = lhs_is_estimate ? v.lhs : v.rhs;
    const auto& exact = lhs_is_estimate ? v.rhs : v.lhs;
    o.note("estimate " + num(est.value) + ", 99% CI [" + num(est.low) + ", " + num(est.high) + "]; exact " +
           to_decimal(std::get<PiPolynomial>(exact.source), 7).text);
    if (estimate_above)
        o.require(est.low > exact.value, "CI strictly above the exact value");
    else
        o.require(est.high < exact.value, "CI strictly below the exact value");
    if (point_lo < point_hi)
        o.require(est.value > point_lo && est.value < point_hi,
                  "point estimate in (" + num(point_lo) + ", " + num(point_hi) + ")");
    within_time(o, t0, limit);
    if (relation)
        *relation = v.relation;
    return o;
}

Outcome halfball_d4()
{
    // Stated criterion: the CI for E V(B4+) lies strictly below the exact
    // E V(B4+, o). The observed estimate lies above it (the certified
    // direction of the counterexample); this criterion then fails.
    mc::Relation relation{};
    Outcome o = counterexample("halfball-d4-k1", 0, 0, false, 60.0, &relation);
    o.note("certified relation E V(B4+) vs E V(B4+, o): " + std::string(to_string(relation)));
    return o;
}

// C9 -----------------------------------------------------------------------

Outcome determinism()
{
    Outcome o;
    auto run = [](const std::vector<std::string>& args, const char* threads) {
        if (threads)
            setenv("SYLVESTER_THREADS", threads, 1);
        else
            unsetenv("SYLVESTER_THREADS");
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        unsetenv("SYLVESTER_THREADS");
        return std::to_string(code) + "\n" + out.str();
    };
    const std::vector<std::vector<std::string>> commands = {
        {"mc", "--body", "halfball", "--d", "3", "--n", "400000", "--chunk", "20000", "--seed", "12"},
        {"mc", "--body", "triangle", "--fixed", "edge_midpoint", "--k", "3", "--n", "200000", "--chunk", "7000"},
        {"mc", "--body", "ball", "--d", "4", "--fixed", "origin", "--k", "2", "--n", "100000", "--chunk", "3000",
         "--seed", "18446744073709551615"},
        {"counterexample", "tetra-d3", "--n", "300000", "--chunk", "25000", "--seed", "5"},
    };
    int identical = 0;
    for (const auto& args : commands) {
        auto reference = run(args, "1");
        bool same = true;
        for (const char* threads : {"1", "2", "3", "8", static_cast<const char*>(nullptr)})
            same &= run(args, threads) == reference;
        identical += same;
        o.require(same, "byte-identical output for '" + args[0] + " " + args[1] + " " + args[2] + "...'");
    }

    // library level, thread counts set directly
    auto body = mc::Body::unit_simplex(3);
    auto fixed = mc::FixedPointSpec::at(body, body.face_centroid(0));
    auto c = config(1, 250'000, 99);
    c.chunk_size = 9'999;
    c.threads = 1;
    auto ref = to_json(mc::estimate_moment(body, fixed, c)).dump();
    for (unsigned t : {2u, 5u, 16u}) {
        c.threads = t;
        o.require(to_json(mc::estimate_moment(body, fixed, c)).dump() == ref,
                  "library estimate identical with " + std::to_string(t) + " threads");
    }
    o.note(std::to_string(identical) + "/" + std::to_string(commands.size()) +
           " commands byte-identical over SYLVESTER_THREADS in {1,2,3,8,unset}");
    return o;
}

// C10 ----------------------------------------------------------------------

Outcome clt()
{
    Outcome o;
    auto body = mc::Body::interval(1);
    std::string ratios;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto a = mc::estimate_moment(body, mc::FixedPointSpec::none(), config(1, 250'000, seed));
        auto b = mc::estimate_moment(body, mc::FixedPointSpec::none(), config(1, 1'000'000, seed));
        double r = b.std_error / a.std_error;
        ratios += (ratios.empty() ? "" : ", ") + num(r, 4);
        o.require(r >= 0.38 && r <= 0.65, "seed " + std::to_string(seed) + " ratio " + num(r, 4) + " in [0.38, 0.65]");
    }
    o.note("SE(4n)/SE(n) = " + ratios);
    return o;
}

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria = {
        {1, "exact triangle table k=3..10", table1},
        {2, "exact identities", identities},
        {3, "constants 9pi/1024 and 13/720 - pi^2/15015", constants},
        {4, "q-scan thresholds and ratio bound", qscan},
        {5, "Monte Carlo agrees with closed forms", oracle_suite},
        {6, "counterexample halfball-d3",
         [] { return counterexample("halfball-d3", 0.0279, 0.0284, true, 60.0); }},
        {7, "counterexample tetra-d3",
         [] { return counterexample("tetra-d3", 0.0156, 0.0162, false, 60.0); }},
        {8, "halfball-d4-k1: CI below exact E V(B4+, o)", halfball_d4},
        {9, "determinism across runs and thread counts", determinism},
        {10, "std error scaling with n", clt},
    };

    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--only N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "no criterion " << only << '\n';
        return 2;
    }

    int failed = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only)
            continue;
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << "C" << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.title;
        for (const auto& n : o.notes)
            std::cout << " | " << n;
        std::cout << std::endl;
    }
    return failed ? 1 : 0;
}
