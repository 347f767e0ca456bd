#include "sylvester/cli.hpp"

#include "sylvester/exactnum/decimal.hpp"

namespace sylvester::cli {

using moments::BodyKind;
using moments::FixedKind;

std::string_view artifact_version()
{
    return SYLVESTER_VERSION;
}

const std::vector<Table1Row>& table1_expected()
{
    static const std::vector<Table1Row> rows = {
        {3, ratio(1, 375), ratio(31, 9000), ratio(24, 31)},
        {4, ratio(13, 21600), ratio(1, 900), ratio(13, 24)},
        {5, ratio(151, 987840), ratio(1063, 2469600), ratio(755, 2126)},
        {6, ratio(1, 23520), ratio(403, 2116800), ratio(90, 403)},
        {7, ratio(83, 6531840), ratio(211, 2268000), ratio(2075, 15192)},
        {8, ratio(73, 18144000), ratio(13, 264600), ratio(511, 6240)},
        {9, ratio(1433, 1073318400), ratio(2593, 93915360), ratio(10031, 207440)},
        {10, ratio(647, 1405071360), ratio(697, 42688800), ratio(22645, 802944)},
    };
    return rows;
}

std::vector<Table1Row> table1_computed()
{
    std::vector<Table1Row> rows;
    for (long k = 3; k <= 10; ++k) {
        auto fixed = moments::triangle_midpoint_moment(k).as_rational();
        auto free = moments::triangle_moment(k).as_rational();
        if (!fixed || !free)
            throw std::logic_error("triangle moments must be rational");
        rows.push_back({k, *fixed, *free, moments::tx_over_t_ratio(k)});
    }
    return rows;
}

std::vector<std::string> table1_diff(const std::vector<Table1Row>& computed, const std::vector<Table1Row>& expected)
{
    std::vector<std::string> diff;
    if (computed.size() != expected.size())
        diff.push_back("row count " + std::to_string(computed.size()) + " != " + std::to_string(expected.size()));
    for (size_t i = 0; i < std::min(computed.size(), expected.size()); ++i) {
        const auto& c = computed[i];
        const auto& e = expected[i];
        auto field = [&](const char* name, const Rational& got, const Rational& want) {
            if (got != want)
                diff.push_back("k=" + std::to_string(e.k) + " " + name + ": computed " + to_string(got) +
                               ", expected " + to_string(want));
        };
        if (c.k != e.k)
            diff.push_back("row " + std::to_string(i) + ": k=" + std::to_string(c.k) + ", expected " +
                           std::to_string(e.k));
        field("fixed_moment", c.fixed_moment, e.fixed_moment);
        field("moment", c.moment, e.moment);
        field("ratio", c.ratio, e.ratio);
    }
    return diff;
}

mc::EstimateSpec simulation_target(const moments::MomentQuery& query)
{
    try {
        query.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (query.k < 0)
        throw UsageError("moment order must be nonnegative");
    const int d = static_cast<int>(query.d);
    auto spec = [&](mc::Body body, std::optional<mc::Point> fixed) {
        return mc::EstimateSpec{body, fixed ? mc::FixedPointSpec::at(body, *fixed) : mc::FixedPointSpec::none(),
                                static_cast<unsigned>(query.k)};
    };
    switch (query.body) {
    case BodyKind::interval:
        return spec(mc::Body::interval(query.length.get_d()), std::nullopt);
    case BodyKind::ball:
    case BodyKind::halfball: {
        auto body = query.body == BodyKind::ball ? mc::Body::ball(d) : mc::Body::halfball(d);
        if (query.fixed == FixedKind::origin)
            return spec(body, mc::Point(static_cast<size_t>(d), 0.0));
        return spec(body, std::nullopt);
    }
    case BodyKind::triangle:
    case BodyKind::tetrahedron: {
        auto body = mc::Body::unit_simplex(d);
        if (query.fixed == FixedKind::none)
            return spec(body, std::nullopt);
        return spec(body, body.face_centroid(0));
    }
    }
    throw std::logic_error("unhandled body kind");
}

nlohmann::json query_to_json(const moments::MomentQuery& query)
{
    nlohmann::json j = {{"body", std::string(to_string(query.body))},
                        {"fixed", std::string(to_string(query.fixed))},
                        {"d", query.d},
                        {"k", query.k}};
    if (query.body == BodyKind::interval)
        j["l"] = to_string(query.length);
    return j;
}

std::vector<std::string> scenario_names()
{
    return {"halfball-d3", "tetra-d3", "halfball-d4-k1"};
}

Scenario scenario(std::string_view name)
{
    if (name == "halfball-d3")
        return {std::string(name), "E V(B3+) > E V(B3+, o) = 9pi/1024",
                mc::EstimateSpec{mc::Body::halfball(3), mc::FixedPointSpec::none(), 1},
                moments::ball_fixed_moment(3, 1), mc::Relation::lhs_greater};
    if (name == "tetra-d3") {
        auto t = mc::Body::unit_simplex(3);
        return {std::string(name), "E V(T) = 13/720 - pi^2/15015 > E V(T, facet centroid)",
                moments::tetrahedron_moment_k1(), mc::EstimateSpec{t, mc::FixedPointSpec::at(t, t.face_centroid(0)), 1},
                mc::Relation::lhs_greater};
    }
    if (name == "halfball-d4-k1")
        return {std::string(name), "E V(B4+) > E V(B4+, o) = ball_fixed_moment(4, 1)",
                mc::EstimateSpec{mc::Body::halfball(4), mc::FixedPointSpec::none(), 1},
                moments::ball_fixed_moment(4, 1), mc::Relation::lhs_greater};
    std::string known;
    for (const auto& n : scenario_names())
        known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown scenario '" + std::string(name) + "' (known: " + known + ")");
}

QScan run_qscan(long d, long k_max)
{
    if (d != 2 && d != 3)
        throw UsageError("qscan needs d = 2 or d = 3");
    if (k_max < 2)
        throw UsageError("qscan needs k >= 2");
    QScan scan;
    scan.d = d;
    scan.k_max = k_max;
    scan.monotone_from = d == 2 ? 4 : 2;
    scan.expected_first_below_one = d == 2 ? 11 : 4;
    for (long k = 1; k <= k_max; ++k) {
        QScanRow row{k, moments::q_ratio(d, k), std::nullopt};
        if (d == 3)
            row.ratio_bound = moments::exact_ratio_bound(d, k);
        if (!scan.first_below_one && row.q < 1)
            scan.first_below_one = k;
        if (k > scan.monotone_from && !(row.q < scan.rows.back().q))
            scan.strictly_decreasing = false;
        scan.rows.push_back(std::move(row));
    }
    if (k_max >= scan.expected_first_below_one)
        scan.matches_expected = scan.first_below_one == scan.expected_first_below_one;
    else
        scan.matches_expected = !scan.first_below_one;
    return scan;
}

nlohmann::json RunManifest::to_json() const
{
    return {{"manifest", true},        {"command", command},   {"parameters", parameters},
            {"seeds", seeds},          {"timestamp", timestamp}, {"version", version},
            {"records", records},      {"exit_code", exit_code}};
}

}  // namespace sylvester::cli
