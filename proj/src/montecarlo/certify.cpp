#include "sylvester/montecarlo/certify.hpp"

#include "sylvester/exactnum/decimal.hpp"

namespace sylvester::mc {
namespace {

EvaluatedComparand evaluate(const Comparand& side, EstimatorConfig config)
{
    EvaluatedComparand out;
    if (const auto* exact = std::get_if<PiPolynomial>(&side)) {
        out.source = *exact;
        out.value = out.low = out.high = to_double(*exact);
        return out;
    }
    const auto& spec = std::get<EstimateSpec>(side);
    config.k = spec.k;
    MomentEstimate e = estimate_moment(spec.body, spec.fixed, config);
    out.value = e.mean;
    out.low = e.ci_low;
    out.high = e.ci_high;
    out.source = e;
    return out;
}

nlohmann::json to_json(const EvaluatedComparand& c)
{
    nlohmann::json j = {{"value", c.value}, {"low", c.low}, {"high", c.high}};
    if (const auto* exact = std::get_if<PiPolynomial>(&c.source)) {
        j["exact"] = to_json(*exact);
        j["decimal"] = to_decimal(*exact, 12).text;
    } else {
        j["estimate"] = to_json(std::get<MomentEstimate>(c.source));
    }
    return j;
}

}  // namespace

std::string_view to_string(Relation relation)
{
    switch (relation) {
    case Relation::lhs_greater:
        return "lhs>rhs";
    case Relation::rhs_greater:
        return "rhs>lhs";
    case Relation::inconclusive:
        break;
    }
    return "inconclusive";
}

CounterexampleVerdict certify_counterexample(const Comparand& lhs, const Comparand& rhs, const EstimatorConfig& config)
{
    config.validate();
    CounterexampleVerdict v;
    v.confidence = config.confidence;
    EstimatorConfig rhs_config = config;
    rhs_config.seed = mix_seed(config.seed);
    v.lhs = evaluate(lhs, config);
    v.rhs = evaluate(rhs, rhs_config);

    const auto* lhs_exact = std::get_if<PiPolynomial>(&lhs);
    const auto* rhs_exact = std::get_if<PiPolynomial>(&rhs);
    if (lhs_exact && rhs_exact) {
        auto order = compare(*lhs_exact, *rhs_exact);
        v.relation = order > 0 ? Relation::lhs_greater : order < 0 ? Relation::rhs_greater : Relation::inconclusive;
        return v;
    }
    if (v.lhs.low > v.rhs.high)
        v.relation = Relation::lhs_greater;
    else if (v.rhs.low > v.lhs.high)
        v.relation = Relation::rhs_greater;
    return v;
}

nlohmann::json to_json(const CounterexampleVerdict& v)
{
    return {{"lhs", to_json(v.lhs)},
            {"rhs", to_json(v.rhs)},
            {"relation", std::string(to_string(v.relation))},
            {"confidence", v.confidence}};
}

}  // namespace sylvester::mc
