#pragma once

// Statistical certification of moment inequalities.
//
// Monotonicity of K -> E V_K^k under inclusion fails as soon as one body K
// and boundary point x satisfy E V_K^k > E V_{K,x}^k, so certifying that
// strict inequality for a single pair is enough for a counterexample.

#include <string_view>
#include <variant>

#include <json.hpp>

#include "sylvester/exactnum/pi_polynomial.hpp"
#include "sylvester/montecarlo/estimator.hpp"

namespace sylvester::mc {

/// A moment to be estimated by simulation.
struct EstimateSpec {
    Body body;
    FixedPointSpec fixed;
    unsigned k = 1;
};

/// Either a closed-form value or a simulation target.
using Comparand = std::variant<PiPolynomial, EstimateSpec>;

/// A comparand after evaluation. Exact values have a zero-width interval.
struct EvaluatedComparand {
    std::variant<PiPolynomial, MomentEstimate> source;
    double value = 0;
    double low = 0;
    double high = 0;
};

enum class Relation { lhs_greater, rhs_greater, inconclusive };

std::string_view to_string(Relation relation);

struct CounterexampleVerdict {
    EvaluatedComparand lhs;
    EvaluatedComparand rhs;
    Relation relation = Relation::inconclusive;
    double confidence = 0;
};

/// Evaluates both sides and certifies a strict inequality only when the
/// confidence intervals are disjoint. Exact-vs-exact comparisons are decided
/// in exact arithmetic (equal values are inconclusive). The sample count,
/// seed, chunking and confidence come from config; k comes from each spec.
/// The left side draws from config.seed, the right side from a seed derived
/// from it, so two estimated sides are independent.
CounterexampleVerdict certify_counterexample(const Comparand& lhs, const Comparand& rhs,
                                             const EstimatorConfig& config);

nlohmann::json to_json(const CounterexampleVerdict& verdict);

}  // namespace sylvester::mc
