#pragma once

#include <cstdint>

#include <json.hpp>

#include "sylvester/montecarlo/body.hpp"

namespace sylvester::mc {

struct EstimatorConfig {
    unsigned k = 1;
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 0;
    /// Samples per rng stream; chunk c uses Philox stream c.
    std::uint64_t chunk_size = 1 << 16;
    /// Two-sided level of the normal-approximation interval.
    double confidence = 0.99;
    /// Worker threads, 0 = hardware concurrency. Never affects results.
    unsigned threads = 0;

    /// Throws std::invalid_argument on zero samples, chunk_size outside
    /// [1, n_samples] or confidence outside (0, 1).
    void validate() const;
};

/// Welford accumulator with Chan's pairwise merge.
class RunningMoments {
public:
    void add(double x)
    {
        ++count_;
        double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningMoments& other);

    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }
    /// Unbiased sample variance (0 for fewer than two samples).
    double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }

private:
    std::uint64_t count_ = 0;
    double mean_ = 0;
    double m2_ = 0;
};

struct MomentEstimate {
    double mean = 0;
    double variance = 0;
    double std_error = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t n = 0;
    EstimatorConfig config;
};

/// z such that P(|Z| <= z) = confidence for standard normal Z.
double normal_quantile_two_sided(double confidence);

/// Plain Monte Carlo estimate of E V^k, where V is the volume of the
/// simplex spanned by the fixed point (if any) and uniform points of body.
/// Bit-identical for equal (body, fixed, config) regardless of threads.
MomentEstimate estimate_moment(const Body& body, const FixedPointSpec& fixed, const EstimatorConfig& config);

nlohmann::json to_json(const EstimatorConfig& config);
/// Includes every config field except the thread count.
nlohmann::json to_json(const MomentEstimate& estimate);

}  // namespace sylvester::mc
