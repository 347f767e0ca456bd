#include "sylvester/montecarlo/estimator.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace sylvester::mc {
namespace {

double integer_power(double v, unsigned k)
{
    double r = 1;
    for (unsigned i = 0; i < k; ++i)
        r *= v;
    return r;
}

RunningMoments run_chunk(const Body& body, const FixedPointSpec& fixed, const EstimatorConfig& config,
                         std::uint64_t chunk)
{
    const int d = body.dim();
    const size_t row = static_cast<size_t>(d);
    std::uint64_t begin = chunk * config.chunk_size;
    std::uint64_t end = std::min(config.n_samples, begin + config.chunk_size);

    std::vector<double> points((row + 1) * row), work(points.size());
    int first_random = 0;
    if (fixed.has_point()) {
        std::copy(fixed.point().begin(), fixed.point().end(), points.begin());
        first_random = 1;
    }

    PhiloxStream rng(config.seed, chunk);
    RunningMoments acc;
    for (std::uint64_t i = begin; i < end; ++i) {
        for (int r = first_random; r <= d; ++r)
            body.sample(rng, std::span<double>(points).subspan(r * row, row));
        std::copy(points.begin(), points.end(), work.begin());
        acc.add(integer_power(simplex_volume_in_place(work, d), config.k));
    }
    return acc;
}

}  // namespace

void EstimatorConfig::validate() const
{
    if (n_samples == 0)
        throw std::invalid_argument("n_samples must be positive");
    if (chunk_size == 0 || chunk_size > n_samples)
        throw std::invalid_argument("chunk_size must lie in [1, n_samples]");
    if (!(confidence > 0 && confidence < 1))
        throw std::invalid_argument("confidence must lie in (0, 1)");
}

void RunningMoments::merge(const RunningMoments& other)
{
    if (other.count_ == 0)
        return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    double na = static_cast<double>(count_), nb = static_cast<double>(other.count_);
    double n = na + nb;
    double delta = other.mean_ - mean_;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    count_ += other.count_;
}

double normal_quantile_two_sided(double confidence)
{
    if (!(confidence > 0 && confidence < 1))
        throw std::invalid_argument("confidence must lie in (0, 1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + 0.5 * confidence);
}

MomentEstimate estimate_moment(const Body& body, const FixedPointSpec& fixed, const EstimatorConfig& config)
{
    config.validate();
    fixed.validate_for(body);

    const std::uint64_t n_chunks = (config.n_samples + config.chunk_size - 1) / config.chunk_size;
    std::vector<RunningMoments> partial(n_chunks);

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < n_chunks; c = next++)
            partial[c] = run_chunk(body, fixed, config, c);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    // fixed merge order keeps the result independent of scheduling
    RunningMoments total;
    for (const auto& p : partial)
        total.merge(p);

    MomentEstimate e;
    e.config = config;
    e.n = total.count();
    e.mean = total.mean();
    e.variance = total.variance();
    e.std_error = std::sqrt(e.variance / static_cast<double>(e.n));
    double z = normal_quantile_two_sided(config.confidence);
    e.ci_low = e.mean - z * e.std_error;
    e.ci_high = e.mean + z * e.std_error;
    return e;
}

nlohmann::json to_json(const EstimatorConfig& config)
{
    return {{"k", config.k},
            {"n_samples", config.n_samples},
            {"seed", config.seed},
            {"chunk_size", config.chunk_size},
            {"confidence", config.confidence}};
}

nlohmann::json to_json(const MomentEstimate& e)
{
    return {{"mean", e.mean},         {"variance", e.variance}, {"std_error", e.std_error},
            {"ci_low", e.ci_low},     {"ci_high", e.ci_high},   {"n", e.n},
            {"config", to_json(e.config)}};
}

}  // namespace sylvester::mc
