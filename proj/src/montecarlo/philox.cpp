#include "sylvester/montecarlo/philox.hpp"

#include <cmath>

namespace sylvester::mc {

double PhiloxStream::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Marsaglia's polar form of Box-Muller
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

double PhiloxStream::exponential()
{
    return -std::log(uniform());
}

}  // namespace sylvester::mc
