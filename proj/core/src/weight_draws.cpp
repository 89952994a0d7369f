#include "graphzeta/weight_draws.hpp"

#include <random>

namespace graphzeta {

WeightAssignment draw_weights(ArcId arc_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Plain modulo mapping: uniform_int_distribution is not specified
    // byte-for-byte across standard libraries, mt19937_64 is.
    auto draw = [&rng] {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 9) + 1;
        return Scalar(num, den);
    };
    WeightAssignment w;
    const auto m = static_cast<std::size_t>(arc_count);
    w.tau1.reserve(m);
    w.tau2.reserve(m);
    w.upsilon1.reserve(m);
    w.upsilon2.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        w.tau1.push_back(draw());
        w.tau2.push_back(draw());
        w.upsilon1.push_back(draw());
        w.upsilon2.push_back(draw());
    }
    return w;
}

}  // namespace graphzeta
