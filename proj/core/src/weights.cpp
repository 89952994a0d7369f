#include "graphzeta/weights.hpp"

namespace graphzeta {

WeightAssignment WeightAssignment::all_ones(ArcId arc_count) {
    const auto m = static_cast<std::size_t>(arc_count);
    std::vector<Scalar> ones(m, Scalar::one());
    return {ones, ones, ones, ones};
}

WeightAssignment WeightAssignment::zeros(ArcId arc_count) {
    const auto m = static_cast<std::size_t>(arc_count);
    std::vector<Scalar> z(m, Scalar::zero());
    return {z, z, z, z};
}

Scalar theta(const Digraph& d, const WeightAssignment& w, ArcId a, ArcId b) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    Scalar value;
    if (d.arc(a).head == d.arc(b).tail) value += w.tau1[ia] * w.tau2[ib];
    if (d.in_inverse_set(a, b)) value -= w.upsilon1[ia] * w.upsilon2[ib];
    return value;
}

Scalar upsilon_sum(const WeightAssignment& w, const std::vector<ArcId>& arcs) {
    Scalar total;
    for (ArcId a : arcs) {
        const auto i = static_cast<std::size_t>(a);
        total += w.upsilon1[i] * w.upsilon2[i];
    }
    return total;
}

}  // namespace graphzeta
