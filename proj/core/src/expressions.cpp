#include "graphzeta/expressions.hpp"

#include <stdexcept>

#include "graphzeta/hashimoto.hpp"

namespace graphzeta {

TruncatedSeries exponential_expression(const Digraph& d, const WeightAssignment& w,
                                       int order) {
    if (order < 0) throw std::invalid_argument("exponential_expression: order >= 0");
    TruncatedSeries arg(order);
    if (order >= 1 && d.arc_count() > 0) {
        const Matrix<Scalar> m = hashimoto_matrix(d, w);
        Matrix<Scalar> power = m;
        for (int k = 1; k <= order; ++k) {
            arg.set_coeff(k, power.trace() / Scalar(k));
            if (k < order) power = power * m;
        }
    }
    return exp(arg);
}

TruncatedSeries euler_expression(const Digraph& d, const WeightAssignment& w, int order,
                                 std::size_t cap) {
    if (order < 0) throw std::invalid_argument("euler_expression: order >= 0");
    TruncatedSeries product = TruncatedSeries::one(order);
    if (order == 0 || d.arc_count() == 0) return product;
    for (const Cycle& cycle : enumerate_prime_cycles(d, order, cap)) {
        const Scalar circ = circular_product(d, w, cycle.representative);
        if (circ.is_zero()) continue;  // factor is 1
        // 1/(1 - circ t^len) = 1 + circ t^len + circ^2 t^{2 len} + ...
        TruncatedSeries factor(order);
        Scalar power = Scalar::one();
        for (int e = 0; e * cycle.length() <= order; ++e) {
            factor.set_coeff(e * cycle.length(), power);
            power *= circ;
        }
        product = product * factor;
    }
    return product;
}

AdjacencyReport adjacency_condition_check(const Digraph& d, const WeightAssignment& w) {
    AdjacencyReport report;
    const ArcId m = d.arc_count();
    for (ArcId a = 0; a < m; ++a)
        for (ArcId b = 0; b < m; ++b)
            if (!theta(d, w, a, b).is_zero() && d.arc(a).head != d.arc(b).tail) {
                report.pass = false;
                report.violations.emplace_back(a, b);
            }
    return report;
}

AdjacencyReport adjacency_condition_check(const Digraph& d, const Matrix<Scalar>& m,
                                          const std::vector<ArcId>& arc_order) {
    if (m.rows() != arc_order.size() || m.cols() != arc_order.size())
        throw std::invalid_argument("adjacency_condition_check: shape mismatch");
    AdjacencyReport report;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Arc& a = d.arc(arc_order[i]);
            const Arc& b = d.arc(arc_order[j]);
            if (!m(i, j).is_zero() && a.head != b.tail) {
                report.pass = false;
                report.violations.emplace_back(a.id, b.id);
            }
        }
    return report;
}

}  // namespace graphzeta
