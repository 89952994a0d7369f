#include "graphzeta/ihara.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphzeta/expressions.hpp"
#include "graphzeta/hashimoto.hpp"

namespace graphzeta {

JklMatrices build_jkl(const Digraph& d, const WeightAssignment& w, const ArcPartition& p) {
    if (!w.covers(d.arc_count()))
        throw std::invalid_argument("build_jkl: weights do not cover the arc set");
    const std::size_t m = p.arc_order.size();
    const std::size_t n = static_cast<std::size_t>(d.vertex_count());
    JklMatrices out{Matrix<Scalar>(m, m), Matrix<Scalar>(m, n), Matrix<Scalar>(n, m)};
    for (std::size_t i = 0; i < m; ++i) {
        const ArcId a = p.arc_order[i];
        const auto ia = static_cast<std::size_t>(a);
        for (std::size_t j = 0; j < m; ++j) {
            const ArcId b = p.arc_order[j];
            if (d.in_inverse_set(a, b))
                out.J(i, j) = w.upsilon1[ia] * w.upsilon2[static_cast<std::size_t>(b)];
        }
        out.K(i, static_cast<std::size_t>(d.arc(a).head)) = w.tau1[ia];
        out.L(static_cast<std::size_t>(d.arc(a).tail), i) = w.tau2[ia];
    }
    return out;
}

BlockSlices block_slices(const Digraph& d, const WeightAssignment& w, const ArcBlock& b) {
    const std::size_t s = b.arcs.size();
    const std::size_t n = static_cast<std::size_t>(d.vertex_count());
    BlockSlices out{Matrix<Scalar>(s, s), Matrix<Scalar>(s, n), Matrix<Scalar>(n, s)};
    for (std::size_t i = 0; i < s; ++i) {
        const ArcId a = b.arcs[i];
        const auto ia = static_cast<std::size_t>(a);
        for (std::size_t j = 0; j < s; ++j) {
            const ArcId c = b.arcs[j];
            if (d.in_inverse_set(a, c))
                out.J(i, j) = w.upsilon1[ia] * w.upsilon2[static_cast<std::size_t>(c)];
        }
        out.K(i, static_cast<std::size_t>(d.arc(a).head)) = w.tau1[ia];
        out.L(static_cast<std::size_t>(d.arc(a).tail), i) = w.tau2[ia];
    }
    return out;
}

namespace {

// 1 - upsilon(arc[a]) upsilon(a^-1) t^2 for one block.
Polynomial block_denominator(const WeightAssignment& w, const ArcBlock& b) {
    const Scalar mu1 = upsilon_sum(w, b.bracket_arcs());
    const Scalar mu2 = upsilon_sum(w, b.inverse_arcs());
    return Polynomial::one() - Polynomial::monomial(mu1 * mu2, 2);
}

}  // namespace

BlockT block_T(const Digraph& d, const WeightAssignment& w, const ArcPartition& p) {
    if (!w.covers(d.arc_count()))
        throw std::invalid_argument("block_T: weights do not cover the arc set");
    BlockT out;
    out.det = Polynomial::one();
    out.block_dets.reserve(p.blocks.size());
    for (const ArcBlock& b : p.blocks) {
        Polynomial det_block;
        if (b.self_inverse) {
            // Rank-one block J(A_ww): det(I + tJ) = 1 + upsilon(A_ww) t.
            det_block = Polynomial::one() + Polynomial::monomial(upsilon_sum(w, b.arcs), 1);
        } else {
            det_block = block_denominator(w, b);
        }
        out.det *= det_block;
        out.block_dets.push_back(std::move(det_block));
    }
    return out;
}

IharaMatrices ihara_matrices(const Digraph& d, const WeightAssignment& w,
                             const ArcPartition& p) {
    if (!w.covers(d.arc_count()))
        throw std::invalid_argument("ihara_matrices: weights do not cover the arc set");
    const std::size_t n = static_cast<std::size_t>(d.vertex_count());
    IharaMatrices out{Matrix<Scalar>(n, n), Matrix<RationalFunction>(n, n),
                      Matrix<RationalFunction>(n, n)};
    for (const ArcBlock& b : p.blocks) {
        const BlockSlices s = block_slices(d, w, b);
        const Polynomial q = block_denominator(w, b);
        const Matrix<Scalar> lk = s.L * s.K;
        const Matrix<Scalar> jk = s.J * s.K;
        const Matrix<Scalar> ljk = s.L * jk;
        const Matrix<Scalar> lj2k = s.L * (s.J * jk);
        out.A += lk;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!ljk(i, j).is_zero())
                    out.D(i, j) += RationalFunction(Polynomial(ljk(i, j)), q);
                if (!lj2k(i, j).is_zero())
                    out.X(i, j) += RationalFunction(Polynomial(lj2k(i, j)), q);
            }
    }
    return out;
}

Polynomial ihara_inverse_zeta(const Digraph& d, const WeightAssignment& w,
                              const ArcPartition& p) {
    const std::size_t n = static_cast<std::size_t>(d.vertex_count());
    const IharaMatrices im = ihara_matrices(d, w, p);
    const BlockT t = block_T(d, w, p);

    const Polynomial t1 = Polynomial::t();
    const Polynomial t2 = t1 * t1;
    const Polynomial t3 = t2 * t1;
    Matrix<RationalFunction> core(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalFunction entry = -RationalFunction(t1 * Polynomial(im.A(i, j)));
            entry += RationalFunction(t2) * im.D(i, j);
            entry -= RationalFunction(t3) * im.X(i, j);
            if (i == j) entry += RationalFunction::one();
            core(i, j) = entry;
        }

    RationalFunction value = RationalFunction(t.det) * determinant(std::move(core));
    if (!value.is_polynomial())
        throw std::logic_error(
            "ihara_inverse_zeta: value failed to collapse to a polynomial");
    return value.num();
}

Polynomial ihara_inverse_zeta(const Digraph& d, const WeightAssignment& w) {
    return ihara_inverse_zeta(d, w, arc_partition(d));
}

TheoremReport compose_theorem_report(Polynomial hashimoto, Polynomial ihara,
                                     Polynomial det_t, TruncatedSeries exponential,
                                     TruncatedSeries euler, int order) {
    TheoremReport r{order,
                    std::move(hashimoto),
                    std::move(ihara),
                    std::move(det_t),
                    std::move(exponential),
                    std::move(euler),
                    false,
                    false,
                    std::nullopt};
    r.determinants_match = r.hashimoto == r.ihara;
    const TruncatedSeries recip =
        reciprocal(TruncatedSeries::from_polynomial(r.hashimoto, order));
    r.series_match = r.exponential.agrees_with(r.euler) &&
                     r.exponential.agrees_with(recip);

    if (!r.determinants_match || !r.series_match) {
        const int top = std::max({r.hashimoto.degree(), r.ihara.degree(), order});
        for (int k = 0; k <= top && !r.first_divergence; ++k) {
            bool diverges = r.hashimoto.coeff(static_cast<std::size_t>(k)) !=
                            r.ihara.coeff(static_cast<std::size_t>(k));
            if (k <= order) {
                diverges = diverges || r.exponential.coeff(k) != r.euler.coeff(k) ||
                           r.exponential.coeff(k) != recip.coeff(k);
            }
            if (diverges) r.first_divergence = k;
        }
    }
    return r;
}

TheoremReport verify_theorem(const Digraph& d, const WeightAssignment& w, int order,
                             std::size_t cap) {
    return compose_theorem_report(
        hashimoto_inverse_zeta(d, w), ihara_inverse_zeta(d, w),
        block_T(d, w, arc_partition(d)).det, exponential_expression(d, w, order),
        euler_expression(d, w, order, cap), order);
}

}  // namespace graphzeta
