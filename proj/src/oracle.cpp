#include "clark/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "clark/livsic.hpp"
#include "clark/measure.hpp"

namespace clark::oracle {

double halfline_cutoff(const ExpSum& f, const ExpSum& g, int digits) {
    double c = std::numeric_limits<double>::infinity();
    for (const auto& p : f.terms())
        for (const auto& q : g.terms()) c = std::min(c, -(p.rate + std::conj(q.rate)).real());
    if (!(c > 0.0)) throw DivergenceError("quad_inner: integrand does not decay");
    return digits * std::log(10.0) / c;
}

QuadResult quad_inner(const ExpSum& f, const ExpSum& g, const QuadratureSpec& spec) {
    if (!(f.domain() == g.domain())) throw DomainError("quad_inner: domains differ");
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) throw DomainError("quad_inner: tolerances must be positive");
    double lo, hi;
    if (f.domain().half_line) {
        lo = 0.0;
        hi = halfline_cutoff(f, g, spec.halfline_cutoff_digits);
    } else {
        lo = -f.domain().a;
        hi = f.domain().a;
    }
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    auto h = [&](double x) { return f(x) * std::conj(g(x)); };
    double err_re = 0.0, err_im = 0.0;
    const double re = GK::integrate([&](double x) { return h(x).real(); }, lo, hi, 30, spec.rel_tol * 1e-2, &err_re);
    const double im = GK::integrate([&](double x) { return h(x).imag(); }, lo, hi, 30, spec.rel_tol * 1e-2, &err_im);
    QuadResult out{{re, im}, std::hypot(err_re, err_im)};
    if (out.error > spec.abs_tol + spec.rel_tol * std::abs(out.value))
        throw ToleranceError("quad_inner: error estimate above the requested tolerance");
    return out;
}

std::vector<double> l1_eigenvalues_direct(Complex beta, double a, models::IndexRange n) {
    if (!(a > 0.0)) throw DomainError("l1_eigenvalues_direct: a must be positive");
    if (std::abs(std::abs(beta) - 1.0) > 1e-10) throw DomainError("l1_eigenvalues_direct: beta must be unimodular");
    std::vector<double> out;
    const double th = std::arg(beta);
    for (long k = n.lo; k <= n.hi; ++k) out.push_back(-(th + 2.0 * M_PI * double(k)) / (2.0 * a));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class Mat>
std::vector<double> fd_spectrum_impl(const Mat& ba, const Mat& bb, double a, int n_cells) {
    using Scalar = typename Mat::Scalar;
    using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const int n = n_cells;
    const double h = 2.0 * a / n;
    const int m = n - 1;  // interior unknowns f_1..f_{n-1}
    // Boundary rows: E (f_0, f_n)^T + F f_int = 0.
    Dense e(2, 2), f = Dense::Zero(2, m);
    for (int r = 0; r < 2; ++r) {
        e(r, 0) = ba(r, 0) - 3.0 * ba(r, 1) / (2.0 * h);
        e(r, 1) = bb(r, 0) + 3.0 * bb(r, 1) / (2.0 * h);
        f(r, 0) += 4.0 * ba(r, 1) / (2.0 * h);
        f(r, 1) += -ba(r, 1) / (2.0 * h);
        f(r, m - 1) += -4.0 * bb(r, 1) / (2.0 * h);
        f(r, m - 2) += bb(r, 1) / (2.0 * h);
    }
    Eigen::FullPivLU<Dense> lu(e);
    if (!lu.isInvertible()) throw RankError("l2_eigenvalues_fd: boundary rows cannot be eliminated");
    const Dense p = -lu.solve(f);  // (f_0, f_n) = p f_int
    Dense mat = Dense::Zero(m, m);
    const double ih2 = 1.0 / (h * h);
    for (int i = 0; i < m; ++i) {
        mat(i, i) = 2.0 * ih2;
        if (i > 0) mat(i, i - 1) = -ih2;
        if (i + 1 < m) mat(i, i + 1) = -ih2;
    }
    mat.row(0) -= ih2 * p.row(0);
    mat.row(m - 1) -= ih2 * p.row(1);
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> ev;
    if constexpr (std::is_same_v<Scalar, double>) {
        Eigen::EigenSolver<Dense> es(mat, false);
        ev = es.eigenvalues();
    } else {
        Eigen::ComplexEigenSolver<Dense> es(mat, false);
        ev = es.eigenvalues();
    }
    std::vector<double> out;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (std::abs(ev(k).imag()) <= 1e-6 * std::max(1.0, std::abs(ev(k).real()))) out.push_back(ev(k).real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<double> l2_fd_spectrum(const BoundaryMatrices& bm, double a, int grid_points) {
    if (!(a > 0.0)) throw DomainError("l2_eigenvalues_fd: a must be positive");
    if (grid_points < 200) throw DomainError("l2_eigenvalues_fd: grid_points must be at least 200");
    if (bm.beta_a.rows() != 2) throw DimensionError("l2_eigenvalues_fd: 2x2 boundary matrices expected");
    if (!extensions::validate_sa_matrices(bm)) throw RankError("l2_eigenvalues_fd: boundary matrices are not self-adjoint");
    const bool real = bm.beta_a.imag().norm() == 0.0 && bm.beta_b.imag().norm() == 0.0;
    if (real) return fd_spectrum_impl(Eigen::MatrixXd(bm.beta_a.real()), Eigen::MatrixXd(bm.beta_b.real()), a, grid_points);
    return fd_spectrum_impl(bm.beta_a, bm.beta_b, a, grid_points);
}

std::vector<double> l2_eigenvalues_fd(const BoundaryMatrices& bm, double a, int grid_points, double lo, double hi) {
    if (!(lo < hi)) throw DomainError("l2_eigenvalues_fd: empty window");
    const auto coarse = l2_fd_spectrum(bm, a, grid_points);
    const auto fine = l2_fd_spectrum(bm, a, 2 * grid_points);
    // Both spectra are sorted from the bottom, so equal indices carry the same mode.
    std::vector<double> out;
    const std::size_t count = std::min(coarse.size(), fine.size());
    for (std::size_t k = 0; k < count; ++k) {
        const double ext = (4.0 * fine[k] - coarse[k]) / 3.0;
        if (ext >= lo && ext <= hi) out.push_back(ext);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<BoundState> k1_bound_state_check(Complex b, Complex c) {
    const double nrm = std::hypot(std::abs(b), std::abs(c));
    if (nrm == 0.0) throw DomainError("k1_bound_state_check: (b, c) = (0, 0)");
    const PerturbationParameter alpha = extensions::alpha_from_bc_k1(b, c);
    b /= nrm;
    c /= nrm;
    if (std::abs(c) < 1e-14) return std::nullopt;
    const double sigma = (b * std::conj(c)).real() / std::norm(c);
    if (!(sigma > 0.0)) return std::nullopt;
    const double s = -sigma * sigma;
    const Matrix w = measure::point_mass(livsic::livsic_function(ModelId::k1()), alpha, s);
    return BoundState{s, w(0, 0).real()};
}

}  // namespace clark::oracle
