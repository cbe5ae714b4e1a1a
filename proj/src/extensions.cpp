#include "clark/extensions.hpp"

#include <cmath>

namespace clark {

QuasiDiffSpec QuasiDiffSpec::q0(int n, Domain dom) {
    QuasiDiffSpec s;
    s.n = n;
    s.q = Matrix::Zero(n, n);
    for (int r = 0; r + 1 < n; ++r) s.q(r, r + 1) = 1.0;
    s.domain = dom;
    return s;
}

void QuasiDiffSpec::validate() const {
    if (n < 1 || q.rows() != n || q.cols() != n) throw DimensionError("QuasiDiffSpec: Q must be n x n");
    require_finite(q, "QuasiDiffSpec");
    for (int r = 0; r < n; ++r)
        for (int s = r + 2; s < n; ++s)
            if (q(r, s) != Complex(0.0)) throw DomainError("QuasiDiffSpec: entries above the superdiagonal must vanish");
    for (int r = 0; r + 1 < n; ++r)
        if (q(r, r + 1) == Complex(0.0)) throw DomainError("QuasiDiffSpec: superdiagonal entries must be nonzero");
}

BoundaryMatrices BoundaryMatrices::standard(Matrix beta_a, Matrix beta_b) {
    const int n = static_cast<int>(beta_a.rows());
    return {std::move(beta_a), std::move(beta_b), extensions::standard_c(n)};
}

namespace extensions {

namespace {
const Complex i_ = I_unit;
}

Matrix standard_c(int n) {
    if (n < 1) throw DimensionError("standard_c: n >= 1");
    Matrix c = Matrix::Zero(n, n);
    // 1-based: C_{k,l} = (-1)^(l+1) when k = n+1-l.
    for (int l = 1; l <= n; ++l) c(n - l, l - 1) = (l % 2 == 1) ? 1.0 : -1.0;
    return c;
}

Matrix sturm_liouville_j() {
    Matrix j(2, 2);
    j << 0.0, -1.0, 1.0, 0.0;
    return j;
}

ExpSum quasi_derivative(const ExpSum& f, const QuasiDiffSpec& spec, int r) {
    if (spec.q_of_x) throw UnsupportedError("quasi_derivative: non-constant coefficients are not evaluated natively");
    spec.validate();
    if (r < 0 || r > spec.n) throw DomainError("quasi_derivative: order out of range");
    if (!(f.domain() == spec.domain)) throw DomainError("quasi_derivative: domain mismatch");
    std::vector<ExpSum> tower{f};
    for (int k = 1; k <= r; ++k) {
        // 0-based row k-1 of Q; q_{n,n+1} = 1.
        ExpSum acc = tower[k - 1].derivative(1);
        for (int s = 1; s <= k; ++s) {
            const Complex qrs = spec.q(k - 1, s - 1);
            if (qrs != Complex(0.0)) acc = acc - tower[s - 1].scaled(qrs);
        }
        const Complex sup = k < spec.n ? spec.q(k - 1, k) : Complex(1.0);
        tower.push_back(acc.scaled(1.0 / sup));
    }
    return tower[r];
}

Vector boundary_vector(const ExpSum& f, double x, const QuasiDiffSpec& spec) {
    Vector v(spec.n);
    for (int r = 0; r < spec.n; ++r) v(r) = quasi_derivative(f, spec, r)(x);
    return v;
}

Complex lagrange_bracket_values(const Vector& f, const Vector& g) {
    const auto n = f.size();
    if (g.size() != n) throw DimensionError("lagrange_bracket: length mismatch");
    if (n % 2 != 0) throw UnsupportedError("lagrange_bracket: odd order is not supported");
    Complex sum = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
        const double sgn = ((n + 1 - r) % 2 == 0) ? 1.0 : -1.0;
        sum += sgn * std::conj(g(n - r - 1)) * f(r);
    }
    return ((n / 2) % 2 == 0 ? 1.0 : -1.0) * sum;
}

Complex lagrange_bracket(const ExpSum& f, const ExpSum& g, double x, const QuasiDiffSpec& spec) {
    if (spec.n % 2 != 0) throw UnsupportedError("lagrange_bracket: odd order is not supported");
    return lagrange_bracket_values(boundary_vector(f, x, spec), boundary_vector(g, x, spec));
}

bool validate_sa_matrices(const BoundaryMatrices& bm) {
    const auto n = bm.beta_a.rows();
    if (n < 1 || bm.beta_a.cols() != n || bm.beta_b.rows() != n || bm.beta_b.cols() != n || bm.c.rows() != n ||
        bm.c.cols() != n)
        throw DimensionError("validate_sa_matrices: matrices must be square of equal size");
    Matrix stacked(n, 2 * n);
    stacked << bm.beta_a, bm.beta_b;
    Eigen::JacobiSVD<Matrix> svd(stacked);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0)) return false;
    for (Eigen::Index k = 0; k < n; ++k)
        if (!(sv(k) > 1e-10 * sv(0))) return false;
    const Matrix lhs = bm.beta_a * bm.c * bm.beta_a.adjoint();
    const Matrix rhs = bm.beta_b * bm.c * bm.beta_b.adjoint();
    return (lhs - rhs).norm() <= 1e-10 * std::max(1.0, sv(0) * sv(0));
}

PerturbationParameter alpha_from_bc_k1(Complex b, Complex c) {
    require_finite(b, "alpha_from_bc_k1");
    require_finite(c, "alpha_from_bc_k1");
    const double nrm = std::hypot(std::abs(b), std::abs(c));
    if (nrm == 0.0) throw DomainError("alpha_from_bc_k1: (b, c) = (0, 0)");
    b /= nrm;
    c /= nrm;
    if (std::abs((b * std::conj(c)).imag()) > 1e-10) throw DomainError("alpha_from_bc_k1: b conj(c) is not real");
    const Complex sq_p = std::polar(1.0, M_PI / 4.0);   // sqrt(i)
    const Complex sq_m = std::polar(1.0, -M_PI / 4.0);  // sqrt(-i)
    const Complex den = b - c * sq_p;
    if (std::abs(den) < 1e-14) throw DomainError("alpha_from_bc_k1: vanishing denominator");
    // The L^2 vector of the +i defect space has derivative rate i sqrt(i) = -sqrt(-i).
    return PerturbationParameter::scalar((b - c * sq_m) / den);
}

RobinBC bc_from_alpha_k1(Complex alpha) {
    if (std::abs(std::abs(alpha) - 1.0) > 1e-10) throw NonUnitaryError("bc_from_alpha_k1: alpha must be unimodular");
    Complex b = alpha * std::polar(1.0, M_PI / 4.0) - std::polar(1.0, -M_PI / 4.0);
    Complex c = alpha - 1.0;
    const double nrm = std::hypot(std::abs(b), std::abs(c));
    b /= nrm;
    c /= nrm;
    const Complex ph = std::abs(c) > 1e-14 ? std::conj(c) / std::abs(c) : std::conj(b) / std::abs(b);
    return {b * ph, c * ph};
}

PerturbationParameter alpha_from_bc_l1(Complex beta, double a) {
    if (!(a > 0.0)) throw DomainError("alpha_from_bc_l1: a must be positive");
    if (std::abs(std::abs(beta) - 1.0) > 1e-10) throw DomainError("alpha_from_bc_l1: beta must be unimodular");
    const double e = std::exp(-2.0 * a);
    return PerturbationParameter::scalar((beta * e - 1.0) / (beta - e));
}

Complex bc_from_alpha_l1(Complex alpha, double a) {
    if (!(a > 0.0)) throw DomainError("bc_from_alpha_l1: a must be positive");
    if (std::abs(std::abs(alpha) - 1.0) > 1e-10) throw NonUnitaryError("bc_from_alpha_l1: alpha must be unimodular");
    const double e = std::exp(-2.0 * a);
    return (alpha * e - 1.0) / (alpha - e);
}

std::vector<ExpSum> generators(const ModelId& m, const Matrix& alpha) {
    const DefectBasis plus = defect::orthonormal_defect_basis(m, +1);
    const DefectBasis minus = defect::orthonormal_defect_basis(m, -1);
    const auto n = static_cast<Eigen::Index>(plus.functions.size());
    if (alpha.rows() != n || alpha.cols() != n) throw DimensionError("generators: alpha has the wrong size");
    std::vector<ExpSum> g;
    for (Eigen::Index i = 0; i < n; ++i) {
        ExpSum acc = plus.functions[i].scaled(-1.0);
        for (Eigen::Index j = 0; j < n; ++j) acc = acc + minus.functions[j].scaled(alpha(i, j));
        g.push_back(acc);
    }
    return g;
}

Matrix solve_alpha_system(const Matrix& u, const Matrix& v) {
    const auto d = v.rows();
    const auto n = v.cols();
    if (u.rows() != d || u.cols() != n || d != n) throw DimensionError("solve_alpha_system: size mismatch");
    // Unknown vec(alpha) with index i*n + j; equation (i, r): sum_j alpha_ij v(r, j) = u(r, i).
    Matrix k = Matrix::Zero(n * n, n * n);
    Vector rhs(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index j = 0; j < n; ++j) k(i * d + r, i * n + j) = v(r, j);
            rhs(i * d + r) = u(r, i);
        }
    Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0) || sv(sv.size() - 1) < 1e-10 * sv(0)) throw RankError("alpha system is rank-deficient");
    const Vector x = svd.solve(rhs);
    Matrix alpha(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) alpha(i, j) = x(i * n + j);
    return alpha;
}

namespace {

QuasiDiffSpec model_spec(const ModelId& m) { return QuasiDiffSpec::q0(m.order(), defect::model_domain(m)); }

PerturbationParameter checked_alpha(const Matrix& alpha) {
    if (!cplane::is_unitary(alpha, 1e-8)) throw NonUnitaryError("solved alpha is not unitary: boundary data inconsistent");
    return PerturbationParameter(alpha, 1e-8);
}

void require_regular(const ModelId& m) {
    if (m.half_line()) throw DomainError("regular-endpoint solver needs an interval model (L1 or L2)");
}

}  // namespace

PerturbationParameter alpha_from_bc_regular(const ModelId& m, const BoundaryMatrices& bm) {
    require_regular(m);
    const int n = m.order();
    if (bm.beta_a.rows() != n || bm.beta_a.cols() != n || bm.beta_b.rows() != n || bm.beta_b.cols() != n)
        throw DimensionError("alpha_from_bc_regular: boundary matrices must be order x order");
    if (m.rank() != n) throw UnsupportedError("alpha_from_bc_regular: deficiency index differs from the order");
    Matrix stacked(n, 2 * n);
    stacked << bm.beta_a, bm.beta_b;
    Eigen::JacobiSVD<Matrix> svd(stacked);
    if (svd.singularValues()(n - 1) <= 1e-10 * svd.singularValues()(0)) throw RankError("rank(beta_a | beta_b) < n");

    const QuasiDiffSpec spec = model_spec(m);
    const DefectBasis plus = defect::orthonormal_defect_basis(m, +1);
    const DefectBasis minus = defect::orthonormal_defect_basis(m, -1);
    auto apply = [&](const ExpSum& f) -> Vector {
        return bm.beta_a * boundary_vector(f, -m.a, spec) + bm.beta_b * boundary_vector(f, m.a, spec);
    };
    Matrix u(n, n), v(n, n);
    for (int i = 0; i < n; ++i) {
        u.col(i) = apply(plus.functions[i]);
        v.col(i) = apply(minus.functions[i]);
    }
    return checked_alpha(solve_alpha_system(u, v));
}

BoundaryMatrices bc_from_alpha_regular(const ModelId& m, const Matrix& alpha) {
    require_regular(m);
    if (!cplane::is_unitary(alpha, 1e-8)) throw NonUnitaryError("bc_from_alpha_regular: alpha must be unitary");
    const int n = m.order();
    if (m.rank() != n) throw UnsupportedError("bc_from_alpha_regular: deficiency index differs from the order");
    const QuasiDiffSpec spec = model_spec(m);
    const auto gens = generators(m, alpha);
    Matrix stack(2 * n, n);
    for (int i = 0; i < n; ++i) {
        stack.block(0, i, n, 1) = boundary_vector(gens[i], -m.a, spec);
        stack.block(n, i, n, 1) = boundary_vector(gens[i], m.a, spec);
    }
    Eigen::JacobiSVD<Matrix> svd(Matrix(stack.adjoint()), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(n - 1) <= 1e-10 * sv(0)) throw RankError("bc_from_alpha_regular: generator boundary data degenerate");
    // Null space of stack^*: trailing right singular vectors; rows are their adjoints.
    Matrix rows(n, 2 * n);
    for (int k = 0; k < n; ++k) rows.row(k) = svd.matrixV().col(n + k).adjoint();
    return BoundaryMatrices::standard(rows.leftCols(n), rows.rightCols(n));
}

PerturbationParameter alpha_from_bc_singular_template(const ModelId& m, const BoundaryMatrices& bm,
                                                      const BracketData& br, const Matrix& e) {
    if (!m.half_line()) throw DomainError("singular template applies to K1 or K2");
    const int d = m.rank();
    const int ord = m.order();
    const auto mcount = e.cols();
    if (bm.beta_a.rows() != d || bm.beta_a.cols() != ord) throw DimensionError("template: beta_a must be rank x order");
    if (e.rows() != d || br.plus.rows() != d || br.minus.rows() != d || br.plus.cols() != mcount ||
        br.minus.cols() != mcount)
        throw DimensionError("template: bracket data / e have inconsistent sizes");
    const Matrix ebar = e.conjugate();
    if (bm.beta_b.size() != 0 && (bm.beta_b.rows() != d || bm.beta_b.cols() != mcount || (bm.beta_b - ebar).norm() > 1e-10))
        throw DomainError("template: beta_b must equal conj(e)");
    Matrix stacked(d, ord + mcount);
    stacked << bm.beta_a, ebar;
    Eigen::JacobiSVD<Matrix> svd(stacked);
    if (!(svd.singularValues()(0) > 0.0) || svd.singularValues()(d - 1) <= 1e-10 * svd.singularValues()(0))
        throw RankError("template: (beta_a | beta_b) is rank-deficient");

    const QuasiDiffSpec spec = model_spec(m);
    const DefectBasis plus = defect::orthonormal_defect_basis(m, +1);
    const DefectBasis minus = defect::orthonormal_defect_basis(m, -1);
    Matrix u(d, d), v(d, d);
    for (int i = 0; i < d; ++i) {
        u.col(i) = bm.beta_a * boundary_vector(plus.functions[i], 0.0, spec) + ebar * br.plus.row(i).transpose();
        v.col(i) = bm.beta_a * boundary_vector(minus.functions[i], 0.0, spec) + ebar * br.minus.row(i).transpose();
    }
    return checked_alpha(solve_alpha_system(u, v));
}

}  // namespace extensions
}  // namespace clark
