#include "clark/livsic.hpp"

#include <cmath>

#include "clark/defect.hpp"

namespace clark::livsic {

Matrix gram_matrix(const ModelId& m, Complex w, int sign) {
    require_finite(w, "gram_matrix");
    if (!(w.imag() > 0.0)) throw DomainError("gram_matrix: w must lie in the upper half-plane");
    const DefectBasis raw = defect::defect_basis(m, w);
    const DefectBasis onb = defect::orthonormal_defect_basis(m, sign);
    const auto n = static_cast<Eigen::Index>(raw.functions.size());
    Matrix a(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) a(j, k) = defect::inner(raw.functions[j], onb.functions[k]);
    return a;
}

Matrix livsic_from_gram(Complex w, const Matrix& ap, const Matrix& am) {
    require_square(ap, "livsic");
    if (ap.rows() != am.rows() || ap.cols() != am.cols()) throw DimensionError("livsic: Gram size mismatch");
    const Complex gam = cplane::cayley(w);
    const auto n = ap.rows();
    if (n == 1) {
        if (std::abs(ap(0, 0)) == 0.0) throw SingularError("livsic: A(w,i) singular");
        return Matrix::Constant(1, 1, gam * am(0, 0) / ap(0, 0));
    }
    if (n == 2) {
        // Explicit adjugate; g = det A(w,i) * (w+i).
        const Complex det = ap(0, 0) * ap(1, 1) - ap(0, 1) * ap(1, 0);
        const double scale = ap.norm();
        if (std::abs(det) < 1e-14 * scale * scale) throw SingularError("livsic: A(w,i) singular");
        Matrix adj(2, 2);
        adj << ap(1, 1), -ap(0, 1), -ap(1, 0), ap(0, 0);
        return (gam / det) * (adj * am);
    }
    Eigen::PartialPivLU<Matrix> lu(ap);
    const Complex det = lu.determinant();
    if (std::abs(det) < 1e-14 * std::pow(ap.norm(), static_cast<double>(n))) throw SingularError("livsic: A(w,i) singular");
    return gam * lu.solve(am);
}

Matrix livsic_eval(const ModelId& m, Complex w) {
    return livsic_from_gram(w, gram_matrix(m, w, +1), gram_matrix(m, w, -1));
}

SchurFunction livsic_function(const ModelId& m) {
    return {m.rank(), [m](Complex w) { return livsic_eval(m, w); }, m.name()};
}

bool equivalent_under(const SchurFunction& b1, const SchurFunction& b2, const Matrix& r, const Matrix& q,
                      const std::vector<Complex>& samples, double tol) {
    if (b1.n != b2.n || r.rows() != b1.n || q.rows() != b1.n) throw DimensionError("equivalent_under: size mismatch");
    if (!cplane::is_unitary(r, 1e-10) || !cplane::is_unitary(q, 1e-10))
        throw NonUnitaryError("equivalent_under: R and Q must be unitary");
    for (Complex w : samples) {
        if (!(w.imag() > 0.0)) throw DomainError("equivalent_under: samples must lie in C+");
        const Matrix d = b1(w) - r * b2(w) * q;
        if (cplane::sigma_max(d) > tol) return false;
    }
    return true;
}

}  // namespace clark::livsic
