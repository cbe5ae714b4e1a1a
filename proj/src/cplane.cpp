#include "clark/cplane.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace clark {

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite complex value");
}

void require_finite(const Matrix& m, const char* what) {
    for (Eigen::Index i = 0; i < m.size(); ++i) require_finite(m.data()[i], what);
}

void require_square(const Matrix& m, const char* what) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": expected a non-empty square matrix");
}

namespace cplane {

Complex cayley(Complex w) {
    require_finite(w, "cayley");
    if (w == -I_unit) throw DomainError("cayley: w = -i");
    return (w - I_unit) / (w + I_unit);
}

Complex inv_cayley(Complex z) {
    require_finite(z, "inv_cayley");
    if (z == Complex(1.0, 0.0)) throw DomainError("inv_cayley: z = 1");
    return I_unit * (1.0 + z) / (1.0 - z);
}

Complex principal_power(Complex w, int num, int den) {
    require_finite(w, "principal_power");
    if (den == 0) throw DomainError("principal_power: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    if (w == Complex(0.0, 0.0)) {
        if (num < 0) throw DomainError("principal_power: 0 to a negative power");
        return num == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    const double p = static_cast<double>(num) / den;
    // std::arg returns values in [-pi, pi]; -pi only occurs for a signed zero imaginary part.
    double theta = std::arg(w);
    if (theta == -M_PI) theta = M_PI;
    const double r = std::pow(std::abs(w), p);
    return std::polar(r, p * theta);
}

Complex principal_sqrt(Complex w) { return principal_power(w, 1, 2); }

double LimitScheme::eps(int k) const { return std::ldexp(eps0, -k); }

LimitResult ladder_limit(const std::function<Matrix(double)>& g, const LimitScheme& scheme) {
    if (scheme.levels < 1 || scheme.eps0 <= 0.0 || scheme.max_order < 1)
        throw DomainError("ladder_limit: invalid scheme");
    const int order = scheme.max_order;
    std::vector<Matrix> prev, cur;
    double fscale = 0.0;
    LimitResult best;
    best.error = std::numeric_limits<double>::infinity();
    int hits = 0;
    for (int k = 0; k <= scheme.levels; ++k) {
        Matrix fk = g(scheme.eps(k));
        require_finite(fk, "ladder_limit");
        fscale = std::max(fscale, fk.norm());
        cur.assign(1, fk);
        const int jmax = std::min(k, order);
        for (int j = 1; j <= jmax; ++j) {
            const double r = std::pow(2.0, j * scheme.exponent_step);
            cur.push_back((r * cur[j - 1] - prev[j - 1]) / (r - 1.0));
        }
        if (k >= 1) {
            const int j = std::min(k - 1, order);
            const double err = (cur[j] - prev[j]).norm();
            const double scale = std::max(cur[j].norm(), fscale);
            if (err < best.error) {
                best.value = cur[j];
                best.error = err;
                best.levels_used = k + 1;
            }
            if (err <= scheme.rel_tol * scale || scale == 0.0) {
                if (++hits >= 2) return best;
            } else {
                hits = 0;
            }
        }
        prev.swap(cur);
    }
    const double scale = std::max(best.value.norm(), fscale);
    if (best.error <= scheme.rel_tol * scale) return best;
    std::ostringstream os;
    os << "ladder_limit: no convergence, best error " << best.error << " at scale " << scale;
    throw ConvergenceError(os.str());
}

LimitResult nt_limit(const MatrixFunction& f, double s, const LimitScheme& scheme) {
    if (!std::isfinite(s)) throw DomainError("nt_limit: non-finite s");
    return ladder_limit([&](double e) { return f(Complex(s, e)); }, scheme);
}

double sigma_max(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double sigma_min(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

double unitarity_residual(const Matrix& m) {
    require_square(m, "unitarity_residual");
    const Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return sigma_max(d);
}

bool is_unitary(const Matrix& m, double tol) { return unitarity_residual(m) <= tol; }

bool is_contraction(const Matrix& m, double tol) {
    require_square(m, "is_contraction");
    return sigma_max(m) <= 1.0 + tol;
}

bool is_c_symmetric(const Matrix& m, const Matrix& c, double tol) {
    require_square(m, "is_c_symmetric");
    require_square(c, "is_c_symmetric");
    if (m.rows() != c.rows()) throw DimensionError("is_c_symmetric: size mismatch");
    Eigen::JacobiSVD<Matrix> svd(c);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-14 * sv(0)) throw SingularError("is_c_symmetric: C not invertible");
    const Matrix d = m + c.inverse() * m.adjoint() * c;
    return sigma_max(d) <= tol;
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace cplane
}  // namespace clark
