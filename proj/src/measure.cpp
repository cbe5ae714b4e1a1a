#include "clark/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clark/parallel.hpp"

namespace clark {

PerturbationParameter::PerturbationParameter(Matrix alpha, double tol) : alpha_(std::move(alpha)) {
    require_square(alpha_, "PerturbationParameter");
    require_finite(alpha_, "PerturbationParameter");
    if (!cplane::is_unitary(alpha_, tol)) throw NonUnitaryError("perturbation parameter is not unitary");
}

namespace {

bool hermitian_psd(const Matrix& m, double tol) {
    if ((m - m.adjoint()).norm() > tol * std::max(1.0, m.norm())) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(cplane::hermitian_part(m));
    return es.eigenvalues().minCoeff() >= -tol;
}

// Symmetrize, refusing results whose anti-Hermitian part is not rounding-sized.
Matrix symmetrized(const Matrix& m, const char* what) {
    const double asym = (m - m.adjoint()).norm();
    if (asym > 1e-6 * std::max(m.norm(), 1e-300) && asym > 1e-14)
        throw ConvergenceError(std::string(what) + ": result far from Hermitian");
    return cplane::hermitian_part(m);
}

Matrix inverse_checked(const Matrix& m, const char* what) {
    Eigen::PartialPivLU<Matrix> lu(m);
    if (!(lu.rcond() > 1e-14)) throw SingularError(std::string(what) + ": matrix numerically singular");
    return lu.inverse();
}

Matrix density_integrand(const Matrix& b, const Matrix& alpha) {
    const auto n = b.rows();
    const Matrix minv = inverse_checked(alpha - b, "ac_density");
    const Matrix nmat = Matrix::Identity(n, n) - b.adjoint() * b;
    return minv.adjoint() * nmat * minv;
}

}  // namespace

void MeasureReport::validate() const {
    if (grid.size() != density.size()) throw DimensionError("MeasureReport: grid/density length mismatch");
    for (const auto& d : density)
        if (!hermitian_psd(d, 1e-10)) throw ToleranceError("MeasureReport: density not Hermitian PSD");
    for (size_t k = 0; k < atoms.size(); ++k) {
        if (!hermitian_psd(atoms[k].weight, 1e-10)) throw ToleranceError("MeasureReport: atom weight not Hermitian PSD");
        if (k > 0 && !(atoms[k].s > atoms[k - 1].s)) throw DomainError("MeasureReport: atom locations not increasing");
    }
}

namespace measure {

double detection_eps(const cplane::LimitScheme& scheme) { return scheme.eps(scheme.levels); }

Matrix ac_density(const SchurFunction& b, const PerturbationParameter& alpha, double s,
                  const cplane::LimitScheme& scheme) {
    if (alpha.n() != b.n) throw DimensionError("ac_density: size mismatch");
    const Matrix& al = alpha.alpha();
    const auto lim = cplane::nt_limit([&](Complex w) { return density_integrand(b(w), al); }, s, scheme);
    return symmetrized(lim.value / (M_PI * (1.0 + s * s)), "ac_density");
}

SchurFunction to_disk(const SchurFunction& b) {
    return {b.n, [b](Complex z) { return b(cplane::inv_cayley(z)); }, b.label + "@disk"};
}

Matrix ac_density_disk(const SchurFunction& bd, const PerturbationParameter& alpha, Complex lambda,
                       const cplane::LimitScheme& scheme) {
    if (alpha.n() != bd.n) throw DimensionError("ac_density_disk: size mismatch");
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw DomainError("ac_density_disk: lambda must be unimodular");
    const Matrix& al = alpha.alpha();
    const auto n = al.rows();
    const Matrix id = Matrix::Identity(n, n);
    auto g = [&](double e) {
        const Matrix bz = bd((1.0 - e) * lambda);
        const Matrix left = inverse_checked(id - al * bz.adjoint(), "ac_density_disk");
        const Matrix right = inverse_checked(id - bz * al.adjoint(), "ac_density_disk");
        const Matrix delta2 = id - al * bz.adjoint() * bz * al.adjoint();
        return Matrix(left * delta2 * right);
    };
    return symmetrized(cplane::ladder_limit(g, scheme).value, "ac_density_disk");
}

double atom_indicator(const SchurFunction& b, const PerturbationParameter& alpha, double s,
                      const cplane::LimitScheme& scheme) {
    const Matrix& al = alpha.alpha();
    const auto n = al.rows();
    const Matrix bw = b(Complex(s, detection_eps(scheme)));
    return cplane::sigma_min(Matrix::Identity(n, n) - bw * al.adjoint());
}

Matrix point_mass(const SchurFunction& b, const PerturbationParameter& alpha, double s,
                  const cplane::LimitScheme& scheme) {
    if (alpha.n() != b.n) throw DimensionError("point_mass: size mismatch");
    const Matrix& al = alpha.alpha();
    const auto n = al.rows();
    if (atom_indicator(b, alpha, s, scheme) >= 1e-3) return Matrix::Zero(n, n);
    const Matrix id = Matrix::Identity(n, n);
    auto g = [&](double e) {
        const Matrix bw = b(Complex(s, e));
        Eigen::PartialPivLU<Matrix> lu(id - bw * al.adjoint());
        // s - w = -i e on the vertical ladder.
        return Matrix(Complex(0.0, -e) * lu.inverse());
    };
    const auto lim = cplane::ladder_limit(g, scheme);
    const double k = 1.0 + s * s;
    const Matrix m = (2.0 * I_unit / (M_PI * k * k)) * lim.value;
    return symmetrized(m, "point_mass");
}

Matrix nevanlinna_h(const SchurFunction& b, const PerturbationParameter& alpha, Complex w) {
    const Matrix& al = alpha.alpha();
    const auto n = al.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix ba = b(w) * al.adjoint();
    return inverse_checked(id - ba, "nevanlinna_h") * (id + ba);
}

std::vector<double> scan_atoms(const SchurFunction& b, const PerturbationParameter& alpha, double lo, double hi,
                               double step, const cplane::LimitScheme& scheme) {
    if (!(lo < hi) || !(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("scan_atoms: invalid window");
    const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
    std::vector<double> xs(count), vals(count);
    for (std::size_t j = 0; j < count; ++j) xs[j] = std::min(lo + static_cast<double>(j) * step, hi);
    auto ind = [&](double s) { return atom_indicator(b, alpha, s, scheme); };
    parallel_for(count, [&](std::size_t j) { vals[j] = ind(xs[j]); });

    std::vector<std::size_t> minima;
    for (std::size_t j = 0; j < count; ++j) {
        const bool left_ok = j == 0 || vals[j] <= vals[j - 1];
        const bool right_ok = j + 1 == count || vals[j] < vals[j + 1];
        if (left_ok && right_ok) minima.push_back(j);
    }
    std::vector<double> found(minima.size());
    std::vector<char> keep(minima.size(), 0);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    parallel_for(minima.size(), [&](std::size_t m) {
        const std::size_t j = minima[m];
        double l = xs[j == 0 ? 0 : j - 1];
        double r = xs[j + 1 == count ? j : j + 1];
        double x1 = r - phi * (r - l), x2 = l + phi * (r - l);
        double f1 = ind(x1), f2 = ind(x2);
        while (r - l > 1e-12 * std::max(1.0, std::abs(l))) {
            if (f1 < f2) {
                r = x2; x2 = x1; f2 = f1;
                x1 = r - phi * (r - l); f1 = ind(x1);
            } else {
                l = x1; x1 = x2; f1 = f2;
                x2 = l + phi * (r - l); f2 = ind(x2);
            }
        }
        const double x = 0.5 * (l + r);
        found[m] = x;
        keep[m] = ind(x) < 1e-3 && x >= lo && x <= hi;
    });
    std::vector<double> out;
    for (std::size_t m = 0; m < found.size(); ++m) {
        if (!keep[m]) continue;
        if (!out.empty() && std::abs(found[m] - out.back()) < 1e-8 * std::max(1.0, std::abs(found[m]))) continue;
        out.push_back(found[m]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double conjugation_check(const SchurFunction& b2, const Matrix& r, const Matrix& q,
                         const PerturbationParameter& alpha, double s, MeasureKind kind,
                         const cplane::LimitScheme& scheme) {
    if (r.rows() != b2.n || q.rows() != b2.n || alpha.n() != b2.n) throw DimensionError("conjugation_check: size mismatch");
    if (!cplane::is_unitary(r, 1e-10) || !cplane::is_unitary(q, 1e-10))
        throw NonUnitaryError("conjugation_check: R and Q must be unitary");
    const SchurFunction b1{b2.n, [b2, r, q](Complex w) { return Matrix(r * b2(w) * q); }, b2.label + "#conj"};
    // The parameter entering B2 has adjoint Q alpha* R.
    const PerturbationParameter alpha2(r.adjoint() * alpha.alpha() * q.adjoint(), 1e-9);
    auto measure = [&](const SchurFunction& b, const PerturbationParameter& al) {
        return kind == MeasureKind::AC ? ac_density(b, al, s, scheme) : point_mass(b, al, s, scheme);
    };
    const Matrix lhs = measure(b1, alpha);
    const Matrix rhs = r * measure(b2, alpha2) * r.adjoint();
    return (lhs - rhs).norm();
}

MeasureReport measure_report(const SchurFunction& b, const PerturbationParameter& alpha,
                             const std::vector<double>& grid, const std::vector<double>& atom_locations,
                             const cplane::LimitScheme& scheme) {
    MeasureReport rep;
    rep.grid = grid;
    rep.density.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t j) { rep.density[j] = ac_density(b, alpha, grid[j], scheme); });
    std::vector<double> locs = atom_locations;
    std::sort(locs.begin(), locs.end());
    rep.atoms.resize(locs.size());
    parallel_for(locs.size(), [&](std::size_t j) { rep.atoms[j] = {locs[j], point_mass(b, alpha, locs[j], scheme)}; });
    return rep;
}

}  // namespace measure
}  // namespace clark
