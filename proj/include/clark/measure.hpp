#pragma once

#include <vector>

#include "clark/cplane.hpp"
#include "clark/livsic.hpp"

namespace clark {

class PerturbationParameter {
public:
    explicit PerturbationParameter(Matrix alpha, double tol = 1e-10);
    static PerturbationParameter scalar(Complex a) { return PerturbationParameter(Matrix::Constant(1, 1, a)); }

    const Matrix& alpha() const { return alpha_; }
    int n() const { return static_cast<int>(alpha_.rows()); }

private:
    Matrix alpha_;
};

struct Atom {
    double s = 0.0;
    Matrix weight;
};

struct MeasureReport {
    std::vector<double> grid;
    std::vector<Matrix> density;
    std::vector<Atom> atoms;

    // Hermitian PSD densities and weights (to 1e-10), strictly increasing atom locations.
    void validate() const;
};

enum class MeasureKind { AC, PP };

namespace measure {

// Ladder point used for atom detection: the bottom of the default ladder.
double detection_eps(const cplane::LimitScheme& scheme = {});

// Density of the absolutely continuous part at real s.
Matrix ac_density(const SchurFunction& b, const PerturbationParameter& alpha, double s,
                  const cplane::LimitScheme& scheme = {});

// Disk-side density at unimodular lambda under radial approach r*lambda, r -> 1.
Matrix ac_density_disk(const SchurFunction& b_disk, const PerturbationParameter& alpha, Complex lambda,
                       const cplane::LimitScheme& scheme = {});

// b(zeta) = B(inv_cayley(zeta)).
SchurFunction to_disk(const SchurFunction& b);

// sigma_min(I - B(s + i eps) alpha*) at eps = detection_eps.
double atom_indicator(const SchurFunction& b, const PerturbationParameter& alpha, double s,
                      const cplane::LimitScheme& scheme = {});

// Point mass at s; zero when the indicator is at least 1e-3.
Matrix point_mass(const SchurFunction& b, const PerturbationParameter& alpha, double s,
                  const cplane::LimitScheme& scheme = {});

// (I - B alpha*)^-1 (I + B alpha*), diagnostic only.
Matrix nevanlinna_h(const SchurFunction& b, const PerturbationParameter& alpha, Complex w);

// Grid scan of the atom indicator on [lo, hi] with golden-section refinement of each local minimum.
std::vector<double> scan_atoms(const SchurFunction& b, const PerturbationParameter& alpha, double lo, double hi,
                               double step, const cplane::LimitScheme& scheme = {});

// || measure(R B2 Q, alpha) - R measure(B2, R* alpha Q*) R* ||
double conjugation_check(const SchurFunction& b2, const Matrix& r, const Matrix& q,
                         const PerturbationParameter& alpha, double s, MeasureKind kind,
                         const cplane::LimitScheme& scheme = {});

MeasureReport measure_report(const SchurFunction& b, const PerturbationParameter& alpha,
                             const std::vector<double>& grid, const std::vector<double>& atom_locations,
                             const cplane::LimitScheme& scheme = {});

}  // namespace measure
}  // namespace clark
