#include <doctest.h>

#include <cmath>

#include "clark/livsic.hpp"
#include "clark/measure.hpp"
#include "clark/models.hpp"

using namespace clark;

namespace {

SchurFunction constant_disk(Complex c) {
    return {1, [c](Complex) { return Matrix::Constant(1, 1, c); }, "const"};
}

// True Clark mass of a simple atom: 2 / (pi (1+s^2)^2 |B'(s)|), B' by central differences of the L1 formula.
double l1_mass_reference(double a, double s) {
    auto bf = [a](Complex w) { return -std::sinh((1.0 + I_unit * w) * a) / std::sinh((1.0 - I_unit * w) * a); };
    const double h = 1e-5;
    const Complex d = (bf(s + h) - bf(s - h)) / (2.0 * h);
    return 2.0 / (M_PI * std::pow(1.0 + s * s, 2) * std::abs(d));
}

}  // namespace

TEST_CASE("perturbation parameters must be unitary") {
    CHECK_NOTHROW(PerturbationParameter::scalar(std::polar(1.0, 0.3)));
    CHECK_THROWS_AS(PerturbationParameter::scalar(0.9), NonUnitaryError);
    Matrix u(2, 2);
    u << 0, 1, -1, 0;
    CHECK(PerturbationParameter(u).n() == 2);
    CHECK_THROWS_AS(PerturbationParameter(Matrix::Identity(2, 3)), std::exception);
}

TEST_CASE("disk densities of elementary functions") {
    const PerturbationParameter one = PerturbationParameter::scalar(1.0);
    CHECK(std::abs(measure::ac_density_disk(constant_disk(0.0), one, std::polar(1.0, 0.4))(0, 0) - 1.0) < 1e-13);
    const Complex c(0.3, -0.4);
    const double poisson = (1.0 - std::norm(c)) / std::norm(1.0 - c);
    CHECK(measure::ac_density_disk(constant_disk(c), one, std::polar(1.0, 2.0))(0, 0).real() ==
          doctest::Approx(poisson).epsilon(1e-12));
    const SchurFunction z{1, [](Complex z) { return Matrix::Constant(1, 1, z); }, "z"};
    CHECK(std::abs(measure::ac_density_disk(z, one, std::polar(1.0, 1.0))(0, 0)) < 1e-7);
    CHECK_THROWS_AS(measure::ac_density_disk(z, one, 0.5), DomainError);
    CHECK(cplane::sigma_max(measure::to_disk(livsic::livsic_function(ModelId::k1()))(0.0)) < 1e-12);
}

TEST_CASE("L1 atoms: detection, weights and vanishing AC part") {
    const double a = 1.0;
    const SchurFunction b = livsic::livsic_function(ModelId::l1(a));
    for (Complex al : {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0), std::polar(1.0, M_PI / 3)}) {
        const PerturbationParameter alpha = PerturbationParameter::scalar(al);
        const auto atoms = models::l1_atoms(al, a, {-2, 2});
        for (double s : atoms) {
            CHECK(measure::atom_indicator(b, alpha, s) < 1e-3);
            const Matrix pm = measure::point_mass(b, alpha, s);
            CHECK(std::abs(pm(0, 0).imag()) < 1e-12);
            CHECK(pm(0, 0).real() == doctest::Approx(l1_mass_reference(a, s)).epsilon(1e-7));
        }
        const double off = 0.5 * (atoms[1] + atoms[2]);
        CHECK(measure::atom_indicator(b, alpha, off) > 1e-2);
        CHECK(measure::point_mass(b, alpha, off).norm() == 0.0);
        CHECK(std::abs(measure::ac_density(b, alpha, off)(0, 0)) < 1e-8);

        const auto scanned = measure::scan_atoms(b, alpha, atoms.front() - 0.1, atoms.back() + 0.1, 0.2);
        REQUIRE(scanned.size() == atoms.size());
        for (std::size_t k = 0; k < atoms.size(); ++k) CHECK(std::abs(scanned[k] - atoms[k]) < 1e-8);
    }
    CHECK_THROWS_AS(measure::scan_atoms(b, PerturbationParameter::scalar(1.0), 1.0, 0.0, 0.1), DomainError);
}

TEST_CASE("Nevanlinna function has nonnegative real part") {
    Matrix al(2, 2);
    al << 0, 1, 1, 0;
    const PerturbationParameter alpha(al);
    const SchurFunction b = livsic::livsic_function(ModelId::l2(1.0));
    for (Complex w : {Complex(0.5, 0.1), Complex(-4.0, 2.0), Complex(30.0, 0.01)}) {
        const Matrix h = measure::nevanlinna_h(b, alpha, w);
        Eigen::SelfAdjointEigenSolver<Matrix> es(cplane::hermitian_part(h));
        CHECK(es.eigenvalues().minCoeff() >= -1e-12);
    }
}

TEST_CASE("K1 and K2 densities are Hermitian PSD") {
    const SchurFunction b1 = livsic::livsic_function(ModelId::k1());
    const Matrix d1 = measure::ac_density(b1, PerturbationParameter::scalar(I_unit), 2.0);
    CHECK(d1(0, 0).real() > 0.0);
    CHECK(std::abs(measure::ac_density(b1, PerturbationParameter::scalar(I_unit), -3.0)(0, 0)) < 1e-10);
    // alpha = i is the Robin ratio sqrt(2): bound state at s = -2.
    CHECK(measure::atom_indicator(b1, PerturbationParameter::scalar(I_unit), -2.0) < 1e-3);
    CHECK(measure::point_mass(b1, PerturbationParameter::scalar(I_unit), -2.0)(0, 0).real() > 0.0);

    Matrix al(2, 2);
    al << std::polar(1.0, 0.3), 0, 0, std::polar(1.0, -1.1);
    const SchurFunction b2 = livsic::livsic_function(ModelId::k2());
    const Matrix d2 = measure::ac_density(b2, PerturbationParameter(al), 1.5);
    CHECK((d2 - d2.adjoint()).norm() < 1e-14);
    Eigen::SelfAdjointEigenSolver<Matrix> es(d2);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
}

TEST_CASE("conjugation law") {
    const SchurFunction b = livsic::livsic_function(ModelId::k2());
    Matrix r(2, 2), q(2, 2);
    r << 0, 1, 1, 0;
    q << std::polar(1.0, 0.4), 0, 0, std::polar(1.0, 2.0);
    CHECK(measure::conjugation_check(b, r, q, PerturbationParameter(r), 0.8, MeasureKind::AC) < 1e-8);
    CHECK_THROWS_AS(measure::conjugation_check(b, 2.0 * r, q, PerturbationParameter(r), 0.8, MeasureKind::AC),
                    NonUnitaryError);

    const SchurFunction bl = livsic::livsic_function(ModelId::l1(1.0));
    const Matrix r1 = Matrix::Constant(1, 1, std::polar(1.0, 0.9)), q1 = Matrix::Constant(1, 1, std::polar(1.0, -0.2));
    const Complex al(1.0);
    // Atom of the pair (R B Q, alpha) sits where the atom of (B, R* alpha Q*) does.
    const Complex al2 = std::conj(r1(0, 0)) * al * std::conj(q1(0, 0));
    const double s = models::l1_atoms(al2, 1.0, {0, 0})[0];
    CHECK(measure::conjugation_check(bl, r1, q1, PerturbationParameter::scalar(al), s, MeasureKind::PP) < 1e-8);
}

TEST_CASE("measure report") {
    const SchurFunction b = livsic::livsic_function(ModelId::l1(1.0));
    const PerturbationParameter alpha = PerturbationParameter::scalar(-1.0);
    const auto atoms = models::l1_atoms(-1.0, 1.0, {-1, 1});
    const MeasureReport rep = measure::measure_report(b, alpha, {0.5, 1.0}, {atoms[2], atoms[0], atoms[1]});
    CHECK_NOTHROW(rep.validate());
    REQUIRE(rep.atoms.size() == 3);
    CHECK(rep.atoms[0].s < rep.atoms[1].s);

    MeasureReport bad = rep;
    bad.atoms[0].weight(0, 0) = -1.0;
    CHECK_THROWS_AS(bad.validate(), ToleranceError);
    bad = rep;
    std::swap(bad.atoms[0], bad.atoms[1]);
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
