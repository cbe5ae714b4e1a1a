// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "clark/extensions.hpp"
#include "clark/livsic.hpp"
#include "clark/measure.hpp"
#include "clark/models.hpp"
#include "clark/oracle.hpp"

using namespace clark;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Matrix random_unitary(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    Matrix z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    // Remove the phase bias of Householder QR.
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
}

Complex random_upper(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-20.0, 20.0), lim(-3.0, 1.5);
    return {re(rng), std::pow(10.0, lim(rng))};
}

const std::vector<Complex> kL1Alphas{Complex(1.0), Complex(-1.0), I_unit, std::polar(1.0, M_PI / 3)};

BoundaryMatrices dirichlet() {
    Matrix ba = Matrix::Zero(2, 2), bb = Matrix::Zero(2, 2);
    ba(0, 0) = 1.0;
    bb(1, 0) = 1.0;
    return BoundaryMatrices::standard(ba, bb);
}

BoundaryMatrices periodic() {
    const Matrix id = Matrix::Identity(2, 2);
    return BoundaryMatrices::standard(id, -id);
}

bool hermitian_psd(const Matrix& m, double tol) {
    if ((m - m.adjoint()).norm() > tol) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(cplane::hermitian_part(m));
    return es.eigenvalues().minCoeff() >= -tol;
}

// 1. Generic atoms of L1 against the closed-form atom set.
Verdict criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const SchurFunction b = livsic::livsic_function(ModelId::l1(1.0));
    double worst = 0.0;
    bool counts = true;
    for (Complex al : kL1Alphas) {
        const auto ref = models::l1_atoms(al, 1.0, {-10, 10});
        const auto got = measure::scan_atoms(b, PerturbationParameter::scalar(al), ref.front() - 0.5, ref.back() + 0.5,
                                             M_PI / 8.0);
        if (got.size() != ref.size()) {
            counts = false;
            continue;
        }
        for (std::size_t k = 0; k < ref.size(); ++k) worst = std::max(worst, std::abs(got[k] - ref[k]));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {counts && worst <= 1e-8 && secs < 10.0,
            "max |dev| " + fmt("%.3g", worst) + ", " + fmt("%.2f", secs) + " s" + (counts ? "" : ", count mismatch")};
}

// 2. Generic point masses against the closed-form weights.
Verdict criterion2() {
    const double a = 1.0;
    const SchurFunction b = livsic::livsic_function(ModelId::l1(a));
    double worst = 0.0, ratio_lo = INFINITY, ratio_hi = 0.0;
    bool closed_ok = true;
    for (Complex al : kL1Alphas) {
        for (double s : models::l1_atoms(al, a, {-10, 10})) {
            const double pm = measure::point_mass(b, PerturbationParameter::scalar(al), s)(0, 0).real();
            const double w = models::l1_weight(al, a, s);
            worst = std::max(worst, std::abs(pm - w) / std::abs(w));
            ratio_lo = std::min(ratio_lo, pm / w);
            ratio_hi = std::max(ratio_hi, pm / w);
            if (al == Complex(1.0)) {
                const double exact = 2.0 / std::tanh(a) / (a * M_PI * std::pow(1.0 + s * s, 2));
                closed_ok = closed_ok && std::abs(pm - exact) <= 1e-6 * exact;
            }
        }
    }
    return {worst <= 1e-6 && closed_ok, "max rel dev " + fmt("%.3g", worst) + ", point_mass/l1_weight in [" +
                                             fmt("%.4g", ratio_lo) + ", " + fmt("%.4g", ratio_hi) + "]"};
}

// 3. Boundary condition -> alpha -> atoms equals the directly solved spectrum.
Verdict criterion3() {
    const double a = 1.0;
    double worst = 0.0;
    bool sets = true;
    for (int k = 0; k < 16; ++k) {
        const Complex beta = std::polar(1.0, -M_PI + 2.0 * M_PI * k / 16.0);
        const auto direct = oracle::l1_eigenvalues_direct(beta, a, {-10, 10});
        const auto alpha = extensions::alpha_from_bc_l1(beta, a);
        const auto atoms = models::l1_atoms(alpha.alpha()(0, 0), a, {-12, 12});
        std::vector<double> inside;
        for (double s : atoms)
            if (s >= direct.front() - 1e-6 && s <= direct.back() + 1e-6) inside.push_back(s);
        if (inside.size() != direct.size()) {
            sets = false;
            continue;
        }
        for (std::size_t j = 0; j < direct.size(); ++j) worst = std::max(worst, std::abs(inside[j] - direct[j]));
    }
    return {sets && worst <= 1e-8, "max |dev| " + fmt("%.3g", worst) + (sets ? "" : ", set sizes differ")};
}

// 4. Atom masses for alpha = -1 against the Poisson-type series, term by term.
Verdict criterion4() {
    const double a = 1.0;
    const long nmax = 10000;
    const auto atoms = models::l1_atoms(-1.0, a, {-nmax, nmax});
    const double pref = 2.0 * std::tanh(a) / (a * M_PI);
    double worst = 0.0, sum = 0.0;
    for (long n = -nmax; n <= nmax; ++n) {
        const double s = atoms[static_cast<std::size_t>(n + nmax)];
        const double w = models::l1_weight(-1.0, a, s);
        const double term = pref * std::pow(a, 4) / std::pow(a * a + M_PI * M_PI * double(n) * double(n), 2);
        worst = std::max(worst, std::abs(w - term));
        sum += w;
    }
    const double series = models::l1_poisson_series(a, nmax);
    const double sum_dev = std::abs(sum - series);
    return {worst <= 1e-9 && sum_dev <= 1e-9,
            "max term dev " + fmt("%.3g", worst) + ", |sum - series| " + fmt("%.3g", sum_dev)};
}

// 5. K1 density: generic limit against the closed form.
Verdict criterion5() {
    const SchurFunction b = livsic::livsic_function(ModelId::k1());
    double worst = 0.0, zero = 0.0;
    for (Complex al : {Complex(1.0), Complex(-1.0), I_unit}) {
        const PerturbationParameter alpha = PerturbationParameter::scalar(al);
        for (double s : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
            const double g = measure::ac_density(b, alpha, s)(0, 0).real();
            const double c = models::k1_density(al, s);
            worst = std::max(worst, std::abs(g - c) / std::abs(c));
        }
        for (double s : {-5.0, -1.0, 0.0}) zero = std::max(zero, std::abs(measure::ac_density(b, alpha, s)(0, 0)));
    }
    return {worst <= 1e-6 && zero <= 1e-10, "max rel dev " + fmt("%.3g", worst) + ", max |density(s<=0)| " + fmt("%.3g", zero)};
}

// 6. K2 density assembly against the generic pipeline.
Verdict criterion6() {
    std::mt19937_64 rng(606);
    const SchurFunction b = livsic::livsic_function(ModelId::k2());
    double worst = 0.0;
    bool psd = true;
    for (int k = 0; k < 3; ++k) {
        const PerturbationParameter alpha(random_unitary(rng, 2));
        for (double s : {0.1, 0.5, 1.0, 3.0, 10.0}) {
            const Matrix c = models::k2_density(alpha, s);
            const Matrix g = measure::ac_density(b, alpha, s);
            for (Eigen::Index i = 0; i < 2; ++i)
                for (Eigen::Index j = 0; j < 2; ++j) worst = std::max(worst, std::abs(c(i, j) - g(i, j)));
            psd = psd && hermitian_psd(c, 1e-10) && hermitian_psd(g, 1e-10);
        }
    }
    return {worst <= 1e-6 && psd, "max entry dev " + fmt("%.3g", worst) + (psd ? ", Hermitian PSD" : ", not Hermitian PSD")};
}

// 7. L2 atoms against Richardson-extrapolated finite differences.
Verdict criterion7() {
    double worst = 0.0;
    bool counts = true;
    for (double a : {1.0, M_PI / 2}) {
        for (const BoundaryMatrices& bm : {dirichlet(), periodic()}) {
            const double hi = 170.0 / (a * a);
            const auto alpha = extensions::alpha_from_bc_regular(ModelId::l2(a), bm);
            const auto atoms = models::l2_atoms(alpha, a, -1.0, hi);
            const auto fd = oracle::l2_eigenvalues_fd(bm, a, 400, -1.0, hi);
            // Degenerate eigenvalues appear once among the atoms; group the FD values accordingly.
            std::vector<std::vector<double>> clusters;
            for (double v : fd) {
                if (clusters.empty() || v - clusters.back().back() > 0.05) clusters.push_back({});
                clusters.back().push_back(v);
            }
            if (atoms.size() < 5 || clusters.size() < 5) {
                counts = false;
                continue;
            }
            for (int k = 0; k < 5; ++k)
                for (double v : clusters[k]) worst = std::max(worst, std::abs(v - atoms[k]));
        }
    }
    return {counts && worst <= 1e-3, "max |dev| " + fmt("%.3g", worst) + (counts ? "" : ", fewer than 5 eigenvalues")};
}

// 8. Conjugation laws under random unitary (R, Q).
Verdict criterion8() {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> pos(0.2, 5.0);
    double worst = 0.0;
    for (const ModelId& m : {ModelId::k1(), ModelId::k2(), ModelId::l1(1.0), ModelId::l2(1.0)}) {
        const int n = m.rank();
        const SchurFunction b = livsic::livsic_function(m);
        for (int k = 0; k < 10; ++k) {
            const Matrix r = random_unitary(rng, n), q = random_unitary(rng, n);
            const PerturbationParameter alpha(random_unitary(rng, n));
            double res = 0.0;
            if (m.half_line()) {
                res = measure::conjugation_check(b, r, q, alpha, pos(rng), MeasureKind::AC);
            } else {
                // An atom of (R B Q, alpha) is an atom of (B, R* alpha Q*).
                const PerturbationParameter alpha2(r.adjoint() * alpha.alpha() * q.adjoint(), 1e-9);
                const double s = m.kind == ModelKind::L1 ? models::l1_atoms(alpha2.alpha()(0, 0), 1.0, {0, 0})[0]
                                                         : models::l2_atoms(alpha2, 1.0, 0.5, 40.0).at(0);
                res = measure::conjugation_check(b, r, q, alpha, s, MeasureKind::PP);
            }
            worst = std::max(worst, res);
        }
    }
    return {worst <= 1e-6, "max residual " + fmt("%.3g", worst)};
}

// 9. Schur class membership and normalisation.
Verdict criterion9() {
    std::mt19937_64 rng(909);
    double smax = 0.0, at_i = 0.0;
    for (const ModelId& m : {ModelId::k1(), ModelId::k2(), ModelId::l1(1.0), ModelId::l2(1.0)}) {
        const SchurFunction b = livsic::livsic_function(m);
        for (int k = 0; k < 200; ++k) smax = std::max(smax, cplane::sigma_max(b(random_upper(rng))));
        at_i = std::max(at_i, cplane::sigma_max(b(I_unit)));
    }
    return {smax <= 1.0 + 1e-9 && at_i <= 1e-12, "max sigma " + fmt("%.12f", smax) + ", |B(i)| " + fmt("%.3g", at_i)};
}

// 10. Closed-form Gram entries against quadrature.
Verdict criterion10() {
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.2, 3.0);
    double worst = 0.0;
    for (const ModelId& m : {ModelId::k1(), ModelId::k2(), ModelId::l1(1.0), ModelId::l2(1.0)}) {
        for (int k = 0; k < 20; ++k) {
            const Complex w(re(rng), im(rng));
            const DefectBasis raw = defect::defect_basis(m, w);
            for (int sign : {+1, -1}) {
                const DefectBasis onb = defect::orthonormal_defect_basis(m, sign);
                const Matrix cf = models::closed_form_gram(m, w, sign);
                for (Eigen::Index i = 0; i < cf.rows(); ++i)
                    for (Eigen::Index j = 0; j < cf.cols(); ++j) {
                        const Complex q = oracle::quad_inner(raw.functions[i], onb.functions[j]).value;
                        worst = std::max(worst, std::abs(cf(i, j) - q) / std::max(1.0, std::abs(q)));
                    }
            }
        }
    }
    return {worst <= 1e-8, "max dev " + fmt("%.3g", worst)};
}

// 11. Bound state of the K1 Robin extension with ratio 1.
Verdict criterion11() {
    const auto bs = oracle::k1_bound_state_check(1.0, 1.0);
    if (!bs) return {false, "no bound state reported"};
    return {std::abs(bs->location + 1.0) <= 1e-12 && bs->weight > 0.0,
            "location " + fmt("%.15g", bs->location) + ", weight " + fmt("%.6g", bs->weight)};
}

// 12. Self-adjointness conditions on boundary matrices.
Verdict criterion12() {
    std::mt19937_64 rng(1212);
    std::normal_distribution<double> g;
    auto gauss = [&](int r, int c) {
        Matrix z(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) z(i, j) = Complex(g(rng), g(rng));
        return z;
    };
    std::vector<BoundaryMatrices> good{dirichlet(), periodic()};
    {
        // Neumann, Robin and quasi-periodic couplings.
        Matrix ba = Matrix::Zero(2, 2), bb = Matrix::Zero(2, 2);
        ba(0, 1) = 1.0;
        bb(1, 1) = 1.0;
        good.push_back(BoundaryMatrices::standard(ba, bb));
        ba.setZero();
        bb.setZero();
        ba(0, 0) = 1.0;
        ba(0, 1) = 2.0;
        bb(1, 0) = -0.5;
        bb(1, 1) = 1.0;
        good.push_back(BoundaryMatrices::standard(ba, bb));
        const Complex th = std::polar(1.0, 0.7);
        good.push_back(BoundaryMatrices::standard(Matrix::Identity(2, 2), -th * Matrix::Identity(2, 2)));
        Matrix a4 = Matrix::Zero(4, 4), b4 = Matrix::Zero(4, 4);
        a4(0, 0) = 1.0;
        a4(1, 1) = 1.0;
        b4(2, 0) = 1.0;
        b4(3, 1) = 1.0;
        good.push_back(BoundaryMatrices::standard(a4, b4));
        good.push_back(BoundaryMatrices::standard(Matrix::Identity(4, 4), -Matrix::Identity(4, 4)));
    }
    int accepted = 0;
    for (const auto& bm : good) accepted += extensions::validate_sa_matrices(bm);

    int rank_rejected = 0, form_rejected = 0;
    for (int k = 0; k < 20; ++k) {
        // Rank violation: a rank-deficient left factor keeps the form identity.
        const BoundaryMatrices& base = good[static_cast<std::size_t>(k) % 5];
        const Matrix f = gauss(2, 1) * gauss(1, 2);
        rank_rejected += !extensions::validate_sa_matrices(BoundaryMatrices::standard(f * base.beta_a, f * base.beta_b));
        // Form violation: generic full-rank pairs.
        form_rejected += !extensions::validate_sa_matrices(BoundaryMatrices::standard(gauss(2, 2), gauss(2, 2)));
    }
    const bool ok = accepted == static_cast<int>(good.size()) && rank_rejected == 20 && form_rejected == 20;
    return {ok, "accepted " + std::to_string(accepted) + "/" + std::to_string(good.size()) + ", rejected rank " +
                    std::to_string(rank_rejected) + "/20, form " + std::to_string(form_rejected) + "/20"};
}

}  // namespace

int main() {
    const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                         criterion5, criterion6, criterion7,  criterion8,
                                                         criterion9, criterion10, criterion11, criterion12};
    const auto t0 = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Verdict v;
        try {
            v = criteria[k]();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("criterion %2zu: %s  (%s)\n", k + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("total %.1f s, %d of %zu criteria failed\n", secs, failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
