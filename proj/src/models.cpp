#include "clark/models.hpp"

#include <algorithm>
#include <cmath>

#include "clark/defect.hpp"

namespace clark::models {

namespace {

const Complex i_ = I_unit;
const double sqrt2 = std::sqrt(2.0);

void require_closure_point(Complex w, bool allow_real) {
    require_finite(w, "closed form");
    if (w.imag() < 0.0 || (!allow_real && w.imag() == 0.0)) throw DomainError("closed form: w outside the closed upper half-plane");
    if (w == Complex(0.0, 0.0)) throw DomainError("closed form: w = 0 is a branch point");
}

// 2 sinh(z a)/z with the removable point at z = 0.
Complex sinhc2(Complex z, double a) {
    const Complex za = z * a;
    if (std::abs(za) < 1e-8) return 2.0 * a * (1.0 + za * za / 6.0);
    return 2.0 * std::sinh(za) / z;
}

// Quarter root of sign*i.
Complex quarter_root_i(int sign) { return std::polar(1.0, sign * M_PI / 8.0); }

// Orthonormal K2 rates at sign*i, listed order.
std::vector<Complex> k2_onb_rates(int sign) {
    const Complex r = quarter_root_i(sign);
    return {sign > 0 ? i_ * r : -i_ * r, -r};
}

std::vector<Complex> l2_onb_rates(int sign) {
    const Complex r = std::polar(1.0, sign * M_PI / 4.0);
    return {i_ * r, -i_ * r};
}

Matrix gram_from(const std::vector<Complex>& mu, const std::vector<Complex>& nu, const Matrix& c,
                 bool half_line, double a) {
    Matrix out(2, 2);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Complex v = 0.0;
            for (int m = 0; m < 2; ++m) {
                const Complex z = mu[j] + std::conj(nu[m]);
                v += std::conj(c(k, m)) * (half_line ? -1.0 / z : sinhc2(z, a));
            }
            out(j, k) = v;
        }
    return out;
}

// Explicit 2x2 Livsic value, B = (w - i)/g(w) adj(A(w,i)) A(w,-i) with g = (w + i) det A(w,i).
Matrix livsic_2x2(Complex w, const Matrix& ap, const Matrix& am) {
    const Complex g = (w + i_) * (ap(0, 0) * ap(1, 1) - ap(0, 1) * ap(1, 0));
    if (std::abs(g) == 0.0) throw SingularError("closed form: g(w) = 0");
    Matrix b(2, 2);
    b(0, 0) = ap(1, 1) * am(0, 0) - ap(0, 1) * am(1, 0);
    b(0, 1) = ap(1, 1) * am(0, 1) - ap(0, 1) * am(1, 1);
    b(1, 0) = ap(0, 0) * am(1, 0) - ap(1, 0) * am(0, 0);
    b(1, 1) = ap(0, 0) * am(1, 1) - ap(1, 0) * am(0, 1);
    return ((w - i_) / g) * b;
}

}  // namespace

Matrix k2_onb_coefficients(int sign) {
    // Half-line Gram-Schmidt for two exponentials in closed form.
    const auto nu = k2_onb_rates(sign);
    const double g11 = -1.0 / (2.0 * nu[0].real());
    const double g22 = -1.0 / (2.0 * nu[1].real());
    const Complex g21 = -1.0 / (nu[1] + std::conj(nu[0]));
    Matrix c = Matrix::Zero(2, 2);
    c(0, 0) = 1.0 / std::sqrt(g11);
    c(1, 1) = 1.0 / std::sqrt(g22 - std::norm(g21) / g11);
    c(1, 0) = -c(1, 1) * g21 / g11;
    return c;
}

Matrix l2_onb_coefficients(double a) {
    const double t = sqrt2 * a;
    const double g11 = sqrt2 * std::sinh(t);
    const double g21 = sqrt2 * std::sin(t);
    Matrix c = Matrix::Zero(2, 2);
    c(0, 0) = 1.0 / std::sqrt(g11);
    c(1, 1) = 1.0 / std::sqrt(g11 - g21 * g21 / g11);
    c(1, 0) = -c(1, 1) * g21 / g11;
    return c;
}

Matrix closed_form_gram(const ModelId& m, Complex w, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("closed_form_gram: sign must be +1 or -1");
    switch (m.kind) {
        case ModelKind::K1: {
            require_closure_point(w, true);
            const Complex sw = cplane::principal_sqrt(w);
            const Complex den = sign > 0 ? sw - std::polar(1.0, -M_PI / 4.0) : sw + std::polar(1.0, M_PI / 4.0);
            return Matrix::Constant(1, 1, std::pow(2.0, 0.25) * i_ / den);
        }
        case ModelKind::L1: {
            require_finite(w, "closed form");
            const Complex z = w + double(sign) * i_;
            const Complex v = std::abs(z) < 1e-12 ? Complex(m.a) : std::sin(z * m.a) / z;
            return Matrix::Constant(1, 1, 2.0 * v / std::sqrt(std::sinh(2.0 * m.a)));
        }
        case ModelKind::K2: {
            require_closure_point(w, true);
            const Complex r = cplane::principal_power(w, 1, 4);
            return gram_from({i_ * r, -r}, k2_onb_rates(sign), k2_onb_coefficients(sign), true, 0.0);
        }
        case ModelKind::L2: {
            require_closure_point(w, false);
            const Complex r = cplane::principal_sqrt(w);
            return gram_from({-i_ * r, i_ * r}, l2_onb_rates(sign), l2_onb_coefficients(m.a), false, m.a);
        }
    }
    return {};
}

Matrix closed_form_livsic(const ModelId& m, Complex w) {
    switch (m.kind) {
        case ModelKind::K1: {
            require_closure_point(w, true);
            const Complex sw = cplane::principal_sqrt(w);
            const Complex v = (w - i_) * (sw - Complex(1, -1) / sqrt2) / ((w + i_) * (sw + Complex(1, 1) / sqrt2));
            return Matrix::Constant(1, 1, v);
        }
        case ModelKind::L1: {
            require_finite(w, "closed form");
            const Complex den = std::sin((w + i_) * m.a);
            if (std::abs(den) == 0.0) throw SingularError("L1 closed form: sin((w+i)a) = 0");
            return Matrix::Constant(1, 1, std::sin((w - i_) * m.a) / den);
        }
        case ModelKind::K2:
        case ModelKind::L2:
            return livsic_2x2(w, closed_form_gram(m, w, +1), closed_form_gram(m, w, -1));
    }
    return {};
}

SchurFunction closed_form_function(const ModelId& m) {
    return {m.rank(), [m](Complex w) { return closed_form_livsic(m, w); }, m.name() + "/closed"};
}

double k1_denominator(Complex alpha, double s) {
    const double ar = alpha.real(), ai = alpha.imag();
    const double rs = std::sqrt(std::abs(s));
    return 2.0 * (1.0 - ar) * s * s + 2.0 * std::abs(s) + std::norm(i_ * alpha - 1.0)
         + 2.0 * sqrt2 * (ar - 1.0) * std::abs(s) * rs + 2.0 * (1.0 - ar + ai) * s
         - 2.0 * sqrt2 * (ai + 1.0) * rs;
}

double k1_density(Complex alpha, double s) {
    if (s <= 0.0) return 0.0;
    const Complex rs = std::sqrt(Complex(s, 0.0));
    const double num = 2.0 * std::sqrt(2.0 * s);
    const double den = M_PI * (s + 1.0 + 2.0 * (rs * std::polar(1.0, -M_PI / 4.0)).real()) * k1_denominator(alpha, s);
    return num / den;
}

Matrix k2_density(const PerturbationParameter& alpha, double s) {
    if (alpha.n() != 2) throw DimensionError("k2_density: alpha must be 2x2");
    if (s <= 0.0) return Matrix::Zero(2, 2);
    const Matrix b = closed_form_livsic(ModelId::k2(), Complex(s, 0.0));
    const Matrix mm = alpha.alpha() - b;
    const Complex m11 = mm(0, 0), m12 = mm(0, 1), m21 = mm(1, 0), m22 = mm(1, 1);
    const Complex det = m11 * m22 - m12 * m21;
    if (std::abs(det) < 1e-12) throw SingularError("k2_density: det M vanishes (atom candidate)");
    const Complex b11 = b(0, 0), b12 = b(0, 1), b21 = b(1, 0), b22 = b(1, 1);
    const Complex n11 = 1.0 - std::norm(b11) - std::norm(b21);
    const Complex n12 = -(std::conj(b11) * b12 + std::conj(b21) * b22);
    const Complex n21 = -(b11 * std::conj(b12) + b21 * std::conj(b22));
    const Complex n22 = 1.0 - std::norm(b12) - std::norm(b22);
    auto cj = [](Complex z) { return std::conj(z); };
    Matrix d(2, 2);
    d(0, 0) = std::norm(m22) * n11 - m21 * cj(m22) * n12 - cj(m21) * m22 * n21 + n22 * std::norm(m21);
    d(0, 1) = cj(m22) * (m11 * n12 - m12 * n11) + cj(m21) * (m12 * n21 - m11 * n22);
    d(1, 0) = cj(m12) * (m21 * n12 - m22 * n11) + cj(m11) * (m22 * n21 - m21 * n22);
    d(1, 1) = std::norm(m12) * n11 - m11 * cj(m12) * n12 - cj(m11) * m12 * n21 + n22 * std::norm(m11);
    const double kappa = 1.0 / (M_PI * (1.0 + s * s));
    return cplane::hermitian_part(kappa * d / std::norm(det));
}

std::vector<double> l1_atoms(Complex alpha, double a, IndexRange n) {
    if (!(a > 0.0)) throw DomainError("l1_atoms: a must be positive");
    if (std::abs(std::abs(alpha) - 1.0) > 1e-10) throw NonUnitaryError("l1_atoms: alpha must be unimodular");
    if (n.lo > n.hi) return {};
    const Complex ac = std::conj(alpha);
    double base;
    if (std::abs(ac - 1.0) < 1e-15) {
        base = M_PI / (2.0 * a);
    } else {
        const Complex q = (ac + 1.0) / (ac - 1.0) * std::tan(i_ * a);
        if (std::abs(q.imag()) > 1e-10 * std::max(1.0, std::abs(q)))
            throw DomainError("l1_atoms: atan argument is not real");
        base = std::atan(q.real()) / a;
    }
    std::vector<double> out;
    for (long k = n.lo; k <= n.hi; ++k) out.push_back(base + static_cast<double>(k) * M_PI / a);
    return out;
}

namespace {

bool on_l1_atom_set(Complex alpha, double a, double s) {
    const double base = l1_atoms(alpha, a, {0, 0})[0];
    const double t = (s - base) * a / M_PI;
    return std::abs(t - std::round(t)) * M_PI / a <= 1e-8 * std::max(1.0, std::abs(s));
}

}  // namespace

double l1_weight(Complex alpha, double a, double s) {
    if (!on_l1_atom_set(alpha, a, s)) throw DomainError("l1_weight: s is not an atom");
    const double k = (1.0 + s * s) * (1.0 + s * s);
    if (std::abs(alpha - 1.0) < 1e-12) return 2.0 / std::tanh(a) / (a * M_PI * k);
    if (std::abs(alpha + 1.0) < 1e-12) return 2.0 * std::tanh(a) / (a * M_PI * k);
    if (alpha.imag() == 0.0) throw DomainError("l1_weight: Im(alpha) = 0");
    return -std::sin(2.0 * s * a) / (2.0 * M_PI * a * alpha.imag() * k);
}

ProductSign l1_nonneg_product_check(Complex alpha, double a, double s, int k) {
    if (!(a > 0.0)) throw DomainError("l1_nonneg_product_check: a must be positive");
    if (k < static_cast<int>(std::ceil(2.0 * std::abs(s) * a / M_PI))) throw DomainError("l1_nonneg_product_check: K too small");
    if (std::abs(alpha.imag()) < 1e-14) throw DomainError("l1_nonneg_product_check: Im(alpha) = 0");
    ProductSign out;
    double prod = 1.0;
    for (int j = 1; j <= k; ++j) {
        const double f = 1.0 - std::pow(2.0 * s * a / (j * M_PI), 2);
        if (f < 0.0) ++out.negative_factors;
        prod *= f;
    }
    out.value = -s / (M_PI * alpha.imag() * std::pow(1.0 + s * s, 2)) * prod;
    out.sign = (out.value > 0.0) - (out.value < 0.0);
    return out;
}

double l1_poisson_series(double a, long n_max) {
    double sum = 0.0;
    for (long n = n_max; n >= 1; --n) {
        const double d = a * a + M_PI * M_PI * double(n) * double(n);
        sum += 2.0 * std::pow(a, 4) / (d * d);
    }
    sum += 1.0;
    return 2.0 * std::tanh(a) / (a * M_PI) * sum;
}

std::vector<double> l2_atoms(const PerturbationParameter& alpha, double a, double lo, double hi, double step) {
    if (alpha.n() != 2) throw DimensionError("l2_atoms: alpha must be 2x2");
    if (step <= 0.0) step = M_PI / (8.0 * a);
    return measure::scan_atoms(closed_form_function(ModelId::l2(a)), alpha, lo, hi, step);
}

}  // namespace clark::models
