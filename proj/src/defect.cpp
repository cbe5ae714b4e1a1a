#include "clark/defect.hpp"

#include <cmath>

namespace clark {

Domain Domain::interval(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("interval half-width must be positive");
    return {false, a};
}

ExpSum::ExpSum(Domain dom, std::vector<ExpTerm> terms) : dom_(dom), terms_(std::move(terms)) {
    validate();
}

ExpSum ExpSum::exponential(Domain dom, Complex rate, Complex coef) {
    return ExpSum(dom, {{coef, rate}});
}

void ExpSum::validate() const {
    for (size_t i = 0; i < terms_.size(); ++i) {
        require_finite(terms_[i].coef, "ExpSum coefficient");
        require_finite(terms_[i].rate, "ExpSum rate");
        if (dom_.half_line && !(terms_[i].rate.real() < 0.0))
            throw DomainError("ExpSum on the half-line needs rates with negative real part");
        for (size_t j = 0; j < i; ++j)
            if (terms_[i].rate == terms_[j].rate) throw DomainError("ExpSum rates must be distinct");
    }
}

Complex ExpSum::operator()(double x) const {
    Complex v = 0.0;
    for (const auto& t : terms_) v += t.coef * std::exp(t.rate * x);
    return v;
}

ExpSum ExpSum::derivative(int k) const {
    if (k < 0) throw DomainError("negative derivative order");
    ExpSum out = *this;
    for (auto& t : out.terms_)
        for (int j = 0; j < k; ++j) t.coef *= t.rate;
    return out;
}

ExpSum ExpSum::scaled(Complex c) const {
    ExpSum out = *this;
    for (auto& t : out.terms_) t.coef *= c;
    return out;
}

ExpSum ExpSum::operator+(const ExpSum& o) const {
    if (!(dom_ == o.dom_)) throw DomainError("ExpSum domains differ");
    ExpSum out = *this;
    for (const auto& t : o.terms_) {
        bool merged = false;
        for (auto& u : out.terms_)
            if (u.rate == t.rate) { u.coef += t.coef; merged = true; break; }
        if (!merged) out.terms_.push_back(t);
    }
    return out;
}

namespace defect {

Complex exp_inner_halfline(Complex mu, Complex nu) {
    const Complex z = mu + std::conj(nu);
    if (!(z.real() < 0.0)) throw DivergenceError("exp_inner_halfline: Re(mu + conj(nu)) >= 0");
    return -1.0 / z;
}

Complex exp_inner_interval(Complex mu, Complex nu, double a) {
    if (!(a > 0.0)) throw DomainError("exp_inner_interval: a must be positive");
    const Complex z = mu + std::conj(nu);
    const Complex za = z * a;
    if (std::abs(za) < 1e-8) {
        const Complex z2 = za * za;
        return 2.0 * a * (1.0 + z2 / 6.0 + z2 * z2 / 120.0);
    }
    return 2.0 * std::sinh(za) / z;
}

Complex inner(const ExpSum& f, const ExpSum& g) {
    if (!(f.domain() == g.domain())) throw DomainError("inner: domains differ");
    Complex v = 0.0;
    for (const auto& p : f.terms())
        for (const auto& q : g.terms()) {
            const Complex base = f.domain().half_line ? exp_inner_halfline(p.rate, q.rate)
                                                      : exp_inner_interval(p.rate, q.rate, f.domain().a);
            v += p.coef * std::conj(q.coef) * base;
        }
    return v;
}

Matrix gram(const std::vector<ExpSum>& fs) {
    const auto n = static_cast<Eigen::Index>(fs.size());
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) g(j, k) = inner(fs[j], fs[k]);
    return g;
}

Domain model_domain(const ModelId& m) {
    return m.half_line() ? Domain::halfline() : Domain::interval(m.a);
}

std::vector<Complex> defect_rates(const ModelId& m, Complex w) {
    require_finite(w, "defect_rates");
    if (w.imag() == 0.0) throw DomainError("defect basis needs a non-real point");
    const Complex i = I_unit;
    switch (m.kind) {
        case ModelKind::K1: {
            // mu^2 = -w; keep the root with negative real part.
            const Complex r = cplane::principal_sqrt(w);
            const Complex cand[2] = {i * r, -i * r};
            return {cand[0].real() < 0.0 ? cand[0] : cand[1]};
        }
        case ModelKind::K2: {
            // mu^4 = w; the two roots with negative real part, ordered i r before -r in C+
            // and -i r before -r in C-.
            const Complex r = cplane::principal_power(w, 1, 4);
            std::vector<Complex> out;
            for (Complex c : {i * r, -i * r, -r, r})
                if (c.real() < 0.0) out.push_back(c);
            if (out.size() != 2) throw DomainError("K2: root selection failed");
            return out;
        }
        case ModelKind::L1:
            return {-i * w};
        case ModelKind::L2: {
            const Complex r = cplane::principal_sqrt(w);
            return {-i * r, i * r};
        }
    }
    return {};
}

DefectBasis defect_basis(const ModelId& m, Complex w) {
    DefectBasis b;
    b.model = m;
    b.sign = w.imag() > 0.0 ? +1 : -1;
    b.raw_rates = defect_rates(m, w);
    const Domain dom = model_domain(m);
    const auto n = static_cast<Eigen::Index>(b.raw_rates.size());
    b.coefficients = Matrix::Identity(n, n);
    for (Complex r : b.raw_rates) b.functions.push_back(ExpSum::exponential(dom, r));
    return b;
}

DefectBasis orthonormalize(const DefectBasis& basis) {
    const Matrix g = gram(basis.functions);
    const auto n = g.rows();
    Eigen::JacobiSVD<Matrix> svd(g);
    const auto& sv = svd.singularValues();
    if (!(sv(n - 1) > 0.0) || sv(0) / sv(n - 1) > 1e12) throw RankError("orthonormalize: Gram matrix is singular");
    // Row k of c: coefficients of the k-th orthonormal vector on the input functions.
    Matrix c = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector v = Vector::Zero(n);
        v(k) = 1.0;
        for (Eigen::Index j = 0; j < k; ++j) {
            // <f_k, e_j> = sum_m conj(c_jm) G_km
            Complex proj = 0.0;
            for (Eigen::Index m = 0; m < n; ++m) proj += std::conj(c(j, m)) * g(k, m);
            v -= proj * c.row(j).transpose();
        }
        Complex nrm2 = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = 0; q < n; ++q) nrm2 += v(p) * std::conj(v(q)) * g(p, q);
        if (!(nrm2.real() > 0.0)) throw RankError("orthonormalize: dependent functions");
        c.row(k) = v.transpose() / std::sqrt(nrm2.real());
    }
    DefectBasis out = basis;
    out.onb = true;
    out.coefficients = c * basis.coefficients;
    out.functions.clear();
    for (Eigen::Index k = 0; k < n; ++k) {
        ExpSum acc(basis.functions[0].domain(), {});
        for (Eigen::Index m = 0; m < n; ++m) acc = acc + basis.functions[m].scaled(c(k, m));
        out.functions.push_back(acc);
    }
    return out;
}

DefectBasis orthonormal_defect_basis(const ModelId& m, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    DefectBasis raw = defect_basis(m, Complex(0.0, sign));
    if (m.kind == ModelKind::L2) {
        std::swap(raw.functions[0], raw.functions[1]);
        std::swap(raw.raw_rates[0], raw.raw_rates[1]);
    }
    return orthonormalize(raw);
}

ExpSum apply_expression(const ModelId& m, const ExpSum& f) {
    const int n = m.order();
    static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return f.derivative(n).scaled(ipow[n % 4]);
}

}  // namespace defect
}  // namespace clark
