#pragma once

#include <vector>

#include "clark/cplane.hpp"
#include "clark/model_id.hpp"

namespace clark {

struct Domain {
    bool half_line = true;
    double a = 0.0;  // interval (-a, a) when !half_line

    static Domain halfline() { return {true, 0.0}; }
    static Domain interval(double a);
    bool operator==(const Domain& o) const { return half_line == o.half_line && a == o.a; }
};

struct ExpTerm {
    Complex coef;
    Complex rate;
};

// Finite sum  sum_k c_k exp(mu_k x)  on a fixed domain.
class ExpSum {
public:
    ExpSum() = default;
    ExpSum(Domain dom, std::vector<ExpTerm> terms);
    static ExpSum exponential(Domain dom, Complex rate, Complex coef = 1.0);

    const Domain& domain() const { return dom_; }
    const std::vector<ExpTerm>& terms() const { return terms_; }

    Complex operator()(double x) const;
    ExpSum derivative(int k = 1) const;
    ExpSum scaled(Complex c) const;
    ExpSum operator+(const ExpSum& o) const;
    ExpSum operator-(const ExpSum& o) const { return *this + o.scaled(-1.0); }

private:
    void validate() const;
    Domain dom_;
    std::vector<ExpTerm> terms_;
};

struct DefectBasis {
    ModelId model;
    int sign = +1;  // +1 for a point of C+, -1 for C-
    std::vector<ExpSum> functions;
    bool onb = false;
    // Row k holds the coefficients of functions[k] on the raw exponentials `raw`.
    Matrix coefficients;
    std::vector<Complex> raw_rates;
};

namespace defect {

Complex exp_inner_halfline(Complex mu, Complex nu);
Complex exp_inner_interval(Complex mu, Complex nu, double a);

// <f, g> = integral of f conj(g) over the common domain.
Complex inner(const ExpSum& f, const ExpSum& g);
Matrix gram(const std::vector<ExpSum>& fs);

Domain model_domain(const ModelId& m);

// Exponential rates of the raw eigenfunction basis at w, in listed order.
std::vector<Complex> defect_rates(const ModelId& m, Complex w);
DefectBasis defect_basis(const ModelId& m, Complex w);
DefectBasis orthonormalize(const DefectBasis& basis);

// Orthonormal basis of the defect space at sign*i by Gram-Schmidt in listed order
// (for L2 the order is swapped so exp(i sqrt(z) x) comes first).
DefectBasis orthonormal_defect_basis(const ModelId& m, int sign);

// i^n f^(n) for the model's expression.
ExpSum apply_expression(const ModelId& m, const ExpSum& f);

}  // namespace defect
}  // namespace clark
