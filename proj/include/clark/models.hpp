#pragma once

#include <vector>

#include "clark/cplane.hpp"
#include "clark/livsic.hpp"
#include "clark/measure.hpp"
#include "clark/model_id.hpp"

namespace clark::models {

// Closed-form Gram matrices A(w, sign*i). Half-line models also accept real w > 0 (boundary values).
Matrix closed_form_gram(const ModelId& m, Complex w, int sign);

// Closed-form Livsic functions: K1 and L1 as explicit quotients, K2 and L2 through the 2x2 adjugate.
Matrix closed_form_livsic(const ModelId& m, Complex w);
SchurFunction closed_form_function(const ModelId& m);

// Gram-Schmidt coefficients of the orthonormal K2 / L2 defect bases at sign*i, row k = k-th vector.
Matrix k2_onb_coefficients(int sign);
Matrix l2_onb_coefficients(double a);

// K1 density from the denominator polynomial D(s); zero for s <= 0.
double k1_denominator(Complex alpha, double s);
double k1_density(Complex alpha, double s);

// K2 density assembled entrywise from M = alpha - B(s), N = I - B*B.
Matrix k2_density(const PerturbationParameter& alpha, double s);

struct IndexRange {
    long lo = 0;
    long hi = 0;
};

// Atoms s = (1/a) atan(q) + n pi / a, q = (conj(alpha)+1)/(conj(alpha)-1) tan(ia).
std::vector<double> l1_atoms(Complex alpha, double a, IndexRange n);
double l1_weight(Complex alpha, double a, double s);

struct ProductSign {
    int sign = 0;
    int negative_factors = 0;
    double value = 0.0;
};
ProductSign l1_nonneg_product_check(Complex alpha, double a, double s, int k);

// (2 tanh(a)/(a pi)) sum_{|n|<=N} a^4/(a^2+pi^2 n^2)^2
double l1_poisson_series(double a, long n_max);

// Atoms of the L2 Clark measure in [lo, hi]; step <= 0 selects pi/(8a).
std::vector<double> l2_atoms(const PerturbationParameter& alpha, double a, double lo, double hi, double step = 0.0);

}  // namespace clark::models
