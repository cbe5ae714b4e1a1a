#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clark/cplane.hpp"
#include "clark/model_id.hpp"

namespace clark {

struct SchurFunction {
    int n = 1;
    std::function<Matrix(Complex)> eval;
    std::string label = "custom";

    Matrix operator()(Complex w) const { return eval(w); }
};

namespace livsic {

// A(w, sign*i): entry (j,k) = <psi_j(w), psi~_k(sign*i)>.
Matrix gram_matrix(const ModelId& m, Complex w, int sign);

// B(w) = gamma(w) A(w,i)^-1 A(w,-i) from given Gram matrices.
Matrix livsic_from_gram(Complex w, const Matrix& a_plus, const Matrix& a_minus);

Matrix livsic_eval(const ModelId& m, Complex w);

// Generic Gram-matrix pipeline wrapped as a Schur function.
SchurFunction livsic_function(const ModelId& m);

bool equivalent_under(const SchurFunction& b1, const SchurFunction& b2, const Matrix& r, const Matrix& q,
                      const std::vector<Complex>& samples, double tol);

}  // namespace livsic
}  // namespace clark
