#pragma once

#include <functional>
#include <utility>

#include "clark/cplane.hpp"
#include "clark/defect.hpp"
#include "clark/measure.hpp"
#include "clark/model_id.hpp"

namespace clark {

// Coefficient matrix Q in Z_n(J); only constant entries are evaluated natively.
struct QuasiDiffSpec {
    int n = 2;
    Matrix q;
    Domain domain = Domain::halfline();
    // Set for x-dependent coefficients; quasi_derivative then refuses to run.
    std::function<Matrix(double)> q_of_x;

    // Q^0: ones on the superdiagonal, zero elsewhere.
    static QuasiDiffSpec q0(int n, Domain dom = Domain::halfline());
    void validate() const;
};

struct BoundaryMatrices {
    Matrix beta_a;
    Matrix beta_b;
    Matrix c;

    // C_{k,l} = (-1)^(l+1) delta_{k,n+1-l}.
    static BoundaryMatrices standard(Matrix beta_a, Matrix beta_b);
};

struct RobinBC {
    Complex b;
    Complex c;
};

// Lagrange-bracket data at the singular endpoint: row i holds [phi_i^+/-, u_k](b), k = 1..m.
struct BracketData {
    Matrix plus;
    Matrix minus;
};

namespace extensions {

Matrix standard_c(int n);
// J = [[0,-1],[1,0]] of the Sturm-Liouville case.
Matrix sturm_liouville_j();

ExpSum quasi_derivative(const ExpSum& f, const QuasiDiffSpec& spec, int r);

// (f^[0](x), ..., f^[n-1](x)).
Vector boundary_vector(const ExpSum& f, double x, const QuasiDiffSpec& spec);

Complex lagrange_bracket(const ExpSum& f, const ExpSum& g, double x, const QuasiDiffSpec& spec);
// Same bracket from caller-supplied quasi-derivative values f^[r](x), g^[r](x), r = 0..n-1.
Complex lagrange_bracket_values(const Vector& f, const Vector& g);

bool validate_sa_matrices(const BoundaryMatrices& bm);

// alpha for b f(0) + c f'(0) = 0, with (b : c) read projectively.
PerturbationParameter alpha_from_bc_k1(Complex b, Complex c);
RobinBC bc_from_alpha_k1(Complex alpha);

// alpha for f(a) = beta f(-a).
PerturbationParameter alpha_from_bc_l1(Complex beta, double a);
Complex bc_from_alpha_l1(Complex alpha, double a);

// Generator functions -phi_i^+ + sum_j alpha_ij phi_j^- on the model's orthonormal defect bases.
std::vector<ExpSum> generators(const ModelId& m, const Matrix& alpha);

// Solves sum_j alpha_ij v_j = u_i (both stacked as columns) through the n^2 x n^2 system.
Matrix solve_alpha_system(const Matrix& u, const Matrix& v);

PerturbationParameter alpha_from_bc_regular(const ModelId& m, const BoundaryMatrices& bm);
BoundaryMatrices bc_from_alpha_regular(const ModelId& m, const Matrix& alpha);

// beta_a (rank x order) acts on boundary values at 0, conj(e) (rank x m) on the bracket data.
PerturbationParameter alpha_from_bc_singular_template(const ModelId& m, const BoundaryMatrices& bm,
                                                      const BracketData& brackets, const Matrix& e);

}  // namespace extensions
}  // namespace clark
