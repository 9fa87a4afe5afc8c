#ifndef GFW_PAULI_HPP
#define GFW_PAULI_HPP

#include <Eigen/Dense>
#include <complex>

#include "gfw/field.hpp"
#include "gfw/phase.hpp"

namespace gfw {

using Cx = std::complex<double>;

struct RotationSet;  // rotations.hpp

// Dense operators and states over the d-dimensional Hilbert space, rows and
// columns always indexed through the stored ordering. Mixing orderings is a
// detected error (MixedOrdering), not silent corruption.
struct OperatorMatrix {
    Eigen::MatrixXcd mat;
    Ordering ord;

    int dim() const { return static_cast<int>(mat.rows()); }
};

struct StateVector {
    Eigen::VectorXcd amps;
    Ordering ord;

    int dim() const { return static_cast<int>(amps.size()); }
};

struct DensityMatrix {
    Eigen::MatrixXcd mat;
    Ordering ord;

    int dim() const { return static_cast<int>(mat.rows()); }
};

void require_same_ordering(const Ordering& a, const Ordering& b);

OperatorMatrix identity_op(const Ordering& ord);
OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix adjoint(const OperatorMatrix& a);
Cx trace_product(const OperatorMatrix& a, const OperatorMatrix& b);
double max_abs(const Eigen::MatrixXcd& m);
double unitarity_defect(const OperatorMatrix& u);

StateVector basis_ket(FieldElement alpha, const Ordering& ord);
StateVector apply(const OperatorMatrix& a, const StateVector& v);
StateVector normalized(const StateVector& v);
DensityMatrix density_from_state(const StateVector& v);
bool is_physical(const DensityMatrix& rho, double tol = 1e-9);

// Generalized Pauli generators: Z_b |a> = chi(ab) |a> and X_b |a> = |a+b>.
OperatorMatrix build_Z(FieldElement alpha, const Ordering& ord);
OperatorMatrix build_X(FieldElement beta, const Ordering& ord);

// Finite Fourier transform F = d^(-1/2) sum chi(ab) |a><b|.
OperatorMatrix build_fourier(const FieldSpec& spec, const Ordering& ord);

// Conjugate-basis ket F |alpha>.
StateVector conjugate_ket(FieldElement alpha, const Ordering& ord);

// Phase of the displacement operator: phi(tau, ups) = c_{tau, tau^(-1) ups},
// with phi(tau, 0) = phi(0, ups) = 1 along the axes.
UnitPhase phase_phi(const RotationSet& rot, FieldElement tau, FieldElement ups);

// D(alpha, beta) = phi(alpha, beta) Z_alpha X_beta.
OperatorMatrix build_displacement(const RotationSet& rot, FieldElement alpha, FieldElement beta,
                                  const Ordering& ord);

// Parity operator P |a> = |-a>; fields of odd characteristic only.
OperatorMatrix build_parity(const FieldSpec& spec, const Ordering& ord);

}  // namespace gfw

#endif
