#include "gfw/pauli.hpp"

#include "gfw/rotations.hpp"

namespace gfw {

void require_same_ordering(const Ordering& a, const Ordering& b) {
    if (a != b) fail(Errc::MixedOrdering, "operands indexed by different orderings");
}

OperatorMatrix identity_op(const Ordering& ord) {
    return {Eigen::MatrixXcd::Identity(ord.dim(), ord.dim()), ord};
}

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_ordering(a.ord, b.ord);
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "matrix product");
    return {a.mat * b.mat, a.ord};
}

OperatorMatrix adjoint(const OperatorMatrix& a) { return {a.mat.adjoint(), a.ord}; }

Cx trace_product(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_ordering(a.ord, b.ord);
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "trace product");
    return (a.mat.cwiseProduct(b.mat.transpose())).sum();
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const OperatorMatrix& u) {
    Eigen::MatrixXcd g = u.mat * u.mat.adjoint();
    return max_abs(g - Eigen::MatrixXcd::Identity(u.dim(), u.dim()));
}

StateVector basis_ket(FieldElement alpha, const Ordering& ord) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(ord.dim());
    v(ord.index(alpha)) = 1.0;
    return {v, ord};
}

StateVector apply(const OperatorMatrix& a, const StateVector& v) {
    require_same_ordering(a.ord, v.ord);
    if (a.dim() != v.dim()) fail(Errc::DimensionMismatch, "operator application");
    return {a.mat * v.amps, a.ord};
}

StateVector normalized(const StateVector& v) {
    double n = v.amps.norm();
    if (n < 1e-12) fail(Errc::NormZero, "cannot normalize the zero vector");
    return {v.amps / n, v.ord};
}

DensityMatrix density_from_state(const StateVector& v) {
    return {v.amps * v.amps.adjoint(), v.ord};
}

bool is_physical(const DensityMatrix& rho, double tol) {
    if (max_abs(rho.mat - rho.mat.adjoint()) > tol) return false;
    if (std::abs(rho.mat.trace() - Cx(1.0, 0.0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat);
    return es.eigenvalues().minCoeff() > -tol;
}

OperatorMatrix build_Z(FieldElement alpha, const Ordering& ord) {
    const FieldSpec& spec = *alpha.field;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int i = 0; i < spec.d; ++i) {
        int a = ord.element_at[i];
        m(i, i) = UnitPhase::make(spec.character_exponent(spec.mul_id(a, alpha.id)),
                                  spec.phase_den())
                      .value();
    }
    return {m, ord};
}

OperatorMatrix build_X(FieldElement beta, const Ordering& ord) {
    const FieldSpec& spec = *beta.field;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int j = 0; j < spec.d; ++j) {
        int a = ord.element_at[j];
        m(ord.index_of[spec.add_id(a, beta.id)], j) = 1.0;
    }
    return {m, ord};
}

OperatorMatrix build_fourier(const FieldSpec& spec, const Ordering& ord) {
    double scale = 1.0 / std::sqrt(static_cast<double>(spec.d));
    Eigen::MatrixXcd m(spec.d, spec.d);
    for (int i = 0; i < spec.d; ++i)
        for (int j = 0; j < spec.d; ++j) {
            int prod = spec.mul_id(ord.element_at[i], ord.element_at[j]);
            m(i, j) = UnitPhase::make(spec.character_exponent(prod), spec.phase_den()).value() *
                      scale;
        }
    return {m, ord};
}

StateVector conjugate_ket(FieldElement alpha, const Ordering& ord) {
    const FieldSpec& spec = *alpha.field;
    double scale = 1.0 / std::sqrt(static_cast<double>(spec.d));
    Eigen::VectorXcd v(spec.d);
    for (int i = 0; i < spec.d; ++i) {
        int prod = spec.mul_id(ord.element_at[i], alpha.id);
        v(i) = UnitPhase::make(spec.character_exponent(prod), spec.phase_den()).value() * scale;
    }
    return {v, ord};
}

UnitPhase phase_phi(const RotationSet& rot, FieldElement tau, FieldElement ups) {
    const FieldSpec& spec = *rot.field;
    require_field(spec, tau);
    require_field(spec, ups);
    if (tau.is_zero() || ups.is_zero()) return UnitPhase::one(spec.phase_den());
    int mu = spec.mul_id(spec.inv_id(tau.id), ups.id);
    return rot.c[mu][tau.id];
}

OperatorMatrix build_displacement(const RotationSet& rot, FieldElement alpha, FieldElement beta,
                                  const Ordering& ord) {
    const FieldSpec& spec = *rot.field;
    Cx phi = phase_phi(rot, alpha, beta).value();
    // D = phi Z_alpha X_beta: column a carries phi * chi((a+beta) alpha) at
    // row a+beta.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int j = 0; j < spec.d; ++j) {
        int a = ord.element_at[j];
        int shifted = spec.add_id(a, beta.id);
        Cx chi = UnitPhase::make(spec.character_exponent(spec.mul_id(shifted, alpha.id)),
                                 spec.phase_den())
                     .value();
        m(ord.index_of[shifted], j) = phi * chi;
    }
    return {m, ord};
}

OperatorMatrix build_parity(const FieldSpec& spec, const Ordering& ord) {
    if (spec.p == 2) fail(Errc::EvenCharacteristic, "parity operator needs p != 2");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int j = 0; j < spec.d; ++j) {
        int a = ord.element_at[j];
        m(ord.index_of[spec.neg_id(a)], j) = 1.0;
    }
    return {m, ord};
}

}  // namespace gfw
