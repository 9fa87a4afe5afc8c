#include "gfw/tensor_map.hpp"

#include <algorithm>

namespace gfw {

TensorState to_physical(const StateVector& s, const Basis& b) {
    const FieldSpec& spec = *b.field;
    if (s.dim() != spec.d) fail(Errc::BasisMismatch, "state dimension vs basis field");
    TensorState t{spec.p, spec.n, b, Eigen::VectorXcd::Zero(spec.d)};
    for (int id = 0; id < spec.d; ++id) {
        auto digits = expand(spec.element(id), b);
        int flat = 0, w = 1;
        for (int j = 0; j < spec.n; ++j) {
            flat += digits[j] * w;
            w *= spec.p;
        }
        t.amps(flat) = s.amps(s.ord.index_of[id]);
    }
    return t;
}

StateVector from_physical(const TensorState& t, const Ordering& ord) {
    const FieldSpec& spec = *t.basis.field;
    if (t.dim() != spec.d) fail(Errc::BasisMismatch, "tensor state vs basis field");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.d);
    for (int flat = 0; flat < spec.d; ++flat) {
        std::vector<int> digits(spec.n);
        int x = flat;
        for (int j = 0; j < spec.n; ++j) {
            digits[j] = x % spec.p;
            x /= spec.p;
        }
        v(ord.index_of[combine(digits, t.basis).id]) = t.amps(flat);
    }
    return {v, ord};
}

bool factorize_Z_slot(const FieldSpec& spec, const Basis& b, int slot) {
    if (slot < 1 || slot > spec.n) fail(Errc::WrongLength, "slot out of range");
    Basis dual = dual_basis(b);
    FieldElement sp = dual.elements[slot - 1];
    for (int id = 0; id < spec.d; ++id) {
        FieldElement beta = spec.element(id);
        int lhs = trace(sp * beta);
        int rhs = expand(beta, b)[slot - 1];
        if (lhs % spec.p != rhs % spec.p) return false;
    }
    return true;
}

bool factorize_Z_general(const FieldSpec& spec, const Basis& b, FieldElement beta) {
    require_field(spec, beta);
    Basis dual = dual_basis(b);
    auto exps = expand(beta, dual);
    for (int id = 0; id < spec.d; ++id) {
        FieldElement alpha = spec.element(id);
        auto digits = expand(alpha, b);
        int rhs = 0;
        for (int j = 0; j < spec.n; ++j) rhs += exps[j] * digits[j];
        if (trace(beta * alpha) % spec.p != ((rhs % spec.p) + spec.p) % spec.p) return false;
    }
    return true;
}

ProductCheckResult product_check(const TensorState& t, const std::vector<int>& side_a,
                                 double tol) {
    const int n = t.n, p = t.p;
    std::vector<bool> in_a(n, false);
    for (int slot : side_a) {
        if (slot < 1 || slot > n) fail(Errc::WrongLength, "slot out of range");
        in_a[slot - 1] = true;
    }
    int na = static_cast<int>(std::count(in_a.begin(), in_a.end(), true));
    if (na == 0 || na == n) fail(Errc::WrongLength, "cut must be a proper bipartition");

    int da = 1, db = 1;
    for (int j = 0; j < n; ++j) (in_a[j] ? da : db) *= p;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(da, db);
    for (int flat = 0; flat < t.dim(); ++flat) {
        int x = flat, ai = 0, bi = 0, wa = 1, wb = 1;
        for (int j = 0; j < n; ++j) {
            int digit = x % p;
            x /= p;
            if (in_a[j]) {
                ai += digit * wa;
                wa *= p;
            } else {
                bi += digit * wb;
                wb *= p;
            }
        }
        m(ai, bi) = t.amps(flat);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++rank;
    return {rank, rank == 1};
}

OperatorMatrix free_hamiltonian(const FieldSpec& spec, const Ordering& ord,
                                const std::vector<double>& energies) {
    if (static_cast<int>(energies.size()) != spec.d)
        fail(Errc::WrongLength, "need one energy per level");
    for (size_t i = 1; i < energies.size(); ++i)
        if (energies[i] < energies[i - 1])
            fail(Errc::NotSorted, "energies must be non-decreasing");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int i = 0; i < spec.d; ++i) m(i, i) = energies[i];
    return {m, ord};
}

}  // namespace gfw
