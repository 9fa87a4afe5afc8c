#ifndef GFW_TENSOR_MAP_HPP
#define GFW_TENSOR_MAP_HPP

#include <vector>

#include "gfw/pauli.hpp"

namespace gfw {

// An abstract field-labelled state re-read as n particles of local dimension
// p. Digit a_1 (the coefficient of the first basis element) is the
// fastest-varying flat index digit: flat = a_1 + a_2 p + ... + a_n p^(n-1).
struct TensorState {
    int p = 2;
    int n = 1;
    Basis basis;
    Eigen::VectorXcd amps;

    int dim() const { return static_cast<int>(amps.size()); }
};

TensorState to_physical(const StateVector& s, const Basis& b);
StateVector from_physical(const TensorState& t, const Ordering& ord);

// Z_{sigma'_i} (dual basis) acts as the single-particle Z in slot i and
// identity elsewhere; checked in exact phase arithmetic. Slots are 1-based.
bool factorize_Z_slot(const FieldSpec& spec, const Basis& b, int slot);

// General factorization Z_beta = Z^{b_1} x ... x Z^{b_n} with exponents from
// the dual-basis expansion of beta.
bool factorize_Z_general(const FieldSpec& spec, const Basis& b, FieldElement beta);

struct ProductCheckResult {
    int schmidt_rank = 0;
    bool product = false;
};

// Schmidt rank across the bipartition given by the slots on side A (1-based).
ProductCheckResult product_check(const TensorState& t, const std::vector<int>& side_a,
                                 double tol = 1e-9);

// H = sum_i E_i |alpha_i><alpha_i| with alpha_i the ordering's i-th element.
OperatorMatrix free_hamiltonian(const FieldSpec& spec, const Ordering& ord,
                                const std::vector<double>& energies);

}  // namespace gfw

#endif
