#ifndef GFW_ROTATIONS_HPP
#define GFW_ROTATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gfw/pauli.hpp"

namespace gfw {

// The full table of rotation-operator eigenphases c_{kappa,mu} together with
// its provenance: every set is stored as (canonical set, shift h), where
// h : GF(d) -> GF(d) with h(0) = 0 realizes V_mu X_h(mu). For p = 2 the shift
// encoding and the per-(mu, basis element) sign encoding are interconvertible.
struct RotationSet {
    const FieldSpec* field = nullptr;
    std::optional<Basis> basis;  // construction basis, p = 2 only
    std::vector<int> shift;      // h by element id; all zero for the canonical set
    std::vector<std::vector<UnitPhase>> c;  // c[mu][kappa]

    bool canonical() const {
        for (int v : shift)
            if (v != 0) return false;
        return true;
    }

    UnitPhase phase(FieldElement kappa, FieldElement mu) const {
        return c[mu.id][kappa.id];
    }

    std::string fingerprint() const;
};

// Odd characteristic: c_{kappa,mu} = chi(-2^(-1) kappa^2 mu); the V_mu form an
// Abelian group.
RotationSet canonical_rotation_set_odd(const FieldSpec& spec);

// Even characteristic: principal square roots of chi(sigma_l^2 mu) on the
// basis elements, extended multiplicatively to the rest of the field.
RotationSet canonical_rotation_set_even(const FieldSpec& spec, const Basis& basis);

// Same construction with explicit sign bits per (mu, basis element);
// signs[mu][l] = 1 flips the principal branch.
RotationSet rotation_set_even_with_signs(const FieldSpec& spec, const Basis& basis,
                                         const std::vector<std::vector<int>>& signs);

// The set with V_{mu, h(mu)} = V_mu X_h(mu), i.e. c' = c * chi(-kappa h(mu)).
RotationSet shifted_rotation_set(const RotationSet& rot, const std::vector<int>& h_by_id);

// Sign encoding <-> shift encoding (p = 2): h(mu) = sum_l s_l sigma'_l over the
// dual basis, and s_l = tr(sigma_l h(mu)).
std::vector<std::vector<int>> shift_to_signs(const RotationSet& rot);
std::vector<int> signs_to_shift(const FieldSpec& spec, const Basis& basis,
                                const std::vector<std::vector<int>>& signs);

// V_mu = sum_kappa c_{kappa,mu} |~kappa><~kappa| and its X-shifted variant.
OperatorMatrix build_V(const RotationSet& rot, FieldElement mu, const Ordering& ord);
OperatorMatrix build_V_shifted(const RotationSet& rot, FieldElement mu, FieldElement nu,
                               const Ordering& ord);

// Confirms V_mu^2 = X_{mu^(2^(n-1))} for p = 2 and returns the exponent.
struct SquareLawResult {
    FieldElement exponent;
    double deviation;
};
SquareLawResult verify_square_even(const RotationSet& rot, FieldElement mu, const Ordering& ord);

// Inverse rule for the extended even-characteristic set: (V_{mu,nu})^(-1) =
// V_{mu, mu^(2^(n-1)) + nu}.
FieldElement inverse_shift_even(const RotationSet& rot, FieldElement mu, FieldElement nu);

// The cocycle f(mu, mu') with V_mu V_mu' = V_{mu+mu'} X_{f(mu,mu')}, p = 2.
struct CocycleTable {
    const FieldSpec* field = nullptr;
    std::vector<int> f;  // [mu * d + mu'] -> element id

    FieldElement at(FieldElement mu, FieldElement mu_prime) const {
        return FieldElement{field, f[mu.id * field->d + mu_prime.id]};
    }
};
CocycleTable cocycle(const RotationSet& rot);

// U_mu = F V_mu F^dag, diagonal in the position basis.
OperatorMatrix build_U(const RotationSet& rot, FieldElement mu, const Ordering& ord);

// Squeezing operator S_xi = sum_kappa |kappa><xi kappa|, xi != 0.
OperatorMatrix build_S(const FieldSpec& spec, FieldElement xi, const Ordering& ord);

}  // namespace gfw

#endif
