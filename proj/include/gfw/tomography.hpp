#ifndef GFW_TOMOGRAPHY_HPP
#define GFW_TOMOGRAPHY_HPP

#include <cstdint>
#include <optional>

#include "gfw/phase_space.hpp"

namespace gfw {

// Line probabilities omega(mu, nu) = <psi_nu^mu| rho |psi_nu^mu> plus the
// vertical family omega~(kappa) = <~kappa| rho |~kappa>.
struct Tomogram {
    const FieldSpec* field = nullptr;
    Eigen::MatrixXd sloped;    // (mu id, nu id)
    Eigen::VectorXd vertical;  // (kappa id)
    std::optional<long long> shots;
    std::optional<std::uint64_t> seed;
    std::string provenance;  // empty when unknown
};

Tomogram tomogram_of(const DensityMatrix& rho, const MubFamily& mubs);

// Per-basis normalization and nonnegativity within tolerance.
void validate_tomogram(const Tomogram& t, double tol = 1e-9);

struct ReconstructionResult {
    DensityMatrix rho;
    // max |rho - rho^dag| / 2 before the enforced symmetrization
    double asymmetry = 0.0;
    // The (0,0) displacement coefficient is fixed by every sloped basis and by
    // the vertical one; the vertical value is used and the spread reported.
    double zero_coeff_spread = 0.0;
};

ReconstructionResult reconstruct(const Tomogram& t, const RotationSet& rot, const Ordering& ord);

// Idealized finite-shot sampling: each basis is drawn multinomially with a
// deterministic seeded generator; frequencies replace exact probabilities.
Tomogram simulate_counts(const DensityMatrix& rho, const MubFamily& mubs, long long shots,
                         std::uint64_t seed);

// Eigenvalue clipping with trace renormalization.
DensityMatrix nearest_psd(const DensityMatrix& rho);

double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace gfw

#endif
