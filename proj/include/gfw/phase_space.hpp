#ifndef GFW_PHASE_SPACE_HPP
#define GFW_PHASE_SPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfw/rotations.hpp"

namespace gfw {

// ---------------------------------------------------------------------------
// Finite geometry of the d x d phase grid.

struct PhasePoint {
    FieldElement alpha;  // horizontal coordinate
    FieldElement beta;   // vertical coordinate
};

struct Line {
    enum class Kind { Sloped, Vertical };
    Kind kind = Kind::Sloped;
    FieldElement slope;      // beta = slope * alpha + intercept (Sloped)
    FieldElement intercept;  // alpha = intercept (Vertical)

    static Line sloped(FieldElement mu, FieldElement nu) {
        return Line{Kind::Sloped, mu, nu};
    }
    static Line vertical(FieldElement nu) { return Line{Kind::Vertical, nu, nu}; }
};

struct Striation {
    bool vertical = false;
    FieldElement slope;  // meaningful when not vertical
    std::vector<Line> lines;
};

struct Intersection {
    enum class Kind { Point, Parallel, Identical };
    Kind kind;
    PhasePoint point;  // valid for Kind::Point
};

std::vector<PhasePoint> line_points(const Line& line);
Intersection intersect(const Line& a, const Line& b);

// The d+1 striations: one per slope plus the vertical one.
std::vector<Striation> striation_table(const FieldSpec& spec);

// Displacement labels (alpha, beta) on the ray of a striation, origin excluded.
std::vector<std::pair<FieldElement, FieldElement>> ray_operator_labels(const FieldSpec& spec,
                                                                       const Striation& s);

// ---------------------------------------------------------------------------
// Hermitian kernel and the Wigner map.

struct KernelSet {
    RotationSet rot;
    Ordering ord;
    std::string provenance;
    std::vector<OperatorMatrix> delta;  // [ia * d + ib]

    const OperatorMatrix& at(int ia, int ib) const {
        return delta[static_cast<size_t>(ia) * ord.dim() + ib];
    }
    const FieldSpec& field() const { return *rot.field; }
};

// Materializes all d^2 phase-point operators. The parallel flag selects the
// OpenMP path; the serial path is the reference the tests compare against.
KernelSet build_kernel(const RotationSet& rot, const Ordering& ord, bool parallel = true);

struct WignerGrid {
    Eigen::MatrixXd values;  // (alpha axis index, beta axis index)
    Ordering ord;
    std::string provenance;
    double max_imag = 0.0;  // largest imaginary part discarded by the map

    double at(FieldElement alpha, FieldElement beta) const {
        return values(ord.index(alpha), ord.index(beta));
    }
};

WignerGrid wigner_map(const OperatorMatrix& f, const KernelSet& k);
WignerGrid wigner_map(const DensityMatrix& rho, const KernelSet& k);
OperatorMatrix inverse_map(const WignerGrid& w, const KernelSet& k);

// Row/column sums of the grid; divided by d these are the conjugate- and
// position-basis probabilities.
Eigen::VectorXd marginal_alpha(const WignerGrid& w);
Eigen::VectorXd marginal_beta(const WignerGrid& w);

// ---------------------------------------------------------------------------
// Mutually unbiased bases, one per striation.

struct MubFamily {
    const FieldSpec* field = nullptr;
    Ordering ord;
    std::string provenance;
    std::vector<std::vector<StateVector>> sloped;  // [mu id][nu id]
    std::vector<StateVector> vertical;             // [nu id]
    // Eigenvalue of Z_alpha X_{mu alpha} on |psi_nu^mu>, per alpha.
    std::vector<std::vector<std::vector<UnitPhase>>> eigenphases;  // [mu][nu][alpha id]
    std::vector<std::vector<UnitPhase>> vertical_eigenphases;      // [nu][beta id]
};

MubFamily build_mubs(const RotationSet& rot, const Ordering& ord);

// (1/d) * sum of the grid over the points of a line.
double line_sum(const WignerGrid& w, const Line& line);

struct LineIdentityReport {
    double max_violation = 0.0;
};

// Checks (1/d) sum_line W = <psi|rho|psi> for every line, vertical included.
LineIdentityReport verify_line_identity(const DensityMatrix& rho, const KernelSet& k,
                                        const MubFamily& mubs);

// ---------------------------------------------------------------------------
// Direct Wigner formulas (independent of the kernel code path).

// W_rho(alpha, beta) = (1/d) sum_{gamma,mu,nu} chi(gamma(nu-beta) + alpha(nu-mu))
//                      phi(gamma, nu-mu) rho_{mu,nu}
WignerGrid wigner_of_density(const DensityMatrix& rho, const RotationSet& rot);

// Wigner function of the net shifted by h (h(0) = 0): the phase of D(gamma, .)
// acquires chi(-gamma h(gamma^(-1) delta)).
WignerGrid alternate_wigner(const DensityMatrix& rho, const RotationSet& rot,
                            const std::vector<int>& h_by_id);

// ---------------------------------------------------------------------------
// Enumeration of the d^(d-1) shift functions and their distinct grids.

struct DistinctWignerReport {
    long long total = 0;  // d^(d-1)
    int distinct = 0;
    std::vector<std::vector<int>> representatives;  // lexicographically smallest h per class
    std::vector<long long> class_sizes;
    std::optional<long long> condition_count;  // (nw1)/(nw2) certificate, char-2 real states
};

DistinctWignerReport count_distinct_wigner(const StateVector& state, const RotationSet& rot,
                                           bool parallel = true, double tol = 1e-9);

// Class count predicted by the trace conditions alone; char-2 fields and
// real-amplitude pure states only.
std::optional<long long> condition_based_count(const StateVector& state, const FieldSpec& spec);

// ---------------------------------------------------------------------------
// Covariant transforms of the grid under V, U and S (odd characteristic).

enum class SymplecticOp { RotationV, RotationU, SqueezeS };

struct CovarianceReport {
    double max_deviation = 0.0;
    double composite_deviation = 0.0;  // S via alternating V and U
};

CovarianceReport covariant_transform_check(const DensityMatrix& rho, const KernelSet& k,
                                           SymplecticOp which, FieldElement param);

// Fits the constant c in Tr(fg) = c * sum W_f W_g on seeded random Hermitian
// pairs; reported rather than assumed.
double verified_overlap_constant(const KernelSet& k, std::uint64_t seed);

}  // namespace gfw

#endif
