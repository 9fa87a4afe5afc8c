#include "gfw/tomography.hpp"

#include <cmath>
#include <random>

namespace gfw {

Tomogram tomogram_of(const DensityMatrix& rho, const MubFamily& mubs) {
    require_same_ordering(rho.ord, mubs.ord);
    const FieldSpec& spec = *mubs.field;
    if (rho.dim() != spec.d) fail(Errc::DimensionMismatch, "density vs field");
    Tomogram t;
    t.field = &spec;
    t.provenance = mubs.provenance;
    t.sloped.resize(spec.d, spec.d);
    t.vertical.resize(spec.d);
    for (int mu = 0; mu < spec.d; ++mu)
        for (int nu = 0; nu < spec.d; ++nu) {
            const auto& psi = mubs.sloped[mu][nu];
            t.sloped(mu, nu) = std::real(Cx(psi.amps.adjoint() * rho.mat * psi.amps));
        }
    for (int nu = 0; nu < spec.d; ++nu) {
        const auto& psi = mubs.vertical[nu];
        t.vertical(nu) = std::real(Cx(psi.amps.adjoint() * rho.mat * psi.amps));
    }
    return t;
}

void validate_tomogram(const Tomogram& t, double tol) {
    const int d = t.field->d;
    if (t.sloped.rows() != d || t.sloped.cols() != d || t.vertical.size() != d)
        fail(Errc::IncompleteTomogram, "missing entries");
    for (int mu = 0; mu < d; ++mu) {
        if (std::abs(t.sloped.row(mu).sum() - 1.0) > tol)
            fail(Errc::NonPhysicalState, "sloped basis does not sum to one");
        if (t.sloped.row(mu).minCoeff() < -tol)
            fail(Errc::NonPhysicalState, "negative probability");
    }
    if (std::abs(t.vertical.sum() - 1.0) > tol || t.vertical.minCoeff() < -tol)
        fail(Errc::NonPhysicalState, "vertical family is not a distribution");
}

ReconstructionResult reconstruct(const Tomogram& t, const RotationSet& rot, const Ordering& ord) {
    const FieldSpec& spec = *rot.field;
    if (t.field == nullptr || t.field->d != spec.d)
        fail(Errc::DimensionMismatch, "tomogram vs field");
    if (!t.provenance.empty() && t.provenance != rot.fingerprint())
        fail(Errc::ProvenanceMismatch, "tomogram recorded under a different rotation set");
    const int d = spec.d;
    const int L = spec.phase_den();

    // Displacement-basis coefficients: kappa != 0 rows from the sloped
    // tomograms, the kappa = 0 row from the vertical family.
    Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(d, d);
    for (int lambda = 0; lambda < d; ++lambda) {
        Cx acc = 0.0;
        for (int kappa = 0; kappa < d; ++kappa)
            acc += t.vertical(kappa) *
                   UnitPhase::make(spec.character_exponent(spec.mul_id(kappa, lambda)), L).value();
        coeff(0, lambda) = acc / static_cast<double>(d);
    }
    for (int kappa = 1; kappa < d; ++kappa)
        for (int lambda = 0; lambda < d; ++lambda) {
            int mu = spec.mul_id(spec.inv_id(kappa), lambda);
            Cx acc = 0.0;
            for (int nu = 0; nu < d; ++nu)
                acc += t.sloped(mu, nu) *
                       UnitPhase::make(-spec.character_exponent(spec.mul_id(kappa, nu)), L)
                           .value();
            coeff(kappa, lambda) = acc / static_cast<double>(d);
        }

    ReconstructionResult out{DensityMatrix{Eigen::MatrixXcd::Zero(d, d), ord}, 0.0, 0.0};
    double f00_vertical = t.vertical.sum() / d;
    for (int mu = 0; mu < d; ++mu)
        out.zero_coeff_spread =
            std::max(out.zero_coeff_spread, std::abs(t.sloped.row(mu).sum() / d - f00_vertical));

    for (int kappa = 0; kappa < d; ++kappa)
        for (int lambda = 0; lambda < d; ++lambda) {
            if (coeff(kappa, lambda) == Cx(0.0, 0.0)) continue;
            out.rho.mat += coeff(kappa, lambda) *
                           build_displacement(rot, spec.element(kappa), spec.element(lambda), ord)
                               .mat;
        }

    Eigen::MatrixXcd anti = out.rho.mat - out.rho.mat.adjoint();
    out.asymmetry = max_abs(anti) / 2.0;
    out.rho.mat = ((out.rho.mat + out.rho.mat.adjoint()) / 2.0).eval();
    return out;
}

Tomogram simulate_counts(const DensityMatrix& rho, const MubFamily& mubs, long long shots,
                         std::uint64_t seed) {
    if (shots < 1) fail(Errc::WrongLength, "shots must be positive");
    if (!is_physical(rho)) fail(Errc::NonPhysicalState, "density matrix is not physical");
    Tomogram exact = tomogram_of(rho, mubs);
    const int d = exact.field->d;

    std::mt19937_64 gen(seed);
    auto uniform = [&gen]() {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1), reproducible
    };
    auto sample_row = [&](const Eigen::VectorXd& probs) {
        Eigen::VectorXd cdf(d);
        double acc = 0.0;
        for (int i = 0; i < d; ++i) {
            acc += std::max(probs(i), 0.0);
            cdf(i) = acc;
        }
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(d);
        for (long long s = 0; s < shots; ++s) {
            double u = uniform() * acc;
            int lo = 0;
            while (lo < d - 1 && u >= cdf(lo)) ++lo;
            counts(lo) += 1.0;
        }
        return (counts / static_cast<double>(shots)).eval();
    };

    Tomogram noisy = exact;
    noisy.shots = shots;
    noisy.seed = seed;
    for (int mu = 0; mu < d; ++mu) noisy.sloped.row(mu) = sample_row(exact.sloped.row(mu));
    noisy.vertical = sample_row(exact.vertical);
    return noisy;
}

DensityMatrix nearest_psd(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((rho.mat + rho.mat.adjoint()) / 2.0);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    double tr = ev.sum();
    if (tr <= 0.0) fail(Errc::NonPhysicalState, "no positive weight left after clipping");
    Eigen::MatrixXcd m =
        es.eigenvectors() * (ev / tr).asDiagonal() * es.eigenvectors().adjoint();
    return {m, rho.ord};
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_ordering(a.ord, b.ord);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(a.mat);
    Eigen::VectorXd ev = ea.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXcd sq = ea.eigenvectors() * ev.asDiagonal() * ea.eigenvectors().adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> em(sq * b.mat * sq);
    double root_sum = em.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return root_sum * root_sum;
}

}  // namespace gfw
