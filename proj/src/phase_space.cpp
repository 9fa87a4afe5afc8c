#include "gfw/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gfw {

namespace {

const FieldSpec& field_of(const Line& line) { return *line.intercept.field; }

struct GeneralForm {
    // zeta * alpha + eta * beta = theta
    FieldElement zeta, eta, theta;
};

GeneralForm general_form(const Line& line) {
    const FieldSpec& spec = field_of(line);
    if (line.kind == Line::Kind::Vertical)
        return {spec.one(), spec.zero(), line.intercept};
    return {-line.slope, spec.one(), line.intercept};
}

bool same_line(const Line& a, const Line& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Line::Kind::Vertical) return a.intercept == b.intercept;
    return a.slope == b.slope && a.intercept == b.intercept;
}

}  // namespace

std::vector<PhasePoint> line_points(const Line& line) {
    const FieldSpec& spec = field_of(line);
    std::vector<PhasePoint> pts;
    pts.reserve(spec.d);
    for (int id = 0; id < spec.d; ++id) {
        FieldElement t = spec.element(id);
        if (line.kind == Line::Kind::Vertical)
            pts.push_back({line.intercept, t});
        else
            pts.push_back({t, line.slope * t + line.intercept});
    }
    return pts;
}

Intersection intersect(const Line& a, const Line& b) {
    const FieldSpec& spec = field_of(a);
    require_field(spec, b.intercept);
    if (same_line(a, b)) return {Intersection::Kind::Identical, {}};
    GeneralForm f = general_form(a), g = general_form(b);
    FieldElement det = g.zeta * f.eta - f.zeta * g.eta;  // zeta' eta - zeta eta'
    if (det.is_zero()) return {Intersection::Kind::Parallel, {}};
    FieldElement alpha = (f.eta * g.theta - g.eta * f.theta) * inv(det);
    FieldElement beta = (f.zeta * g.theta - g.zeta * f.theta) * inv(-det);
    return {Intersection::Kind::Point, {alpha, beta}};
}

std::vector<Striation> striation_table(const FieldSpec& spec) {
    std::vector<Striation> out;
    for (int mu = 0; mu < spec.d; ++mu) {
        Striation s;
        s.vertical = false;
        s.slope = spec.element(mu);
        for (int nu = 0; nu < spec.d; ++nu)
            s.lines.push_back(Line::sloped(s.slope, spec.element(nu)));
        out.push_back(std::move(s));
    }
    Striation v;
    v.vertical = true;
    v.slope = spec.zero();
    for (int nu = 0; nu < spec.d; ++nu) v.lines.push_back(Line::vertical(spec.element(nu)));
    out.push_back(std::move(v));
    return out;
}

std::vector<std::pair<FieldElement, FieldElement>> ray_operator_labels(const FieldSpec& spec,
                                                                       const Striation& s) {
    std::vector<std::pair<FieldElement, FieldElement>> labels;
    for (int id = 1; id < spec.d; ++id) {
        FieldElement t = spec.element(id);
        if (s.vertical)
            labels.push_back({spec.zero(), t});
        else
            labels.push_back({t, s.slope * t});
    }
    return labels;
}

// ---------------------------------------------------------------------------
// Kernel

namespace {

// phi(kappa, lambda) exponents as a flat d x d table of ints.
std::vector<int> phi_exponent_table(const RotationSet& rot) {
    const FieldSpec& spec = *rot.field;
    std::vector<int> phi(static_cast<size_t>(spec.d) * spec.d, 0);
    for (int kappa = 1; kappa < spec.d; ++kappa)
        for (int lambda = 1; lambda < spec.d; ++lambda) {
            int mu = spec.mul_id(spec.inv_id(kappa), lambda);
            phi[kappa * spec.d + lambda] = rot.c[mu][kappa].num;
        }
    return phi;
}

Eigen::MatrixXcd kernel_matrix(const RotationSet& rot, const Ordering& ord,
                               const std::vector<int>& phi, int alpha, int beta) {
    const FieldSpec& spec = *rot.field;
    const int d = spec.d;
    const int L = spec.phase_den();
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i) {
        int row = ord.element_at[i];
        for (int j = 0; j < d; ++j) {
            int col = ord.element_at[j];
            int lambda = spec.sub_id(row, col);
            Cx acc = 0.0;
            for (int kappa = 0; kappa < d; ++kappa) {
                int e = spec.character_exponent(spec.mul_id(alpha, lambda)) -
                        spec.character_exponent(spec.mul_id(beta, kappa)) +
                        phi[kappa * d + lambda] +
                        spec.character_exponent(spec.mul_id(row, kappa));
                acc += UnitPhase::make(e, L).value();
            }
            m(i, j) = acc / static_cast<double>(d);
        }
    }
    return m;
}

}  // namespace

KernelSet build_kernel(const RotationSet& rot, const Ordering& ord, bool parallel) {
    const FieldSpec& spec = *rot.field;
    const int d = spec.d;
    KernelSet out;
    out.rot = rot;
    out.ord = ord;
    out.provenance = rot.fingerprint();
    out.delta.assign(static_cast<size_t>(d) * d, OperatorMatrix{Eigen::MatrixXcd(), ord});

    std::vector<int> phi = phi_exponent_table(rot);
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
    for (int ia = 0; ia < d; ++ia)
        for (int ib = 0; ib < d; ++ib) {
            int alpha = ord.element_at[ia];
            int beta = ord.element_at[ib];
            out.delta[static_cast<size_t>(ia) * d + ib].mat =
                kernel_matrix(rot, ord, phi, alpha, beta);
        }
    return out;
}

WignerGrid wigner_map(const OperatorMatrix& f, const KernelSet& k) {
    require_same_ordering(f.ord, k.ord);
    const int d = k.ord.dim();
    if (f.dim() != d) fail(Errc::DimensionMismatch, "operator vs kernel");
    WignerGrid w;
    w.ord = k.ord;
    w.provenance = k.provenance;
    w.values.resize(d, d);
    for (int ia = 0; ia < d; ++ia)
        for (int ib = 0; ib < d; ++ib) {
            Cx t = trace_product(f, k.at(ia, ib));
            w.values(ia, ib) = t.real();
            w.max_imag = std::max(w.max_imag, std::abs(t.imag()));
        }
    return w;
}

WignerGrid wigner_map(const DensityMatrix& rho, const KernelSet& k) {
    return wigner_map(OperatorMatrix{rho.mat, rho.ord}, k);
}

OperatorMatrix inverse_map(const WignerGrid& w, const KernelSet& k) {
    require_same_ordering(w.ord, k.ord);
    const int d = k.ord.dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int ia = 0; ia < d; ++ia)
        for (int ib = 0; ib < d; ++ib) m += w.values(ia, ib) * k.at(ia, ib).mat;
    return {m / static_cast<double>(d), k.ord};
}

Eigen::VectorXd marginal_alpha(const WignerGrid& w) { return w.values.rowwise().sum(); }
Eigen::VectorXd marginal_beta(const WignerGrid& w) { return w.values.colwise().sum(); }

// ---------------------------------------------------------------------------
// MUBs

MubFamily build_mubs(const RotationSet& rot, const Ordering& ord) {
    const FieldSpec& spec = *rot.field;
    const int d = spec.d;
    const int L = spec.phase_den();
    MubFamily fam;
    fam.field = &spec;
    fam.ord = ord;
    fam.provenance = rot.fingerprint();
    fam.sloped.resize(d);
    fam.eigenphases.resize(d);

    for (int mu = 0; mu < d; ++mu) {
        // Base state V_mu |0> has position amplitudes (1/d) sum_k c_{k,mu} chi(a k).
        Eigen::VectorXcd base(d);
        for (int a = 0; a < d; ++a) {
            Cx acc = 0.0;
            for (int kappa = 0; kappa < d; ++kappa)
                acc += (rot.c[mu][kappa] *
                        UnitPhase::make(spec.character_exponent(spec.mul_id(a, kappa)), L))
                           .value();
            base(a) = acc / static_cast<double>(d);
        }
        fam.sloped[mu].reserve(d);
        fam.eigenphases[mu].resize(d);
        for (int nu = 0; nu < d; ++nu) {
            Eigen::VectorXcd v(d);
            for (int i = 0; i < d; ++i) {
                int a = ord.element_at[i];
                v(i) = base(spec.sub_id(a, nu));
            }
            fam.sloped[mu].push_back(StateVector{v, ord});
            auto& phases = fam.eigenphases[mu][nu];
            phases.reserve(d);
            for (int alpha = 0; alpha < d; ++alpha)
                phases.push_back(
                    UnitPhase::make(spec.character_exponent(spec.mul_id(alpha, nu)), L) *
                    rot.c[mu][alpha].conj());
        }
    }

    fam.vertical.reserve(d);
    fam.vertical_eigenphases.resize(d);
    for (int nu = 0; nu < d; ++nu) {
        Eigen::VectorXcd v(d);
        double scale = 1.0 / std::sqrt(static_cast<double>(d));
        for (int i = 0; i < d; ++i) {
            int a = ord.element_at[i];
            v(i) = UnitPhase::make(spec.character_exponent(spec.mul_id(a, nu)), L).value() * scale;
        }
        fam.vertical.push_back(StateVector{v, ord});
        auto& phases = fam.vertical_eigenphases[nu];
        phases.reserve(d);
        for (int beta = 0; beta < d; ++beta)
            phases.push_back(UnitPhase::make(
                -spec.character_exponent(spec.mul_id(beta, nu)), L));
    }
    return fam;
}

double line_sum(const WignerGrid& w, const Line& line) {
    double acc = 0.0;
    for (const auto& pt : line_points(line)) acc += w.at(pt.alpha, pt.beta);
    return acc / static_cast<double>(field_of(line).d);
}

LineIdentityReport verify_line_identity(const DensityMatrix& rho, const KernelSet& k,
                                        const MubFamily& mubs) {
    if (k.provenance != mubs.provenance)
        fail(Errc::ProvenanceMismatch, "kernel and MUBs built from different rotation sets");
    require_same_ordering(rho.ord, k.ord);
    require_same_ordering(k.ord, mubs.ord);
    const FieldSpec& spec = k.field();
    WignerGrid w = wigner_map(rho, k);
    LineIdentityReport rep;
    for (int mu = 0; mu < spec.d; ++mu)
        for (int nu = 0; nu < spec.d; ++nu) {
            const auto& psi = mubs.sloped[mu][nu];
            double expect = std::real(Cx(psi.amps.adjoint() * rho.mat * psi.amps));
            double got = line_sum(w, Line::sloped(spec.element(mu), spec.element(nu)));
            rep.max_violation = std::max(rep.max_violation, std::abs(got - expect));
        }
    for (int nu = 0; nu < spec.d; ++nu) {
        const auto& psi = mubs.vertical[nu];
        double expect = std::real(Cx(psi.amps.adjoint() * rho.mat * psi.amps));
        double got = line_sum(w, Line::vertical(spec.element(nu)));
        rep.max_violation = std::max(rep.max_violation, std::abs(got - expect));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Direct Wigner formulas

namespace {

WignerGrid direct_wigner(const DensityMatrix& rho, const RotationSet& rot,
                         const std::vector<int>* h) {
    const FieldSpec& spec = *rot.field;
    const int d = spec.d;
    const int L = spec.phase_den();
    const Ordering& ord = rho.ord;
    if (rho.dim() != d) fail(Errc::DimensionMismatch, "density vs field");

    std::vector<int> phi = phi_exponent_table(rot);
    WignerGrid w;
    w.ord = ord;
    w.provenance = rot.fingerprint();
    if (h) {
        RotationSet tagged = shifted_rotation_set(rot, *h);
        w.provenance = tagged.fingerprint();
    }
    w.values.resize(d, d);

    for (int ia = 0; ia < d; ++ia) {
        int alpha = ord.element_at[ia];
        for (int ib = 0; ib < d; ++ib) {
            int beta = ord.element_at[ib];
            Cx acc = 0.0;
            for (int mu = 0; mu < d; ++mu)
                for (int nu = 0; nu < d; ++nu) {
                    Cx r = rho.mat(ord.index_of[mu], ord.index_of[nu]);
                    if (r == Cx(0.0, 0.0)) continue;
                    int delta = spec.sub_id(nu, mu);
                    int base = spec.character_exponent(spec.mul_id(alpha, delta));
                    for (int gamma = 0; gamma < d; ++gamma) {
                        int e = base +
                                spec.character_exponent(
                                    spec.mul_id(gamma, spec.sub_id(nu, beta))) +
                                phi[gamma * d + delta];
                        if (h && gamma != 0) {
                            int slope = spec.mul_id(spec.inv_id(gamma), delta);
                            e += spec.character_exponent(
                                spec.neg_id(spec.mul_id(gamma, (*h)[slope])));
                        }
                        acc += r * UnitPhase::make(e, L).value();
                    }
                }
            acc /= static_cast<double>(d);
            w.values(ia, ib) = acc.real();
            w.max_imag = std::max(w.max_imag, std::abs(acc.imag()));
        }
    }
    return w;
}

}  // namespace

WignerGrid wigner_of_density(const DensityMatrix& rho, const RotationSet& rot) {
    return direct_wigner(rho, rot, nullptr);
}

WignerGrid alternate_wigner(const DensityMatrix& rho, const RotationSet& rot,
                            const std::vector<int>& h_by_id) {
    const FieldSpec& spec = *rot.field;
    if (static_cast<int>(h_by_id.size()) != spec.d)
        fail(Errc::LengthMismatch, "h table needs d entries");
    if (h_by_id[0] != 0) fail(Errc::ShiftAtZero, "h(0) must vanish");
    return direct_wigner(rho, rot, &h_by_id);
}

// ---------------------------------------------------------------------------
// Enumeration of shift functions

namespace {

struct EnumTables {
    int d = 0;
    int npairs = 0;
    std::vector<Cx> A;        // [pair * d + alpha]
    std::vector<Cx> T;        // [pair * (d-1) * d + (gamma-1) * d + beta]
    std::vector<int> m_of;    // [pair * (d-1) + (gamma-1)] -> slope id
    std::vector<Cx> chi_neg;  // [gamma * d + x] = chi(-gamma x)
};

EnumTables build_enum_tables(const std::vector<Cx>& amp, const RotationSet& rot) {
    const FieldSpec& spec = *rot.field;
    const int d = spec.d;
    const int L = spec.phase_den();
    std::vector<int> phi = phi_exponent_table(rot);

    std::vector<std::pair<int, int>> pairs;
    for (int mu = 0; mu < d; ++mu) {
        if (std::abs(amp[mu]) < 1e-14) continue;
        for (int nu = 0; nu < d; ++nu)
            if (std::abs(amp[nu]) >= 1e-14) pairs.push_back({mu, nu});
    }

    EnumTables t;
    t.d = d;
    t.npairs = static_cast<int>(pairs.size());
    t.A.resize(static_cast<size_t>(t.npairs) * d);
    t.T.resize(static_cast<size_t>(t.npairs) * (d - 1) * d);
    t.m_of.resize(static_cast<size_t>(t.npairs) * (d - 1));
    t.chi_neg.resize(static_cast<size_t>(d) * d);

    for (int gamma = 0; gamma < d; ++gamma)
        for (int x = 0; x < d; ++x)
            t.chi_neg[gamma * d + x] =
                UnitPhase::make(spec.character_exponent(spec.neg_id(spec.mul_id(gamma, x))), L)
                    .value();

    for (int pi = 0; pi < t.npairs; ++pi) {
        auto [mu, nu] = pairs[pi];
        Cx r = amp[mu] * std::conj(amp[nu]);
        int delta = spec.sub_id(nu, mu);
        for (int alpha = 0; alpha < d; ++alpha)
            t.A[pi * d + alpha] =
                r *
                UnitPhase::make(spec.character_exponent(spec.mul_id(alpha, delta)), L).value();
        for (int gamma = 1; gamma < d; ++gamma) {
            t.m_of[pi * (d - 1) + gamma - 1] = spec.mul_id(spec.inv_id(gamma), delta);
            for (int beta = 0; beta < d; ++beta) {
                int e = spec.character_exponent(spec.mul_id(gamma, spec.sub_id(nu, beta))) +
                        phi[gamma * d + delta];
                t.T[(static_cast<size_t>(pi) * (d - 1) + gamma - 1) * d + beta] =
                    UnitPhase::make(e, L).value();
            }
        }
    }
    return t;
}

// Grid of one shift function, flattened [alpha * d + beta] by element id.
void grid_for_shift(const EnumTables& t, const std::vector<int>& h, std::vector<double>& grid,
                    std::vector<Cx>& scratch) {
    const int d = t.d;
    scratch.assign(static_cast<size_t>(t.npairs) * d, Cx(0.0, 0.0));
    for (int pi = 0; pi < t.npairs; ++pi) {
        for (int beta = 0; beta < d; ++beta) {
            Cx g = 1.0;  // gamma = 0 term
            const Cx* tp = &t.T[(static_cast<size_t>(pi) * (d - 1)) * d];
            const int* mp = &t.m_of[static_cast<size_t>(pi) * (d - 1)];
            for (int gamma = 1; gamma < d; ++gamma)
                g += tp[(gamma - 1) * d + beta] * t.chi_neg[gamma * d + h[mp[gamma - 1]]];
            scratch[pi * d + beta] = g;
        }
    }
    grid.assign(static_cast<size_t>(d) * d, 0.0);
    for (int pi = 0; pi < t.npairs; ++pi)
        for (int alpha = 0; alpha < d; ++alpha) {
            Cx a = t.A[pi * d + alpha];
            for (int beta = 0; beta < d; ++beta)
                grid[alpha * d + beta] += (a * scratch[pi * d + beta]).real();
        }
    for (double& v : grid) v /= static_cast<double>(d);
}

struct GridClass {
    std::vector<double> grid;
    std::vector<int> h;  // lexicographically smallest representative, by element id
    long long size = 0;
};

bool grids_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) >= tol) return false;
    return true;
}

void absorb(std::vector<GridClass>& classes, GridClass&& incoming, double tol) {
    for (auto& cls : classes) {
        if (!grids_equal(cls.grid, incoming.grid, tol)) continue;
        cls.size += incoming.size;
        if (std::lexicographical_compare(incoming.h.begin(), incoming.h.end(), cls.h.begin(),
                                         cls.h.end())) {
            cls.h = std::move(incoming.h);
            cls.grid = std::move(incoming.grid);
        }
        return;
    }
    classes.push_back(std::move(incoming));
}

}  // namespace

std::optional<long long> condition_based_count(const StateVector& state, const FieldSpec& spec) {
    if (spec.p != 2) return std::nullopt;
    const int d = spec.d;
    if (state.dim() != d) fail(Errc::DimensionMismatch, "state vs field");
    std::vector<Cx> amp(d);
    for (int id = 0; id < d; ++id) amp[id] = state.amps(state.ord.index_of[id]);
    for (const Cx& a : amp)
        if (std::abs(a.imag()) > 1e-12) return std::nullopt;

    // Differences mu + nu over off-diagonal pairs with nonzero rho_{mu,nu}.
    std::vector<int> deltas;
    for (int mu = 0; mu < d; ++mu)
        for (int nu = mu + 1; nu < d; ++nu) {
            if (std::abs(amp[mu]) < 1e-12 || std::abs(amp[nu]) < 1e-12) continue;
            int delta = spec.add_id(mu, nu);
            if (std::find(deltas.begin(), deltas.end(), delta) == deltas.end())
                deltas.push_back(delta);
        }

    // For each slope m, the functionals x -> tr(gamma x) with gamma = delta/m
    // and tr(gamma delta) = 0 constrain h(m); the class count is the product
    // of 2^rank over slopes.
    long long count = 1;
    for (int m = 1; m < d; ++m) {
        std::vector<int> gammas;
        for (int delta : deltas) {
            int gamma = spec.mul_id(delta, spec.inv_id(m));
            if (gamma == 0) continue;
            if (spec.trace_id(spec.mul_id(gamma, delta)) != 0) continue;
            gammas.push_back(gamma);
        }
        // Rank over Z_2 of the gamma set, elements as coefficient bit vectors.
        int rank = 0;
        std::vector<int> basis_vecs;
        for (int g : gammas) {
            int v = g;
            for (int b : basis_vecs) v = std::min(v, v ^ b);
            if (v != 0) {
                basis_vecs.push_back(v);
                ++rank;
            }
        }
        for (int i = 0; i < rank; ++i) count *= 2;
    }
    return count;
}

DistinctWignerReport count_distinct_wigner(const StateVector& state, const RotationSet& rot,
                                           bool parallel, double tol) {
    const FieldSpec& spec = *rot.field;
    const int d = spec.d;
    if (d > 8)
        fail(Errc::TooLarge, "full enumeration refused above d = 8 (" + std::to_string(d) + ")");
    if (state.dim() != d) fail(Errc::DimensionMismatch, "state vs field");

    StateVector psi = normalized(state);
    // Condition-based prediction first; the brute force below confirms it.
    std::optional<long long> predicted = condition_based_count(psi, spec);
    std::vector<Cx> amp(d);
    for (int id = 0; id < d; ++id) amp[id] = psi.amps(psi.ord.index_of[id]);
    EnumTables tables = build_enum_tables(amp, rot);

    long long total = 1;
    for (int i = 0; i < d - 1; ++i) total *= d;

    // h has d-1 free digits (slopes 1..d-1); chunk over the leading digits so
    // threads can work independently and merge once per chunk.
    int chunk_digits = std::min(2, d - 1);
    long long nchunks = 1;
    for (int i = 0; i < chunk_digits; ++i) nchunks *= d;
    long long per_chunk = total / nchunks;

    std::vector<GridClass> classes;

#pragma omp parallel if (parallel)
    {
        std::vector<GridClass> local;
        std::vector<int> h(d, 0);
        std::vector<double> grid;
        std::vector<Cx> scratch;
#pragma omp for schedule(dynamic)
        for (long long chunk = 0; chunk < nchunks; ++chunk) {
            long long v = chunk;
            for (int i = 0; i < chunk_digits; ++i) {
                h[1 + i] = static_cast<int>(v % d);
                v /= d;
            }
            for (long long rest = 0; rest < per_chunk; ++rest) {
                long long r = rest;
                for (int i = chunk_digits; i < d - 1; ++i) {
                    h[1 + i] = static_cast<int>(r % d);
                    r /= d;
                }
                grid_for_shift(tables, h, grid, scratch);
                absorb(local, GridClass{grid, h, 1}, tol);
            }
        }
#pragma omp critical
        {
            for (auto& cls : local) absorb(classes, std::move(cls), tol);
        }
    }

    std::sort(classes.begin(), classes.end(), [](const GridClass& a, const GridClass& b) {
        return std::lexicographical_compare(a.h.begin(), a.h.end(), b.h.begin(), b.h.end());
    });

    DistinctWignerReport rep;
    rep.total = total;
    rep.distinct = static_cast<int>(classes.size());
    for (auto& cls : classes) {
        rep.representatives.push_back(cls.h);
        rep.class_sizes.push_back(cls.size);
    }
    rep.condition_count = predicted;
    return rep;
}

// ---------------------------------------------------------------------------
// Covariant transforms

CovarianceReport covariant_transform_check(const DensityMatrix& rho, const KernelSet& k,
                                           SymplecticOp which, FieldElement param) {
    const FieldSpec& spec = k.field();
    if (spec.p == 2) fail(Errc::EvenCharacteristic, "covariance laws hold for p != 2");
    require_same_ordering(rho.ord, k.ord);
    require_field(spec, param);
    const Ordering& ord = k.ord;

    WignerGrid w = wigner_map(rho, k);
    CovarianceReport rep;

    OperatorMatrix g{Eigen::MatrixXcd(), ord};
    switch (which) {
        case SymplecticOp::RotationV: g = build_V(k.rot, param, ord); break;
        case SymplecticOp::RotationU: g = build_U(k.rot, param, ord); break;
        case SymplecticOp::SqueezeS: g = build_S(spec, param, ord); break;
    }
    DensityMatrix moved{g.mat * rho.mat * g.mat.adjoint(), ord};
    WignerGrid wm = wigner_map(moved, k);

    for (int ia = 0; ia < spec.d; ++ia)
        for (int ib = 0; ib < spec.d; ++ib) {
            FieldElement alpha = spec.element(ord.element_at[ia]);
            FieldElement beta = spec.element(ord.element_at[ib]);
            double expect = 0.0;
            // Orientation fixed by the displayed operators: conjugating by
            // U_mu shears alpha by +mu beta and S_xi rescales to
            // (xi^-1 alpha, xi beta); the mirrored forms are the same laws
            // for U^dag = U_{-mu} and S^dag = S_{xi^-1}.
            switch (which) {
                case SymplecticOp::RotationV: expect = w.at(alpha, beta - param * alpha); break;
                case SymplecticOp::RotationU: expect = w.at(alpha + param * beta, beta); break;
                case SymplecticOp::SqueezeS: expect = w.at(inv(param) * alpha, param * beta); break;
            }
            rep.max_deviation = std::max(rep.max_deviation,
                                         std::abs(wm.values(ia, ib) - expect));
        }

    if (which == SymplecticOp::SqueezeS) {
        // S_xi as alternating rotations V_a U_b V_c U_m with m a free nonzero
        // element: the shear maps telescope to the squeeze when
        // b = -xi m, c = (xi-1)/(xi m), a = -(xi-1)/(xi^2 m).
        FieldElement xi = param;
        FieldElement m = spec.generator();
        FieldElement one = spec.one();
        FieldElement b = -(xi * m);
        FieldElement c = (xi - one) * inv(xi * m);
        FieldElement a = -((xi - one) * inv(xi * xi * m));
        Eigen::MatrixXcd comp = build_V(k.rot, a, ord).mat * build_U(k.rot, b, ord).mat *
                                build_V(k.rot, c, ord).mat * build_U(k.rot, m, ord).mat;
        DensityMatrix via{comp * rho.mat * comp.adjoint(), ord};
        WignerGrid wv = wigner_map(via, k);
        rep.composite_deviation = (wv.values - wm.values).cwiseAbs().maxCoeff();
    }
    return rep;
}

double verified_overlap_constant(const KernelSet& k, std::uint64_t seed) {
    const int d = k.ord.dim();
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double acc = 0.0;
    const int trials = 4;
    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXcd f(d, d), g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                f(i, j) = Cx(gauss(gen), gauss(gen));
                g(i, j) = Cx(gauss(gen), gauss(gen));
            }
        f = (f + f.adjoint()).eval();
        g = (g + g.adjoint()).eval();
        OperatorMatrix fo{f, k.ord}, go{g, k.ord};
        WignerGrid wf = wigner_map(fo, k), wg = wigner_map(go, k);
        double overlap = (wf.values.array() * wg.values.array()).sum();
        acc += std::real(trace_product(fo, go)) / overlap;
    }
    return acc / trials;
}

}  // namespace gfw
