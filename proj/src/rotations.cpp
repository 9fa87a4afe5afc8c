#include "gfw/rotations.hpp"

#include <algorithm>

namespace gfw {

std::string RotationSet::fingerprint() const {
    std::string s = "p=" + std::to_string(field->p) + ",n=" + std::to_string(field->n) + ",poly=";
    for (int c : field->poly) s += std::to_string(c) + ".";
    if (basis) {
        s += ";basis=";
        for (auto e : basis->elements) s += field->to_string(e) + ",";
    }
    s += canonical() ? ";canonical" : ";h=";
    if (!canonical())
        for (int v : shift) s += field->to_string(field->element(v)) + ",";
    return s;
}

RotationSet canonical_rotation_set_odd(const FieldSpec& spec) {
    if (spec.p == 2) fail(Errc::EvenCharacteristic, "odd-characteristic construction");
    RotationSet rot;
    rot.field = &spec;
    rot.shift.assign(spec.d, 0);
    rot.c.assign(spec.d, std::vector<UnitPhase>(spec.d, UnitPhase::one(spec.phase_den())));
    int two = spec.add_id(1, 1);
    int half = spec.inv_id(two);
    for (int mu = 0; mu < spec.d; ++mu)
        for (int kappa = 0; kappa < spec.d; ++kappa) {
            int k2mu = spec.mul_id(spec.mul_id(kappa, kappa), mu);
            int arg = spec.neg_id(spec.mul_id(half, k2mu));
            rot.c[mu][kappa] = UnitPhase::make(spec.character_exponent(arg), spec.phase_den());
        }
    return rot;
}

RotationSet rotation_set_even_with_signs(const FieldSpec& spec, const Basis& basis,
                                         const std::vector<std::vector<int>>& signs) {
    if (spec.p != 2) fail(Errc::OddCharacteristic, "even-characteristic construction");
    if (static_cast<int>(signs.size()) != spec.d) fail(Errc::LengthMismatch, "one sign row per mu");
    for (int s : signs[0])
        if (s != 0) fail(Errc::ShiftAtZero, "mu = 0 admits no sign freedom (V_0 = I)");

    const int L = spec.phase_den();
    RotationSet rot;
    rot.field = &spec;
    rot.basis = basis;
    rot.shift.assign(spec.d, 0);
    rot.c.assign(spec.d, std::vector<UnitPhase>(spec.d, UnitPhase::one(L)));

    // Bits of every element w.r.t. the construction basis, and the pairwise
    // products sigma_i sigma_j entering the cross term.
    std::vector<std::vector<int>> bits(spec.d);
    for (int id = 0; id < spec.d; ++id) bits[id] = expand(spec.element(id), basis);

    for (int mu = 0; mu < spec.d; ++mu) {
        if (static_cast<int>(signs[mu].size()) != spec.n)
            fail(Errc::LengthMismatch, "n sign bits per mu");
        FieldElement mu_el = spec.element(mu);
        // Principal square roots on the basis elements, with optional flips.
        std::vector<UnitPhase> base(spec.n, UnitPhase::one(L));
        for (int l = 0; l < spec.n; ++l) {
            base[l] = character(basis.elements[l] * basis.elements[l] * mu_el).principal_sqrt();
            if (signs[mu][l]) base[l] = base[l] * UnitPhase::make(L / 2, L);
        }
        for (int kappa = 0; kappa < spec.d; ++kappa) {
            const auto& k = bits[kappa];
            FieldElement cross = spec.zero();
            for (int i = 0; i < spec.n; ++i) {
                if (!k[i]) continue;
                for (int j = i + 1; j < spec.n; ++j)
                    if (k[j]) cross = cross + basis.elements[i] * basis.elements[j];
            }
            UnitPhase val = character(mu_el * cross);
            for (int l = 0; l < spec.n; ++l)
                if (k[l]) val = val * base[l];
            rot.c[mu][kappa] = val;
        }
    }
    return rot;
}

RotationSet canonical_rotation_set_even(const FieldSpec& spec, const Basis& basis) {
    std::vector<std::vector<int>> plus(spec.d, std::vector<int>(spec.n, 0));
    return rotation_set_even_with_signs(spec, basis, plus);
}

RotationSet shifted_rotation_set(const RotationSet& rot, const std::vector<int>& h_by_id) {
    const FieldSpec& spec = *rot.field;
    if (static_cast<int>(h_by_id.size()) != spec.d)
        fail(Errc::LengthMismatch, "h table needs d entries");
    if (h_by_id[0] != 0) fail(Errc::ShiftAtZero, "h(0) must vanish");
    RotationSet out = rot;
    for (int mu = 0; mu < spec.d; ++mu) {
        int h = h_by_id[mu];
        if (h < 0 || h >= spec.d) fail(Errc::DimensionMismatch, "h entry out of range");
        out.shift[mu] = spec.add_id(rot.shift[mu], h);
        if (h == 0) continue;
        for (int kappa = 0; kappa < spec.d; ++kappa) {
            int arg = spec.neg_id(spec.mul_id(kappa, h));
            out.c[mu][kappa] =
                out.c[mu][kappa] * UnitPhase::make(spec.character_exponent(arg), spec.phase_den());
        }
    }
    return out;
}

std::vector<std::vector<int>> shift_to_signs(const RotationSet& rot) {
    const FieldSpec& spec = *rot.field;
    if (spec.p != 2) fail(Errc::OddCharacteristic, "sign encoding is a p = 2 notion");
    if (!rot.basis) fail(Errc::MissingBasis, "rotation set carries no construction basis");
    std::vector<std::vector<int>> signs(spec.d, std::vector<int>(spec.n, 0));
    for (int mu = 0; mu < spec.d; ++mu) {
        FieldElement h = spec.element(rot.shift[mu]);
        for (int l = 0; l < spec.n; ++l) signs[mu][l] = trace(rot.basis->elements[l] * h);
    }
    return signs;
}

std::vector<int> signs_to_shift(const FieldSpec& spec, const Basis& basis,
                                const std::vector<std::vector<int>>& signs) {
    if (spec.p != 2) fail(Errc::OddCharacteristic, "sign encoding is a p = 2 notion");
    if (static_cast<int>(signs.size()) != spec.d) fail(Errc::LengthMismatch, "one sign row per mu");
    Basis dual = dual_basis(basis);
    std::vector<int> h(spec.d, 0);
    for (int mu = 0; mu < spec.d; ++mu) {
        if (static_cast<int>(signs[mu].size()) != spec.n)
            fail(Errc::LengthMismatch, "n sign bits per mu");
        h[mu] = combine(signs[mu], dual).id;
    }
    if (h[0] != 0) fail(Errc::ShiftAtZero, "mu = 0 signs must be trivial");
    return h;
}

OperatorMatrix build_V(const RotationSet& rot, FieldElement mu, const Ordering& ord) {
    const FieldSpec& spec = *rot.field;
    require_field(spec, mu);
    const int d = spec.d;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    // <a| V |b> = (1/d) sum_kappa c_{kappa,mu} chi(kappa (a - b))
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int diff = spec.sub_id(ord.element_at[i], ord.element_at[j]);
            Cx acc = 0.0;
            for (int kappa = 0; kappa < d; ++kappa) {
                Cx chi = UnitPhase::make(spec.character_exponent(spec.mul_id(kappa, diff)),
                                         spec.phase_den())
                             .value();
                acc += rot.c[mu.id][kappa].value() * chi;
            }
            m(i, j) = acc / static_cast<double>(d);
        }
    return {m, ord};
}

OperatorMatrix build_V_shifted(const RotationSet& rot, FieldElement mu, FieldElement nu,
                               const Ordering& ord) {
    require_field(*rot.field, nu);
    return matmul(build_V(rot, mu, ord), build_X(nu, ord));
}

SquareLawResult verify_square_even(const RotationSet& rot, FieldElement mu, const Ordering& ord) {
    const FieldSpec& spec = *rot.field;
    if (spec.p != 2) fail(Errc::OddCharacteristic, "square law is a p = 2 statement");
    require_field(spec, mu);
    FieldElement exponent = pow(mu, 1LL << (spec.n - 1));
    if (mu.is_zero()) exponent = spec.zero();
    // Bit-exact phase identity c_{kappa,mu}^2 = chi(kappa mu^(2^(n-1))).
    for (int kappa = 0; kappa < spec.d; ++kappa) {
        UnitPhase lhs = rot.c[mu.id][kappa] * rot.c[mu.id][kappa];
        UnitPhase rhs = UnitPhase::make(
            spec.character_exponent(spec.mul_id(kappa, exponent.id)), spec.phase_den());
        if (lhs != rhs) fail(Errc::NoSolution, "rotation set violates the square law");
    }
    OperatorMatrix v = build_V(rot, mu, ord);
    OperatorMatrix x = build_X(exponent, ord);
    return {exponent, max_abs(matmul(v, v).mat - x.mat)};
}

FieldElement inverse_shift_even(const RotationSet& rot, FieldElement mu, FieldElement nu) {
    const FieldSpec& spec = *rot.field;
    if (spec.p != 2) fail(Errc::OddCharacteristic, "inverse rule is a p = 2 statement");
    FieldElement exponent = mu.is_zero() ? spec.zero() : pow(mu, 1LL << (spec.n - 1));
    return exponent + nu;
}

CocycleTable cocycle(const RotationSet& rot) {
    const FieldSpec& spec = *rot.field;
    if (spec.p != 2) fail(Errc::OddCharacteristic, "cocycle is a p = 2 notion");
    if (!rot.basis) fail(Errc::MissingBasis, "rotation set carries no construction basis");
    const Basis& basis = *rot.basis;
    CocycleTable table;
    table.field = &spec;
    table.f.assign(static_cast<size_t>(spec.d) * spec.d, 0);

    for (int mu = 0; mu < spec.d; ++mu)
        for (int mp = 0; mp < spec.d; ++mp) {
            int sum = spec.add_id(mu, mp);
            int found = -1;
            for (int cand = 0; cand < spec.d; ++cand) {
                bool ok = true;
                // The basis equations pin the candidate; evaluating them on
                // the basis elements alone is sufficient.
                for (const auto& sigma : basis.elements) {
                    UnitPhase lhs = rot.c[mu][sigma.id] * rot.c[mp][sigma.id];
                    UnitPhase rhs =
                        UnitPhase::make(
                            spec.character_exponent(spec.mul_id(sigma.id, cand)),
                            spec.phase_den()) *
                        rot.c[sum][sigma.id];
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = cand;
                    break;
                }
            }
            if (found < 0) fail(Errc::NoSolution, "no cocycle value fits; corrupted set");
            // Self-verification over the whole field.
            for (int alpha = 0; alpha < spec.d; ++alpha) {
                UnitPhase lhs = rot.c[mu][alpha] * rot.c[mp][alpha];
                UnitPhase rhs = UnitPhase::make(
                                    spec.character_exponent(spec.mul_id(alpha, found)),
                                    spec.phase_den()) *
                                rot.c[sum][alpha];
                if (lhs != rhs) fail(Errc::NoSolution, "cocycle fails off the basis");
            }
            table.f[mu * spec.d + mp] = found;
        }

    // Group law V_mu V_mu' = V_{mu+mu'} X_f as matrices: exhaustive for small
    // fields, sampled above d = 8.
    Ordering ord = make_ordering(spec, OrderingStrategy::PrimitivePower);
    int step = spec.d <= 8 ? 1 : 5;
    for (int mu = 0; mu < spec.d; mu += 1)
        for (int mp = mu % step; mp < spec.d; mp += step) {
            OperatorMatrix lhs = matmul(build_V(rot, spec.element(mu), ord),
                                        build_V(rot, spec.element(mp), ord));
            OperatorMatrix rhs =
                matmul(build_V(rot, spec.element(spec.add_id(mu, mp)), ord),
                       build_X(spec.element(table.f[mu * spec.d + mp]), ord));
            if (max_abs(lhs.mat - rhs.mat) > 1e-12)
                fail(Errc::NoSolution, "group law violated; corrupted set");
        }
    return table;
}

OperatorMatrix build_U(const RotationSet& rot, FieldElement mu, const Ordering& ord) {
    const FieldSpec& spec = *rot.field;
    require_field(spec, mu);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int i = 0; i < spec.d; ++i)
        m(i, i) = rot.c[mu.id][spec.neg_id(ord.element_at[i])].value();
    return {m, ord};
}

OperatorMatrix build_S(const FieldSpec& spec, FieldElement xi, const Ordering& ord) {
    require_field(spec, xi);
    if (xi.is_zero()) fail(Errc::ZeroSqueeze, "squeeze parameter must be invertible");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.d, spec.d);
    for (int kappa = 0; kappa < spec.d; ++kappa)
        m(ord.index_of[kappa], ord.index_of[spec.mul_id(xi.id, kappa)]) = 1.0;
    return {m, ord};
}

}  // namespace gfw
