#include <doctest.h>

#include <random>

#include "gfw/rotations.hpp"
#include "test_helpers.hpp"

using namespace gfw;
using gfw::test::mdiff;
using gfw::test::pp;

TEST_CASE("odd-characteristic canonical set") {
    Field f3 = make_field(3, 1);
    RotationSet rot = canonical_rotation_set_odd(*f3);
    for (int k = 0; k < 3; ++k) CHECK(rot.c[0][k] == UnitPhase::make(0, 12));
    // c_{1,1} = chi(-2^(-1)) = omega (2^(-1) = 2, -2 = 1 mod 3).
    CHECK(rot.c[1][1] == UnitPhase::make(4, 12));

    // Abelian group law, exact on the phase tables.
    for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        Field f = make_field(p, n);
        RotationSet r = canonical_rotation_set_odd(*f);
        for (int mu = 0; mu < f->d; ++mu)
            for (int mp = 0; mp < f->d; ++mp)
                for (int k = 0; k < f->d; ++k)
                    CHECK(r.c[mu][k] * r.c[mp][k] == r.c[f->add_id(mu, mp)][k]);
    }

    // As matrices at d = 3, and V^m = (V_1)^m in the prime case.
    Ordering ord = pp(*f3);
    for (int mu = 0; mu < 3; ++mu)
        for (int mp = 0; mp < 3; ++mp)
            CHECK(mdiff(build_V(rot, f3->element(mu), ord).mat *
                            build_V(rot, f3->element(mp), ord).mat,
                        build_V(rot, f3->element((mu + mp) % 3), ord).mat) < 1e-12);

    Field f5 = make_field(5, 1);
    Ordering ord5 = pp(*f5);
    RotationSet rot5 = canonical_rotation_set_odd(*f5);
    Eigen::MatrixXcd v1 = build_V(rot5, f5->element(1), ord5).mat;
    Eigen::MatrixXcd acc = v1;
    for (int m = 2; m < 5; ++m) {
        acc = acc * v1;
        CHECK(mdiff(acc, build_V(rot5, f5->element(m), ord5).mat) < 1e-12);
    }

    // d = 9 group law as matrices, sampled pairs.
    Field f9 = make_field(3, 2);
    Ordering ord9 = pp(*f9);
    RotationSet rot9 = canonical_rotation_set_odd(*f9);
    std::mt19937_64 gen9(9);
    for (int trial = 0; trial < 10; ++trial) {
        FieldElement mu = f9->element(static_cast<int>(gen9() % 9));
        FieldElement mp = f9->element(static_cast<int>(gen9() % 9));
        CHECK(mdiff(build_V(rot9, mu, ord9).mat * build_V(rot9, mp, ord9).mat,
                    build_V(rot9, mu + mp, ord9).mat) < 1e-12);
    }

    Field f4 = make_field(2, 2);
    CHECK_THROWS_AS(canonical_rotation_set_odd(*f4), Error);
}

TEST_CASE("even-characteristic canonical set reproduces the worked tables") {
    Field f4 = make_field(2, 2);
    FieldElement t = f4->generator();
    Basis sd = make_basis(*f4, {t, t * t});
    RotationSet rot = canonical_rotation_set_even(*f4, sd);

    // mu = t^3 = 1: c_0 = 1, c_t = i, c_{t^2} = i, c_{t^3} = -1.
    int one_id = 1;
    CHECK(rot.c[one_id][0] == UnitPhase::make(0, 8));
    CHECK(rot.c[one_id][t.id] == UnitPhase::make(2, 8));
    CHECK(rot.c[one_id][(t * t).id] == UnitPhase::make(2, 8));
    CHECK(rot.c[one_id][1] == UnitPhase::make(4, 8));

    // Diagonals of V_t, V_{t^2}, V_{t^3} in conjugate order (0, t, t^2, t^3).
    auto diag = [&](int mu_power) {
        std::vector<UnitPhase> out;
        out.push_back(rot.c[f4->generator_pow(mu_power).id][0]);
        for (int k = 1; k <= 3; ++k)
            out.push_back(rot.c[f4->generator_pow(mu_power).id][f4->generator_pow(k).id]);
        return out;
    };
    auto ph = [](int num) { return UnitPhase::make(num, 8); };
    CHECK(diag(1) == std::vector<UnitPhase>{ph(0), ph(0), ph(2), ph(6)});  // (1, 1, i, -i)
    CHECK(diag(2) == std::vector<UnitPhase>{ph(0), ph(2), ph(0), ph(6)});  // (1, i, 1, -i)
    CHECK(diag(3) == std::vector<UnitPhase>{ph(0), ph(2), ph(2), ph(4)});  // (1, i, i, -1)

    // Matrix form: V_{t^3} diagonal entries in the conjugate basis.
    Ordering ord = pp(*f4);
    OperatorMatrix v3 = build_V(rot, f4->generator_pow(3), ord);
    OperatorMatrix fop = build_fourier(*f4, ord);
    Eigen::MatrixXcd in_conj = fop.mat.adjoint() * v3.mat * fop.mat;
    CHECK(std::abs(in_conj(0, 0) - Cx(1, 0)) < 1e-12);
    CHECK(std::abs(in_conj(1, 1) - Cx(0, 1)) < 1e-12);
    CHECK(std::abs(in_conj(2, 2) - Cx(0, 1)) < 1e-12);
    CHECK(std::abs(in_conj(3, 3) - Cx(-1, 0)) < 1e-12);
    CHECK(mdiff(in_conj, in_conj.diagonal().asDiagonal().toDenseMatrix()) < 1e-12);
}

TEST_CASE("functional equation and char-2 phase identities") {
    for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}}) {
        Field f = make_field(p, n);
        Basis pb = polynomial_basis(*f);
        RotationSet rot = canonical_rotation_set_even(*f, pb);
        const int d = f->d;
        for (int mu = 0; mu < d; ++mu) {
            CHECK(rot.c[mu][0] == UnitPhase::one(8));
            FieldElement sq = mu == 0 ? f->zero() : pow(f->element(mu), 1LL << (f->n - 1));
            for (int k = 0; k < d; ++k) {
                // c^2 = chi(k^2 mu) and the conjugate relation.
                CHECK(rot.c[mu][k] * rot.c[mu][k] ==
                      character(f->element(k) * f->element(k) * f->element(mu)));
                CHECK(rot.c[mu][k].conj() ==
                      character(f->element(k) * sq) * rot.c[mu][k]);
                for (int a = 0; a < d; ++a) {
                    UnitPhase lhs = rot.c[mu][f->add_id(k, a)] * rot.c[mu][k].conj();
                    UnitPhase rhs = rot.c[mu][a] *
                                    character(-(f->element(mu) * f->element(a) * f->element(k)));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
    // Same functional equation for the odd-characteristic sets.
    for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
        Field f = make_field(p, n);
        RotationSet rot = canonical_rotation_set_odd(*f);
        for (int mu = 0; mu < f->d; ++mu)
            for (int k = 0; k < f->d; ++k)
                for (int a = 0; a < f->d; ++a)
                    CHECK(rot.c[mu][f->add_id(k, a)] * rot.c[mu][k].conj() ==
                          rot.c[mu][a] *
                              character(-(f->element(mu) * f->element(a) * f->element(k))));
    }
}

TEST_CASE("sign assignments") {
    Field f4 = make_field(2, 2);
    FieldElement t = f4->generator();
    Basis sd = make_basis(*f4, {t, t * t});

    // 2^n = 4 distinct valid sets per mu.
    int mu = 1;  // t^3
    std::vector<std::vector<UnitPhase>> rows;
    for (int bits = 0; bits < 4; ++bits) {
        std::vector<std::vector<int>> signs(4, std::vector<int>(2, 0));
        signs[mu] = {bits & 1, (bits >> 1) & 1};
        RotationSet rot = rotation_set_even_with_signs(*f4, sd, signs);
        for (int k = 0; k < 4; ++k)
            for (int a = 0; a < 4; ++a)
                CHECK(rot.c[mu][f4->add_id(k, a)] * rot.c[mu][k].conj() ==
                      rot.c[mu][a] * character(-(f4->element(mu) * f4->element(a) *
                                                 f4->element(k))));
        rows.push_back(rot.c[mu]);
    }
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) CHECK(rows[i] != rows[j]);

    // Sign bits and shifts are two encodings of the same set.
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::vector<int>> signs(4, std::vector<int>(2, 0));
        for (int m = 1; m < 4; ++m)
            signs[m] = {static_cast<int>(gen() % 2), static_cast<int>(gen() % 2)};
        RotationSet direct = rotation_set_even_with_signs(*f4, sd, signs);
        std::vector<int> h = signs_to_shift(*f4, sd, signs);
        RotationSet via_shift = shifted_rotation_set(canonical_rotation_set_even(*f4, sd), h);
        for (int m = 0; m < 4; ++m)
            for (int k = 0; k < 4; ++k) CHECK(direct.c[m][k] == via_shift.c[m][k]);
        CHECK(shift_to_signs(via_shift) == signs);
    }

    std::vector<std::vector<int>> bad(4, std::vector<int>(2, 0));
    bad[0] = {1, 0};
    CHECK_THROWS_AS(rotation_set_even_with_signs(*f4, sd, bad), Error);
}

TEST_CASE("shifted sets") {
    Field f4 = make_field(2, 2);
    FieldElement t = f4->generator();
    Basis sd = make_basis(*f4, {t, t * t});
    RotationSet rot = canonical_rotation_set_even(*f4, sd);

    std::vector<int> zero(4, 0);
    RotationSet same = shifted_rotation_set(rot, zero);
    for (int m = 0; m < 4; ++m)
        for (int k = 0; k < 4; ++k) CHECK(same.c[m][k] == rot.c[m][k]);

    // h(t^3) = t: V_{t^3} becomes diag(1, -i, i, 1) and exactly two phi
    // entries flip.
    std::vector<int> h(4, 0);
    h[1] = t.id;
    RotationSet shifted = shifted_rotation_set(rot, h);
    auto ph = [](int num) { return UnitPhase::make(num, 8); };
    CHECK(shifted.c[1][0] == ph(0));
    CHECK(shifted.c[1][f4->generator_pow(1).id] == ph(6));
    CHECK(shifted.c[1][f4->generator_pow(2).id] == ph(2));
    CHECK(shifted.c[1][f4->generator_pow(3).id] == ph(0));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            UnitPhase before = phase_phi(rot, f4->generator_pow(i), f4->generator_pow(j));
            UnitPhase after = phase_phi(shifted, f4->generator_pow(i), f4->generator_pow(j));
            if (i == 1 && j == 1) {
                CHECK(before == ph(2));
                CHECK(after == ph(6));
            } else if (i == 3 && j == 3) {
                CHECK(before == ph(4));
                CHECK(after == ph(0));
            } else {
                CHECK(before == after);
            }
        }

    std::vector<int> bad(4, 0);
    bad[0] = 1;
    try {
        shifted_rotation_set(rot, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ShiftAtZero);
    }
}

TEST_CASE("rotation conjugation law") {
    // V_mu Z_a V_mu^dag = c_{a,mu} Z_a X_{mu a}, and [V_mu, X_nu] = 0.
    for (auto [p, n] : {std::pair{3, 1}, {2, 2}}) {
        Field f = make_field(p, n);
        Ordering ord = pp(*f);
        RotationSet rot = f->p == 2
                              ? canonical_rotation_set_even(*f, polynomial_basis(*f))
                              : canonical_rotation_set_odd(*f);
        for (int mu = 0; mu < f->d; ++mu) {
            OperatorMatrix v = build_V(rot, f->element(mu), ord);
            CHECK(unitarity_defect(v) < 1e-12);
            for (int a = 0; a < f->d; ++a) {
                Eigen::MatrixXcd lhs =
                    v.mat * build_Z(f->element(a), ord).mat * v.mat.adjoint();
                Eigen::MatrixXcd rhs =
                    rot.c[mu][a].value() * build_Z(f->element(a), ord).mat *
                    build_X(f->element(mu) * f->element(a), ord).mat;
                CHECK(mdiff(lhs, rhs) < 1e-12);
                Eigen::MatrixXcd xm = build_X(f->element(a), ord).mat;
                CHECK(mdiff(v.mat * xm, xm * v.mat) < 1e-12);
            }
        }
        CHECK(mdiff(build_V(rot, f->zero(), ord).mat,
                    Eigen::MatrixXcd::Identity(f->d, f->d)) < 1e-12);
    }
}

TEST_CASE("even square law and inverse rule") {
    for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}}) {
        Field f = make_field(p, n);
        Ordering ord = pp(*f);
        Basis pb = polynomial_basis(*f);
        RotationSet rot = canonical_rotation_set_even(*f, pb);
        for (int mu = 0; mu < f->d; ++mu) {
            auto res = verify_square_even(rot, f->element(mu), ord);
            FieldElement expect =
                mu == 0 ? f->zero() : pow(f->element(mu), 1LL << (f->n - 1));
            CHECK(res.exponent == expect);
            CHECK(res.deviation < 1e-12);
        }
    }

    Field f4 = make_field(2, 2);
    Ordering ord = pp(*f4);
    Basis sd = make_basis(*f4, {f4->generator(), f4->generator() * f4->generator()});
    RotationSet rot = canonical_rotation_set_even(*f4, sd);
    CHECK(verify_square_even(rot, f4->generator(), ord).exponent ==
          f4->generator() * f4->generator());

    // (V_{mu,nu})^(-1) = V_{mu, mu^(2^(n-1)) + nu} as matrices.
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            FieldElement inv_nu =
                inverse_shift_even(rot, f4->element(mu), f4->element(nu));
            OperatorMatrix a = build_V_shifted(rot, f4->element(mu), f4->element(nu), ord);
            OperatorMatrix b = build_V_shifted(rot, f4->element(mu), inv_nu, ord);
            CHECK(mdiff(a.mat * b.mat, Eigen::MatrixXcd::Identity(4, 4)) < 1e-12);
        }

    Field f3 = make_field(3, 1);
    RotationSet rot3 = canonical_rotation_set_odd(*f3);
    CHECK_THROWS_AS(verify_square_even(rot3, f3->one(), pp(*f3)), Error);
}

TEST_CASE("cocycle table") {
    Field f4 = make_field(2, 2);
    FieldElement t = f4->generator();
    Basis sd = make_basis(*f4, {t, t * t});
    RotationSet rot = canonical_rotation_set_even(*f4, sd);
    CocycleTable ct = cocycle(rot);

    FieldElement t2 = t * t, t3 = f4->generator_pow(3);
    CHECK(ct.at(t, t) == t2);
    CHECK(ct.at(t, t2) == f4->zero());
    CHECK(ct.at(t, t3) == t2);
    CHECK(ct.at(t2, t2) == t);
    CHECK(ct.at(t2, t3) == t);
    CHECK(ct.at(t3, t3) == t3);

    for (int a = 0; a < 4; ++a) {
        CHECK(ct.at(f4->zero(), f4->element(a)).is_zero());
        for (int b = 0; b < 4; ++b)
            CHECK(ct.at(f4->element(a), f4->element(b)) ==
                  ct.at(f4->element(b), f4->element(a)));
    }

    // Group law as matrices for every pair.
    Ordering ord = pp(*f4);
    for (int mu = 0; mu < 4; ++mu)
        for (int mp = 0; mp < 4; ++mp) {
            Eigen::MatrixXcd lhs = build_V(rot, f4->element(mu), ord).mat *
                                   build_V(rot, f4->element(mp), ord).mat;
            Eigen::MatrixXcd rhs =
                build_V(rot, f4->element(mu) + f4->element(mp), ord).mat *
                build_X(ct.at(f4->element(mu), f4->element(mp)), ord).mat;
            CHECK(mdiff(lhs, rhs) < 1e-12);
        }

    // Full group closure V_{mu,nu} V_{mu',nu'} = V_{mu+mu', nu+nu'+f(mu,mu')}
    // for every quadruple in GF(4).
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int mp = 0; mp < 4; ++mp)
                for (int np = 0; np < 4; ++np) {
                    Eigen::MatrixXcd lhs =
                        build_V_shifted(rot, f4->element(mu), f4->element(nu), ord).mat *
                        build_V_shifted(rot, f4->element(mp), f4->element(np), ord).mat;
                    FieldElement msum = f4->element(mu) + f4->element(mp);
                    FieldElement nsum = f4->element(nu) + f4->element(np) +
                                        ct.at(f4->element(mu), f4->element(mp));
                    Eigen::MatrixXcd rhs = build_V_shifted(rot, msum, nsum, ord).mat;
                    CHECK(mdiff(lhs, rhs) < 1e-12);
                }

    // GF(8) solves and self-verifies too; sampled closure.
    Field f8 = make_field(2, 3);
    RotationSet rot8 = canonical_rotation_set_even(*f8, polynomial_basis(*f8));
    CocycleTable ct8 = cocycle(rot8);
    Ordering ord8 = pp(*f8);
    std::mt19937_64 gen8(88);
    for (int trial = 0; trial < 8; ++trial) {
        FieldElement mu = f8->element(static_cast<int>(gen8() % 8));
        FieldElement nu = f8->element(static_cast<int>(gen8() % 8));
        FieldElement mp = f8->element(static_cast<int>(gen8() % 8));
        FieldElement np = f8->element(static_cast<int>(gen8() % 8));
        Eigen::MatrixXcd lhs = build_V_shifted(rot8, mu, nu, ord8).mat *
                               build_V_shifted(rot8, mp, np, ord8).mat;
        Eigen::MatrixXcd rhs =
            build_V_shifted(rot8, mu + mp, nu + np + ct8.at(mu, mp), ord8).mat;
        CHECK(mdiff(lhs, rhs) < 1e-12);
    }

    // A corrupted table has no solution.
    RotationSet broken = rot;
    broken.c[t.id][t.id] = broken.c[t.id][t.id] * UnitPhase::make(4, 8);
    try {
        cocycle(broken);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoSolution);
    }

    Field f3 = make_field(3, 1);
    CHECK_THROWS_AS(cocycle(canonical_rotation_set_odd(*f3)), Error);
}

TEST_CASE("U operator") {
    for (auto [p, n] : {std::pair{3, 1}, {2, 2}}) {
        Field f = make_field(p, n);
        Ordering ord = pp(*f);
        RotationSet rot = f->p == 2
                              ? canonical_rotation_set_even(*f, polynomial_basis(*f))
                              : canonical_rotation_set_odd(*f);
        CHECK(mdiff(build_U(rot, f->zero(), ord).mat,
                    Eigen::MatrixXcd::Identity(f->d, f->d)) == 0.0);
        OperatorMatrix fop = build_fourier(*f, ord);
        for (int mu = 0; mu < f->d; ++mu) {
            OperatorMatrix u = build_U(rot, f->element(mu), ord);
            // U = F V F^dag.
            CHECK(mdiff(u.mat,
                        fop.mat * build_V(rot, f->element(mu), ord).mat * fop.mat.adjoint()) <
                  1e-12);
            for (int a = 0; a < f->d; ++a) {
                Eigen::MatrixXcd za = build_Z(f->element(a), ord).mat;
                CHECK(mdiff(u.mat * za * u.mat.adjoint(), za) < 1e-12);
                // U X_b U^dag = c*_{b,mu} Z_{-mu b} X_b.
                Eigen::MatrixXcd lhs =
                    u.mat * build_X(f->element(a), ord).mat * u.mat.adjoint();
                Eigen::MatrixXcd rhs =
                    rot.c[mu][a].conj().value() *
                    build_Z(-(f->element(mu) * f->element(a)), ord).mat *
                    build_X(f->element(a), ord).mat;
                CHECK(mdiff(lhs, rhs) < 1e-12);
            }
        }
    }

    // Odd characteristic: U is diagonal with entries chi(-2^(-1) k^2 mu).
    Field f5 = make_field(5, 1);
    Ordering ord5 = pp(*f5);
    RotationSet rot5 = canonical_rotation_set_odd(*f5);
    FieldElement half = inv(f5->element(2));
    for (int mu = 0; mu < 5; ++mu) {
        OperatorMatrix u = build_U(rot5, f5->element(mu), ord5);
        for (int k = 0; k < 5; ++k) {
            Cx expect =
                character(-(half * f5->element(k) * f5->element(k) * f5->element(mu))).value();
            CHECK(std::abs(u.mat(ord5.index_of[k], ord5.index_of[k]) - expect) < 1e-15);
        }
    }
}

TEST_CASE("squeezing operator") {
    Field f5 = make_field(5, 1);
    Ordering ord = pp(*f5);
    CHECK(mdiff(build_S(*f5, f5->one(), ord).mat, Eigen::MatrixXcd::Identity(5, 5)) == 0.0);

    // xi = 2: S|b> = |2^(-1) b> = |3b>.
    OperatorMatrix s2 = build_S(*f5, f5->element(2), ord);
    for (int b = 0; b < 5; ++b) {
        Eigen::VectorXcd in = Eigen::VectorXcd::Zero(5);
        in(ord.index_of[b]) = 1.0;
        Eigen::VectorXcd out = s2.mat * in;
        for (int a = 0; a < 5; ++a)
            CHECK(std::abs(out(ord.index_of[a]) - Cx(a == 3 * b % 5 ? 1.0 : 0.0, 0.0)) == 0.0);
    }
    CHECK(unitarity_defect(s2) == 0.0);

    try {
        build_S(*f5, f5->zero(), ord);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroSqueeze);
    }
}
