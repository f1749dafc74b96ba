#include <doctest.h>

#include "mstab/resolution.hpp"

using namespace mstab;

TEST_CASE("d1 structure at (4, 3)") {
    DualityComplex cx(4, 3);
    // eps o d1 = 0
    for (size_t c = 0; c < cx.space1().coset_count(); ++c)
        CHECK(cx.augment(cx.d1_basis(int32_t(c))) == 0);

    // d1(i e1) = (e - alpha_i alpha) e0
    const CosetSpace& C1 = cx.space1();
    const CosetSpace& C0 = cx.space0();
    QuotientElement i = q_named(Name::i, SubgroupTag::S21, 4);
    int32_t ci = C1.coset_of_element(i.key());
    ModuleVector lhs = cx.d1_basis(ci);
    QuotientElement aia = q_mul(q_named(Name::alpha_i, SubgroupTag::S21, 4),
                                q_named(Name::alpha, SubgroupTag::S21, 4));
    ModuleVector e0 = basis_vector(C0, 3, C0.identity_coset());
    ModuleVector rhs = e0 - act_elem(aia, e0);
    CHECK(lhs == rhs);

    // d1(w e1) = d1(e1): omega is in C6 and commutes with alpha
    QuotientElement w = q_named(Name::omega, SubgroupTag::S21, 4);
    CHECK(C1.coset_of_element(w.key()) == C1.identity_coset());
}

TEST_CASE("theta pipeline at (6, 3)") {
    DualityComplex cx(6, 3);
    const GroupRingElement& th = cx.theta();
    CHECK(!th.is_zero());
    for (const auto& c : cx.theta_condition_checks()) {
        INFO(c.name);
        CHECK(c.pass);
    }
    for (const auto& c : cx.differential_structure_checks()) {
        INFO(c.name);
        CHECK(c.pass);
    }
    // determinism: a fresh complex builds the identical element
    DualityComplex cx2(6, 3);
    CHECK(cx2.theta() == th);
}

TEST_CASE("theta truncates compatibly across levels") {
    // the construction uses only products of named elements, so the level-7
    // element must be the digit truncation of the level-8 one
    DualityComplex cx7(7, 3), cx8(8, 3);
    const GroupRingElement& t8 = cx8.theta();
    GroupRingElement truncated(cx7.desc());
    for (auto& [key, c] : t8.coeffs()) {
        QuotientElement g = QuotientElement::from_key(SubgroupTag::S21, 8, key);
        g.digits.resize(7);
        g.level = 7;
        truncated.add_term(g.key(), c);
    }
    CHECK(truncated == cx7.theta());
}

TEST_CASE("theta two is congruent to 3+i+j+k mod (4, IK1)") {
    DualityComplex cx(6, 3);
    RingDesc d = cx.desc();
    GroupRingElement t2 = cx.theta_two();
    GroupRingElement ref = GroupRingElement::unit(d).scaled(3) + cx.named(Name::i) +
                           cx.named(Name::j) + cx.named(Name::k);
    auto Q = std::make_shared<QuotientGroup>(QuotientGroup::enumerate(SubgroupTag::S21, 6));
    CosetSpace ring = ring_space(Q);
    CHECK(congruent_mod(t2, ref, IdealSpec::four_IK1(), ring));
}

TEST_CASE("theta congruences at (6, 3)") {
    DualityComplex cx(6, 3);
    for (const auto& c : cx.verify_theta_congruences()) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("augmentation span checks") {
    DualityComplex small(3, 3);
    CHECK(small.aug_ideal_generation_check());
    CHECK(small.space0().coset_count() == 2);  // Q3 = G24 and alpha G24
    DualityComplex mid(5, 3);
    CHECK(mid.aug_ideal_generation_check());
}

TEST_CASE("solve_h") {
    DualityComplex cx(5, 3);
    // target zero gives the canonical zero solution
    QuotientElement deep = q_identity(SubgroupTag::S21, 5);
    CHECK(cx.solve_h(deep).is_zero());
    // a nontrivial target is solved and verified by substitution internally
    GroupRingElement h = cx.solve_h(q_named(Name::alpha_sq, SubgroupTag::S21, 5));
    CHECK(!h.is_zero());
}

TEST_CASE("filtration decomposition") {
    DualityComplex cx(6, 3);
    RingDesc d = cx.desc();
    // x = e - alpha^4 lies in I F_{4/2}K1 (alpha^4 is in F_{6/2})
    QuotientElement qa = q_named(Name::alpha, SubgroupTag::S21, 6);
    QuotientElement a4 = q_mul(q_mul(qa, qa), q_mul(qa, qa));
    GroupRingElement x = GroupRingElement::unit(d) - GroupRingElement::basis(d, a4);
    auto dec = cx.decompose_aug_ideal(x, 4);
    // substitution: k = 4 = 2m, m = 2 gives generators e-a^2, e-a_i^2, e-a_j^2
    QuotientElement ai = q_named(Name::alpha_i, SubgroupTag::S21, 6);
    QuotientElement aj = q_named(Name::alpha_j, SubgroupTag::S21, 6);
    GroupRingElement e = GroupRingElement::unit(d);
    GroupRingElement g0 = e - GroupRingElement::basis(d, q_mul(qa, qa));
    GroupRingElement g1 = e - GroupRingElement::basis(d, q_mul(ai, ai));
    GroupRingElement g2 = e - GroupRingElement::basis(d, q_mul(aj, aj));
    CHECK(dec.h0 * g0 + dec.h1 * g1 + dec.h2 * g2 == x);

    // a nonzero element with the image subgroup trivial at this level
    GroupRingElement bad = GroupRingElement::unit(d) -
                           GroupRingElement::basis(d, qa);
    CHECK_THROWS_AS(cx.decompose_aug_ideal(bad, 6), NoSolution);
}

TEST_CASE("certified solve_h at level 9") {
    // F_{8/2}K1 is first visible at level 9; the membership certificate and
    // the substitution identity are both exact
    DualityComplex cx(9, 2);
    QuotientElement qa = q_named(Name::alpha, SubgroupTag::S21, 9);
    QuotientElement g = q_identity(SubgroupTag::S21, 9);
    for (int t = 0; t < 8; ++t) g = q_mul(g, qa);  // alpha^8 in F_{8/2}K1
    CHECK(!g.is_identity());
    GroupRingElement h = cx.solve_h(g, true);
    CHECK(!h.is_zero());
}

TEST_CASE("script_I span contains its certified generators") {
    // the dense route, at a dimension where it is cheap: level 6, m = 3
    auto Q = std::make_shared<QuotientGroup>(QuotientGroup::enumerate(SubgroupTag::S21, 6));
    CosetSpace ring = ring_space(Q);
    RingDesc d{SubgroupTag::S21, 6, 3};
    GroupRingElement e = GroupRingElement::unit(d);
    GroupRingElement a = GroupRingElement::named(d, Name::alpha);
    HowellBasis span = ideal_span(IdealSpec::script_I(), ring, 3, ring.identity_coset());
    CHECK(span.member(to_vector(gr_pow(e - a, 7), ring).data()));
    CHECK(span.member(to_vector((gr_pow(e - a, 3)).scaled(2), ring).data()));
    CHECK(span.member(to_vector((e - a).scaled(4), ring).data()));
    // sum_{s<8} alpha^s is in script_I by the power-sum congruence
    GroupRingElement s(d);
    GroupRingElement p = e;
    for (int t = 0; t < 8; ++t) {
        s = s + p;
        p = p * a;
    }
    CHECK(span.member(to_vector(s, ring).data()));
    CHECK(!span.member(to_vector(e - a, ring).data()));  // not everything is inside
}

TEST_CASE("n1 identities") {
    for (const auto& c : n1_identities(3)) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK_THROWS(n1_identities(2));
}

TEST_CASE("dual identities at (4, 3)") {
    for (const auto& c : dual_identity_checks(4, 3)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
