#include <doctest.h>

#include "mstab/honda.hpp"
#include "mstab/rng.hpp"
#include "mstab/stabilizer.hpp"

using namespace mstab;

TEST_CASE("FGL axioms") {
    HondaFGL fgl = HondaFGL::build(32);
    CHECK(fgl.unit_axiom());
    CHECK(fgl.is_symmetric());
    CHECK(fgl.associativity());
    // F(x, y) = x + y mod degree 2
    CHECK(fgl.coeff(1, 0) == F4::one());
    CHECK(fgl.coeff(0, 1) == F4::one());
    CHECK(fgl.coeff(0, 0) == F4::zero());
}

TEST_CASE("two series is x^4") {
    HondaFGL fgl = HondaFGL::build(64);
    CHECK(fgl.two_series() == F4Series::monomial(64, F4::one(), 4));
}

TEST_CASE("formal inverse") {
    HondaFGL fgl = HondaFGL::build(32);
    F4Series iota = fgl.minus_one();
    CHECK(fgl.formal_sum(fgl.identity_series(), iota).is_zero());
    CHECK(iota.c[1] == F4::one());
}

TEST_CASE("endo of S, omega, 2") {
    HondaFGL fgl = HondaFGL::build(32);
    int N = 16;
    int p = (N + 1) / 2;
    OrderElement S(WittNumber(0, 0, p), WittNumber(1, 0, p));
    CHECK(endo_series(S, fgl, 32) == F4Series::monomial(32, F4::one(), 2));
    CHECK(endo_series(named_element(Name::omega, N), fgl, 32) ==
          F4Series::monomial(32, F4::w(), 1));
    CHECK(endo_series(OrderElement::from_int(2, N), fgl, 32) ==
          F4Series::monomial(32, F4::one(), 4));
    CHECK(endo_series(OrderElement::one(N), fgl, 32) == fgl.identity_series());
    CHECK(endo_series(OrderElement::zero(N), fgl, 32).is_zero());
}

TEST_CASE("endo(i) squares to the formal inverse") {
    HondaFGL fgl = HondaFGL::build(32);
    OrderElement i = named_element(Name::i, 16);
    F4Series ei = endo_series(i, fgl, 32);
    CHECK(compose(ei, ei) == fgl.minus_one());
    CHECK(compose(ei, ei) == endo_series(-OrderElement::one(16), fgl, 32));
}

TEST_CASE("homomorphism checks") {
    HondaFGL fgl = HondaFGL::build(32);
    Rng rng(0x40da);
    int checked = 0;
    while (checked < 20) {
        std::vector<F4> d(12);
        d[0] = F4(uint8_t(1 + rng.below(3)));
        for (int t = 1; t < 12; ++t) d[t] = F4(uint8_t(rng.below(4)));
        OrderElement g = o_from_digits(d, 12);
        for (int t = 0; t < 12; ++t) d[t] = F4(uint8_t(rng.below(4)));
        OrderElement h = o_from_digits(d, 12);
        CHECK(endo_hom_check(g, h, fgl, 32));
        ++checked;
    }
}

TEST_CASE("twisted commutation as series") {
    HondaFGL fgl = HondaFGL::build(32);
    Rng rng(0x57a0);
    for (int t = 0; t < 10; ++t) {
        WittNumber a(rng.next(), rng.next(), 6);
        OrderElement ga(a, WittNumber(0, 0, 6));
        OrderElement gs(a.frobenius(), WittNumber(0, 0, 6));
        F4Series lhs = compose(endo_series(ga, fgl, 32), F4Series::monomial(32, F4::one(), 2));
        F4Series es = endo_series(gs, fgl, 32);
        CHECK(lhs == es * es);
    }
}
