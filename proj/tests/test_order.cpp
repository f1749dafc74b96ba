#include <doctest.h>

#include "mstab/order.hpp"
#include "mstab/rng.hpp"

using namespace mstab;

namespace {

OrderElement rand_order(Rng& rng, int N) {
    int p = (N + 1) / 2;
    return OrderElement(WittNumber(rng.next(), rng.next(), p),
                        WittNumber(rng.next(), rng.next(), p));
}

OrderElement rand_unit(Rng& rng, int N) {
    while (true) {
        OrderElement g = rand_order(rng, N);
        if (g.is_unit()) return g;
    }
}

OrderElement S_elem(int N) {
    int p = (N + 1) / 2;
    return OrderElement(WittNumber(0, 0, p), WittNumber(1, 0, p));
}

// test-only 2x2 matrix representation rho(a+bS) = [[a, b], [2 b^s, a^s]]
WittNumber rho_det(const OrderElement& g) {
    WittNumber two(2, 0, g.a().precision());
    return g.a() * g.a().frobenius() - g.b() * (two * g.b().frobenius());
}

}  // namespace

TEST_CASE("S^2 = 2 and the twisted commutation") {
    int N = 16;
    OrderElement S = S_elem(N);
    CHECK(S * S == OrderElement::from_int(2, N));
    OrderElement w(WittNumber(0, 1, 8), WittNumber(0, 0, 8));
    // w S = S w^sigma, both sides computed with the displayed product rule
    CHECK(w * S == S * w.galois());

    Rng rng(0xabcd);
    for (int t = 0; t < 10000; ++t) {
        OrderElement a(WittNumber(rng.next(), rng.next(), 8), WittNumber(0, 0, 8));
        OrderElement lhs = a * S;
        OrderElement rhs = S * a.galois();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ring axioms") {
    Rng rng(0xbeef);
    int N = 16;
    for (int t = 0; t < 10000; ++t) {
        OrderElement a = rand_order(rng, N), b = rand_order(rng, N), c = rand_order(rng, N);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
    OrderElement g = rand_order(rng, N);
    CHECK(g * OrderElement::one(N) == g);
}

TEST_CASE("valuation") {
    int N = 12;
    CHECK(S_elem(N).s_valuation().index == 1);
    CHECK(OrderElement::from_int(2, N).s_valuation().index == 2);
    CHECK(OrderElement::one(N).s_valuation().index == 0);
    SValuation sat = OrderElement::zero(N).s_valuation();
    CHECK(sat.at_least);
    CHECK(sat.index == N);

    Rng rng(0xfeed);
    for (int t = 0; t < 10000; ++t) {
        OrderElement a = rand_order(rng, 24), b = rand_order(rng, 24);
        SValuation va = a.s_valuation(), vb = b.s_valuation();
        if (va.at_least || vb.at_least) continue;
        if (va.index + vb.index >= 24) continue;
        SValuation vp = (a * b).s_valuation();
        CHECK(!vp.at_least);
        CHECK(vp.index == va.index + vb.index);
    }
}

TEST_CASE("determinant") {
    OrderElement pi(WittNumber(1, 2, 15), WittNumber(0, 0, 15));
    CHECK(pi.det() == WittNumber::from_int(3, 15));
    CHECK(OrderElement::one(10).det() == WittNumber::from_int(1, 5));

    Rng rng(0xdead);
    for (int t = 0; t < 10000; ++t) {
        OrderElement g = rand_unit(rng, 16), h = rand_unit(rng, 16);
        CHECK((g * h).det() == g.det() * h.det());
        CHECK(g.det().is_galois_invariant());
        CHECK(g.det() == rho_det(g));  // matrix-representation cross check
    }
}

TEST_CASE("inverse") {
    int N = 16;
    OrderElement w(WittNumber(0, 1, 8), WittNumber(0, 0, 8));
    OrderElement w2(WittNumber(uint64_t(-1), uint64_t(-1), 8), WittNumber(0, 0, 8));
    CHECK(w.inverse() == w2);
    CHECK_THROWS_AS(S_elem(N).inverse(), NonUnitError);

    OrderElement pi(WittNumber(1, 2, 8), WittNumber(0, 0, 8));
    CHECK(pi * pi.inverse() == OrderElement::one(N));

    Rng rng(0xcafe);
    for (int t = 0; t < 10000; ++t) {
        OrderElement g = rand_unit(rng, 16);
        CHECK(g * g.inverse() == OrderElement::one(16));
    }
}

TEST_CASE("galois") {
    int N = 12;
    OrderElement S = S_elem(N);
    CHECK(S.galois() == S);
    OrderElement w(WittNumber(0, 1, 6), WittNumber(0, 0, 6));
    CHECK(w.galois() == w * w);  // w^sigma = w^2
    OrderElement pi(WittNumber(1, 2, 6), WittNumber(0, 0, 6));
    CHECK(pi.galois() == OrderElement(WittNumber(1, 2, 6).frobenius(), WittNumber(0, 0, 6)));

    Rng rng(0x9d9d);
    for (int t = 0; t < 5000; ++t) {
        OrderElement a = rand_order(rng, 16), b = rand_order(rng, 16);
        CHECK((a * b).galois() == a.galois() * b.galois());
        CHECK(a.galois().galois() == a);
    }
}

TEST_CASE("digit interleaving") {
    int N = 8;
    CHECK(s_digits(OrderElement::one(N), 3) ==
          std::vector<F4>{F4::one(), F4::zero(), F4::zero()});
    // round trip on randoms
    Rng rng(0x1111);
    for (int t = 0; t < 5000; ++t) {
        OrderElement g = rand_order(rng, 16);
        CHECK(o_from_digits(s_digits(g, 16), 16) == g);
    }
}

TEST_CASE("congruence mod S^n") {
    int N = 12;
    OrderElement a = OrderElement::from_int(1, N) + S_elem(N) * OrderElement::from_int(8, N);
    // 8 S = S^7, so a = 1 mod S^7 but not mod S^8
    CHECK(congruent_mod_s(a, OrderElement::one(N), 7));
    CHECK(!congruent_mod_s(a, OrderElement::one(N), 8));
}

TEST_CASE("powers") {
    int N = 16;
    OrderElement pi(WittNumber(1, 2, 8), WittNumber(0, 0, 8));
    CHECK(o_pow(pi, 2) == OrderElement::from_int(-3, N));  // pi^2 = -3
    CHECK(o_pow(pi, -1) * pi == OrderElement::one(N));
    CHECK(o_pow(pi, 0) == OrderElement::one(N));
}
