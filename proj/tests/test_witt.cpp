#include <doctest.h>

#include "mstab/rng.hpp"
#include "mstab/witt.hpp"

using namespace mstab;

namespace {
WittNumber rand_witt(Rng& rng, int P) { return WittNumber(rng.next(), rng.next(), P); }
}

TEST_CASE("multiplication examples") {
    // pi * pi^sigma = 3
    WittNumber pi(1, 2, 30);
    CHECK(pi * pi.frobenius() == WittNumber::from_int(3, 30));
    // u * 1 = u
    WittNumber u(123456, 9876, 20);
    CHECK(u * WittNumber::from_int(1, 20) == u);
    // (1+2w)(1-2w) = 5+4w after reducing by w^2 = -1-w
    CHECK(WittNumber(1, 2, 16) * WittNumber(1, uint64_t(-2), 16) == WittNumber(5, 4, 16));
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(0x77177);
    for (int P : {8, 16, 32}) {
        for (int t = 0; t < 10000; ++t) {
            WittNumber a = rand_witt(rng, P), b = rand_witt(rng, P), c = rand_witt(rng, P);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK(a - a == WittNumber::from_int(0, P));
        }
    }
}

TEST_CASE("frobenius is a ring involution") {
    CHECK(WittNumber(0, 1, 12).frobenius() == WittNumber(uint64_t(-1), uint64_t(-1), 12));
    CHECK(WittNumber::from_int(1, 12).frobenius() == WittNumber::from_int(1, 12));
    CHECK(WittNumber(1, 2, 12).frobenius() == WittNumber(uint64_t(-1), uint64_t(-2), 12));
    Rng rng(0x5ef1);
    for (int t = 0; t < 10000; ++t) {
        WittNumber a = rand_witt(rng, 24), b = rand_witt(rng, 24);
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        CHECK(a.frobenius().frobenius() == a);
    }
}

TEST_CASE("teichmuller lifts satisfy t^4 = t") {
    for (F4 r : f4_all) {
        for (int P : {4, 9, 30}) {
            WittNumber t = teichmuller(r, P);
            WittNumber t2 = t * t;
            CHECK(t2 * t2 == t);
            CHECK(t.residue() == r);
        }
    }
    CHECK(teichmuller(F4::zero(), 10).is_zero());
    CHECK(teichmuller(F4::one(), 10) == WittNumber::from_int(1, 10));
    CHECK(teichmuller(F4::w(), 10) == WittNumber(0, 1, 10));
}

TEST_CASE("digit extraction round trips") {
    // 1 + 2w -> [1, w, 0, ...]
    auto d = witt_digits(WittNumber(1, 2, 8), 4);
    CHECK(d == std::vector<F4>{F4::one(), F4::w(), F4::zero(), F4::zero()});
    // 3 -> [1, 1, 0, ...] (forced by the round trip)
    auto d3 = witt_digits(WittNumber::from_int(3, 8), 3);
    CHECK(d3 == std::vector<F4>{F4::one(), F4::one(), F4::zero()});
    CHECK(witt_digits(WittNumber::from_int(0, 8), 8) == std::vector<F4>(8, F4::zero()));

    Rng rng(0xd161);
    for (int t = 0; t < 10000; ++t) {
        int P = 4 + int(rng.below(28));
        WittNumber u = rand_witt(rng, P);
        CHECK(witt_from_digits(witt_digits(u, P), P) == u);
    }
    CHECK_THROWS_AS(witt_digits(WittNumber(1, 0, 4), 5), InsufficientPrecision);
}

TEST_CASE("inverse") {
    CHECK(WittNumber::from_int(1, 10).inverse() == WittNumber::from_int(1, 10));
    // 1/3 mod 8 is 3
    CHECK(WittNumber::from_int(3, 3).inverse() == WittNumber::from_int(3, 3));
    CHECK_THROWS_AS(WittNumber::from_int(2, 10).inverse(), NonUnitError);
    Rng rng(0x1a4e);
    for (int t = 0; t < 2000; ++t) {
        WittNumber u = rand_witt(rng, 30);
        if (u.v2() != 0) continue;
        CHECK(u * u.inverse() == WittNumber::from_int(1, 30));
    }
}

TEST_CASE("square root of -7") {
    CHECK(hensel_sqrt_m7(3) == WittNumber::from_int(5, 3));
    // canonical branch: 53 mod 64 (brute force gives {21, 53}; 53 lifts)
    CHECK(hensel_sqrt_m7(6) == WittNumber::from_int(53, 6));
    for (int P : {3, 4, 5, 10, 20, 40}) {
        WittNumber s = hensel_sqrt_m7(P);
        CHECK((s * s + WittNumber::from_int(7, P)).is_zero());
        CHECK((s.x() & 7) == 5);
    }
    // truncation consistency across precisions
    WittNumber big = hensel_sqrt_m7(40);
    for (int P : {3, 6, 12, 24}) CHECK(big.truncated(P) == hensel_sqrt_m7(P));
}

TEST_CASE("valuation") {
    CHECK(WittNumber(2, 4, 8).v2() == 1);
    CHECK(WittNumber(0, 1, 8).v2() == 0);
    CHECK(WittNumber(0, 0, 8).v2() == -1);
    Rng rng(0x77aa);
    for (int t = 0; t < 10000; ++t) {
        WittNumber a = rand_witt(rng, 32), b = rand_witt(rng, 32);
        int va = a.v2(), vb = b.v2();
        if (va < 0 || vb < 0 || va + vb >= 32) continue;
        CHECK((a * b).v2() == va + vb);
    }
}

TEST_CASE("mixed precision follows the min rule") {
    WittNumber a(100, 7, 20), b(3, 1, 10);
    CHECK((a * b).precision() == 10);
    CHECK((a + b).precision() == 10);
}
