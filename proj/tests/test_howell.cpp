#include <doctest.h>

#include <algorithm>
#include <random>

#include "mstab/howell.hpp"
#include "mstab/rng.hpp"

using namespace mstab;

TEST_CASE("annihilator rows expose trailing columns") {
    // over Z/4, span{(2, 1)} contains 2*(2,1) = (0, 2)
    HowellBasis b(2, 2);
    b.insert({2, 1});
    CHECK(b.member({0, 2}));
    CHECK(b.member({2, 1}));
    CHECK(b.member({2, 3}));  // (2,1) + (0,2)
    CHECK(!b.member({1, 0}));
    CHECK(!b.member({0, 1}));
}

TEST_CASE("member basics") {
    HowellBasis b(3, 3);
    CHECK(b.member({0, 0, 0}));
    b.insert({0, 4, 0});
    CHECK(b.member({0, 4, 0}));
    CHECK(!b.member({0, 2, 0}));
    b.insert({0, 2, 0});
    CHECK(b.member({0, 2, 0}));
    CHECK(b.member({0, 6, 0}));
}

TEST_CASE("canonical form is order independent") {
    Rng rng(0x40e1);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 4 + int(rng.below(10));
        int m = 1 + int(rng.below(3));
        std::vector<std::vector<uint8_t>> rows;
        for (int t = 0; t < 12; ++t) {
            std::vector<uint8_t> row(dim);
            for (auto& x : row) x = uint8_t(rng.below(1u << m));
            rows.push_back(row);
        }
        HowellBasis a(dim, m), b(dim, m);
        for (const auto& row : rows) a.insert(row);
        std::shuffle(rows.begin(), rows.end(), std::mt19937(unsigned(rng.next())));
        for (const auto& row : rows) b.insert(row);
        CHECK(a.equals_span(b));
        // membership of all original rows and random combinations
        std::vector<uint8_t> combo(dim, 0);
        uint8_t mask = uint8_t((1u << m) - 1);
        for (const auto& row : rows) {
            uint8_t q = uint8_t(rng.below(1u << m));
            for (int c = 0; c < dim; ++c) combo[c] = uint8_t((combo[c] + q * row[c]) & mask);
        }
        CHECK(a.member(combo));
    }
}

TEST_CASE("solve tracks combinations") {
    Rng rng(0x50e2);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 5 + int(rng.below(6));
        int m = 2 + int(rng.below(2));
        uint8_t mask = uint8_t((1u << m) - 1);
        std::vector<std::vector<uint8_t>> cols;
        for (int t = 0; t < 8; ++t) {
            std::vector<uint8_t> col(dim);
            for (auto& x : col) x = uint8_t(rng.below(1u << m));
            cols.push_back(col);
        }
        // a random combination is always solvable, and the returned
        // coefficients must reproduce it
        std::vector<uint8_t> target(dim, 0);
        for (const auto& col : cols) {
            uint8_t q = uint8_t(rng.below(1u << m));
            for (int c = 0; c < dim; ++c) target[c] = uint8_t((target[c] + q * col[c]) & mask);
        }
        HowellBasis b(dim, m, int(cols.size()));
        for (size_t t = 0; t < cols.size(); ++t) {
            std::vector<uint8_t> aug(cols.size(), 0);
            aug[t] = 1;
            b.insert(cols[t], aug);
        }
        auto sol = b.solve(target);
        REQUIRE(sol.has_value());
        std::vector<uint8_t> acc(dim, 0);
        for (size_t t = 0; t < cols.size(); ++t)
            for (int c = 0; c < dim; ++c)
                acc[c] = uint8_t((acc[c] + (*sol)[t] * cols[t][c]) & mask);
        CHECK(acc == target);
    }
}

TEST_CASE("full byte modulus") {
    // m = 8 exercises the mask edge: 2^8 wraps the storage type exactly
    HowellBasis b(2, 8);
    b.insert({128, 1});
    CHECK(b.member({128, 1}));
    CHECK(b.member({0, 2}));  // 2 * (128, 1) = (256, 2) = (0, 2)
    CHECK(!b.member({64, 0}));
    b.insert({3, 0});  // odd pivot normalizes to 1
    CHECK(b.member({1, 0}));
    CHECK(b.member({0, 255}));
}

TEST_CASE("module closure under permutations") {
    // Z/4 on 4 coordinates with a cyclic shift: the closure of a single
    // basis vector is everything
    std::vector<int32_t> shift = {1, 2, 3, 0};
    std::vector<std::vector<uint8_t>> seeds = {{1, 0, 0, 0}};
    HowellBasis b = module_closure(4, 2, seeds, {shift});
    for (int c = 0; c < 4; ++c) {
        std::vector<uint8_t> e(4, 0);
        e[c] = 1;
        CHECK(b.member(e));
    }
    // the closure of (1, -1, 0, 0) under the shift is the augmentation kernel
    std::vector<std::vector<uint8_t>> seeds2 = {{1, 3, 0, 0}};
    HowellBasis k = module_closure(4, 2, seeds2, {shift});
    CHECK(k.member({1, 0, 0, 3}));
    CHECK(k.member({0, 1, 3, 0}));
    CHECK(!k.member({1, 0, 0, 0}));
    CHECK(k.row_count() == 3);
}
