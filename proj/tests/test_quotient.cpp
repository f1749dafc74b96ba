#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <unordered_set>

#include "mstab/quotient.hpp"
#include "mstab/rng.hpp"

using namespace mstab;

TEST_CASE("project and digit strings") {
    // i = 1 + S + w S^2 + ... (third digit from the extraction oracle)
    QuotientElement qi = q_named(Name::i, SubgroupTag::S21, 3);
    CHECK(qi.digit_string() == "11w");
    CHECK(q_identity(SubgroupTag::S21, 5).digit_string() == "10000");
    // alpha_i alpha_j alpha_k alpha^2 lies in F_{8/2}K1: identity at level 8
    OrderElement g = named_element(Name::alpha_i, 16) * named_element(Name::alpha_j, 16) *
                     named_element(Name::alpha_k, 16) * named_element(Name::alpha_sq, 16);
    CHECK(project(g, SubgroupTag::K1, 8).is_identity());

    CHECK_THROWS_AS(project(named_element(Name::pi, 8), SubgroupTag::K1, 3), NotInSubgroup);
    CHECK_THROWS_AS(project(named_element(Name::i, 8), SubgroupTag::S21, 2), LevelTooSmall);
    CHECK_THROWS_AS(project(named_element(Name::i, 4), SubgroupTag::S21, 6),
                    InsufficientPrecision);
}

TEST_CASE("quotient group operations") {
    int n = 4;
    QuotientElement x = q_named(Name::alpha, SubgroupTag::S21, n);
    CHECK(q_mul(x, q_inv(x)).is_identity());
    QuotientElement i = q_named(Name::i, SubgroupTag::S21, n);
    QuotientElement j = q_named(Name::j, SubgroupTag::S21, n);
    QuotientElement k = q_named(Name::k, SubgroupTag::S21, n);
    CHECK(q_mul(i, j) == k);
    QuotientElement w = q_named(Name::omega, SubgroupTag::S21, n);
    CHECK(q_mul(q_mul(w, w), w).is_identity());
}

TEST_CASE("enumeration sizes") {
    CHECK(QuotientGroup::enumerate(SubgroupTag::S2, 1).size() == 3);
    CHECK(QuotientGroup::enumerate(SubgroupTag::S2, 4).size() == 3 * 64);
    // gr_{2/2}(S21) = F4 (alpha and -1 are independent norm-one classes), so
    // |Q_3| = 48; the F4/F2 alternation starts at level 3
    CHECK(QuotientGroup::enumerate(SubgroupTag::S21, 3).size() == 48);
    CHECK(QuotientGroup::enumerate(SubgroupTag::S21, 4).size() == 192);
    CHECK(QuotientGroup::enumerate(SubgroupTag::S21, 5).size() == 384);
    CHECK(QuotientGroup::enumerate(SubgroupTag::S21, 6).size() == 1536);
    CHECK(QuotientGroup::enumerate(SubgroupTag::S21, 8).size() == 12288);
    // K1: gr_2 = {0, w}, so 2 at level 3
    CHECK(QuotientGroup::enumerate(SubgroupTag::K1, 3).size() == 2);
    CHECK(QuotientGroup::enumerate(SubgroupTag::K1, 8).size() == 512);
    // K: digit 2 restricted to {0, w}, no determinant condition
    for (int n = 3; n <= 6; ++n)
        CHECK(QuotientGroup::enumerate(SubgroupTag::K, n).size() == size_t(2) << (2 * (n - 3)));
    CHECK_THROWS_AS(QuotientGroup::enumerate(SubgroupTag::S21, 8, 1000), SizeCapExceeded);
    CHECK_THROWS_AS(QuotientGroup::enumerate(SubgroupTag::K1, 2), LevelTooSmall);
}

TEST_CASE("Q3(K1) contains exactly e and alpha-bar") {
    auto Q = QuotientGroup::enumerate(SubgroupTag::K1, 3);
    REQUIRE(Q.size() == 2);
    CHECK(Q.element_at(0).is_identity());
    CHECK(Q.contains(q_named(Name::alpha, SubgroupTag::K1, 3).key()));
}

TEST_CASE("generated subgroups") {
    int n = 3;
    QuotientElement i = q_named(Name::i, SubgroupTag::S21, n);
    QuotientElement w = q_named(Name::omega, SubgroupTag::S21, n);
    auto g24 = generated_subgroup({i, w});
    CHECK(g24.size() == 24);
    auto trivial = generated_subgroup({q_identity(SubgroupTag::S21, n)});
    CHECK(trivial.size() == 1);
    // alpha-bar is not in <i, w>, and adding it generates everything
    QuotientElement a = q_named(Name::alpha, SubgroupTag::S21, n);
    bool inside = false;
    for (const auto& g : g24) inside = inside || g == a;
    CHECK(!inside);
    auto all = generated_subgroup({a, i, w});
    CHECK(all.size() == QuotientGroup::enumerate(SubgroupTag::S21, n).size());
    // the 24 projected elements of <i, w> stay distinct at higher levels
    for (int lvl = 4; lvl <= 6; ++lvl)
        CHECK(finite_subgroup(FiniteSubgroup::G24, SubgroupTag::S21, lvl).size() == 24);
    CHECK(finite_subgroup(FiniteSubgroup::C6, SubgroupTag::S21, 4).size() == 6);
    CHECK(finite_subgroup(FiniteSubgroup::G24prime, SubgroupTag::S21, 4).size() == 24);
    CHECK(finite_subgroup(FiniteSubgroup::Q8, SubgroupTag::S21, 4).size() == 8);
}

TEST_CASE("coset spaces") {
    auto Q6 = std::make_shared<QuotientGroup>(QuotientGroup::enumerate(SubgroupTag::S21, 6));
    CosetSpace c0 = coset_space(Q6, FiniteSubgroup::G24);
    CHECK(c0.coset_count() == 64);  // 1536 / 24
    CosetSpace c1 = coset_space(Q6, FiniteSubgroup::C6);
    CHECK(c1.coset_count() == 4 * Q6->size() / 24);

    auto Q3 = std::make_shared<QuotientGroup>(QuotientGroup::enumerate(SubgroupTag::S21, 3));
    CosetSpace c0_3 = coset_space(Q3, FiniteSubgroup::G24);
    CHECK(c0_3.coset_count() == 2);  // Q3 = G24 and alpha G24

    // action axioms: identity and compatibility over the generator tables
    QuotientElement id = q_identity(SubgroupTag::S21, 6);
    for (size_t c = 0; c < c0.coset_count(); ++c)
        CHECK(c0.act(id, int32_t(c)) == int32_t(c));
    auto gens = c0.action_gens();
    Rng rng(0xc0c0);
    for (int t = 0; t < 50; ++t) {
        size_t a = rng.below(gens.size()), b = rng.below(gens.size());
        int32_t c = int32_t(rng.below(c0.coset_count()));
        CHECK(c0.act(q_mul(gens[a], gens[b]), c) ==
              c0.act_gen(a, c0.act_gen(b, c)));
    }
}

TEST_CASE("pi conjugation") {
    int n = 4;
    CHECK(pi_conjugate(q_identity(SubgroupTag::S21, n)).is_identity());
    auto g24p = finite_subgroup(FiniteSubgroup::G24prime, SubgroupTag::S21, n);
    QuotientElement pi_i = pi_conjugate(q_named(Name::i, SubgroupTag::S21, n));
    bool found = false;
    for (const auto& g : g24p) found = found || g == pi_i;
    CHECK(found);
    // pi^2 = -3 is central: conjugating twice is the identity map
    auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
    for (size_t idx = 0; idx < Q.size(); ++idx) {
        QuotientElement x = Q.element_at(idx);
        CHECK(pi_conjugate(pi_conjugate(x)) == x);
    }
}

TEST_CASE("conjugacy search") {
    int n = 3;
    auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
    auto g24 = finite_subgroup(FiniteSubgroup::G24, SubgroupTag::S21, n);
    auto witness = conjugacy_search(g24, g24, Q);
    REQUIRE(witness.has_value());
    CHECK(witness->is_identity());

    // a manufactured conjugate is always found
    auto q8 = finite_subgroup(FiniteSubgroup::Q8, SubgroupTag::S21, 4);
    QuotientElement w = q_named(Name::omega, SubgroupTag::S21, 4);
    std::vector<QuotientElement> q8w;
    for (const auto& g : q8) q8w.push_back(q_mul(q_mul(w, g), q_inv(w)));
    auto Q4 = QuotientGroup::enumerate(SubgroupTag::S21, 4);
    auto wit = conjugacy_search(q8, q8w, Q4);
    REQUIRE(wit.has_value());
    // verify the witness conjugates A onto B
    std::vector<uint64_t> bkeys;
    for (const auto& b : q8w) bkeys.push_back(b.key());
    std::sort(bkeys.begin(), bkeys.end());
    std::vector<uint64_t> ckeys;
    for (const auto& a : q8)
        ckeys.push_back(q_mul(q_mul(*wit, a), q_inv(*wit)).key());
    std::sort(ckeys.begin(), ckeys.end());
    CHECK(bkeys == ckeys);

    // size mismatch can never be conjugate
    auto c6 = finite_subgroup(FiniteSubgroup::C6, SubgroupTag::S21, 4);
    CHECK(!conjugacy_search(q8, c6, Q4).has_value());
}

TEST_CASE("Q8-bar vs its pi-conjugate per level") {
    // the images merge at low levels and separate from level 6 on, which is
    // consistent with the two classes being distinct in the limit
    for (int n : {3, 4, 5}) {
        auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
        auto a = finite_subgroup(FiniteSubgroup::Q8, SubgroupTag::S21, n);
        auto b = finite_subgroup(FiniteSubgroup::Q8prime, SubgroupTag::S21, n);
        CHECK(conjugacy_search(a, b, Q).has_value());
    }
    auto Q6 = QuotientGroup::enumerate(SubgroupTag::S21, 6);
    auto a6 = finite_subgroup(FiniteSubgroup::Q8, SubgroupTag::S21, 6);
    auto b6 = finite_subgroup(FiniteSubgroup::Q8prime, SubgroupTag::S21, 6);
    CHECK(!conjugacy_search(a6, b6, Q6).has_value());
}

TEST_CASE("level truncation maps are onto") {
    // every level-4 class is the truncation of a level-8 class, so the
    // finite-level membership condition is consistent across levels
    auto Q8 = QuotientGroup::enumerate(SubgroupTag::S21, 8);
    auto Q4 = QuotientGroup::enumerate(SubgroupTag::S21, 4);
    std::unordered_set<uint64_t> images;
    for (size_t i = 0; i < Q8.size(); ++i) {
        QuotientElement g = Q8.element_at(i);
        g.digits.resize(4);
        g.level = 4;
        images.insert(g.key());
        CHECK(Q4.contains(g.key()));
    }
    CHECK(images.size() == Q4.size());

    auto K8 = QuotientGroup::enumerate(SubgroupTag::K1, 8);
    auto K5 = QuotientGroup::enumerate(SubgroupTag::K1, 5);
    std::unordered_set<uint64_t> kimages;
    for (size_t i = 0; i < K8.size(); ++i) {
        QuotientElement g = K8.element_at(i);
        g.digits.resize(5);
        g.level = 5;
        kimages.insert(g.key());
    }
    CHECK(kimages.size() == K5.size());
}

TEST_CASE("well definedness of projection") {
    Rng rng(0x9e37);
    int n = 5;
    auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
    for (int t = 0; t < 1000; ++t) {
        QuotientElement x = Q.element_at(rng.below(Q.size()));
        QuotientElement y = Q.element_at(rng.below(Q.size()));
        int N = 2 * (((n + 4) + 1) / 2);
        std::vector<F4> dx = x.digits, dy = y.digits;
        for (int a = n; a < n + 4; ++a) {
            dx.push_back(F4(uint8_t(rng.below(4))));
            dy.push_back(F4(uint8_t(rng.below(4))));
        }
        OrderElement gx = o_from_digits(dx, N), gy = o_from_digits(dy, N);
        CHECK(s_digits(gx * gy, n) == q_mul(x, y).digits);
    }
}

TEST_CASE("cache round trip is bit identical") {
    auto Q = QuotientGroup::enumerate(SubgroupTag::K1, 5);
    std::string json = Q.to_cache_json();
    QuotientGroup Q2 = QuotientGroup::from_cache_json(json);
    CHECK(Q.keys() == Q2.keys());
    CHECK(Q2.to_cache_json() == json);
}

TEST_CASE("cache directory round trip") {
    std::string dir = "mstab_cache_test_dir";
    std::filesystem::create_directory(dir);
    setenv("MSTAB_CACHE_DIR", dir.c_str(), 1);
    QuotientGroup fresh = QuotientGroup::enumerate(SubgroupTag::S21, 4);
    QuotientGroup first = enumerate_cached(SubgroupTag::S21, 4);   // writes
    QuotientGroup second = enumerate_cached(SubgroupTag::S21, 4);  // reads
    unsetenv("MSTAB_CACHE_DIR");
    CHECK(first.keys() == fresh.keys());
    CHECK(second.keys() == fresh.keys());
    CHECK(second.to_cache_json() == fresh.to_cache_json());
    std::filesystem::remove_all(dir);
}
