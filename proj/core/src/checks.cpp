#include "mstab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mstab/honda.hpp"
#include "mstab/resolution.hpp"
#include "mstab/rng.hpp"

namespace mstab::checks {

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteContext {
    CheckParams params;
    std::vector<Report>* out;

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        Report r;
        r.check = name;
        r.params = params;
        r.params.seed = derive_seed(params.seed, name);
        auto t0 = Clock::now();
        try {
            fn(r);
        } catch (const SizeCapExceeded& e) {
            r.status = Report::Skipped;
            r.details = e.what();
        } catch (const Error& e) {
            r.status = Report::Fail;
            r.details = e.what();
        }
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        out->push_back(r);
    }
};

void set(Report& r, bool ok, const std::string& fail_details = "") {
    r.status = ok ? Report::Pass : Report::Fail;
    if (!ok && r.details.empty()) r.details = fail_details;
}

OrderElement random_unit(Rng& rng, int N) {
    std::vector<F4> d(N);
    d[0] = F4(uint8_t(1 + rng.below(3)));
    for (int t = 1; t < N; ++t) d[t] = F4(uint8_t(rng.below(4)));
    return o_from_digits(d, N);
}

// exact filtration level n: identity prefix, nonzero digit at n, random tail
OrderElement random_filtration(Rng& rng, int N, int n) {
    std::vector<F4> d(N, F4::zero());
    d[0] = F4::one();
    d[n] = F4(uint8_t(1 + rng.below(3)));
    for (int t = n + 1; t < N; ++t) d[t] = F4(uint8_t(rng.below(4)));
    return o_from_digits(d, N);
}

WittNumber random_witt(Rng& rng, int P) { return WittNumber(rng.next(), rng.next(), P); }

// ---- congruences -----------------------------------------------------------

void suite_congruences(SuiteContext& ctx) {
    int N = std::max(ctx.params.s_precision, 12);

    struct Line {
        Name name;
        std::vector<F4> digits;  // reference expansion
        int mod;                 // compare mod S^mod
    };
    const F4 o = F4::zero(), l = F4::one(), w = F4::w(), v = F4::w2();
    std::vector<Line> table = {
        {Name::i, {l, l}, 2},
        {Name::j, {l, v}, 2},
        {Name::alpha, {l, o, w, o}, 4},
        {Name::alpha_i, {l, o, o, l}, 4},
        {Name::alpha_j, {l, o, o, v}, 4},
        {Name::alpha_sq, {l, o, o, o, l}, 5},
        {Name::alpha_pi, {l, o, o, o, w}, 5},
    };
    for (const auto& line : table) {
        ctx.run(std::string("congruence.") + name_string(line.name), [&](Report& r) {
            OrderElement g = named_element(line.name, N);
            OrderElement ref = o_from_digits(line.digits, N);
            set(r, congruent_mod_s(g, ref, line.mod),
                "expansion " + expansion_string(g, line.mod));
        });
    }
    ctx.run("congruence.minus_one", [&](Report& r) {
        OrderElement m1 = -OrderElement::one(N);
        OrderElement ref = o_from_digits({l, o, l, o}, N);
        set(r, congruent_mod_s(m1, ref, 4), expansion_string(m1, 4));
    });

    ctx.run("congruence.det_pi", [&](Report& r) {
        OrderElement pi = named_element(Name::pi, 60);  // det exact mod 2^30
        set(r, pi.det() == WittNumber::from_int(3, 30), pi.det().to_string());
    });
    ctx.run("congruence.det_alpha", [&](Report& r) {
        OrderElement a = named_element(Name::alpha, 60);
        set(r, a.det() == WittNumber::from_int(-1, 30), a.det().to_string());
    });
    ctx.run("congruence.sqrt_m7_mod8", [&](Report& r) {
        WittNumber s = hensel_sqrt_m7(30);
        set(r, (s.x() & 7) == 5 && s.y() == 0, s.to_string());
        WittNumber sq = s * s + WittNumber::from_int(7, 30);
        if (!sq.is_zero()) set(r, false, "s^2 + 7 != 0");
    });

    // products landing deep in the filtration, mod S^8 with T = alpha S
    int Nd = std::max(N, 16);
    OrderElement alpha = named_element(Name::alpha, Nd);
    int p = (Nd + 1) / 2;
    OrderElement S(WittNumber(0, 0, p), WittNumber(1, 0, p));
    OrderElement T = alpha * S;
    auto wc = [&](int64_t x, int64_t y) {
        return OrderElement(WittNumber(uint64_t(x), uint64_t(y), p), WittNumber(0, 0, p));
    };
    OrderElement ai = named_element(Name::alpha_i, Nd);
    OrderElement aj = named_element(Name::alpha_j, Nd);
    OrderElement ak = named_element(Name::alpha_k, Nd);
    OrderElement asq = named_element(Name::alpha_sq, Nd);
    ctx.run("deep_products.alpha_i", [&](Report& r) {
        set(r, congruent_mod_s(ai, wc(13, 0) + wc(2, 8) * T, 8), expansion_string(ai, 8));
    });
    ctx.run("deep_products.alpha_i_alpha_j", [&](Report& r) {
        OrderElement lhs = ai * aj;
        set(r, congruent_mod_s(lhs, wc(9, 8) + wc(8, 14) * T, 8), expansion_string(lhs, 8));
    });
    ctx.run("deep_products.alpha_i_alpha_j_alpha_k", [&](Report& r) {
        OrderElement lhs = ai * aj * ak;
        set(r, congruent_mod_s(lhs, wc(13, 8), 8), expansion_string(lhs, 8));
    });
    ctx.run("deep_products.in_F8", [&](Report& r) {
        OrderElement lhs = ai * aj * ak * asq;
        set(r, congruent_mod_s(lhs, OrderElement::one(Nd), 8), expansion_string(lhs, 8));
    });

    // commutator table mod S^5 (used for the Q8 action on H_1(K))
    struct Comm {
        Name a, b;
        Name rhs;  // Name::e encodes the identity
    };
    std::vector<Comm> comms = {
        {Name::i, Name::alpha, Name::alpha_i},  {Name::i, Name::alpha_i, Name::e},
        {Name::i, Name::alpha_j, Name::alpha_sq}, {Name::i, Name::alpha_pi, Name::e},
        {Name::j, Name::alpha, Name::alpha_j},  {Name::j, Name::alpha_i, Name::alpha_sq},
        {Name::j, Name::alpha_j, Name::e},      {Name::j, Name::alpha_pi, Name::e},
    };
    for (const auto& cm : comms) {
        std::string nm = std::string("h1k.comm_") + name_string(cm.a) + "_" + name_string(cm.b);
        ctx.run(nm, [&](Report& r) {
            OrderElement lhs =
                commutator(named_element(cm.a, Nd), named_element(cm.b, Nd));
            OrderElement rhs = named_element(cm.rhs, Nd);
            set(r, congruent_mod_s(lhs, rhs, 5), expansion_string(lhs, 5));
        });
    }
}

// ---- lie -------------------------------------------------------------------

void suite_lie(SuiteContext& ctx) {
    int N = std::max(ctx.params.s_precision, 24);
    int trials = ctx.params.trials > 0 ? ctx.params.trials : 10000;
    ctx.run("lie.bracket_and_squaring", [&](Report& r) {
        Rng rng(r.params.seed);
        for (int t = 0; t < trials; ++t) {
            int n = 1 + int(rng.below(10));
            int m = 1 + int(rng.below(10));
            OrderElement a = random_filtration(rng, N, n);
            OrderElement b = random_filtration(rng, N, m);
            if (!check_lie_formula(a, b)) {
                set(r, false,
                    "bracket mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " a=" + expansion_string(a, n + 1) + " b=" + expansion_string(b, m + 1));
                return;
            }
            if (!check_square_formula(a)) {
                set(r, false, "squaring mismatch at n=" + std::to_string(n) +
                                  " a=" + expansion_string(a, n + 1));
                return;
            }
        }
        r.params.trials = trials;
        set(r, true);
    });
}

// ---- subgroups -------------------------------------------------------------

void suite_subgroups(SuiteContext& ctx) {
    int N = std::max(ctx.params.s_precision, 16);
    OrderElement e = OrderElement::one(N);
    OrderElement i = named_element(Name::i, N);
    OrderElement j = named_element(Name::j, N);
    OrderElement k = named_element(Name::k, N);
    OrderElement w = named_element(Name::omega, N);
    OrderElement m1 = -e;

    ctx.run("subgroups.quaternion_relations", [&](Report& r) {
        bool ok = (i * i == m1) && (j * j == m1) && (k * k == m1) && (i * j * i == j) &&
                  (k == i * j) && (w * w * w == e) && (w * i * w.inverse() == j);
        set(r, ok);
    });
    ctx.run("subgroups.omega_identity", [&](Report& r) {
        // w = -(1+i+j+k)/2, checked as 2w = -(1+i+j+k)
        OrderElement lhs = OrderElement::from_int(2, N) * w;
        set(r, lhs == -(e + i + j + k));
    });
    ctx.run("subgroups.g24_in_q3", [&](Report& r) {
        auto g24 = finite_subgroup(FiniteSubgroup::G24, SubgroupTag::S21, 3);
        auto Q3 = QuotientGroup::enumerate(SubgroupTag::S21, 3);
        QuotientElement abar = q_named(Name::alpha, SubgroupTag::S21, 3);
        bool distinct24 = g24.size() == 24;
        bool alpha_outside = std::none_of(g24.begin(), g24.end(), [&](const QuotientElement& g) {
            return g.key() == abar.key();
        });
        auto whole = generated_subgroup({abar, q_named(Name::i, SubgroupTag::S21, 3),
                                         q_named(Name::omega, SubgroupTag::S21, 3)});
        bool gen_all = whole.size() == Q3.size();
        set(r, distinct24 && alpha_outside && gen_all && Q3.size() == 48);
        r.details = "|<i,w>| = " + std::to_string(g24.size()) + ", |Q3| = " +
                    std::to_string(Q3.size()) + " = 2*24 (alpha-bar outside <i,w>); " +
                    "<alpha,i,w> generates all";
    });
    ctx.run("subgroups.g24_distinct_at_levels", [&](Report& r) {
        bool ok = true;
        for (int n = 3; n <= 6 && ok; ++n)
            ok = finite_subgroup(FiniteSubgroup::G24, SubgroupTag::S21, n).size() == 24;
        set(r, ok);
    });
    ctx.run("subgroups.membership", [&](Report& r) {
        OrderElement alpha = named_element(Name::alpha, N);
        OrderElement pi = named_element(Name::pi, N);
        bool ok = in_subgroup(alpha, SubgroupTag::of(SubgroupTag::K1)) &&
                  in_subgroup(pi, SubgroupTag::of(SubgroupTag::K)) &&
                  !in_subgroup(pi, SubgroupTag::of(SubgroupTag::K1)) &&
                  !in_subgroup(i, SubgroupTag::of(SubgroupTag::K)) &&
                  in_subgroup(alpha, SubgroupTag::of(SubgroupTag::S21)) &&
                  in_subgroup(alpha * alpha, SubgroupTag::of(SubgroupTag::K1, 4));
        set(r, ok);
    });
    ctx.run("subgroups.alpha_inv_pi_in_F3", [&](Report& r) {
        OrderElement alpha = named_element(Name::alpha, N);
        OrderElement pi = named_element(Name::pi, N);
        set(r, filtration_level(alpha.inverse() * pi).ge(3));
    });
    ctx.run("subgroups.norm_values", [&](Report& r) {
        OrderElement alpha = named_element(Name::alpha, N);
        OrderElement pi = named_element(Name::pi, N);
        int p = (N + 1) / 2;
        bool ok = norm(alpha) == WittNumber::from_int(1, p) &&
                  norm(pi) == WittNumber::from_int(-3, p) &&
                  norm(e) == WittNumber::from_int(1, p);
        set(r, ok);
    });
    ctx.run("subgroups.norm_homomorphism", [&](Report& r) {
        Rng rng(r.params.seed);
        int trials = 1000;
        int p = (N + 1) / 2;
        for (int t = 0; t < trials; ++t) {
            OrderElement g = random_unit(rng, N);
            OrderElement h = random_unit(rng, N);
            WittNumber prod = norm(g) * norm(h);
            if ((prod.x() & 3) != 1) prod = -prod;
            if (!(norm(g * h) == prod)) {
                set(r, false, "norm not multiplicative");
                return;
            }
            (void)p;
        }
        r.params.trials = trials;
        set(r, true);
    });
    ctx.run("subgroups.graded_leading", [&](Report& r) {
        OrderElement alpha = named_element(Name::alpha, N);
        OrderElement asq = named_element(Name::alpha_sq, N);
        GradedLeading ga = graded_leading(alpha);
        GradedLeading gj = graded_leading(j);
        GradedLeading g2 = graded_leading(asq);
        set(r, ga.index == 2 && ga.digit == F4::w() && gj.index == 1 && gj.digit == F4::w2() &&
               g2.index == 4 && g2.digit == F4::one());
    });
}

// ---- quotients (+ infrastructure) ------------------------------------------

// empirically derived graded orders of S21: gr_{1/2} = gr_{2/2} = F4, then
// F4 for odd and F2 for even levels (see the Q3 = 48 note in the README)
size_t expected_s21_size(int n) {
    size_t s = 3;
    for (int t = 1; t < n; ++t) s *= (t <= 2 || t % 2 == 1) ? 4 : 2;
    return s;
}

void suite_quotients(SuiteContext& ctx) {
    ctx.run("quotients.s21_sizes", [&](Report& r) {
        std::string sizes;
        bool ok = true;
        for (int n = 3; n <= 6; ++n) {
            auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
            ok = ok && (Q.size() == expected_s21_size(n));
            sizes += (n > 3 ? ", " : "") + std::to_string(Q.size());
        }
        set(r, ok);
        r.details = "|Q_n(S21)| for n=3..6: " + sizes;
    });
    ctx.run("quotients.s2_sizes", [&](Report& r) {
        bool ok = true;
        size_t want = 3;
        for (int n = 1; n <= 6; ++n) {
            ok = ok && (QuotientGroup::enumerate(SubgroupTag::S2, n).size() == want);
            want *= 4;
        }
        set(r, ok);
    });
    ctx.run("quotients.k1_sizes", [&](Report& r) {
        // |Q_n(K1)| = 2 * prod_{s=3}^{n-1} gr_s(S21)
        bool ok = true;
        for (int n = 3; n <= 7; ++n) {
            size_t want = 2;
            for (int s = 3; s < n; ++s) want *= (s % 2 == 1) ? 4 : 2;
            ok = ok && (QuotientGroup::enumerate(SubgroupTag::K1, n).size() == want);
        }
        set(r, ok);
    });
    ctx.run("quotients.topgen", [&](Report& r) {
        bool ok = true;
        for (int n = 3; n <= 6 && ok; ++n) {
            auto Qs21 = QuotientGroup::enumerate(SubgroupTag::S21, n);
            auto gen1 = generated_subgroup({q_named(Name::alpha, SubgroupTag::S21, n),
                                            q_named(Name::i, SubgroupTag::S21, n),
                                            q_named(Name::omega, SubgroupTag::S21, n)});
            ok = gen1.size() == Qs21.size();
            auto Qs2 = QuotientGroup::enumerate(SubgroupTag::S2, n);
            auto gen2 = generated_subgroup({q_named(Name::pi, SubgroupTag::S2, n),
                                            q_named(Name::alpha, SubgroupTag::S2, n),
                                            q_named(Name::i, SubgroupTag::S2, n),
                                            q_named(Name::omega, SubgroupTag::S2, n)});
            ok = ok && gen2.size() == Qs2.size();
        }
        set(r, ok);
    });
    ctx.run("quotients.well_definedness", [&](Report& r) {
        Rng rng(r.params.seed);
        int n = std::max(3, std::min(ctx.params.level, 8));
        auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
        int trials = 1000;
        for (int t = 0; t < trials; ++t) {
            QuotientElement x = Q.element_at(rng.below(Q.size()));
            QuotientElement y = Q.element_at(rng.below(Q.size()));
            // lift at n+4, multiply there, reproject
            int N = 2 * (((n + 4) + 1) / 2);
            std::vector<F4> dx = x.digits, dy = y.digits;
            for (int a = n; a < n + 4; ++a) {
                dx.push_back(F4(uint8_t(rng.below(4))));
                dy.push_back(F4(uint8_t(rng.below(4))));
            }
            OrderElement gx = o_from_digits(dx, N), gy = o_from_digits(dy, N);
            std::vector<F4> prod = s_digits(gx * gy, n);
            if (prod != q_mul(x, y).digits) {
                set(r, false, "projection not well-defined on cosets");
                return;
            }
        }
        r.params.trials = trials;
        set(r, true);
    });
    ctx.run("quotients.project_examples", [&](Report& r) {
        QuotientElement pi_ = q_named(Name::i, SubgroupTag::S21, 3);
        bool i_digits = pi_.digit_string() == "11w";
        QuotientElement id = q_identity(SubgroupTag::S21, 5);
        OrderElement g = named_element(Name::alpha_i, 16) * named_element(Name::alpha_j, 16) *
                         named_element(Name::alpha_k, 16) * named_element(Name::alpha_sq, 16);
        QuotientElement deep = project(g, SubgroupTag::K1, 8);
        bool deep_id = deep.is_identity();
        bool k_is_ij = q_named(Name::k, SubgroupTag::S21, 4) ==
                       q_mul(q_named(Name::i, SubgroupTag::S21, 4),
                             q_named(Name::j, SubgroupTag::S21, 4));
        bool omega_cubed = q_mul(q_mul(q_named(Name::omega, SubgroupTag::S21, 4),
                                       q_named(Name::omega, SubgroupTag::S21, 4)),
                                 q_named(Name::omega, SubgroupTag::S21, 4))
                               .is_identity();
        set(r, i_digits && deep_id && k_is_ij && omega_cubed && id.is_identity());
        r.details = "project(i, S21, 3) = " + pi_.digit_string();
    });
    ctx.run("quotients.coset_spaces", [&](Report& r) {
        int n = std::max(3, std::min(ctx.params.level, 6));
        auto Q = std::make_shared<QuotientGroup>(QuotientGroup::enumerate(SubgroupTag::S21, n));
        CosetSpace c0 = coset_space(Q, FiniteSubgroup::G24);
        CosetSpace c1 = coset_space(Q, FiniteSubgroup::C6);
        bool sizes = Q->size() == c0.coset_count() * 24 && Q->size() == c1.coset_count() * 6;
        // action axioms on the generator tables
        bool axioms = true;
        QuotientElement id = q_identity(SubgroupTag::S21, n);
        for (size_t c = 0; c < c0.coset_count() && axioms; ++c)
            axioms = c0.act(id, int32_t(c)) == int32_t(c);
        auto gens = c0.action_gens();
        for (size_t a = 0; a < gens.size() && axioms; ++a)
            for (size_t b = 0; b < gens.size() && axioms; ++b) {
                QuotientElement gh = q_mul(gens[a], gens[b]);
                for (size_t c = 0; c < c0.coset_count() && axioms; ++c)
                    axioms = c0.act(gh, int32_t(c))         // (gh) c
                             == c0.act_gen(a, c0.act_gen(b, int32_t(c)));
            }
        set(r, sizes && axioms);
        r.details = "cosets: " + std::to_string(c0.coset_count()) + " (G24), " +
                    std::to_string(c1.coset_count()) + " (C6)";
    });
    ctx.run("quotients.pi_conjugation", [&](Report& r) {
        Rng rng(r.params.seed);
        int n = std::max(3, std::min(ctx.params.level, 6));
        auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
        // bijectivity
        std::vector<bool> hit(Q.size(), false);
        bool ok = true;
        for (size_t idx = 0; idx < Q.size() && ok; ++idx) {
            int32_t t = Q.index_of(pi_conjugate(Q.element_at(idx)).key());
            if (t < 0 || hit[t]) ok = false;
            else hit[t] = true;
        }
        // homomorphism on sampled pairs; pi^2 = -3 central acts trivially
        for (int t = 0; t < 200 && ok; ++t) {
            QuotientElement x = Q.element_at(rng.below(Q.size()));
            QuotientElement y = Q.element_at(rng.below(Q.size()));
            ok = pi_conjugate(q_mul(x, y)) == q_mul(pi_conjugate(x), pi_conjugate(y));
            if (ok) ok = pi_conjugate(pi_conjugate(x)) == x;
        }
        set(r, ok);
    });
    ctx.run("quotients.cache_roundtrip", [&](Report& r) {
        auto Q = QuotientGroup::enumerate(SubgroupTag::S21, 4);
        std::string json = Q.to_cache_json();
        QuotientGroup Q2 = QuotientGroup::from_cache_json(json);
        bool ok = Q.keys() == Q2.keys() && Q2.to_cache_json() == json;
        QuotientElement a = q_named(Name::alpha, SubgroupTag::S21, 4);
        ok = ok && Q.left_action(a) == Q2.left_action(a);
        set(r, ok);
    });
    ctx.run("infra.witt_digit_roundtrip", [&](Report& r) {
        Rng rng(r.params.seed);
        int trials = 10000;
        for (int t = 0; t < trials; ++t) {
            int P = 8 + int(rng.below(24));
            WittNumber u = random_witt(rng, P);
            if (!(witt_from_digits(witt_digits(u, P), P) == u)) {
                set(r, false, "witt round trip failed");
                return;
            }
        }
        // order-level interleaving round trip
        for (int t = 0; t < trials / 10; ++t) {
            OrderElement g = random_unit(rng, 16);
            if (!(o_from_digits(s_digits(g, 16), 16) == g)) {
                set(r, false, "order round trip failed");
                return;
            }
        }
        r.params.trials = trials;
        set(r, true);
    });
    ctx.run("infra.howell_canonicity", [&](Report& r) {
        Rng rng(r.params.seed);
        for (int trial = 0; trial < 50; ++trial) {
            int dim = 6 + int(rng.below(8));
            int m = 1 + int(rng.below(3));
            std::vector<std::vector<uint8_t>> rows;
            for (int k = 0; k < 10; ++k) {
                std::vector<uint8_t> row(dim);
                for (auto& x : row) x = uint8_t(rng.below(1u << m));
                rows.push_back(row);
            }
            HowellBasis a(dim, m), b(dim, m);
            for (const auto& row : rows) a.insert(row);
            std::vector<size_t> order(rows.size());
            for (size_t t = 0; t < order.size(); ++t) order[t] = t;
            std::shuffle(order.begin(), order.end(), std::mt19937(unsigned(rng.next())));
            for (size_t t : order) b.insert(rows[t]);
            if (!a.equals_span(b)) {
                set(r, false, "canonical form differs after shuffle");
                return;
            }
            // solve consistency: member iff solve succeeds
            std::vector<uint8_t> target(dim);
            for (auto& x : target) x = uint8_t(rng.below(1u << m));
            HowellBasis c(dim, m, int(rows.size()));
            for (size_t t = 0; t < rows.size(); ++t) {
                std::vector<uint8_t> aug(rows.size(), 0);
                aug[t] = 1;
                c.insert(rows[t], aug);
            }
            bool mem = a.member(target);
            auto sol = c.solve(target);
            if (mem != sol.has_value()) {
                set(r, false, "member/solve disagree");
                return;
            }
            if (sol) {
                // verify the combination reproduces the target
                std::vector<uint8_t> acc(dim, 0);
                uint8_t mask = uint8_t((1u << m) - 1);
                for (size_t t = 0; t < rows.size(); ++t)
                    for (int d = 0; d < dim; ++d)
                        acc[d] = uint8_t((acc[d] + (*sol)[t] * rows[t][d]) & mask);
                for (int d = 0; d < dim; ++d)
                    if (acc[d] != (target[d] & mask)) {
                        set(r, false, "solve combination wrong");
                        return;
                    }
            }
        }
        set(r, true);
    });
    ctx.run("infra.report_determinism", [&](Report& r) {
        CheckParams p = ctx.params;
        Report a, b;
        a.check = b.check = "probe";
        a.params = b.params = p;
        a.status = b.status = Report::Pass;
        std::string h = config_hash_of(p, "probe");
        set(r, report_json(a, h, false) == report_json(b, h, false));
    });
}

// ---- theta -----------------------------------------------------------------

void suite_theta(SuiteContext& ctx) {
    int level = ctx.params.level;
    int m = ctx.params.coeff_bits;
    if (level < 6) {
        Report r;
        r.check = "theta.suite";
        r.params = ctx.params;
        r.status = Report::Skipped;
        r.details = "level too small for the Theta pipeline (need >= 6)";
        ctx.out->push_back(r);
        return;
    }

    ctx.run("theta.pipeline", [&](Report& r) {
        DualityComplex cx(level, m);
        cx.theta();  // throws on any condition failure
        bool ok = true;
        std::string det;
        for (const auto& c : cx.theta_condition_checks()) {
            ok = ok && c.pass;
            if (!c.pass) det += c.name + "; ";
        }
        for (const auto& c : cx.differential_structure_checks()) {
            ok = ok && c.pass;
            if (!c.pass) det += c.name + "; ";
        }
        set(r, ok, det);
        r.details = "Theta support: " + std::to_string(cx.theta().support_size());
    });
    ctx.run("theta.congruence_suite_level6", [&](Report& r) {
        // J-congruence at (min(level,6), 3): the 768-element quotient is the
        // documented parameter set; larger levels go through the same code
        DualityComplex cx(std::min(level, 6), 3);
        bool ok = true;
        std::string det;
        for (const auto& c : cx.verify_theta_congruences()) {
            ok = ok && c.pass;
            det += c.name + (c.pass ? " ok; " : " FAIL; ");
        }
        set(r, ok, det);
        r.details = det;
    });
    ctx.run("theta.congruence_suite_mod2", [&](Report& r) {
        DualityComplex cx(8, 1);
        bool ok = true;
        std::string det;
        for (const auto& c : cx.verify_theta_congruences()) {
            ok = ok && c.pass;
            det += c.name + (c.pass ? " ok; " : " FAIL; ");
        }
        set(r, ok, det);
    });
    ctx.run("theta.solve_h_telescoping", [&](Report& r) {
        // (e - x^8) = (sum_s x^s)(e - x) and h = sum_s alpha^s solves
        // h (e-alpha) e0 = (e-alpha^8) e0
        RingDesc d{SubgroupTag::S21, std::min(level, 6), m};
        GroupRingElement a = GroupRingElement::named(d, Name::alpha);
        GroupRingElement e = GroupRingElement::unit(d);
        GroupRingElement s(d);
        GroupRingElement p = e;
        for (int t = 0; t < 8; ++t) {
            s = s + p;
            p = p * a;
        }
        bool ring_identity = (e - gr_pow(a, 8)) == s * (e - a);
        DualityComplex cx(std::min(level, 6), m);
        ModuleVector e0 = basis_vector(cx.space0(), m, cx.space0().identity_coset());
        QuotientElement qa = q_named(Name::alpha, SubgroupTag::S21, std::min(level, 6));
        ModuleVector v0 = e0 - act_elem(qa, e0);
        QuotientElement a8 = q_identity(SubgroupTag::S21, std::min(level, 6));
        for (int t = 0; t < 8; ++t) a8 = q_mul(a8, qa);
        ModuleVector target = e0 - act_elem(a8, e0);
        bool module_identity = act(s, v0) == target;
        set(r, ring_identity && module_identity);
    });
    ctx.run("theta.solve_h_trivial_target", [&](Report& r) {
        // g = alpha_i alpha_j alpha_k alpha^2 is in F_{8/2}K1, so its class is
        // the identity at every level <= 8 and the canonical h is 0
        int n = std::min(level, 8);
        DualityComplex cx(n, m);
        QuotientElement g = q_mul(
            q_mul(q_mul(q_named(Name::alpha_i, SubgroupTag::S21, n),
                        q_named(Name::alpha_j, SubgroupTag::S21, n)),
                  q_named(Name::alpha_k, SubgroupTag::S21, n)),
            q_named(Name::alpha_sq, SubgroupTag::S21, n));
        GroupRingElement h = cx.solve_h(g);
        set(r, g.is_identity() && h.is_zero());
    });
    ctx.run("theta.solve_h_howell", [&](Report& r) {
        // nontrivial default-mode solve on a small quotient
        DualityComplex cx(5, m);
        QuotientElement g = q_named(Name::alpha_sq, SubgroupTag::S21, 5);
        GroupRingElement h = cx.solve_h(g);  // substitution verified inside
        set(r, !h.is_zero());
    });
    ctx.run("theta.filtration_decomposition", [&](Report& r) {
        // x = (e - alpha_i^2)(e - alpha_j^2) lies in I F_{5/2}K1; decompose at
        // k = 5 and verify by substitution
        int n = 7;
        DualityComplex cx(n, m);
        RingDesc d{SubgroupTag::S21, n, m};
        QuotientElement ai = q_named(Name::alpha_i, SubgroupTag::S21, n);
        QuotientElement aj = q_named(Name::alpha_j, SubgroupTag::S21, n);
        GroupRingElement e = GroupRingElement::unit(d);
        GroupRingElement x = (e - GroupRingElement::basis(d, q_mul(ai, ai))) *
                             (e - GroupRingElement::basis(d, q_mul(aj, aj)));
        auto dec = cx.decompose_aug_ideal(x, 5);
        // k = 5 = 2m+1, m = 2: generators e-a^4, e-a_i^2, e-a_j^2
        QuotientElement qa = q_named(Name::alpha, SubgroupTag::S21, n);
        GroupRingElement g0 = e - GroupRingElement::basis(
                                      d, q_mul(q_mul(qa, qa), q_mul(qa, qa)));
        GroupRingElement g1 = e - GroupRingElement::basis(d, q_mul(ai, ai));
        GroupRingElement g2 = e - GroupRingElement::basis(d, q_mul(aj, aj));
        GroupRingElement rhs = dec.h0 * g0 + dec.h1 * g1 + dec.h2 * g2;
        set(r, rhs == x);
    });
    ctx.run("theta.zero_decomposition", [&](Report& r) {
        DualityComplex cx(std::min(level, 6), m);
        RingDesc d{SubgroupTag::S21, std::min(level, 6), m};
        auto dec = cx.decompose_aug_ideal(GroupRingElement(d), 4);
        set(r, dec.h0.is_zero() && dec.h1.is_zero() && dec.h2.is_zero());
    });
}

// ---- duality ----------------------------------------------------------------

void suite_duality(SuiteContext& ctx) {
    int m = ctx.params.coeff_bits;
    ctx.run("duality.aug_span", [&](Report& r) {
        DualityComplex cx(6, 3);
        set(r, cx.aug_ideal_generation_check());
        r.details = "C0 dimension " + std::to_string(cx.space0().coset_count());
    });
    ctx.run("duality.aug_span_small", [&](Report& r) {
        DualityComplex cx(3, std::max(m, 1));
        set(r, cx.aug_ideal_generation_check());
        r.details = "C0 dimension " + std::to_string(cx.space0().coset_count());
    });
    ctx.run("duality.aug_span_membership", [&](Report& r) {
        // (e-g)e0 for g in K1-bar lies in span{gamma (e-alpha) e0}
        DualityComplex cx(5, 3);
        Rng rng(r.params.seed);
        auto members = subgroup_image(SubgroupSpec{SubgroupTag::K1, 0}, cx.quotient());
        ModuleVector e0 = basis_vector(cx.space0(), 3, cx.space0().identity_coset());
        QuotientElement qa = q_named(Name::alpha, SubgroupTag::S21, 5);
        ModuleVector v0 = e0 - act_elem(qa, e0);
        std::vector<std::vector<int32_t>> perms;
        for (const auto& g : cx.space0().action_gens())
            perms.push_back(cx.space0().action_permutation(g));
        HowellBasis span = module_closure(int(cx.space0().coset_count()), 3, {v0.data()}, perms);
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            const QuotientElement& g = members[rng.below(members.size())];
            ModuleVector vg = e0 - act_elem(g, e0);
            ok = span.member(vg.data());
        }
        set(r, ok);
    });
    ctx.run("duality.dual_identities", [&](Report& r) {
        bool ok = true;
        std::string det;
        for (const auto& c : dual_identity_checks(4, 3)) {
            ok = ok && c.pass;
            det += c.name + (c.pass ? " ok; " : " FAIL; ");
        }
        set(r, ok, det);
        r.details = det;
    });
    ctx.run("duality.d3p_structure", [&](Report& r) {
        DualityComplex cx(6, 3);
        GroupRingElement w = cx.d3p_coefficient();
        bool aug0 = w.augmentation() == 0;
        bool nonzero = !cx.d3p_basis(cx.space3().identity_coset()).is_zero();
        set(r, aug0 && nonzero);
    });
}

// ---- n1 ---------------------------------------------------------------------

void suite_n1(SuiteContext& ctx) {
    int m = std::max(3, ctx.params.coeff_bits);
    ctx.run("n1.identities", [&](Report& r) {
        bool ok = true;
        std::string det;
        for (const auto& c : n1_identities(m)) {
            ok = ok && c.pass;
            det += c.name + (c.pass ? " ok; " : " FAIL; ");
        }
        set(r, ok, det);
        r.details = det;
    });
}

// ---- honda ------------------------------------------------------------------

void suite_honda(SuiteContext& ctx) {
    ctx.run("honda.fgl_axioms", [&](Report& r) {
        HondaFGL fgl = HondaFGL::build(64);
        bool ok = fgl.unit_axiom() && fgl.is_symmetric() && fgl.associativity();
        // F(x,y) = x + y mod degree 2
        ok = ok && fgl.coeff(1, 0) == F4::one() && fgl.coeff(0, 1) == F4::one();
        set(r, ok);
    });
    ctx.run("honda.two_series", [&](Report& r) {
        HondaFGL fgl = HondaFGL::build(64);
        F4Series two = fgl.two_series();
        set(r, two == F4Series::monomial(64, F4::one(), 4));  // [2](x) = x^4
    });
    ctx.run("honda.endo_basics", [&](Report& r) {
        HondaFGL fgl = HondaFGL::build(32);
        int N = 16;
        int p = (N + 1) / 2;
        OrderElement S(WittNumber(0, 0, p), WittNumber(1, 0, p));
        OrderElement w = named_element(Name::omega, N);
        OrderElement two = OrderElement::from_int(2, N);
        bool ok = endo_series(S, fgl, 32) == F4Series::monomial(32, F4::one(), 2) &&
                  endo_series(w, fgl, 32) == F4Series::monomial(32, F4::w(), 1) &&
                  endo_series(two, fgl, 32) == F4Series::monomial(32, F4::one(), 4);
        set(r, ok);
    });
    ctx.run("honda.endo_i_squared", [&](Report& r) {
        HondaFGL fgl = HondaFGL::build(32);
        OrderElement i = named_element(Name::i, 16);
        F4Series ei = endo_series(i, fgl, 32);
        set(r, compose(ei, ei) == fgl.minus_one());
    });
    ctx.run("honda.hom_random", [&](Report& r) {
        HondaFGL fgl = HondaFGL::build(32);
        Rng rng(r.params.seed);
        int trials = 20;
        for (int t = 0; t < trials; ++t) {
            OrderElement g = random_unit(rng, 12);
            OrderElement d = random_unit(rng, 12);
            if (!endo_hom_check(g, d, fgl, 32)) {
                set(r, false, "hom check failed");
                return;
            }
        }
        r.params.trials = trials;
        set(r, true);
    });
    ctx.run("honda.twisted_commutation", [&](Report& r) {
        // aS = S a^sigma: endo(a)(x^2) = (endo(a^sigma)(x))^2
        HondaFGL fgl = HondaFGL::build(32);
        Rng rng(r.params.seed);
        for (int t = 0; t < 10; ++t) {
            WittNumber a = random_witt(rng, 6);
            OrderElement ga(a, WittNumber(0, 0, 6));
            OrderElement gs(a.frobenius(), WittNumber(0, 0, 6));
            F4Series ea = endo_series(ga, fgl, 32);
            F4Series es = endo_series(gs, fgl, 32);
            F4Series lhs = compose(ea, F4Series::monomial(32, F4::one(), 2));
            F4Series rhs = es * es;
            if (!(lhs == rhs)) {
                set(r, false, "twisted commutation failed");
                return;
            }
        }
        set(r, true);
    });
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"congruences", "lie", "subgroups", "quotients", "theta", "duality", "n1", "honda"};
}

std::vector<Report> run_suite(const std::string& suite, const CheckParams& params) {
    std::vector<Report> out;
    SuiteContext ctx{params, &out};
    if (suite == "congruences") suite_congruences(ctx);
    else if (suite == "lie") suite_lie(ctx);
    else if (suite == "subgroups") suite_subgroups(ctx);
    else if (suite == "quotients") suite_quotients(ctx);
    else if (suite == "theta") suite_theta(ctx);
    else if (suite == "duality") suite_duality(ctx);
    else if (suite == "n1") suite_n1(ctx);
    else if (suite == "honda") suite_honda(ctx);
    else throw Error("unknown suite: " + suite);
    std::sort(out.begin(), out.end(),
              [](const Report& a, const Report& b) { return a.check < b.check; });
    return out;
}

Report conjsearch(int level) {
    Report r;
    r.check = "conjsearch.q8_vs_q8prime";
    r.params.level = level;
    auto t0 = Clock::now();
    auto Q = QuotientGroup::enumerate(SubgroupTag::S21, level);
    auto q8 = finite_subgroup(FiniteSubgroup::Q8, SubgroupTag::S21, level);
    auto q8p = finite_subgroup(FiniteSubgroup::Q8prime, SubgroupTag::S21, level);
    auto witness = conjugacy_search(q8, q8p, Q);
    if (witness) {
        r.status = Report::Pass;
        r.details = "classes merge at level " + std::to_string(level) + "; witness " +
                    witness->digit_string();
    } else {
        r.status = Report::Inconclusive;
        r.details = "no conjugator at level " + std::to_string(level) +
                    " (consistent with distinct classes in the limit)";
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return r;
}

std::string theta_export_json(int level, int coeff_bits) {
    DualityComplex cx(level, coeff_bits);
    auto element_array = [&](const GroupRingElement& x) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& [k, c] : x.coeffs()) {
            QuotientElement g = QuotientElement::from_key(SubgroupTag::S21, level, k);
            arr.push_back({g.digit_string(), int(c)});
        }
        return arr;
    };
    RingDesc d = cx.desc();
    GroupRingElement d1_coeff =
        GroupRingElement::unit(d) - GroupRingElement::named(d, Name::alpha);
    nlohmann::json j;
    j["format_version"] = 1;
    j["level"] = level;
    j["modulus"] = coeff_bits;
    j["solver"] = "howell-canonical";
    j["element"] = element_array(cx.theta());
    j["d1_coefficient"] = element_array(d1_coeff);
    j["d3p_coefficient"] = element_array(cx.d3p_coefficient());
    return j.dump();
}

}  // namespace mstab::checks
