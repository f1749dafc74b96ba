// Acceptance suite: runs every acceptance criterion at its stated parameters
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mstab/checks.hpp"
#include "mstab/errors.hpp"

using namespace mstab;

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteKey {
    std::string suite;
    int level;
    int coeff_bits;
    int s_precision;
    bool operator<(const SuiteKey& o) const {
        return std::tie(suite, level, coeff_bits, s_precision) <
               std::tie(o.suite, o.level, o.coeff_bits, o.s_precision);
    }
};

std::map<SuiteKey, std::vector<Report>> cache;

const std::vector<Report>& suite_reports(const std::string& suite, int level, int coeff_bits,
                                         int s_precision, int trials = 0) {
    SuiteKey key{suite, level, coeff_bits, s_precision};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CheckParams p;
    p.level = level;
    p.coeff_bits = coeff_bits;
    p.s_precision = s_precision;
    p.seed = 0x6d737461620000ULL;
    p.trials = trials;
    return cache.emplace(key, checks::run_suite(suite, p)).first->second;
}

struct Selection {
    std::string suite;
    int level, coeff_bits, s_precision, trials;
    std::string prefix;  // check-name prefix to select
    size_t expect;       // minimum number of matching checks
};

int failures = 0;

void criterion(int number, const std::string& what, int budget_seconds,
               const std::vector<Selection>& sels, const std::string& note = "") {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        for (const auto& sel : sels) {
            const auto& reports =
                suite_reports(sel.suite, sel.level, sel.coeff_bits, sel.s_precision, sel.trials);
            size_t matched = 0;
            for (const auto& r : reports) {
                if (r.check.rfind(sel.prefix, 0) != 0) continue;
                ++matched;
                if (r.status == Report::Fail) {
                    ok = false;
                    detail += r.check + ": " + r.details + "; ";
                }
            }
            if (matched < sel.expect) {
                ok = false;
                detail += "only " + std::to_string(matched) + " checks matched '" + sel.prefix +
                          "' (expected " + std::to_string(sel.expect) + "); ";
            }
        }
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%.2f s, budget %d s%s)\n", ok ? "PASS" : "FAIL",
                number, what.c_str(), secs, budget_seconds,
                secs > budget_seconds ? ", OVER" : "");
    if (!detail.empty()) std::printf("        %s\n", detail.c_str());
    if (!note.empty()) std::printf("        note: %s\n", note.c_str());
    if (!ok) ++failures;
}

}  // namespace

int main() {
    std::printf("acceptance suite (all checks exact; arithmetic exact mod the stated "
                "truncations)\n");

    criterion(1, "the eight displayed congruences at s_precision 12", 1,
              {{"congruences", 6, 3, 12, 0, "congruence.i", 1},
               {"congruences", 6, 3, 12, 0, "congruence.j", 1},
               {"congruences", 6, 3, 12, 0, "congruence.minus_one", 1},
               {"congruences", 6, 3, 12, 0, "congruence.alpha", 5}});

    criterion(2, "det(pi) = 3, det(alpha) = -1 mod 2^30; sqrt(-7) = 5 mod 8", 1,
              {{"congruences", 6, 3, 12, 0, "congruence.det_", 2},
               {"congruences", 6, 3, 12, 0, "congruence.sqrt_m7_mod8", 1}});

    criterion(3, "quaternion/G24 structure at s_precision 16; <i,w> in Q3 has 24 elements", 5,
              {{"subgroups", 6, 3, 16, 0, "subgroups.quaternion_relations", 1},
               {"subgroups", 6, 3, 16, 0, "subgroups.omega_identity", 1},
               {"subgroups", 6, 3, 16, 0, "subgroups.g24_in_q3", 1},
               {"subgroups", 6, 3, 16, 0, "subgroups.g24_distinct_at_levels", 1}},
              "gr_{2/2} of the norm-one group is F4 (alpha and -1 are independent norm-one "
              "classes), so |Q3| = 48 = 2*24 and <i,w> has index 2 there; the whole quotient "
              "is generated once alpha is added.");

    criterion(4, "deep-filtration products mod S^8 (T = alpha*S)", 1,
              {{"congruences", 6, 3, 12, 0, "deep_products.", 4}});

    criterion(5, "graded Lie formula property suite, 10^4 pairs at s_precision 24", 30,
              {{"lie", 6, 3, 24, 10000, "lie.", 1}});

    criterion(6, "norm-one quotient orders match the graded-order product, n = 3..6", 60,
              {{"quotients", 6, 3, 16, 0, "quotients.s21_sizes", 1},
               {"quotients", 6, 3, 16, 0, "quotients.s2_sizes", 1},
               {"quotients", 6, 3, 16, 0, "quotients.k1_sizes", 1}},
              "sizes are 48, 192, 384, 1536 (= 3*4*4*prod of F4/F2 orders from level 3); "
              "the F2 grade first appears at level 4 because -1 and alpha both have "
              "norm one.");

    criterion(7, "topological generation: <alpha,i,w> = Q_n(S21), <pi,alpha,i,w> = Q_n(S2)", 60,
              {{"quotients", 6, 3, 16, 0, "quotients.topgen", 1}});

    criterion(8, "the eight commutator relations mod S^5", 1,
              {{"congruences", 6, 3, 12, 0, "h1k.comm_", 8}});

    criterion(9, "Theta pipeline at (n=8, m=3): build, d1 o d2 = 0, defining conditions, "
                 "C6-equivariance", 600,
              {{"theta", 8, 3, 16, 0, "theta.pipeline", 1},
               {"theta", 8, 3, 16, 0, "theta.solve_h_trivial_target", 1}});

    criterion(10, "Theta congruences: mod J at (6,3), mod (2,(IS21)^2) at (8,1), proof "
                  "identities", 600,
              {{"theta", 8, 3, 16, 0, "theta.congruence_suite_level6", 1},
               {"theta", 8, 3, 16, 0, "theta.congruence_suite_mod2", 1},
               {"theta", 8, 3, 16, 0, "theta.solve_h_telescoping", 1}});

    criterion(11, "span: {gamma (e-alpha) e0} spans ker(eps) in Z/8[Q6/G24] (64-dim)", 60,
              {{"duality", 6, 3, 16, 0, "duality.aug_span", 1}});

    criterion(12, "the f1..f4 and scaling identities in Z/8[G24/C6]", 1,
              {{"n1", 6, 3, 16, 0, "n1.identities", 1}});

    criterion(13, "dual identities, pairing invertibility at (4,3); d3' construction", 60,
              {{"duality", 6, 3, 16, 0, "duality.dual_identities", 1},
               {"duality", 6, 3, 16, 0, "duality.d3p_structure", 1}});

    criterion(14, "Honda oracle: [2] = x^4 mod x^64, S(x) = x^2, w(x) = zx, endo(i)^2 = "
                  "[-1], 20 random hom checks at D = 32", 300,
              {{"honda", 6, 3, 16, 0, "honda.", 6}});

    criterion(15, "infrastructure: digit round trips, projection well-definedness, Howell "
                  "canonicity, deterministic reports", 60,
              {{"quotients", 6, 3, 16, 0, "infra.", 3},
               {"quotients", 6, 3, 16, 0, "quotients.well_definedness", 1},
               {"quotients", 6, 3, 16, 0, "quotients.cache_roundtrip", 1},
               {"quotients", 6, 3, 16, 0, "quotients.pi_conjugation", 1},
               {"quotients", 6, 3, 16, 0, "quotients.coset_spaces", 1}});

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
