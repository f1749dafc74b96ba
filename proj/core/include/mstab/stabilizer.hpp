#pragma once
#include <string>

#include "mstab/order.hpp"

namespace mstab {

// Named unit-group elements.  pi = 1+2w; alpha = (1-2w)/sqrt(-7);
// i = (1+2w)^{-1} (1 - alpha S); j = w i w^2; k = w^2 i w = ij;
// alpha_t = t alpha t^{-1} alpha^{-1} for t in {i, j, k}.
enum class Name {
    e,
    omega,
    pi,
    alpha,
    i,
    j,
    k,
    sqrt_m7,
    alpha_i,
    alpha_j,
    alpha_k,
    alpha_sq,
    alpha_pi,
};

OrderElement named_element(Name name, int s_precision);
const char* name_string(Name name);

// Base group plus optional filtration constraint: F(n) means v(g-1) >= n/2.
// kind S2 is the full unit group; its Sylow subgroup is S2 with min_filtration 1.
struct SubgroupTag {
    enum Kind { S2, S21, K, K1 } kind = S2;
    int min_filtration = 0;

    static SubgroupTag of(Kind k, int f = 0) { return SubgroupTag{k, f}; }
    std::string to_string() const;
};

// v(g - 1) in half-integer units
SValuation filtration_level(const OrderElement& g);

// leading graded datum (n, d): g = 1 + teich(d) S^n + ... .  For g not = 1
// mod S, returns (0, residue digit).  Throws if g = 1 mod S^N.
struct GradedLeading {
    int index;
    F4 digit;
};
GradedLeading graded_leading(const OrderElement& g);

// canonical U2 representative of the norm class {det, -det}: the one = 1 mod 4
WittNumber norm(const OrderElement& g);

bool in_subgroup(const OrderElement& g, SubgroupTag tag);

// Graded Lie bracket check: with a in F_{n/2} \ F_{(n+1)/2} and b in
// F_{m/2} \ F_{(m+1)/2} (n, m >= 1, n+m < N), the commutator's digit at
// index n+m must be a*b^{2^n} + a^{2^m}*b (digit 0 meaning "lies deeper").
bool check_lie_formula(const OrderElement& a, const OrderElement& b);

// Squaring counterpart: digit of a^2 at index 2 is a^3 (n=1), at index 4 is
// a+a^2 (n=2), and at index n+2 it is a (n>2).
bool check_square_formula(const OrderElement& a);

}  // namespace mstab
