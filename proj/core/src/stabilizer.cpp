#include "mstab/stabilizer.hpp"

#include <cassert>

namespace mstab {

const char* name_string(Name name) {
    switch (name) {
        case Name::e: return "e";
        case Name::omega: return "omega";
        case Name::pi: return "pi";
        case Name::alpha: return "alpha";
        case Name::i: return "i";
        case Name::j: return "j";
        case Name::k: return "k";
        case Name::sqrt_m7: return "sqrt_m7";
        case Name::alpha_i: return "alpha_i";
        case Name::alpha_j: return "alpha_j";
        case Name::alpha_k: return "alpha_k";
        case Name::alpha_sq: return "alpha_sq";
        case Name::alpha_pi: return "alpha_pi";
    }
    return "?";
}

OrderElement named_element(Name name, int s_precision) {
    if (s_precision < 2) throw Error("named_element: s_precision must be >= 2");
    int p = (s_precision + 1) / 2;
    WittNumber zero(0, 0, p);
    WittNumber w(0, 1, p);
    auto scalar = [&](const WittNumber& c) { return OrderElement(c, zero); };

    switch (name) {
        case Name::e:
            return OrderElement::one(s_precision);
        case Name::omega:
            return scalar(w);
        case Name::pi:
            return scalar(WittNumber(1, 2, p));
        case Name::sqrt_m7:
            return scalar(hensel_sqrt_m7(p));
        case Name::alpha: {
            WittNumber s7 = hensel_sqrt_m7(p);
            return scalar(WittNumber(1, uint64_t(-2), p) * s7.inverse());
        }
        case Name::i: {
            WittNumber c = WittNumber(1, 2, p).inverse();
            WittNumber alpha = WittNumber(1, uint64_t(-2), p) * hensel_sqrt_m7(p).inverse();
            return OrderElement(c, -(c * alpha));
        }
        case Name::j: {
            OrderElement i_el = named_element(Name::i, s_precision);
            OrderElement om = named_element(Name::omega, s_precision);
            return om * i_el * om * om;
        }
        case Name::k: {
            // defined as w^2 i w; equals ij (asserted in tests)
            OrderElement i_el = named_element(Name::i, s_precision);
            OrderElement om = named_element(Name::omega, s_precision);
            return om * om * i_el * om;
        }
        case Name::alpha_i:
            return commutator(named_element(Name::i, s_precision),
                              named_element(Name::alpha, s_precision));
        case Name::alpha_j:
            return commutator(named_element(Name::j, s_precision),
                              named_element(Name::alpha, s_precision));
        case Name::alpha_k:
            return commutator(named_element(Name::k, s_precision),
                              named_element(Name::alpha, s_precision));
        case Name::alpha_sq: {
            OrderElement a = named_element(Name::alpha, s_precision);
            return a * a;
        }
        case Name::alpha_pi:
            return named_element(Name::alpha, s_precision) *
                   named_element(Name::pi, s_precision);
    }
    throw Error("named_element: unreachable");
}

std::string SubgroupTag::to_string() const {
    std::string base;
    switch (kind) {
        case S2: base = "S2"; break;
        case S21: base = "S21"; break;
        case K: base = "K"; break;
        case K1: base = "K1"; break;
    }
    if (min_filtration > 0) base += "&F(" + std::to_string(min_filtration) + ")";
    return base;
}

SValuation filtration_level(const OrderElement& g) {
    return (g - OrderElement::one(g.s_precision())).s_valuation();
}

GradedLeading graded_leading(const OrderElement& g) {
    OrderElement x = g - OrderElement::one(g.s_precision());
    SValuation v = x.s_valuation();
    if (v.at_least)
        throw Error("graded_leading: element is 1 mod S^N (indeterminate)");
    if (v.index == 0) {
        // image in gr_0 = F4^x is the residue digit of g itself
        return {0, s_digits(g, 1)[0]};
    }
    return {v.index, s_digits(x, v.index + 1)[v.index]};
}

WittNumber norm(const OrderElement& g) {
    if (!g.is_unit()) throw NonUnitError("norm: not a unit");
    if (g.s_precision() < 4)
        throw InsufficientPrecision("norm: need s_precision >= 4");
    WittNumber d = g.det();
    if ((d.x() & 3) == 1) return d;
    return -d;
}

static F4 digit_at(const OrderElement& x, int index) {
    return s_digits(x, index + 1)[index];
}

bool in_subgroup(const OrderElement& g, SubgroupTag tag) {
    int N = g.s_precision();
    if (!g.is_unit()) return false;
    switch (tag.kind) {
        case SubgroupTag::S2:
            break;
        case SubgroupTag::S21: {
            if (N < 4) throw InsufficientPrecision("in_subgroup(S21): need N >= 4");
            WittNumber d = g.det();
            WittNumber one(1, 0, d.precision());
            if (!(d == one || d == -one)) return false;
            break;
        }
        case SubgroupTag::K:
        case SubgroupTag::K1: {
            if (N < 3) throw InsufficientPrecision("in_subgroup(K): need N >= 3");
            OrderElement x = g - OrderElement::one(N);
            if (!x.s_valuation().ge(2)) return false;
            F4 d2 = digit_at(x, 2);
            if (!(d2 == F4::zero() || d2 == F4::w())) return false;
            if (tag.kind == SubgroupTag::K1) {
                if (N < 4) throw InsufficientPrecision("in_subgroup(K1): need N >= 4");
                WittNumber d = g.det();
                WittNumber one(1, 0, d.precision());
                if (!(d == one || d == -one)) return false;
            }
            break;
        }
    }
    if (tag.min_filtration > 0) {
        if (N < tag.min_filtration)
            throw InsufficientPrecision("in_subgroup(F): filtration level beyond precision");
        if (!filtration_level(g).ge(tag.min_filtration)) return false;
    }
    return true;
}

bool check_lie_formula(const OrderElement& a, const OrderElement& b) {
    GradedLeading ga = graded_leading(a);
    GradedLeading gb = graded_leading(b);
    int n = ga.index, m = gb.index;
    if (n < 1 || m < 1 || n + m >= a.s_precision())
        throw Error("check_lie_formula: need 1 <= n, m and n+m < N");
    F4 predicted = ga.digit * gb.digit.frob_pow(n) + ga.digit.frob_pow(m) * gb.digit;
    OrderElement c = commutator(a, b) - OrderElement::one(a.s_precision());
    // all digits below n+m must vanish, and the digit at n+m must match
    std::vector<F4> d = s_digits(c, n + m + 1);
    for (int t = 0; t < n + m; ++t)
        if (!d[t].is_zero()) return false;
    return d[n + m] == predicted;
}

bool check_square_formula(const OrderElement& a) {
    GradedLeading ga = graded_leading(a);
    int n = ga.index;
    if (n < 1 || n + 2 >= a.s_precision())
        throw Error("check_square_formula: need 1 <= n and n+2 < N");
    int target;
    F4 predicted;
    if (n == 1) {
        target = 2;
        predicted = ga.digit * ga.digit * ga.digit;
    } else if (n == 2) {
        target = 4;
        predicted = ga.digit + ga.digit.square();
    } else {
        target = n + 2;
        predicted = ga.digit;
    }
    OrderElement c = a * a - OrderElement::one(a.s_precision());
    std::vector<F4> d = s_digits(c, target + 1);
    for (int t = 0; t < target; ++t)
        if (!d[t].is_zero()) return false;
    return d[target] == predicted;
}

}  // namespace mstab
