#pragma once
#include <string>
#include <vector>

#include "mstab/witt.hpp"

namespace mstab {

// S-adic valuation in half-integer units: value/2, with `at_least` marking a
// saturated result ("the element is 0 mod S^value", value = S-precision).
struct SValuation {
    int index = 0;        // number of leading zero S-digits; v = index/2
    bool at_least = false;

    bool ge(int n) const { return index >= n; }  // v >= n/2
    friend bool operator==(const SValuation& a, const SValuation& b) {
        return a.index == b.index && a.at_least == b.at_least;
    }
};

/****************************************************************
 * O2 = W<S>/(S^2 = 2, aS = S a^sigma), truncated mod S^N.
 *
 * An element is a + bS with a, b in W(F4) at P = N/2 bits, N even.
 * Multiplication:
 *   (a1+b1 S)(a2+b2 S) = (a1a2 + 2 b1 b2^s) + (a1b2 + b1 a2^s) S.
 * The truncation ideal (S^N) is multiplicatively closed, so every
 * operation here is exact mod S^N; there are no guard digits.
 ****************************************************************/
class OrderElement {
  public:
    OrderElement() : a_(0, 0, 1), b_(0, 0, 1) {}
    OrderElement(const WittNumber& a, const WittNumber& b);
    static OrderElement from_int(int64_t n, int s_precision);
    static OrderElement one(int s_precision);
    static OrderElement zero(int s_precision);

    const WittNumber& a() const { return a_; }
    const WittNumber& b() const { return b_; }
    int s_precision() const { return 2 * a_.precision(); }

    OrderElement truncated(int s_precision) const;

    friend OrderElement operator+(const OrderElement& g, const OrderElement& h);
    friend OrderElement operator-(const OrderElement& g, const OrderElement& h);
    friend OrderElement operator*(const OrderElement& g, const OrderElement& h);
    OrderElement operator-() const;
    friend bool operator==(const OrderElement& g, const OrderElement& h);
    friend bool operator!=(const OrderElement& g, const OrderElement& h) { return !(g == h); }

    // det(a+bS) = a a^sigma - 2 b b^sigma; Galois invariant, multiplicative
    WittNumber det() const;

    // componentwise Frobenius; ring involution
    OrderElement galois() const;

    // det(g)^{-1} (a^sigma - bS); throws NonUnitError unless v(g) = 0
    OrderElement inverse() const;

    bool is_unit() const;

    SValuation s_valuation() const;

    std::string to_string() const;

  private:
    WittNumber a_, b_;
};

// Eq. gamexp digit interleaving: even slots from a, odd slots from b.
std::vector<F4> s_digits(const OrderElement& g, int count);
OrderElement o_from_digits(const std::vector<F4>& digits, int s_precision);

// g = h mod S^n (componentwise congruence at the right bit counts)
bool congruent_mod_s(const OrderElement& g, const OrderElement& h, int n);

OrderElement o_pow(const OrderElement& g, int64_t e);
OrderElement commutator(const OrderElement& g, const OrderElement& h);

// digit expansion as text, e.g. "1 + w*S^2 (mod S^4)"
std::string expansion_string(const OrderElement& g, int count);

}  // namespace mstab
