#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "mstab/errors.hpp"
#include "mstab/f4.hpp"

namespace mstab {

/****************************************************************
 * Exact arithmetic in W(F4) = Z2[w]/(1+w+w^2) truncated mod 2^P.
 *
 * An element is x + y*w with x, y residues in [0, 2^P).  All ring
 * operations are exact modulo 2^P; mixed precisions follow the
 * min-P rule.  w^2 = -1 - w, so
 *   (x1+y1 w)(x2+y2 w) = (x1x2 - y1y2) + (x1y2 + x2y1 - y1y2) w.
 ****************************************************************/
class WittNumber {
  public:
    WittNumber() = default;
    WittNumber(uint64_t x, uint64_t y, int precision);
    static WittNumber from_int(int64_t n, int precision);

    int precision() const { return prec_; }
    uint64_t x() const { return x_; }
    uint64_t y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    F4 residue() const { return F4(uint8_t((x_ & 1) | ((y_ & 1) << 1))); }

    WittNumber truncated(int precision) const;

    friend WittNumber operator+(const WittNumber& a, const WittNumber& b);
    friend WittNumber operator-(const WittNumber& a, const WittNumber& b);
    friend WittNumber operator*(const WittNumber& a, const WittNumber& b);
    WittNumber operator-() const;
    friend bool operator==(const WittNumber& a, const WittNumber& b);
    friend bool operator!=(const WittNumber& a, const WittNumber& b) { return !(a == b); }

    // Frobenius: w -> w^2, i.e. (x,y) -> (x-y, -y).  Ring involution.
    WittNumber frobenius() const;

    // x + y w with both components scalar: Galois-invariant iff y == 0
    bool is_galois_invariant() const { return y_ == 0; }

    // u * u^sigma; always Galois invariant
    WittNumber norm() const;

    // multiplicative inverse; throws NonUnitError unless v2 == 0
    WittNumber inverse() const;

    // 2-adic valuation min(v2(x), v2(y)); -1 encodes "infinite" (u = 0 mod 2^P)
    int v2() const;

    std::string to_string() const;

  private:
    uint64_t x_ = 0, y_ = 0;
    int prec_ = 1;
};

// the unique lift t of r with t^4 = t mod 2^P (iterated t <- t^4 from a naive lift)
WittNumber teichmuller(F4 r, int precision);

// u = sum teich(d_i) 2^i; subtract-and-divide extraction, exact round trip
std::vector<F4> witt_digits(const WittNumber& u, int count);
WittNumber witt_from_digits(const std::vector<F4>& digits, int precision);

// inverse of an odd scalar residue mod 2^precision
uint64_t inv_odd(uint64_t x, int precision);

// canonical square root of -7: s^2 = -7 mod 2^P, s = 5 mod 8, and s is the
// truncation of the exact 2-adic root (computed at P+2 internal bits)
WittNumber hensel_sqrt_m7(int precision);

}  // namespace mstab
