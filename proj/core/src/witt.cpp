#include "mstab/witt.hpp"

#include <bit>
#include <cassert>

namespace mstab {

namespace {
constexpr int kMaxPrecision = 62;

uint64_t mask_of(int prec) { return (prec >= 64) ? ~uint64_t{0} : ((uint64_t{1} << prec) - 1); }
}  // namespace

WittNumber::WittNumber(uint64_t x, uint64_t y, int precision) : prec_(precision) {
    if (precision < 1 || precision > kMaxPrecision)
        throw Error("WittNumber precision out of range");
    uint64_t m = mask_of(precision);
    x_ = x & m;
    y_ = y & m;
}

WittNumber WittNumber::from_int(int64_t n, int precision) {
    return WittNumber(static_cast<uint64_t>(n), 0, precision);
}

WittNumber WittNumber::truncated(int precision) const {
    if (precision > prec_)
        throw InsufficientPrecision("truncated: cannot extend a residue");
    return WittNumber(x_, y_, precision);
}

static int common_prec(const WittNumber& a, const WittNumber& b) {
    return a.precision() < b.precision() ? a.precision() : b.precision();
}

WittNumber operator+(const WittNumber& a, const WittNumber& b) {
    int p = common_prec(a, b);
    return WittNumber(a.x_ + b.x_, a.y_ + b.y_, p);
}

WittNumber operator-(const WittNumber& a, const WittNumber& b) {
    int p = common_prec(a, b);
    return WittNumber(a.x_ - b.x_, a.y_ - b.y_, p);
}

WittNumber WittNumber::operator-() const {
    return WittNumber(~x_ + 1, ~y_ + 1, prec_);
}

WittNumber operator*(const WittNumber& a, const WittNumber& b) {
    int p = common_prec(a, b);
    uint64_t x = a.x_ * b.x_ - a.y_ * b.y_;
    uint64_t y = a.x_ * b.y_ + b.x_ * a.y_ - a.y_ * b.y_;
    return WittNumber(x, y, p);
}

bool operator==(const WittNumber& a, const WittNumber& b) {
    int p = common_prec(a, b);
    uint64_t m = mask_of(p);
    return ((a.x_ ^ b.x_) & m) == 0 && ((a.y_ ^ b.y_) & m) == 0;
}

WittNumber WittNumber::frobenius() const {
    return WittNumber(x_ - y_, ~y_ + 1, prec_);
}

WittNumber WittNumber::norm() const {
    WittNumber n = *this * frobenius();
    assert(n.is_galois_invariant());
    return n;
}

uint64_t inv_odd(uint64_t x, int precision) {
    assert(x & 1);
    // Newton: y <- y(2 - xy) doubles correct bits; 6 steps cover 64
    uint64_t y = x;  // correct mod 8 already for odd x? x*x = 1 mod 8, so y=x works mod 8
    for (int it = 0; it < 6; ++it) y = y * (2 - x * y);
    return y & mask_of(precision);
}

WittNumber WittNumber::inverse() const {
    if (v2() != 0) throw NonUnitError();
    WittNumber s = frobenius();
    WittNumber n = *this * s;  // scalar, odd
    uint64_t ninv = inv_odd(n.x_, prec_);
    WittNumber c(ninv, 0, prec_);
    return s * c;
}

int WittNumber::v2() const {
    if (is_zero()) return -1;
    int vx = x_ ? std::countr_zero(x_) : prec_;
    int vy = y_ ? std::countr_zero(y_) : prec_;
    int v = vx < vy ? vx : vy;
    return v >= prec_ ? -1 : v;
}

WittNumber teichmuller(F4 r, int precision) {
    // naive lift of the residue, then t <- t^4 to stability
    WittNumber t(r.v & 1, (r.v >> 1) & 1, precision);
    for (int it = 0; it < precision + 2; ++it) {
        WittNumber t2 = t * t;
        WittNumber t4 = t2 * t2;
        if (t4 == t) return t;
        t = t4;
    }
    throw Error("teichmuller: iteration did not stabilize");
}

std::vector<F4> witt_digits(const WittNumber& u, int count) {
    if (count > u.precision())
        throw InsufficientPrecision("witt_digits: count exceeds precision");
    std::vector<F4> out;
    out.reserve(count);
    WittNumber cur = u;
    for (int k = 0; k < count; ++k) {
        F4 d = cur.residue();
        out.push_back(d);
        WittNumber t = teichmuller(d, cur.precision());
        WittNumber diff = cur - t;
        assert((diff.x() & 1) == 0 && (diff.y() & 1) == 0);
        cur = WittNumber(diff.x() >> 1, diff.y() >> 1, cur.precision() - 1 > 0 ? cur.precision() - 1 : 1);
    }
    return out;
}

WittNumber witt_from_digits(const std::vector<F4>& digits, int precision) {
    WittNumber acc(0, 0, precision);
    for (size_t k = digits.size(); k-- > 0;) {
        WittNumber t = teichmuller(digits[k], precision);
        acc = WittNumber(acc.x() * 2, acc.y() * 2, precision) + t;
    }
    return acc;
}

WittNumber hensel_sqrt_m7(int precision) {
    if (precision < 1) throw Error("hensel_sqrt_m7: precision must be >= 1");
    int p = precision + 2 > 5 ? precision + 2 : 5;
    if (p > kMaxPrecision) p = kMaxPrecision;
    uint64_t m = mask_of(p);
    uint64_t x = 5;
    for (int it = 0; it < 80; ++it) {
        // x <- x - (x^2+7)/(2x); (x^2+7)/2 is integral since x^2 = 1 mod 8
        uint64_t f = (x * x + 7) & m;
        if (f == 0) break;
        uint64_t t = (f >> 1) & m;
        uint64_t xn = (x - t * inv_odd(x, p)) & m;
        if (xn == x) break;
        x = xn;
    }
    if (((x * x + 7) & m) != 0)
        throw Error("hensel_sqrt_m7: iteration failed to certify");
    return WittNumber(x, 0, precision);
}

std::string WittNumber::to_string() const {
    std::string s = std::to_string(x_);
    if (y_) s += "+" + std::to_string(y_) + "w";
    s += " (mod 2^" + std::to_string(prec_) + ")";
    return s;
}

}  // namespace mstab
