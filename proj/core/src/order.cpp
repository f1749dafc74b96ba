#include "mstab/order.hpp"

#include <cassert>

namespace mstab {

OrderElement::OrderElement(const WittNumber& a, const WittNumber& b) : a_(a), b_(b) {
    if (a.precision() != b.precision()) {
        int p = a.precision() < b.precision() ? a.precision() : b.precision();
        a_ = a.truncated(p);
        b_ = b.truncated(p);
    }
}

OrderElement OrderElement::from_int(int64_t n, int s_precision) {
    int p = (s_precision + 1) / 2;
    return OrderElement(WittNumber::from_int(n, p), WittNumber(0, 0, p));
}

OrderElement OrderElement::one(int s_precision) { return from_int(1, s_precision); }
OrderElement OrderElement::zero(int s_precision) { return from_int(0, s_precision); }

OrderElement OrderElement::truncated(int s_precision) const {
    int p = (s_precision + 1) / 2;
    return OrderElement(a_.truncated(p), b_.truncated(p));
}

OrderElement operator+(const OrderElement& g, const OrderElement& h) {
    return OrderElement(g.a_ + h.a_, g.b_ + h.b_);
}

OrderElement operator-(const OrderElement& g, const OrderElement& h) {
    return OrderElement(g.a_ - h.a_, g.b_ - h.b_);
}

OrderElement OrderElement::operator-() const { return OrderElement(-a_, -b_); }

OrderElement operator*(const OrderElement& g, const OrderElement& h) {
    int p = g.a_.precision() < h.a_.precision() ? g.a_.precision() : h.a_.precision();
    WittNumber two(2, 0, p);
    WittNumber a = g.a_ * h.a_ + two * (g.b_ * h.b_.frobenius());
    WittNumber b = g.a_ * h.b_ + g.b_ * h.a_.frobenius();
    return OrderElement(a, b);
}

bool operator==(const OrderElement& g, const OrderElement& h) {
    return g.a_ == h.a_ && g.b_ == h.b_;
}

WittNumber OrderElement::det() const {
    int p = a_.precision();
    WittNumber two(2, 0, p);
    WittNumber d = a_ * a_.frobenius() - two * (b_ * b_.frobenius());
    if (!d.is_galois_invariant())
        throw Error("o_det: result not Galois invariant (arithmetic bug)");
    return d;
}

OrderElement OrderElement::galois() const {
    return OrderElement(a_.frobenius(), b_.frobenius());
}

bool OrderElement::is_unit() const { return a_.v2() == 0; }

OrderElement OrderElement::inverse() const {
    if (!is_unit()) throw NonUnitError("o_inv: element has positive valuation");
    WittNumber dinv = det().inverse();
    return OrderElement(dinv * a_.frobenius(), dinv * (-b_));
}

SValuation OrderElement::s_valuation() const {
    int va = a_.v2();  // -1 means zero component
    int vb = b_.v2();
    int N = s_precision();
    int ia = (va < 0) ? N : 2 * va;
    int ib = (vb < 0) ? N : 2 * vb + 1;
    int idx = ia < ib ? ia : ib;
    if (idx >= N) return {N, true};
    return {idx, false};
}

std::vector<F4> s_digits(const OrderElement& g, int count) {
    if (count > g.s_precision())
        throw InsufficientPrecision("s_digits: count exceeds S-precision");
    std::vector<F4> da = witt_digits(g.a(), (count + 1) / 2);
    std::vector<F4> db = witt_digits(g.b(), count / 2);
    std::vector<F4> out(count);
    for (int t = 0; t < count; ++t) out[t] = (t % 2 == 0) ? da[t / 2] : db[t / 2];
    return out;
}

OrderElement o_from_digits(const std::vector<F4>& digits, int s_precision) {
    int p = (s_precision + 1) / 2;
    std::vector<F4> da, db;
    for (size_t t = 0; t < digits.size(); ++t)
        ((t % 2 == 0) ? da : db).push_back(digits[t]);
    return OrderElement(witt_from_digits(da, p), witt_from_digits(db, p));
}

bool congruent_mod_s(const OrderElement& g, const OrderElement& h, int n) {
    if (n > g.s_precision() || n > h.s_precision())
        throw InsufficientPrecision("congruent_mod_s: n exceeds S-precision");
    // a mod 2^ceil(n/2), b mod 2^ceil((n-1)/2)
    int pa = (n + 1) / 2;
    int pb = n / 2;
    if (pa > 0 && !(g.a().truncated(pa) == h.a().truncated(pa))) return false;
    if (pb > 0 && !(g.b().truncated(pb) == h.b().truncated(pb))) return false;
    return true;
}

OrderElement o_pow(const OrderElement& g, int64_t e) {
    OrderElement base = g;
    if (e < 0) {
        base = g.inverse();
        e = -e;
    }
    OrderElement acc = OrderElement::one(g.s_precision());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

OrderElement commutator(const OrderElement& g, const OrderElement& h) {
    return g * h * g.inverse() * h.inverse();
}

std::string expansion_string(const OrderElement& g, int count) {
    std::vector<F4> d = s_digits(g, count);
    std::string out;
    for (int k = 0; k < count; ++k) {
        if (d[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff;
        if (d[k] == F4::w())
            coeff = "w";
        else if (d[k] == F4::w2())
            coeff = "w^2";
        if (k == 0) {
            out += coeff.empty() ? "1" : coeff;
        } else {
            std::string power = (k == 1) ? "S" : "S^" + std::to_string(k);
            out += coeff.empty() ? power : coeff + "*" + power;
        }
    }
    if (out.empty()) out = "0";
    out += " (mod S^" + std::to_string(count) + ")";
    return out;
}

std::string OrderElement::to_string() const {
    return expansion_string(*this, s_precision());
}

}  // namespace mstab
