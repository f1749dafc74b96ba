#pragma once
#include <array>
#include <vector>

#include "mstab/order.hpp"

namespace mstab {

// Univariate power series over F4 truncated at x^D; index = exponent.
struct F4Series {
    std::vector<F4> c;

    explicit F4Series(int degree) : c(degree, F4::zero()) {}
    int degree() const { return int(c.size()); }
    bool is_zero() const;
    static F4Series monomial(int degree, F4 coeff, int exponent);

    friend F4Series operator+(const F4Series& a, const F4Series& b);
    friend F4Series operator*(const F4Series& a, const F4Series& b);
    friend bool operator==(const F4Series& a, const F4Series& b) { return a.c == b.c; }
};

// u(v(x)) truncated; v must have zero constant term
F4Series compose(const F4Series& u, const F4Series& v);

/****************************************************************
 * The height-2 Honda formal group law over F4 up to total degree
 * D, built from the logarithm l(x) = sum x^(4^i)/2^i over exact
 * dyadic rationals as F = l^{-1}(l(x)+l(y)).  Every pre-reduction
 * coefficient is asserted 2-integral before reducing mod 2; a
 * failure is an IntegralityFailure, not a warning.
 ****************************************************************/
class HondaFGL {
  public:
    static HondaFGL build(int degree);

    int degree() const { return degree_; }
    F4 coeff(int a, int b) const { return c_[a * degree_ + b]; }

    // F(u(x), v(x)) truncated at x^degree
    F4Series formal_sum(const F4Series& u, const F4Series& v) const;

    F4Series two_series() const;   // F(x, x)
    F4Series minus_one() const;    // the formal inverse [-1]_F
    F4Series identity_series() const { return F4Series::monomial(degree_, F4::one(), 1); }

    bool is_symmetric() const;
    bool unit_axiom() const;       // F(x, 0) = x
    bool associativity() const;    // mod total degree

    // JSON-friendly list of nonzero coefficients [[a, b, code], ...]
    std::vector<std::array<int, 3>> nonzero_coefficients() const;

  private:
    HondaFGL(int degree, std::vector<F4> c) : degree_(degree), c_(std::move(c)) {}
    int degree_;
    std::vector<F4> c_;  // c[a*D + b], a + b < D
};

// gamma(x) = a0(x) +_F a1(x^2) +_F a2(x^4) +_F ... from the S-adic digits
F4Series endo_series(const OrderElement& gamma, const HondaFGL& fgl, int degree);

// endo(gd) = endo(g) o endo(d) and endo(g+d) = F(endo(g), endo(d))
bool endo_hom_check(const OrderElement& g, const OrderElement& d, const HondaFGL& fgl,
                    int degree);

}  // namespace mstab
