#include "mstab/honda.hpp"

#include <array>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace mstab {

namespace {

using boost::multiprecision::cpp_int;

// Dyadic rational num / 2^e with e >= 0 minimal.  The whole FGL construction
// only ever divides by 2, so this is exact and cheap.
struct Dyadic {
    cpp_int num;
    int e = 0;

    Dyadic() = default;
    Dyadic(cpp_int n, int ex) : num(std::move(n)), e(ex) { normalize(); }
    static Dyadic integer(long v) { return Dyadic(cpp_int(v), 0); }

    void normalize() {
        if (num == 0) {
            e = 0;
            return;
        }
        while (e > 0 && (num & 1) == 0) {
            num >>= 1;
            --e;
        }
    }
    bool is_zero() const { return num == 0; }
    bool is_integral() const { return e == 0; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        int e = a.e > b.e ? a.e : b.e;
        return Dyadic((a.num << (e - a.e)) + (b.num << (e - b.e)), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        int e = a.e > b.e ? a.e : b.e;
        return Dyadic((a.num << (e - a.e)) - (b.num << (e - b.e)), e);
    }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num * b.num, a.e + b.e);
    }
};

}  // namespace

bool F4Series::is_zero() const {
    for (F4 x : c)
        if (!x.is_zero()) return false;
    return true;
}

F4Series F4Series::monomial(int degree, F4 coeff, int exponent) {
    F4Series s(degree);
    if (exponent < degree) s.c[exponent] = coeff;
    return s;
}

F4Series operator+(const F4Series& a, const F4Series& b) {
    F4Series out(int(std::min(a.c.size(), b.c.size())));
    for (int i = 0; i < out.degree(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

F4Series operator*(const F4Series& a, const F4Series& b) {
    int D = int(std::min(a.c.size(), b.c.size()));
    F4Series out(D);
    for (int i = 0; i < D; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j < D; ++j) {
            if (b.c[j].is_zero()) continue;
            out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
        }
    }
    return out;
}

F4Series compose(const F4Series& u, const F4Series& v) {
    if (!v.c.empty() && !v.c[0].is_zero())
        throw Error("compose: inner series must have zero constant term");
    int D = int(std::min(u.c.size(), v.c.size()));
    F4Series out(D);
    F4Series vp(D);  // v^k, starting at k = 0 (i.e. 1)
    vp.c[0] = F4::one();
    for (int k = 0; k < D; ++k) {
        if (!u.c[k].is_zero()) {
            for (int i = 0; i < D; ++i)
                out.c[i] = out.c[i] + u.c[k] * vp.c[i];
        }
        if (k + 1 < D) vp = vp * v;
    }
    return out;
}

HondaFGL HondaFGL::build(int degree) {
    if (degree < 2) throw Error("HondaFGL: degree must be >= 2");
    int D = degree;

    // logarithm l(x) = sum x^(4^i) / 2^i
    std::vector<Dyadic> log(D);
    for (long p = 1, i = 0; p < D; p *= 4, ++i) log[p] = Dyadic(cpp_int(1), int(i));

    // powers of l, dense univariate
    std::vector<std::vector<Dyadic>> lpow(D);
    lpow[0].assign(D, Dyadic{});
    lpow[0][0] = Dyadic::integer(1);
    for (int t = 1; t < D; ++t) {
        lpow[t].assign(D, Dyadic{});
        for (int a = 0; a < D; ++a) {
            if (lpow[t - 1][a].is_zero()) continue;
            for (long p = 1; p < D - a; p *= 4)
                lpow[t][a + p] = lpow[t][a + p] + lpow[t - 1][a] * log[p];
        }
    }

    // compositional inverse g with g(l(x)) = x
    std::vector<Dyadic> g(D);
    g[1] = Dyadic::integer(1);
    for (int k = 2; k < D; ++k) {
        Dyadic s{};
        for (int t = 1; t < k; ++t) s = s + g[t] * lpow[t][k];
        g[k] = Dyadic{} - s;
    }

    // w = l(x) + l(y); w^k as sparse bivariate maps, total degree < D
    using Key = std::pair<int, int>;
    std::vector<std::pair<Key, Dyadic>> wterms;
    for (long p = 1; p < D; p *= 4) {
        wterms.push_back({{int(p), 0}, log[p]});
        wterms.push_back({{0, int(p)}, log[p]});
    }
    std::map<Key, Dyadic> wk;  // w^k, starting at k = 1
    for (auto& [key, v] : wterms) wk[key] = v;

    std::vector<Dyadic> F(size_t(D) * D);
    auto accumulate = [&](const std::map<Key, Dyadic>& pk, const Dyadic& coeff) {
        if (coeff.is_zero()) return;
        for (auto& [key, v] : pk)
            F[size_t(key.first) * D + key.second] =
                F[size_t(key.first) * D + key.second] + coeff * v;
    };
    accumulate(wk, g[1]);
    for (int k = 2; k < D; ++k) {
        std::map<Key, Dyadic> next;
        for (auto& [key, v] : wk) {
            for (auto& [tkey, tv] : wterms) {
                int a = key.first + tkey.first, b = key.second + tkey.second;
                if (a + b >= D) continue;
                auto& slot = next[{a, b}];
                slot = slot + v * tv;
            }
        }
        wk = std::move(next);
        if (wk.empty()) break;
        accumulate(wk, g[k]);
    }

    // 2-integrality, then reduction mod 2 into F4 (coefficients land in F2)
    std::vector<F4> c(size_t(D) * D, F4::zero());
    for (int a = 0; a < D; ++a) {
        for (int b = 0; a + b < D; ++b) {
            const Dyadic& v = F[size_t(a) * D + b];
            if (v.is_zero()) continue;
            if (!v.is_integral())
                throw IntegralityFailure("Honda FGL coefficient at (" + std::to_string(a) +
                                         "," + std::to_string(b) + ") is not 2-integral");
            if ((v.num & 1) != 0) c[size_t(a) * D + b] = F4::one();
        }
    }
    HondaFGL fgl(D, std::move(c));
    if (!fgl.unit_axiom()) throw Error("Honda FGL: unit axiom failed");
    if (!fgl.is_symmetric()) throw Error("Honda FGL: symmetry failed");
    return fgl;
}

F4Series HondaFGL::formal_sum(const F4Series& u, const F4Series& v) const {
    int D = degree_;
    F4Series out(D);
    // precompute powers of u; group F's terms by the u-exponent
    F4Series up(D);
    up.c[0] = F4::one();
    for (int a = 0; a < D; ++a) {
        // T_a(x) = sum_b F[a][b] v(x)^b
        F4Series ta(D);
        bool any = false;
        F4Series vp(D);
        vp.c[0] = F4::one();
        for (int b = 0; a + b < D; ++b) {
            F4 cf = coeff(a, b);
            if (!cf.is_zero()) {
                any = true;
                for (int t = 0; t < D; ++t) ta.c[t] = ta.c[t] + cf * vp.c[t];
            }
            if (b + 1 < D) vp = vp * v;
        }
        if (any) {
            F4Series prod = up * ta;
            for (int t = 0; t < D; ++t) out.c[t] = out.c[t] + prod.c[t];
        }
        if (a + 1 < D) up = up * u;
    }
    return out;
}

F4Series HondaFGL::two_series() const {
    F4Series x = identity_series();
    return formal_sum(x, x);
}

F4Series HondaFGL::minus_one() const {
    int D = degree_;
    F4Series iota = F4Series::monomial(D, F4::one(), 1);  // -1 = 1 in F2
    F4Series x = identity_series();
    for (int it = 0; it < D + 2; ++it) {
        F4Series r = formal_sum(x, iota);
        int k = -1;
        for (int t = 0; t < D; ++t) {
            if (!r.c[t].is_zero()) {
                k = t;
                break;
            }
        }
        if (k < 0) return iota;
        iota.c[k] = iota.c[k] + r.c[k];  // dF/dy = 1 + higher at lowest order
    }
    throw Error("minus_one: did not converge");
}

bool HondaFGL::unit_axiom() const {
    for (int a = 0; a < degree_; ++a) {
        F4 want = (a == 1) ? F4::one() : F4::zero();
        if (coeff(a, 0) != want) return false;
    }
    return true;
}

bool HondaFGL::is_symmetric() const {
    for (int a = 0; a < degree_; ++a)
        for (int b = 0; a + b < degree_; ++b)
            if (coeff(a, b) != coeff(b, a)) return false;
    return true;
}

bool HondaFGL::associativity() const {
    int D = degree_;
    // trivariate dense arrays indexed [a][b][c], total degree < D
    auto idx = [D](int a, int b, int c) { return (size_t(a) * D + b) * D + c; };
    std::vector<F4> lhs(size_t(D) * D * D, F4::zero());
    std::vector<F4> rhs(size_t(D) * D * D, F4::zero());

    // powers of F(x,y) as bivariate (in x,y)
    int nD = D;
    std::vector<std::vector<F4>> Fpow(nD);
    Fpow[0].assign(size_t(D) * D, F4::zero());
    Fpow[0][0] = F4::one();
    for (int k = 1; k < nD; ++k) {
        Fpow[k].assign(size_t(D) * D, F4::zero());
        for (int a1 = 0; a1 < D; ++a1)
            for (int b1 = 0; a1 + b1 < D; ++b1) {
                F4 v1 = Fpow[k - 1][size_t(a1) * D + b1];
                if (v1.is_zero()) continue;
                for (int a2 = 0; a2 < D; ++a2)
                    for (int b2 = 0; a2 + b2 < D; ++b2) {
                        F4 v2 = coeff(a2, b2);
                        if (v2.is_zero()) continue;
                        int a = a1 + a2, b = b1 + b2;
                        if (a + b >= D) continue;
                        Fpow[k][size_t(a) * D + b] = Fpow[k][size_t(a) * D + b] + v1 * v2;
                    }
            }
    }
    // lhs = F(F(x,y), z): term F[p][q] * F(x,y)^p * z^q
    for (int p = 0; p < D; ++p)
        for (int q = 0; p + q < D; ++q) {
            F4 cf = coeff(p, q);
            if (cf.is_zero()) continue;
            for (int a = 0; a < D; ++a)
                for (int b = 0; a + b < D; ++b) {
                    F4 v = Fpow[p][size_t(a) * D + b];
                    if (v.is_zero()) continue;
                    if (a + b + q >= D) continue;
                    lhs[idx(a, b, q)] = lhs[idx(a, b, q)] + cf * v;
                }
        }
    // rhs = F(x, F(y,z)): term F[p][q] * x^p * F(y,z)^q
    for (int p = 0; p < D; ++p)
        for (int q = 0; p + q < D; ++q) {
            F4 cf = coeff(p, q);
            if (cf.is_zero()) continue;
            for (int b = 0; b < D; ++b)
                for (int c = 0; b + c < D; ++c) {
                    F4 v = Fpow[q][size_t(b) * D + c];
                    if (v.is_zero()) continue;
                    if (p + b + c >= D) continue;
                    rhs[idx(p, b, c)] = rhs[idx(p, b, c)] + cf * v;
                }
        }
    return lhs == rhs;
}

std::vector<std::array<int, 3>> HondaFGL::nonzero_coefficients() const {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < degree_; ++a)
        for (int b = 0; a + b < degree_; ++b)
            if (!coeff(a, b).is_zero()) out.push_back({a, b, int(coeff(a, b).v)});
    return out;
}

F4Series endo_series(const OrderElement& gamma, const HondaFGL& fgl, int degree) {
    int D = degree;
    int tmax = 0;
    while ((1 << (tmax + 1)) < D) ++tmax;
    if (gamma.s_precision() < tmax + 1)
        throw InsufficientPrecision("endo_series: need digits up to log2(degree)");
    std::vector<F4> digits = s_digits(gamma, tmax + 1);
    F4Series acc(D);
    bool started = false;
    for (int t = 0; t <= tmax; ++t) {
        if (digits[t].is_zero()) continue;
        F4Series term = F4Series::monomial(D, digits[t], 1 << t);
        if (!started) {
            acc = term;
            started = true;
        } else {
            acc = fgl.formal_sum(acc, term);
        }
    }
    return acc;
}

bool endo_hom_check(const OrderElement& g, const OrderElement& d, const HondaFGL& fgl,
                    int degree) {
    F4Series eg = endo_series(g, fgl, degree);
    F4Series ed = endo_series(d, fgl, degree);
    F4Series prod = endo_series(g * d, fgl, degree);
    if (!(prod == compose(eg, ed))) return false;
    F4Series sum = endo_series(g + d, fgl, degree);
    return sum == fgl.formal_sum(eg, ed);
}

}  // namespace mstab
