#pragma once
#include <array>
#include <cstdint>

namespace mstab {

// The field with four elements, coded 0, 1, w, w^2 as 0,1,2,3 (w^2+w+1 = 0).
struct F4 {
    uint8_t v = 0;

    constexpr F4() = default;
    constexpr explicit F4(uint8_t code) : v(code) {}

    static constexpr F4 zero() { return F4{0}; }
    static constexpr F4 one() { return F4{1}; }
    static constexpr F4 w() { return F4{2}; }
    static constexpr F4 w2() { return F4{3}; }

    friend constexpr bool operator==(F4 a, F4 b) { return a.v == b.v; }
    friend constexpr bool operator!=(F4 a, F4 b) { return a.v != b.v; }

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(uint8_t(a.v ^ b.v)); }
    friend constexpr F4 operator*(F4 a, F4 b) {
        constexpr uint8_t tab[4][4] = {
            {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return F4(tab[a.v][b.v]);
    }

    constexpr F4 square() const { return *this * *this; }
    // x -> x^(2^k)
    constexpr F4 frob_pow(unsigned k) const { return (k & 1) ? square() : *this; }

    constexpr bool is_zero() const { return v == 0; }

    constexpr char letter() const { return "01wv"[v]; }  // v prints w^2
};

inline constexpr std::array<F4, 4> f4_all = {F4{0}, F4{1}, F4{2}, F4{3}};

}  // namespace mstab
