#pragma once
#include <cstdint>
#include <string_view>

namespace mstab {

// splitmix64: tiny, fully specified, identical on every platform.  Used for
// all seeded randomness so reports are reproducible bit for bit.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection
    uint64_t below(uint64_t bound) {
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

  private:
    uint64_t state_;
};

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// per-check seed derivation: adding checks must not perturb other streams
inline uint64_t derive_seed(uint64_t master, std::string_view check_name) {
    uint64_t h = fnv1a64(check_name);
    return Rng(master ^ h).next();
}

}  // namespace mstab
