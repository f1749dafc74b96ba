#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mstab/errors.hpp"

namespace mstab {

/****************************************************************
 * Howell normal form over Z/2^m (m <= 8), the canonical basis for
 * submodules of (Z/2^m)^dim.  Unlike Hermite/Smith, the Howell
 * property keeps membership and span comparison exact in the
 * presence of zero divisors: whenever a pivot 2^a is installed at
 * a column, its annihilator multiple 2^(m-a) * row is fed back in,
 * so trailing columns are fully exposed.
 *
 * Rows optionally carry an augmentation block (combination
 * tracking for solving); the canonical form and span comparisons
 * ignore it.
 ****************************************************************/
class HowellBasis {
  public:
    HowellBasis(int dim, int mbits, int aug_dim = 0);

    int dim() const { return dim_; }
    int mbits() const { return mbits_; }
    size_t row_count() const { return rows_.size(); }

    // returns true when the span grew
    bool insert(std::vector<uint8_t> row, std::vector<uint8_t> aug = {});

    bool member(const std::vector<uint8_t>& v) const;

    // coefficients over the augmentation block expressing target in the span
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& target) const;

    // canonicalize (sort + reduce above pivots); idempotent
    void normalize();

    // canonical equality of spans; both sides are normalized
    bool equals_span(HowellBasis& other);

    // basis row as an unpacked coefficient vector
    std::vector<uint8_t> row(size_t r) const;

    bool is_zero() const { return rows_.empty(); }

  private:
    struct Row {
        int lead;
        int lead_log2;
        std::vector<uint8_t> v;      // entries, m > 1
        std::vector<uint64_t> bits;  // packed entries, m = 1
        std::vector<uint8_t> aug;
    };

    std::vector<uint64_t> pack(const std::vector<uint8_t>& v) const;
    std::vector<uint8_t> unpack(const std::vector<uint64_t>& w) const;
    bool insert_gf2(std::vector<uint64_t> bits, std::vector<uint8_t> aug);
    bool insert_one(std::vector<uint8_t>& v, std::vector<uint8_t>& aug,
                    std::vector<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>>& pending);

    int dim_;
    int mbits_;
    int aug_dim_;
    uint8_t mask_;
    bool normalized_ = true;
    std::vector<Row> rows_;       // unordered until normalize(); one pivot per column
    std::vector<int32_t> pivot_;  // column -> row index, -1 when none
};

// Smallest submodule containing `seeds` and closed under the given coordinate
// permutations (left group action on a coset module).
HowellBasis module_closure(int dim, int mbits, std::vector<std::vector<uint8_t>> seeds,
                           const std::vector<std::vector<int32_t>>& actions);

}  // namespace mstab
