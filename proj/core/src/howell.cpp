#include "mstab/howell.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>

namespace mstab {

namespace {

inline uint8_t inv_odd8(uint8_t x) {
    // Newton on 8 bits: 3 steps from y = x (correct mod 8)
    uint8_t y = x;
    y = uint8_t(y * (2 - x * y));
    y = uint8_t(y * (2 - x * y));
    y = uint8_t(y * (2 - x * y));
    return y;
}

// r -= q * p over the masked byte ring
inline void submul(std::vector<uint8_t>& r, uint8_t q, const std::vector<uint8_t>& p,
                   uint8_t mask) {
    size_t n = r.size();
    const uint8_t* __restrict ps = p.data();
    uint8_t* __restrict rs = r.data();
    for (size_t i = 0; i < n; ++i) rs[i] = uint8_t((rs[i] - q * ps[i]) & mask);
}

inline void scale(std::vector<uint8_t>& r, uint8_t q, uint8_t mask) {
    for (auto& x : r) x = uint8_t((x * q) & mask);
}

inline void xor_into(std::vector<uint64_t>& r, const std::vector<uint64_t>& p) {
    size_t n = r.size();
    const uint64_t* __restrict ps = p.data();
    uint64_t* __restrict rs = r.data();
    for (size_t i = 0; i < n; ++i) rs[i] ^= ps[i];
}

inline int first_set_bit(const std::vector<uint64_t>& w, int from_word = 0) {
    for (size_t i = size_t(from_word); i < w.size(); ++i)
        if (w[i]) return int(i * 64) + std::countr_zero(w[i]);
    return -1;
}

// first set bit at position >= from
inline int next_set_bit(const std::vector<uint64_t>& w, int from) {
    if (from < 0) from = 0;
    size_t word = size_t(from) >> 6;
    if (word >= w.size()) return -1;
    uint64_t cur = w[word] & (~uint64_t(0) << (from & 63));
    if (cur) return int(word * 64) + std::countr_zero(cur);
    for (size_t i = word + 1; i < w.size(); ++i)
        if (w[i]) return int(i * 64) + std::countr_zero(w[i]);
    return -1;
}

}  // namespace

HowellBasis::HowellBasis(int dim, int mbits, int aug_dim)
    : dim_(dim), mbits_(mbits), aug_dim_(aug_dim) {
    if (mbits < 1 || mbits > 8) throw Error("HowellBasis: mbits must be in 1..8");
    mask_ = uint8_t((1u << mbits) - 1);
    pivot_.assign(dim, -1);
}

std::vector<uint64_t> HowellBasis::pack(const std::vector<uint8_t>& v) const {
    std::vector<uint64_t> w((dim_ + 63) / 64, 0);
    for (int i = 0; i < dim_; ++i)
        if (v[i] & 1) w[i >> 6] |= uint64_t(1) << (i & 63);
    return w;
}

std::vector<uint8_t> HowellBasis::unpack(const std::vector<uint64_t>& w) const {
    std::vector<uint8_t> v(dim_, 0);
    for (int i = 0; i < dim_; ++i) v[i] = uint8_t((w[i >> 6] >> (i & 63)) & 1);
    return v;
}

// ---- GF(2) path: bit-packed rows, all pivots are units ----------------------

bool HowellBasis::insert_gf2(std::vector<uint64_t> bits, std::vector<uint8_t> aug) {
    int c = first_set_bit(bits);
    while (c >= 0) {
        if (pivot_[c] < 0) {
            pivot_[c] = int32_t(rows_.size());
            rows_.push_back(Row{c, 0, {}, std::move(bits), std::move(aug)});
            normalized_ = false;
            return true;
        }
        const Row& p = rows_[pivot_[c]];
        xor_into(bits, p.bits);
        if (!p.aug.empty() && !aug.empty())
            for (size_t i = 0; i < aug.size(); ++i) aug[i] ^= p.aug[i];
        c = first_set_bit(bits, c >> 6);
    }
    return false;
}

// ---- general Z/2^m path ------------------------------------------------------

bool HowellBasis::insert_one(
    std::vector<uint8_t>& v, std::vector<uint8_t>& aug,
    std::vector<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>>& pending) {
    bool changed = false;
    int c = 0;
    while (c < dim_) {
        if (v[c] == 0) {
            ++c;
            continue;
        }
        int vr = std::countr_zero(uint32_t(v[c]));
        if (pivot_[c] < 0) {
            // normalize to leading entry 2^vr and install
            uint8_t odd = uint8_t(v[c] >> vr);
            uint8_t u = inv_odd8(odd);
            scale(v, u, mask_);
            if (!aug.empty()) scale(aug, u, mask_);
            if (vr > 0) {
                // annihilator row exposes the columns behind a non-unit pivot
                std::vector<uint8_t> av = v, aa = aug;
                scale(av, uint8_t((1u << (mbits_ - vr)) & mask_), mask_);
                if (!aa.empty()) scale(aa, uint8_t((1u << (mbits_ - vr)) & mask_), mask_);
                pending.emplace_back(std::move(av), std::move(aa));
            }
            pivot_[c] = int32_t(rows_.size());
            rows_.push_back(Row{c, vr, std::move(v), {}, std::move(aug)});
            normalized_ = false;
            return true;
        }
        Row& p = rows_[pivot_[c]];
        if (vr >= p.lead_log2) {
            uint8_t q = uint8_t(v[c] >> p.lead_log2);
            submul(v, q, p.v, mask_);
            if (!p.aug.empty() && !aug.empty()) submul(aug, q, p.aug, mask_);
            assert(v[c] == 0);
            continue;
        }
        // incoming row has the stronger pivot: swap it in, keep reducing the old row
        uint8_t odd = uint8_t(v[c] >> vr);
        uint8_t u = inv_odd8(odd);
        scale(v, u, mask_);
        if (!aug.empty()) scale(aug, u, mask_);
        std::swap(p.v, v);
        std::swap(p.aug, aug);
        p.lead_log2 = vr;
        changed = true;
        normalized_ = false;
        if (vr > 0) {
            std::vector<uint8_t> av = p.v, aa = p.aug;
            scale(av, uint8_t((1u << (mbits_ - vr)) & mask_), mask_);
            if (!aa.empty()) scale(aa, uint8_t((1u << (mbits_ - vr)) & mask_), mask_);
            pending.emplace_back(std::move(av), std::move(aa));
        }
        // old pivot row (now in v) is divisible by the new pivot; loop continues at c
    }
    return changed;
}

bool HowellBasis::insert(std::vector<uint8_t> row, std::vector<uint8_t> aug) {
    if (int(row.size()) != dim_) throw Error("HowellBasis::insert: wrong dimension");
    for (auto& x : row) x &= mask_;
    if (aug.empty() && aug_dim_ > 0) aug.assign(aug_dim_, 0);
    for (auto& x : aug) x &= mask_;
    if (mbits_ == 1) return insert_gf2(pack(row), std::move(aug));
    std::vector<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>> pending;
    bool changed = insert_one(row, aug, pending);
    while (!pending.empty()) {
        auto [v, a] = std::move(pending.back());
        pending.pop_back();
        changed |= insert_one(v, a, pending);
    }
    return changed;
}

bool HowellBasis::member(const std::vector<uint8_t>& v0) const {
    if (mbits_ == 1) {
        std::vector<uint64_t> bits = pack(v0);
        int c = first_set_bit(bits);
        while (c >= 0) {
            if (pivot_[c] < 0) return false;
            xor_into(bits, rows_[pivot_[c]].bits);
            c = first_set_bit(bits, c >> 6);
        }
        return true;
    }
    std::vector<uint8_t> v = v0;
    for (auto& x : v) x &= mask_;
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        if (pivot_[c] < 0) return false;
        const Row& p = rows_[pivot_[c]];
        int vr = std::countr_zero(uint32_t(v[c]));
        if (vr < p.lead_log2) return false;
        submul(v, uint8_t(v[c] >> p.lead_log2), p.v, mask_);
    }
    return true;
}

std::optional<std::vector<uint8_t>> HowellBasis::solve(const std::vector<uint8_t>& target) const {
    std::vector<uint8_t> combo(aug_dim_, 0);
    if (mbits_ == 1) {
        std::vector<uint64_t> bits = pack(target);
        int c = first_set_bit(bits);
        while (c >= 0) {
            if (pivot_[c] < 0) return std::nullopt;
            const Row& p = rows_[pivot_[c]];
            xor_into(bits, p.bits);
            if (!p.aug.empty())
                for (size_t i = 0; i < combo.size(); ++i) combo[i] ^= p.aug[i];
            c = first_set_bit(bits, c >> 6);
        }
        return combo;
    }
    std::vector<uint8_t> v = target;
    for (auto& x : v) x &= mask_;
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        if (pivot_[c] < 0) return std::nullopt;
        const Row& p = rows_[pivot_[c]];
        int vr = std::countr_zero(uint32_t(v[c]));
        if (vr < p.lead_log2) return std::nullopt;
        uint8_t q = uint8_t(v[c] >> p.lead_log2);
        submul(v, q, p.v, mask_);
        if (!p.aug.empty()) {
            for (size_t i = 0; i < combo.size(); ++i)
                combo[i] = uint8_t((combo[i] + q * p.aug[i]) & mask_);
        }
    }
    return combo;
}

void HowellBasis::normalize() {
    if (normalized_) return;
    std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) { return a.lead < b.lead; });
    for (size_t r = 0; r < rows_.size(); ++r) pivot_[rows_[r].lead] = int32_t(r);
    // rows with larger leads first, so every pivot used is already final
    if (mbits_ == 1) {
        for (size_t ri = rows_.size(); ri-- > 0;) {
            Row& row = rows_[ri];
            int c = next_set_bit(row.bits, row.lead + 1);
            while (c >= 0) {
                if (pivot_[c] >= 0) {
                    const Row& p = rows_[pivot_[c]];
                    xor_into(row.bits, p.bits);
                    if (!row.aug.empty() && !p.aug.empty())
                        for (size_t i = 0; i < row.aug.size(); ++i) row.aug[i] ^= p.aug[i];
                    c = next_set_bit(row.bits, c);  // bit c is now clear
                } else {
                    c = next_set_bit(row.bits, c + 1);
                }
            }
        }
    } else {
        for (size_t ri = rows_.size(); ri-- > 0;) {
            Row& row = rows_[ri];
            for (int c = row.lead + 1; c < dim_; ++c) {
                if (row.v[c] == 0 || pivot_[c] < 0) continue;
                const Row& p = rows_[pivot_[c]];
                uint8_t q = uint8_t(row.v[c] >> p.lead_log2);
                if (q == 0) continue;  // already reduced below the pivot strength
                submul(row.v, q, p.v, mask_);
                if (!row.aug.empty() && !p.aug.empty()) submul(row.aug, q, p.aug, mask_);
            }
        }
    }
    normalized_ = true;
}

bool HowellBasis::equals_span(HowellBasis& other) {
    if (dim_ != other.dim_ || mbits_ != other.mbits_) return false;
    normalize();
    other.normalize();
    if (rows_.size() != other.rows_.size()) return false;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].lead != other.rows_[r].lead) return false;
        if (mbits_ == 1) {
            if (rows_[r].bits != other.rows_[r].bits) return false;
        } else {
            if (rows_[r].v != other.rows_[r].v) return false;
        }
    }
    return true;
}

std::vector<uint8_t> HowellBasis::row(size_t r) const {
    if (mbits_ == 1) return unpack(rows_[r].bits);
    return rows_[r].v;
}

HowellBasis module_closure(int dim, int mbits, std::vector<std::vector<uint8_t>> seeds,
                           const std::vector<std::vector<int32_t>>& actions) {
    HowellBasis basis(dim, mbits);
    std::deque<std::vector<uint8_t>> queue;
    for (auto& s : seeds) {
        std::vector<uint8_t> copy = s;
        if (basis.insert(std::move(copy))) queue.push_back(std::move(s));
    }
    while (!queue.empty()) {
        std::vector<uint8_t> r = std::move(queue.front());
        queue.pop_front();
        for (const auto& perm : actions) {
            std::vector<uint8_t> img(dim, 0);
            for (int i = 0; i < dim; ++i) img[perm[i]] = r[i];
            std::vector<uint8_t> copy = img;
            if (basis.insert(std::move(copy))) queue.push_back(std::move(img));
        }
    }
    return basis;
}

}  // namespace mstab
