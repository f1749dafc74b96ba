#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mstab/stabilizer.hpp"

namespace mstab {

// Canonical representative of a coset in G/F_{n/2}G: the first n S-digits.
// Coset equality is digit-string equality (levels n < 3 rejected for the
// norm-one groups).  Keys pack digit t into bits 2t..2t+1; ascending key
// order is the canonical enumeration order.
struct QuotientElement {
    SubgroupTag::Kind group = SubgroupTag::S2;
    int level = 0;
    std::vector<F4> digits;

    uint64_t key() const {
        uint64_t k = 0;
        for (size_t t = 0; t < digits.size(); ++t) k |= uint64_t(digits[t].v) << (2 * t);
        return k;
    }
    static QuotientElement from_key(SubgroupTag::Kind g, int level, uint64_t key);

    bool is_identity() const;
    std::string digit_string() const;  // e.g. "10w" (v = w^2)

    friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
        return a.group == b.group && a.level == b.level && a.digits == b.digits;
    }
    friend bool operator!=(const QuotientElement& a, const QuotientElement& b) {
        return !(a == b);
    }
};

QuotientElement q_identity(SubgroupTag::Kind group, int level);
QuotientElement project(const OrderElement& g, SubgroupTag::Kind group, int level);
OrderElement q_lift(const QuotientElement& x, int s_precision);
QuotientElement q_mul(const QuotientElement& x, const QuotientElement& y);
QuotientElement q_inv(const QuotientElement& x);
QuotientElement q_named(Name name, SubgroupTag::Kind group, int level);

// conjugation by pi = 1+2w, computed on a lift at ambient precision
QuotientElement pi_conjugate(const QuotientElement& x);

// does `digits` extend to / lie in the finite-level image of the group?
bool quotient_member(SubgroupTag::Kind group, const std::vector<F4>& digits);

inline constexpr size_t kDefaultSizeCap = size_t{1} << 20;

// Complete enumeration of Q_n(G) in canonical (ascending key) order, or an
// arbitrary multiplication-closed subset used as a module ambient.
class QuotientGroup {
  public:
    static QuotientGroup enumerate(SubgroupTag::Kind group, int level,
                                   size_t cap = kDefaultSizeCap);
    static QuotientGroup from_keys(SubgroupTag::Kind group, int level,
                                   std::vector<uint64_t> keys);

    SubgroupTag::Kind group() const { return group_; }
    int level() const { return level_; }
    size_t size() const { return keys_.size(); }
    const std::vector<uint64_t>& keys() const { return keys_; }
    uint64_t key_at(size_t i) const { return keys_[i]; }
    QuotientElement element_at(size_t i) const;
    int32_t index_of(uint64_t key) const;  // -1 when absent
    bool contains(uint64_t key) const { return index_of(key) >= 0; }

    // left-regular action permutation: i -> index of g * element_i
    std::vector<int32_t> left_action(const QuotientElement& g) const;

    // JSON cache (versioned); bit-identical to a fresh enumeration
    std::string to_cache_json() const;
    static QuotientGroup from_cache_json(const std::string& text);

  private:
    SubgroupTag::Kind group_;
    int level_ = 0;
    std::vector<uint64_t> keys_;
    std::unordered_map<uint64_t, int32_t> index_;
};

// enumerate, consulting the MSTAB_CACHE_DIR cache when the variable is set;
// results are bit-identical with and without the cache
QuotientGroup enumerate_cached(SubgroupTag::Kind group, int level,
                               size_t cap = kDefaultSizeCap);

// BFS closure of the generated subgroup, sorted canonically
std::vector<QuotientElement> generated_subgroup(const std::vector<QuotientElement>& gens,
                                                size_t cap = kDefaultSizeCap);

// G24 = <i, w>, C6 = <i^2, w>, G24' = pi G24 pi^{-1}
enum class FiniteSubgroup { G24, C6, G24prime, Q8, Q8prime };
std::vector<QuotientElement> finite_subgroup(FiniteSubgroup h, SubgroupTag::Kind group,
                                             int level);

// Left cosets x*H of a finite subgroup inside an ambient quotient group,
// with the left action and per-generator action tables.
class CosetSpace {
  public:
    CosetSpace(std::shared_ptr<const QuotientGroup> ambient,
               std::vector<QuotientElement> subgroup,
               std::vector<QuotientElement> action_gens);

    const QuotientGroup& ambient() const { return *ambient_; }
    size_t coset_count() const { return reps_.size(); }
    size_t subgroup_order() const { return subgroup_.size(); }
    const std::vector<QuotientElement>& action_gens() const { return gens_; }
    QuotientElement coset_rep(size_t c) const;
    int32_t coset_of_element(uint64_t key) const;
    int32_t coset_of_index(int32_t elem_index) const { return elem_coset_[elem_index]; }
    int32_t identity_coset() const;

    // action through the table for a generator index, or by lifting g
    int32_t act_gen(size_t gen, int32_t coset) const { return gen_action_[gen][coset]; }
    int32_t act(const QuotientElement& g, int32_t coset) const;
    std::vector<int32_t> action_permutation(const QuotientElement& g) const;

  private:
    std::shared_ptr<const QuotientGroup> ambient_;
    std::vector<QuotientElement> subgroup_;
    std::vector<QuotientElement> gens_;
    std::vector<uint64_t> reps_;
    std::vector<int32_t> elem_coset_;
    std::vector<std::vector<int32_t>> gen_action_;
};

CosetSpace coset_space(std::shared_ptr<const QuotientGroup> ambient, FiniteSubgroup h,
                       std::vector<QuotientElement> action_gens = {});

// exhaustive search for x with x A x^{-1} = B; nullopt when no witness exists
std::optional<QuotientElement> conjugacy_search(const std::vector<QuotientElement>& A,
                                                const std::vector<QuotientElement>& B,
                                                const QuotientGroup& ambient);

}  // namespace mstab
