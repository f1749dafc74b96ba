#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mstab/howell.hpp"
#include "mstab/quotient.hpp"

namespace mstab {

struct RingDesc {
    SubgroupTag::Kind group = SubgroupTag::S21;
    int level = 0;
    int mbits = 3;

    friend bool operator==(const RingDesc& a, const RingDesc& b) {
        return a.group == b.group && a.level == b.level && a.mbits == b.mbits;
    }
    friend bool operator!=(const RingDesc& a, const RingDesc& b) { return !(a == b); }
};

// Finitely supported Z/2^m combination of quotient-group elements.  The
// coefficient map is keyed by packed digit strings and never stores zeros;
// ordered iteration keeps every computation deterministic.
class GroupRingElement {
  public:
    GroupRingElement() = default;
    explicit GroupRingElement(RingDesc d) : desc_(d) {}

    static GroupRingElement unit(RingDesc d);  // e
    static GroupRingElement basis(RingDesc d, const QuotientElement& g);
    static GroupRingElement named(RingDesc d, Name n);

    const RingDesc& desc() const { return desc_; }
    const std::map<uint64_t, uint8_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    size_t support_size() const { return c_.size(); }

    void add_term(uint64_t key, int32_t coeff);
    uint8_t coeff_of(uint64_t key) const;

    friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
    GroupRingElement operator-() const;
    friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
        return x.desc_ == y.desc_ && x.c_ == y.c_;
    }

    GroupRingElement scaled(int32_t s) const;

    uint8_t augmentation() const;

    std::string to_string() const;

  private:
    RingDesc desc_;
    std::map<uint64_t, uint8_t> c_;
};

GroupRingElement gr_pow(const GroupRingElement& x, int e);

// g + w g w^{-1} + w^{-1} g w, extended linearly
GroupRingElement tr_c3(const GroupRingElement& x);

// t x t^{-1} termwise
GroupRingElement conjugate_by(const QuotientElement& t, const GroupRingElement& x);

// conjugation by pi (a lift-level automorphism of each Q_n)
GroupRingElement pi_conjugate(const GroupRingElement& x);

// e - g
GroupRingElement aug_gen(RingDesc d, const QuotientElement& g);

// Dense vector over a coset module (or over the ring itself when the space
// has trivial subgroup).
class ModuleVector {
  public:
    ModuleVector(const CosetSpace* space, int mbits)
        : space_(space), mbits_(mbits), v_(space->coset_count(), 0) {}

    const CosetSpace& space() const { return *space_; }
    int mbits() const { return mbits_; }
    uint8_t mask() const { return uint8_t((1u << mbits_) - 1); }
    size_t dim() const { return v_.size(); }
    const std::vector<uint8_t>& data() const { return v_; }
    std::vector<uint8_t>& data() { return v_; }

    bool is_zero() const;
    void add_at(int32_t coset, int32_t coeff);

    friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
    friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.v_ == b.v_;
    }

  private:
    const CosetSpace* space_;
    int mbits_;
    std::vector<uint8_t> v_;
};

ModuleVector basis_vector(const CosetSpace& space, int mbits, int32_t coset);

// left action through the coset table: (x y) v = x (y v)
ModuleVector act(const GroupRingElement& x, const ModuleVector& v);
ModuleVector act_elem(const QuotientElement& g, const ModuleVector& v);

// coefficient sum (image of the augmentation on the module)
uint8_t module_augmentation(const ModuleVector& v);

// exact linear algebra entry points (spec: howell_solve / span / member)
HowellBasis span_of(const std::vector<ModuleVector>& rows);
bool member(const ModuleVector& v, HowellBasis& span);
std::optional<std::vector<uint8_t>> howell_solve(const std::vector<ModuleVector>& columns,
                                                 const ModuleVector& target);

// ---- ideal spans ----------------------------------------------------------

// an image subgroup of the ambient quotient group, e.g. K1 or F(3) cap K1
struct SubgroupSpec {
    SubgroupTag::Kind base = SubgroupTag::K1;
    int min_filtration = 0;
};

// 2^scale_log2 * I(G_1) I(G_2) ... I(G_k); empty factor list = principal (2^s)
struct IdealTerm {
    int scale_log2 = 0;
    std::vector<SubgroupSpec> factors;
};

struct IdealSpec {
    std::vector<IdealTerm> terms;

    // J = (I F_{4/2}K^1, (I F_{3/2}K^1)(I S_2^1), (IK^1)^7, 2(IK^1)^3, 4 IK^1, 8)
    static IdealSpec script_J();
    // I = ((IK^1)^7, 2(IK^1)^3, 4 IK^1, 8)
    static IdealSpec script_I();
    // (4, IK^1)
    static IdealSpec four_IK1();
    // (2, (I S_2^1)^2)
    static IdealSpec two_IS21_sq();
    std::string to_string() const;
};

// members of an image subgroup inside the ambient enumeration
std::vector<QuotientElement> subgroup_image(const SubgroupSpec& spec, const QuotientGroup& Q);

// span of the finite-level image of the ideal acting on the cyclic module
// generated by `generator_coset` (the whole ring when the space is regular)
HowellBasis ideal_span(const IdealSpec& spec, const CosetSpace& space, int mbits,
                       int32_t generator_coset);

// x = y mod the ideal span (ring ambient: space must be the regular one)
bool congruent_mod(const GroupRingElement& x, const GroupRingElement& y, const IdealSpec& spec,
                   const CosetSpace& ring_space);

// the regular representation of Q as a coset space over the trivial subgroup
CosetSpace ring_space(std::shared_ptr<const QuotientGroup> Q);

// dense vector of a ring element in the regular space
ModuleVector to_vector(const GroupRingElement& x, const CosetSpace& ring);

}  // namespace mstab
