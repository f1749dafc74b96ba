#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mstab/group_ring.hpp"

namespace mstab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

/****************************************************************
 * Finite-level model of the duality complex
 *
 *   C3 -> C2 -> C1 -> C0 -> Z/2^m
 *
 * over Z/2^m[Q_n(S21)]: C0 on Q/G24, C1 = C2 on Q/C6, C3 on
 * Q/G24'.  d1(e1) = (e-alpha)e0; d2 = Theta * (-) after the
 * Theta construction; d3'(e3) = pi (e+i+j+k)(e-alpha^{-1})
 * pi^{-1} e2.  Composite-zero and the module-map property are
 * asserted, not assumed.  d2 o d3' = 0 is deliberately not
 * asserted: d3' lives in the primed complex, related to the
 * unprimed one by isomorphisms that are never constructed.
 ****************************************************************/
class DualityComplex {
  public:
    DualityComplex(int level, int mbits, size_t cap = kDefaultSizeCap);

    int level() const { return level_; }
    int mbits() const { return mbits_; }
    RingDesc desc() const { return {SubgroupTag::S21, level_, mbits_}; }

    const QuotientGroup& quotient() const { return *Q_; }
    const CosetSpace& ring_rep() const { return *ring_; }
    const CosetSpace& space0() const { return *C0_; }
    const CosetSpace& space1() const { return *C1_; }  // also C2
    const CosetSpace& space3() const { return *C3_; }

    GroupRingElement named(Name n) const { return GroupRingElement::named(desc(), n); }

    // differentials on basis cosets
    ModuleVector d1_basis(int32_t coset) const;
    ModuleVector d1(const ModuleVector& v) const;
    ModuleVector d2_basis(int32_t coset);
    ModuleVector d3p_basis(int32_t coset) const;
    GroupRingElement d3p_coefficient() const;

    // epsilon on C0
    uint8_t augment(const ModuleVector& v) const { return module_augmentation(v); }

    // Theta = (1/3) tr_C3(Theta2 - h); asserts the three defining conditions
    const GroupRingElement& theta();
    GroupRingElement theta_two() const;

    // h with h (e-alpha) e0 = (e-g) e0.  Default: canonical Howell solution
    // (h = 0 whenever (e-g)e0 = 0, which holds for g in F_{8/2}K^1 at every
    // level <= 8).  Certified: the telescoping construction through the
    // filtration decomposition, which lies in script_I by construction.
    GroupRingElement solve_h(const QuotientElement& g, bool certified = false);

    struct Decomposition {
        GroupRingElement h0, h1, h2;
    };
    // x = h0 (e-a^p0) + h1 (e-a_i^p1) + h2 (e-a_j^p1) over Z/2^m[F_{k/2}K^1]
    Decomposition decompose_aug_ideal(const GroupRingElement& x, int k);

    // span{gamma (e-alpha) e0} = ker(eps) on C0
    bool aug_ideal_generation_check();

    std::vector<CheckResult> theta_condition_checks();
    std::vector<CheckResult> verify_theta_congruences();
    std::vector<CheckResult> differential_structure_checks();

  private:
    ModuleVector theta_e1();

    int level_;
    int mbits_;
    std::shared_ptr<const QuotientGroup> Q_;
    std::unique_ptr<CosetSpace> ring_;
    std::unique_ptr<CosetSpace> C0_, C1_, C3_;
    std::optional<GroupRingElement> theta_;
    std::optional<ModuleVector> theta_e1_;
};

// the f1..f4 and scaling identities in Z/2^m[G24/C6], built from the
// abstract 24-element group (the image of <i, omega> at level 3); m >= 3
std::vector<CheckResult> n1_identities(int mbits);

// dual-basis identities: the coset decomposition, its (e-alpha) variant,
// and invertibility of the dual pairing on C0
std::vector<CheckResult> dual_identity_checks(int level, int mbits);

}  // namespace mstab
