#include "mstab/group_ring.hpp"

#include <algorithm>
#include <cassert>

namespace mstab {

namespace {
uint8_t mask_of(int mbits) { return uint8_t((1u << mbits) - 1); }
}

GroupRingElement GroupRingElement::unit(RingDesc d) {
    GroupRingElement x(d);
    x.add_term(q_identity(d.group, d.level).key(), 1);
    return x;
}

GroupRingElement GroupRingElement::basis(RingDesc d, const QuotientElement& g) {
    if (g.group != d.group || g.level != d.level)
        throw Error("GroupRingElement::basis: descriptor mismatch");
    GroupRingElement x(d);
    x.add_term(g.key(), 1);
    return x;
}

GroupRingElement GroupRingElement::named(RingDesc d, Name n) {
    return basis(d, q_named(n, d.group, d.level));
}

void GroupRingElement::add_term(uint64_t key, int32_t coeff) {
    uint8_t m = mask_of(desc_.mbits);
    uint8_t c = uint8_t(coeff & m);
    if (c == 0) return;
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_[key] = c;
    } else {
        uint8_t s = uint8_t((it->second + c) & m);
        if (s == 0)
            c_.erase(it);
        else
            it->second = s;
    }
}

uint8_t GroupRingElement::coeff_of(uint64_t key) const {
    auto it = c_.find(key);
    return it == c_.end() ? 0 : it->second;
}

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    if (x.desc_ != y.desc_) throw Error("gr_add: descriptor mismatch");
    GroupRingElement out = x;
    for (auto& [k, c] : y.c_) out.add_term(k, c);
    return out;
}

GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
    if (x.desc_ != y.desc_) throw Error("gr_sub: descriptor mismatch");
    GroupRingElement out = x;
    for (auto& [k, c] : y.c_) out.add_term(k, -int32_t(c));
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(desc_);
    for (auto& [k, c] : c_) out.add_term(k, -int32_t(c));
    return out;
}

GroupRingElement GroupRingElement::scaled(int32_t s) const {
    GroupRingElement out(desc_);
    for (auto& [k, c] : c_) out.add_term(k, s * int32_t(c));
    return out;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    if (x.desc_ != y.desc_) throw Error("gr_mul: descriptor mismatch");
    GroupRingElement out(x.desc_);
    for (auto& [kx, cx] : x.c_) {
        QuotientElement gx = QuotientElement::from_key(x.desc_.group, x.desc_.level, kx);
        for (auto& [ky, cy] : y.c_) {
            QuotientElement gy = QuotientElement::from_key(y.desc_.group, y.desc_.level, ky);
            out.add_term(q_mul(gx, gy).key(), int32_t(cx) * int32_t(cy));
        }
    }
    return out;
}

uint8_t GroupRingElement::augmentation() const {
    uint32_t s = 0;
    for (auto& [k, c] : c_) s += c;
    return uint8_t(s & mask_of(desc_.mbits));
}

GroupRingElement gr_pow(const GroupRingElement& x, int e) {
    GroupRingElement acc = GroupRingElement::unit(x.desc());
    for (int t = 0; t < e; ++t) acc = acc * x;
    return acc;
}

GroupRingElement tr_c3(const GroupRingElement& x) {
    RingDesc d = x.desc();
    QuotientElement w = q_named(Name::omega, d.group, d.level);
    QuotientElement w2 = q_mul(w, w);
    GroupRingElement out(d);
    for (auto& [k, c] : x.coeffs()) {
        QuotientElement g = QuotientElement::from_key(d.group, d.level, k);
        out.add_term(k, c);
        out.add_term(q_mul(q_mul(w, g), w2).key(), c);
        out.add_term(q_mul(q_mul(w2, g), w).key(), c);
    }
    return out;
}

GroupRingElement conjugate_by(const QuotientElement& t, const GroupRingElement& x) {
    RingDesc d = x.desc();
    QuotientElement ti = q_inv(t);
    GroupRingElement out(d);
    for (auto& [k, c] : x.coeffs()) {
        QuotientElement g = QuotientElement::from_key(d.group, d.level, k);
        out.add_term(q_mul(q_mul(t, g), ti).key(), c);
    }
    return out;
}

GroupRingElement pi_conjugate(const GroupRingElement& x) {
    RingDesc d = x.desc();
    GroupRingElement out(d);
    for (auto& [k, c] : x.coeffs()) {
        QuotientElement g = QuotientElement::from_key(d.group, d.level, k);
        out.add_term(mstab::pi_conjugate(g).key(), c);
    }
    return out;
}

GroupRingElement aug_gen(RingDesc d, const QuotientElement& g) {
    return GroupRingElement::unit(d) - GroupRingElement::basis(d, g);
}

std::string GroupRingElement::to_string() const {
    std::string s;
    for (auto& [k, c] : c_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(int(c)) + "*[" +
             QuotientElement::from_key(desc_.group, desc_.level, k).digit_string() + "]";
    }
    return s.empty() ? "0" : s;
}

// ---- module vectors --------------------------------------------------------

bool ModuleVector::is_zero() const {
    for (uint8_t x : v_)
        if (x) return false;
    return true;
}

void ModuleVector::add_at(int32_t coset, int32_t coeff) {
    v_[coset] = uint8_t((v_[coset] + coeff) & mask());
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    for (size_t i = 0; i < out.v_.size(); ++i)
        out.v_[i] = uint8_t((out.v_[i] + b.v_[i]) & out.mask());
    return out;
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    for (size_t i = 0; i < out.v_.size(); ++i)
        out.v_[i] = uint8_t((out.v_[i] - b.v_[i]) & out.mask());
    return out;
}

ModuleVector basis_vector(const CosetSpace& space, int mbits, int32_t coset) {
    ModuleVector v(&space, mbits);
    v.add_at(coset, 1);
    return v;
}

ModuleVector act_elem(const QuotientElement& g, const ModuleVector& v) {
    const CosetSpace& sp = v.space();
    ModuleVector out(&sp, v.mbits());
    for (size_t c = 0; c < v.dim(); ++c) {
        if (v.data()[c] == 0) continue;
        out.add_at(sp.act(g, int32_t(c)), v.data()[c]);
    }
    return out;
}

ModuleVector act(const GroupRingElement& x, const ModuleVector& v) {
    const CosetSpace& sp = v.space();
    if (x.desc().group != sp.ambient().group() || x.desc().level != sp.ambient().level() ||
        x.desc().mbits != v.mbits())
        throw Error("act: descriptor mismatch");
    ModuleVector out(&sp, v.mbits());
    for (auto& [k, c] : x.coeffs()) {
        QuotientElement g = QuotientElement::from_key(x.desc().group, x.desc().level, k);
        for (size_t idx = 0; idx < v.dim(); ++idx) {
            if (v.data()[idx] == 0) continue;
            out.add_at(sp.act(g, int32_t(idx)), int32_t(c) * int32_t(v.data()[idx]));
        }
    }
    return out;
}

uint8_t module_augmentation(const ModuleVector& v) {
    uint32_t s = 0;
    for (uint8_t x : v.data()) s += x;
    return uint8_t(s & v.mask());
}

HowellBasis span_of(const std::vector<ModuleVector>& rows) {
    if (rows.empty()) throw Error("span_of: empty input");
    HowellBasis basis(int(rows[0].dim()), rows[0].mbits());
    for (const auto& r : rows) basis.insert(r.data());
    return basis;
}

bool member(const ModuleVector& v, HowellBasis& span) { return span.member(v.data()); }

std::optional<std::vector<uint8_t>> howell_solve(const std::vector<ModuleVector>& columns,
                                                 const ModuleVector& target) {
    HowellBasis basis(int(target.dim()), target.mbits(), int(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j) {
        std::vector<uint8_t> aug(columns.size(), 0);
        aug[j] = 1;
        basis.insert(columns[j].data(), std::move(aug));
    }
    return basis.solve(target.data());
}

// ---- ideal spans -----------------------------------------------------------

IdealSpec IdealSpec::script_I() {
    IdealSpec s;
    SubgroupSpec K1{SubgroupTag::K1, 0};
    s.terms.push_back({0, std::vector<SubgroupSpec>(7, K1)});
    s.terms.push_back({1, std::vector<SubgroupSpec>(3, K1)});
    s.terms.push_back({2, {K1}});
    s.terms.push_back({3, {}});
    return s;
}

IdealSpec IdealSpec::script_J() {
    IdealSpec s;
    s.terms.push_back({0, {SubgroupSpec{SubgroupTag::K1, 4}}});
    s.terms.push_back({0, {SubgroupSpec{SubgroupTag::K1, 3}, SubgroupSpec{SubgroupTag::S21, 0}}});
    IdealSpec i = script_I();
    for (auto& t : i.terms) s.terms.push_back(t);
    return s;
}

IdealSpec IdealSpec::four_IK1() {
    IdealSpec s;
    s.terms.push_back({2, {}});
    s.terms.push_back({0, {SubgroupSpec{SubgroupTag::K1, 0}}});
    return s;
}

IdealSpec IdealSpec::two_IS21_sq() {
    IdealSpec s;
    s.terms.push_back({1, {}});
    SubgroupSpec S21{SubgroupTag::S21, 0};
    s.terms.push_back({0, {S21, S21}});
    return s;
}

std::string IdealSpec::to_string() const {
    std::string out = "(";
    for (size_t t = 0; t < terms.size(); ++t) {
        if (t) out += ", ";
        const IdealTerm& term = terms[t];
        if (term.scale_log2 > 0) out += std::to_string(1 << term.scale_log2);
        if (term.factors.empty() && term.scale_log2 == 0) out += "1";
        for (const auto& f : term.factors) {
            out += "I";
            if (f.min_filtration > 0) out += "F" + std::to_string(f.min_filtration);
            out += SubgroupTag{f.base, 0}.to_string();
        }
    }
    return out + ")";
}

std::vector<QuotientElement> subgroup_image(const SubgroupSpec& spec, const QuotientGroup& Q) {
    std::vector<QuotientElement> out;
    for (size_t i = 0; i < Q.size(); ++i) {
        QuotientElement g = Q.element_at(i);
        // filtration prefix: digits below min_filtration equal the identity's
        bool ok = true;
        for (int t = 0; t < spec.min_filtration && t < g.level; ++t) {
            F4 want = (t == 0) ? F4::one() : F4::zero();
            if (g.digits[t] != want) {
                ok = false;
                break;
            }
        }
        if (ok && quotient_member(spec.base, g.digits)) out.push_back(g);
    }
    return out;
}

namespace {

QuotientElement q_pow(const QuotientElement& b, int e) {
    QuotientElement acc = q_identity(b.group, b.level);
    for (int t = 0; t < e; ++t) acc = q_mul(acc, b);
    return acc;
}

// small generating set of the image subgroup, falling back to the member list
std::vector<QuotientElement> image_generators(const SubgroupSpec& spec, const QuotientGroup& Q,
                                              const std::vector<QuotientElement>& members) {
    SubgroupTag::Kind g = Q.group();
    int n = Q.level();
    std::vector<QuotientElement> cand;
    if (spec.base == SubgroupTag::K1 && spec.min_filtration == 0) {
        cand = {q_named(Name::alpha, g, n), q_named(Name::alpha_i, g, n),
                q_named(Name::alpha_j, g, n)};
    } else if (spec.base == SubgroupTag::S21 && g == SubgroupTag::S21 &&
               spec.min_filtration == 0) {
        cand = {q_named(Name::alpha, g, n), q_named(Name::i, g, n), q_named(Name::omega, g, n)};
    } else if (spec.base == SubgroupTag::K1 && spec.min_filtration >= 2) {
        // the generator pattern of the filtration pieces of K1: for level
        // k = 2m take a^(2^(m-1)), a_i^(2^(m-1)), a_j^(2^(m-1)); for
        // k = 2m+1 take a^(2^m) with the same a_i, a_j powers
        int k = spec.min_filtration;
        int m = k / 2;
        int pa = (k % 2 == 0) ? (1 << (m - 1)) : (1 << m);
        int pt = 1 << (m - 1);
        cand = {q_pow(q_named(Name::alpha, g, n), pa),
                q_pow(q_named(Name::alpha_i, g, n), pt),
                q_pow(q_named(Name::alpha_j, g, n), pt)};
    }
    if (!cand.empty() && generated_subgroup(cand).size() == members.size()) return cand;
    return members;
}

std::vector<uint8_t> perm_apply(const std::vector<int32_t>& perm,
                                const std::vector<uint8_t>& v) {
    std::vector<uint8_t> out(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
    return out;
}

bool is_whole_group(const SubgroupSpec& f, const QuotientGroup& Q) {
    return f.min_filtration == 0 && f.base == Q.group();
}

// conjugation-stability of the member set under the ambient generators; the
// two-sidedness of the product rounds rests on it, so it is asserted, not
// assumed
void assert_normal(const std::vector<QuotientElement>& members,
                   const std::vector<QuotientElement>& ambient_gens) {
    std::unordered_map<uint64_t, bool> keys;
    for (const auto& h : members) keys[h.key()] = true;
    for (const auto& g : ambient_gens) {
        QuotientElement gi = q_inv(g);
        for (const auto& h : members) {
            if (!keys.count(q_mul(q_mul(g, h), gi).key()))
                throw Error("ideal_span: image subgroup is not normal; the product "
                            "evaluation does not apply");
        }
    }
}

}  // namespace

CosetSpace ring_space(std::shared_ptr<const QuotientGroup> Q) {
    SubgroupTag::Kind g = Q->group();
    int n = Q->level();
    std::vector<QuotientElement> trivial{q_identity(g, n)};
    std::vector<QuotientElement> gens{q_named(Name::alpha, g, n), q_named(Name::i, g, n),
                                      q_named(Name::omega, g, n)};
    if (g == SubgroupTag::S2) gens.push_back(q_named(Name::pi, g, n));
    return CosetSpace(std::move(Q), std::move(trivial), std::move(gens));
}

ModuleVector to_vector(const GroupRingElement& x, const CosetSpace& ring) {
    ModuleVector v(&ring, x.desc().mbits);
    for (auto& [k, c] : x.coeffs()) {
        int32_t idx = ring.coset_of_element(k);
        if (idx < 0) throw Error("to_vector: support element outside ambient");
        v.add_at(idx, c);
    }
    return v;
}

namespace {

// Z[Q] I(H) on the regular representation has an explicit basis: the
// differences within each left coset xH.  No normality is needed here.
HowellBasis coset_difference_basis(const std::vector<QuotientElement>& members,
                                   const CosetSpace& space, int mbits) {
    int dim = int(space.coset_count());
    uint8_t mask = mask_of(mbits);
    HowellBasis out(dim, mbits);
    if (members.size() <= 1) return out;  // trivial subgroup: zero ideal
    const QuotientGroup& Q = space.ambient();
    std::vector<char> seen(dim, 0);
    for (int idx = 0; idx < dim; ++idx) {
        if (seen[idx]) continue;
        QuotientElement x = Q.element_at(idx);
        std::vector<int32_t> coset;
        coset.reserve(members.size());
        for (const auto& h : members) {
            int32_t t = Q.index_of(q_mul(x, h).key());
            seen[t] = 1;
            coset.push_back(t);
        }
        std::sort(coset.begin(), coset.end());
        for (size_t t = 0; t + 1 < coset.size(); ++t) {
            std::vector<uint8_t> row(dim, 0);
            row[coset[t]] = 1;
            row[coset[t + 1]] = uint8_t(mask);  // -1
            out.insert(std::move(row));
        }
    }
    return out;
}

// right-multiplication round M <- M * I(H), valid when M is two-sided
HowellBasis right_ideal_round(const HowellBasis& M, const std::vector<QuotientElement>& gens,
                              const QuotientGroup& Q, int mbits) {
    int dim = M.dim();
    uint8_t mask = mask_of(mbits);
    std::vector<std::vector<int32_t>> rperms;
    rperms.reserve(gens.size());
    for (const auto& s : gens) {
        std::vector<int32_t> perm(dim);
        for (int i = 0; i < dim; ++i)
            perm[i] = Q.index_of(q_mul(Q.element_at(i), s).key());
        rperms.push_back(std::move(perm));
    }
    HowellBasis out(dim, mbits);
    for (size_t r = 0; r < M.row_count(); ++r) {
        std::vector<uint8_t> b = M.row(r);
        for (const auto& perm : rperms) {
            std::vector<uint8_t> row = b;
            std::vector<uint8_t> bs = perm_apply(perm, b);
            for (int c = 0; c < dim; ++c) row[c] = uint8_t((row[c] - bs[c]) & mask);
            out.insert(std::move(row));
        }
    }
    return out;
}

}  // namespace

HowellBasis ideal_span(const IdealSpec& spec, const CosetSpace& space, int mbits,
                       int32_t generator_coset) {
    int dim = int(space.coset_count());
    const QuotientGroup& Q = space.ambient();
    uint8_t mask = mask_of(mbits);
    bool regular = (space.subgroup_order() == 1);

    std::vector<std::vector<int32_t>> gen_perms;
    for (size_t g = 0; g < space.action_gens().size(); ++g)
        gen_perms.push_back(space.action_permutation(space.action_gens()[g]));

    HowellBasis total(dim, mbits);

    for (const IdealTerm& term : spec.terms) {
        uint8_t sc = uint8_t((1u << term.scale_log2) & mask);
        if (sc == 0) continue;  // 2^s = 0 at this modulus

        if (term.factors.empty()) {
            // principal (2^s): the scaled module itself
            for (int c = 0; c < dim; ++c) {
                std::vector<uint8_t> row(dim, 0);
                row[c] = sc;
                total.insert(std::move(row));
            }
            continue;
        }

        HowellBasis cur(dim, mbits);
        if (regular) {
            // left-to-right: M = Z[Q] I(H_0), then right rounds M <- M I(H_t).
            // Each intermediate is two-sided because every factor subgroup is
            // normal (asserted), so the rounds need no closure.
            for (size_t fi = 0; fi < term.factors.size(); ++fi) {
                const SubgroupSpec& f = term.factors[fi];
                std::vector<QuotientElement> members = subgroup_image(f, Q);
                if (!is_whole_group(f, Q) && term.factors.size() > 1)
                    assert_normal(members, space.action_gens());
                if (fi == 0) {
                    cur = coset_difference_basis(members, space, mbits);
                } else {
                    cur = right_ideal_round(cur, image_generators(f, Q, members), Q, mbits);
                }
            }
        } else {
            // cyclic coset module: evaluate right to left with left closures
            for (size_t fi = term.factors.size(); fi-- > 0;) {
                const SubgroupSpec& f = term.factors[fi];
                bool first = (fi + 1 == term.factors.size());
                if (first && is_whole_group(f, Q)) {
                    // aug ideal of the whole group on a cyclic module is the
                    // full augmentation kernel: consecutive differences
                    HowellBasis ker(dim, mbits);
                    for (int c = 0; c + 1 < dim; ++c) {
                        std::vector<uint8_t> row(dim, 0);
                        row[c] = 1;
                        row[c + 1] = uint8_t(mask);
                        ker.insert(std::move(row));
                    }
                    cur = std::move(ker);
                    continue;
                }
                std::vector<QuotientElement> members = subgroup_image(f, Q);
                std::vector<QuotientElement> gens = image_generators(f, Q, members);
                std::vector<std::vector<uint8_t>> seeds;
                if (first) {
                    for (const auto& g : gens) {
                        std::vector<uint8_t> row(dim, 0);
                        row[generator_coset] = 1;
                        int32_t tgt = space.act(g, generator_coset);
                        row[tgt] = uint8_t((row[tgt] - 1) & mask);
                        seeds.push_back(std::move(row));
                    }
                } else {
                    std::vector<std::vector<int32_t>> perms;
                    perms.reserve(gens.size());
                    for (const auto& g : gens) perms.push_back(space.action_permutation(g));
                    for (size_t r = 0; r < cur.row_count(); ++r) {
                        std::vector<uint8_t> b = cur.row(r);
                        for (const auto& perm : perms) {
                            std::vector<uint8_t> row = b;
                            std::vector<uint8_t> gb = perm_apply(perm, b);
                            for (int c = 0; c < dim; ++c)
                                row[c] = uint8_t((row[c] - gb[c]) & mask);
                            seeds.push_back(std::move(row));
                        }
                    }
                }
                cur = module_closure(dim, mbits, std::move(seeds), gen_perms);
            }
        }
        if (term.scale_log2 > 0) {
            HowellBasis scaled(dim, mbits);
            for (size_t r = 0; r < cur.row_count(); ++r) {
                std::vector<uint8_t> row = cur.row(r);
                for (auto& x : row) x = uint8_t((x * sc) & mask);
                scaled.insert(std::move(row));
            }
            cur = std::move(scaled);
        }
        for (size_t r = 0; r < cur.row_count(); ++r) total.insert(cur.row(r));
    }
    return total;
}

bool congruent_mod(const GroupRingElement& x, const GroupRingElement& y, const IdealSpec& spec,
                   const CosetSpace& ring) {
    HowellBasis span = ideal_span(spec, ring, x.desc().mbits, ring.identity_coset());
    ModuleVector diff = to_vector(x - y, ring);
    return span.member(diff.data());
}

}  // namespace mstab
