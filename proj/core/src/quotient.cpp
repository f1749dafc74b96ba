#include "mstab/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace mstab {

namespace {

constexpr int kMaxLevel = 31;

void check_level(SubgroupTag::Kind group, int level) {
    if (level < 1 || level > kMaxLevel) throw Error("quotient level out of range");
    if ((group == SubgroupTag::S21 || group == SubgroupTag::K1) && level < 3)
        throw LevelTooSmall("quotient level must be >= 3 for S21/K1");
}

int lift_precision(int level) { return 2 * ((level + 1) / 2); }

const char* kind_string(SubgroupTag::Kind k) {
    switch (k) {
        case SubgroupTag::S2: return "S2";
        case SubgroupTag::S21: return "S21";
        case SubgroupTag::K: return "K";
        case SubgroupTag::K1: return "K1";
    }
    return "?";
}

SubgroupTag::Kind kind_from_string(const std::string& s) {
    if (s == "S2") return SubgroupTag::S2;
    if (s == "S21") return SubgroupTag::S21;
    if (s == "K") return SubgroupTag::K;
    if (s == "K1") return SubgroupTag::K1;
    throw Error("unknown group kind: " + s);
}

// det of the zero-padded lift, reduced mod 2^ceil(n/2); determined by the digits
bool det_is_pm1(const std::vector<F4>& digits) {
    int n = int(digits.size());
    int p = (n + 1) / 2;
    OrderElement g = o_from_digits(digits, lift_precision(n));
    WittNumber d = g.det().truncated(p);
    WittNumber one(1, 0, p);
    return d == one || d == -one;
}

}  // namespace

QuotientElement QuotientElement::from_key(SubgroupTag::Kind g, int level, uint64_t key) {
    QuotientElement q;
    q.group = g;
    q.level = level;
    q.digits.resize(level);
    for (int t = 0; t < level; ++t) q.digits[t] = F4(uint8_t((key >> (2 * t)) & 3));
    return q;
}

bool QuotientElement::is_identity() const {
    if (digits.empty() || digits[0] != F4::one()) return false;
    for (size_t t = 1; t < digits.size(); ++t)
        if (!digits[t].is_zero()) return false;
    return true;
}

std::string QuotientElement::digit_string() const {
    std::string s;
    for (F4 d : digits) s += d.letter();
    return s;
}

QuotientElement q_identity(SubgroupTag::Kind group, int level) {
    check_level(group, level);
    QuotientElement q;
    q.group = group;
    q.level = level;
    q.digits.assign(level, F4::zero());
    q.digits[0] = F4::one();
    return q;
}

bool quotient_member(SubgroupTag::Kind group, const std::vector<F4>& digits) {
    int n = int(digits.size());
    if (n < 1 || digits[0].is_zero()) return false;
    switch (group) {
        case SubgroupTag::S2:
            return true;
        case SubgroupTag::S21:
            return det_is_pm1(digits);
        case SubgroupTag::K:
        case SubgroupTag::K1: {
            if (digits[0] != F4::one()) return false;
            if (n >= 2 && !digits[1].is_zero()) return false;
            if (n >= 3 && !(digits[2].is_zero() || digits[2] == F4::w())) return false;
            if (group == SubgroupTag::K1) return det_is_pm1(digits);
            return true;
        }
    }
    return false;
}

QuotientElement project(const OrderElement& g, SubgroupTag::Kind group, int level) {
    check_level(group, level);
    if (g.s_precision() < level)
        throw InsufficientPrecision("project: element precision below quotient level");
    SubgroupTag tag{group, 0};
    if (!in_subgroup(g, tag))
        throw NotInSubgroup("project: element not in " + tag.to_string());
    QuotientElement q;
    q.group = group;
    q.level = level;
    q.digits = s_digits(g, level);
    return q;
}

OrderElement q_lift(const QuotientElement& x, int s_precision) {
    if (s_precision < x.level) s_precision = lift_precision(x.level);
    return o_from_digits(x.digits, s_precision);
}

QuotientElement q_mul(const QuotientElement& x, const QuotientElement& y) {
    if (x.group != y.group || x.level != y.level)
        throw Error("q_mul: descriptor mismatch");
    int N = lift_precision(x.level);
    OrderElement g = q_lift(x, N) * q_lift(y, N);
    QuotientElement out;
    out.group = x.group;
    out.level = x.level;
    out.digits = s_digits(g, x.level);
    return out;
}

QuotientElement q_inv(const QuotientElement& x) {
    int N = lift_precision(x.level);
    OrderElement g = q_lift(x, N).inverse();
    QuotientElement out;
    out.group = x.group;
    out.level = x.level;
    out.digits = s_digits(g, x.level);
    return out;
}

QuotientElement q_named(Name name, SubgroupTag::Kind group, int level) {
    return project(named_element(name, lift_precision(level)), group, level);
}

QuotientElement pi_conjugate(const QuotientElement& x) {
    int N = lift_precision(x.level);
    OrderElement pi = named_element(Name::pi, N);
    OrderElement g = pi * q_lift(x, N) * pi.inverse();
    QuotientElement out;
    out.group = x.group;
    out.level = x.level;
    out.digits = s_digits(g, x.level);
    return out;
}

QuotientGroup QuotientGroup::enumerate(SubgroupTag::Kind group, int level, size_t cap) {
    check_level(group, level);
    // extend level by level; a valid string truncates to a valid string
    std::vector<std::vector<F4>> cur;
    for (F4 d : {F4::one(), F4::w(), F4::w2()})
        if (quotient_member(group, {d})) cur.push_back({d});
    for (int n = 2; n <= level; ++n) {
        std::vector<std::vector<F4>> nxt;
        nxt.reserve(cur.size() * 4);
        for (const auto& s : cur) {
            for (F4 d : f4_all) {
                std::vector<F4> cand = s;
                cand.push_back(d);
                if (quotient_member(group, cand)) nxt.push_back(std::move(cand));
            }
        }
        cur = std::move(nxt);
        if (cur.size() > cap)
            throw SizeCapExceeded("enumerate: quotient larger than cap at level " +
                                  std::to_string(n));
    }
    std::vector<uint64_t> keys;
    keys.reserve(cur.size());
    for (const auto& s : cur) {
        QuotientElement q;
        q.group = group;
        q.level = level;
        q.digits = s;
        keys.push_back(q.key());
    }
    std::sort(keys.begin(), keys.end());
    return from_keys(group, level, std::move(keys));
}

QuotientGroup QuotientGroup::from_keys(SubgroupTag::Kind group, int level,
                                       std::vector<uint64_t> keys) {
    QuotientGroup g;
    g.group_ = group;
    g.level_ = level;
    std::sort(keys.begin(), keys.end());
    g.keys_ = std::move(keys);
    g.index_.reserve(g.keys_.size() * 2);
    for (size_t i = 0; i < g.keys_.size(); ++i) g.index_[g.keys_[i]] = int32_t(i);
    return g;
}

QuotientElement QuotientGroup::element_at(size_t i) const {
    return QuotientElement::from_key(group_, level_, keys_[i]);
}

int32_t QuotientGroup::index_of(uint64_t key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int32_t> QuotientGroup::left_action(const QuotientElement& g) const {
    std::vector<int32_t> perm(size());
    for (size_t i = 0; i < size(); ++i) {
        QuotientElement p = q_mul(g, element_at(i));
        int32_t idx = index_of(p.key());
        if (idx < 0) throw Error("left_action: product escaped the element set");
        perm[i] = idx;
    }
    return perm;
}

std::string QuotientGroup::to_cache_json() const {
    nlohmann::json j;
    j["format_version"] = 1;
    j["group"] = kind_string(group_);
    j["level"] = level_;
    std::vector<std::string> digs;
    digs.reserve(size());
    for (size_t i = 0; i < size(); ++i) digs.push_back(element_at(i).digit_string());
    j["digits"] = digs;
    nlohmann::json tables;
    for (Name nm : {Name::alpha, Name::i, Name::omega, Name::pi}) {
        try {
            QuotientElement g = q_named(nm, group_, level_);
            if (index_of(g.key()) < 0) continue;
            tables[name_string(nm)] = left_action(g);
        } catch (const NotInSubgroup&) {
            continue;
        }
    }
    j["tables"] = tables;
    return j.dump();
}

QuotientGroup QuotientGroup::from_cache_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("format_version").get<int>() != 1)
        throw Error("quotient cache: unsupported format_version");
    SubgroupTag::Kind group = kind_from_string(j.at("group").get<std::string>());
    int level = j.at("level").get<int>();
    std::vector<uint64_t> keys;
    for (const auto& s : j.at("digits")) {
        std::string ds = s.get<std::string>();
        if (int(ds.size()) != level) throw Error("quotient cache: bad digit string");
        QuotientElement q;
        q.group = group;
        q.level = level;
        for (char c : ds) {
            size_t v = std::string("01wv").find(c);
            if (v == std::string::npos) throw Error("quotient cache: bad digit char");
            q.digits.push_back(F4(uint8_t(v)));
        }
        keys.push_back(q.key());
    }
    return from_keys(group, level, std::move(keys));
}

QuotientGroup enumerate_cached(SubgroupTag::Kind group, int level, size_t cap) {
    const char* dir = std::getenv("MSTAB_CACHE_DIR");
    if (!dir || !*dir) return QuotientGroup::enumerate(group, level, cap);
    std::string path = std::string(dir) + "/" + kind_string(group) + "_" +
                       std::to_string(level) + ".json";
    try {
        std::ifstream in(path);
        if (in) {
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            QuotientGroup cached = QuotientGroup::from_cache_json(text);
            if (cached.group() == group && cached.level() == level) return cached;
        }
    } catch (...) {
        // unreadable cache entries are regenerated; the cache is an optimization only
    }
    QuotientGroup fresh = QuotientGroup::enumerate(group, level, cap);
    std::ofstream out(path);
    if (out) out << fresh.to_cache_json();
    return fresh;
}

std::vector<QuotientElement> generated_subgroup(const std::vector<QuotientElement>& gens,
                                                size_t cap) {
    if (gens.empty()) throw Error("generated_subgroup: no generators");
    for (const auto& g : gens)
        if (g.group != gens[0].group || g.level != gens[0].level)
            throw Error("generated_subgroup: descriptor mismatch");
    QuotientElement id = q_identity(gens[0].group, gens[0].level);
    std::unordered_set<uint64_t> seen{id.key()};
    std::deque<QuotientElement> queue{id};
    std::vector<QuotientElement> out{id};
    while (!queue.empty()) {
        QuotientElement x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            QuotientElement y = q_mul(x, g);
            if (seen.insert(y.key()).second) {
                if (seen.size() > cap) throw SizeCapExceeded("generated_subgroup: cap");
                out.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QuotientElement& a, const QuotientElement& b) {
        return a.key() < b.key();
    });
    return out;
}

std::vector<QuotientElement> finite_subgroup(FiniteSubgroup h, SubgroupTag::Kind group,
                                             int level) {
    auto named = [&](Name n) { return q_named(n, group, level); };
    switch (h) {
        case FiniteSubgroup::G24:
            return generated_subgroup({named(Name::i), named(Name::omega)});
        case FiniteSubgroup::C6: {
            QuotientElement i2 = q_mul(named(Name::i), named(Name::i));
            return generated_subgroup({i2, named(Name::omega)});
        }
        case FiniteSubgroup::G24prime:
            return generated_subgroup(
                {pi_conjugate(named(Name::i)), pi_conjugate(named(Name::omega))});
        case FiniteSubgroup::Q8:
            return generated_subgroup({named(Name::i), named(Name::j)});
        case FiniteSubgroup::Q8prime:
            return generated_subgroup(
                {pi_conjugate(named(Name::i)), pi_conjugate(named(Name::j))});
    }
    throw Error("finite_subgroup: unreachable");
}

CosetSpace::CosetSpace(std::shared_ptr<const QuotientGroup> ambient,
                       std::vector<QuotientElement> subgroup,
                       std::vector<QuotientElement> action_gens)
    : ambient_(std::move(ambient)), subgroup_(std::move(subgroup)), gens_(std::move(action_gens)) {
    const QuotientGroup& Q = *ambient_;
    elem_coset_.assign(Q.size(), -1);
    for (size_t i = 0; i < Q.size(); ++i) {
        if (elem_coset_[i] >= 0) continue;
        int32_t c = int32_t(reps_.size());
        reps_.push_back(Q.key_at(i));
        QuotientElement x = Q.element_at(i);
        for (const auto& h : subgroup_) {
            QuotientElement xh = q_mul(x, h);
            int32_t idx = Q.index_of(xh.key());
            if (idx < 0) throw Error("coset_space: subgroup escapes ambient set");
            if (elem_coset_[idx] >= 0 && elem_coset_[idx] != c)
                throw Error("coset_space: cosets do not partition (subgroup not closed?)");
            elem_coset_[idx] = c;
        }
    }
    if (Q.size() != reps_.size() * subgroup_.size())
        throw Error("coset_space: |ambient| != |H| * #cosets");
    gen_action_.reserve(gens_.size());
    for (const auto& g : gens_) gen_action_.push_back(action_permutation(g));
}

QuotientElement CosetSpace::coset_rep(size_t c) const {
    return QuotientElement::from_key(ambient_->group(), ambient_->level(), reps_[c]);
}

int32_t CosetSpace::coset_of_element(uint64_t key) const {
    int32_t idx = ambient_->index_of(key);
    return idx < 0 ? -1 : elem_coset_[idx];
}

int32_t CosetSpace::identity_coset() const {
    QuotientElement id = q_identity(ambient_->group(), ambient_->level());
    int32_t c = coset_of_element(id.key());
    assert(c >= 0);
    return c;
}

int32_t CosetSpace::act(const QuotientElement& g, int32_t coset) const {
    QuotientElement p = q_mul(g, coset_rep(coset));
    int32_t c = coset_of_element(p.key());
    if (c < 0) throw Error("CosetSpace::act: product escaped ambient set");
    return c;
}

std::vector<int32_t> CosetSpace::action_permutation(const QuotientElement& g) const {
    std::vector<int32_t> perm(coset_count());
    for (size_t c = 0; c < coset_count(); ++c) perm[c] = act(g, int32_t(c));
    return perm;
}

CosetSpace coset_space(std::shared_ptr<const QuotientGroup> ambient, FiniteSubgroup h,
                       std::vector<QuotientElement> action_gens) {
    auto sub = finite_subgroup(h, ambient->group(), ambient->level());
    if (action_gens.empty()) {
        SubgroupTag::Kind g = ambient->group();
        int n = ambient->level();
        action_gens = {q_named(Name::alpha, g, n), q_named(Name::i, g, n),
                       q_named(Name::omega, g, n)};
        if (g == SubgroupTag::S2) action_gens.push_back(q_named(Name::pi, g, n));
    }
    return CosetSpace(std::move(ambient), std::move(sub), std::move(action_gens));
}

std::optional<QuotientElement> conjugacy_search(const std::vector<QuotientElement>& A,
                                                const std::vector<QuotientElement>& B,
                                                const QuotientGroup& ambient) {
    if (A.size() != B.size()) return std::nullopt;
    std::unordered_set<uint64_t> bkeys;
    for (const auto& b : B) bkeys.insert(b.key());
    for (size_t i = 0; i < ambient.size(); ++i) {
        QuotientElement x = ambient.element_at(i);
        QuotientElement xi = q_inv(x);
        bool ok = true;
        for (const auto& a : A) {
            QuotientElement c = q_mul(q_mul(x, a), xi);
            if (!bkeys.count(c.key())) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    return std::nullopt;
}

}  // namespace mstab
