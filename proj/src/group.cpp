#include "fusion2s/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "fusion2s/errors.hpp"

namespace fusion2s {

std::string to_string(const GroupElement& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.residues.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.residues[i]);
    }
    out += ")";
    return out;
}

long long group_size_cap() {
    if (const char* env = std::getenv("FUSION2S_MAX_GROUP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 4096;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> orders)
    : orders_(std::move(orders)) {
    if (orders_.empty()) throw InputError("group needs at least one cyclic factor");
    const long long cap = group_size_cap();
    for (long long n : orders_) {
        if (n < 1) throw InputError("cyclic factor order must be >= 1");
        if (order_ > cap / n) throw SizeError("group order exceeds cap " + std::to_string(cap));
        order_ *= n;
    }
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<long long>(rank(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<long long> residues) const {
    GroupElement g{std::move(residues)};
    check_member(g);
    return g;
}

GroupElement FiniteAbelianGroup::reduced(const std::vector<long long>& coords) const {
    if (coords.size() != rank()) throw InputError("element arity does not match group rank");
    GroupElement g{coords};
    for (std::size_t i = 0; i < rank(); ++i) {
        g.residues[i] %= orders_[i];
        if (g.residues[i] < 0) g.residues[i] += orders_[i];
    }
    return g;
}

void FiniteAbelianGroup::check_member(const GroupElement& a) const {
    if (a.residues.size() != rank()) throw InputError("element arity does not match group rank");
    for (std::size_t i = 0; i < rank(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= orders_[i])
            throw InputError("residue " + std::to_string(a.residues[i]) + " out of range for Z_" +
                             std::to_string(orders_[i]));
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_member(a);
    check_member(b);
    GroupElement out{std::vector<long long>(rank())};
    for (std::size_t i = 0; i < rank(); ++i)
        out.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
    return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    check_member(a);
    GroupElement out{std::vector<long long>(rank())};
    for (std::size_t i = 0; i < rank(); ++i)
        out.residues[i] = (orders_[i] - a.residues[i]) % orders_[i];
    return out;
}

GroupElement FiniteAbelianGroup::scalar_mul(long long m, const GroupElement& a) const {
    check_member(a);
    GroupElement out{std::vector<long long>(rank())};
    for (std::size_t i = 0; i < rank(); ++i) {
        const long long r = (a.residues[i] * (m % orders_[i])) % orders_[i];
        out.residues[i] = r < 0 ? r + orders_[i] : r;
    }
    return out;
}

long long FiniteAbelianGroup::order_of(const GroupElement& a) const {
    check_member(a);
    long long m = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        const long long cyc = orders_[i] / std::gcd(orders_[i], a.residues[i]);
        m = std::lcm(m, cyc);
    }
    return m;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    GroupElement cur = identity();
    for (long long i = 0; i < order_; ++i) {
        out.push_back(cur);
        // odometer increment, last coordinate fastest
        for (std::size_t j = rank(); j-- > 0;) {
            if (++cur.residues[j] < orders_[j]) break;
            cur.residues[j] = 0;
        }
    }
    return out;
}

long long FiniteAbelianGroup::index_of(const GroupElement& a) const {
    check_member(a);
    long long idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * orders_[i] + a.residues[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(long long index) const {
    if (index < 0 || index >= order_) throw InputError("element index out of range");
    GroupElement g{std::vector<long long>(rank())};
    for (std::size_t i = rank(); i-- > 0;) {
        g.residues[i] = index % orders_[i];
        index /= orders_[i];
    }
    return g;
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
    if (a.residues.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= orders_[i]) return false;
    return true;
}

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<GroupElement> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw InputError("subgroup must contain the identity");

    membership_.assign(static_cast<std::size_t>(parent_.order()), 0);
    for (const auto& m : members_) membership_[static_cast<std::size_t>(parent_.index_of(m))] = 1;

    if (!contains(parent_.identity())) throw InputError("subgroup must contain the identity");
    for (const auto& a : members_) {
        if (!contains(parent_.neg(a))) throw InputError("subgroup not closed under negation");
        for (const auto& b : members_)
            if (!contains(parent_.add(a, b))) throw InputError("subgroup not closed under addition");
    }
    if (parent_.order() % order() != 0)
        throw InputError("subgroup size does not divide the group order");
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& parent) {
    return Subgroup(parent, {parent.identity()});
}

Subgroup Subgroup::full(const FiniteAbelianGroup& parent) {
    return Subgroup(parent, parent.elements());
}

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& parent,
                                const std::vector<GroupElement>& generators) {
    std::set<GroupElement> closure{parent.identity()};
    for (const auto& g : generators) closure.insert(parent.element(g.residues));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GroupElement> snapshot(closure.begin(), closure.end());
        for (const auto& a : snapshot) {
            if (closure.insert(parent.neg(a)).second) grew = true;
            for (const auto& b : snapshot)
                if (closure.insert(parent.add(a, b)).second) grew = true;
        }
    }
    return Subgroup(parent, {closure.begin(), closure.end()});
}

bool Subgroup::contains(const GroupElement& a) const {
    if (!parent_.contains(a)) return false;
    return membership_[static_cast<std::size_t>(parent_.index_of(a))] != 0;
}

std::size_t Subgroup::member_index(const GroupElement& a) const {
    const auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it == members_.end() || !(*it == a)) throw InputError("element is not a member of the subgroup");
    return static_cast<std::size_t>(it - members_.begin());
}

namespace {

// Grows the subgroup lattice from the trivial subgroup by adjoining one
// generator at a time; every subgroup is reached since it is generated by
// finitely many elements.
std::vector<Subgroup> subgroup_lattice(const FiniteAbelianGroup& group,
                                       const std::vector<GroupElement>& universe) {
    std::set<std::vector<GroupElement>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> frontier{Subgroup::trivial(group)};
    seen.insert(frontier.front().members());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& sub : frontier) {
            out.push_back(sub);
            for (const auto& g : universe) {
                if (sub.contains(g)) continue;
                auto gens = sub.members();
                gens.push_back(g);
                Subgroup grown = Subgroup::generated_by(group, gens);
                if (seen.insert(grown.members()).second) next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members() < b.members();
    });
    return out;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group) {
    return subgroup_lattice(group, group.elements());
}

std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& universe) {
    auto all = subgroup_lattice(universe.parent(), universe.members());
    std::vector<Subgroup> out;
    for (auto& sub : all) {
        bool inside = true;
        for (const auto& m : sub.members())
            if (!universe.contains(m)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(std::move(sub));
    }
    return out;
}

Character::Character(FiniteAbelianGroup group, GroupElement index)
    : group_(std::move(group)), index_(std::move(index)) {
    group_.element(index_.residues);  // arity/range check
}

UnityScalar Character::eval(const GroupElement& g) const {
    if (!group_.contains(g)) throw InputError("character evaluated outside its group");
    UnityScalar value;
    const auto& n = group_.orders();
    for (std::size_t i = 0; i < n.size(); ++i)
        value *= UnityScalar::from_fraction(index_.residues[i] * g.residues[i], n[i]);
    return value;
}

std::vector<Character> characters(const FiniteAbelianGroup& group) {
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(group.order()));
    for (const auto& a : group.elements()) out.emplace_back(group, a);
    return out;
}

SubgroupCharacter::SubgroupCharacter(Subgroup domain, std::vector<UnityScalar> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.members().size())
        throw InputError("subgroup character value table has wrong length");
}

UnityScalar SubgroupCharacter::eval(const GroupElement& h) const {
    return values_[domain_.member_index(h)];
}

bool SubgroupCharacter::is_trivial() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const UnityScalar& v) { return v.is_one(); });
}

SubgroupCharacter restrict_to(const Character& chi, const Subgroup& subgroup) {
    if (!(chi.group() == subgroup.parent()))
        throw InputError("character and subgroup live over different groups");
    std::vector<UnityScalar> values;
    values.reserve(subgroup.members().size());
    for (const auto& h : subgroup.members()) values.push_back(chi.eval(h));
    return SubgroupCharacter(subgroup, std::move(values));
}

std::vector<SubgroupCharacter> characters_of_subgroup(const Subgroup& subgroup) {
    std::vector<SubgroupCharacter> out;
    std::set<std::vector<UnityScalar>> seen;
    for (const auto& chi : characters(subgroup.parent())) {
        auto restricted = restrict_to(chi, subgroup);
        if (seen.insert(restricted.values()).second) out.push_back(std::move(restricted));
    }
    if (static_cast<long long>(out.size()) != subgroup.order())
        throw InvariantViolation("restriction did not produce |H| distinct characters");
    return out;
}

std::vector<GroupElement> coset_transversal(const FiniteAbelianGroup& group,
                                            const Subgroup& subgroup) {
    if (!(subgroup.parent() == group))
        throw InputError("subgroup does not belong to the given group");
    std::vector<char> covered(static_cast<std::size_t>(group.order()), 0);
    std::vector<GroupElement> reps;
    for (const auto& g : group.elements()) {
        if (covered[static_cast<std::size_t>(group.index_of(g))]) continue;
        reps.push_back(g);
        for (const auto& h : subgroup.members())
            covered[static_cast<std::size_t>(group.index_of(group.add(g, h)))] = 1;
    }
    return reps;
}

}  // namespace fusion2s
