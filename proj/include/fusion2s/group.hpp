#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fusion2s/unity.hpp"

namespace fusion2s {

/// Element of a finite abelian group, as a residue vector against a fixed
/// cyclic decomposition. Plain value; the owning group is passed to every
/// operation that needs the factor orders.
struct GroupElement {
    std::vector<long long> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    auto operator<=>(const GroupElement& rhs) const {
        return residues <=> rhs.residues;
    }
};

/// Renders an element as "(g1,...,gk)".
std::string to_string(const GroupElement& g);

/// Current group-size cap. Defaults to 4096; the FUSION2S_MAX_GROUP
/// environment variable overrides it.
long long group_size_cap();

/// G = Z_{n1} x ... x Z_{nk} for fixed cyclic factor orders n_i >= 1.
/// All enumeration is brute force; the constructor enforces the size cap.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long long> orders);

    const std::vector<long long>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    long long order() const { return order_; }

    GroupElement identity() const;
    /// Validates residues strictly: 0 <= g_i < n_i, length == rank.
    GroupElement element(std::vector<long long> residues) const;
    /// Reduces arbitrary integer coordinates componentwise mod n_i.
    GroupElement reduced(const std::vector<long long>& coords) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(long long m, const GroupElement& a) const;
    /// Least m >= 1 with m*a = 0.
    long long order_of(const GroupElement& a) const;

    /// All elements in lexicographic order on residue vectors.
    std::vector<GroupElement> elements() const;

    /// Mixed-radix linear index of an element (position in elements()).
    long long index_of(const GroupElement& a) const;
    GroupElement element_at(long long index) const;

    bool contains(const GroupElement& a) const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    void check_member(const GroupElement& a) const;

    std::vector<long long> orders_;
    long long order_ = 1;
};

/// Subgroup of a FiniteAbelianGroup in canonical form: the sorted list of its
/// members. Construction verifies identity, closure and Lagrange.
class Subgroup {
public:
    Subgroup(FiniteAbelianGroup parent, std::vector<GroupElement> members);

    static Subgroup trivial(const FiniteAbelianGroup& parent);
    static Subgroup full(const FiniteAbelianGroup& parent);
    /// Closure of a generating set, brute force.
    static Subgroup generated_by(const FiniteAbelianGroup& parent,
                                 const std::vector<GroupElement>& generators);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const std::vector<GroupElement>& members() const { return members_; }
    long long order() const { return static_cast<long long>(members_.size()); }
    bool contains(const GroupElement& a) const;
    /// Position of a member in members(); InputError if absent.
    std::size_t member_index(const GroupElement& a) const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    auto operator<=>(const Subgroup& rhs) const {
        return members_ <=> rhs.members_;
    }

private:
    FiniteAbelianGroup parent_;
    std::vector<GroupElement> members_;
    std::vector<char> membership_;  // indexed by linear element index
};

/// Complete duplicate-free list of subgroups, sorted by (order, members).
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group);

/// All subgroups of `group` whose members lie inside `universe`.
std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& universe);

/// Character of the full group under the canonical self-duality of the fixed
/// cyclic decomposition: chi_a(g) has exponent sum_i a_i g_i / n_i.
class Character {
public:
    Character(FiniteAbelianGroup group, GroupElement index);

    const FiniteAbelianGroup& group() const { return group_; }
    const GroupElement& index() const { return index_; }
    UnityScalar eval(const GroupElement& g) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    FiniteAbelianGroup group_;
    GroupElement index_;
};

/// All characters of G, ordered by lexicographic index; the trivial
/// character comes first.
std::vector<Character> characters(const FiniteAbelianGroup& group);

/// Character of a subgroup, tabulated on its canonical member list.
class SubgroupCharacter {
public:
    SubgroupCharacter(Subgroup domain, std::vector<UnityScalar> values);

    const Subgroup& domain() const { return domain_; }
    const std::vector<UnityScalar>& values() const { return values_; }
    UnityScalar eval(const GroupElement& h) const;
    bool is_trivial() const;

    friend bool operator==(const SubgroupCharacter&, const SubgroupCharacter&) = default;

private:
    Subgroup domain_;
    std::vector<UnityScalar> values_;
};

/// Restriction of an ambient character to a subgroup.
SubgroupCharacter restrict_to(const Character& chi, const Subgroup& subgroup);

/// Exactly |H| pairwise distinct characters of H, obtained by restricting all
/// characters of the parent group and deduplicating; first-occurrence order.
std::vector<SubgroupCharacter> characters_of_subgroup(const Subgroup& subgroup);

/// One representative per coset of H in G, the lexicographically least member
/// of each coset; the identity represents H itself.
std::vector<GroupElement> coset_transversal(const FiniteAbelianGroup& group,
                                            const Subgroup& subgroup);

}  // namespace fusion2s
