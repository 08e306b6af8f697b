#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/perm.hpp"

namespace quandles {

/// Square operation table: table[a][b] is the index of a*b.
using Table = std::vector<std::vector<int>>;

/// Why a table fails to be a group table, with the first witness found.
struct GroupDefect {
    enum class Kind { NoIdentity, NotLatin, NotAssociative, NoInverse };
    Kind kind;
    int a = -1, b = -1, c = -1; // meaning depends on kind
    bool column = false;        // NotLatin: repeated entry in a column (else a row)
    std::string describe() const;
};

struct GroupError : std::runtime_error {
    GroupDefect defect;
    explicit GroupError(GroupDefect d) : std::runtime_error(d.describe()), defect(d) {}
};

/// A finite group as a multiplication table over indices 0..n-1.
///
/// Invariants (established by check_group, preserved by immutability):
///   - index 0 is the identity,
///   - the table is associative and every row/column is a permutation,
///   - inv(a) is the two-sided inverse of a.
class FiniteGroup {
public:
    FiniteGroup() = default;

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    const Table& table() const { return table_; }
    const std::vector<int>& inverses() const { return inverse_; }

    bool operator==(const FiniteGroup& rhs) const { return table_ == rhs.table_; }

private:
    FiniteGroup(Table t, std::vector<int> inverse)
        : table_(std::move(t)), inverse_(std::move(inverse)) {}

    friend FiniteGroup check_group(Table t);
    friend FiniteGroup group_from_permutations(const std::vector<Perm>& elements);

    Table table_;
    std::vector<int> inverse_;
};

/// Scans a table (identity may sit at any index) and reports the first
/// defect in the order: missing identity, broken Latin property, broken
/// associativity, missing inverse. Returns nullopt for a valid group table.
std::optional<GroupDefect> find_group_defect(const Table& t);

/// Validates a table and returns the group, with the identity relabeled to
/// index 0 (by swapping labels) if it sits elsewhere. Throws GroupError on a
/// defect and std::invalid_argument on a malformed (non-square, out-of-range)
/// table.
FiniteGroup check_group(Table t);

/// Builds a group from a composition-closed set of permutations (as produced
/// by permutation_closure). Elements are sorted lexicographically, so the
/// identity permutation gets index 0. Multiplication is left-to-right
/// composition. Throws std::invalid_argument if the set is not closed.
FiniteGroup group_from_permutations(const std::vector<Perm>& elements);

bool is_abelian(const FiniteGroup& g);

/// Smallest k >= 1 with a^k = identity.
int element_order(const FiniteGroup& g, int a);

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

/// A group automorphism, stored as the permutation of element indices.
/// Valid for a group G when the map is bijective and multiplicative; it then
/// necessarily fixes the identity.
struct GroupAutomorphism {
    Perm map;

    int apply(int a) const { return map[a]; }
    int degree() const { return static_cast<int>(map.size()); }
    bool operator==(const GroupAutomorphism& rhs) const { return map == rhs.map; }
};

GroupAutomorphism identity_automorphism(int order);

/// True iff map is a bijection of 0..n-1 with map[a*b] = map[a]*map[b].
/// Throws std::invalid_argument when the map length does not match the group.
bool is_automorphism(const FiniteGroup& g, const Perm& map);

/// Every automorphism of g, enumerated by backtracking over generator images
/// and returned sorted lexicographically by image array. Throws BoundExceeded
/// when the group order is above max_order (the search is exponential).
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, int max_order = 24);

/// Smallest k >= 1 with phi^k = identity.
int aut_order(const GroupAutomorphism& phi);

GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& then);
GroupAutomorphism inverse(const GroupAutomorphism& phi);

// ---------------------------------------------------------------------------
// Stock groups
// ---------------------------------------------------------------------------

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Sym(degree) with elements in lexicographic order and left-to-right
/// composition; feasible up to degree 7 or so.
FiniteGroup symmetric_group(int degree);

/// Dihedral group of order 2n (symmetries of the regular n-gon; n = 1, 2
/// give Z/2 and the Klein four-group). Element s^a r^i has index a*n + i.
FiniteGroup dihedral_group(int n);

/// The quaternion group of order 8: indices 0..7 are 1, i, j, k, -1, -i, -j, -k.
FiniteGroup quaternion_group();

} // namespace quandles
