#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/finite_group.hpp"
#include "quandles/perm.hpp"

namespace quandles {

/// Which axiom a table breaks, with the first witness found.
/// Axiom (1): x*x = x. Axiom (2): (x*y)*z = (x*z)*(y*z). Axiom (3): every
/// column map S_y : x -> x*y is a bijection.
struct QuandleDefect {
    enum class Kind { NotIdempotent, NotDistributive, ColumnNotBijective, ConjugationIdentity };
    Kind kind;
    int x = -1, y = -1, z = -1;
    std::string describe() const;
};

struct QuandleError : std::runtime_error {
    QuandleDefect defect;
    explicit QuandleError(QuandleDefect d) : std::runtime_error(d.describe()), defect(d) {}
};

/// Extended mode additionally re-derives S_{x*y} = S_y^-1 S_x S_y on the
/// column permutations. The identity is implied by axioms (2) and (3), so it
/// doubles as a self-check on anything the library constructs.
enum class AxiomCheck { Core, Extended };

/// A finite quandle as an n x n operation table, table[x][y] = x*y.
/// The column map S_y acts on the left argument: S_y(x) = table[x][y].
class FiniteQuandle {
public:
    FiniteQuandle() = default;

    int order() const { return static_cast<int>(table_.size()); }
    int op(int x, int y) const { return table_[x][y]; }
    const Table& table() const { return table_; }

    /// Column y as a permutation: the inner map S_y.
    Perm column(int y) const;

    bool operator==(const FiniteQuandle& rhs) const { return table_ == rhs.table_; }

private:
    explicit FiniteQuandle(Table t) : table_(std::move(t)) {}
    friend FiniteQuandle check_quandle(Table t, AxiomCheck mode);

    Table table_;
};

/// Reports the first violated axiom, or nullopt for a valid quandle table.
std::optional<QuandleDefect> find_quandle_defect(const Table& t,
                                                 AxiomCheck mode = AxiomCheck::Extended);

/// Validates and wraps a table. Throws QuandleError on an axiom violation
/// and std::invalid_argument on a malformed (empty, non-square, out-of-range)
/// table.
FiniteQuandle check_quandle(Table t, AxiomCheck mode = AxiomCheck::Extended);

/// The trivial quandle: x*y = x.
FiniteQuandle trivial_quandle(int n);

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

/// A map between quandles, stored as the image array over the domain.
struct QuandleMap {
    std::vector<int> map;

    int apply(int x) const { return map[x]; }
    bool is_injective() const;
    bool operator==(const QuandleMap& rhs) const { return map == rhs.map; }
};

/// True iff f(x*y) = f(x)*f(y) for all pairs. Throws std::invalid_argument
/// when f has the wrong length or a value outside the codomain.
bool is_quandle_hom(const QuandleMap& f, const FiniteQuandle& domain,
                    const FiniteQuandle& codomain);

struct HomSearchOptions {
    bool injective_only = false;
    std::optional<std::size_t> limit; // stop after this many results
};

/// All homomorphisms domain -> codomain (or the first `limit`), found by
/// backtracking in index order with the smallest candidate image first.
/// Output order is deterministic: lexicographic by image array.
std::vector<QuandleMap> find_homs(const FiniteQuandle& domain, const FiniteQuandle& codomain,
                                  const HomSearchOptions& options = {});

/// An isomorphism if one exists. A bijective quandle homomorphism is
/// automatically an isomorphism, so this is find_homs with injectivity
/// pruning on equal orders.
std::optional<QuandleMap> are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Lexicographically minimal relabeling of the table over all n! relabelings.
Table canonical_form(const FiniteQuandle& q);

/// One representative per isomorphism class of quandles of order n, as
/// canonical tables in sorted order. Exhaustive backtracking; throws
/// BoundExceeded for n > max_order and std::invalid_argument for n < 1.
std::vector<FiniteQuandle> enumerate_quandles(int n, int max_order = 5);

} // namespace quandles
