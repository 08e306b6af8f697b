#include "quandles/quandle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quandles/errors.hpp"

namespace quandles {

std::string QuandleDefect::describe() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::NotIdempotent:
        out << "axiom(1) violated at x=" << x;
        break;
    case Kind::NotDistributive:
        out << "axiom(2) violated at (x,y,z)=(" << x << "," << y << "," << z << ")";
        break;
    case Kind::ColumnNotBijective:
        out << "axiom(3) violated at column y=" << y;
        break;
    case Kind::ConjugationIdentity:
        out << "column conjugation identity violated at (x,y)=(" << x << "," << y << ")";
        break;
    }
    return out.str();
}

namespace {

void require_square_table(const Table& t) {
    const std::size_t n = t.size();
    if (n == 0)
        throw std::invalid_argument("empty table: quandles are non-empty");
    for (const auto& row : t) {
        if (row.size() != n)
            throw std::invalid_argument("table is not square");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(n))
                throw std::invalid_argument("table entry out of range");
    }
}

Perm column_of(const Table& t, int y) {
    Perm s(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        s[x] = t[x][y];
    return s;
}

} // namespace

Perm FiniteQuandle::column(int y) const {
    return column_of(table_, y);
}

std::optional<QuandleDefect> find_quandle_defect(const Table& t, AxiomCheck mode) {
    const int n = static_cast<int>(t.size());
    using Kind = QuandleDefect::Kind;

    for (int x = 0; x < n; ++x)
        if (t[x][x] != x)
            return QuandleDefect{Kind::NotIdempotent, x};

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[t[x][z]][t[y][z]])
                    return QuandleDefect{Kind::NotDistributive, x, y, z};

    for (int y = 0; y < n; ++y)
        if (!is_permutation(column_of(t, y)))
            return QuandleDefect{Kind::ColumnNotBijective, -1, y};

    if (mode == AxiomCheck::Extended) {
        // S_{x*y} = S_y^-1 S_x S_y, rechecked on the column permutations.
        std::vector<Perm> col(n), col_inv(n);
        for (int y = 0; y < n; ++y) {
            col[y] = column_of(t, y);
            col_inv[y] = perm_inverse(col[y]);
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Perm conjugated = perm_compose(perm_compose(col_inv[y], col[x]), col[y]);
                if (conjugated != col[t[x][y]])
                    return QuandleDefect{Kind::ConjugationIdentity, x, y};
            }
    }
    return std::nullopt;
}

FiniteQuandle check_quandle(Table t, AxiomCheck mode) {
    require_square_table(t);
    if (std::optional<QuandleDefect> defect = find_quandle_defect(t, mode))
        throw QuandleError(*defect);
    return FiniteQuandle(std::move(t));
}

FiniteQuandle trivial_quandle(int n) {
    if (n < 1)
        throw std::invalid_argument("quandles are non-empty");
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = x;
    return check_quandle(std::move(t));
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

bool QuandleMap::is_injective() const {
    std::set<int> seen(map.begin(), map.end());
    return seen.size() == map.size();
}

bool is_quandle_hom(const QuandleMap& f, const FiniteQuandle& domain,
                    const FiniteQuandle& codomain) {
    const int n = domain.order();
    if (static_cast<int>(f.map.size()) != n)
        throw std::invalid_argument("map length does not match domain order");
    for (int v : f.map)
        if (v < 0 || v >= codomain.order())
            throw std::invalid_argument("map value out of codomain range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (codomain.op(f.map[x], f.map[y]) != f.map[domain.op(x, y)])
                return false;
    return true;
}

std::vector<QuandleMap> find_homs(const FiniteQuandle& domain, const FiniteQuandle& codomain,
                                  const HomSearchOptions& options) {
    const int n = domain.order();
    const int m = codomain.order();
    std::vector<QuandleMap> results;
    std::vector<int> f(n, -1);
    std::vector<bool> used(m, false);

    // The instance (a,b) of the hom law is decidable once a, b and a*b are
    // all assigned; with assignment in index order that is exactly when the
    // last of them is assigned.
    auto consistent_at = [&](int x) {
        for (int a = 0; a <= x; ++a)
            for (int b = 0; b <= x; ++b) {
                int ab = domain.op(a, b);
                if (ab > x || std::max(a, std::max(b, ab)) != x)
                    continue;
                if (codomain.op(f[a], f[b]) != f[ab])
                    return false;
            }
        return true;
    };

    auto search = [&](auto&& self, int x) -> bool {
        if (x == n) {
            results.push_back(QuandleMap{f});
            return options.limit && results.size() >= *options.limit;
        }
        for (int v = 0; v < m; ++v) {
            if (options.injective_only && used[v])
                continue;
            f[x] = v;
            used[v] = true;
            if (consistent_at(x) && self(self, x + 1)) {
                used[v] = false;
                f[x] = -1;
                return true;
            }
            used[v] = false;
            f[x] = -1;
        }
        return false;
    };
    search(search, 0);
    return results;
}

std::optional<QuandleMap> are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
    if (a.order() != b.order())
        return std::nullopt;
    std::vector<QuandleMap> found =
        find_homs(a, b, HomSearchOptions{.injective_only = true, .limit = 1});
    if (found.empty())
        return std::nullopt;
    return found.front();
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

Table relabel_quandle_table(const Table& t, const Perm& p) {
    const int n = static_cast<int>(t.size());
    Table out(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[p[x]][p[y]] = p[t[x][y]];
    return out;
}

} // namespace

Table canonical_form(const FiniteQuandle& q) {
    const int n = q.order();
    Perm p = perm_identity(n);
    Table best = q.table();
    while (std::next_permutation(p.begin(), p.end())) {
        Table candidate = relabel_quandle_table(q.table(), p);
        if (candidate < best)
            best = std::move(candidate);
    }
    return best;
}

std::vector<FiniteQuandle> enumerate_quandles(int n, int max_order) {
    if (n < 1)
        throw std::invalid_argument("quandles are non-empty");
    if (n > max_order)
        throw BoundExceeded("quandle enumeration capped at order " + std::to_string(max_order) +
                            ", got " + std::to_string(n));

    // Cells off the diagonal in row-major order; the diagonal is forced by
    // axiom (1). Candidates are tried smallest first.
    Table t(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        t[x][x] = x;
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y)
                cells.emplace_back(x, y);

    std::vector<std::vector<bool>> used_in_column(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        used_in_column[x][x] = true;

    // Every axiom-(2) instance whose five cells are all assigned must hold.
    auto partial_distributive = [&]() {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = t[x][y];
                if (xy < 0)
                    continue;
                for (int z = 0; z < n; ++z) {
                    int lhs = t[xy][z];
                    int xz = t[x][z];
                    int yz = t[y][z];
                    if (lhs < 0 || xz < 0 || yz < 0)
                        continue;
                    int rhs = t[xz][yz];
                    if (rhs >= 0 && lhs != rhs)
                        return false;
                }
            }
        return true;
    };

    std::set<Table> canonical;
    auto search = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            canonical.insert(canonical_form(check_quandle(t)));
            return;
        }
        auto [x, y] = cells[k];
        for (int v = 0; v < n; ++v) {
            if (used_in_column[y][v])
                continue;
            t[x][y] = v;
            used_in_column[y][v] = true;
            if (partial_distributive())
                self(self, k + 1);
            used_in_column[y][v] = false;
            t[x][y] = -1;
        }
    };
    search(search, 0);

    std::vector<FiniteQuandle> out;
    out.reserve(canonical.size());
    for (const Table& c : canonical)
        out.push_back(check_quandle(c));
    return out;
}

} // namespace quandles
