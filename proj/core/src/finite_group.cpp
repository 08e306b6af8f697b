#include "quandles/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "quandles/errors.hpp"

namespace quandles {

std::string GroupDefect::describe() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::NoIdentity:
        out << "no identity element";
        break;
    case Kind::NotLatin:
        out << "not Latin: " << (column ? "column " : "row ") << a << " repeats entry "
            << c << " at position " << b;
        break;
    case Kind::NotAssociative:
        out << "not associative at (a,b,c)=(" << a << "," << b << "," << c << ")";
        break;
    case Kind::NoInverse:
        out << "no inverse for element " << a;
        break;
    }
    return out.str();
}

namespace {

void require_square_table(const Table& t) {
    const std::size_t n = t.size();
    if (n == 0)
        throw std::invalid_argument("empty table");
    for (const auto& row : t) {
        if (row.size() != n)
            throw std::invalid_argument("table is not square");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(n))
                throw std::invalid_argument("table entry out of range");
    }
}

std::optional<int> find_identity(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = t[e][a] == a && t[a][e] == a;
        if (ok)
            return e;
    }
    return std::nullopt;
}

// t'[p[a]][p[b]] = p[t[a][b]]
Table relabel_table(const Table& t, const Perm& p) {
    const int n = static_cast<int>(t.size());
    Table out(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[p[a]][p[b]] = p[t[a][b]];
    return out;
}

} // namespace

std::optional<GroupDefect> find_group_defect(const Table& t) {
    const int n = static_cast<int>(t.size());
    using Kind = GroupDefect::Kind;

    std::optional<int> identity = find_identity(t);
    if (!identity)
        return GroupDefect{Kind::NoIdentity};

    // Latin property, rows then columns; witness is (line, position, value).
    for (int a = 0; a < n; ++a) {
        std::vector<int> first_pos(n, -1);
        for (int b = 0; b < n; ++b) {
            int v = t[a][b];
            if (first_pos[v] >= 0)
                return GroupDefect{Kind::NotLatin, a, b, v, false};
            first_pos[v] = b;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::vector<int> first_pos(n, -1);
        for (int a = 0; a < n; ++a) {
            int v = t[a][b];
            if (first_pos[v] >= 0)
                return GroupDefect{Kind::NotLatin, b, a, v, true};
            first_pos[v] = a;
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    return GroupDefect{Kind::NotAssociative, a, b, c};

    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b)
            found = t[a][b] == *identity && t[b][a] == *identity;
        if (!found)
            return GroupDefect{Kind::NoInverse, a};
    }
    return std::nullopt;
}

FiniteGroup check_group(Table t) {
    require_square_table(t);
    const int n = static_cast<int>(t.size());

    std::optional<int> identity = find_identity(t);
    if (!identity)
        throw GroupError(GroupDefect{GroupDefect::Kind::NoIdentity});
    if (*identity != 0) {
        Perm swap_labels = perm_identity(n);
        std::swap(swap_labels[0], swap_labels[*identity]);
        t = relabel_table(t, swap_labels);
    }

    if (std::optional<GroupDefect> defect = find_group_defect(t))
        throw GroupError(*defect);

    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t[a][b] == 0 && t[b][a] == 0) {
                inverse[a] = b;
                break;
            }
    return FiniteGroup(std::move(t), std::move(inverse));
}

FiniteGroup group_from_permutations(const std::vector<Perm>& elements) {
    const int n = static_cast<int>(elements.size());
    if (n == 0)
        throw std::invalid_argument("empty permutation set");

    std::map<Perm, int> index;
    for (int i = 0; i < n; ++i)
        index[elements[i]] = i;
    if (static_cast<int>(index.size()) != n)
        throw std::invalid_argument("duplicate permutations");
    if (!perm_is_identity(elements[0]))
        throw std::invalid_argument("permutations must be sorted with the identity first");

    // Composition is associative, so only closure needs checking.
    Table t(n, std::vector<int>(n));
    std::vector<int> inverse(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto it = index.find(perm_compose(elements[a], elements[b]));
            if (it == index.end())
                throw std::invalid_argument("permutation set is not closed under composition");
            t[a][b] = it->second;
        }
        auto inv = index.find(perm_inverse(elements[a]));
        if (inv == index.end())
            throw std::invalid_argument("permutation set is not closed under inversion");
        inverse[a] = inv->second;
    }
    return FiniteGroup(std::move(t), std::move(inverse));
}

bool is_abelian(const FiniteGroup& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.mul(a, b) != g.mul(b, a))
                return false;
    return true;
}

int element_order(const FiniteGroup& g, int a) {
    int power = a;
    int k = 1;
    while (power != 0) {
        power = g.mul(power, a);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

GroupAutomorphism identity_automorphism(int order) {
    return GroupAutomorphism{perm_identity(order)};
}

bool is_automorphism(const FiniteGroup& g, const Perm& map) {
    const int n = g.order();
    if (static_cast<int>(map.size()) != n)
        throw std::invalid_argument("automorphism length mismatch: map has " +
                                    std::to_string(map.size()) + " entries, group has order " +
                                    std::to_string(n));
    if (!is_permutation(map))
        return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (map[g.mul(a, b)] != g.mul(map[a], map[b]))
                return false;
    return true;
}

namespace {

// Smallest elements that successively enlarge the generated subgroup.
std::vector<int> generating_sequence(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> gens;
    std::vector<bool> in_closure(n, false);
    in_closure[0] = true;
    int closure_size = 1;

    while (closure_size < n) {
        int next = -1;
        for (int a = 1; a < n; ++a)
            if (!in_closure[a]) {
                next = a;
                break;
            }
        gens.push_back(next);

        // Grow the closure under right-multiplication by all chosen generators.
        std::vector<int> frontier{0, next};
        in_closure[next] = true;
        ++closure_size;
        while (!frontier.empty()) {
            std::vector<int> grown;
            for (int a : frontier)
                for (int gen : gens) {
                    int b = g.mul(a, gen);
                    if (!in_closure[b]) {
                        in_closure[b] = true;
                        ++closure_size;
                        grown.push_back(b);
                    }
                }
            frontier = std::move(grown);
        }
    }
    return gens;
}

// Extends generator images to a full map by following products, then checks
// bijectivity and multiplicativity outright.
std::optional<Perm> extend_to_automorphism(const FiniteGroup& g, const std::vector<int>& gens,
                                           const std::vector<int>& images) {
    const int n = g.order();
    Perm f(n, -1);
    f[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int b = g.mul(a, gens[i]);
            int fb = g.mul(f[a], images[i]);
            if (f[b] == -1) {
                f[b] = fb;
                stack.push_back(b);
            } else if (f[b] != fb) {
                return std::nullopt;
            }
        }
    }
    if (!is_permutation(f))
        return std::nullopt;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[g.mul(a, b)] != g.mul(f[a], f[b]))
                return std::nullopt;
    return f;
}

} // namespace

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, int max_order) {
    const int n = g.order();
    if (n > max_order)
        throw BoundExceeded("automorphism enumeration capped at group order " +
                            std::to_string(max_order) + ", got " + std::to_string(n));
    if (n == 1)
        return {identity_automorphism(1)};

    const std::vector<int> gens = generating_sequence(g);
    std::vector<int> orders(n);
    for (int a = 0; a < n; ++a)
        orders[a] = element_order(g, a);

    std::set<Perm> found;
    std::vector<int> images(gens.size());
    // Candidate images must match the generator's order; everything else is
    // rejected by the extension step.
    auto assign = [&](auto&& self, std::size_t i) -> void {
        if (i == gens.size()) {
            if (std::optional<Perm> f = extend_to_automorphism(g, gens, images))
                found.insert(std::move(*f));
            return;
        }
        for (int candidate = 0; candidate < n; ++candidate)
            if (orders[candidate] == orders[gens[i]]) {
                images[i] = candidate;
                self(self, i + 1);
            }
    };
    assign(assign, 0);

    std::vector<GroupAutomorphism> out;
    out.reserve(found.size());
    for (const Perm& f : found)
        out.push_back(GroupAutomorphism{f});
    return out;
}

int aut_order(const GroupAutomorphism& phi) {
    return perm_order(phi.map);
}

GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& then) {
    return GroupAutomorphism{perm_compose(first.map, then.map)};
}

GroupAutomorphism inverse(const GroupAutomorphism& phi) {
    return GroupAutomorphism{perm_inverse(phi.map)};
}

// ---------------------------------------------------------------------------
// Stock groups
// ---------------------------------------------------------------------------

FiniteGroup trivial_group() {
    return check_group({{0}});
}

FiniteGroup cyclic_group(int n) {
    if (n < 1)
        throw std::invalid_argument("cyclic_group: order must be positive");
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return check_group(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    const int n = na * nb;
    auto encode = [nb](int x, int y) { return x * nb + y; };
    Table t(n, std::vector<int>(n));
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    t[encode(x1, y1)][encode(x2, y2)] = encode(a.mul(x1, x2), b.mul(y1, y2));
    return check_group(std::move(t));
}

FiniteGroup symmetric_group(int degree) {
    if (degree < 1)
        throw std::invalid_argument("symmetric_group: degree must be positive");
    return group_from_permutations(all_permutations(degree));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1)
        throw std::invalid_argument("dihedral_group: n must be positive");
    // Element s^a r^i at index a*n + i; r^i s = s r^-i.
    const int order = 2 * n;
    Table t(order, std::vector<int>(order));
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < n; ++j) {
                    int rot = b == 0 ? (i + j) % n : ((j - i) % n + n) % n;
                    t[a * n + i][b * n + j] = ((a + b) % 2) * n + rot;
                }
    return check_group(std::move(t));
}

FiniteGroup quaternion_group() {
    // Indices: sign*4 + basis, basis 0..3 = 1, i, j, k.
    // basis_mul[b1][b2] = {sign, basis} of the product.
    static constexpr int basis_sign[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 0, 1},
        {0, 1, 1, 0},
        {0, 0, 1, 1},
    };
    static constexpr int basis_prod[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    Table t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int s1 = x / 4, b1 = x % 4;
            int s2 = y / 4, b2 = y % 4;
            int sign = (s1 + s2 + basis_sign[b1][b2]) % 2;
            t[x][y] = sign * 4 + basis_prod[b1][b2];
        }
    return check_group(std::move(t));
}

} // namespace quandles
