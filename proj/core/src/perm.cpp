#include "quandles/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "quandles/errors.hpp"

namespace quandles {

bool is_permutation(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool perm_is_identity(const Perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i)
            return false;
    return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = q[p[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i]] = static_cast<int>(i);
    return r;
}

int perm_order(const Perm& p) {
    Perm power = p;
    int k = 1;
    while (!perm_is_identity(power)) {
        power = perm_compose(power, p);
        ++k;
    }
    return k;
}

std::vector<Perm> all_permutations(int degree) {
    Perm p = perm_identity(degree);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_lex_index(const Perm& p) {
    if (!is_permutation(p))
        return -1;
    // Factorial number system: rank of p among all permutations of its degree.
    const int n = static_cast<int>(p.size());
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i])
                ++smaller;
        long long fact = 1;
        for (int f = 2; f <= n - 1 - i; ++f)
            fact *= f;
        rank += smaller * fact;
    }
    return static_cast<int>(rank);
}

std::vector<Perm> permutation_closure(const std::vector<Perm>& generators,
                                      std::size_t max_size) {
    std::set<Perm> closure;
    std::vector<Perm> frontier;
    for (const Perm& g : generators) {
        if (closure.insert(g).second)
            frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& a : frontier) {
            for (const Perm& g : generators) {
                Perm product = perm_compose(a, g);
                if (closure.insert(product).second) {
                    if (closure.size() > max_size)
                        throw BoundExceeded("permutation closure exceeds " +
                                            std::to_string(max_size) + " elements");
                    next.push_back(std::move(product));
                }
            }
        }
        frontier = std::move(next);
    }
    // Every generator has finite order, so the closure contains the identity
    // and inverses; sorted order puts the identity first.
    return {closure.begin(), closure.end()};
}

} // namespace quandles
