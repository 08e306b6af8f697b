#pragma once

#include <vector>

namespace quandles {

/// A permutation of {0, ..., n-1}, stored as its image array.
///
/// Permutations compose left to right: perm_compose(p, q) applies p first,
/// then q. Under this convention the conjugate q^-1 p q sends i to
/// q(p(q^-1(i))), which is what makes column maps of a quandle multiply the
/// right way around in a conjugation quandle.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

Perm perm_identity(int degree);

bool perm_is_identity(const Perm& p);

/// (p * q)(i) = q[p[i]].
Perm perm_compose(const Perm& p, const Perm& q);

Perm perm_inverse(const Perm& p);

/// Smallest k >= 1 with p^k = id.
int perm_order(const Perm& p);

/// All degree! permutations in lexicographic order. The identity comes first.
std::vector<Perm> all_permutations(int degree);

/// Index of p in all_permutations(p.size()), or -1 if p is not a permutation.
int perm_lex_index(const Perm& p);

/// Closure of `generators` under composition: the subgroup they generate,
/// sorted lexicographically (so the identity is element 0). Throws
/// BoundExceeded if the closure grows past max_size.
std::vector<Perm> permutation_closure(const std::vector<Perm>& generators,
                                      std::size_t max_size);

} // namespace quandles
