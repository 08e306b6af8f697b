#include "quandles/enveloping.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "quandles/errors.hpp"

namespace quandles {

QuandlePresentation as_presentation(const FiniteQuandle& q) {
    const int n = q.order();
    QuandlePresentation p;
    p.generator_count = n;
    p.relations.reserve(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            p.relations.push_back(QuandleRelation{x, y, q.op(x, y), x == y});
    return p;
}

std::optional<EmbeddingCertificate> inner_certificate(const FiniteQuandle& q,
                                                      std::size_t max_target_order) {
    const int n = q.order();
    std::vector<Perm> columns(n);
    for (int y = 0; y < n; ++y)
        columns[y] = q.column(y);

    std::set<Perm> distinct(columns.begin(), columns.end());
    if (static_cast<int>(distinct.size()) != n)
        return std::nullopt;

    std::vector<Perm> closure = permutation_closure(columns, max_target_order);
    FiniteGroup target = group_from_permutations(closure);

    QuandleMap map;
    map.map.reserve(n);
    for (int y = 0; y < n; ++y) {
        auto it = std::lower_bound(closure.begin(), closure.end(), columns[y]);
        map.map.push_back(static_cast<int>(it - closure.begin()));
    }
    return EmbeddingCertificate{
        std::move(target),
        "inner permutation group on " + std::to_string(n) + " points, order " +
            std::to_string(closure.size()),
        std::move(map), EmbedMethod::InnerClosure, n};
}

namespace {

// Step (c): injective assignment x -> sigma_x over Sym(degree) with
// sigma_y^-1 sigma_x sigma_y = sigma_{x*y}. Candidates in lexicographic
// order, elements assigned in index order. Returns the assignment as indices
// into all_permutations(degree). nodes counts candidate placements tried.
std::optional<std::vector<int>> conj_assignment_search(const FiniteQuandle& q, int degree,
                                                       long long budget, long long& nodes) {
    const int n = q.order();
    const std::vector<Perm> perms = all_permutations(degree);
    const int m = static_cast<int>(perms.size());
    if (m < n)
        return std::nullopt; // not enough distinct permutations

    std::vector<Perm> inverse(m);
    for (int i = 0; i < m; ++i)
        inverse[i] = perm_inverse(perms[i]);

    std::vector<int> sigma(n, -1);
    std::vector<bool> used(m, false);

    // As in the hom search: the instance (a,b) becomes decidable when the
    // last of a, b, a*b is assigned.
    auto consistent_at = [&](int x) {
        for (int a = 0; a <= x; ++a)
            for (int b = 0; b <= x; ++b) {
                int ab = q.op(a, b);
                if (ab > x || std::max(a, std::max(b, ab)) != x)
                    continue;
                Perm conjugated =
                    perm_compose(perm_compose(inverse[sigma[b]], perms[sigma[a]]), perms[sigma[b]]);
                if (conjugated != perms[sigma[ab]])
                    return false;
            }
        return true;
    };

    bool budget_hit = false;
    auto search = [&](auto&& self, int x) -> bool {
        if (x == n)
            return true;
        for (int candidate = 0; candidate < m; ++candidate) {
            if (used[candidate])
                continue;
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            sigma[x] = candidate;
            used[candidate] = true;
            if (consistent_at(x) && self(self, x + 1))
                return true;
            used[candidate] = false;
            sigma[x] = -1;
            if (budget_hit)
                return false;
        }
        return false;
    };
    if (search(search, 0))
        return sigma;
    return std::nullopt;
}

} // namespace

EmbeddabilityReport search_embedding(const FiniteQuandle& q, const SearchOptions& options) {
    EmbeddabilityReport report;

    // (a) inner certificate, when the columns are pairwise distinct
    try {
        if (std::optional<EmbeddingCertificate> cert =
                inner_certificate(q, options.max_target_order)) {
            if (verify_certificate(q, *cert)) {
                report.status = EmbedStatus::Embeddable;
                report.certificate = std::move(cert);
                return report;
            }
        }
    } catch (const BoundExceeded&) {
        // certificate group too large to materialize; fall through
    }

    // (b) the semidirect finite witness, when the quandle is known to be a
    // twisted conjugation quandle
    if (options.twisted_origin) {
        WitnessEmbedding witness =
            embed_into_finite_witness(options.twisted_origin->group, options.twisted_origin->phi);
        if (witness.verified && verify_certificate(q, witness.certificate)) {
            report.status = EmbedStatus::Embeddable;
            report.certificate = std::move(witness.certificate);
            return report;
        }
    }

    // (c) bounded search for an injective homomorphism into Conj(Sym(d))
    for (int degree = 2; degree <= options.max_degree; ++degree) {
        report.max_degree_tried = degree;
        std::optional<std::vector<int>> assignment =
            conj_assignment_search(q, degree, options.node_budget, report.nodes_used);
        if (report.nodes_used > options.node_budget)
            break;
        if (!assignment)
            continue;

        FiniteGroup target = symmetric_group(degree);
        if (static_cast<std::size_t>(target.order()) > options.max_target_order)
            break; // degree too large to certify under the cap
        std::string description = "symmetric group of degree " + std::to_string(degree) +
                                  ", order " + std::to_string(target.order());
        EmbeddingCertificate cert{std::move(target), std::move(description),
                                  QuandleMap{std::move(*assignment)}, EmbedMethod::ConjSearch,
                                  degree};
        if (verify_certificate(q, cert)) {
            report.status = EmbedStatus::Embeddable;
            report.certificate = std::move(cert);
            return report;
        }
    }
    return report;
}

bool verify_certificate(const FiniteQuandle& q, const EmbeddingCertificate& certificate) {
    const int n = q.order();
    if (static_cast<int>(certificate.map.map.size()) != n)
        return false;
    for (int v : certificate.map.map)
        if (v < 0 || v >= certificate.target.order())
            return false;
    if (!certificate.map.is_injective())
        return false;
    LabeledQuandle conj = conj_quandle(certificate.target);
    return is_quandle_hom(certificate.map, q, conj.quandle);
}

} // namespace quandles
