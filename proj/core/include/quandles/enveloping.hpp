#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quandles/constructions.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

/// One defining relation of the associated group: e_y^-1 e_x e_y = e_z,
/// with z = x*y. Relations with x = y read e_x^-1 e_x e_x = e_x and are
/// flagged redundant but kept, so there is exactly one relation per ordered
/// pair.
struct QuandleRelation {
    int x, y, z;
    bool redundant;

    bool operator==(const QuandleRelation& rhs) const {
        return x == rhs.x && y == rhs.y && z == rhs.z && redundant == rhs.redundant;
    }
};

/// The associated group As(Q), as presentation data only: one generator e_x
/// per element and n^2 conjugation relations. As(Q) is infinite (it surjects
/// onto Z), so no word-problem machinery lives here; the embeddability
/// criterion below makes it unnecessary.
struct QuandlePresentation {
    int generator_count = 0;
    std::vector<QuandleRelation> relations;
};

QuandlePresentation as_presentation(const FiniteQuandle& q);

// ---------------------------------------------------------------------------
// Embeddability
// ---------------------------------------------------------------------------

/// The inner certificate: if the column maps S_x are pairwise distinct, then
/// x -> S_x is an injective quandle homomorphism into the conjugation quandle
/// of the permutation group they generate (a subgroup of Sym(Q)), because
/// S_{x*y} = S_y^-1 S_x S_y. Returns nullopt when two columns coincide.
/// Throws BoundExceeded if the generated group outgrows max_target_order.
std::optional<EmbeddingCertificate> inner_certificate(const FiniteQuandle& q,
                                                      std::size_t max_target_order = 4096);

enum class EmbedStatus { Embeddable, Unknown };

struct SearchOptions {
    int max_degree = 6;                   // highest Sym(d) tried in the blind search
    long long node_budget = 1'000'000;    // total backtracking nodes across degrees
    std::size_t max_target_order = 4096;  // cap on materialized certificate groups
    std::optional<TwistedConjProvenance> twisted_origin; // enables the witness step
};

/// Semidecision result. Unknown never asserts non-embeddability: it only
/// says the bounded search gave up.
struct EmbeddabilityReport {
    EmbedStatus status = EmbedStatus::Unknown;
    std::optional<EmbeddingCertificate> certificate;
    int max_degree_tried = 0;
    long long nodes_used = 0;
};

/// Tries, in order of cost:
///   (a) the inner certificate;
///   (b) when the quandle carries twisted-conjugation provenance, the
///       semidirect finite witness, which always succeeds for such quandles;
///   (c) backtracking search for an injective assignment x -> sigma_x of
///       permutations of degree d = 2..max_degree with
///       sigma_y^-1 sigma_x sigma_y = sigma_{x*y}, i.e. an injective
///       homomorphism into Conj(Sym(d)).
/// Every certificate is verified before being reported.
EmbeddabilityReport search_embedding(const FiniteQuandle& q, const SearchOptions& options = {});

/// Independently rebuilds the conjugation quandle of the certificate's target
/// group and re-checks the map: a quandle homomorphism, and injective.
bool verify_certificate(const FiniteQuandle& q, const EmbeddingCertificate& certificate);

} // namespace quandles
