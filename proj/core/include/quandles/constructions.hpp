#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quandles/finite_group.hpp"
#include "quandles/quandle.hpp"
#include "quandles/semidirect.hpp"

namespace quandles {

/// The (group, automorphism) pair a quandle was built from, when it was built
/// as a twisted conjugation quandle. Conjugation and Alexander quandles carry
/// this too, since both are twisted conjugation quandles (phi = id, resp.
/// abelian base). It is what lets the embeddability search use the semidirect
/// witness instead of a blind search.
struct TwistedConjProvenance {
    FiniteGroup group;
    GroupAutomorphism phi;
};

/// A quandle whose elements remember where they came from: labels[i] prints
/// element i (a group element index, or a "(g,m)" pair). Labels are distinct
/// and in bijection with 0..n-1.
struct LabeledQuandle {
    FiniteQuandle quandle;
    std::vector<std::string> labels;
    std::optional<TwistedConjProvenance> twisted_origin;
};

struct NotAbelian : std::runtime_error {
    explicit NotAbelian(const std::string& what) : std::runtime_error(what) {}
};

/// Conj(G): the set G under h*g = g^-1 h g (the first argument is conjugated).
LabeledQuandle conj_quandle(const FiniteGroup& g);

/// Alex(A, phi): an abelian group under g*h = phi(g) + h - phi(h), realized
/// on the multiplicative table. Throws NotAbelian for a nonabelian base and
/// std::invalid_argument for an invalid phi.
LabeledQuandle alexander_quandle(const FiniteGroup& a, const GroupAutomorphism& phi);

/// Conj(G, phi): the set G under g*h = phi(h^-1 g) h. Coincides with Conj(G)
/// for phi = id and with Alex(G, phi) for abelian G.
LabeledQuandle twisted_conj_quandle(const FiniteGroup& g, const GroupAutomorphism& phi);

/// The generalized Alexander quandle: g*h = phi(g h^-1) h. A different
/// construction from Conj(G, phi) despite the similar formula; for phi = id
/// it collapses to the trivial quandle.
LabeledQuandle generalized_alexander_quandle(const FiniteGroup& g, const GroupAutomorphism& phi);

// ---------------------------------------------------------------------------
// Embeddings of Conj(G, phi)
// ---------------------------------------------------------------------------

/// Outcome of checking g -> (g, 1) into Conj(G x|_phi Z): for every pair
/// (g, h) the conjugate of (g,1) by (h,1), computed through the semidirect
/// group operations, must equal (phi(h^-1 g) h, 1) computed directly from the
/// twisted operation. A mismatch can only mean an implementation bug.
struct SemidirectEmbedding {
    SemiZGroup group;
    int pairs_checked = 0;
    bool verified = false;
    std::optional<std::pair<int, int>> first_mismatch;
};

SemidirectEmbedding embed_into_semidirect(const FiniteGroup& g, const GroupAutomorphism& phi);

enum class EmbedMethod { InnerClosure, FiniteWitness, ConjSearch };

/// An embeddability certificate: an injective quandle homomorphism into the
/// conjugation quandle of a concrete finite group. Always re-checkable from
/// scratch via verify_certificate.
struct EmbeddingCertificate {
    FiniteGroup target;
    std::string target_description;
    QuandleMap map;
    EmbedMethod method = EmbedMethod::InnerClosure;
    int degree = 0; // permutation degree for InnerClosure / ConjSearch
};

/// The finite analogue of the semidirect embedding: with k the order of phi,
/// g -> (g, 1 mod k) embeds Conj(G, phi) into Conj(G x|_phi Z/k). The witness
/// group is fully validated and small enough to write out and re-check.
struct WitnessEmbedding {
    FiniteGroup witness;                      // G x|_phi (Z/k), order n*k
    std::vector<std::string> witness_labels;  // "(g,m)" per witness index
    int k = 1;
    EmbeddingCertificate certificate;
    bool verified = false;
    int pairs_checked = 0;
};

WitnessEmbedding embed_into_finite_witness(const FiniteGroup& g, const GroupAutomorphism& phi);

} // namespace quandles
