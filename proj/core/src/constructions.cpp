#include "quandles/constructions.hpp"

#include <string>

namespace quandles {

namespace {

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

void require_automorphism(const FiniteGroup& g, const GroupAutomorphism& phi) {
    if (!is_automorphism(g, phi.map))
        throw std::invalid_argument("phi is not an automorphism of the group");
}

int twisted_op(const FiniteGroup& g, const GroupAutomorphism& phi, int x, int y) {
    // phi(y^-1 x) y
    return g.mul(phi.apply(g.mul(g.inv(y), x)), y);
}

} // namespace

LabeledQuandle conj_quandle(const FiniteGroup& g) {
    const int n = g.order();
    Table t(n, std::vector<int>(n));
    for (int h = 0; h < n; ++h)
        for (int x = 0; x < n; ++x)
            t[h][x] = g.mul(g.mul(g.inv(x), h), x); // x^-1 h x
    return LabeledQuandle{check_quandle(std::move(t)), index_labels(n),
                          TwistedConjProvenance{g, identity_automorphism(n)}};
}

LabeledQuandle alexander_quandle(const FiniteGroup& a, const GroupAutomorphism& phi) {
    if (!is_abelian(a))
        throw NotAbelian("Alexander quandles need an abelian group");
    require_automorphism(a, phi);
    const int n = a.order();
    Table t(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            // phi(g) + h - phi(h), on the multiplicative table
            t[g][h] = a.mul(a.mul(phi.apply(g), h), a.inv(phi.apply(h)));
    return LabeledQuandle{check_quandle(std::move(t)), index_labels(n),
                          TwistedConjProvenance{a, phi}};
}

LabeledQuandle twisted_conj_quandle(const FiniteGroup& g, const GroupAutomorphism& phi) {
    require_automorphism(g, phi);
    const int n = g.order();
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = twisted_op(g, phi, x, y);
    return LabeledQuandle{check_quandle(std::move(t)), index_labels(n),
                          TwistedConjProvenance{g, phi}};
}

LabeledQuandle generalized_alexander_quandle(const FiniteGroup& g, const GroupAutomorphism& phi) {
    require_automorphism(g, phi);
    const int n = g.order();
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            // phi(x y^-1) y
            t[x][y] = g.mul(phi.apply(g.mul(x, g.inv(y))), y);
    return LabeledQuandle{check_quandle(std::move(t)), index_labels(n), std::nullopt};
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

SemidirectEmbedding embed_into_semidirect(const FiniteGroup& g, const GroupAutomorphism& phi) {
    SemiZGroup h(g, phi);
    const int n = g.order();

    SemidirectEmbedding report{h, 0, true, std::nullopt};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // Conjugation computed through the group operations of H ...
            SemiZElement lhs = h.conjugate(SemiZElement{a, 1}, SemiZElement{b, 1});
            // ... against the twisted operation evaluated directly in G.
            SemiZElement rhs{twisted_op(g, phi, a, b), 1};
            ++report.pairs_checked;
            if (!(lhs == rhs) && report.verified) {
                report.verified = false;
                report.first_mismatch = std::make_pair(a, b);
            }
        }
    // g -> (g,1) is injective on the nose; nothing to verify there.
    return report;
}

WitnessEmbedding embed_into_finite_witness(const FiniteGroup& g, const GroupAutomorphism& phi) {
    const int k = aut_order(phi);
    SemiCyclicGroup quotient = semi_cyclic(g, phi, k);
    FiniteGroup witness = build_finite_witness(g, phi, k);

    const int n = g.order();
    QuandleMap map;
    map.map.reserve(n);
    for (int x = 0; x < n; ++x)
        map.map.push_back(quotient.encode(x, 1 % k));

    EmbeddingCertificate certificate{
        witness,
        "semidirect witness of order " + std::to_string(witness.order()) + " (base order " +
            std::to_string(n) + ", Z/" + std::to_string(k) + " twist)",
        map, EmbedMethod::FiniteWitness, 0};

    WitnessEmbedding result{std::move(witness), quotient.element_labels(), k,
                            std::move(certificate), false, n * n};

    LabeledQuandle source = twisted_conj_quandle(g, phi);
    LabeledQuandle target = conj_quandle(result.witness);
    result.verified = map.is_injective() && is_quandle_hom(map, source.quandle, target.quandle);
    return result;
}

} // namespace quandles
