// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria cover the axiom sweep over the fixture groups,
// the semidirect embedding identity, the finite witnesses, the coincidence
// laws, the enumeration and hom-count oracles, the embeddability corollary
// and the column conjugation identity.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "quandles/constructions.hpp"
#include "quandles/enveloping.hpp"
#include "quandles/finite_group.hpp"
#include "quandles/quandle.hpp"
#include "quandles/semidirect.hpp"

#include "test_oracles.hpp"

using namespace quandles;

namespace {

struct Fixture {
    std::string name;
    FiniteGroup group;
};

struct FixturePair {
    std::string name;
    FiniteGroup group;
    GroupAutomorphism phi;
};

std::vector<Fixture> fixture_groups() {
    std::vector<Fixture> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    out.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
    out.push_back({"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))});
    out.push_back({"S3", symmetric_group(3)});
    out.push_back({"D4", dihedral_group(4)});
    out.push_back({"Q8", quaternion_group()});
    return out;
}

std::vector<FixturePair> fixture_pairs() {
    std::vector<FixturePair> out;
    for (const Fixture& f : fixture_groups()) {
        std::vector<GroupAutomorphism> auts = automorphisms(f.group);
        for (std::size_t i = 0; i < auts.size(); ++i)
            out.push_back({f.name + "/aut" + std::to_string(i), f.group, auts[i]});
    }
    return out;
}

// Quandles produced anywhere in the suite, re-examined by criterion 8.
std::vector<FiniteQuandle>& registry() {
    static std::vector<FiniteQuandle> quandles;
    return quandles;
}

void track(const FiniteQuandle& q) {
    registry().push_back(q);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& details) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                details.c_str());
    if (!pass)
        ++failures;
}

// 1. every construction output over the fixture pairs satisfies the axioms
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    int checked = 0, failed = 0;
    for (const FixturePair& p : fixture_pairs()) {
        std::vector<FiniteQuandle> built;
        built.push_back(conj_quandle(p.group).quandle);
        built.push_back(twisted_conj_quandle(p.group, p.phi).quandle);
        built.push_back(generalized_alexander_quandle(p.group, p.phi).quandle);
        if (is_abelian(p.group))
            built.push_back(alexander_quandle(p.group, p.phi).quandle);
        for (const FiniteQuandle& q : built) {
            ++checked;
            track(q);
            if (find_quandle_defect(q.table(), AxiomCheck::Extended))
                ++failed;
        }
    }
    double elapsed = seconds_since(start);
    bool pass = failed == 0 && elapsed < 10.0;
    char details[128];
    std::snprintf(details, sizeof details, "%d quandles checked, %d failures, %.2fs", checked,
                  failed, elapsed);
    report(1, "axiom suite over all fixture pairs", pass, details);
}

// 2. the conjugation identity (g,1)*(h,1) = (phi(h^-1 g)h, 1) over all pairs
void criterion2() {
    int pairs = 0, mismatches = 0;
    for (const FixturePair& p : fixture_pairs()) {
        SemidirectEmbedding e = embed_into_semidirect(p.group, p.phi);
        pairs += e.pairs_checked;
        if (!e.verified)
            ++mismatches;
    }
    char details[128];
    std::snprintf(details, sizeof details, "%d group pairs, %d mismatches", pairs, mismatches);
    report(2, "semidirect embedding identity", mismatches == 0, details);
}

// 3. finite witnesses validate and certify; the (Z/3, negation) witness is S3
void criterion3() {
    int witnesses = 0, failed = 0;
    for (const FixturePair& p : fixture_pairs()) {
        WitnessEmbedding w = embed_into_finite_witness(p.group, p.phi);
        ++witnesses;
        bool ok = w.verified;
        try {
            ok = ok && check_group(w.witness.table()).order() == w.witness.order();
        } catch (const GroupError&) {
            ok = false;
        }
        ok = ok && verify_certificate(twisted_conj_quandle(p.group, p.phi).quandle,
                                      w.certificate);
        if (!ok)
            ++failed;
    }

    GroupAutomorphism negation{{0, 2, 1}};
    WitnessEmbedding special = embed_into_finite_witness(cyclic_group(3), negation);
    bool s3_witness =
        special.witness.order() == 6 &&
        test_oracle::group_iso_bruteforce(special.witness, symmetric_group(3)).has_value();

    char details[160];
    std::snprintf(details, sizeof details,
                  "%d witnesses validated, %d failures; (Z3,neg) witness %s S3", witnesses,
                  failed, s3_witness ? "isomorphic to" : "NOT isomorphic to");
    report(3, "finite witness verification", failed == 0 && s3_witness, details);
}

// 4. coincidence laws as exact table equalities, plus one strict inequality
void criterion4() {
    int checks = 0, failed = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok)
            ++failed;
    };
    for (const Fixture& f : fixture_groups()) {
        GroupAutomorphism id = identity_automorphism(f.group.order());
        expect(twisted_conj_quandle(f.group, id).quandle == conj_quandle(f.group).quandle);
        expect(generalized_alexander_quandle(f.group, id).quandle ==
               trivial_quandle(f.group.order()));
    }
    for (const FixturePair& p : fixture_pairs())
        if (is_abelian(p.group))
            expect(twisted_conj_quandle(p.group, p.phi).quandle ==
                   alexander_quandle(p.group, p.phi).quandle);

    FiniteGroup s3 = symmetric_group(3);
    GroupAutomorphism id6 = identity_automorphism(6);
    expect(twisted_conj_quandle(s3, id6).quandle !=
           generalized_alexander_quandle(s3, id6).quandle);

    char details[96];
    std::snprintf(details, sizeof details, "%d equalities checked, %d failures", checks, failed);
    report(4, "coincidence laws", failed == 0, details);
}

// 5. enumeration counts 1, 1, 3, 7 confirmed by the independent oracles
void criterion5() {
    auto start = std::chrono::steady_clock::now();
    const int expected[4] = {1, 1, 3, 7};
    bool pass = true;
    std::string counts;
    for (int n = 1; n <= 4; ++n) {
        std::vector<FiniteQuandle> classes = enumerate_quandles(n);
        for (const FiniteQuandle& q : classes)
            track(q);

        std::vector<Table> labeled = n <= 3 ? test_oracle::labeled_quandles_naive(n)
                                            : test_oracle::labeled_quandles_by_columns(n);
        int oracle_classes = test_oracle::count_classes_by_relabeling(labeled);

        pass = pass && static_cast<int>(classes.size()) == expected[n - 1] &&
               oracle_classes == expected[n - 1];
        counts += (n > 1 ? ", " : "") + std::to_string(classes.size()) + "/" +
                  std::to_string(oracle_classes);
    }
    // the two oracle orderings agree where both are feasible
    pass = pass && test_oracle::count_classes_by_relabeling(
                       test_oracle::labeled_quandles_by_columns(3)) == 3;

    double elapsed = seconds_since(start);
    pass = pass && elapsed < 120.0;
    char details[160];
    std::snprintf(details, sizeof details, "main/oracle classes: %s; %.2fs", counts.c_str(),
                  elapsed);
    report(5, "enumeration against the naive oracle", pass, details);
}

// 6. hom count on the dihedral quandle equals the brute-force filter
void criterion6() {
    FiniteQuandle d3 = alexander_quandle(cyclic_group(3), GroupAutomorphism{{0, 2, 1}}).quandle;
    std::size_t fast = find_homs(d3, d3).size();
    long long slow = test_oracle::count_homs_bruteforce(d3, d3);
    char details[96];
    std::snprintf(details, sizeof details, "find_homs %zu, brute force %lld, expected 9", fast,
                  slow);
    report(6, "hom-count oracle", fast == 9 && slow == 9, details);
}

// 7. twisted conjugation quandles always certify, without the blind search;
//    inner-certificate quandles certify; every certificate re-verifies
void criterion7() {
    int searched = 0, failed = 0;
    for (const FixturePair& p : fixture_pairs()) {
        LabeledQuandle q = twisted_conj_quandle(p.group, p.phi);
        SearchOptions options;
        options.twisted_origin = q.twisted_origin;
        EmbeddabilityReport r = search_embedding(q.quandle, options);
        ++searched;
        bool ok = r.status == EmbedStatus::Embeddable &&
                  r.certificate->method != EmbedMethod::ConjSearch &&
                  verify_certificate(q.quandle, *r.certificate);
        if (!ok)
            ++failed;
    }

    int enumerated = 0, enumerated_failed = 0;
    for (int n = 1; n <= 4; ++n)
        for (const FiniteQuandle& q : enumerate_quandles(n)) {
            EmbeddabilityReport r = search_embedding(q);
            ++enumerated;
            bool has_inner = inner_certificate(q).has_value();
            if (has_inner && r.status != EmbedStatus::Embeddable)
                ++enumerated_failed;
            if (r.status == EmbedStatus::Embeddable &&
                !verify_certificate(q, *r.certificate))
                ++enumerated_failed;
        }

    char details[160];
    std::snprintf(details, sizeof details,
                  "%d twisted quandles certified, %d failures; %d enumerated searched, %d "
                  "failures",
                  searched, failed, enumerated, enumerated_failed);
    report(7, "embeddability corollary", failed == 0 && enumerated_failed == 0, details);
}

// 8. S_{x*y} = S_y^-1 S_x S_y on every quandle the suite produced
void criterion8() {
    long long checked = 0, failed = 0;
    for (const FiniteQuandle& q : registry()) {
        const int n = q.order();
        std::vector<Perm> col(n), col_inv(n);
        for (int y = 0; y < n; ++y) {
            col[y] = q.column(y);
            col_inv[y] = perm_inverse(col[y]);
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                ++checked;
                if (perm_compose(perm_compose(col_inv[y], col[x]), col[y]) != col[q.op(x, y)])
                    ++failed;
            }
    }
    char details[128];
    std::snprintf(details, sizeof details,
                  "%lld column identities over %zu quandles, %lld failures", checked,
                  registry().size(), failed);
    report(8, "column conjugation identity", failed == 0 && !registry().empty(), details);
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%s: %d/8 criteria passed in %.2fs\n", failures == 0 ? "OK" : "FAILED",
                8 - failures, seconds_since(start));
    return failures;
}
