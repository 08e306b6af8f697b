// Command-line front end: constructions, embedding verification, enumeration
// and embeddability search over the text formats of quandles/io.hpp.
//
// Exit codes: 0 success, 1 semantic failure (axiom violation, failed
// verification, bad arguments to a construction), 2 parse/usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quandles/constructions.hpp"
#include "quandles/enveloping.hpp"
#include "quandles/errors.hpp"
#include "quandles/finite_group.hpp"
#include "quandles/io.hpp"
#include "quandles/quandle.hpp"

namespace fs = std::filesystem;
using namespace quandles;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

GroupAutomorphism resolve_phi(const FiniteGroup& g, const std::string& spec, int aut_bound) {
    if (spec == "id")
        return identity_automorphism(g.order());
    if (spec.rfind("aut:", 0) == 0) {
        std::size_t index = std::stoul(spec.substr(4));
        std::vector<GroupAutomorphism> all = automorphisms(g, aut_bound);
        if (index >= all.size())
            throw std::invalid_argument("bad automorphism: index " + std::to_string(index) +
                                        " out of range, group has " + std::to_string(all.size()) +
                                        " automorphisms");
        return all[index];
    }
    // explicit comma-separated permutation, e.g. 0,2,1
    Perm map;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ','))
        map.push_back(std::stoi(token));
    if (static_cast<int>(map.size()) != g.order() || !is_automorphism(g, map))
        throw std::invalid_argument("bad automorphism: '" + spec +
                                    "' is not an automorphism of the group");
    return GroupAutomorphism{map};
}

int run_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "parse error: cannot open " << path << "\n";
        return kExitParse;
    }
    std::string format = peek_format(in);
    if (format == "quandle") {
        Table t = parse_table(in, "quandle");
        if (auto defect = find_quandle_defect(t)) {
            std::cout << defect->describe() << "\n";
            std::cout << "RESULT: check FAIL\n";
            return kExitFail;
        }
        std::cout << "quandle of order " << t.size() << "\n";
    } else if (format == "group") {
        Table t = parse_table(in, "group");
        if (auto defect = find_group_defect(t)) {
            std::cout << defect->describe() << "\n";
            std::cout << "RESULT: check FAIL\n";
            return kExitFail;
        }
        std::cout << "group of order " << t.size() << "\n";
    } else {
        std::cerr << "parse error: line 1: unknown header '" << format << "'\n";
        return kExitParse;
    }
    std::cout << "PASS\n";
    std::cout << "RESULT: check PASS\n";
    return kExitPass;
}

int run_build(const std::string& kind, const std::string& group_path, const std::string& phi_spec,
              const std::string& out_path, const std::string& format, int aut_bound) {
    FiniteGroup g = read_group_file(group_path);
    GroupAutomorphism phi = resolve_phi(g, phi_spec, aut_bound);

    LabeledQuandle built;
    if (kind == "conj") {
        built = conj_quandle(g);
    } else if (kind == "alex") {
        built = alexander_quandle(g, phi);
    } else if (kind == "twisted") {
        built = twisted_conj_quandle(g, phi);
    } else if (kind == "genalex") {
        built = generalized_alexander_quandle(g, phi);
    } else {
        throw std::invalid_argument("unknown construction '" + kind + "'");
    }

    const bool phi_is_id = perm_is_identity(phi.map);
    if (kind == "twisted" && is_abelian(g))
        std::cout << "note: abelian base: twisted = alexander\n";
    if (kind == "twisted" && phi_is_id)
        std::cout << "note: phi = id: twisted = conj\n";
    if (kind == "alex" && phi_is_id)
        std::cout << "note: phi = id: alexander = trivial\n";
    if (kind == "genalex" && phi_is_id)
        std::cout << "note: phi = id: generalized alexander = trivial\n";

    if (out_path.empty()) {
        if (format == "presentation")
            write_presentation(std::cout, as_presentation(built.quandle));
        else
            write_quandle(std::cout, built.quandle);
    } else {
        if (format == "presentation")
            write_presentation_file(out_path, as_presentation(built.quandle));
        else
            write_quandle_file(out_path, built.quandle);
    }
    std::cout << "RESULT: build " << kind << " order=" << built.quandle.order() << " out="
              << (out_path.empty() ? "-" : out_path) << "\n";
    return kExitPass;
}

int run_embed(const std::string& group_path, const std::string& phi_spec, const std::string& mode,
              const std::string& out_path, int aut_bound) {
    FiniteGroup g = read_group_file(group_path);
    GroupAutomorphism phi = resolve_phi(g, phi_spec, aut_bound);
    const int n = g.order();

    if (mode == "symbolic") {
        SemidirectEmbedding report = embed_into_semidirect(g, phi);
        std::cout << report.pairs_checked << "/" << n * n << " pairs verified\n";
        std::cout << "map: g -> (g,1) into G x| Z\n";
        if (!report.verified) {
            auto [a, b] = *report.first_mismatch;
            std::cout << "mismatch at pair (" << a << "," << b << ")\n";
            std::cout << "RESULT: embed symbolic FAILED\n";
            return kExitFail;
        }
        std::cout << "RESULT: embed symbolic VERIFIED pairs=" << report.pairs_checked << "\n";
        return kExitPass;
    }
    if (mode == "finite") {
        WitnessEmbedding witness = embed_into_finite_witness(g, phi);
        std::cout << "witness order " << witness.witness.order() << " (k=" << witness.k << ")\n";
        for (int x = 0; x < n; ++x)
            std::cout << "map: " << x << " -> " << witness.certificate.map.map[x] << " = "
                      << witness.witness_labels[witness.certificate.map.map[x]] << "\n";
        if (!out_path.empty())
            write_group_file(out_path, witness.witness);
        if (!witness.verified) {
            std::cout << "RESULT: embed finite FAILED\n";
            return kExitFail;
        }
        std::cout << "RESULT: embed finite VERIFIED order=" << witness.witness.order()
                  << " k=" << witness.k << " out=" << (out_path.empty() ? "-" : out_path) << "\n";
        return kExitPass;
    }
    throw std::invalid_argument("mode must be 'symbolic' or 'finite'");
}

int run_search(const std::string& quandle_path, int max_degree, long long budget) {
    FiniteQuandle q = read_quandle_file(quandle_path);
    SearchOptions options;
    options.max_degree = max_degree;
    options.node_budget = budget;
    EmbeddabilityReport report = search_embedding(q, options);

    if (report.status == EmbedStatus::Embeddable) {
        const EmbeddingCertificate& cert = *report.certificate;
        if (!verify_certificate(q, cert)) {
            std::cout << "RESULT: search INVALID-CERTIFICATE\n";
            return kExitFail;
        }
        const char* method = cert.method == EmbedMethod::InnerClosure    ? "inner"
                             : cert.method == EmbedMethod::FiniteWitness ? "witness"
                                                                         : "conj-search";
        std::cout << "EMBEDDABLE via " << method << ", target: " << cert.target_description
                  << "\n";
        std::cout << "RESULT: search EMBEDDABLE method=" << method << " degree=" << cert.degree
                  << " target_order=" << cert.target.order() << "\n";
        return kExitPass;
    }
    std::cout << "UNKNOWN: no certificate within degree " << max_degree << " and "
              << report.nodes_used << " nodes; this does not assert non-embeddability\n";
    std::cout << "RESULT: search UNKNOWN max_degree=" << max_degree
              << " nodes=" << report.nodes_used << "\n";
    return kExitPass;
}

int run_enumerate(int n, const std::string& out_dir, int bound) {
    std::vector<FiniteQuandle> classes = enumerate_quandles(n, bound);
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::ostringstream name;
        name << "q" << n << "_" << i << ".quandle";
        write_quandle_file(fs::path(out_dir) / name.str(), classes[i]);
    }
    std::cout << classes.size() << " isomorphism classes of order " << n << "\n";
    std::cout << "RESULT: enumerate n=" << n << " classes=" << classes.size() << "\n";
    return kExitPass;
}

int run_homs(const std::string& domain_path, const std::string& codomain_path, bool injective,
             long long limit) {
    FiniteQuandle domain = read_quandle_file(domain_path);
    FiniteQuandle codomain = read_quandle_file(codomain_path);
    HomSearchOptions options;
    options.injective_only = injective;
    if (limit > 0)
        options.limit = static_cast<std::size_t>(limit);
    std::vector<QuandleMap> homs = find_homs(domain, codomain, options);
    for (const QuandleMap& f : homs) {
        for (std::size_t i = 0; i < f.map.size(); ++i)
            std::cout << (i ? " " : "") << f.map[i];
        std::cout << "\n";
    }
    std::cout << "RESULT: homs count=" << homs.size() << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quandles: constructions, group embeddings, enumeration"};
    app.require_subcommand(1);

    std::string path, group_path, quandle_path, codomain_path, phi_spec = "id";
    std::string kind, mode = "symbolic", out_path, format = "table", out_dir = ".";
    int max_degree = 6, enum_bound = 5, aut_bound = 24, order = 1;
    long long budget = 1'000'000, limit = 0;
    bool injective = false;

    CLI::App* check = app.add_subcommand("check", "validate a group or quandle file");
    check->add_option("file", path, "input file")->required();

    CLI::App* build = app.add_subcommand("build", "build a quandle from a group");
    build->add_option("kind", kind, "conj | alex | twisted | genalex")->required();
    build->add_option("group", group_path, "group file")->required();
    build->add_option("phi", phi_spec, "id | aut:<i> | explicit permutation 0,2,1");
    build->add_option("--out", out_path, "output file (default: stdout)");
    build->add_option("--format", format, "table | presentation");
    build->add_option("--bound", aut_bound, "automorphism enumeration cap");

    CLI::App* embed = app.add_subcommand("embed", "embed Conj(G,phi) into a conjugation quandle");
    embed->add_option("group", group_path, "group file")->required();
    embed->add_option("phi", phi_spec, "id | aut:<i> | explicit permutation");
    embed->add_option("mode", mode, "symbolic | finite");
    embed->add_option("--out", out_path, "witness group file (finite mode)");
    embed->add_option("--bound", aut_bound, "automorphism enumeration cap");

    CLI::App* search = app.add_subcommand("search", "embeddability semidecision for a quandle");
    search->add_option("file", quandle_path, "quandle file")->required();
    search->add_option("--max-degree", max_degree, "largest symmetric-group degree tried");
    search->add_option("--budget", budget, "backtracking node budget");

    CLI::App* enumerate = app.add_subcommand("enumerate", "quandles of order n up to isomorphism");
    enumerate->add_option("n", order, "order")->required();
    enumerate->add_option("--out", out_dir, "output directory");
    enumerate->add_option("--bound", enum_bound, "enumeration order cap");

    CLI::App* homs = app.add_subcommand("homs", "list quandle homomorphisms");
    homs->add_option("domain", quandle_path, "domain quandle file")->required();
    homs->add_option("codomain", codomain_path, "codomain quandle file")->required();
    homs->add_flag("--injective", injective, "injective homomorphisms only");
    homs->add_option("--limit", limit, "stop after this many");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitParse;
    }

    try {
        if (app.got_subcommand(check))
            return run_check(path);
        if (app.got_subcommand(build))
            return run_build(kind, group_path, phi_spec, out_path, format, aut_bound);
        if (app.got_subcommand(embed))
            return run_embed(group_path, phi_spec, mode, out_path, aut_bound);
        if (app.got_subcommand(search))
            return run_search(quandle_path, max_degree, budget);
        if (app.got_subcommand(enumerate))
            return run_enumerate(order, out_dir, enum_bound);
        if (app.got_subcommand(homs))
            return run_homs(quandle_path, codomain_path, injective, limit);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitParse;
}
