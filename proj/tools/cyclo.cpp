// Command-line front end for the cyclopermutohedron toolkit: build the
// complexes, compute homology, inspect the Morse data, run the linkage
// models, and replay the verification bundle.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclo/bicyclopermutohedron.hpp"
#include "cyclo/cp_morse.hpp"
#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/homology.hpp"
#include "cyclo/linkage.hpp"
#include "cyclo/verify.hpp"

namespace {

using namespace cyclo;

CellComplex build_target(const std::string& target, int n, bool allow_large) {
    BuildOptions options;
    options.allow_large = allow_large;
    if (target == "cp") return build_cp(n, options);
    return build_qp(n, options);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    file << text << '\n';
}

std::string torsion_string(const std::vector<long long>& torsion) {
    if (torsion.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(torsion[i]);
    }
    return out;
}

void print_homology_table(const HomologyResult& h, const std::string& format, bool mod2_only) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t d = 0; d < h.dims.size(); ++d) {
            nlohmann::json row;
            row["dim"] = d;
            if (!mod2_only) {
                row["betti"] = h.dims[d].betti;
                row["torsion"] = h.dims[d].torsion;
            }
            row["betti_mod2"] = h.dims[d].betti_mod2;
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << (mod2_only ? "dim,betti_mod2\n" : "dim,betti,torsion,betti_mod2\n");
        for (std::size_t d = 0; d < h.dims.size(); ++d) {
            if (mod2_only)
                std::cout << d << ',' << h.dims[d].betti_mod2 << '\n';
            else
                std::cout << d << ',' << h.dims[d].betti << ',' << torsion_string(h.dims[d].torsion)
                          << ',' << h.dims[d].betti_mod2 << '\n';
        }
        return;
    }
    if (mod2_only) {
        std::cout << std::left << std::setw(5) << "dim" << "betti_mod2\n";
        for (std::size_t d = 0; d < h.dims.size(); ++d)
            std::cout << std::left << std::setw(5) << d << h.dims[d].betti_mod2 << '\n';
        return;
    }
    std::size_t torsion_width = 8;
    for (const auto& dim : h.dims)
        torsion_width = std::max(torsion_width, torsion_string(dim.torsion).size() + 2);
    std::cout << std::left << std::setw(5) << "dim" << std::setw(8) << "betti"
              << std::setw(static_cast<int>(torsion_width)) << "torsion" << "betti_mod2\n";
    for (std::size_t d = 0; d < h.dims.size(); ++d)
        std::cout << std::left << std::setw(5) << d << std::setw(8) << h.dims[d].betti
                  << std::setw(static_cast<int>(torsion_width))
                  << torsion_string(h.dims[d].torsion) << h.dims[d].betti_mod2 << '\n';
}

HomologyResult mod2_result(const ChainComplex& cc) {
    HomologyResult h;
    const auto betti2 = homology_mod2(cc);
    h.dims.resize(betti2.size());
    for (std::size_t d = 0; d < betti2.size(); ++d) {
        h.dims[d].cells = cc.cell_count(static_cast<int>(d));
        h.dims[d].betti_mod2 = betti2[d];
    }
    return h;
}

void run_morse(const CellComplex& complex, const Matching& matching, bool emit_paths) {
    const MatchingIndex mi(complex.chain, matching);
    const auto critical = mi.critical_by_dim();
    std::cout << "critical cells per dimension:\n";
    for (std::size_t d = 0; d < critical.size(); ++d) {
        std::cout << "  dim " << d << ": " << critical[d].size();
        if (!critical[d].empty()) {
            std::cout << "  [";
            for (std::size_t k = 0; k < critical[d].size(); ++k) {
                if (k) std::cout << ' ';
                std::cout << complex.chain.cell_id(static_cast<int>(d), critical[d][k]);
            }
            std::cout << ']';
        }
        std::cout << '\n';
    }

    std::cout << "gradient path counts between critical cells:\n";
    for (int d = 1; d <= complex.chain.top_dim(); ++d) {
        const auto agg = gradient_path_aggregates(complex.chain, mi, d - 1);
        for (std::int64_t tau : critical[static_cast<std::size_t>(d)]) {
            std::map<std::int64_t, PathAggregate> totals;
            for (std::int64_t a : complex.chain.facets(d, tau))
                for (const auto& [target, sub] : agg[static_cast<std::size_t>(a)]) {
                    totals[target].count += sub.count;
                    totals[target].weight += sub.weight;
                }
            for (const auto& [sigma, total] : totals) {
                if (total.count == 0) continue;
                std::cout << "  " << complex.chain.cell_id(d, tau) << " -> "
                          << complex.chain.cell_id(d - 1, sigma) << ": " << total.count << '\n';
                if (!emit_paths) continue;
                for (std::int64_t a : complex.chain.facets(d, tau))
                    for (const auto& path :
                         enumerate_gradient_paths(complex.chain, matching, d - 1, a, sigma)) {
                        nlohmann::json j;
                        j["dim"] = d - 1;
                        j["from"] = complex.chain.cell_id(d - 1, a);
                        j["to"] = complex.chain.cell_id(d - 1, sigma);
                        nlohmann::json cells = nlohmann::json::array();
                        for (std::size_t k = 0; k < path.cells.size(); ++k)
                            cells.push_back(complex.chain.cell_id(
                                k % 2 ? d : d - 1, path.cells[k]));
                        j["cells"] = std::move(cells);
                        j["weight"] = path_weight(complex.chain, path);
                        std::cout << j.dump() << '\n';
                    }
            }
        }
    }

    const MorseComplex morse = morse_boundary(complex.chain, matching);
    std::cout << "Morse boundary matrices:\n";
    for (int d = 1; d <= complex.chain.top_dim(); ++d) {
        const auto& b = morse.boundary[static_cast<std::size_t>(d)];
        std::cout << "  dim " << d << " -> " << d - 1 << " (" << b.rows() << " x " << b.cols()
                  << ")";
        if (b.is_zero()) {
            std::cout << ": zero\n";
            continue;
        }
        std::cout << ":\n";
        for (const auto& t : b.triplets())
            std::cout << "    <" << morse.ids[static_cast<std::size_t>(d)][static_cast<std::size_t>(t.col)]
                      << ", " << morse.ids[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(t.row)]
                      << "> = " << t.value << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclopermutohedron / bi-cyclopermutohedron toolkit"};
    app.require_subcommand(1);

    std::string target = "cp", out_path, format = "text", coeff = "z", lengths_text;
    int n = 4;
    bool allow_large = false, emit_paths = false, reduced = false, with_homology = false;
    std::uint64_t seed = 12345;
    int samples = 200;
    int max_n = -1;

    auto* build = app.add_subcommand("build", "build a complex and emit its JSON");
    build->add_option("target", target, "cp or qp")->check(CLI::IsMember({"cp", "qp"}));
    build->add_option("--n", n, "ground set is {1,...,n+1}")->required();
    build->add_flag("--allow-large", allow_large, "override the resource guard");
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* homology = app.add_subcommand("homology", "homology table of a complex");
    homology->add_option("target", target, "cp or qp")->check(CLI::IsMember({"cp", "qp"}));
    homology->add_option("--n", n)->required();
    homology->add_option("--coeff", coeff, "z or z2")->check(CLI::IsMember({"z", "z2"}));
    homology->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    homology->add_flag("--allow-large", allow_large);

    auto* morse = app.add_subcommand("morse", "critical cells, path counts, Morse boundaries");
    morse->add_option("target", target, "cp or qp")->check(CLI::IsMember({"cp", "qp"}));
    morse->add_option("--n", n)->required();
    morse->add_flag("--emit-paths", emit_paths, "dump each gradient path as a JSON line");
    morse->add_flag("--allow-large", allow_large);

    auto* linkage = app.add_subcommand("linkage", "polygon moduli space complexes");
    linkage->add_option("--lengths", lengths_text, "side lengths, e.g. 1,1,1,1,1 or 3/2,1,1,1")
        ->required();
    linkage->add_flag("--reduced", reduced, "quotient by the reflection");
    linkage->add_flag("--homology", with_homology, "print the homology table");
    linkage->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run the verification bundle");
    verify->add_option("target", target, "cp, qp or all")
        ->check(CLI::IsMember({"cp", "qp", "all"}));
    verify->add_option("--max-n", max_n, "verify n = 3..max-n (default 5)");
    verify->add_option("--n", n, "verify a single n");
    verify->add_option("--seed", seed, "seed for randomized sweeps");
    verify->add_option("--samples", samples, "good-triple samples per n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) {
            write_output(build_target(target, n, allow_large).chain.to_json(), out_path);
            return 0;
        }
        if (homology->parsed()) {
            const CellComplex complex = build_target(target, n, allow_large);
            if (coeff == "z2")
                print_homology_table(mod2_result(complex.chain), format, true);
            else
                print_homology_table(homology_z(complex.chain), format, false);
            return 0;
        }
        if (morse->parsed()) {
            const CellComplex cp = build_cp(n, {.max_n = 8, .allow_large = allow_large});
            const Matching cp_matching = build_cp_matching(cp);
            if (target == "cp") {
                run_morse(cp, cp_matching, emit_paths);
            } else {
                const CellComplex qp = build_qp(cp);
                run_morse(qp, build_qp_matching(cp, cp_matching, qp), emit_paths);
            }
            return 0;
        }
        if (linkage->parsed()) {
            const LengthVector lv = parse_lengths(lengths_text);
            const CellComplex complex = reduced ? build_reduced_moduli(lv) : build_moduli_complex(lv);
            std::cout << (reduced ? "reduced moduli" : "moduli") << " complex: cells per dim (";
            for (int d = 0; d <= complex.chain.top_dim(); ++d) {
                if (d) std::cout << ", ";
                std::cout << complex.chain.cell_count(d);
            }
            std::cout << "), euler " << complex.chain.euler_characteristic() << '\n';
            if (with_homology) print_homology_table(homology_z(complex.chain), format, false);
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions options;
            options.seed = seed;
            options.good_triple_samples = samples;
            options.cp = target != "qp";
            options.qp = target != "cp";
            if (verify->count("--n")) options.min_n = options.max_n = n;
            if (max_n >= 0) options.max_n = max_n;
            return run_verify(std::cout, options) ? 0 : 1;
        }
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
