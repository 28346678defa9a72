#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "treelab/covers.hpp"
#include "treelab/extremal.hpp"
#include "treelab/harness.hpp"
#include "treelab/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitViolation = 3;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

treelab::Graph load_graph(const std::string& graph6, const std::string& edges_path) {
    if (!graph6.empty()) return treelab::parse_graph6(graph6);
    std::ifstream in(edges_path);
    if (!in) throw treelab::ParseError("cannot open edge list: " + edges_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return treelab::parse_edge_list(buf.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree cover laboratory"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "parameters of one graph");
    std::string graph6;
    std::string edges_path;
    std::string params = "n,m,T";
    auto* g6_opt = compute->add_option("--graph6", graph6, "graph6 string");
    compute->add_option("--edges", edges_path, "edge list file: first line n, then 'u v' lines")
        ->excludes(g6_opt);
    compute->add_option("--params", params, "comma-separated parameter list");

    // verify
    auto* verify = app.add_subcommand("verify", "check theorems over enumerated graphs");
    std::string theorems = "all";
    int nmax = 6;
    std::string out_path;
    verify->add_option("--theorems", theorems, "comma-separated theorem ids, or 'all'");
    verify->add_option("--nmax", nmax, "largest graph order per theorem");
    verify->add_option("--out", out_path, "write the JSON report here as well");

    // scan
    auto* scan = app.add_subcommand("scan", "conjecture scans (findings, not failures)");
    std::string family = "triangle-free";
    int scan_nmax = 6;
    scan->add_option("--family", family, "scan family (triangle-free)");
    scan->add_option("--nmax", scan_nmax, "largest graph order");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
    std::string gen_family;
    std::uint64_t seed = 0;
    int blocks = 1, blocks2 = 1, k3 = 0, k = 3, n = 4, r = 3;
    std::string even_case = "chain", core = "C4";
    gen->add_option("--family", gen_family,
                    "F | even-extremal | friendship | ktree | cycle-triangle")
        ->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--blocks", blocks, "triangles (F, even-extremal)");
    gen->add_option("--blocks2", blocks2, "triangles of the second F part (even-extremal bridge)");
    gen->add_option("--case", even_case, "even-extremal case: leaf | bridge | chain");
    gen->add_option("--core", core, "chain core: C4 | K4-e | cycle-triangle");
    gen->add_option("--k3", k3, "triangles attached to the core (even-extremal chain)");
    gen->add_option("--k", k, "k (friendship, ktree)");
    gen->add_option("--n", n, "order (ktree)");
    gen->add_option("--r", r, "cycle length (cycle-triangle, chain core)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            if (graph6.empty() && edges_path.empty()) {
                std::cerr << "compute: one of --graph6 / --edges is required\n";
                return kExitUsage;
            }
            const treelab::Graph g = load_graph(graph6, edges_path);
            std::cout << treelab::compute_params(g, split_list(params)).dump(2) << '\n';
            return kExitOk;
        }
        if (verify->parsed()) {
            const std::vector<std::string> ids =
                theorems == "all" ? treelab::known_theorems() : split_list(theorems);
            const auto reports = treelab::verify_theorems(ids, nmax);
            nlohmann::json j = nlohmann::json::array();
            bool violated = false;
            for (const auto& report : reports) {
                j.push_back(treelab::report_json(report));
                violated = violated || !report.violations.empty();
            }
            std::cout << j.dump(2) << '\n';
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << j.dump(2) << '\n';
            }
            return violated ? kExitViolation : kExitOk;
        }
        if (scan->parsed()) {
            if (family != "triangle-free") {
                std::cerr << "scan: unknown family '" << family << "'\n";
                return kExitUsage;
            }
            const auto report = treelab::scan_conjecture_triangle_free(scan_nmax);
            std::cout << treelab::report_json(report).dump(2) << '\n';
            return kExitOk; // findings, not failures
        }
        if (gen->parsed()) {
            treelab::Graph g;
            if (gen_family == "F") {
                g = treelab::generate_family_F(blocks, seed);
            } else if (gen_family == "even-extremal") {
                treelab::EvenExtremalSpec spec;
                spec.f_blocks = blocks;
                spec.f_blocks2 = blocks2;
                spec.k3_count = k3;
                spec.cycle_length = r;
                if (even_case == "leaf") {
                    spec.kind = treelab::ExtremalClass::Kind::EvenLeafOnF;
                } else if (even_case == "bridge") {
                    spec.kind = treelab::ExtremalClass::Kind::EvenBridgeOfTwoF;
                } else if (even_case == "chain") {
                    spec.kind = treelab::ExtremalClass::Kind::EvenK3Chain;
                } else {
                    std::cerr << "gen: unknown case '" << even_case << "'\n";
                    return kExitUsage;
                }
                if (core == "C4") {
                    spec.core = treelab::ExtremalClass::Core::C4;
                } else if (core == "K4-e") {
                    spec.core = treelab::ExtremalClass::Core::K4MinusE;
                } else if (core == "cycle-triangle") {
                    spec.core = treelab::ExtremalClass::Core::CycleTriangle;
                } else {
                    std::cerr << "gen: unknown core '" << core << "'\n";
                    return kExitUsage;
                }
                g = treelab::generate_even_extremal(spec, seed);
            } else if (gen_family == "friendship") {
                g = treelab::generate_friendship(k);
            } else if (gen_family == "ktree") {
                g = treelab::generate_k_tree(k, n, seed);
            } else if (gen_family == "cycle-triangle") {
                g = treelab::generate_cycle_triangle(r);
            } else {
                std::cerr << "gen: unknown family '" << gen_family << "'\n";
                return kExitUsage;
            }
            std::cout << treelab::to_graph6(g) << '\n';
            return kExitOk;
        }
    } catch (const treelab::UnsupportedSizeError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const treelab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
