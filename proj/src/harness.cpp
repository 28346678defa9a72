#include "treelab/harness.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "treelab/certificates.hpp"
#include "treelab/covers.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/extremal.hpp"
#include "treelab/forcing.hpp"
#include "treelab/io.hpp"

namespace treelab {
namespace {

int exact_t(const Graph& g) { return tree_cover(g).size; }

using Filter = std::function<bool(const Graph&)>;
using Check = std::function<std::optional<std::string>(const Graph&)>;

struct Theorem {
    std::string family;
    std::string notes;
    int min_n = 1;
    int cap = 8;           // largest supported n_max
    int parity = -1;       // restrict n to this parity when >= 0
    Filter hereditary;     // passed to the enumerator (must be hereditary)
    Filter accept;         // final per-graph hypothesis filter
    Check check;           // nullopt = holds, string = observed values
    std::function<void(int, VerificationReport&)> custom; // replaces enumeration
};

std::string fmt(std::initializer_list<std::pair<const char*, int>> values) {
    std::ostringstream out;
    bool first = true;
    for (auto& [k, v] : values) {
        if (!first) out << ' ';
        first = false;
        out << k << '=' << v;
    }
    return out.str();
}

bool girth_at_least_5(const Graph& g) {
    const auto gi = girth(g);
    return !gi || *gi >= 5;
}

bool triangle_free(const Graph& g) {
    const auto gi = girth(g);
    return !gi || *gi >= 4;
}

std::optional<std::string> check_half_order(const Graph& g) {
    const TreeCover cover = half_order_cover(g);
    const int bound = (g.n() + 1) / 2;
    if (cover.verified && static_cast<int>(cover.parts.size()) <= bound) return std::nullopt;
    return fmt({{"cover_size", static_cast<int>(cover.parts.size())},
                {"verified", cover.verified},
                {"bound", bound}});
}

std::optional<std::string> check_girth5(const Graph& g) {
    const TreeCover cover = girth5_cover(g);
    const int bound = g.n() / 3;
    const int t = exact_t(g);
    if (cover.verified && static_cast<int>(cover.parts.size()) <= bound && t <= bound)
        return std::nullopt;
    return fmt({{"cover_size", static_cast<int>(cover.parts.size())},
                {"verified", cover.verified},
                {"T", t},
                {"bound", bound}});
}

std::optional<std::string> check_odd_extremal(const Graph& g) {
    const bool extremal = exact_t(g) == (g.n() + 1) / 2;
    if (extremal == is_family_F(g)) return std::nullopt;
    return fmt({{"T_extremal", extremal}, {"in_F", is_family_F(g)}});
}

std::optional<std::string> check_even_extremal(const Graph& g) {
    const bool extremal = exact_t(g) == g.n() / 2;
    const ExtremalClass c = classify_even_extremal(g);
    const bool classified = c.kind != ExtremalClass::Kind::NotExtremal;
    if (extremal == classified) return std::nullopt;
    return fmt({{"T_extremal", extremal}, {"classified", classified}});
}

std::optional<std::string> check_independence(const Graph& g) {
    const int t = exact_t(g);
    const int alpha = independence_number(g).size;
    if (t <= g.n() - alpha) return std::nullopt;
    return fmt({{"T", t}, {"alpha", alpha}});
}

std::optional<std::string> check_vertex_bracket(const Graph& g) {
    const int t = exact_t(g);
    for (int v = 0; v < g.n(); ++v) {
        const int tv = exact_t(delete_vertex(g, v));
        if (tv < t - 1 || tv > t + g.degree(v) - 1)
            return fmt({{"v", v}, {"T", t}, {"T_minus_v", tv}});
    }
    return std::nullopt;
}

std::optional<std::string> check_edge_bracket(const Graph& g) {
    const int t = exact_t(g);
    for (auto [u, v] : g.edges()) {
        const int te = exact_t(delete_edge(g, u, v));
        if (te < t - 1 || te > t + 1) return fmt({{"u", u}, {"v", v}, {"T", t}, {"T_minus_e", te}});
    }
    return std::nullopt;
}

std::optional<std::string> check_leaf_invariance(const Graph& g) {
    const int t = exact_t(g);
    for (int v = 0; v < g.n(); ++v) {
        const int tl = exact_t(add_leaf(g, v));
        if (tl != t) return fmt({{"v", v}, {"T", t}, {"T_with_leaf", tl}});
    }
    return std::nullopt;
}

std::optional<std::string> check_subdivision_invariance(const Graph& g) {
    const int t = exact_t(g);
    for (auto [u, v] : g.edges()) {
        const int ts = exact_t(subdivide_edge(g, u, v));
        if (ts != t) return fmt({{"u", u}, {"v", v}, {"T", t}, {"T_subdivided", ts}});
    }
    return std::nullopt;
}

std::optional<std::string> check_bridge_additivity(const Graph& g) {
    const int t = exact_t(g);
    for (auto [u, v] : block_decomposition(g).bridges) {
        const Graph cut = delete_edge(g, u, v);
        const int t1 = exact_t(induced(cut, component_of(cut, u, cut.vertices())).graph);
        const int t2 = exact_t(induced(cut, component_of(cut, v, cut.vertices())).graph);
        if (t != t1 + t2 - 1)
            return fmt({{"u", u}, {"v", v}, {"T", t}, {"T1", t1}, {"T2", t2}});
    }
    return std::nullopt;
}

std::optional<std::string> check_cut_vertex(const Graph& g) {
    const int t = exact_t(g);
    const BlockDecomposition bd = block_decomposition(g);
    std::optional<std::string> bad;
    vs::for_each(bd.cut_vertices, [&](int v) {
        if (bad) return;
        int sum = 0;
        int h = 0;
        for (VertexSet comp : components_within(g, g.vertices() & ~vs::bit(v))) {
            sum += exact_t(induced(g, comp | vs::bit(v)).graph);
            ++h;
        }
        if (t != sum - h + 1) bad = fmt({{"v", v}, {"T", t}, {"sum", sum}, {"h", h}});
    });
    return bad;
}

std::optional<std::string> check_psd_bound(const Graph& g) {
    const int t = exact_t(g);
    const int zp = psd_zero_forcing_number(g);
    if (t <= zp) return std::nullopt;
    return fmt({{"T", t}, {"Zplus", zp}});
}

std::optional<std::string> check_forcing_chain(const Graph& g) {
    const int zp = psd_zero_forcing_number(g);
    const int z = zero_forcing_number(g);
    if (zp <= z) return std::nullopt;
    return fmt({{"Zplus", zp}, {"Z", z}});
}

std::optional<std::string> check_line_graph(const Graph& g) {
    const int m = g.m();
    const Graph l = line_graph(g).graph;
    const int t = exact_t(l);
    const int half = (m + 1) / 2;
    if (t <= half && half <= m - g.n() + 2) return std::nullopt;
    return fmt({{"T_line", t}, {"ceil_m_half", half}, {"m_minus_n_plus_2", m - g.n() + 2}});
}

std::optional<std::string> check_complement_bound(const Graph& g) {
    const int t = exact_t(complement(g));
    if (t <= (g.n() + 1) / 2) return std::nullopt;
    return fmt({{"T_complement", t}, {"bound", (g.n() + 1) / 2}});
}

std::optional<std::string> check_gram(const Graph& g) {
    const GramCertificate cert = incidence_gram(g);
    const int alpha = independence_number(triangle_augment(g).graph).size;
    if (cert.checks.certified() && alpha == g.m()) return std::nullopt;
    return fmt({{"pattern", cert.checks.pattern_matches},
                {"rank", cert.checks.rank},
                {"m", g.m()},
                {"alpha_aug", alpha}});
}

void run_f_chain(int n_max, VerificationReport& report) {
    std::vector<Graph> level{complete_graph(3)};
    for (int n = 3; n <= n_max; n += 2) {
        for (const Graph& g : level) {
            ++report.graphs_checked;
            const int want = (n + 1) / 2;
            const int t = exact_t(g);
            const int p = path_cover_exact(g);
            const int z = zero_forcing_number(g);
            const int zp = psd_zero_forcing_number(g);
            if (t != want || p != want || z != want || zp != want) {
                report.violations.push_back(
                    {to_graph6(g), fmt({{"T", t}, {"P", p}, {"Z", z}, {"Zplus", zp}, {"want", want}})});
            }
        }
        if (n + 2 > n_max) break;
        std::map<std::uint64_t, Graph> next;
        for (const Graph& g : level) {
            for (int v = 0; v < g.n(); ++v) {
                Graph bigger = vertex_sum(g, v, complete_graph(3), 0);
                next.try_emplace(canonical_key(bigger), std::move(bigger));
            }
        }
        level.clear();
        for (auto& [key, g] : next) level.push_back(std::move(g));
    }
}

void run_k_tree(int n_max, VerificationReport& report) {
    for (int k : {3, 5}) {
        if (n_max < k + 1) continue;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const int n = k + 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n_max - k));
            const Graph g = generate_k_tree(k, n, seed);
            ++report.graphs_checked;
            const int t = exact_t(g);
            if (t != (k + 1) / 2)
                report.violations.push_back({to_graph6(g), fmt({{"k", k}, {"T", t}})});
        }
    }
}

const std::vector<std::pair<std::string, Theorem>>& registry() {
    static const std::vector<std::pair<std::string, Theorem>> table = [] {
        std::vector<std::pair<std::string, Theorem>> t;
        auto add = [&](const char* id, Theorem th) { t.emplace_back(id, std::move(th)); };

        add("half-order", {.family = "connected graphs", .min_n = 1, .cap = 8,
                           .check = check_half_order});
        add("girth5", {.family = "connected graphs of girth >= 5 (forests included)",
                       .min_n = 6, .cap = 10, .hereditary = girth_at_least_5,
                       .check = check_girth5});
        add("odd-extremal", {.family = "connected outerplanar graphs, odd order",
                             .min_n = 3, .cap = 9, .parity = 1,
                             .hereditary = [](const Graph& g) { return is_outerplanar(g); },
                             .check = check_odd_extremal});
        add("even-extremal", {.family = "connected outerplanar graphs, even order",
                              .min_n = 4, .cap = 8, .parity = 0,
                              .hereditary = [](const Graph& g) { return is_outerplanar(g); },
                              .check = check_even_extremal});
        add("independence-bound", {.family = "connected graphs, n >= 2", .min_n = 2,
                                   .cap = 8, .check = check_independence});
        add("vertex-bracket", {.family = "connected graphs, n >= 2, all vertex deletions",
                               .min_n = 2, .cap = 7, .check = check_vertex_bracket});
        add("edge-bracket", {.family = "connected graphs, all edge deletions", .min_n = 2,
                             .cap = 7, .check = check_edge_bracket});
        add("leaf-invariance", {.family = "connected graphs, leaf added at every vertex",
                                .min_n = 1, .cap = 7, .check = check_leaf_invariance});
        add("subdivision-invariance", {.family = "connected graphs, every edge subdivided",
                                       .min_n = 2, .cap = 7,
                                       .check = check_subdivision_invariance});
        add("bridge-additivity", {.family = "connected graphs with a bridge", .min_n = 2,
                                  .cap = 7,
                                  .accept = [](const Graph& g) {
                                      return !block_decomposition(g).bridges.empty();
                                  },
                                  .check = check_bridge_additivity});
        add("cut-vertex", {.family = "connected graphs with a cut vertex", .min_n = 3,
                           .cap = 7,
                           .accept = [](const Graph& g) {
                               return block_decomposition(g).cut_vertices != 0;
                           },
                           .check = check_cut_vertex});
        add("psd-bound", {.family = "connected graphs", .min_n = 1, .cap = 8,
                          .check = check_psd_bound});
        add("forcing-chain", {.family = "connected graphs", .min_n = 1, .cap = 8,
                              .check = check_forcing_chain});
        add("line-graph", {.family = "connected graphs with m >= 2n-3, m >= 1",
                           .notes = "source text states T(L(G)) >= ceil(m/2); the half-order "
                                    "bound applied to L(G) gives <=, which is what is checked",
                           .min_n = 2, .cap = 6,
                           .accept = [](const Graph& g) { return g.m() >= 2 * g.n() - 3; },
                           .check = check_line_graph});
        add("complement", {.family = "connected graphs with m <= 3n/2-4",
                           .notes = "checked via the proof route T(complement) <= ceil(n/2); "
                                    "M+ itself is out of scope",
                           .min_n = 4, .cap = 8,
                           .accept = [](const Graph& g) { return 2 * g.m() <= 3 * g.n() - 8; },
                           .check = check_complement_bound});
        add("treewidth-prop", {.family = "connected graphs with tw <= (n-4)/2",
                               .notes = "checked via the proof route T(complement) <= ceil(n/2)",
                               .min_n = 4, .cap = 8,
                               .accept = [](const Graph& g) {
                                   return 2 * treewidth(g) <= g.n() - 4;
                               },
                               .check = check_complement_bound});
        add("gram", {.family = "connected graphs, n >= 2",
                     .notes = "also checks alpha(G^triangle) = m, the step the rank "
                              "certificate feeds",
                     .min_n = 2, .cap = 6, .check = check_gram});
        add("f-chain", {.family = "all members of F by block count, odd n",
                        .notes = "members generated exhaustively by repeated K3 vertex-sums",
                        .cap = 11, .custom = run_f_chain});
        add("k-tree", {.family = "random 3-trees and 5-trees, 100 seeds each",
                       .cap = 12, .custom = run_k_tree});
        return t;
    }();
    return table;
}

VerificationReport run_theorem(const std::string& id, const Theorem& th, int n_max) {
    if (n_max > th.cap)
        throw UnsupportedSizeError("theorem '" + id + "' budget is n_max <= " +
                                   std::to_string(th.cap));
    VerificationReport report;
    report.theorem = id;
    report.family = th.family;
    report.notes = th.notes;
    report.n_max = n_max;
    const auto start = std::chrono::steady_clock::now();

    if (th.custom) {
        th.custom(n_max, report);
    } else {
        for (int n = th.min_n; n <= n_max; ++n) {
            if (th.parity >= 0 && n % 2 != th.parity) continue;
            const std::vector<Graph> all =
                th.hereditary ? enumerate_connected_where(n, th.hereditary)
                              : enumerate_connected(n);
            std::vector<const Graph*> family;
            for (const Graph& g : all) {
                if (!th.accept || th.accept(g)) family.push_back(&g);
            }
            report.graphs_checked += static_cast<long>(family.size());
            const auto results = parallel_map<std::optional<std::string>>(
                static_cast<int>(family.size()),
                [&](int i) { return th.check(*family[static_cast<std::size_t>(i)]); });
            for (std::size_t i = 0; i < results.size(); ++i) {
                if (results[i]) report.violations.push_back({to_graph6(*family[i]), *results[i]});
            }
        }
    }
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace

std::vector<std::string> known_theorems() {
    std::vector<std::string> ids;
    for (const auto& [id, th] : registry()) ids.push_back(id);
    return ids;
}

std::vector<VerificationReport> verify_theorems(const std::vector<std::string>& ids, int n_max) {
    std::vector<VerificationReport> reports;
    for (const auto& [id, th] : registry()) {
        bool selected = false;
        for (const std::string& want : ids) {
            if (want == id) selected = true;
        }
        if (!selected) continue;
        reports.push_back(run_theorem(id, th, n_max));
    }
    for (const std::string& want : ids) {
        bool known = false;
        for (const auto& [id, th] : registry()) {
            if (id == want) known = true;
        }
        if (!known) throw std::invalid_argument("unknown theorem id: " + want);
    }
    return reports;
}

VerificationReport scan_conjecture_triangle_free(int n_max) {
    if (n_max > 9) throw UnsupportedSizeError("triangle-free scan budget is n_max <= 9");
    VerificationReport report;
    report.theorem = "conjecture-triangle-free";
    report.family = "connected triangle-free graphs";
    report.notes = "conjectured bound; violations are findings, not failures";
    report.n_max = n_max;
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Graph> family = enumerate_connected_where(n, triangle_free);
        report.graphs_checked += static_cast<long>(family.size());
        const int bound = (n + 2) / 3;
        const auto results = parallel_map<std::optional<std::string>>(
            static_cast<int>(family.size()), [&](int i) -> std::optional<std::string> {
                const int t = exact_t(family[static_cast<std::size_t>(i)]);
                if (t <= bound) return std::nullopt;
                return fmt({{"T", t}, {"bound", bound}});
            });
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (results[i]) report.violations.push_back({to_graph6(family[i]), *results[i]});
        }
    }
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json report_json(const VerificationReport& report) {
    nlohmann::json j;
    j["theorem"] = report.theorem;
    j["family"] = report.family;
    j["n_max"] = report.n_max;
    j["graphs_checked"] = report.graphs_checked;
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : report.violations)
        j["violations"].push_back({{"graph6", v.graph6}, {"observed", v.observed}});
    j["runtime_seconds"] = report.runtime_seconds;
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

nlohmann::json compute_params(const Graph& g, const std::vector<std::string>& params) {
    nlohmann::json j;
    for (const std::string& p : params) {
        if (p == "n") {
            j["n"] = g.n();
        } else if (p == "m") {
            j["m"] = g.m();
        } else if (p == "girth") {
            const auto gi = girth(g);
            if (gi) j["girth"] = *gi; else j["girth"] = nullptr;
        } else if (p == "alpha") {
            j["alpha"] = independence_number(g).size;
        } else if (p == "treewidth") {
            j["treewidth"] = treewidth(g);
        } else if (p == "outerplanar") {
            j["outerplanar"] = is_outerplanar(g);
        } else if (p == "T") {
            const ExactCover cover = tree_cover(g);
            j["T"] = cover.size;
            auto parts = nlohmann::json::array();
            for (VertexSet part : cover.witness.parts) parts.push_back(vs::to_vector(part));
            j["T_witness"] = parts;
        } else if (p == "P") {
            j["P"] = path_cover_exact(g);
        } else if (p == "Z") {
            j["Z"] = zero_forcing_number(g);
        } else if (p == "Zplus") {
            j["Zplus"] = psd_zero_forcing_number(g);
        } else if (p == "blocks") {
            const BlockDecomposition bd = block_decomposition(g);
            auto blocks = nlohmann::json::array();
            for (VertexSet b : bd.blocks) blocks.push_back(vs::to_vector(b));
            j["blocks"] = blocks;
            j["cut_vertices"] = vs::to_vector(bd.cut_vertices);
            auto bridges = nlohmann::json::array();
            for (auto [u, v] : bd.bridges) bridges.push_back({u, v});
            j["bridges"] = bridges;
        } else if (p == "extremal") {
            if (g.n() % 2 == 1) {
                j["extremal"] = is_family_F(g)
                                    ? to_string(ExtremalClass::Kind::OddF)
                                    : to_string(ExtremalClass::Kind::NotExtremal);
            } else {
                const ExtremalClass c = classify_even_extremal(g);
                j["extremal"] = to_string(c.kind);
                if (c.kind == ExtremalClass::Kind::EvenK3Chain) {
                    j["extremal_core"] = to_string(c.core);
                    if (c.core == ExtremalClass::Core::CycleTriangle)
                        j["extremal_cycle_length"] = c.cycle_length;
                }
            }
        } else if (p == "bounds") {
            const BoundReport b = bound_report(g);
            nlohmann::json bj;
            bj["alpha"] = b.alpha;
            bj["n_minus_alpha"] = b.n_minus_alpha;
            bj["ceil_half"] = b.ceil_half;
            if (b.z_plus) bj["Zplus"] = *b.z_plus;
            bj["exact"] = b.exact;
            bj["vertex_bracket"] = {b.vertex_bracket_low, b.vertex_bracket_high};
            bj["edge_bracket"] = {b.edge_bracket_low, b.edge_bracket_high};
            j["bounds"] = bj;
        } else {
            throw std::invalid_argument("unknown parameter: " + p);
        }
    }
    return j;
}

} // namespace treelab
