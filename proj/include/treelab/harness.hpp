#ifndef TREELAB_HARNESS_HPP
#define TREELAB_HARNESS_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "treelab/graph.hpp"

namespace treelab {

struct Violation {
    std::string graph6;
    std::string observed; // the values that broke the claim
};

struct VerificationReport {
    std::string theorem;
    std::string family; // hypothesis predicate + order range
    int n_max = 0;
    long graphs_checked = 0;
    std::vector<Violation> violations;
    double runtime_seconds = 0.0;
    std::string notes; // recorded discrepancies and conventions
};

// Registered theorem ids, in report order.
std::vector<std::string> known_theorems();

// Runs each selected theorem's check over its hypothesis family up to n_max.
// Throws std::invalid_argument for unknown ids, UnsupportedSizeError when
// n_max exceeds the theorem's budget.
std::vector<VerificationReport> verify_theorems(const std::vector<std::string>& ids, int n_max);

// T(G) <= ceil(n/3) over connected triangle-free graphs, n <= 9. Violations
// here are findings, not failures.
VerificationReport scan_conjecture_triangle_free(int n_max);

nlohmann::json report_json(const VerificationReport& report);

// Selected parameters of one graph. Known params: n, m, girth, alpha,
// treewidth, outerplanar, T, P, Z, Zplus, blocks, extremal, bounds.
nlohmann::json compute_params(const Graph& g, const std::vector<std::string>& params);

} // namespace treelab

#endif
