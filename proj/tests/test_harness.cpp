#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treelab/harness.hpp"
#include "treelab/io.hpp"

using namespace treelab;

TEST_CASE("every registered theorem holds on small orders") {
    const auto reports = verify_theorems(known_theorems(), 5);
    CHECK(reports.size() == known_theorems().size());
    for (const auto& report : reports) {
        INFO(report.theorem);
        CHECK(report.violations.empty());
        CHECK(report.runtime_seconds >= 0.0);
    }
}

TEST_CASE("selected theorems at their documented sizes") {
    const auto half = verify_theorems({"half-order"}, 6);
    REQUIRE(half.size() == 1);
    CHECK(half[0].violations.empty());
    CHECK(half[0].graphs_checked == 1 + 1 + 2 + 6 + 21 + 112);

    const auto odd = verify_theorems({"odd-extremal"}, 7);
    REQUIRE(odd.size() == 1);
    CHECK(odd[0].violations.empty());
    CHECK(odd[0].graphs_checked > 0);

    const auto gram = verify_theorems({"gram"}, 5);
    CHECK(gram[0].violations.empty());

    const auto chain = verify_theorems({"f-chain"}, 9);
    CHECK(chain[0].violations.empty());
    // one F member with 1 block (K3), 1 with 2 (bowtie), 2 with 3, plus n=9
    CHECK(chain[0].graphs_checked >= 1 + 1 + 2);
}

TEST_CASE("selection errors") {
    CHECK_THROWS_AS(verify_theorems({"no-such-theorem"}, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorems({"half-order"}, 9), UnsupportedSizeError);
    CHECK_THROWS_AS(verify_theorems({"line-graph"}, 7), UnsupportedSizeError);
    CHECK_THROWS_AS(scan_conjecture_triangle_free(10), UnsupportedSizeError);
}

TEST_CASE("triangle-free conjecture scan") {
    const VerificationReport report = scan_conjecture_triangle_free(6);
    CHECK(report.violations.empty());
    // n=1..4 give 1, 1, 1 (P3), 3 (P4, K_{1,3}, C4); n=5,6 add more
    CHECK(report.graphs_checked > 1 + 1 + 1 + 3);
    const VerificationReport tiny = scan_conjecture_triangle_free(1);
    CHECK(tiny.graphs_checked == 1);
    CHECK(tiny.violations.empty());
}

TEST_CASE("report json shape") {
    const VerificationReport report = scan_conjecture_triangle_free(4);
    const nlohmann::json j = report_json(report);
    CHECK(j["theorem"] == "conjecture-triangle-free");
    CHECK(j["graphs_checked"] == 6); // 1, 1, P3; P4, K_{1,3}, C4
    CHECK(j["violations"].is_array());
    CHECK(j["violations"].empty());
    CHECK(j.contains("runtime_seconds"));
}

TEST_CASE("compute params") {
    const Graph c5 = cycle_graph(5);
    const nlohmann::json j = compute_params(c5, {"n", "m", "girth", "T", "Zplus"});
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 5);
    CHECK(j["girth"] == 5);
    CHECK(j["T"] == 2);
    CHECK(j["Zplus"] == 2);
    CHECK(j["T_witness"].size() == 2);

    const Graph bowtie = vertex_sum(complete_graph(3), 0, complete_graph(3), 0);
    const nlohmann::json b = compute_params(bowtie, {"T", "extremal", "blocks", "bounds"});
    CHECK(b["T"] == 3);
    CHECK(b["extremal"] == "OddF");
    CHECK(b["blocks"].size() == 2);
    CHECK(b["cut_vertices"] == nlohmann::json::array({0}));
    CHECK(b["bounds"]["exact"] == 3);
    CHECK(b["bounds"]["n_minus_alpha"] == 3);

    CHECK(compute_params(complete_graph(4), {"outerplanar"})["outerplanar"] == false);
    CHECK(compute_params(path_graph(6), {"girth"})["girth"].is_null());
    CHECK(compute_params(cycle_graph(4), {"extremal"})["extremal"] == "EvenK3Chain");
    CHECK_THROWS_AS(compute_params(c5, {"chromatic"}), std::invalid_argument);
}
