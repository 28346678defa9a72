#ifndef TREELAB_EXTREMAL_HPP
#define TREELAB_EXTREMAL_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "treelab/graph.hpp"

namespace treelab {

struct ExtremalClass {
    enum class Kind { OddF, EvenLeafOnF, EvenBridgeOfTwoF, EvenK3Chain, NotExtremal };
    enum class Core { None, C4, K4MinusE, CycleTriangle };

    Kind kind = Kind::NotExtremal;
    Core core = Core::None;
    int cycle_length = 0; // r when core == CycleTriangle

    // evidence
    int leaf = -1;                     // the stripped leaf (EvenLeafOnF)
    std::pair<int, int> bridge{-1, -1}; // the splitting bridge (EvenBridgeOfTwoF)
    VertexSet core_block = 0;          // the non-triangle block (EvenK3Chain)
};

std::string to_string(ExtremalClass::Kind kind);
std::string to_string(ExtremalClass::Core core);

// Block-clique graphs in which every block is a triangle (odd n >= 3).
bool is_family_F(const Graph& g);

// The even-order characterization; first match in order (1), (2), (3).
ExtremalClass classify_even_extremal(const Graph& g);

// ---- generators (deterministic given seed) ----

Graph generate_family_F(int blocks, std::uint64_t seed);

struct EvenExtremalSpec {
    ExtremalClass::Kind kind = ExtremalClass::Kind::EvenK3Chain;
    ExtremalClass::Core core = ExtremalClass::Core::C4; // for EvenK3Chain
    int cycle_length = 3; // r for CycleTriangle cores
    int f_blocks = 1;     // triangles of the F member (cases 1 and 2)
    int f_blocks2 = 1;    // second F member (case 2)
    int k3_count = 0;     // triangles attached to the core (case 3)
};

Graph generate_even_extremal(const EvenExtremalSpec& spec, std::uint64_t seed);

Graph generate_k_tree(int k, int n, std::uint64_t seed);
Graph generate_friendship(int k);      // k triangles at one hub, n = 2k+1
Graph generate_cycle_triangle(int r);  // C_r with one triangle per cycle edge, n = 2r

} // namespace treelab

#endif
