#ifndef TREELAB_IO_HPP
#define TREELAB_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "treelab/graph.hpp"

namespace treelab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 short form, n <= 64, bit-exact per the published format.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// First line "n", then lines "u v"; duplicates allowed, loops rejected.
Graph parse_edge_list(std::string_view text);

} // namespace treelab

#endif
