#include "treelab/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace treelab {

namespace {

[[noreturn]] void fail_at(size_t offset, const std::string& what) {
    throw ParseError("graph6: " + what + " at byte " + std::to_string(offset));
}

int decode_byte(std::string_view text, size_t offset) {
    if (offset >= text.size()) fail_at(offset, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) fail_at(offset, "byte out of range");
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    // strip one trailing newline, as produced by geng and friends
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    long n;
    int first = decode_byte(text, pos++);
    if (first < 63) {
        n = first;
    } else {
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(text, pos++);
    }
    if (n > vs::kMaxVertices) fail_at(0, "order " + std::to_string(n) + " exceeds 64");

    std::vector<VertexSet> adj(static_cast<size_t>(n));
    int bits_left = 0, current = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current = decode_byte(text, pos++);
                bits_left = 6;
            }
            if (current & (1 << --bits_left)) {
                adj[static_cast<size_t>(i)] |= vs::bit(j);
                adj[static_cast<size_t>(j)] |= vs::bit(i);
            }
        }
    if (pos != text.size()) fail_at(pos, "trailing garbage");
    return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0, current = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(current + 63));
                bits = current = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    auto fail = [&](const std::string& what) {
        throw ParseError("edge list, line " + std::to_string(lineno) + ": " + what);
    };
    auto parse_int = [&](std::string_view tok) {
        long value;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("non-integer token '" + std::string(tok) + "'");
        return value;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 1) fail("expected a single vertex count");
            n = parse_int(toks[0]);
            if (n < 0 || n > vs::kMaxVertices) fail("vertex count out of range");
            continue;
        }
        if (toks.size() != 2) fail("expected 'u v'");
        long u = parse_int(toks[0]), v = parse_int(toks[1]);
        if (u == v) fail("loop rejected");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex index out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: missing vertex count");
    return Graph(static_cast<int>(n), edges);
}

} // namespace treelab
