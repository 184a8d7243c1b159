#pragma once

#include "mlap/graph.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlap {

/// Raised on malformed graph6 input; carries the byte offset of the offender.
class graph6_error : public std::runtime_error {
public:
    graph6_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

namespace detail {

constexpr int g6_bias = 63;  // printable range is 63 '?' .. 126 '~'

inline int g6_value(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) throw graph6_error("graph6 record truncated", pos);
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw graph6_error("character outside graph6 range 63..126", pos);
    return c - g6_bias;
}

/// Decodes the leading vertex-count field; advances pos past it.
inline long long g6_size(const std::string& s, std::size_t& pos) {
    int v = g6_value(s, pos);
    if (v < 63) {  // short form, n <= 62
        ++pos;
        return v;
    }
    // '~' escape: 3 bytes of 18 bits, or '~~' + 6 bytes of 36 bits.
    if (pos + 1 < s.size() && g6_value(s, pos + 1) == 63) {
        long long n = 0;
        for (std::size_t k = pos + 2; k < pos + 8; ++k) n = (n << 6) | g6_value(s, k);
        pos += 8;
        return n;
    }
    long long n = 0;
    for (std::size_t k = pos + 1; k < pos + 4; ++k) n = (n << 6) | g6_value(s, k);
    pos += 4;
    return n;
}

}  // namespace detail

/// Parses one graph6 record (no ">>graph6<<" header, no trailing newline).
inline simple_graph parse_graph6(const std::string& line) {
    std::size_t pos = 0;
    const long long n = detail::g6_size(line, pos);
    if (n < 1) throw graph6_error("graph6 vertex count must be >= 1", 0);
    if (n > 100000) throw graph6_error("graph6 vertex count implausibly large", 0);

    simple_graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != pos + body)
        throw graph6_error("graph6 record has wrong length for n=" + std::to_string(n),
                           line.size() < pos + body ? line.size() : pos + body);

    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int v = detail::g6_value(line, pos + static_cast<std::size_t>(bit / 6));
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // trailing pad bits must be zero
    for (long long b = bits; b < static_cast<long long>(body) * 6; ++b) {
        const int v = detail::g6_value(line, pos + static_cast<std::size_t>(b / 6));
        if ((v >> (5 - b % 6)) & 1)
            throw graph6_error("nonzero padding bit", pos + static_cast<std::size_t>(b / 6));
    }
    return g;
}

inline std::string write_graph6(const simple_graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(detail::g6_bias + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(detail::g6_bias + ((n >> shift) & 63)));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(detail::g6_bias + ((n >> shift) & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, static_cast<int>(j)) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(detail::g6_bias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(detail::g6_bias + (acc << (6 - nbits))));
    return out;
}

/// Reads a graph6 file: one record per line; an optional leading
/// ">>graph6<<" header is tolerated and skipped; blank lines ignored.
inline std::vector<simple_graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<simple_graph> graphs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            const std::string header = ">>graph6<<";
            if (line.rfind(header, 0) == 0) line = line.substr(header.size());
        }
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

inline void write_graph6_file(const std::string& path, const std::vector<simple_graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    for (const auto& g : graphs) out << write_graph6(g) << '\n';
}

/// Plain-text convenience format: first line is n, then one "u v" edge per
/// line, 0-based labels.
inline simple_graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n)) throw std::runtime_error("edge list: missing vertex count");
    simple_graph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    if (!in.eof()) throw std::runtime_error("edge list: trailing garbage");
    return g;
}

inline std::string write_edge_list(const simple_graph& g) {
    std::string s = std::to_string(g.n()) + "\n";
    for (auto [i, j] : g.edges()) s += std::to_string(i) + " " + std::to_string(j) + "\n";
    return s;
}

/// Loads a graph from a file holding either a single graph6 record or the
/// edge-list format; the format is sniffed from the first line.
inline simple_graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream probe(text);
    std::string first;
    std::getline(probe, first);
    if (!first.empty() && first.back() == '\r') first.pop_back();
    const std::string header = ">>graph6<<";
    if (first.rfind(header, 0) == 0) first = first.substr(header.size());
    // A line that is a bare decimal number is an edge-list herald; anything
    // else must be a graph6 record.
    bool numeric = !first.empty();
    for (char c : first)
        if (!isdigit(static_cast<unsigned char>(c)) && !isspace(static_cast<unsigned char>(c)))
            numeric = false;
    if (numeric) return parse_edge_list(text);
    return parse_graph6(first);
}

}  // namespace mlap
