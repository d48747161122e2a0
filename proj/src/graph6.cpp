#include "uniw/graph6.hpp"

#include <string_view>

namespace uniw {

namespace {

constexpr long long max_short_n = 62;
constexpr long long max_medium_n = 258047;         // 18 bits
constexpr long long max_long_n = 68719476735LL;    // 36 bits
constexpr std::string_view header = ">>graph6<<";

int value_at(std::string_view s, size_t i) {
    if (i >= s.size())
        throw parse_error(parse_error::kind::bad_length, "graph6: input truncated");
    unsigned char c = s[i];
    if (c < 63 || c > 126)
        throw parse_error(parse_error::kind::char_out_of_range,
                          "graph6: byte " + std::to_string(i) + " out of range");
    return c - 63;
}

} // namespace

Graph parse_graph6(const std::string& bytes) {
    std::string_view s = bytes;
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw parse_error(parse_error::kind::bad_length, "graph6: empty input");

    size_t pos = 0;
    long long n;
    if (value_at(s, 0) < 63) {
        n = value_at(s, 0);
        pos = 1;
    } else if (value_at(s, 1) < 63) {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | value_at(s, i);
        pos = 4;
    } else {
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | value_at(s, i);
        pos = 8;
    }
    if (n > max_long_n)
        throw parse_error(parse_error::kind::bad_length, "graph6: vertex count out of range");
    if (n > 1000000)
        throw parse_error(parse_error::kind::bad_length,
                          "graph6: vertex count " + std::to_string(n) + " too large for this tool");

    const long long bits = n * (n - 1) / 2;
    const size_t groups = static_cast<size_t>((bits + 5) / 6);
    if (s.size() != pos + groups)
        throw parse_error(parse_error::kind::bad_length,
                          "graph6: expected " + std::to_string(pos + groups) + " bytes, got " +
                              std::to_string(s.size()));

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (value_at(s, pos + k / 6) >> (5 - k % 6) & 1) edges.emplace_back(i, j);
    for (long long t = bits; t < static_cast<long long>(groups) * 6; ++t)
        if (value_at(s, pos + t / 6) >> (5 - t % 6) & 1)
            throw parse_error(parse_error::kind::trailing_bits, "graph6: nonzero padding bits");

    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > max_long_n) throw input_error("graph6: graph too large to encode");
    std::string out;
    if (n <= max_short_n) {
        out += static_cast<char>(63 + n);
    } else if (n <= max_medium_n) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + (n >> shift & 63));
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + (n >> shift & 63));
    }
    const long long bits = n * (n - 1) / 2;
    std::string groups(static_cast<size_t>((bits + 5) / 6), 0);
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) groups[k / 6] |= static_cast<char>(1 << (5 - k % 6));
    for (char c : groups) out += static_cast<char>(63 + c);
    return out;
}

} // namespace uniw
