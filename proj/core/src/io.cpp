#include "msgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace msgraph {

std::string serialize_graph(const MultisignedGraph& g) {
    const int n = g.vertex_count();
    const int m = g.width();
    std::string out = "msgraph 1\n";
    out += "n=" + std::to_string(n) + " m=" + std::to_string(m) + "\n";
    const auto bits = g.raw_edge_bits();
    std::string signs(static_cast<std::size_t>(m), '+');
    std::size_t e = 0;
    for (int u = 0; u < n - 1; ++u) {
        for (int v = u + 1; v < n; ++v, ++e) {
            const std::uint64_t b = bits[e];
            for (int c = 0; c < m; ++c) {
                signs[static_cast<std::size_t>(c)] = ((b >> c) & 1) ? '-' : '+';
            }
            out += std::to_string(u);
            out += ' ';
            out += std::to_string(v);
            out += ' ';
            out += signs;
            out += '\n';
        }
    }
    return out;
}

namespace {

// Consumes the next line (LF or CRLF terminated); returns false at end of
// input.
bool next_line(std::string_view& rest, std::string_view& line) {
    if (rest.empty()) return false;
    const std::size_t nl = rest.find('\n');
    if (nl == std::string_view::npos) {
        line = rest;
        rest = {};
    } else {
        line = rest.substr(0, nl);
        rest = rest.substr(nl + 1);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return true;
}

bool parse_int(std::string_view text, int& value) {
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(begin, end, value);
    return res.ec == std::errc{} && res.ptr == end;
}

} // namespace

MultisignedGraph parse_graph(std::string_view text) {
    std::string_view rest = text;
    std::string_view line;
    int lineno = 1;

    if (!next_line(rest, line) || line != "msgraph 1") {
        throw parse_error(1, "unknown header or version, expected 'msgraph 1'");
    }

    ++lineno;
    if (!next_line(rest, line)) {
        throw parse_error(2, "missing size line 'n=<n> m=<m>'");
    }
    int n = 0;
    int m = 0;
    {
        const std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos || line.substr(0, 2) != "n=" ||
            line.substr(sp + 1, 2) != "m=" || !parse_int(line.substr(2, sp - 2), n) ||
            !parse_int(line.substr(sp + 3), m)) {
            throw parse_error(2, "malformed size line, expected 'n=<n> m=<m>'");
        }
    }
    if (n < 3) {
        throw parse_error(2, "n must be at least 3, got " + std::to_string(n));
    }
    if (m < 1 || m > Multisign::max_width) {
        throw parse_error(2, "m must be in [1, 64], got " + std::to_string(m));
    }

    const std::size_t edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::vector<std::uint64_t> bits(edges, 0);
    std::vector<bool> seen(edges, false);
    std::size_t seen_count = 0;

    while (next_line(rest, line)) {
        ++lineno;
        if (seen_count == edges) {
            throw parse_error(lineno, "extra edge line after all " + std::to_string(edges) +
                                          " edges");
        }
        const std::size_t sp1 = line.find(' ');
        const std::size_t sp2 = sp1 == std::string_view::npos
                                    ? std::string_view::npos
                                    : line.find(' ', sp1 + 1);
        int u = 0;
        int v = 0;
        if (sp2 == std::string_view::npos || !parse_int(line.substr(0, sp1), u) ||
            !parse_int(line.substr(sp1 + 1, sp2 - sp1 - 1), v)) {
            throw parse_error(lineno, "malformed edge line, expected '<u> <v> <signs>'");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw parse_error(lineno, "vertex out of range for n=" + std::to_string(n));
        }
        if (u >= v) {
            throw parse_error(lineno, "edge endpoints must satisfy u < v, got " +
                                          std::to_string(u) + " >= " + std::to_string(v));
        }
        const std::string_view signs = line.substr(sp2 + 1);
        if (signs.size() != static_cast<std::size_t>(m)) {
            throw parse_error(lineno, "sign string length " + std::to_string(signs.size()) +
                                          " does not match m=" + std::to_string(m));
        }
        std::uint64_t b = 0;
        for (std::size_t c = 0; c < signs.size(); ++c) {
            if (signs[c] == '-') {
                b |= std::uint64_t{1} << c;
            } else if (signs[c] != '+') {
                throw parse_error(lineno, std::string("illegal sign character '") + signs[c] +
                                              "'");
            }
        }
        const auto un = static_cast<std::size_t>(u);
        const std::size_t idx = un * static_cast<std::size_t>(n) - un * (un + 1) / 2 +
                                (static_cast<std::size_t>(v) - un - 1);
        if (seen[idx]) {
            throw parse_error(lineno, "duplicate edge " + std::to_string(u) + " " +
                                          std::to_string(v));
        }
        seen[idx] = true;
        ++seen_count;
        bits[idx] = b;
    }

    if (seen_count != edges) {
        for (std::size_t idx = 0; idx < edges; ++idx) {
            if (!seen[idx]) {
                const auto [u, v] = pair_from_index(n, idx);
                throw parse_error(lineno + 1, "missing edge " + std::to_string(u) + " " +
                                                  std::to_string(v) + " at end of input");
            }
        }
    }
    return MultisignedGraph::from_edge_bits(n, m, std::move(bits));
}

MultisignedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

} // namespace msgraph
