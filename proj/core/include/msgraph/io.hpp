#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "msgraph/graph.hpp"

namespace msgraph {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    // 1-based line number; one past the last line for end-of-input errors.
    int line() const { return line_; }

private:
    int line_;
};

// msgraph 1 document, the one persistent format:
//
//   msgraph 1
//   n=<n> m=<m>
//   <u> <v> <signs>
//
// one edge line per unordered pair in pair_index order, u < v, <signs> the
// m-character '+'/'-' encoding, every line ending in a single line feed.
// Serialization is canonical: one byte sequence per graph.
std::string serialize_graph(const MultisignedGraph& g);

// Accepts the serialize_graph format (CRLF tolerated); every edge must be
// present exactly once with a consistent sign width.
MultisignedGraph parse_graph(std::string_view text);

MultisignedGraph load_graph_file(const std::string& path);

} // namespace msgraph
