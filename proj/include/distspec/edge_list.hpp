#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "distspec/graph.hpp"

namespace distspec {

class EdgeListError : public std::invalid_argument {
public:
    EdgeListError(const std::string& what, int line);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Text format: a header line "n m", then m lines "u v" with 0-based vertices.
/// '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

}  // namespace distspec
