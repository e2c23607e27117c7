#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "distspec/graph.hpp"

namespace distspec {

class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses one graph6 record (no trailing newline). Sizes up to 258047 use the
/// '~'-prefixed form.
Graph decode_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

}  // namespace distspec
