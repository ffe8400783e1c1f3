#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "burning/graph.hpp"

namespace burning {

// Plain-text edge list:
//   first non-comment line: vertex count n
//   then one "u v" line per edge
// Lines whose first non-blank character is '#' and blank lines are ignored.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace burning
