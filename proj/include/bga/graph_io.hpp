#pragma once

#include <stdexcept>
#include <string>

#include "bga/ribbon.hpp"

namespace bga {

struct GraphFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads the structured graph format. Accepts either the canonical form
// (vertices / half_edges / attach / pairing / cyclic_orders) or the "tree"
// shorthand, which is expanded before validation. Duplicate keys anywhere in
// the document are format errors.
BrauerGraph read_graph(const std::string& text);
BrauerGraph read_graph_file(const std::string& path);

std::string write_graph(const BrauerGraph& g);
void write_graph_file(const BrauerGraph& g, const std::string& path);

}  // namespace bga
