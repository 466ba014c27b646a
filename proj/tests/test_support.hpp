#pragma once

#include <cstdint>
#include <vector>

#include "deltaconf/errors.hpp"
#include "deltaconf/graph.hpp"
#include "deltaconf/recognition.hpp"

namespace test_support {

/// All 2^(n(n-1)/2) graphs on labels 0..n-1.
inline std::vector<deltaconf::Graph> all_labeled_graphs(std::size_t n) {
  std::vector<std::pair<deltaconf::Vertex, deltaconf::Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<deltaconf::Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    deltaconf::Graph::Builder b;
    for (std::size_t v = 0; v < n; ++v) b.add_vertex(static_cast<deltaconf::Vertex>(v));
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) b.add_edge(pairs[e].first, pairs[e].second);
    out.push_back(b.build());
  }
  return out;
}

inline bool eliminates(const deltaconf::Graph& g) {
  try {
    deltaconf::eliminate(g);
    return true;
  } catch (const deltaconf::RecognitionError&) {
    return false;
  }
}

}  // namespace test_support
