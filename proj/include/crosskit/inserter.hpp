#pragma once

#include "crosskit/drawing.hpp"

#include <array>
#include <functional>
#include <map>

namespace crosskit {

// Instance for the incremental embedding search. The full vertex and edge set
// of the host skeleton is fixed up front; a subset (the predrawn part) comes
// with its embedding, the rest is inserted one edge at a time in the given
// order, branching over every placement choice.
struct InsertTask {
  Graph pg;
  std::vector<std::vector<int>> rot0;  // rotations of the seeded subdrawing
  std::vector<FaceRec> faces0;
  int outer0 = 0;
  std::vector<char> edge_seeded;   // per pg edge
  std::vector<char> vertex_seeded; // per pg vertex
  std::vector<int> insert_order;   // non-seeded pg edges
  // alternation constraints: vertex -> ({e,e'},{f,f'}) pairs of pg edges that
  // must interleave in the final rotation
  std::map<int, std::array<int, 4>> cross_pairs;
  long long budget = 50'000'000;
};

struct EmbeddingView {
  const std::vector<std::vector<int>>& rot;
  const std::vector<FaceRec>& faces;
  int outer;
};

// Enumerates embeddings deterministically; the callback returns true to stop.
// Returns true if stopped by the callback. Throws BudgetExceeded.
bool enumerate_plane_extensions(const InsertTask& task,
                                const std::function<bool(const EmbeddingView&)>& cb);

}  // namespace crosskit
