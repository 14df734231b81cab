#pragma once

#include "crosskit/drawing.hpp"

#include <functional>
#include <optional>

namespace crosskit {

struct ExtendOptions {
  long long budget = 50'000'000;
};

// Enumerates every crossing-free extension of the predrawing to the whole
// graph, in a fixed deterministic order. The callback returns true to stop;
// the function returns true iff stopped. On hosts that stay connected during
// insertion each drawing comes up exactly once; disconnected hosts may repeat
// weakly equivalent drawings.
bool enumerate_ppd_extensions(const PartiallyPredrawnGraph& ppg, const ExtendOptions& opt,
                              const std::function<bool(const CombinatorialDrawing&)>& cb);

// Decides whether the partially predrawn graph admits a drawing of the whole
// graph that restricts to the given predrawing and has no crossings beyond the
// predrawn ones. Returns the first witness in a fixed deterministic order.
std::optional<CombinatorialDrawing> ppd_planar(const PartiallyPredrawnGraph& ppg,
                                               const ExtendOptions& opt = {});

// Abstract planarity of a graph (used as a cheap refutation filter; a planar
// skeleton is necessary but not sufficient for a constrained extension).
bool abstractly_planar(const Graph& g);

}  // namespace crosskit
