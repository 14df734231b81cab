#pragma once

#include "crosskit/patterns.hpp"

namespace crosskit::detail {

// Fills the derived fields of a pattern predrawing whose pg, kind, rot,
// faces and outer are already set: the drawing is its own original graph.
void finish_pi(CombinatorialDrawing& pi);

// pi with no vertices at all (single empty face).
CombinatorialDrawing empty_pi();

}  // namespace crosskit::detail
