#pragma once

// Deterministic SVG drawings of the construction. The document uses plane
// coordinates directly (viewBox [-1.1, 1.1]^2, y up) so radii stay exact to the
// printed precision.

#include <string>

#include "pdlab/arrangement.hpp"

namespace pdlab {

/// Largest level accepted by render_arrangement (2^(n+1) disk elements).
inline constexpr int kMaxRenderLevel = 16;

/// Every closed disk of levels n_lo..n_hi, one <circle class="disk"> each.
/// An empty range gives the axes only.
std::string render_arrangement(int n_lo, int n_hi);

/// E_n and F_n as rings; exact bounds are kept in data-* attributes.
std::string render_annuli(int n_lo, int n_hi);

/// u sampled at cell centers over the square [-extent, extent]^2.
std::string render_heatmap(const Arrangement& arrangement, int resolution = 128, double extent = 0.3);

/// The straight path p(n,1) -> p(n,2) with step gap/10 and its obstruction witness.
std::string render_path(const Arrangement& arrangement, int n);

}  // namespace pdlab
