// sweep.hpp — Batch evaluation over (axis, ω) grids: per-axis-point mean-field
// solve, dressing, observable evaluation and δ = 0 pole extraction.

#pragma once

#include "cavlr/config.hpp"
#include "cavlr/table.hpp"

namespace cavlr {

// Deterministic for a given config; axis points may evaluate concurrently
// (threads ≥ 2) with results assembled in axis order. A failing axis point is
// recorded in failed_points and the sweep continues.
SpectrumTable run_sweep(const RunConfig& config, int threads = 1);

} // namespace cavlr
