#pragma once

namespace qct {

// Runtime switches for the OpenMP kernel variants. Kernels fall back to the
// serial path when parallelism is disabled or the problem is below the grain
// size where thread startup costs more than the loop body.
namespace parallel {

bool enabled();
void set_enabled(bool on);

int max_threads();
void set_max_threads(int n);

// Smallest per-kernel work estimate (complex multiply-adds) worth forking for.
inline constexpr long grain = 1 << 15;

} // namespace parallel

} // namespace qct
