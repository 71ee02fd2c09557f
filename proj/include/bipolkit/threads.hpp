#pragma once

namespace bipolkit {

// Resolves a worker count: explicit request > 0 wins, otherwise the
// BIPOLKIT_THREADS environment variable, otherwise the OpenMP default.
int effective_threads(int requested = 0);

}  // namespace bipolkit
