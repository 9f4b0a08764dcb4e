#pragma once

#include <cstddef>
#include <functional>

namespace netchor {

/// Process-wide worker count used by the parallel metric kernels and
/// ensemble runs. Values < 1 are clamped to 1.
void set_thread_count(int threads);
int thread_count();

/// Runs `fn(block)` for block in [0, blocks) on up to thread_count() workers.
/// Callers write each block's result into its own slot and reduce the slots
/// in block order afterwards, so results do not depend on the worker count.
void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& fn);

}  // namespace netchor
