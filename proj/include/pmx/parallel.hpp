#ifndef PMX_PARALLEL_HPP_
#define PMX_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace pmx {

// Worker count: `requested` when nonzero, else the PMX_THREADS environment
// variable, else the hardware concurrency. Always at least 1.
unsigned worker_count(unsigned requested = 0);

// Splits [0, count) into at most `workers` contiguous chunks and runs
// body(chunk, begin, end) for each, concurrently when workers > 1. Chunk
// indices follow range order, so results stored per chunk merge
// deterministically.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t chunk, std::size_t begin,
                                              std::size_t end)>& body);

// Number of chunks parallel_chunks will use for these arguments.
std::size_t chunk_count(std::size_t count, unsigned workers);

}  // namespace pmx

#endif  // PMX_PARALLEL_HPP_
