#ifndef PLATESIM_PARALLEL_HPP
#define PLATESIM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace platesim {

/// Worker count resolution: explicit request > PLATESIM_THREADS > hardware.
unsigned resolve_thread_count(unsigned requested = 0);

/// Runs fn(i) for every i in [0, n). Each index is visited exactly once and
/// must write only to slots it owns, so results are independent of the thread
/// count and of scheduling. Exceptions are collected and the first rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

} // namespace platesim

#endif
