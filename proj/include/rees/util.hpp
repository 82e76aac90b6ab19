#pragma once

#include <chrono>
#include <cstdint>
#include <functional>

namespace rees {

// Cooperative deadline shared by the long-running algorithms (Buchberger,
// certification).  Long loops call check_deadline() periodically; when a
// deadline is set and passed they unwind with TimeoutError.
void set_deadline(std::chrono::steady_clock::time_point when);
void clear_deadline();
void check_deadline();

// RAII guard so tests and the CLI cannot leak a deadline into later work.
class DeadlineGuard {
public:
    explicit DeadlineGuard(std::chrono::steady_clock::duration budget) {
        set_deadline(std::chrono::steady_clock::now() + budget);
    }
    ~DeadlineGuard() { clear_deadline(); }
    DeadlineGuard(const DeadlineGuard&) = delete;
    DeadlineGuard& operator=(const DeadlineGuard&) = delete;
};

// Runs fn(i) for i in [0, count), using at most jobs threads.  Exceptions
// from workers are rethrown on the calling thread.  With jobs <= 1 this is
// a plain loop; results must be written by index so output order never
// depends on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

// n choose k without overflow surprises at the scales used here.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace rees
