#include "rees/util.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "rees/errors.hpp"

namespace rees {

namespace {
// Nanoseconds since the steady clock epoch; 0 means "no deadline".
std::atomic<std::int64_t> g_deadline_ns{0};
}  // namespace

void set_deadline(std::chrono::steady_clock::time_point when) {
    g_deadline_ns.store(when.time_since_epoch().count(), std::memory_order_relaxed);
}

void clear_deadline() {
    g_deadline_ns.store(0, std::memory_order_relaxed);
}

void check_deadline() {
    const std::int64_t limit = g_deadline_ns.load(std::memory_order_relaxed);
    if (limit == 0)
        return;
    const std::int64_t now = std::chrono::steady_clock::now().time_since_epoch().count();
    if (now > limit)
        throw TimeoutError("computation exceeded the configured time limit");
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    if (jobs <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // Exact at every step: result * (n-k+i) is divisible by i.
        result = result * (n - k + i) / i;
        if (result < 0)
            throw InternalError("binomial overflow");
    }
    return result;
}

}  // namespace rees
