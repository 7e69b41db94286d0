#ifndef LIEFOUR_PARALLEL_HPP
#define LIEFOUR_PARALLEL_HPP

#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace liefour {

/// Thread cap from LIEFOUR_THREADS (0 or unset = auto).
inline unsigned threadBudget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("LIEFOUR_THREADS");
    if (!env) return hw;
    unsigned n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    return n == 0 ? hw : std::min(n, hw);
}

/// Evaluate fn(0..n-1) and return the results in index order.  Independent
/// cases may run concurrently; aggregation order is deterministic.
template <typename R, typename Fn>
std::vector<R> mapIndexed(size_t n, Fn fn) {
    std::vector<R> out(n);
    unsigned workers = threadBudget();
    if (workers <= 1 || n < 2) {
        for (size_t k = 0; k < n; ++k) out[k] = fn(k);
        return out;
    }
    std::vector<std::future<void>> futures;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (size_t k = lo; k < hi; ++k) out[k] = fn(k);
        }));
    }
    for (auto& f : futures) f.get();
    return out;
}

} // namespace liefour

#endif
