#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wsat {

inline int& worker_budget_ref() {
    static int budget = [] {
        if (const char* env = std::getenv("WSAT_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? int(hw) : 1;
    }();
    return budget;
}

inline int worker_budget() { return worker_budget_ref(); }
inline void set_worker_budget(int n) { worker_budget_ref() = n < 1 ? 1 : n; }

// Runs f(i) for i in [0, count). Work is claimed by atomic counter; callers
// must make f(i) write only to slot i so results never depend on the
// worker count.
template <class F>
inline void parallel_for(size_t count, F&& f) {
    int workers = worker_budget();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto body = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<size_t>(workers, count) - 1;
    for (int t = 0; t < spawn; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

}  // namespace wsat
