#pragma once

#include "qhc/rewrite/engine.hpp"

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qhc {

// Algebra registry for the command line: daha, sdaha, uq, oq, dq, inv, ham.
const std::vector<std::string>& algebra_ids();
// Throws std::invalid_argument for an unknown id.
const Algebra& algebra_by_id(const std::string& id);

// QHC_THREADS if set and positive, else the hardware concurrency (at least 1).
unsigned thread_budget();

// Runs f(0..n-1) on up to `threads` workers; results keep index order.
template <class R>
std::vector<R> parallel_map(size_t n, const std::function<R(size_t)>& f, unsigned threads = thread_budget()) {
    std::vector<R> out(n);
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (size_t i; (i = next++) < n;) {
            if (failed) return;
            try {
                out[i] = f(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
            }
        }
    };
    unsigned k = std::max(1u, std::min<unsigned>(threads, unsigned(n)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < k; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

// Coefficient of u^m v^n in (1+uv)/((1-u)(1-u^2)(1-v)(1-v^2)) and in
// 1/((1-u)(1-v)(1-u^2)(1-v^2)(1-uv)), by truncated power-series products.
long series_spherical(int m, int n);
long series_invariant(int m, int n);

struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;  // residual or note, empty when there is nothing to say
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteItem> items;
    size_t failures() const;
    bool ok() const { return !items.empty() && failures() == 0; }
};

struct SuiteOptions {
    std::vector<SpecPoint> points = default_points();
    unsigned threads = thread_budget();
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace qhc
