#pragma once

#include <atomic>
#include <condition_variable>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace evoparam {

// Computes fn(i) for i in [0, n) on up to `workers` threads and delivers the
// results to `sink` on the calling thread in strictly increasing index
// order, regardless of completion order. `fn` must depend only on its index.
// A sink returning false cancels the remaining work; indices already
// delivered form a prefix of [0, n).
template <class R>
void ordered_parallel_for(std::size_t n, int workers, const std::function<R(std::size_t)>& fn,
                          const std::function<bool(std::size_t, R&&)>& sink) {
    if (n == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!sink(i, fn(i))) return;
        }
        return;
    }

    std::mutex mtx;
    std::condition_variable cv;
    std::map<std::size_t, R> ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> cancel{false};
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || cancel.load()) return;
            try {
                R r = fn(i);
                std::lock_guard lock(mtx);
                ready.emplace(i, std::move(r));
            } catch (...) {
                std::lock_guard lock(mtx);
                if (!error) error = std::current_exception();
                cancel.store(true);
            }
            cv.notify_one();
        }
    };

    std::vector<std::thread> threads;
    const auto count = static_cast<std::size_t>(workers);
    threads.reserve(count);
    for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);

    try {
        std::unique_lock lock(mtx);
        for (std::size_t want = 0; want < n; ++want) {
            cv.wait(lock, [&] { return ready.count(want) != 0 || error; });
            if (error) break;
            R r = std::move(ready.at(want));
            ready.erase(want);
            lock.unlock();
            const bool keep_going = sink(want, std::move(r));
            lock.lock();
            if (!keep_going) {
                cancel.store(true);
                break;
            }
        }
    } catch (...) {
        cancel.store(true);
        for (auto& t : threads) t.join();
        throw;
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

// Fills out[i] = fn(i) in parallel; no ordering concerns since results are
// index-addressed. Used for within-generation fitness evaluation.
template <class Fn>
void parallel_transform(std::size_t n, int threads, const Fn& fn) {
    if (n == 0) return;
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex err_mtx;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mtx);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const auto count = static_cast<std::size_t>(threads);
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace evoparam
