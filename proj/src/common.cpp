#include "cvlab/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

namespace cvlab {

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> terms) {
    const std::size_t n = terms.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = terms[0];
        for (std::size_t i = 1; i < n; ++i) acc += terms[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(terms.first(half)) + pairwise_sum_impl(terms.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> terms) { return pairwise_sum_impl(terms); }

cplx pairwise_sum(std::span<const cplx> terms) { return pairwise_sum_impl(terms); }

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("CVLAB_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) hw = std::min<long>(hw, cap);
    }
    return hw;
}

void parallel_for(long long n, const std::function<void(long long)>& fn) {
    const int workers = std::min<long long>(thread_budget(), std::max<long long>(n, 1));
    if (workers <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long long i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cvlab
