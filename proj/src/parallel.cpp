#include "fisheyemc/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fmc {

void parallel_for(int count, const std::function<void(int)>& fn, int num_threads) {
    if (count <= 0) return;
    if (num_threads <= 0) {
        num_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (num_threads <= 0) num_threads = 1;
    }
    num_threads = std::min(num_threads, count);
    if (num_threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(num_threads));
    const int chunk = (count + num_threads - 1) / num_threads;
    for (int w = 0; w < num_threads; ++w) {
        const int begin = w * chunk;
        const int end = std::min(begin + chunk, count);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end] {
            try {
                for (int i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fmc
