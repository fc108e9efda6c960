#include "overpart/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace overpart {

void set_worker_count(int workers) {
    if (workers >= 1)
        omp_set_num_threads(workers);
}

int worker_count() { return omp_get_max_threads(); }

void apply_worker_env() {
    const char* env = std::getenv("OVERPART_THREADS");
    if (env == nullptr)
        return;
    try {
        set_worker_count(std::stoi(env));
    } catch (const std::exception&) {
        // ignore malformed values, OpenMP defaults stay in effect
    }
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

}  // namespace overpart
