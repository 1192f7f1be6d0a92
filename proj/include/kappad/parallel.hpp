#pragma once

#include <cstddef>
#include <exception>

namespace kappad {

// Check suites fan out over independent inputs (index tuples, generator
// triples, states). The serial path is the reference; the OpenMP path must
// produce identical results and is compared in the bench tool.
enum class ExecMode { Serial, OpenMP };

inline ExecMode& exec_mode() {
    static ExecMode mode = ExecMode::OpenMP;
    return mode;
}

template <typename F>
void parallel_for(std::size_t n, F&& body) {
    if (exec_mode() == ExecMode::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace kappad
