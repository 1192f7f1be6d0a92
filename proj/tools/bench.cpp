#include <chrono>
#include <iostream>

#include "kappad/kappa.hpp"
#include "kappad/numrep.hpp"
#include "kappad/parallel.hpp"

using namespace kappad;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int n_levels = argc > 1 ? std::atoi(argv[1]) : 40;
    int reps = argc > 2 ? std::atoi(argv[2]) : 20;

    numrep::DeformedSet ops = numrep::build_deformed_operators(1.0, n_levels);
    auto states = numrep::random_low_occupation_states(1, n_levels, 7);
    std::vector<numrep::cd> y(states[0].amp.size());

    for (ExecMode mode : {ExecMode::Serial, ExecMode::OpenMP}) {
        exec_mode() = mode;
        const char* tag = mode == ExecMode::Serial ? "serial" : "openmp";

        auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r)
            numrep::matvec_serial(ops.X0.m, states[0].amp.data(), y.data());
        if (mode == ExecMode::OpenMP) {
            t0 = Clock::now();
            for (int r = 0; r < reps; ++r)
                numrep::matvec_omp(ops.X0.m, states[0].amp.data(), y.data());
        }
        std::cout << "matvec dim " << ops.X0.dim() << " x" << reps << " [" << tag
                  << "]: " << ms_since(t0) << " ms\n";

        numrep::Matrix prod(ops.X0.dim());
        t0 = Clock::now();
        if (mode == ExecMode::OpenMP)
            numrep::matmul_omp(ops.X0.m, ops.Pk.m, prod);
        else
            numrep::matmul_serial(ops.X0.m, ops.Pk.m, prod);
        std::cout << "matmul dim " << ops.X0.dim() << " [" << tag << "]: " << ms_since(t0)
                  << " ms\n";

        PhaseSpace ps = build_phase_space({});
        t0 = Clock::now();
        auto reports = jacobi_suite(ps.all_generators, ps.combined, "bench");
        std::cout << "jacobi sweep (phase space) [" << tag << "]: " << ms_since(t0)
                  << " ms, " << reports.size() << " reports\n";
    }
    return 0;
}
