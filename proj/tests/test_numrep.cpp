#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kappad/numrep.hpp"
#include "kappad/parallel.hpp"

using namespace kappad;
using namespace kappad::numrep;

namespace {

struct ModeGuard {
    ExecMode saved;
    ModeGuard() : saved(exec_mode()) {}
    ~ModeGuard() { exec_mode() = saved; }
};

Matrix random_matrix(int dim, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    Matrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = cd(u(rng), u(rng));
    return m;
}

}  // namespace

TEST_CASE("canonical pair on a small truncation") {
    auto [x, p] = build_canonical_pair(2);
    CHECK(x.hermitian);
    CHECK(p.hermitian);
    Matrix c = x.m * p.m - p.m * x.m;
    // the truncated [x, p] is i except on the top retained level
    CHECK(std::abs(c.at(0, 0) - cd(0, 1)) < 1e-12);
    CHECK(std::abs(c.at(1, 1) - cd(0, -1)) < 1e-12);
    CHECK(std::abs(c.at(0, 1)) < 1e-12);
}

TEST_CASE("vacuum saturates the undeformed bound") {
    int n = 12;
    auto [x, p] = build_canonical_pair(n);
    std::vector<cd> amp(n, cd(0, 0));
    amp[0] = 1;
    StateVector ground{"ground", amp, 0};
    CHECK(dispersion(x, ground) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(dispersion(p, ground) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(commutator_expectation(x, p, ground) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("serial and parallel kernels agree exactly") {
    Matrix a = random_matrix(37, 11), b = random_matrix(37, 12);
    Matrix out_s(37), out_p(37);
    matmul_serial(a, b, out_s);
    matmul_omp(a, b, out_p);
    CHECK(out_s.data() == out_p.data());

    std::vector<cd> x(37), ys(37), yp(37);
    for (int i = 0; i < 37; ++i) x[i] = cd(std::sin(i), std::cos(2 * i));
    matvec_serial(a, x.data(), ys.data());
    matvec_omp(a, x.data(), yp.data());
    CHECK(ys == yp);
}

TEST_CASE("kronecker product factorizes block products") {
    Matrix a = random_matrix(4, 21), b = random_matrix(4, 22);
    Matrix id = Matrix::identity(4);
    Matrix lhs = kron(id, a) * kron(id, b);
    Matrix rhs = kron(id, a * b);
    double worst = 0;
    for (int i = 0; i < lhs.dim(); ++i)
        for (int j = 0; j < lhs.dim(); ++j)
            worst = std::max(worst, std::abs(lhs.at(i, j) - rhs.at(i, j)));
    CHECK(worst < 1e-12);
}

TEST_CASE("deformed operators stay hermitian and satisfy their brackets") {
    ModeGuard guard;
    exec_mode() = ExecMode::Serial;
    DeformedSet ops = build_deformed_operators(1.0, 10);
    CHECK(ops.X0.hermitian);
    CHECK(ops.Pk.hermitian);
    auto states = random_low_occupation_states(6, 10, 99);
    for (const auto& r : check_symbolic_numeric(ops, states))
        CHECK_MESSAGE(r.status == CheckReport::Status::Pass, r.id, ": ", r.residual_text);
}

TEST_CASE("uncertainty margins are nonnegative on sampled states") {
    ModeGuard guard;
    exec_mode() = ExecMode::Serial;
    DeformedSet ops = build_deformed_operators(0.7, 24);
    auto states = random_low_occupation_states(8, 24, 4242);
    UncertaintyResult res = check_uncertainty_suite(ops, states);
    CHECK(!res.rows.empty());
    for (const auto& row : res.rows) CHECK(row.margin >= -1e-10);
    for (const auto& r : res.reports)
        CHECK_MESSAGE(r.status == CheckReport::Status::Pass, r.id, ": ", r.residual_text);
    CHECK(rows_to_csv(res.rows).find("margin") != std::string::npos);

    // states too close to the truncation edge are rejected, not mismeasured
    DeformedSet small = build_deformed_operators(0.7, 8);
    auto hot = random_low_occupation_states(2, 8, 4242);
    CHECK_THROWS_AS(check_uncertainty_suite(small, hot), TruncationEdge);
}
