#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappad/report.hpp"

namespace kappad::numrep {

using cd = std::complex<double>;

struct NegativeVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense complex matrix, row major.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}
    static Matrix identity(int dim);

    int dim() const { return dim_; }
    cd& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cd& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<cd>& data() const { return a_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // dispatches on exec_mode()
    Matrix operator*(cd s) const;
    Matrix adjoint() const;

    double max_antihermitian_deviation() const;

  private:
    int dim_ = 0;
    std::vector<cd> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Serial reference and OpenMP kernels; both must agree bit-for-bit on the
// same summation order per row.
void matvec_serial(const Matrix& m, const cd* x, cd* y);
void matvec_omp(const Matrix& m, const cd* x, cd* y);
void matmul_serial(const Matrix& a, const Matrix& b, Matrix& out);
void matmul_omp(const Matrix& a, const Matrix& b, Matrix& out);

struct MatrixOperator {
    std::string label;
    Matrix m;
    bool hermitian = false;

    MatrixOperator() = default;
    // verifies the flag within 1e-12 elementwise
    MatrixOperator(std::string label, Matrix m, bool hermitian);
    int dim() const { return m.dim(); }
};

struct StateVector {
    std::string id;
    std::vector<cd> amp;  // normalized
    double mean_occupation = 0;  // max over modes
};

// apply with the active execution mode
std::vector<cd> apply(const MatrixOperator& op, const std::vector<cd>& x);

double expectation(const MatrixOperator& op, const StateVector& psi);
double dispersion(const MatrixOperator& op, const StateVector& psi);
// <[A, B]> for Hermitian A, B; purely imaginary, returns the imaginary part
double commutator_expectation(const MatrixOperator& a, const MatrixOperator& b,
                              const StateVector& psi);

// single-mode oscillator pair with hbar = 1
std::pair<MatrixOperator, MatrixOperator> build_canonical_pair(int n_levels);

// 1 time + 1 space mode, dim = n_levels^2
struct DeformedSet {
    int n_levels = 0;
    double kappa_hbar = 0;
    MatrixOperator x0h, xkh, p0h, pkh;  // undeformed tensor operators
    MatrixOperator X0, Xk, P0, Pk;      // deformed phase space operators
};
DeformedSet build_deformed_operators(double kappa_hbar, int n_levels);

// random superpositions supported on the low-occupation block (levels < 6
// per mode)
std::vector<StateVector> random_low_occupation_states(int count, int n_levels,
                                                      unsigned long seed);
StateVector basis_state(int n_levels, int n_time, int n_space, std::string id);

struct CsvRow {
    std::string state, pair;
    double lhs = 0, rhs = 0, margin = 0;
};
std::string rows_to_csv(const std::vector<CsvRow>& rows);

struct UncertaintyResult {
    std::vector<CheckReport> reports;
    std::vector<CsvRow> rows;
};

// the four deformed families plus the Robertson anchor for each pair
UncertaintyResult check_uncertainty_suite(const DeformedSet& ops,
                                          const std::vector<StateVector>& states);

// matrix commutators of the deformed operators against their symbolic
// brackets on low-occupation states (relative error < 1e-6)
std::vector<CheckReport> check_symbolic_numeric(const DeformedSet& ops,
                                                const std::vector<StateVector>& states);

}  // namespace kappad::numrep
