#include "kappad/numrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "kappad/parallel.hpp"

namespace kappad::numrep {

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(dim_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(dim_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(cd s) const {
    Matrix r(dim_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

Matrix Matrix::adjoint() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

double Matrix::max_antihermitian_deviation() const {
    double m = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    return m;
}

void matmul_serial(const Matrix& a, const Matrix& b, Matrix& out) {
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cd s = 0;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            out.at(i, j) = s;
        }
}

void matmul_omp(const Matrix& a, const Matrix& b, Matrix& out) {
    int n = a.dim();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cd s = 0;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            out.at(i, j) = s;
        }
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r(dim_);
    if (exec_mode() == ExecMode::OpenMP)
        matmul_omp(*this, o, r);
    else
        matmul_serial(*this, o, r);
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    int na = a.dim(), nb = b.dim();
    Matrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            cd aij = a.at(i, j);
            if (aij == cd(0)) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    r.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
        }
    return r;
}

void matvec_serial(const Matrix& m, const cd* x, cd* y) {
    int n = m.dim();
    for (int i = 0; i < n; ++i) {
        cd s = 0;
        for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
}

void matvec_omp(const Matrix& m, const cd* x, cd* y) {
    int n = m.dim();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i) {
        cd s = 0;
        for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
}

MatrixOperator::MatrixOperator(std::string lbl, Matrix mat, bool herm)
    : label(std::move(lbl)), m(std::move(mat)), hermitian(herm) {
    if (hermitian && m.max_antihermitian_deviation() > 1e-12)
        throw std::invalid_argument("operator " + label + " is not Hermitian");
}

std::vector<cd> apply(const MatrixOperator& op, const std::vector<cd>& x) {
    std::vector<cd> y(x.size());
    if (exec_mode() == ExecMode::OpenMP)
        matvec_omp(op.m, x.data(), y.data());
    else
        matvec_serial(op.m, x.data(), y.data());
    return y;
}

static cd inner(const std::vector<cd>& a, const std::vector<cd>& b) {
    cd s = 0;
    for (size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

double expectation(const MatrixOperator& op, const StateVector& psi) {
    std::vector<cd> v = apply(op, psi.amp);
    return inner(psi.amp, v).real();
}

double dispersion(const MatrixOperator& op, const StateVector& psi) {
    std::vector<cd> v = apply(op, psi.amp);
    double mean = inner(psi.amp, v).real();
    // <a^2> = <a psi, a psi> for Hermitian a; only matvec needed
    double sq = inner(v, v).real();
    double var = sq - mean * mean;
    if (var < -1e-10)
        throw NegativeVariance("variance " + std::to_string(var) + " for " + op.label);
    return std::sqrt(std::max(var, 0.0));
}

double commutator_expectation(const MatrixOperator& a, const MatrixOperator& b,
                              const StateVector& psi) {
    std::vector<cd> va = apply(a, psi.amp), vb = apply(b, psi.amp);
    // <[a,b]> = <a psi, b psi> - <b psi, a psi> = 2i Im<a psi, b psi>
    return 2.0 * inner(va, vb).imag();
}

std::pair<MatrixOperator, MatrixOperator> build_canonical_pair(int n_levels) {
    if (n_levels < 2) throw std::invalid_argument("need at least 2 levels");
    Matrix x(n_levels), p(n_levels);
    double s = std::sqrt(0.5);  // hbar = 1
    for (int n = 0; n + 1 < n_levels; ++n) {
        double r = std::sqrt(static_cast<double>(n + 1));
        x.at(n, n + 1) = s * r;
        x.at(n + 1, n) = s * r;
        p.at(n, n + 1) = cd(0, -s * r);
        p.at(n + 1, n) = cd(0, s * r);
    }
    return {MatrixOperator("x", x, true), MatrixOperator("p", p, true)};
}

DeformedSet build_deformed_operators(double kappa_hbar, int n_levels) {
    if (kappa_hbar <= 0) throw std::invalid_argument("kappa hbar must be positive");
    auto [x1, p1] = build_canonical_pair(n_levels);
    Matrix id = Matrix::identity(n_levels);

    DeformedSet s;
    s.n_levels = n_levels;
    s.kappa_hbar = kappa_hbar;
    // time mode momentum is flipped so [x0h, p0h] = i hbar g_00 = -i hbar
    s.x0h = MatrixOperator("x0h", kron(x1.m, id), true);
    s.p0h = MatrixOperator("p0h", kron(p1.m * cd(-1), id), true);
    s.xkh = MatrixOperator("xkh", kron(id, x1.m), true);
    s.pkh = MatrixOperator("pkh", kron(id, p1.m), true);

    // kron(id, a) * kron(id, b) = kron(id, a b): form the dilation on the
    // single-mode blocks, the full product is needless n^6 work
    Matrix dil = kron(id, x1.m * p1.m + p1.m * x1.m);
    s.X0 = MatrixOperator("X0", s.x0h.m + dil * cd(1.0 / (2.0 * kappa_hbar)), true);
    s.Xk = MatrixOperator("Xk", s.xkh.m, true);
    s.P0 = MatrixOperator("P0", s.p0h.m, true);
    s.Pk = MatrixOperator("Pk", s.pkh.m, true);
    return s;
}

StateVector basis_state(int n_levels, int n_time, int n_space, std::string id) {
    StateVector psi;
    psi.id = std::move(id);
    psi.amp.assign(static_cast<size_t>(n_levels) * n_levels, cd(0));
    psi.amp[static_cast<size_t>(n_time) * n_levels + n_space] = 1.0;
    psi.mean_occupation = std::max(n_time, n_space);
    return psi;
}

std::vector<StateVector> random_low_occupation_states(int count, int n_levels,
                                                      unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<StateVector> out;
    int block = std::min(6, n_levels);
    for (int c = 0; c < count; ++c) {
        StateVector psi;
        psi.id = "rand" + std::to_string(c);
        psi.amp.assign(static_cast<size_t>(n_levels) * n_levels, cd(0));
        double norm2 = 0;
        for (int n = 0; n < block; ++n)
            for (int m = 0; m < block; ++m) {
                cd a(u(rng), u(rng));
                psi.amp[static_cast<size_t>(n) * n_levels + m] = a;
                norm2 += std::norm(a);
            }
        double inv = 1.0 / std::sqrt(norm2);
        double occ_t = 0, occ_s = 0;
        for (int n = 0; n < block; ++n)
            for (int m = 0; m < block; ++m) {
                cd& a = psi.amp[static_cast<size_t>(n) * n_levels + m];
                a *= inv;
                occ_t += std::norm(a) * n;
                occ_s += std::norm(a) * m;
            }
        psi.mean_occupation = std::max(occ_t, occ_s);
        out.push_back(std::move(psi));
    }
    return out;
}

std::string rows_to_csv(const std::vector<CsvRow>& rows) {
    std::string out = "state,pair,lhs,rhs,margin\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%.12e,%.12e,%.12e\n", r.state.c_str(),
                      r.pair.c_str(), r.lhs, r.rhs, r.margin);
        out += buf;
    }
    return out;
}

UncertaintyResult check_uncertainty_suite(const DeformedSet& ops,
                                          const std::vector<StateVector>& states) {
    double edge = ops.n_levels / 8.0;
    for (const auto& psi : states)
        if (psi.mean_occupation > edge)
            throw TruncationEdge("state " + psi.id + " has mean occupation " +
                                 std::to_string(psi.mean_occupation) + " > " +
                                 std::to_string(edge));

    double kappa = ops.kappa_hbar;  // hbar = 1
    struct PerState {
        std::vector<CsvRow> rows;
    };
    std::vector<PerState> per(states.size());
    parallel_for(states.size(), [&](size_t si) {
        const StateVector& psi = states[si];
        double dx0 = dispersion(ops.X0, psi), dxk = dispersion(ops.Xk, psi);
        double dp0 = dispersion(ops.P0, psi), dpk = dispersion(ops.Pk, psi);
        double exk = expectation(ops.Xk, psi), epk = expectation(ops.Pk, psi);
        auto row = [&](const std::string& pair, double lhs, double rhs) {
            per[si].rows.push_back({psi.id, pair, lhs, rhs, lhs - rhs});
        };
        row("x0-xk", dx0 * dxk, std::abs(exk) / (2.0 * kappa));
        row("Pk-xl", dpk * dxk, 0.5);
        row("P0-x0", dp0 * dx0, 0.5);
        row("Pk-x0", dpk * dx0, std::abs(epk) / (2.0 * kappa));
        auto robertson = [&](const std::string& pair, const MatrixOperator& a,
                             const MatrixOperator& b, double da, double db) {
            double bound = 0.5 * std::abs(commutator_expectation(a, b, psi));
            per[si].rows.push_back({psi.id, "robertson:" + pair, da * db, bound,
                                    da * db - bound});
        };
        robertson("x0-xk", ops.X0, ops.Xk, dx0, dxk);
        robertson("Pk-xl", ops.Pk, ops.Xk, dpk, dxk);
        robertson("P0-x0", ops.P0, ops.X0, dp0, dx0);
        robertson("Pk-x0", ops.Pk, ops.X0, dpk, dx0);
    });

    UncertaintyResult res;
    std::map<std::string, double> min_margin;
    for (auto& ps : per)
        for (auto& r : ps.rows) {
            auto [it, fresh] = min_margin.emplace(r.pair, r.margin);
            if (!fresh) it->second = std::min(it->second, r.margin);
            res.rows.push_back(std::move(r));
        }
    for (const auto& [pair, margin] : min_margin) {
        std::ostringstream os;
        os << "min margin " << margin << " over " << states.size() << " states";
        std::string id = "uncertainty:" + pair;
        if (margin >= -1e-10)
            res.reports.push_back(CheckReport::pass(id, os.str()));
        else
            res.reports.push_back(CheckReport::fail(id, os.str(), -1));
    }
    return res;
}

std::vector<CheckReport> check_symbolic_numeric(const DeformedSet& ops,
                                                const std::vector<StateVector>& states) {
    double lam = 1.0 / ops.kappa_hbar;  // hbar = 1
    auto comm_apply = [&](const MatrixOperator& a, const MatrixOperator& b,
                          const std::vector<cd>& v) {
        std::vector<cd> ab = numrep::apply(a, numrep::apply(b, v));
        std::vector<cd> ba = numrep::apply(b, numrep::apply(a, v));
        for (size_t k = 0; k < ab.size(); ++k) ab[k] -= ba[k];
        return ab;
    };
    struct Case {
        std::string id;
        const MatrixOperator *a, *b, *rhs_op;  // rhs_op null for scalar rhs
        cd rhs_scale;
    };
    // derived table with hbar = 1: [X0,Xk] = -i lam Xk, [X0,Pk] = i lam Pk,
    // [X0,P0] = -i, [Xk,Pk] = i, [Xk,P0] = 0
    std::vector<Case> cases = {
        {"numeric:[X0,Xk]", &ops.X0, &ops.Xk, &ops.Xk, cd(0, -lam)},
        {"numeric:[X0,Pk]", &ops.X0, &ops.Pk, &ops.Pk, cd(0, lam)},
        {"numeric:[X0,P0]", &ops.X0, &ops.P0, nullptr, cd(0, -1)},
        {"numeric:[Xk,Pk]", &ops.Xk, &ops.Pk, nullptr, cd(0, 1)},
        {"numeric:[Xk,P0]", &ops.Xk, &ops.P0, nullptr, cd(0, 0)},
    };
    std::vector<CheckReport> out;
    for (const auto& c : cases) {
        double worst = 0;
        for (const auto& psi : states) {
            std::vector<cd> got = comm_apply(*c.a, *c.b, psi.amp);
            std::vector<cd> want =
                c.rhs_op ? apply(*c.rhs_op, psi.amp) : psi.amp;
            double diff2 = 0, scale2 = 0;
            for (size_t k = 0; k < got.size(); ++k) {
                cd w = want[k] * c.rhs_scale;
                diff2 += std::norm(got[k] - w);
                scale2 += std::norm(w);
            }
            double rel = std::sqrt(diff2) / std::max(std::sqrt(scale2), 1.0);
            worst = std::max(worst, rel);
        }
        std::ostringstream os;
        os << "max relative error " << worst << " over " << states.size() << " states";
        if (worst < 1e-6)
            out.push_back(CheckReport::pass(c.id, os.str()));
        else
            out.push_back(CheckReport::fail(c.id, os.str(), -1));
    }
    return out;
}

}  // namespace kappad::numrep
