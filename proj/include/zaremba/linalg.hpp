#pragma once
// Small linear-algebra kernels: dense Gaussian elimination for the k x k
// systems of the polytope routines (k <= 4), a CSR matrix with conjugate
// gradients for the finite-volume solvers, and a Thomas solve for the radial
// finite-difference oracle.  All solvers here are deterministic.

#include <cmath>
#include <cstddef>
#include <vector>

#include "zaremba/common.hpp"

namespace zaremba {

// Solve A x = b in place by partial-pivoted elimination.  Returns false when
// the matrix is numerically singular (pivot below `tol`); callers treat that
// as "no intersection point" rather than an error.
inline bool dense_solve(std::vector<std::vector<double>> A, std::vector<double> b,
                        std::vector<double>& x, double tol = 1e-12) {
    const std::size_t k = A.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (std::fabs(A[piv][col]) < tol) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < k; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(k, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < k; ++c) s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return true;
}

struct csr_matrix {
    std::size_t n = 0;
    std::vector<std::size_t> row_ptr;  // n+1 offsets
    std::vector<std::size_t> col;
    std::vector<double> val;

    void multiply(const std::vector<double>& x, std::vector<double>& y) const {
        y.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0;
            for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
                s += val[k] * x[col[k]];
            y[i] = s;
        }
    }
};

// Plain conjugate gradients for SPD systems.  Relative residual stop; the
// iteration cap is generous because the mixed-boundary grids are modest.
struct cg_result {
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
};

inline cg_result conjugate_gradient(const csr_matrix& A, const std::vector<double>& b,
                                    std::vector<double>& x, double tol, int max_iter) {
    const std::size_t n = A.n;
    if (x.size() != n) x.assign(n, 0.0);
    std::vector<double> r(n), p(n), Ap(n);
    A.multiply(x, Ap);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - Ap[i];
    p = r;
    double rr = dot(r, r);
    double nb = std::sqrt(dot(b, b));
    if (nb == 0.0) {
        x.assign(n, 0.0);
        return {0, 0.0, true};
    }
    cg_result out;
    for (int it = 0; it < max_iter; ++it) {
        if (std::sqrt(rr) <= tol * nb) {
            out.converged = true;
            break;
        }
        A.multiply(p, Ap);
        double alpha = rr / dot(p, Ap);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
        }
        double rr_new = dot(r, r);
        double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        out.iterations = it + 1;
    }
    out.relative_residual = std::sqrt(rr) / nb;
    if (std::sqrt(rr) <= tol * nb) out.converged = true;
    return out;
}

// Tridiagonal solve (Thomas algorithm): diag a, sub-diagonal l, super-diagonal
// u.  The radial finite-difference oracle is symmetric positive definite, so
// no pivoting is needed.
inline void tridiagonal_solve(const std::vector<double>& l, const std::vector<double>& a,
                              const std::vector<double>& u, std::vector<double> b,
                              std::vector<double>& x) {
    const std::size_t n = a.size();
    std::vector<double> c(n);
    x.assign(n, 0.0);
    c[0] = u.empty() ? 0.0 : u[0] / a[0];
    b[0] /= a[0];
    for (std::size_t i = 1; i < n; ++i) {
        double m = a[i] - l[i - 1] * c[i - 1];
        c[i] = (i < n - 1) ? u[i] / m : 0.0;
        b[i] = (b[i] - l[i - 1] * b[i - 1]) / m;
    }
    x[n - 1] = b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = b[i] - c[i] * x[i + 1];
}

}  // namespace zaremba
