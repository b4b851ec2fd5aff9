// Householder tridiagonalization + implicit-shift QL for Hermitian matrices.
//
// The matrix is first split into connected components of its coupling graph
// (exact zero off-diagonal entries), so symmetry-decoupled Hamiltonians are
// diagonalized block by block. Each block is reduced with complex Householder
// reflectors H = I - tau v v^H (v[0] = 1) chosen so the subdiagonal is real,
// giving T = Q^H A Q with Q = H_0 H_1 ... H_{m-2}. The real symmetric
// tridiagonal T is diagonalized by QL with Wilkinson-style shifts, rotations
// accumulated into Z, and eigenvectors are recovered as Q Z.

#include "rwa/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rwa {

namespace {

struct Block {
    std::vector<std::size_t> indices;
};

std::vector<Block> coupled_blocks(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j) == Complex(0.0, 0.0) && a(j, i) == Complex(0.0, 0.0)) continue;
            const std::size_t ri = find(i), rj = find(j);
            if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }
    std::vector<Block> blocks;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[r]].indices.push_back(i);
    }
    return blocks;
}

// Column-major Hermitian working block; only the lower triangle is referenced.
struct Workspace {
    std::size_t m = 0;
    std::vector<Complex> a;
    Complex& at(std::size_t i, std::size_t j) { return a[j * m + i]; }
};

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // off[k] couples k and k+1; off[m-1] = 0
    std::vector<Complex> tau;
};

Tridiagonal tridiagonalize(Workspace& w) {
    const std::size_t m = w.m;
    Tridiagonal t;
    t.diag.assign(m, 0.0);
    t.off.assign(m, 0.0);
    t.tau.assign(m, Complex(0.0, 0.0));
    std::vector<Complex> y(m), u(m);

    for (std::size_t k = 0; k + 1 < m; ++k) {
        const std::size_t len = m - k - 1;
        Complex* v = &w.a[k * m + k + 1];
        const Complex alpha = v[0];
        double xnorm2 = 0.0;
        for (std::size_t i = 1; i < len; ++i) xnorm2 += std::norm(v[i]);

        Complex tau(0.0, 0.0);
        double beta = alpha.real();
        if (xnorm2 != 0.0 || alpha.imag() != 0.0) {
            beta = -std::copysign(std::sqrt(std::norm(alpha) + xnorm2), alpha.real());
            tau = Complex((beta - alpha.real()) / beta, -alpha.imag() / beta);
            const Complex scale = 1.0 / (alpha - beta);
            for (std::size_t i = 1; i < len; ++i) v[i] *= scale;
        }
        t.off[k] = beta;
        t.tau[k] = tau;
        t.diag[k] = w.at(k, k).real();

        if (tau == Complex(0.0, 0.0)) continue;
        v[0] = 1.0;

        // y = A_trail v using the lower triangle of the trailing block.
        std::fill(y.begin(), y.begin() + len, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < len; ++j) {
            const Complex* col = &w.a[(k + 1 + j) * m + k + 1];
            const Complex vj = v[j];
            double sr = 0.0, si = 0.0;
            for (std::size_t i = j + 1; i < len; ++i) {
                y[i] += col[i] * vj;
                // conj(col[i]) * v[i]
                sr += col[i].real() * v[i].real() + col[i].imag() * v[i].imag();
                si += col[i].real() * v[i].imag() - col[i].imag() * v[i].real();
            }
            y[j] += col[j].real() * vj + Complex(sr, si);
        }

        // u = tau y - 1/2 |tau|^2 (v^H y) v; then A -= v u^H + u v^H.
        const double vhy = inner(std::span<const Complex>(v, len), std::span<const Complex>(y.data(), len)).real();
        const double coef = -0.5 * std::norm(tau) * vhy;
        for (std::size_t i = 0; i < len; ++i) u[i] = tau * y[i] + coef * v[i];

        for (std::size_t j = 0; j < len; ++j) {
            Complex* col = &w.a[(k + 1 + j) * m + k + 1];
            const Complex cu = std::conj(u[j]);
            const Complex cv = std::conj(v[j]);
            for (std::size_t i = j; i < len; ++i) col[i] -= v[i] * cu + u[i] * cv;
            col[j] = Complex(col[j].real(), 0.0);
        }
    }
    t.diag[m - 1] = w.at(m - 1, m - 1).real();
    return t;
}

// Implicit QL on (d, e). When zt is non-null it holds Z^T (row r = eigenvector r)
// and accumulates the rotations.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>* zt, std::size_t dim_for_errors) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t mm;
        do {
            for (mm = l; mm + 1 < n; ++mm) {
                const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
                if (std::abs(e[mm]) <= DBL_EPSILON * dd) break;
            }
            if (mm == l) break;
            if (iter++ == ql_iteration_cap) {
                std::ostringstream msg;
                msg << "hermitian_eig: QL iteration did not converge for a matrix of dimension " << dim_for_errors
                    << " (cap " << ql_iteration_cap << " iterations per eigenvalue)";
                throw NumericalError(msg.str());
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t ip1 = mm; ip1 > l; --ip1) {
                const std::size_t i = ip1 - 1;
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[mm] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (zt) {
                    double* zi = &(*zt)[i * n];
                    double* zi1 = &(*zt)[(i + 1) * n];
                    for (std::size_t k = 0; k < n; ++k) {
                        const double fz = zi1[k];
                        zi1[k] = s * zi[k] + c * fz;
                        zi[k] = c * zi[k] - s * fz;
                    }
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[mm] = 0.0;
        } while (mm != l);
    }
}

// x <- Q x with Q = H_0 ... H_{m-2}; reflectors live below the subdiagonal of w.
void apply_q(const Workspace& w, const Tridiagonal& t, std::span<Complex> x) {
    const std::size_t m = w.m;
    for (std::size_t kp1 = m - 1; kp1 > 0; --kp1) {
        const std::size_t k = kp1 - 1;
        const Complex tau = t.tau[k];
        if (tau == Complex(0.0, 0.0)) continue;
        const std::size_t len = m - k - 1;
        const Complex* v = &w.a[k * m + k + 1];
        Complex* xs = x.data() + k + 1;
        // s = v^H x with v[0] = 1
        Complex s = xs[0];
        for (std::size_t i = 1; i < len; ++i) s += std::conj(v[i]) * xs[i];
        s *= tau;
        xs[0] -= s;
        for (std::size_t i = 1; i < len; ++i) xs[i] -= s * v[i];
    }
}

void check_hermitian(const ComplexMatrix& a, double tol) {
    if (a.empty()) throw std::invalid_argument("hermitian_eig: empty matrix");
    for (const auto& z : a.data())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("hermitian_eig: matrix has non-finite entries");
    const double scale = a.max_abs();
    const double dev = a.hermiticity_deviation();
    if (dev > tol * scale) {
        std::ostringstream msg;
        msg << "hermitian_eig: matrix is not Hermitian (max |A_ij - conj(A_ji)| = " << dev << ", allowed "
            << tol * scale << ")";
        throw std::invalid_argument(msg.str());
    }
}

struct BlockResult {
    std::vector<double> values;
    std::vector<ComplexVector> vectors;  // length = block size
};

Workspace gather(const ComplexMatrix& a, const Block& blk) {
    Workspace w;
    w.m = blk.indices.size();
    w.a.assign(w.m * w.m, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < w.m; ++j)
        for (std::size_t i = j; i < w.m; ++i) {
            // Hermitian average so a tolerably non-Hermitian input is treated consistently.
            const Complex lo = a(blk.indices[i], blk.indices[j]);
            const Complex up = a(blk.indices[j], blk.indices[i]);
            w.at(i, j) = 0.5 * (lo + std::conj(up));
        }
    return w;
}

BlockResult solve_block(const ComplexMatrix& a, const Block& blk, bool want_vectors) {
    Workspace w = gather(a, blk);
    const std::size_t m = w.m;
    BlockResult out;
    if (m == 1) {
        out.values = {w.at(0, 0).real()};
        if (want_vectors) out.vectors = {ComplexVector{Complex(1.0, 0.0)}};
        return out;
    }
    Tridiagonal t = tridiagonalize(w);
    std::vector<double> d = t.diag;
    std::vector<double> e = t.off;
    std::vector<double> zt;
    if (want_vectors) {
        zt.assign(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) zt[i * m + i] = 1.0;
    }
    tridiagonal_ql(d, e, want_vectors ? &zt : nullptr, a.dim());
    out.values = d;
    if (want_vectors) {
        out.vectors.resize(m);
        for (std::size_t r = 0; r < m; ++r) {
            ComplexVector x(m);
            for (std::size_t k = 0; k < m; ++k) x[k] = zt[r * m + k];
            apply_q(w, t, x);
            const double nrm = norm(x);
            for (auto& z : x) z /= nrm;
            out.vectors[r] = std::move(x);
        }
    }
    return out;
}

struct Pair {
    double value;
    std::size_t block;
    std::size_t local;
};

std::vector<Pair> sorted_pairs(const std::vector<BlockResult>& results) {
    std::vector<Pair> pairs;
    for (std::size_t b = 0; b < results.size(); ++b)
        for (std::size_t i = 0; i < results[b].values.size(); ++i) pairs.push_back({results[b].values[i], b, i});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.value < y.value; });
    return pairs;
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& a, double tol) {
    check_hermitian(a, tol);
    const auto blocks = coupled_blocks(a);
    std::vector<BlockResult> results;
    results.reserve(blocks.size());
    for (const auto& blk : blocks) results.push_back(solve_block(a, blk, true));

    const std::size_t n = a.dim();
    EigenSystem es;
    es.values.reserve(n);
    es.vectors.reserve(n);
    for (const Pair& p : sorted_pairs(results)) {
        es.values.push_back(p.value);
        ComplexVector v(n, Complex(0.0, 0.0));
        const auto& idx = blocks[p.block].indices;
        const auto& local = results[p.block].vectors[p.local];
        for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local[k];
        es.vectors.push_back(std::move(v));
    }

    // Residual restricted to each block's nonzero couplings.
    double residual = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& idx = blocks[b].indices;
        const std::size_t m = idx.size();
        std::vector<std::size_t> row_start(m + 1, 0);
        std::vector<std::size_t> cols;
        std::vector<Complex> vals;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const Complex z = a(idx[i], idx[j]);
                if (z != Complex(0.0, 0.0)) {
                    cols.push_back(j);
                    vals.push_back(z);
                }
            }
            row_start[i + 1] = cols.size();
        }
        for (std::size_t r = 0; r < m; ++r) {
            const auto& x = results[b].vectors[r];
            const double lambda = results[b].values[r];
            for (std::size_t i = 0; i < m; ++i) {
                Complex s(0.0, 0.0);
                for (std::size_t p = row_start[i]; p < row_start[i + 1]; ++p) s += vals[p] * x[cols[p]];
                residual = std::max(residual, std::abs(s - lambda * x[i]));
            }
        }
    }
    es.residual = residual;
    const double bound = tol * a.max_abs();
    if (residual > bound && bound > 0.0) {
        std::ostringstream msg;
        msg << "hermitian_eig: eigen-residual " << residual << " exceeds " << bound << " for dimension " << n;
        throw NumericalError(msg.str());
    }
    return es;
}

std::vector<double> hermitian_eigvals(const ComplexMatrix& a, double tol) {
    check_hermitian(a, tol);
    const auto blocks = coupled_blocks(a);
    std::vector<BlockResult> results;
    results.reserve(blocks.size());
    for (const auto& blk : blocks) results.push_back(solve_block(a, blk, false));
    std::vector<double> values;
    values.reserve(a.dim());
    for (const Pair& p : sorted_pairs(results)) values.push_back(p.value);
    return values;
}

}  // namespace rwa
