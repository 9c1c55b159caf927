// Copyright 2026 The qbasis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace qbasis {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = std::conj(data[i]);
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols != rhs.rows) throw invalid_input_error("matrix product: inner dimensions differ");
    CMatrix m(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) m(i, j) += aik * rhs(k, j);
        }
    }
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw invalid_input_error("matrix sum: shape mismatch");
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = data[i] + rhs.data[i];
    return m;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw invalid_input_error("matrix difference: shape mismatch");
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = data[i] - rhs.data[i];
    return m;
}

CMatrix CMatrix::scaled(cplx factor) const {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = factor * data[i];
    return m;
}

std::vector<cplx> CMatrix::apply(const std::vector<cplx>& v) const {
    if (v.size() != cols) throw invalid_input_error("matrix-vector product: size mismatch");
    std::vector<cplx> out(rows, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < rows; ++i) {
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < cols; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : data) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double s = 0.0;
    for (const cplx& z : data) s = std::max(s, std::abs(z));
    return s;
}

bool CMatrix::is_unitary(double tol) const {
    if (!is_square()) return false;
    CMatrix g = adjoint() * (*this);
    for (std::size_t i = 0; i < rows; ++i) g(i, i) -= 1.0;
    return g.frobenius_norm() <= tol;
}

cplx determinant(const CMatrix& a) {
    if (!a.is_square()) throw invalid_input_error("determinant: matrix must be square");
    const std::size_t n = a.rows;
    if (n == 0) return cplx(1.0, 0.0);
    CMatrix lu = a;
    cplx det(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(lu(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best == 0.0) return cplx(0.0, 0.0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = lu(i, k) / lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

EigResult hermitian_eig(const CMatrix& a) {
    if (!a.is_square()) throw invalid_input_error("hermitian_eig: matrix must be square");
    const std::size_t n = a.rows;
    CMatrix h = a;
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(h.max_abs(), 1e-300);
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
        if (off <= 1e-15 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = h(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale) continue;
                // Phase so that the 2x2 pivot becomes real symmetric.
                const cplx phase = apq / mag;
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                 : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;
                // Columns: [hp, hq] <- [hp, hq] * [[c, -conj(s)...]]; apply as
                // a two-sided similarity J^dag H J with J = [[c, -s],[conj(s), c]].
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx hip = h(i, p), hiq = h(i, q);
                    h(i, p) = c * hip + std::conj(s) * hiq;
                    h(i, q) = -s * hip + c * hiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx hpj = h(p, j), hqj = h(q, j);
                    h(p, j) = c * hpj + s * hqj;
                    h(q, j) = -std::conj(s) * hpj + c * hqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + std::conj(s) * viq;
                    v(i, q) = -s * vip + c * viq;
                }
            }
        }
    }
    EigResult res;
    res.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.values[i] = h(i, i).real();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return res.values[x] < res.values[y]; });
    EigResult sorted;
    sorted.values.resize(n);
    sorted.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted.values[j] = res.values[order[j]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, j) = v(i, order[j]);
    }
    return sorted;
}

CMatrix expm(const CMatrix& a) {
    if (!a.is_square()) throw invalid_input_error("expm: matrix must be square");
    const std::size_t n = a.rows;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
        norm = std::max(norm, row);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.25) {
        scale *= 0.5;
        ++squarings;
    }
    CMatrix t = a.scaled(scale);
    CMatrix result = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = term * t;
        term = term.scaled(1.0 / static_cast<double>(k));
        result = result + term;
        if (term.frobenius_norm() < 1e-20 * std::max(1.0, result.frobenius_norm())) break;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

CMatrix unitary_log(const CMatrix& u, double tol) {
    if (!u.is_square()) throw invalid_input_error("unitary_log: matrix must be square");
    if (!u.is_unitary(tol)) throw invalid_input_error("unitary_log: input is not unitary within tolerance");
    const std::size_t n = u.rows;
    const CMatrix ud = u.adjoint();
    // Real and imaginary Hermitian parts commute for unitary input; a generic
    // combination separates their joint eigenspaces.
    const CMatrix cos_part = (u + ud).scaled(0.5);
    const CMatrix sin_part = (u - ud).scaled(cplx(0.0, -0.5));
    const double mix_weights[] = {0.7302756637629274, 0.3190831357796911, 1.4142135623730951};
    for (double w : mix_weights) {
        const EigResult eig = hermitian_eig(cos_part + sin_part.scaled(w));
        CMatrix h(n, n);
        const CMatrix vut = eig.vectors.adjoint() * u * eig.vectors;
        bool diagonal = true;
        for (std::size_t i = 0; i < n && diagonal; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && std::abs(vut(i, j)) > 1e-11) {
                    diagonal = false;
                    break;
                }
        if (!diagonal) continue;
        CMatrix log_diag(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = std::arg(vut(i, i));  // principal branch (-pi, pi]
            log_diag(i, i) = cplx(0.0, phase);
        }
        h = eig.vectors * log_diag * eig.vectors.adjoint();
        if ((expm(h) - u).frobenius_norm() <= std::max(tol, 1e-10)) return h;
    }
    throw internal_error("unitary_log: joint diagonalization failed to converge");
}

SvdResult svd(const CMatrix& a) {
    if (a.rows == 0 || a.cols == 0) throw invalid_input_error("svd: empty matrix");
    const std::size_t m = a.rows, n = a.cols;
    if (m < n) throw invalid_input_error("svd: rows must be >= cols");
    CMatrix w = a;                       // columns rotated in place
    CMatrix v = CMatrix::identity(n);    // accumulated right rotations
    double gscale = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(w(i, j));
        gscale = std::max(gscale, s);
    }
    gscale = std::max(gscale, 1e-300);
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq(0.0, 0.0);
                for (std::size_t i = 0; i < m; ++i) {
                    app += std::norm(w(i, p));
                    aqq += std::norm(w(i, q));
                    apq += std::conj(w(i, p)) * w(i, q);
                }
                const double mag = std::abs(apq);
                worst = std::max(worst, mag / gscale);
                if (mag <= 1e-15 * gscale) continue;
                const cplx phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                 : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;
                for (std::size_t i = 0; i < m; ++i) {
                    const cplx wip = w(i, p), wiq = w(i, q);
                    w(i, p) = c * wip + std::conj(s) * wiq;
                    w(i, q) = -s * wip + c * wiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + std::conj(s) * viq;
                    v(i, q) = -s * vip + c * viq;
                }
            }
        }
        if (worst <= 1e-14) break;
    }
    SvdResult res;
    res.sigma.resize(n);
    res.L = CMatrix(m, n);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(w(i, j));
        res.sigma[j] = std::sqrt(s);
        if (res.sigma[j] > 1e-300) {
            for (std::size_t i = 0; i < m; ++i) res.L(i, j) = w(i, j) / res.sigma[j];
        } else {
            res.sigma[j] = 0.0;
            zero_cols.push_back(j);
        }
    }
    // Complete zero-sigma columns of L to an orthonormal set. Columns already
    // filled: all sigma > 0 columns, plus zero columns completed earlier.
    std::vector<bool> filled(n, false);
    for (std::size_t j = 0; j < n; ++j) filled[j] = res.sigma[j] > 0.0;
    for (std::size_t j : zero_cols) {
        for (std::size_t seed = 0; seed < m; ++seed) {
            std::vector<cplx> cand(m, cplx(0.0, 0.0));
            cand[seed] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (!filled[k]) continue;
                    cplx proj(0.0, 0.0);
                    for (std::size_t i = 0; i < m; ++i) proj += std::conj(res.L(i, k)) * cand[i];
                    for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * res.L(i, k);
                }
            }
            double nn = 0.0;
            for (const cplx& z : cand) nn += std::norm(z);
            if (nn > 1e-4) {
                nn = std::sqrt(nn);
                for (std::size_t i = 0; i < m; ++i) res.L(i, j) = cand[i] / nn;
                filled[j] = true;
                break;
            }
        }
    }
    // Sort non-increasing.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return res.sigma[x] > res.sigma[y]; });
    SvdResult sorted;
    sorted.sigma.resize(n);
    sorted.L = CMatrix(m, n);
    sorted.R = CMatrix(n, n);
    const CMatrix vdag = v.adjoint();
    for (std::size_t j = 0; j < n; ++j) {
        sorted.sigma[j] = res.sigma[order[j]];
        for (std::size_t i = 0; i < m; ++i) sorted.L(i, j) = res.L(i, order[j]);
        for (std::size_t k = 0; k < n; ++k) sorted.R(j, k) = vdag(order[j], k);
    }
    return sorted;
}

double two_norm(const CMatrix& a) {
    const std::size_t n = a.cols;
    if (n == 0) return 0.0;
    const CMatrix g = a.adjoint() * a;  // Hermitian PSD
    std::vector<cplx> x(n);
    // Fixed deterministic start vector with nonzero overlap w.h.p.
    for (std::size_t i = 0; i < n; ++i)
        x[i] = cplx(std::cos(0.7 * static_cast<double>(i) + 0.3), std::sin(1.3 * static_cast<double>(i) + 0.1));
    double lambda = 0.0;
    for (int it = 0; it < 2000; ++it) {
        std::vector<cplx> y = g.apply(x);
        double nn = 0.0;
        for (const cplx& z : y) nn += std::norm(z);
        nn = std::sqrt(nn);
        if (nn == 0.0) return 0.0;
        for (cplx& z : y) z /= nn;
        double next = 0.0;
        std::vector<cplx> gy = g.apply(y);
        for (std::size_t i = 0; i < n; ++i) next += (std::conj(y[i]) * gy[i]).real();
        x = std::move(y);
        if (it > 10 && std::abs(next - lambda) <= 1e-15 * std::max(1.0, next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(0.0, lambda));
}

}  // namespace qbasis
