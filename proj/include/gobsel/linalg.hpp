// SPDX-License-Identifier: Apache-2.0
//
// gobsel: coordinated grid-of-beams selection for FDD multi-user massive MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef GOBSEL_LINALG_HPP
#define GOBSEL_LINALG_HPP

#include "gobsel/types.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace gob {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent stream seeds from counters.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(mix64(base) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

/// Matrix of i.i.d. CN(0, 1) entries.
inline CMat randn_complex(Rng& rng, Index rows, Index cols) {
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    CMat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) {
            const double re = nd(rng);
            const double im = nd(rng);
            m(i, j) = cplx(re, im);
        }
    return m;
}

/// Column-major vectorization.
inline CVec vec(const CMat& m) {
    return Eigen::Map<const CVec>(m.data(), m.size());
}

inline CMat unvec(const CVec& v, Index rows, Index cols) {
    if (v.size() != rows * cols)
        throw InvalidArgument("unvec: size mismatch");
    return Eigen::Map<const CMat>(v.data(), rows, cols);
}

inline CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline double hermitian_defect(const CMat& m) {
    const double n = m.norm();
    if (n == 0.0)
        return 0.0;
    return (m - m.adjoint()).norm() / n;
}

inline CMat hermitian_part(const CMat& m) {
    return 0.5 * (m + m.adjoint());
}

/// Principal submatrix on the given (sorted or unsorted) index list.
inline CMat principal_submatrix(const CMat& m, std::span<const int> idx) {
    const auto n = static_cast<Index>(idx.size());
    CMat out(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            out(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    return out;
}

/// Hermitian square root through the eigendecomposition. Eigenvalues in
/// [-tol * lambda_max, 0) are clipped to zero; anything more negative is a
/// numerical-domain error.
inline CMat psd_sqrt(const CMat& sigma, double rel_tol = 1e-10) {
    if (sigma.rows() != sigma.cols())
        throw InvalidArgument("psd_sqrt: matrix is not square");
    if (sigma.size() == 0 || sigma.norm() == 0.0)
        return CMat::Zero(sigma.rows(), sigma.cols());
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(sigma));
    if (es.info() != Eigen::Success)
        throw NumericalDomain("psd_sqrt: eigendecomposition failed");
    RVec ev = es.eigenvalues();
    const double lmax = std::max(ev.maxCoeff(), 0.0);
    if (ev.minCoeff() < -rel_tol * std::max(lmax, 1e-300))
        throw NumericalDomain("psd_sqrt: matrix is not positive semidefinite");
    // Round-off eigenvalues of a rank-deficient input are treated as zero.
    ev = (ev.array() <= rel_tol * lmax).select(0.0, ev).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

/// Numerical rank with singular values below rel_tol * sigma_max treated as zero.
inline Index numerical_rank(const CMat& m, double rel_tol = 1e-9) {
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<CMat> svd(m);
    const RVec& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0)
        return 0;
    Index r = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0))
            ++r;
    return r;
}

/// Orthonormal basis of the right null space of m (columns), cols() x (cols() - rank).
inline CMat null_space(const CMat& m, double rel_tol = 1e-9) {
    const Index n = m.cols();
    if (m.rows() == 0 || m.norm() == 0.0)
        return CMat::Identity(n, n);
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
    const RVec& s = svd.singularValues();
    Index r = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0))
            ++r;
    return svd.matrixV().rightCols(n - r);
}

inline double log2_det_hpd(const CMat& m) {
    Eigen::LLT<CMat> llt(hermitian_part(m));
    if (llt.info() != Eigen::Success)
        throw NumericalDomain("log2_det_hpd: matrix is not positive definite");
    const CMat& l = llt.matrixLLT();
    double acc = 0.0;
    for (Index i = 0; i < l.rows(); ++i)
        acc += std::log2(std::real(l(i, i)));
    return 2.0 * acc;
}

} // namespace gob

#endif // GOBSEL_LINALG_HPP
