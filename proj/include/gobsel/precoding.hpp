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

// Block diagonalization over effective channels.
//
// For UE k, M0 spans the null space of the stacked channels of all other UEs
// and the SVD of Hbar_k M0 = U1 S1 M1^H gives Vbar_k = M0 M1, Wbar_k = U1.
// Every stream gets the same power rho^2, so with kappa = rho^2 / sigma_n^2
//   SE_k = sum_m log2(1 + kappa s_{k,m}^2).

#ifndef GOBSEL_PRECODING_HPP
#define GOBSEL_PRECODING_HPP

#include "gobsel/training.hpp"

#include <optional>

namespace gob {

struct BdSolution {
    std::vector<CMat> v_bar;          // M_BS x L_k
    std::vector<CMat> w_bar;          // M_UE x L_k
    std::vector<RVec> singular_values; // length L_k
    std::vector<int> streams;

    int n_users() const { return static_cast<int>(v_bar.size()); }
};

inline BdSolution block_diagonalize(const std::vector<CMat>& h_bars, double rank_tol = 1e-9) {
    require(!h_bars.empty(), "block_diagonalize: need at least one UE");
    require(rank_tol > 0.0 && rank_tol < 1.0, "block_diagonalize: rank_tol must lie in (0, 1)");
    const Index m_bs = h_bars.front().cols();
    Index total_rows = 0;
    for (const auto& h : h_bars) {
        require(h.cols() == m_bs, "block_diagonalize: effective channels disagree on M_BS");
        total_rows += h.rows();
    }
    const auto k_users = h_bars.size();
    BdSolution bd;
    bd.v_bar.resize(k_users);
    bd.w_bar.resize(k_users);
    bd.singular_values.resize(k_users);
    bd.streams.resize(k_users);

    for (std::size_t k = 0; k < k_users; ++k) {
        const CMat& hk = h_bars[k];
        CMat others(total_rows - hk.rows(), m_bs);
        Index r = 0;
        for (std::size_t j = 0; j < k_users; ++j) {
            if (j == k)
                continue;
            others.middleRows(r, h_bars[j].rows()) = h_bars[j];
            r += h_bars[j].rows();
        }
        const CMat m0 = k_users == 1 ? CMat(CMat::Identity(m_bs, m_bs)) : null_space(others, rank_tol);
        if (m0.cols() == 0)
            throw InfeasibleAssignment(static_cast<int>(k), "block_diagonalize: interference null space of UE " +
                                                                std::to_string(k) + " is empty");
        const CMat proj = hk * m0;
        Eigen::JacobiSVD<CMat> svd(proj, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const RVec& s = svd.singularValues();
        const double smax_k = hk.size() ? Eigen::JacobiSVD<CMat>(hk).singularValues()(0) : 0.0;
        Index l = 0;
        while (l < s.size() && smax_k > 0.0 && s(l) > rank_tol * smax_k)
            ++l;
        bd.streams[k] = static_cast<int>(l);
        bd.singular_values[k] = s.head(l);
        bd.v_bar[k] = m0 * svd.matrixV().leftCols(l);
        bd.w_bar[k] = svd.matrixU().leftCols(l);
    }
    return bd;
}

inline std::vector<double> se_bd(const BdSolution& bd, double kappa) {
    require(kappa >= 0.0, "se_bd: kappa must be >= 0");
    std::vector<double> se(bd.singular_values.size(), 0.0);
    for (std::size_t k = 0; k < se.size(); ++k)
        for (Index m = 0; m < bd.singular_values[k].size(); ++m)
            se[k] += std::log2(1.0 + kappa * bd.singular_values[k](m) * bd.singular_values[k](m));
    return se;
}

/// Single-user SVD spectral efficiency with equal power per eigenmode.
inline double se_svd(const CMat& h_bar, double kappa) {
    require(kappa >= 0.0, "se_svd: kappa must be >= 0");
    if (h_bar.size() == 0)
        return 0.0;
    const RVec s = Eigen::JacobiSVD<CMat>(h_bar).singularValues();
    double acc = 0.0;
    for (Index m = 0; m < s.size(); ++m)
        acc += std::log2(1.0 + kappa * s(m) * s(m));
    return acc;
}

/// log2 det(I + rho^2 Kbar_k^{-1} Wbar_k^H Hbar_k Vbar_k Vbar_k^H Hbar_k^H Wbar_k) with
///   Kbar_k = rho^2 sum_{j != k} (...) + sigma_n^2 Wbar_k^H W_k^H W_k Wbar_k
/// and rho^2 = kappa * sigma_n^2. w_gob[k] is the GoB combiner W_k (N_UE x M_UE).
inline std::vector<double> se_general(const std::vector<CMat>& h_bars, const std::vector<CMat>& w_gob,
                                      const std::vector<CMat>& v_bar, const std::vector<CMat>& w_bar, double kappa,
                                      double noise_var) {
    const auto k_users = h_bars.size();
    require(w_gob.size() == k_users && v_bar.size() == k_users && w_bar.size() == k_users,
            "se_general: per-UE lists disagree on K");
    require(kappa >= 0.0 && noise_var >= 0.0, "se_general: kappa and noise variance must be >= 0");
    const double rho2 = kappa * noise_var;
    std::vector<double> se(k_users, 0.0);
    for (std::size_t k = 0; k < k_users; ++k) {
        const CMat& wb = w_bar[k];
        if (wb.cols() == 0 || v_bar[k].cols() == 0)
            continue;
        require(wb.rows() == h_bars[k].rows() && w_gob[k].cols() == h_bars[k].rows(), "se_general: combiner shape");
        const CMat g = wb.adjoint() * h_bars[k]; // L_k x M_BS
        CMat kbar = noise_var * (wb.adjoint() * w_gob[k].adjoint() * w_gob[k] * wb);
        for (std::size_t j = 0; j < k_users; ++j) {
            if (j == k || v_bar[j].cols() == 0)
                continue;
            const CMat gj = g * v_bar[j];
            kbar += rho2 * gj * gj.adjoint();
        }
        const CMat gk = g * v_bar[k];
        const CMat sig = rho2 * gk * gk.adjoint();
        Eigen::LLT<CMat> llt(hermitian_part(kbar));
        if (llt.info() != Eigen::Success)
            throw NumericalDomain("se_general: interference-plus-noise covariance of UE " + std::to_string(k) +
                                  " is singular");
        se[k] = log2_det_hpd(kbar + sig) - log2_det_hpd(kbar);
    }
    return se;
}

struct ThroughputReport {
    std::vector<double> se_per_ue;
    double omega = 0.0;
    double throughput = 0.0;

    double sum_se() const {
        double acc = 0.0;
        for (double s : se_per_ue)
            acc += s;
        return acc;
    }
};

inline ThroughputReport effective_throughput(std::vector<double> se_per_ue, double omega) {
    if (!(omega >= 0.0 && omega <= 1.0))
        throw InvalidArgument("effective_throughput: overhead outside [0, 1]");
    ThroughputReport r;
    r.se_per_ue = std::move(se_per_ue);
    r.omega = omega;
    r.throughput = (1.0 - omega) * r.sum_se();
    return r;
}

/// Reciprocity benchmark: BD over the full N_UE x N_BS channels (optionally
/// quantized with q_bits), scored on the true channels, no downlink overhead.
inline ThroughputReport tdd_benchmark(const std::vector<CMat>& h_full, double kappa, double noise_var,
                                      std::optional<int> q_bits = std::nullopt, double rank_tol = 1e-9) {
    require(!h_full.empty(), "tdd_benchmark: need at least one UE");
    std::vector<CMat> csi;
    csi.reserve(h_full.size());
    for (const auto& h : h_full)
        csi.push_back(q_bits ? quantize_feedback(h, *q_bits) : h);
    const BdSolution bd = block_diagonalize(csi, rank_tol);
    std::vector<CMat> w_gob;
    for (const auto& h : h_full)
        w_gob.push_back(CMat::Identity(h.rows(), h.rows()));
    return effective_throughput(se_general(h_full, w_gob, bd.v_bar, bd.w_bar, kappa, noise_var), 0.0);
}

} // namespace gob

#endif // GOBSEL_PRECODING_HPP
