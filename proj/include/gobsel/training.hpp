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

// Downlink beam training and LMMSE estimation of the effective channel
// Hbar_k = W_k^H H_k V (M_UE x M_BS).
//
// The received pilot block is Y_k = rho W_k^H H_k V S + W_k^H N_k, and with
//   A = S^T (x) I_{M_UE},   Gamma = I_tau (x) W_k^H
// the LMMSE estimate is
//   vec(Hhat) = rho Sb A^H (rho^2 A Sb A^H + sigma_n^2 Gamma Gamma^H)^{-1} vec(Y)
// with error covariance (Sb^{-1} + kappa A^H (Gamma Gamma^H)^{-1} A)^{-1},
// where Sb is the effective covariance and kappa = rho^2 / sigma_n^2.

#ifndef GOBSEL_TRAINING_HPP
#define GOBSEL_TRAINING_HPP

#include "gobsel/linalg.hpp"

#include <numbers>
#include <numeric>

namespace gob {

/// Resource elements in one coherence frame: 25 RBs x 12 subcarriers x 14 symbols per ms.
inline double frame_resource_elements(double t_coh_ms) {
    return 14.0 * 12.0 * 25.0 * t_coh_ms;
}

struct TrainingConfig {
    int tau = 1;           // pilot length per beam
    double t_total = 1.0;  // resource elements in the coherence frame
    double power = 1.0;    // total transmit power over the frame
    double noise_var = 1.0;

    double rho() const { return std::sqrt(power / t_total); }
    double kappa() const { return power / t_total / noise_var; }

    /// rho = 1, sigma_n^2 = 1 / kappa.
    static TrainingConfig from_kappa(double kappa, int tau, double t_total) {
        require(kappa > 0.0, "TrainingConfig: kappa must be positive");
        TrainingConfig c;
        c.tau = tau;
        c.t_total = t_total;
        c.power = t_total;
        c.noise_var = 1.0 / kappa;
        c.validate();
        return c;
    }

    void validate() const {
        require(tau >= 1, "TrainingConfig: tau must be >= 1");
        require(t_total > 0.0, "TrainingConfig: t_total must be positive");
        require(power >= 0.0, "TrainingConfig: power must be >= 0");
        require(noise_var >= 0.0, "TrainingConfig: noise variance must be >= 0");
    }
};

inline bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline int next_prime(int n) {
    int p = std::max(n, 2);
    while (!is_prime(p))
        ++p;
    return p;
}

struct PilotMatrix {
    CMat s; // M_BS x tau, S S^H = I
};

/// Rows are cyclic shifts 0..m_bs-1 of the length-tau Zadoff-Chu sequence with
/// the given root, scaled by 1/sqrt(tau).
inline PilotMatrix pilot_matrix(int m_bs, int tau, int root) {
    require(m_bs >= 1, "pilot_matrix: m_bs must be >= 1");
    require(tau >= m_bs, "pilot_matrix: tau must be >= m_bs for orthogonal pilots");
    require(root >= 1 && std::gcd(root, tau) == 1, "pilot_matrix: root must be coprime with tau");
    const int cf = tau % 2;
    CVec zc(tau);
    for (int n = 0; n < tau; ++n) {
        // n*(n+cf) computed modulo 2*tau keeps the phase argument small.
        const long long arg = (static_cast<long long>(root) * n % (2LL * tau)) * (n + cf) % (2LL * tau);
        zc(n) = std::polar(1.0, -std::numbers::pi * static_cast<double>(arg) / tau);
    }
    PilotMatrix p;
    p.s.resize(m_bs, tau);
    const double scale = 1.0 / std::sqrt(static_cast<double>(tau));
    for (int m = 0; m < m_bs; ++m)
        for (int n = 0; n < tau; ++n)
            p.s(m, n) = scale * zc((n - m + tau) % tau);
    return p;
}

/// Y_k = rho W_k^H H_k V S + W_k^H N_k with the given noise block N_k (N_UE x tau).
inline CMat received_training(const CMat& h, const CMat& v, const CMat& w_k, const PilotMatrix& s,
                              const TrainingConfig& cfg, const CMat& noise) {
    require(h.rows() == w_k.rows() && h.cols() == v.rows() && v.cols() == s.s.rows(),
            "received_training: dimension mismatch");
    require(noise.rows() == h.rows() && noise.cols() == s.s.cols(), "received_training: noise block shape");
    return cfg.rho() * (w_k.adjoint() * h * v) * s.s + w_k.adjoint() * noise;
}

/// Same as above with N_k drawn i.i.d. CN(0, sigma_n^2).
inline CMat received_training(const CMat& h, const CMat& v, const CMat& w_k, const PilotMatrix& s,
                              const TrainingConfig& cfg, Rng& rng) {
    const CMat noise = std::sqrt(cfg.noise_var) * randn_complex(rng, h.rows(), s.s.cols());
    return received_training(h, v, w_k, s, cfg, noise);
}

/// LMMSE estimate of vec(Hbar_k), formed exactly as the textbook expression
/// (inverts a tau*M_UE square matrix).
inline CVec lmmse_estimate(const CMat& y, const CMat& sigma_bar, const PilotMatrix& s, const CMat& w_k,
                           const TrainingConfig& cfg) {
    const Index m_ue = w_k.cols();
    const Index tau = s.s.cols();
    require(y.rows() == m_ue && y.cols() == tau, "lmmse_estimate: Y shape");
    require(sigma_bar.rows() == s.s.rows() * m_ue, "lmmse_estimate: covariance shape");
    const double rho = cfg.rho();
    const CMat a = kron(s.s.transpose(), CMat::Identity(m_ue, m_ue));
    const CMat gamma = kron(CMat::Identity(tau, tau), w_k.adjoint());
    const CMat inner = rho * rho * a * sigma_bar * a.adjoint() + cfg.noise_var * gamma * gamma.adjoint();
    Eigen::FullPivLU<CMat> lu(inner);
    if (!lu.isInvertible())
        throw NumericalDomain("lmmse_estimate: singular observation covariance");
    return rho * sigma_bar * a.adjoint() * lu.solve(vec(y));
}

/// Same estimate computed from the sufficient statistic G^{-1} Y S^H
/// (G = W^H W); cost independent of tau.
inline CVec lmmse_estimate_reduced(const CMat& y, const CMat& sigma_bar, const PilotMatrix& s, const CMat& w_k,
                                   const TrainingConfig& cfg) {
    const Index m_ue = w_k.cols();
    const Index dim = s.s.rows() * m_ue;
    require(y.rows() == m_ue && y.cols() == s.s.cols(), "lmmse_estimate_reduced: Y shape");
    require(sigma_bar.rows() == dim, "lmmse_estimate_reduced: covariance shape");
    const double rho = cfg.rho();
    const CMat g = w_k.adjoint() * w_k;
    Eigen::LLT<CMat> g_llt(g);
    if (g_llt.info() != Eigen::Success)
        throw NumericalDomain("lmmse_estimate_reduced: combiner columns are dependent");
    const CMat g_inv = g_llt.solve(CMat::Identity(m_ue, m_ue));
    const CMat j = kron(CMat(s.s * s.s.adjoint()).conjugate(), g_inv);
    const CVec r = vec(g_inv * y * s.s.adjoint());
    const CMat lhs = rho * rho * sigma_bar * j + cfg.noise_var * CMat::Identity(dim, dim);
    Eigen::FullPivLU<CMat> lu(lhs);
    if (!lu.isInvertible())
        throw NumericalDomain("lmmse_estimate_reduced: singular system");
    return rho * lu.solve(CVec(sigma_bar * r));
}

/// Error covariance (Sb^{-1} + kappa A^H (Gamma Gamma^H)^{-1} A)^{-1}. A singular
/// Sb is regularized by 1e-10 * tr(Sb) / dim on the diagonal.
inline CMat lmmse_error_covariance(const CMat& sigma_bar, const PilotMatrix& s, const CMat& w_k, double kappa) {
    const Index m_ue = w_k.cols();
    const Index dim = s.s.rows() * m_ue;
    require(sigma_bar.rows() == dim && sigma_bar.cols() == dim, "lmmse_error_covariance: covariance shape");
    require(kappa >= 0.0, "lmmse_error_covariance: kappa must be >= 0");
    if (sigma_bar.norm() == 0.0)
        return CMat::Zero(dim, dim);

    CMat sb = hermitian_part(sigma_bar);
    Eigen::SelfAdjointEigenSolver<CMat> es(sb, Eigen::EigenvaluesOnly);
    const RVec& ev = es.eigenvalues();
    if (ev.minCoeff() <= 1e-12 * ev.maxCoeff()) {
        const double eps = 1e-10 * std::real(sb.trace()) / static_cast<double>(dim);
        sb.diagonal().array() += eps;
    }
    Eigen::LLT<CMat> sb_llt(sb);
    if (sb_llt.info() != Eigen::Success)
        throw NumericalDomain("lmmse_error_covariance: covariance is not positive semidefinite");
    const CMat sb_inv = sb_llt.solve(CMat::Identity(dim, dim));

    const CMat g = w_k.adjoint() * w_k;
    const CMat g_inv = g.llt().solve(CMat::Identity(m_ue, m_ue));
    // A^H (Gamma Gamma^H)^{-1} A = conj(S S^H) (x) (W^H W)^{-1}
    const CMat info = kron(CMat(s.s * s.s.adjoint()).conjugate(), g_inv);
    const CMat d = hermitian_part(sb_inv + kappa * info);
    return hermitian_part(d.llt().solve(CMat::Identity(dim, dim)));
}

/// Element-wise mid-rise uniform quantizer on [-a, a] with 2^q_bits levels per
/// real and imaginary part; a = max |Re|, |Im| of m is assumed known at the receiver.
inline CMat quantize_feedback(const CMat& m, int q_bits) {
    require(q_bits >= 1 && q_bits <= 52, "quantize_feedback: q_bits must lie in [1, 52]");
    double a = 0.0;
    for (Index i = 0; i < m.size(); ++i)
        a = std::max({a, std::abs(m.data()[i].real()), std::abs(m.data()[i].imag())});
    if (a == 0.0)
        return CMat::Zero(m.rows(), m.cols());
    const double levels = std::ldexp(1.0, q_bits);
    const double step = 2.0 * a / levels;
    auto q = [&](double x) {
        const double idx = std::clamp(std::floor((x + a) / step), 0.0, levels - 1.0);
        return -a + (idx + 0.5) * step;
    };
    CMat out(m.rows(), m.cols());
    for (Index i = 0; i < m.size(); ++i)
        out.data()[i] = cplx(q(m.data()[i].real()), q(m.data()[i].imag()));
    return out;
}

} // namespace gob

#endif // GOBSEL_TRAINING_HPP
