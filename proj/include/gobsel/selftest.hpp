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

// Fast invariant checks behind the `selftest` command.

#ifndef GOBSEL_SELFTEST_HPP
#define GOBSEL_SELFTEST_HPP

#include "gobsel/beamsel.hpp"
#include "gobsel/precoding.hpp"

#include <functional>
#include <ostream>

namespace gob {

struct SelfCheck {
    std::string name;
    std::function<bool()> run;
};

namespace detail {

inline CMat random_psd(Rng& rng, Index n, Index rank) {
    const CMat f = randn_complex(rng, n, rank);
    return f * f.adjoint();
}

inline double rel_err(const CMat& a, const CMat& b) {
    const double d = std::max(a.norm(), b.norm());
    return d == 0.0 ? 0.0 : (a - b).norm() / d;
}

} // namespace detail

inline std::vector<SelfCheck> self_checks() {
    std::vector<SelfCheck> c;
    c.push_back({"dft codebook orthonormal", [] {
                     const auto cb = dft_codebook(64, 64);
                     return (cb.beams.adjoint() * cb.beams - CMat::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12;
                 }});
    c.push_back({"zadoff-chu pilots orthonormal", [] {
                     const auto s = pilot_matrix(25, 601, 1).s;
                     return (s * s.adjoint() - CMat::Identity(25, 25)).cwiseAbs().maxCoeff() < 1e-10;
                 }});
    c.push_back({"kronecker vec identity", [] {
                     Rng rng(11);
                     for (int i = 0; i < 20; ++i) {
                         const CMat h = randn_complex(rng, 4, 8), v = randn_complex(rng, 8, 3), w = randn_complex(rng, 4, 2);
                         const CVec lhs = vec(w.adjoint() * h * v);
                         const CVec rhs = kron(v.transpose(), w.adjoint()) * vec(h);
                         if ((lhs - rhs).norm() > 1e-12 * std::max(1.0, lhs.norm()))
                             return false;
                     }
                     return true;
                 }});
    c.push_back({"error covariance matches pre-inversion form", [] {
                     Rng rng(12);
                     for (int i = 0; i < 20; ++i) {
                         const int m_bs = 3, m_ue = 2, tau = 5;
                         const CMat sb = detail::random_psd(rng, m_bs * m_ue, m_bs * m_ue);
                         const auto s = pilot_matrix(m_bs, tau, 2);
                         const CMat w = dft_codebook(4, 4).beams.leftCols(m_ue);
                         const double kappa = 3.0;
                         const auto tc = TrainingConfig::from_kappa(kappa, tau, 1.0);
                         const CMat a = kron(s.s.transpose(), CMat::Identity(m_ue, m_ue));
                         const CMat g = kron(CMat::Identity(tau, tau), w.adjoint());
                         const CMat inner = a * sb * a.adjoint() + tc.noise_var * g * g.adjoint();
                         const CMat pre = sb - sb * a.adjoint() * inner.inverse() * a * sb;
                         if (detail::rel_err(pre, lmmse_error_covariance(sb, s, w, kappa)) > 1e-8)
                             return false;
                     }
                     return true;
                 }});
    c.push_back({"reduced estimator equals direct estimator", [] {
                     Rng rng(13);
                     const int m_bs = 4, m_ue = 2, tau = 7;
                     const CMat sb = detail::random_psd(rng, m_bs * m_ue, 3);
                     const auto s = pilot_matrix(m_bs, tau, 3);
                     const CMat w = randn_complex(rng, 4, m_ue);
                     const auto tc = TrainingConfig::from_kappa(2.0, tau, 1.0);
                     const CMat y = randn_complex(rng, m_ue, tau);
                     const CVec a = lmmse_estimate(y, sb, s, w, tc);
                     const CVec b = lmmse_estimate_reduced(y, sb, s, w, tc);
                     return (a - b).norm() <= 1e-10 * std::max(1.0, a.norm());
                 }});
    c.push_back({"block diagonalization nulls interference", [] {
                     Rng rng(14);
                     std::vector<CMat> h;
                     for (int k = 0; k < 3; ++k)
                         h.push_back(randn_complex(rng, 2, 8));
                     const auto bd = block_diagonalize(h);
                     for (int k = 0; k < 3; ++k)
                         for (int j = 0; j < 3; ++j)
                             if (j != k && (h[j] * bd.v_bar[k]).norm() > 1e-8 * h[j].norm() * bd.v_bar[k].norm())
                                 return false;
                     return true;
                 }});
    c.push_back({"bd rate equals general rate at bd beamformers", [] {
                     Rng rng(15);
                     std::vector<CMat> h, w;
                     for (int k = 0; k < 3; ++k) {
                         h.push_back(randn_complex(rng, 2, 8));
                         w.push_back(dft_codebook(4, 4).beams.leftCols(2));
                     }
                     const auto bd = block_diagonalize(h);
                     const auto a = se_bd(bd, 5.0);
                     const auto b = se_general(h, w, bd.v_bar, bd.w_bar, 5.0, 0.2);
                     for (int k = 0; k < 3; ++k)
                         if (std::abs(a[k] - b[k]) > 1e-8 * std::max(1.0, a[k]))
                             return false;
                     return true;
                 }});
    c.push_back({"quantizer step bound", [] {
                     Rng rng(16);
                     const CMat m = randn_complex(rng, 3, 5);
                     double a = 0.0;
                     for (Index i = 0; i < m.size(); ++i)
                         a = std::max({a, std::abs(m.data()[i].real()), std::abs(m.data()[i].imag())});
                     const CMat q = quantize_feedback(m, 16);
                     for (Index i = 0; i < m.size(); ++i) {
                         const cplx d = m.data()[i] - q.data()[i];
                         if (std::abs(d.real()) > a * std::ldexp(1.0, -15) || std::abs(d.imag()) > a * std::ldexp(1.0, -15))
                             return false;
                     }
                     return true;
                 }});
    c.push_back({"gcmd three-user example", [] {
                     CMat a = CMat::Zero(2, 2), b = CMat::Zero(2, 2), d = CMat::Identity(2, 2);
                     a(0, 0) = 1.0;
                     b(1, 1) = 1.0;
                     return std::abs(gcmd({a, b, d}, 2) - (1.0 - 1.0 / std::sqrt(2.0))) < 1e-12;
                 }});
    c.push_back({"overhead definitions agree", [] {
                     std::vector<PmiSet> p(2);
                     p[0].pairs = {{1, 0}, {3, 1}};
                     p[1].pairs = {{3, 0}, {5, 1}, {7, 2}};
                     return overhead_w(p, 2, 4200.0) == overhead_v(4, 2, 4200.0);
                 }});
    return c;
}

/// Runs every check, printing one line each; returns the failure count.
inline int run_self_checks(std::ostream& os) {
    int failures = 0;
    for (const auto& c : self_checks()) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            os << "  exception: " << e.what() << '\n';
        }
        os << (ok ? "PASS " : "FAIL ") << c.name << '\n';
        failures += ok ? 0 : 1;
    }
    return failures;
}

} // namespace gob

#endif // GOBSEL_SELFTEST_HPP
