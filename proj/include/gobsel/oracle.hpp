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

// Small random selection instances and the greedy-versus-exhaustive comparison.

#ifndef GOBSEL_ORACLE_HPP
#define GOBSEL_ORACLE_HPP

#include "gobsel/beamsel.hpp"

#include <array>

namespace gob {

struct SmallInstanceSpec {
    int k = 2;
    int b_bs_min = 4;
    int b_bs_max = 6;
    int b_ue_min = 2;
    int b_ue_max = 3;
    int m_ue = 1;
    int pmi_cap = 2;
    double kappa = 10.0;
    int tau = 1;
    double t_total = 10.0;
};

/// K UEs with a few random paths each over B-element arrays and square DFT codebooks.
inline SelectionProblem small_instance(const SmallInstanceSpec& spec, Rng& rng) {
    std::uniform_int_distribution<int> bbs(spec.b_bs_min, spec.b_bs_max);
    std::uniform_int_distribution<int> bue(spec.b_ue_min, spec.b_ue_max);
    std::uniform_int_distribution<int> npaths(1, 3);
    std::uniform_real_distribution<double> ang(-std::numbers::pi / 2, std::numbers::pi / 2);
    std::uniform_real_distribution<double> pw(0.1, 1.0);
    const int b_bs = bbs(rng);
    const int b_ue = bue(rng);
    const Codebook cb_bs = dft_codebook(b_bs, b_bs, Side::bs);
    const Codebook cb_ue = dft_codebook(b_ue, b_ue, Side::ue);
    SelectionProblem pb;
    pb.m_ue = spec.m_ue;
    pb.pmi_cap = spec.pmi_cap;
    pb.kappa = spec.kappa;
    pb.tau = spec.tau;
    pb.t_total = spec.t_total;
    pb.enforce_budget = false;
    for (int u = 0; u < spec.k; ++u) {
        ClusterSet cs;
        const int n = npaths(rng);
        double total = 0.0;
        for (int p = 0; p < n; ++p) {
            cs.paths.push_back({ang(rng), ang(rng), pw(rng)});
            total += cs.paths.back().mean_power;
        }
        for (auto& p : cs.paths)
            p.mean_power /= total;
        const auto st = covariance_from_clusters(cs, {b_bs, 0.5}, {b_ue, 0.5});
        pb.ues.push_back(beam_domain_stats(st, cb_bs, cb_ue));
    }
    return pb;
}

struct OracleStats {
    PolicyId policy = PolicyId::P2;
    int instances = 0;
    double mean_ratio = 0.0; // hierarchical / exhaustive objective
    double min_ratio = 1.0;
    int exceed_count = 0;    // hierarchical above exhaustive (must stay 0)
};

inline std::array<OracleStats, 3> run_oracle_suite(int instances, std::uint64_t seed,
                                                   const SmallInstanceSpec& spec = {}) {
    std::array<OracleStats, 3> out{{{PolicyId::P2}, {PolicyId::P3}, {PolicyId::P4}}};
    for (int i = 0; i < instances; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const SelectionProblem pb = small_instance(spec, rng);
        for (auto& s : out) {
            const double h = full_objective(s.policy, pb, select_hierarchical(s.policy, pb).ue_beams);
            const double b = brute_force_central(s.policy, pb).objective;
            const double ratio = b > 0.0 ? h / b : 1.0;
            s.instances++;
            s.mean_ratio += ratio;
            s.min_ratio = std::min(s.min_ratio, ratio);
            if (h > b * (1.0 + 1e-12) + 1e-12)
                s.exceed_count++;
        }
    }
    for (auto& s : out)
        if (s.instances > 0)
            s.mean_ratio /= s.instances;
    return out;
}

} // namespace gob

#endif // GOBSEL_ORACLE_HPP
