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

// Statistical beam selection.
//
// Beam pair (v, w) of UE k has average gain b^H Sigma_k b with b = conj(v) (x) w.
// For a GoB precoder V and combiner W_k the effective covariance is
// B^H Sigma_k B with B = conj(V) (x) W_k, and the per-UE score is the bound
//   M_UE log2(1 + kappa tr(Sbar_k) / M_UE)
// optionally with tr(Sbar_k) scaled by the GCMD delta_k and the sum scaled
// by (1 - omega):
//
//   policy | GCMD | overhead
//   P1     |  -   |   -
//   P2     |  x   |   -
//   P3     |  -   |   x
//   P4     |  x   |   x
//
// The whole beam-domain covariance of a UE (every BS beam against every UE
// beam) is computed once; any Sbar_k is a principal submatrix of it, with row
// index v * B_UE + w.

#ifndef GOBSEL_BEAMSEL_HPP
#define GOBSEL_BEAMSEL_HPP

#include "gobsel/channel.hpp"
#include "gobsel/codebook.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string_view>

namespace gob {

// ---------------------------------------------------------------- gains

inline CVec pair_vector(const CVec& v, const CVec& w) {
    return kron(CMat(v.conjugate()), CMat(w));
}

/// b^H Sigma b, b = conj(v) (x) w.
inline double beam_pair_gain(const ChannelStats& stats, const CVec& v, const CVec& w) {
    const CVec b = pair_vector(v, w);
    require(b.size() == stats.sigma.rows(), "beam_pair_gain: beam sizes do not match the covariance");
    const cplx q = b.dot(stats.sigma * b);
    const double scale = std::max(1.0, std::abs(q));
    if (std::abs(q.imag()) > 1e-10 * scale)
        throw NumericalDomain("beam_pair_gain: quadratic form is not real; covariance is not Hermitian");
    return q.real();
}

struct BeamPairGainTable {
    RMat gains; // B_BS x B_UE
};

/// Beam-domain covariance of one UE over full codebooks.
struct BeamDomainStats {
    CMat cov;
    int b_bs = 0;
    int b_ue = 0;

    int index(int v, int w) const { return v * b_ue + w; }
    double gain(int v, int w) const { return cov(index(v, w), index(v, w)).real(); }

    BeamPairGainTable gain_table() const {
        BeamPairGainTable t;
        t.gains.resize(b_bs, b_ue);
        for (int v = 0; v < b_bs; ++v)
            for (int w = 0; w < b_ue; ++w)
                t.gains(v, w) = gain(v, w);
        return t;
    }

    /// Effective covariance for precoder beams v_idx and combiner beams w_idx,
    /// ordered like conj(V) (x) W.
    CMat effective(std::span<const int> v_idx, std::span<const int> w_idx) const {
        std::vector<int> idx;
        idx.reserve(v_idx.size() * w_idx.size());
        for (int v : v_idx)
            for (int w : w_idx)
                idx.push_back(index(v, w));
        return principal_submatrix(cov, idx);
    }

    double effective_trace(std::span<const int> v_idx, std::span<const int> w_idx) const {
        double acc = 0.0;
        for (int v : v_idx)
            for (int w : w_idx)
                acc += gain(v, w);
        return acc;
    }
};

inline BeamDomainStats beam_domain_stats(const ChannelStats& stats, const Codebook& bs, const Codebook& ue) {
    const Index n_bs = bs.n_antennas();
    const Index n_ue = ue.n_antennas();
    require(stats.sigma.rows() == n_bs * n_ue, "beam_domain_stats: codebooks do not match the covariance");
    BeamDomainStats out;
    out.b_bs = bs.size();
    out.b_ue = ue.size();
    const Index dim = static_cast<Index>(out.b_bs) * out.b_ue;
    const CMat wh = ue.beams.adjoint();
    if (stats.path_factor.rows() == stats.sigma.rows() && stats.path_factor.cols() > 0) {
        // b^H vec(F) = w^H F v for each path column F (N_UE x N_BS).
        CMat g(dim, stats.path_factor.cols());
        for (Index p = 0; p < stats.path_factor.cols(); ++p) {
            const CMat f = Eigen::Map<const CMat>(stats.path_factor.col(p).data(), n_ue, n_bs);
            const CMat proj = wh * f * bs.beams; // B_UE x B_BS
            g.col(p) = Eigen::Map<const CVec>(proj.data(), dim);
        }
        out.cov = g * g.adjoint();
    } else {
        const CMat b = kron(bs.beams.conjugate(), ue.beams);
        out.cov = b.adjoint() * stats.sigma * b;
    }
    out.cov = hermitian_part(out.cov);
    return out;
}

inline BeamPairGainTable beam_pair_gain_table(const ChannelStats& stats, const Codebook& bs, const Codebook& ue) {
    return beam_domain_stats(stats, bs, ue).gain_table();
}

/// Sbar = B^H Sigma B, B = conj(V) (x) W_k.
inline CMat effective_covariance(const ChannelStats& stats, const CMat& v, const CMat& w_k) {
    const CMat b = kron(v.conjugate(), w_k);
    require(b.rows() == stats.sigma.rows(), "effective_covariance: beamformer sizes do not match the covariance");
    return hermitian_part(b.adjoint() * stats.sigma * b);
}

// ---------------------------------------------------------------- relevant components

struct RelevanceRule {
    enum class Kind { threshold, top_n };
    Kind kind = Kind::threshold;
    double xi = 0.0;
    int n = 0;

    static RelevanceRule threshold(double xi) {
        require(xi >= 0.0, "RelevanceRule: threshold must be >= 0");
        return {Kind::threshold, xi, 0};
    }
    static RelevanceRule top(int n) {
        require(n >= 1, "RelevanceRule: top_n must be >= 1");
        return {Kind::top_n, 0.0, n};
    }
};

namespace detail {

struct RankedPair {
    double gain;
    BeamPair pair;
};

// Descending gain, then ascending (v, w).
inline void sort_ranked(std::vector<RankedPair>& r) {
    std::sort(r.begin(), r.end(), [](const RankedPair& a, const RankedPair& b) {
        if (a.gain != b.gain)
            return a.gain > b.gain;
        return a.pair < b.pair;
    });
}

} // namespace detail

/// Pairs passing the rule, strongest first.
inline std::vector<BeamPair> relevant_components(const BeamPairGainTable& table, const RelevanceRule& rule) {
    std::vector<detail::RankedPair> ranked;
    for (int v = 0; v < table.gains.rows(); ++v)
        for (int w = 0; w < table.gains.cols(); ++w)
            ranked.push_back({table.gains(v, w), {v, w}});
    detail::sort_ranked(ranked);
    std::vector<BeamPair> out;
    for (const auto& r : ranked) {
        if (rule.kind == RelevanceRule::Kind::threshold ? r.gain < rule.xi
                                                         : static_cast<int>(out.size()) >= rule.n)
            break;
        out.push_back(r.pair);
    }
    return out;
}

// ---------------------------------------------------------------- metrics

inline double bound_from_trace(double trace, double kappa, int m_ue) {
    require(m_ue >= 1, "se_upper_bound: m_ue must be >= 1");
    require(kappa >= 0.0, "se_upper_bound: kappa must be >= 0");
    if (trace < 0.0 && trace > -1e-10)
        trace = 0.0;
    require(trace >= 0.0, "se_upper_bound: trace must be >= 0");
    return m_ue * std::log2(1.0 + kappa * trace / m_ue);
}

/// M_UE log2(1 + kappa tr(Sbar) / M_UE).
inline double se_upper_bound(const CMat& sigma_bar, double kappa, int m_ue) {
    return bound_from_trace(std::real(sigma_bar.trace()), kappa, m_ue);
}

inline double trace_correlation(const CMat& a, const CMat& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0)
        return 0.0;
    return (a.cwiseProduct(b.conjugate())).sum().real() / (na * nb);
}

/// delta_k = 1 - 1/(K-1) sum_{j != k} tr(S_k S_j) / (|S_k|_F |S_j|_F).
inline double gcmd(const std::vector<CMat>& sigma_bars, int k) {
    const int n = static_cast<int>(sigma_bars.size());
    require(n >= 2, "gcmd: need at least two covariances");
    require(k >= 0 && k < n, "gcmd: index out of range");
    for (const auto& s : sigma_bars) {
        require(s.rows() == sigma_bars[0].rows() && s.cols() == sigma_bars[0].cols(), "gcmd: size mismatch");
        require(s.norm() > 0.0, "gcmd: zero covariance has no normalized distance");
    }
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
        if (j != k)
            acc += trace_correlation(sigma_bars[static_cast<std::size_t>(k)], sigma_bars[static_cast<std::size_t>(j)]);
    return 1.0 - acc / (n - 1);
}

/// Like gcmd, but 1 for a single matrix and zero matrices count as uncorrelated.
inline double gcmd_lenient(const std::vector<CMat>& sigma_bars, int k) {
    const int n = static_cast<int>(sigma_bars.size());
    if (n < 2)
        return 1.0;
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
        if (j != k)
            acc += trace_correlation(sigma_bars[static_cast<std::size_t>(k)], sigma_bars[static_cast<std::size_t>(j)]);
    return 1.0 - acc / (n - 1);
}

/// (tau / T) * number of trained beams.
inline double overhead_v(int m_bs, int tau, double t_total) {
    require(m_bs >= 0 && tau >= 1 && t_total > 0.0, "overhead_v: invalid arguments");
    if (static_cast<double>(tau) * m_bs > t_total)
        throw InvalidArgument("overhead_v: pilots exceed the frame (tau * M_BS > T)");
    return static_cast<double>(tau) * m_bs / t_total;
}

enum class OverheadCount { bs_beams, pairs };

inline int union_cardinality(const std::vector<PmiSet>& pmis, OverheadCount count) {
    if (count == OverheadCount::pairs) {
        std::set<BeamPair> u;
        for (const auto& p : pmis)
            u.insert(p.pairs.begin(), p.pairs.end());
        return static_cast<int>(u.size());
    }
    std::set<int> u;
    for (const auto& p : pmis)
        for (const auto& bp : p.pairs)
            u.insert(bp.v);
    return static_cast<int>(u.size());
}

/// (tau / T) * card of the PMI union; distinct BS beams by default.
inline double overhead_w(const std::vector<PmiSet>& pmis, int tau, double t_total,
                         OverheadCount count = OverheadCount::bs_beams) {
    return overhead_v(union_cardinality(pmis, count), tau, t_total);
}

// ---------------------------------------------------------------- selection

enum class PolicyId { P1, P2, P3, P4 };

inline std::string_view to_string(PolicyId p) {
    switch (p) {
    case PolicyId::P1: return "P1";
    case PolicyId::P2: return "P2";
    case PolicyId::P3: return "P3";
    case PolicyId::P4: return "P4";
    }
    return "?";
}

inline PolicyId parse_policy(std::string_view s) {
    if (s == "P1")
        return PolicyId::P1;
    if (s == "P2")
        return PolicyId::P2;
    if (s == "P3")
        return PolicyId::P3;
    if (s == "P4")
        return PolicyId::P4;
    throw InvalidArgument("unknown policy '" + std::string(s) + "'");
}

inline bool uses_gcmd(PolicyId p) { return p == PolicyId::P2 || p == PolicyId::P4; }
inline bool uses_overhead(PolicyId p) { return p == PolicyId::P3 || p == PolicyId::P4; }

/// Per-UE score from its trace, GCMD and the current overhead.
inline double policy_value(PolicyId p, double trace, double delta, double omega, double kappa, int m_ue) {
    const double t = uses_gcmd(p) ? trace * delta : trace;
    const double b = bound_from_trace(std::max(t, 0.0), kappa, m_ue);
    return uses_overhead(p) ? (1.0 - omega) * b : b;
}

struct SelectionProblem {
    std::vector<BeamDomainStats> ues;
    int m_ue = 1;
    int pmi_cap = 4;
    RelevanceRule rule;  // applied before PMI truncation
    double kappa = 1.0;
    int tau = 1;
    double t_total = 1.0;
    OverheadCount count = OverheadCount::bs_beams;
    bool enforce_budget = true;

    int n_users() const { return static_cast<int>(ues.size()); }
    int b_bs() const { return ues.empty() ? 0 : ues.front().b_bs; }
    int b_ue() const { return ues.empty() ? 0 : ues.front().b_ue; }

    void validate() const {
        require(!ues.empty(), "SelectionProblem: no UEs");
        for (const auto& u : ues)
            require(u.b_bs == b_bs() && u.b_ue == b_ue(), "SelectionProblem: codebook sizes differ among UEs");
        require(m_ue >= 1 && m_ue <= b_ue(), "SelectionProblem: need 1 <= M_UE <= B_UE");
        require(pmi_cap >= 1, "SelectionProblem: pmi_cap must be >= 1");
        require(kappa >= 0.0, "SelectionProblem: kappa must be >= 0");
        require(tau >= 1 && t_total > 0.0, "SelectionProblem: invalid tau or T");
    }
};

/// All r-subsets of {0..n-1} in lexicographic order.
inline std::vector<BeamList> combinations(int n, int r) {
    require(n >= 0 && r >= 0 && r <= n, "combinations: need 0 <= r <= n");
    std::vector<BeamList> out;
    BeamList c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = r - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// PMI of a UE for combiner w_idx: its relevant pairs whose UE beam is in w_idx,
/// strongest pmi_cap of them.
inline PmiSet pmi_for(const SelectionProblem& pb, int ue, std::span<const int> w_idx) {
    const auto& st = pb.ues[static_cast<std::size_t>(ue)];
    std::vector<detail::RankedPair> ranked;
    if (pb.rule.kind == RelevanceRule::Kind::threshold) {
        for (int v = 0; v < st.b_bs; ++v)
            for (int w : w_idx)
                if (st.gain(v, w) >= pb.rule.xi)
                    ranked.push_back({st.gain(v, w), {v, w}});
    } else {
        const std::set<int> ws(w_idx.begin(), w_idx.end());
        for (const auto& p : relevant_components(st.gain_table(), pb.rule))
            if (ws.count(p.w))
                ranked.push_back({st.gain(p.v, p.w), p});
    }
    detail::sort_ranked(ranked);
    PmiSet out;
    for (std::size_t i = 0; i < ranked.size() && static_cast<int>(i) < pb.pmi_cap; ++i)
        out.pairs.push_back(ranked[i].pair);
    return out;
}

/// Decisions fixed by the UEs earlier in the hierarchy.
struct SelectionState {
    std::vector<int> ues;               // in decision order
    std::vector<BeamList> combiners;    // W_j*
    std::vector<PmiSet> pmis;
    std::set<int> b_fix;                // union of PMI BS beams
    std::set<BeamPair> pair_fix;        // union of PMI pairs

    void push(int ue, BeamList w, PmiSet pmi) {
        for (const auto& p : pmi.pairs) {
            b_fix.insert(p.v);
            pair_fix.insert(p);
        }
        ues.push_back(ue);
        combiners.push_back(std::move(w));
        pmis.push_back(std::move(pmi));
    }

    double omega(int tau, double t_total, OverheadCount count) const {
        return overhead_v(static_cast<int>(count == OverheadCount::pairs ? pair_fix.size() : b_fix.size()), tau,
                          t_total);
    }
};

struct FkTerms {
    double trace = 0.0;
    double delta = 1.0;
    double omega = 0.0;
    PmiSet pmi;
    BeamList v_union;
};

/// Quantities entering f_k for UE `ue` choosing combiner `cand` after `state`.
/// Sbar_k and the partial Sbar_j are taken over the partial precoder
/// [V_k V_{k-1}] (fixed union plus the candidate PMI beams).
inline FkTerms fk_terms(const SelectionProblem& pb, const SelectionState& state, int ue, std::span<const int> cand) {
    FkTerms t;
    t.pmi = pmi_for(pb, ue, cand);
    std::set<int> vu = state.b_fix;
    std::set<BeamPair> pu = state.pair_fix;
    for (const auto& p : t.pmi.pairs) {
        vu.insert(p.v);
        pu.insert(p);
    }
    t.v_union.assign(vu.begin(), vu.end());
    const auto& me = pb.ues[static_cast<std::size_t>(ue)];
    t.trace = me.effective_trace(t.v_union, cand);
    t.omega = overhead_v(static_cast<int>(pb.count == OverheadCount::pairs ? pu.size() : vu.size()), pb.tau,
                         pb.t_total);
    if (!state.ues.empty()) {
        std::vector<CMat> sb;
        sb.reserve(state.ues.size() + 1);
        sb.push_back(me.effective(t.v_union, cand));
        for (std::size_t j = 0; j < state.ues.size(); ++j)
            sb.push_back(pb.ues[static_cast<std::size_t>(state.ues[j])].effective(t.v_union, state.combiners[j]));
        t.delta = gcmd_lenient(sb, 0);
    }
    return t;
}

/// f_k of the hierarchical scheme.
inline double objective_fk(PolicyId policy, const SelectionProblem& pb, const SelectionState& state, int ue,
                           std::span<const int> cand) {
    const FkTerms t = fk_terms(pb, state, ue, cand);
    return policy_value(policy, t.trace, t.delta, t.omega, pb.kappa, pb.m_ue);
}

/// Adds the strongest inactive BS beams until (K-1) M_UE < M_BS. Beams are
/// ranked by their largest pair gain over all UEs' selected combiners.
inline void pad_to_budget(const SelectionProblem& pb, BeamAssignment& a) {
    const int k = pb.n_users();
    const int required = (k - 1) * pb.m_ue + 1;
    std::set<int> active(a.bs_beams.begin(), a.bs_beams.end());
    if (static_cast<int>(active.size()) >= required)
        return;
    if (pb.b_bs() < required)
        throw InfeasibleAssignment(-1, "BS codebook has " + std::to_string(pb.b_bs()) + " beams but " +
                                           std::to_string(required) + " are needed to null interference");
    std::vector<std::pair<double, int>> score;
    for (int v = 0; v < pb.b_bs(); ++v) {
        if (active.count(v))
            continue;
        double s = 0.0;
        for (int u = 0; u < k; ++u)
            for (int w : a.ue_beams[static_cast<std::size_t>(u)])
                s = std::max(s, pb.ues[static_cast<std::size_t>(u)].gain(v, w));
        score.emplace_back(s, v);
    }
    std::sort(score.begin(), score.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    for (std::size_t i = 0; static_cast<int>(active.size()) < required; ++i) {
        active.insert(score[i].second);
        ++a.padded_beams;
    }
    a.bs_beams.assign(active.begin(), active.end());
}

/// Builds the assignment (PMIs, BS union, optional padding) from per-UE combiners.
inline BeamAssignment make_assignment(const SelectionProblem& pb, std::vector<BeamList> combiners) {
    require(static_cast<int>(combiners.size()) == pb.n_users(), "make_assignment: one combiner per UE");
    BeamAssignment a;
    std::set<int> u;
    for (int k = 0; k < pb.n_users(); ++k) {
        auto& w = combiners[static_cast<std::size_t>(k)];
        std::sort(w.begin(), w.end());
        a.pmi.push_back(pmi_for(pb, k, w));
        for (const auto& p : a.pmi.back().pairs)
            u.insert(p.v);
    }
    a.ue_beams = std::move(combiners);
    a.bs_beams.assign(u.begin(), u.end());
    if (pb.enforce_budget)
        pad_to_budget(pb, a);
    a.feasible = (pb.n_users() - 1) * pb.m_ue < static_cast<int>(a.bs_beams.size());
    return a;
}

/// Each UE maximizes its own bound over the beams of its own PMI.
inline BeamAssignment select_uncoordinated(const SelectionProblem& pb) {
    pb.validate();
    const auto combos = combinations(pb.b_ue(), pb.m_ue);
    const SelectionState empty;
    std::vector<BeamList> chosen;
    for (int k = 0; k < pb.n_users(); ++k) {
        double best = -std::numeric_limits<double>::infinity();
        const BeamList* arg = nullptr;
        for (const auto& c : combos) {
            const double f = objective_fk(PolicyId::P1, pb, empty, k, c);
            if (f > best) {
                best = f;
                arg = &c;
            }
        }
        chosen.push_back(*arg);
    }
    return make_assignment(pb, std::move(chosen));
}

/// UEs decide in `order`, each maximizing f_k given the earlier decisions.
inline BeamAssignment select_hierarchical(PolicyId policy, const SelectionProblem& pb, std::span<const int> order) {
    pb.validate();
    require(static_cast<int>(order.size()) == pb.n_users(), "select_hierarchical: order must list every UE");
    {
        std::vector<int> sorted(order.begin(), order.end());
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < pb.n_users(); ++i)
            require(sorted[static_cast<std::size_t>(i)] == i, "select_hierarchical: order is not a permutation");
    }
    const auto combos = combinations(pb.b_ue(), pb.m_ue);
    SelectionState state;
    std::vector<BeamList> chosen(static_cast<std::size_t>(pb.n_users()));
    for (int ue : order) {
        double best = -std::numeric_limits<double>::infinity();
        const BeamList* arg = nullptr;
        PmiSet arg_pmi;
        for (const auto& c : combos) {
            FkTerms t = fk_terms(pb, state, ue, c);
            const double f = policy_value(policy, t.trace, t.delta, t.omega, pb.kappa, pb.m_ue);
            if (f > best) {
                best = f;
                arg = &c;
                arg_pmi = std::move(t.pmi);
            }
        }
        chosen[static_cast<std::size_t>(ue)] = *arg;
        state.push(ue, *arg, std::move(arg_pmi));
    }
    return make_assignment(pb, std::move(chosen));
}

inline BeamAssignment select_hierarchical(PolicyId policy, const SelectionProblem& pb) {
    std::vector<int> order(static_cast<std::size_t>(pb.n_users()));
    for (int i = 0; i < pb.n_users(); ++i)
        order[static_cast<std::size_t>(i)] = i;
    return select_hierarchical(policy, pb, order);
}

/// Network objective of a policy for given combiners. P1 scores each UE over
/// its own PMI beams; P2-P4 use the PMI union as V, the full-K GCMD and the
/// union overhead.
inline double full_objective(PolicyId policy, const SelectionProblem& pb, const std::vector<BeamList>& combiners) {
    const int k_users = pb.n_users();
    require(static_cast<int>(combiners.size()) == k_users, "full_objective: one combiner per UE");
    std::vector<PmiSet> pmis;
    std::set<int> u;
    for (int k = 0; k < k_users; ++k) {
        pmis.push_back(pmi_for(pb, k, combiners[static_cast<std::size_t>(k)]));
        for (const auto& p : pmis.back().pairs)
            u.insert(p.v);
    }
    double acc = 0.0;
    if (policy == PolicyId::P1) {
        for (int k = 0; k < k_users; ++k) {
            const auto own = pmis[static_cast<std::size_t>(k)].bs_beams();
            const BeamList v(own.begin(), own.end());
            acc += bound_from_trace(pb.ues[static_cast<std::size_t>(k)].effective_trace(v, combiners[static_cast<std::size_t>(k)]),
                                    pb.kappa, pb.m_ue);
        }
        return acc;
    }
    const BeamList v(u.begin(), u.end());
    std::vector<CMat> sb;
    for (int k = 0; k < k_users; ++k)
        sb.push_back(pb.ues[static_cast<std::size_t>(k)].effective(v, combiners[static_cast<std::size_t>(k)]));
    const double omega = overhead_v(union_cardinality(pmis, pb.count), pb.tau, pb.t_total);
    for (int k = 0; k < k_users; ++k) {
        const double tr = std::real(sb[static_cast<std::size_t>(k)].trace());
        const double delta = uses_gcmd(policy) ? gcmd_lenient(sb, k) : 1.0;
        acc += bound_from_trace(std::max(tr * delta, 0.0), pb.kappa, pb.m_ue);
    }
    return uses_overhead(policy) ? (1.0 - omega) * acc : acc;
}

struct CentralResult {
    BeamAssignment assignment;
    double objective = 0.0;
};

/// Exhaustive maximizer of full_objective over all C(B_UE, M_UE)^K combiner choices.
inline CentralResult brute_force_central(PolicyId policy, const SelectionProblem& pb, double cap = 1e6) {
    pb.validate();
    const auto combos = combinations(pb.b_ue(), pb.m_ue);
    const int k_users = pb.n_users();
    const double space = std::pow(static_cast<double>(combos.size()), k_users);
    if (space > cap)
        throw CapacityError("brute_force_central: search space of " + std::to_string(space) +
                            " combinations exceeds the cap of " + std::to_string(cap));
    std::vector<std::size_t> digit(static_cast<std::size_t>(k_users), 0);
    std::vector<BeamList> cur(static_cast<std::size_t>(k_users), combos.front());
    std::vector<BeamList> best_w = cur;
    double best = -std::numeric_limits<double>::infinity();
    while (true) {
        for (int k = 0; k < k_users; ++k)
            cur[static_cast<std::size_t>(k)] = combos[digit[static_cast<std::size_t>(k)]];
        const double f = full_objective(policy, pb, cur);
        if (f > best) {
            best = f;
            best_w = cur;
        }
        int i = k_users - 1;
        while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == combos.size())
            digit[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
    }
    return {make_assignment(pb, std::move(best_w)), best};
}

/// Effective covariances of all UEs over the assignment's BS beams.
inline std::vector<CMat> effective_covariances(const SelectionProblem& pb, const BeamAssignment& a) {
    std::vector<CMat> out;
    for (int k = 0; k < pb.n_users(); ++k)
        out.push_back(pb.ues[static_cast<std::size_t>(k)].effective(a.bs_beams, a.ue_beams[static_cast<std::size_t>(k)]));
    return out;
}

/// Mean GCMD over UEs for the final assignment; 1 for a single UE.
inline double mean_gcmd(const std::vector<CMat>& sigma_bars) {
    const int n = static_cast<int>(sigma_bars.size());
    if (n < 2)
        return 1.0;
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
        acc += gcmd_lenient(sigma_bars, k);
    return acc / n;
}

struct SingleUserBeams {
    BeamList v;
    BeamList w;
    double trace = 0.0;
};

/// Single-user selection maximizing tr(Sbar): for every combiner subset take the
/// m_bs BS beams with the largest summed gain.
inline SingleUserBeams select_single_user(const BeamDomainStats& st, int m_bs, int m_ue) {
    require(m_bs >= 1 && m_bs <= st.b_bs, "select_single_user: need 1 <= M_BS <= B_BS");
    SingleUserBeams best;
    best.trace = -1.0;
    for (const auto& w : combinations(st.b_ue, m_ue)) {
        std::vector<std::pair<double, int>> s;
        for (int v = 0; v < st.b_bs; ++v) {
            double acc = 0.0;
            for (int wi : w)
                acc += st.gain(v, wi);
            s.emplace_back(acc, v);
        }
        std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first > y.first : x.second < y.second;
        });
        double tr = 0.0;
        BeamList v;
        for (int i = 0; i < m_bs; ++i) {
            tr += s[static_cast<std::size_t>(i)].first;
            v.push_back(s[static_cast<std::size_t>(i)].second);
        }
        if (tr > best.trace) {
            std::sort(v.begin(), v.end());
            best = {std::move(v), w, tr};
        }
    }
    return best;
}

} // namespace gob

#endif // GOBSEL_BEAMSEL_HPP
