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

#include "gobsel/beamsel.hpp"
#include "gobsel/channel.hpp"
#include "gobsel/oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gob;

namespace {

// Beam-domain statistics with only diagonal (per-pair) power.
BeamDomainStats diag_stats(const RMat& gains) {
    BeamDomainStats st;
    st.b_bs = static_cast<int>(gains.rows());
    st.b_ue = static_cast<int>(gains.cols());
    st.cov = CMat::Zero(gains.size(), gains.size());
    for (int v = 0; v < st.b_bs; ++v)
        for (int w = 0; w < st.b_ue; ++w)
            st.cov(st.index(v, w), st.index(v, w)) = gains(v, w);
    return st;
}

ChannelStats cluster_channel(Rng& rng, int n_bs, int n_ue) {
    const auto g = place_users(Scenario::random, 1, 200.0, 10.0, rng);
    ScattererPool pool;
    return covariance_from_clusters(draw_clusters(g, 0, ClusterConfig{}, pool, rng), {n_bs, 0.5}, {n_ue, 0.5});
}

SelectionProblem problem_from(std::vector<BeamDomainStats> ues, int m_ue, int pmi_cap, double kappa, int tau,
                              double t_total) {
    SelectionProblem pb;
    pb.ues = std::move(ues);
    pb.m_ue = m_ue;
    pb.pmi_cap = pmi_cap;
    pb.kappa = kappa;
    pb.tau = tau;
    pb.t_total = t_total;
    pb.enforce_budget = false;
    return pb;
}

} // namespace

TEST(Beamsel, IdentityCovarianceGivesUnitGain) {
    ChannelStats st;
    st.sigma = CMat::Identity(12, 12);
    const auto cbs = dft_codebook(4, 4), cue = dft_codebook(3, 3, Side::ue);
    EXPECT_NEAR(beam_pair_gain(st, cbs.beams.col(1), cue.beams.col(2)), 1.0, 1e-12);
}

TEST(Beamsel, AlignedRankOneCovariance) {
    const auto cbs = dft_codebook(4, 4), cue = dft_codebook(2, 2, Side::ue);
    const CVec b0 = pair_vector(cbs.beams.col(2), cue.beams.col(1));
    ChannelStats st;
    st.sigma = b0 * b0.adjoint();
    const auto table = beam_pair_gain_table(st, cbs, cue);
    for (int v = 0; v < 4; ++v)
        for (int w = 0; w < 2; ++w)
            EXPECT_NEAR(table.gains(v, w), v == 2 && w == 1 ? 1.0 : 0.0, 1e-12);
    const CMat sb = effective_covariance(st, assemble_precoder(cbs, BeamList{2, 3}), assemble_precoder(cue, BeamList{1}));
    EXPECT_EQ(numerical_rank(sb), 1);
    EXPECT_NEAR(sb.trace().real(), 1.0, 1e-12);
}

TEST(Beamsel, GainMatchesMonteCarloPower) {
    Rng rng(60);
    const auto st = cluster_channel(rng, 6, 3);
    const auto cbs = dft_codebook(6, 6), cue = dft_codebook(3, 3, Side::ue);
    const auto table = beam_pair_gain_table(st, cbs, cue);
    const CMat root = psd_sqrt(st.sigma);
    RMat acc = RMat::Zero(6, 3);
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        const CMat h = realize_channel(st, rng, root).h;
        acc += (cue.beams.adjoint() * h * cbs.beams).cwiseAbs2().transpose();
    }
    acc /= draws;
    // Strongest pair within 5%, the whole table within 5% of its total power.
    Index r, c;
    table.gains.maxCoeff(&r, &c);
    EXPECT_NEAR(acc(r, c), table.gains(r, c), 0.05 * table.gains(r, c));
    EXPECT_LT((acc - table.gains).norm() / table.gains.norm(), 0.05);
}

TEST(Beamsel, BeamDomainFastPathMatchesKroneckerForm) {
    Rng rng(61);
    auto st = cluster_channel(rng, 8, 4);
    const auto cbs = dft_codebook(8, 8), cue = dft_codebook(4, 4, Side::ue);
    const auto fast = beam_domain_stats(st, cbs, cue);
    st.path_factor.resize(0, 0);
    const auto slow = beam_domain_stats(st, cbs, cue);
    EXPECT_LT((fast.cov - slow.cov).norm() / slow.cov.norm(), 1e-12);
    const BeamList v{1, 5, 6}, w{0, 3};
    const CMat direct = effective_covariance(st, assemble_precoder(cbs, v), assemble_precoder(cue, w));
    EXPECT_LT((fast.effective(v, w) - direct).norm() / direct.norm(), 1e-12);
    EXPECT_NEAR(fast.effective_trace(v, w), direct.trace().real(), 1e-10 * direct.trace().real());
}

TEST(Beamsel, IdentityBeamformersLeaveCovarianceUnchanged) {
    Rng rng(62);
    const auto st = cluster_channel(rng, 3, 2);
    const CMat sb = effective_covariance(st, CMat::Identity(3, 3), CMat::Identity(2, 2));
    EXPECT_LT((sb - st.sigma).norm(), 1e-12 * st.sigma.norm());
}

TEST(Beamsel, RelevantComponentRules) {
    BeamPairGainTable t;
    t.gains.resize(2, 2);
    t.gains << 3, 2, 2, 1;
    EXPECT_TRUE(relevant_components(t, RelevanceRule::threshold(5.0)).empty());
    EXPECT_EQ(relevant_components(t, RelevanceRule::top(4)).size(), 4u);
    const auto top2 = relevant_components(t, RelevanceRule::top(2));
    ASSERT_EQ(top2.size(), 2u);
    EXPECT_EQ(top2[0], (BeamPair{0, 0}));
    EXPECT_EQ(top2[1], (BeamPair{0, 1}));
    const auto thr = relevant_components(t, RelevanceRule::threshold(2.0));
    EXPECT_EQ(thr.size(), 3u);
    EXPECT_THROW(RelevanceRule::top(0), InvalidArgument);
    EXPECT_THROW(RelevanceRule::threshold(-1.0), InvalidArgument);
}

TEST(Beamsel, ThresholdRuleAgreesWithMonteCarloPowers) {
    Rng rng(63);
    const auto st = cluster_channel(rng, 6, 3);
    const auto cbs = dft_codebook(6, 6), cue = dft_codebook(3, 3, Side::ue);
    const auto table = beam_pair_gain_table(st, cbs, cue);
    const double xi = table.gains.mean();
    std::set<BeamPair> lib;
    for (const auto& p : relevant_components(table, RelevanceRule::threshold(xi)))
        lib.insert(p);
    const CMat root = psd_sqrt(st.sigma);
    RMat acc = RMat::Zero(6, 3);
    for (int t = 0; t < 10000; ++t)
        acc += (cue.beams.adjoint() * realize_channel(st, rng, root).h * cbs.beams).cwiseAbs2().transpose();
    acc /= 10000.0;
    int compared = 0;
    for (int v = 0; v < 6; ++v)
        for (int w = 0; w < 3; ++w) {
            if (std::abs(acc(v, w) - xi) < 0.05 * xi)
                continue;
            ++compared;
            EXPECT_EQ(acc(v, w) >= xi, lib.count({v, w}) == 1) << v << "," << w;
        }
    EXPECT_GT(compared, 10);
}

TEST(Beamsel, UpperBoundFormula) {
    EXPECT_DOUBLE_EQ(se_upper_bound(CMat::Zero(3, 3), 10.0, 3), 0.0);
    EXPECT_DOUBLE_EQ(se_upper_bound(CMat::Identity(1, 1), 1.0, 1), 1.0);
    EXPECT_NEAR(bound_from_trace(6.0, 2.0, 3), 3.0 * std::log2(5.0), 1e-15);
    EXPECT_THROW(bound_from_trace(-1.0, 1.0, 1), InvalidArgument);
    EXPECT_THROW(bound_from_trace(1.0, 1.0, 0), InvalidArgument);
}

TEST(Beamsel, UpperBoundDominatesMonteCarloSe) {
    Rng rng(64);
    const auto st = cluster_channel(rng, 16, 4);
    const auto cbs = dft_codebook(16, 16), cue = dft_codebook(4, 4, Side::ue);
    const auto sel = select_single_user(beam_domain_stats(st, cbs, cue), 5, 3);
    const CMat v = assemble_precoder(cbs, sel.v), w = assemble_precoder(cue, sel.w);
    const CMat sb = effective_covariance(st, v, w);
    const CMat root = psd_sqrt(st.sigma);
    std::vector<CMat> hb;
    for (int t = 0; t < 1000; ++t)
        hb.push_back(w.adjoint() * realize_channel(st, rng, root).h * v);
    for (double kappa : {0.1, 1.0, 10.0, 100.0}) {
        // log2 det(I + kappa Hb Hb^H) summed over eigenmodes
        double mc = 0.0;
        for (const auto& h : hb) {
            Eigen::SelfAdjointEigenSolver<CMat> es(h * h.adjoint());
            for (Index i = 0; i < es.eigenvalues().size(); ++i)
                mc += std::log2(1.0 + kappa * std::max(es.eigenvalues()(i), 0.0));
        }
        mc /= hb.size();
        EXPECT_GE(se_upper_bound(sb, kappa, 3), mc) << kappa;
    }
}

TEST(Beamsel, GcmdExamples) {
    Rng rng(65);
    const CMat x = randn_complex(rng, 3, 3);
    const CMat s = x * x.adjoint();
    EXPECT_NEAR(gcmd({s, 2.0 * s, 0.5 * s}, 0), 0.0, 1e-12);
    CMat a = CMat::Zero(2, 2), b = CMat::Zero(2, 2), c = CMat::Identity(2, 2);
    a(0, 0) = 1.0;
    b(1, 1) = 1.0;
    EXPECT_NEAR(gcmd({a, b}, 0), 1.0, 1e-15);
    EXPECT_NEAR(gcmd({a, b, c}, 2), 1.0 - 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(gcmd({a, b, c}, 2), 0.2929, 1e-4);
}

TEST(Beamsel, GcmdRejectsDegenerateInput) {
    const CMat a = CMat::Identity(2, 2);
    EXPECT_THROW(gcmd({a}, 0), InvalidArgument);
    EXPECT_THROW(gcmd({a, CMat::Zero(2, 2)}, 0), InvalidArgument);
    EXPECT_THROW(gcmd({a, a}, 2), InvalidArgument);
    EXPECT_DOUBLE_EQ(gcmd_lenient({a}, 0), 1.0);
    EXPECT_DOUBLE_EQ(gcmd_lenient({a, CMat::Zero(2, 2)}, 0), 1.0);
}

TEST(Beamsel, GcmdStaysInUnitInterval) {
    Rng rng(66);
    for (int n = 0; n < 200; ++n) {
        std::vector<CMat> s;
        for (int k = 0; k < 2 + n % 4; ++k) {
            const CMat x = randn_complex(rng, 4, 1 + n % 3);
            s.push_back(x * x.adjoint());
        }
        for (int k = 0; k < static_cast<int>(s.size()); ++k) {
            const double d = gcmd(s, k);
            EXPECT_GE(d, -1e-12);
            EXPECT_LE(d, 1.0 + 1e-12);
        }
    }
}

TEST(Beamsel, OverheadArithmetic) {
    EXPECT_DOUBLE_EQ(overhead_v(2, 2, 4200.0), 4.0 / 4200.0);
    EXPECT_DOUBLE_EQ(overhead_v(0, 3, 4200.0), 0.0);
    EXPECT_DOUBLE_EQ(overhead_v(8, 2, 4200.0), 16.0 / 4200.0);
    EXPECT_THROW(overhead_v(5, 3, 10.0), InvalidArgument);
    EXPECT_THROW(overhead_v(-1, 3, 10.0), InvalidArgument);
}

TEST(Beamsel, OverheadOfPmiUnion) {
    PmiSet a, b, c;
    a.pairs = {{0, 0}, {1, 0}};
    b.pairs = {{2, 1}, {3, 1}, {4, 0}};
    c.pairs = a.pairs;
    EXPECT_DOUBLE_EQ(overhead_w({a, c}, 1, 100.0), overhead_w({a}, 1, 100.0));
    EXPECT_EQ(union_cardinality({a, b}, OverheadCount::bs_beams), 5);
    // Second UE moving onto the first UE's beams: 5 beams become 3.
    PmiSet ue1, ue2_own, ue2_shared;
    ue1.pairs = {{0, 0}, {1, 0}, {2, 0}};
    ue2_own.pairs = {{3, 0}, {4, 1}};
    ue2_shared.pairs = {{1, 1}, {2, 1}};
    const double w5 = overhead_w({ue1, ue2_own}, 2, 4200.0);
    const double w3 = overhead_w({ue1, ue2_shared}, 2, 4200.0);
    EXPECT_NEAR(w3 / w5, 3.0 / 5.0, 1e-15);
    PmiSet p;
    p.pairs = {{0, 0}, {0, 1}};
    EXPECT_EQ(union_cardinality({p}, OverheadCount::bs_beams), 1);
    EXPECT_EQ(union_cardinality({p}, OverheadCount::pairs), 2);
}

TEST(Beamsel, CombinationsAreLexicographic) {
    const auto c = combinations(4, 2);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c.front(), (BeamList{0, 1}));
    EXPECT_EQ(c[2], (BeamList{0, 3}));
    EXPECT_EQ(c.back(), (BeamList{2, 3}));
    EXPECT_EQ(combinations(5, 0).size(), 1u);
    EXPECT_THROW(combinations(2, 3), InvalidArgument);
}

TEST(Beamsel, PolicyNames) {
    for (auto p : {PolicyId::P1, PolicyId::P2, PolicyId::P3, PolicyId::P4})
        EXPECT_EQ(parse_policy(to_string(p)), p);
    EXPECT_THROW(parse_policy("P5"), InvalidArgument);
}

TEST(Beamsel, PmiKeepsStrongestPairsOfTheCombiner) {
    RMat g(3, 2);
    g << 5, 1, 4, 6, 3, 2;
    auto pb = problem_from({diag_stats(g)}, 1, 2, 1.0, 1, 100.0);
    const BeamList w0{0};
    const auto p = pmi_for(pb, 0, w0);
    ASSERT_EQ(p.pairs.size(), 2u);
    EXPECT_EQ(p.pairs[0], (BeamPair{0, 0}));
    EXPECT_EQ(p.pairs[1], (BeamPair{1, 0}));
    pb.rule = RelevanceRule::threshold(4.5);
    EXPECT_EQ(pmi_for(pb, 0, w0).pairs.size(), 1u);
    pb.rule = RelevanceRule::top(2); // global top 2 are (1,1) and (0,0)
    EXPECT_EQ(pmi_for(pb, 0, w0).pairs, (std::vector<BeamPair>{{0, 0}}));
}

TEST(Beamsel, FirstUeIgnoresGcmdFactor) {
    Rng rng(67);
    const SelectionProblem pb = small_instance({}, rng);
    const SelectionState empty;
    for (const auto& c : combinations(pb.b_ue(), pb.m_ue)) {
        EXPECT_DOUBLE_EQ(objective_fk(PolicyId::P2, pb, empty, 0, c), objective_fk(PolicyId::P1, pb, empty, 0, c));
        EXPECT_DOUBLE_EQ(objective_fk(PolicyId::P4, pb, empty, 0, c), objective_fk(PolicyId::P3, pb, empty, 0, c));
    }
}

TEST(Beamsel, NegligibleOverheadMakesP3EqualP1) {
    Rng rng(68);
    SelectionProblem pb = small_instance({}, rng);
    pb.t_total = 1e300;
    const SelectionState empty;
    for (const auto& c : combinations(pb.b_ue(), pb.m_ue))
        EXPECT_DOUBLE_EQ(objective_fk(PolicyId::P3, pb, empty, 1, c), objective_fk(PolicyId::P1, pb, empty, 1, c));
}

TEST(Beamsel, P4ValueMatchesScalarFormula) {
    Rng rng(69);
    SmallInstanceSpec spec;
    spec.t_total = 40.0;
    const SelectionProblem pb = small_instance(spec, rng);
    SelectionState st;
    const BeamList w0{0};
    st.push(0, w0, pmi_for(pb, 0, w0));
    const BeamList cand{1};
    const auto pmi1 = pmi_for(pb, 1, cand);
    std::set<int> vu = st.b_fix;
    for (const auto& p : pmi1.pairs)
        vu.insert(p.v);
    // tr(Sbar_1), its normalized trace correlation with Sbar_0, all over the union.
    const auto& u0 = pb.ues[0];
    const auto& u1 = pb.ues[1];
    double tr = 0.0, n0 = 0.0, n1 = 0.0, x = 0.0;
    for (int a : vu) {
        tr += u1.cov(u1.index(a, 1), u1.index(a, 1)).real();
        for (int b : vu) {
            const cplx s1 = u1.cov(u1.index(a, 1), u1.index(b, 1));
            const cplx s0 = u0.cov(u0.index(a, 0), u0.index(b, 0));
            n0 += std::norm(s0);
            n1 += std::norm(s1);
            x += (s1 * std::conj(s0)).real();
        }
    }
    const double delta = 1.0 - x / std::sqrt(n0 * n1);
    const double omega = static_cast<double>(pb.tau) * static_cast<double>(vu.size()) / pb.t_total;
    const double ref = (1.0 - omega) * pb.m_ue * std::log2(1.0 + pb.kappa * tr * delta / pb.m_ue);
    EXPECT_NEAR(objective_fk(PolicyId::P4, pb, st, 1, cand), ref, 1e-12);
}

TEST(Beamsel, UncoordinatedPicksTheAlignedPair) {
    RMat g = RMat::Zero(4, 3);
    g(2, 1) = 1.0;
    auto pb = problem_from({diag_stats(g)}, 1, 1, 1.0, 1, 100.0);
    const auto a = select_uncoordinated(pb);
    EXPECT_EQ(a.ue_beams[0], (BeamList{1}));
    EXPECT_EQ(a.bs_beams, (BeamList{2}));
}

TEST(Beamsel, UncoordinatedActivatesBothUnions) {
    RMat g1 = RMat::Zero(6, 2), g2 = RMat::Zero(6, 2);
    g1(0, 0) = g1(1, 0) = g1(2, 0) = 1.0;
    g2(3, 1) = g2(4, 1) = 1.0;
    auto pb = problem_from({diag_stats(g1), diag_stats(g2)}, 1, 3, 1.0, 1, 100.0);
    pb.rule = RelevanceRule::threshold(0.1);
    const auto a = select_uncoordinated(pb);
    EXPECT_EQ(a.bs_beams, (BeamList{0, 1, 2, 3, 4}));
}

TEST(Beamsel, UncoordinatedMatchesExhaustiveP1) {
    Rng rng(70);
    SmallInstanceSpec spec;
    spec.b_ue_min = spec.b_ue_max = 4;
    spec.m_ue = 2;
    spec.k = 3;
    for (int n = 0; n < 20; ++n) {
        const SelectionProblem pb = small_instance(spec, rng);
        const auto a = select_uncoordinated(pb);
        EXPECT_NEAR(full_objective(PolicyId::P1, pb, a.ue_beams), brute_force_central(PolicyId::P1, pb).objective,
                    1e-12);
        // Per UE: no other combiner has a larger own-PMI bound.
        for (int k = 0; k < pb.n_users(); ++k) {
            const auto own = [&](const BeamList& w) {
                const auto s = pmi_for(pb, k, w).bs_beams();
                return bound_from_trace(pb.ues[k].effective_trace(BeamList(s.begin(), s.end()), w), pb.kappa, pb.m_ue);
            };
            for (const auto& c : combinations(4, 2))
                EXPECT_LE(own(c), own(a.ue_beams[k]) + 1e-12);
        }
    }
}

TEST(Beamsel, OverheadAwareUeMovesOntoSharedBeams) {
    RMat g1 = RMat::Zero(6, 2), g2 = RMat::Zero(6, 2);
    g1(0, 0) = g1(1, 0) = g1(2, 0) = 1.0;
    g2(3, 0) = g2(4, 0) = 1.0; // strong private paths
    g2(1, 1) = g2(2, 1) = 0.6; // weaker paths through UE 1's beams
    auto pb = problem_from({diag_stats(g1), diag_stats(g2)}, 1, 3, 1.0, 1, 8.0);
    pb.rule = RelevanceRule::threshold(0.1);
    EXPECT_EQ(select_uncoordinated(pb).bs_beams.size(), 5u);
    const auto a = select_hierarchical(PolicyId::P3, pb);
    EXPECT_EQ(a.ue_beams[1], (BeamList{1}));
    EXPECT_EQ(a.bs_beams, (BeamList{0, 1, 2}));
}

TEST(Beamsel, SingleUeHierarchicalMatchesUncoordinated) {
    Rng rng(71);
    SmallInstanceSpec spec;
    spec.k = 1;
    spec.b_ue_min = spec.b_ue_max = 4;
    spec.m_ue = 2;
    spec.pmi_cap = 1; // every combiner reports exactly one beam
    int checked = 0;
    for (int n = 0; n < 30; ++n) {
        const SelectionProblem pb = small_instance(spec, rng);
        const auto u = select_uncoordinated(pb);
        EXPECT_EQ(select_hierarchical(PolicyId::P1, pb).ue_beams, u.ue_beams);
        EXPECT_EQ(select_hierarchical(PolicyId::P3, pb).ue_beams, u.ue_beams);
        EXPECT_EQ(brute_force_central(PolicyId::P1, pb).assignment.ue_beams, u.ue_beams);
        ++checked;
    }
    EXPECT_EQ(checked, 30);
}

TEST(Beamsel, HierarchicalNeverBeatsExhaustive) {
    Rng rng(72);
    SmallInstanceSpec spec;
    spec.b_bs_min = spec.b_bs_max = 4;
    spec.b_ue_min = spec.b_ue_max = 2;
    for (int n = 0; n < 50; ++n) {
        const SelectionProblem pb = small_instance(spec, rng);
        for (auto p : {PolicyId::P2, PolicyId::P3, PolicyId::P4}) {
            const double h = full_objective(p, pb, select_hierarchical(p, pb).ue_beams);
            EXPECT_LE(h, brute_force_central(p, pb).objective + 1e-12);
        }
    }
}

TEST(Beamsel, ExhaustiveFindsOrthogonalAlignedPairs) {
    // Two UEs on disjoint rank-1 pairs: (v1, w0) and (v4, w2) among 6 x 3.
    RMat g1 = RMat::Zero(6, 3), g2 = RMat::Zero(6, 3);
    g1(1, 0) = 1.0;
    g2(4, 2) = 1.0;
    auto pb = problem_from({diag_stats(g1), diag_stats(g2)}, 1, 1, 10.0, 1, 100.0);
    pb.rule = RelevanceRule::threshold(0.5);
    const auto r = brute_force_central(PolicyId::P2, pb);
    EXPECT_EQ(r.assignment.ue_beams[0], (BeamList{0}));
    EXPECT_EQ(r.assignment.ue_beams[1], (BeamList{2}));
    const auto sb = effective_covariances(pb, r.assignment);
    EXPECT_NEAR(gcmd(sb, 0), 1.0, 1e-15);
    EXPECT_NEAR(r.objective, 2.0 * std::log2(11.0), 1e-12);
}

TEST(Beamsel, ExhaustiveSearchRespectsCap) {
    Rng rng(73);
    const SelectionProblem pb = small_instance({}, rng);
    EXPECT_THROW(brute_force_central(PolicyId::P2, pb, 1.0), CapacityError);
}

TEST(Beamsel, HierarchicalValidatesOrder) {
    Rng rng(74);
    const SelectionProblem pb = small_instance({}, rng);
    EXPECT_THROW(select_hierarchical(PolicyId::P2, pb, std::vector<int>{0, 0}), InvalidArgument);
    EXPECT_THROW(select_hierarchical(PolicyId::P2, pb, std::vector<int>{0}), InvalidArgument);
    EXPECT_NO_THROW(select_hierarchical(PolicyId::P2, pb, std::vector<int>{1, 0}));
}

TEST(Beamsel, NegligibleOverheadHierarchiesCoincide) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        SmallInstanceSpec spec;
        spec.k = 3;
        SelectionProblem pb = small_instance(spec, rng);
        pb.t_total = 1e300;
        EXPECT_EQ(select_hierarchical(PolicyId::P3, pb).ue_beams, select_hierarchical(PolicyId::P1, pb).ue_beams);
    }
}

TEST(Beamsel, UnionOverheadMatchesBeamCount) {
    Rng rng(75);
    for (int n = 0; n < 20; ++n) {
        SmallInstanceSpec spec;
        spec.k = 3;
        const SelectionProblem pb = small_instance(spec, rng);
        const auto a = select_hierarchical(PolicyId::P4, pb);
        EXPECT_DOUBLE_EQ(overhead_w(a.pmi, pb.tau, pb.t_total),
                         overhead_v(static_cast<int>(a.bs_beams.size()), pb.tau, pb.t_total));
    }
}

TEST(Beamsel, PaddingReachesTheBudgetWithStrongestBeams) {
    RMat g1 = RMat::Zero(6, 2), g2 = RMat::Zero(6, 2);
    g1(0, 0) = 1.0;
    g1(5, 0) = 0.3;
    g2(1, 1) = 1.0;
    g2(3, 1) = 0.5;
    auto pb = problem_from({diag_stats(g1), diag_stats(g2)}, 2, 1, 1.0, 1, 100.0);
    pb.enforce_budget = true;
    const auto a = make_assignment(pb, {{0, 1}, {0, 1}});
    // Budget (K-1) M_UE + 1 = 3: PMI beams {0, 1} plus the strongest other, beam 3.
    EXPECT_EQ(a.bs_beams, (BeamList{0, 1, 3}));
    EXPECT_EQ(a.padded_beams, 1);
    EXPECT_TRUE(a.feasible);
    pb.ues = {diag_stats(RMat::Ones(2, 2)), diag_stats(RMat::Ones(2, 2))};
    EXPECT_THROW(make_assignment(pb, {{0, 1}, {0, 1}}), InfeasibleAssignment);
}

TEST(Beamsel, SingleUserSelectionMatchesEnumeration) {
    Rng rng(76);
    const auto st = cluster_channel(rng, 6, 3);
    const auto bd = beam_domain_stats(st, dft_codebook(6, 6), dft_codebook(3, 3, Side::ue));
    const auto sel = select_single_user(bd, 2, 2);
    double best = -1.0;
    for (const auto& v : combinations(6, 2))
        for (const auto& w : combinations(3, 2))
            best = std::max(best, bd.effective_trace(v, w));
    EXPECT_NEAR(sel.trace, best, 1e-12);
    EXPECT_NEAR(bd.effective_trace(sel.v, sel.w), best, 1e-12);
    EXPECT_THROW(select_single_user(bd, 7, 2), InvalidArgument);
}
