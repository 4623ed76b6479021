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

// Monte-Carlo campaign driver.
//
// A drop is one beam-coherence block: user placement, cluster draw, covariances
// and one beam decision per policy. Inside it, frames_per_drop channel
// realizations are trained, estimated, fed back, precoded and scored. All
// sweep cells of a drop reuse the same channel and unit noise draws.
//
// Seeds: geometry, channel and noise streams of drop d come from
// derive_seed(seed, d, stream), so results do not depend on the worker count.

#ifndef GOBSEL_HARNESS_HPP
#define GOBSEL_HARNESS_HPP

#include "gobsel/beamsel.hpp"
#include "gobsel/precoding.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace gob {

inline constexpr int kUnquantized = 0;
inline constexpr const char* kTddPolicy = "TDD";

struct ScenarioConfig {
    int n_bs = 64;
    int n_ue = 4;
    int b_bs = 64;
    int b_ue = 4;
    int m_ue = 3;
    int k = 7;
    double element_spacing = 0.5;
    std::vector<double> snr_db{11.0};
    std::vector<double> t_coh_ms{15.0};
    std::vector<int> q_bits{kUnquantized};
    int pmi_cap = 4;
    int tau = 0; // 0 picks the smallest prime that fits every possible M_BS
    int zc_root = 1;
    int iterations = 500;
    int paper_iterations = 10000;
    std::uint64_t seed = 1;
    Scenario scenario = Scenario::random;
    double cell_radius = 200.0;
    double cluster_radius = 10.0;
    double sector_half_angle_deg = 60.0;
    std::vector<PolicyId> policies{PolicyId::P1, PolicyId::P2, PolicyId::P3, PolicyId::P4};
    bool tdd = true;
    bool enforce_budget = true;
    OverheadCount overhead_count = OverheadCount::bs_beams;
    RelevanceRule relevance;
    ClusterConfig cluster;
    int frames_per_drop = 1;
    double rank_tol = 1e-9;
    int workers = 1;

    /// Largest BS beam count any policy can activate.
    int max_m_bs() const {
        const int budget = enforce_budget ? (k - 1) * m_ue + 1 : 1;
        return std::max(std::min(b_bs, k * pmi_cap), std::min(budget, b_bs));
    }

    int effective_tau() const { return tau > 0 ? tau : next_prime(max_m_bs()); }

    void validate() const {
        require(n_bs >= 1 && n_ue >= 1 && b_bs >= 1 && b_ue >= 1 && k >= 1, "config: counts must be positive");
        require(m_ue >= 1 && m_ue <= b_ue, "config: need 1 <= m_ue <= b_ue");
        require((k - 1) * m_ue < b_bs, "config: (K-1)*m_ue < b_bs is required for block diagonalization");
        require(pmi_cap >= 1, "config: pmi_cap must be >= 1");
        require(iterations >= 1 && paper_iterations >= 1, "config: iterations must be >= 1");
        require(frames_per_drop >= 1, "config: frames_per_drop must be >= 1");
        require(workers >= 1, "config: workers must be >= 1");
        require(!snr_db.empty() && !t_coh_ms.empty() && !q_bits.empty(), "config: sweep lists must not be empty");
        require(!policies.empty() || tdd, "config: nothing to evaluate");
        require(tau >= 0, "config: tau must be >= 0");
        require(effective_tau() >= max_m_bs(), "config: tau must be >= the largest possible M_BS");
        require(zc_root >= 1 && std::gcd(zc_root, effective_tau()) == 1, "config: zc_root must be coprime with tau");
        for (double t : t_coh_ms) {
            require(t > 0.0, "config: t_coh_ms must be positive");
            require(static_cast<double>(effective_tau()) * max_m_bs() <= frame_resource_elements(t),
                    "config: pilots exceed the frame at t_coh_ms = " + std::to_string(t));
        }
        for (int q : q_bits)
            require(q == kUnquantized || (q >= 1 && q <= 52), "config: q_bits entries must be 0 or in [1, 52]");
        require(element_spacing > 0.0, "config: element_spacing must be positive");
        require(cell_radius > 0.0 && cluster_radius > 0.0, "config: radii must be positive");
        require(sector_half_angle_deg > 0.0 && sector_half_angle_deg <= 180.0,
                "config: sector_half_angle_deg must lie in (0, 180]");
        require(rank_tol > 0.0 && rank_tol < 1.0, "config: rank_tol must lie in (0, 1)");
        cluster.validate();
    }
};

inline std::string to_string(Scenario s) { return s == Scenario::random ? "random" : "closely_located"; }

namespace detail {

template <class T>
T parse_number(const std::string& key, const std::string& s) {
    T out{};
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    if (ec != std::errc() || p != e)
        throw InvalidArgument("config: key '" + key + "' expects a number, got '" + s + "'");
    return out;
}

inline bool parse_bool(const std::string& key, const std::string& s) {
    if (s == "true" || s == "1" || s == "yes" || s == "on")
        return true;
    if (s == "false" || s == "0" || s == "no" || s == "off")
        return false;
    throw InvalidArgument("config: key '" + key + "' expects a boolean, got '" + s + "'");
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '[' && c != ']' && c != '"') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

} // namespace detail

inline std::vector<PolicyId> parse_policy_list(const std::string& s) {
    std::vector<PolicyId> out;
    for (const auto& p : detail::split_list(s))
        out.push_back(parse_policy(p));
    return out;
}

/// Applies one key to the config; list-valued keys take every input.
inline void apply_config_value(ScenarioConfig& c, const std::string& key, const std::vector<std::string>& in) {
    auto one = [&]() -> const std::string& {
        if (in.size() != 1)
            throw InvalidArgument("config: key '" + key + "' expects a single value");
        return in.front();
    };
    auto num = [&]<class T>(T& dst) { dst = detail::parse_number<T>(key, one()); };
    auto list = [&]<class T>(std::vector<T>& dst) {
        dst.clear();
        for (const auto& raw : in)
            for (const auto& s : detail::split_list(raw))
                dst.push_back(detail::parse_number<T>(key, s));
        if (dst.empty())
            throw InvalidArgument("config: key '" + key + "' has an empty list");
    };
    if (key == "n_bs") num(c.n_bs);
    else if (key == "n_ue") num(c.n_ue);
    else if (key == "b_bs") num(c.b_bs);
    else if (key == "b_ue") num(c.b_ue);
    else if (key == "m_ue") num(c.m_ue);
    else if (key == "k") num(c.k);
    else if (key == "element_spacing") num(c.element_spacing);
    else if (key == "snr_db") list(c.snr_db);
    else if (key == "t_coh_ms") list(c.t_coh_ms);
    else if (key == "q_bits") list(c.q_bits);
    else if (key == "pmi_cap") num(c.pmi_cap);
    else if (key == "tau") num(c.tau);
    else if (key == "zc_root") num(c.zc_root);
    else if (key == "iterations") num(c.iterations);
    else if (key == "paper_iterations") num(c.paper_iterations);
    else if (key == "seed") num(c.seed);
    else if (key == "cell_radius") num(c.cell_radius);
    else if (key == "cluster_radius") num(c.cluster_radius);
    else if (key == "sector_half_angle_deg") num(c.sector_half_angle_deg);
    else if (key == "frames_per_drop") num(c.frames_per_drop);
    else if (key == "rank_tol") num(c.rank_tol);
    else if (key == "workers") num(c.workers);
    else if (key == "n_clusters") num(c.cluster.n_clusters);
    else if (key == "paths_per_cluster") num(c.cluster.paths_per_cluster);
    else if (key == "angle_spread_deg") num(c.cluster.angle_spread_deg);
    else if (key == "ue_angle_spread_deg") num(c.cluster.ue_angle_spread_deg);
    else if (key == "shared_cluster_probability") num(c.cluster.shared_cluster_probability);
    else if (key == "scatter_radius") num(c.cluster.scatter_radius);
    else if (key == "los_probability") num(c.cluster.los_probability);
    else if (key == "k_factor") num(c.cluster.k_factor);
    else if (key == "tdd") c.tdd = detail::parse_bool(key, one());
    else if (key == "enforce_budget") c.enforce_budget = detail::parse_bool(key, one());
    else if (key == "policies") {
        c.policies.clear();
        for (const auto& raw : in)
            for (auto p : parse_policy_list(raw))
                c.policies.push_back(p);
    } else if (key == "scenario") {
        const auto& s = one();
        if (s == "random") c.scenario = Scenario::random;
        else if (s == "closely_located") c.scenario = Scenario::closely_located;
        else throw InvalidArgument("config: unknown scenario '" + s + "'");
    } else if (key == "overhead_count") {
        const auto& s = one();
        if (s == "bs_beams") c.overhead_count = OverheadCount::bs_beams;
        else if (s == "pairs") c.overhead_count = OverheadCount::pairs;
        else throw InvalidArgument("config: overhead_count must be bs_beams or pairs");
    } else if (key == "relevance_threshold") {
        c.relevance = RelevanceRule::threshold(detail::parse_number<double>(key, one()));
    } else if (key == "relevance_top_n") {
        c.relevance = RelevanceRule::top(detail::parse_number<int>(key, one()));
    } else {
        throw InvalidArgument("config: unknown key '" + key + "'");
    }
}

/// Reads a key = value file (TOML subset: # comments, [a, b] lists).
inline ScenarioConfig load_config(const std::string& path) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_file(path);
    } catch (const CLI::Error& e) {
        throw IoError("cannot read config '" + path + "': " + e.what());
    }
    ScenarioConfig c;
    for (const auto& it : items) {
        if (it.name == "++" || it.name == "--")
            continue;
        apply_config_value(c, it.name, it.inputs);
    }
    return c;
}

// ---------------------------------------------------------------- records

struct CellKey {
    std::string policy;
    double snr_db = 0.0;
    double t_coh_ms = 0.0;
    int q_bits = 0;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CellSample {
    double throughput = 0.0;
    double sum_se = 0.0;
    double m_bs = 0.0;
    double omega = 0.0;
    double gcmd = 0.0;
    std::vector<double> se_per_ue;
};

struct DropRecord {
    std::vector<std::pair<CellKey, CellSample>> cells; // fixed sweep order
};

struct CellResult {
    CellKey key;
    int k = 0;
    double mean_throughput = 0.0;
    double stderr_throughput = 0.0;
    double mean_m_bs = 0.0;
    double mean_omega = 0.0;
    double mean_gcmd = 0.0;
    double mean_se_per_ue = 0.0;
    int n = 0;
};

struct CampaignResult {
    std::vector<CellResult> cells;

    const CellResult& at(const std::string& policy, double snr, double t_coh, int q) const {
        for (const auto& c : cells)
            if (c.key.policy == policy && c.key.snr_db == snr && c.key.t_coh_ms == t_coh && c.key.q_bits == q)
                return c;
        throw InvalidArgument("CampaignResult: no cell " + policy);
    }
};

// ---------------------------------------------------------------- one drop

struct DropContext {
    ScenarioConfig cfg;
    Codebook bs_cb;
    Codebook ue_cb;

    explicit DropContext(ScenarioConfig c)
        : cfg(std::move(c)), bs_cb(dft_codebook(cfg.n_bs, cfg.b_bs, Side::bs)),
          ue_cb(dft_codebook(cfg.n_ue, cfg.b_ue, Side::ue)) {
        cfg.validate();
    }
};

/// Second-order statistics of one drop.
struct DropStats {
    std::vector<ChannelStats> channels;
    std::vector<BeamDomainStats> beams;
    std::vector<int> order; // hierarchy order
};

inline DropStats draw_drop_stats(const DropContext& ctx, std::uint64_t drop) {
    const auto& c = ctx.cfg;
    Rng rng(derive_seed(c.seed, drop, 1));
    const auto geo = place_users(c.scenario, c.k, c.cell_radius, c.cluster_radius, rng, c.sector_half_angle_deg);
    ScattererPool pool;
    DropStats d;
    const ArrayGeometry bs{c.n_bs, c.element_spacing};
    const ArrayGeometry ue{c.n_ue, c.element_spacing};
    for (int u = 0; u < c.k; ++u) {
        d.channels.push_back(covariance_from_clusters(draw_clusters(geo, u, c.cluster, pool, rng), bs, ue));
        d.beams.push_back(beam_domain_stats(d.channels.back(), ctx.bs_cb, ctx.ue_cb));
    }
    d.order.resize(static_cast<std::size_t>(c.k));
    for (int u = 0; u < c.k; ++u)
        d.order[static_cast<std::size_t>(u)] = u;
    std::shuffle(d.order.begin(), d.order.end(), rng);
    return d;
}

inline SelectionProblem make_problem(const DropContext& ctx, const DropStats& d, double kappa, int tau,
                                     double t_total) {
    SelectionProblem pb;
    pb.ues = d.beams;
    pb.m_ue = ctx.cfg.m_ue;
    pb.pmi_cap = ctx.cfg.pmi_cap;
    pb.rule = ctx.cfg.relevance;
    pb.kappa = kappa;
    pb.tau = tau;
    pb.t_total = t_total;
    pb.count = ctx.cfg.overhead_count;
    pb.enforce_budget = ctx.cfg.enforce_budget;
    return pb;
}

inline BeamAssignment select_policy(PolicyId p, const SelectionProblem& pb, std::span<const int> order) {
    return p == PolicyId::P1 ? select_uncoordinated(pb) : select_hierarchical(p, pb, order);
}

/// Trains, estimates, feeds back and precodes one frame for one assignment;
/// returns (se per UE) for every q in q_list.
inline std::vector<std::vector<double>> score_assignment(const DropContext& ctx, const DropStats& d,
                                                         const BeamAssignment& a, const std::vector<CMat>& h,
                                                         const std::vector<CMat>& unit_noise, double kappa) {
    const auto& c = ctx.cfg;
    const double noise_var = 1.0 / kappa;
    const int tau = c.effective_tau();
    const int m_bs = static_cast<int>(a.bs_beams.size());
    const CMat v = assemble_precoder(ctx.bs_cb, a.bs_beams);
    const PilotMatrix s = pilot_matrix(m_bs, tau, c.zc_root);
    TrainingConfig tc = TrainingConfig::from_kappa(kappa, tau, 1.0);

    std::vector<CMat> h_true, h_hat, w_gob;
    for (int u = 0; u < c.k; ++u) {
        const auto ui = static_cast<std::size_t>(u);
        const CMat w = assemble_precoder(ctx.ue_cb, a.ue_beams[ui]);
        const CMat y = received_training(h[ui], v, w, s, tc, CMat(std::sqrt(noise_var) * unit_noise[ui]));
        const CMat sb = d.beams[ui].effective(a.bs_beams, a.ue_beams[ui]);
        h_hat.push_back(unvec(lmmse_estimate_reduced(y, sb, s, w, tc), c.m_ue, m_bs));
        h_true.push_back(w.adjoint() * h[ui] * v);
        w_gob.push_back(w);
    }
    std::vector<std::vector<double>> out;
    for (int q : c.q_bits) {
        std::vector<CMat> fb = h_hat;
        if (q != kUnquantized)
            for (auto& m : fb)
                m = quantize_feedback(m, q);
        const BdSolution bd = block_diagonalize(fb, c.rank_tol);
        out.push_back(se_general(h_true, w_gob, bd.v_bar, bd.w_bar, kappa, noise_var));
    }
    return out;
}

inline double sum_of(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v)
        acc += x;
    return acc;
}

inline DropRecord run_drop_impl(const DropContext& ctx, std::uint64_t drop) {
    const auto& c = ctx.cfg;
    const DropStats d = draw_drop_stats(ctx, drop);
    const int tau = c.effective_tau();

    // Channel and unit noise draws per frame, shared by every cell.
    std::vector<std::vector<CMat>> h(static_cast<std::size_t>(c.frames_per_drop));
    std::vector<std::vector<CMat>> noise(static_cast<std::size_t>(c.frames_per_drop));
    for (int f = 0; f < c.frames_per_drop; ++f) {
        const auto fi = static_cast<std::size_t>(f);
        Rng ch(derive_seed(c.seed, drop, 2 + 2 * static_cast<std::uint64_t>(f)));
        Rng nz(derive_seed(c.seed, drop, 3 + 2 * static_cast<std::uint64_t>(f)));
        for (int u = 0; u < c.k; ++u) {
            h[fi].push_back(realize_channel(d.channels[static_cast<std::size_t>(u)], ch).h);
            noise[fi].push_back(randn_complex(nz, c.n_ue, tau));
        }
    }

    std::vector<CMat> full_sigmas;
    for (const auto& st : d.channels)
        full_sigmas.push_back(st.sigma);
    const double full_gcmd = mean_gcmd(full_sigmas);

    DropRecord rec;
    const double frames = c.frames_per_drop;
    for (double snr : c.snr_db) {
        const double kappa = std::pow(10.0, snr / 10.0);
        // P1 and P2 ignore the overhead, so their decisions do not depend on T.
        std::map<PolicyId, BeamAssignment> cache;
        std::map<PolicyId, std::vector<std::vector<double>>> score_cache; // [q][ue], averaged over frames
        std::vector<std::vector<double>> tdd_se;                          // [q][ue]
        for (double t_coh : c.t_coh_ms) {
            const double t_total = frame_resource_elements(t_coh);
            const SelectionProblem pb = make_problem(ctx, d, kappa, tau, t_total);
            for (PolicyId p : c.policies) {
                const bool reusable = !uses_overhead(p);
                if (!reusable || !cache.count(p)) {
                    cache[p] = select_policy(p, pb, d.order);
                    std::vector<std::vector<double>> acc;
                    for (int f = 0; f < c.frames_per_drop; ++f) {
                        auto sc = score_assignment(ctx, d, cache[p], h[static_cast<std::size_t>(f)],
                                                   noise[static_cast<std::size_t>(f)], kappa);
                        if (acc.empty())
                            acc = std::vector<std::vector<double>>(sc.size(), std::vector<double>(sc[0].size(), 0.0));
                        for (std::size_t qi = 0; qi < sc.size(); ++qi)
                            for (std::size_t u = 0; u < sc[qi].size(); ++u)
                                acc[qi][u] += sc[qi][u] / frames;
                    }
                    score_cache[p] = std::move(acc);
                }
                const BeamAssignment& a = cache[p];
                const int m_bs = static_cast<int>(a.bs_beams.size());
                const double omega = overhead_v(m_bs, tau, t_total);
                const double g = mean_gcmd(effective_covariances(pb, a));
                for (std::size_t qi = 0; qi < c.q_bits.size(); ++qi) {
                    const auto rep = effective_throughput(score_cache[p][qi], omega);
                    CellSample s{rep.throughput, rep.sum_se(), static_cast<double>(m_bs), omega, g, rep.se_per_ue};
                    rec.cells.push_back({CellKey{std::string(to_string(p)), snr, t_coh, c.q_bits[qi]}, std::move(s)});
                }
            }
            if (c.tdd) {
                // No downlink overhead, so one evaluation serves every T_coh.
                if (tdd_se.empty()) {
                    for (int q : c.q_bits) {
                        std::vector<double> se(static_cast<std::size_t>(c.k), 0.0);
                        for (int f = 0; f < c.frames_per_drop; ++f) {
                            const auto rep = tdd_benchmark(h[static_cast<std::size_t>(f)], kappa, 1.0 / kappa,
                                                           q == kUnquantized ? std::nullopt : std::optional<int>(q),
                                                           c.rank_tol);
                            for (std::size_t u = 0; u < se.size(); ++u)
                                se[u] += rep.se_per_ue[u] / frames;
                        }
                        tdd_se.push_back(std::move(se));
                    }
                }
                for (std::size_t qi = 0; qi < c.q_bits.size(); ++qi) {
                    const auto rep = effective_throughput(tdd_se[qi], 0.0);
                    CellSample s{rep.throughput, rep.sum_se(), 0.0, 0.0, full_gcmd, rep.se_per_ue};
                    rec.cells.push_back({CellKey{kTddPolicy, snr, t_coh, c.q_bits[qi]}, std::move(s)});
                }
            }
        }
    }
    return rec;
}

/// One drop; library errors are re-raised with the drop index attached.
inline DropRecord run_drop(const DropContext& ctx, std::uint64_t drop) {
    try {
        return run_drop_impl(ctx, drop);
    } catch (const InfeasibleAssignment& e) {
        throw InfeasibleAssignment(e.ue(), "drop " + std::to_string(drop) + ": " + e.detail());
    } catch (const Error& e) {
        throw Error(e.kind(), "drop " + std::to_string(drop) + ": " + e.detail());
    }
}

inline DropRecord run_drop(const ScenarioConfig& cfg, std::uint64_t drop) {
    return run_drop(DropContext(cfg), drop);
}

// ---------------------------------------------------------------- campaign

/// Means and standard errors per cell; drops are folded in index order.
inline CampaignResult aggregate(const ScenarioConfig& cfg, const std::vector<DropRecord>& drops) {
    CampaignResult res;
    if (drops.empty())
        return res;
    const auto n_cells = drops.front().cells.size();
    const double n = static_cast<double>(drops.size());
    for (std::size_t i = 0; i < n_cells; ++i) {
        CellResult r;
        r.key = drops.front().cells[i].first;
        r.k = cfg.k;
        r.n = static_cast<int>(drops.size());
        double sq = 0.0;
        double se_ue = 0.0;
        for (const auto& d : drops) {
            const auto& s = d.cells[i].second;
            r.mean_throughput += s.throughput;
            r.mean_m_bs += s.m_bs;
            r.mean_omega += s.omega;
            r.mean_gcmd += s.gcmd;
            se_ue += s.se_per_ue.empty() ? 0.0 : s.sum_se / static_cast<double>(s.se_per_ue.size());
        }
        r.mean_throughput /= n;
        r.mean_m_bs /= n;
        r.mean_omega /= n;
        r.mean_gcmd /= n;
        r.mean_se_per_ue = se_ue / n;
        for (const auto& d : drops) {
            const double dx = d.cells[i].second.throughput - r.mean_throughput;
            sq += dx * dx;
        }
        r.stderr_throughput = drops.size() > 1 ? std::sqrt(sq / (n - 1.0) / n) : 0.0;
        res.cells.push_back(std::move(r));
    }
    return res;
}

/// Runs cfg.iterations drops on cfg.workers threads. Per-drop records are
/// returned through `records` when non-null.
inline CampaignResult run_campaign(const ScenarioConfig& cfg, std::vector<DropRecord>* records = nullptr) {
    const DropContext ctx(cfg);
    const auto n = static_cast<std::size_t>(cfg.iterations);
    std::vector<DropRecord> drops(n);
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::size_t err_drop = n;
    std::exception_ptr err;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            {
                std::lock_guard lk(err_mu);
                if (err && err_drop < i)
                    return;
            }
            try {
                drops[i] = run_drop(ctx, i);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (i < err_drop) {
                    err_drop = i;
                    err = std::current_exception();
                }
            }
        }
    };
    const int w = std::max(1, std::min<int>(cfg.workers, static_cast<int>(n)));
    if (w == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < w; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (err)
        std::rethrow_exception(err);
    CampaignResult res = aggregate(cfg, drops);
    if (records)
        *records = std::move(drops);
    return res;
}

} // namespace gob

#endif // GOBSEL_HARNESS_HPP
