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

#ifndef GOBSEL_IO_HPP
#define GOBSEL_IO_HPP

#include "gobsel/harness.hpp"

#include <nlohmann/json.hpp>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gob {

enum class OutputFormat { csv, json };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    throw InvalidArgument("unknown output format '" + s + "' (csv or json)");
}

inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{"policy",        "snr_db",          "t_coh_ms",          "q_bits",
                                               "K",             "mean_throughput", "stderr_throughput", "mean_m_bs",
                                               "mean_omega",    "mean_gcmd",       "n"};
    return cols;
}

namespace detail {

// Shortest text that reads back to the same double.
inline std::string fmt_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

} // namespace detail

inline void write_csv(std::ostream& os, const CampaignResult& r) {
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << cols[i];
    os << '\n';
    using detail::fmt_double;
    for (const auto& c : r.cells)
        os << c.key.policy << ',' << fmt_double(c.key.snr_db) << ',' << fmt_double(c.key.t_coh_ms) << ','
           << c.key.q_bits << ',' << c.k << ',' << fmt_double(c.mean_throughput) << ','
           << fmt_double(c.stderr_throughput) << ',' << fmt_double(c.mean_m_bs) << ',' << fmt_double(c.mean_omega)
           << ',' << fmt_double(c.mean_gcmd) << ',' << c.n << '\n';
}

inline nlohmann::json config_to_json(const ScenarioConfig& c) {
    nlohmann::json j;
    j["n_bs"] = c.n_bs;
    j["n_ue"] = c.n_ue;
    j["b_bs"] = c.b_bs;
    j["b_ue"] = c.b_ue;
    j["m_ue"] = c.m_ue;
    j["k"] = c.k;
    j["element_spacing"] = c.element_spacing;
    j["snr_db"] = c.snr_db;
    j["t_coh_ms"] = c.t_coh_ms;
    j["q_bits"] = c.q_bits;
    j["pmi_cap"] = c.pmi_cap;
    j["tau"] = c.effective_tau();
    j["zc_root"] = c.zc_root;
    j["iterations"] = c.iterations;
    j["seed"] = c.seed;
    j["scenario"] = to_string(c.scenario);
    j["cell_radius"] = c.cell_radius;
    j["cluster_radius"] = c.cluster_radius;
    j["sector_half_angle_deg"] = c.sector_half_angle_deg;
    std::vector<std::string> pol;
    for (auto p : c.policies)
        pol.emplace_back(to_string(p));
    j["policies"] = pol;
    j["tdd"] = c.tdd;
    j["enforce_budget"] = c.enforce_budget;
    j["overhead_count"] = c.overhead_count == OverheadCount::pairs ? "pairs" : "bs_beams";
    if (c.relevance.kind == RelevanceRule::Kind::threshold)
        j["relevance_threshold"] = c.relevance.xi;
    else
        j["relevance_top_n"] = c.relevance.n;
    j["n_clusters"] = c.cluster.n_clusters;
    j["paths_per_cluster"] = c.cluster.paths_per_cluster;
    j["angle_spread_deg"] = c.cluster.angle_spread_deg;
    j["ue_angle_spread_deg"] = c.cluster.ue_angle_spread_deg;
    j["shared_cluster_probability"] = c.cluster.shared_cluster_probability;
    j["scatter_radius"] = c.cluster.scatter_radius;
    j["los_probability"] = c.cluster.los_probability;
    j["k_factor"] = c.cluster.k_factor;
    j["frames_per_drop"] = c.frames_per_drop;
    j["rank_tol"] = c.rank_tol;
    return j;
}

inline nlohmann::json result_to_json(const CampaignResult& r, const ScenarioConfig& cfg) {
    nlohmann::json j;
    j["config"] = config_to_json(cfg);
    j["cells"] = nlohmann::json::array();
    for (const auto& c : r.cells)
        j["cells"].push_back({{"policy", c.key.policy},
                              {"snr_db", c.key.snr_db},
                              {"t_coh_ms", c.key.t_coh_ms},
                              {"q_bits", c.key.q_bits},
                              {"K", c.k},
                              {"mean_throughput", c.mean_throughput},
                              {"stderr_throughput", c.stderr_throughput},
                              {"mean_m_bs", c.mean_m_bs},
                              {"mean_omega", c.mean_omega},
                              {"mean_gcmd", c.mean_gcmd},
                              {"mean_se_per_ue", c.mean_se_per_ue},
                              {"n", c.n}});
    return j;
}

inline CampaignResult result_from_json(const nlohmann::json& j) {
    CampaignResult r;
    try {
        for (const auto& c : j.at("cells")) {
            CellResult x;
            x.key.policy = c.at("policy").get<std::string>();
            x.key.snr_db = c.at("snr_db").get<double>();
            x.key.t_coh_ms = c.at("t_coh_ms").get<double>();
            x.key.q_bits = c.at("q_bits").get<int>();
            x.k = c.at("K").get<int>();
            x.mean_throughput = c.at("mean_throughput").get<double>();
            x.stderr_throughput = c.at("stderr_throughput").get<double>();
            x.mean_m_bs = c.at("mean_m_bs").get<double>();
            x.mean_omega = c.at("mean_omega").get<double>();
            x.mean_gcmd = c.at("mean_gcmd").get<double>();
            x.mean_se_per_ue = c.at("mean_se_per_ue").get<double>();
            x.n = c.at("n").get<int>();
            r.cells.push_back(std::move(x));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed result JSON: ") + e.what());
    }
    return r;
}

/// Writes to `path`, or to stdout when path is "-" or empty.
inline void emit_results(const CampaignResult& r, const ScenarioConfig& cfg, OutputFormat fmt,
                         const std::string& path) {
    std::ostringstream os;
    if (fmt == OutputFormat::csv)
        write_csv(os, r);
    else
        os << result_to_json(r, cfg).dump(2) << '\n';
    if (path.empty() || path == "-") {
        std::cout << os.str();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
    f << os.str();
    f.close();
    if (!f)
        throw IoError("write to '" + path + "' failed: " + std::strerror(errno));
}

inline CampaignResult load_results_json(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open '" + path + "': " + std::strerror(errno));
    try {
        return result_from_json(nlohmann::json::parse(f));
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("cannot parse '" + path + "': " + e.what());
    }
}

} // namespace gob

#endif // GOBSEL_IO_HPP
