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

// Generic geometric cluster channel.
//
// Each UE sees n_clusters single-bounce scatterers plus an optional LOS path.
// A cluster is a burst of paths_per_cluster sub-paths whose departure and
// arrival angles are Laplacian-distributed around the scatterer direction.
// Path powers of one UE sum to one; large-scale fading is folded into the SNR.
//
// Steering vectors have unit-modulus entries, a[p] = exp(j*2*pi*d*p*sin(theta)),
// so E|[H]_{ij}|^2 = 1 and tr(Sigma) = N_BS * N_UE * (total path power).
// The covariance of vec(H) (column-major, H is N_UE x N_BS) is
//   Sigma = sum_p power_p * b_p b_p^H,   b_p = conj(a_BS(aod_p)) (x) a_UE(aoa_p).

#ifndef GOBSEL_CHANNEL_HPP
#define GOBSEL_CHANNEL_HPP

#include "gobsel/linalg.hpp"

#include <numbers>
#include <optional>

namespace gob {

struct ArrayGeometry {
    int n_elements = 1;
    double element_spacing = 0.5; // wavelengths

    void validate() const {
        require(n_elements >= 1, "array must have at least one element");
        require(element_spacing > 0.0, "element spacing must be positive");
    }
};

/// Unit-modulus ULA response at angle theta (radians from broadside).
inline CVec steering_vector(const ArrayGeometry& g, double theta) {
    CVec a(g.n_elements);
    const double phase = 2.0 * std::numbers::pi * g.element_spacing * std::sin(theta);
    for (int p = 0; p < g.n_elements; ++p)
        a(p) = std::polar(1.0, phase * p);
    return a;
}

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

enum class Scenario { random, closely_located };

struct DropGeometry {
    std::vector<Point2> ue_positions;
    Point2 bs_position;
    Scenario scenario = Scenario::random;
};

struct Path {
    double aod = 0.0; // radians, at the BS array
    double aoa = 0.0; // radians, at the UE array
    double mean_power = 0.0;

    friend bool operator==(const Path&, const Path&) = default;
};

struct ClusterSet {
    std::vector<Path> paths;
    bool los_flag = false;
    double k_factor = 0.0;

    double total_power() const {
        double acc = 0.0;
        for (const auto& p : paths)
            acc += p.mean_power;
        return acc;
    }
};

struct ClusterConfig {
    int n_clusters = 4;
    int paths_per_cluster = 20;
    double angle_spread_deg = 5.0;     // Laplacian spread of sub-path AoDs at the BS
    double ue_angle_spread_deg = 20.0; // Laplacian spread of sub-path AoAs at the UE
    double shared_cluster_probability = 0.0;
    double scatter_radius = 60.0;      // scatterers lie within this distance of their UE, meters
    double los_probability = 0.0;
    double k_factor = 0.0;             // linear LOS-to-scattered power ratio

    void validate() const {
        require(n_clusters >= 1, "n_clusters must be >= 1");
        require(paths_per_cluster >= 1, "paths_per_cluster must be >= 1");
        require(angle_spread_deg >= 0.0 && ue_angle_spread_deg >= 0.0, "angle spreads must be >= 0");
        require(shared_cluster_probability >= 0.0 && shared_cluster_probability <= 1.0,
                "shared_cluster_probability must lie in [0, 1]");
        require(los_probability >= 0.0 && los_probability <= 1.0, "los_probability must lie in [0, 1]");
        require(k_factor >= 0.0, "k_factor must be >= 0");
        require(scatter_radius > 0.0, "scatter_radius must be positive");
    }
};

/// Scatterers drawn so far in one drop; cluster c of a later UE may reuse
/// entry c to model a path shared among UEs.
struct ScattererPool {
    std::vector<Point2> scatterers;
};

struct ChannelStats {
    CMat sigma;        // covariance of vec(H), (N_BS*N_UE) square
    CMat path_factor;  // sigma = path_factor * path_factor^H, one column per path
    ClusterSet cluster_set;
    ArrayGeometry bs;
    ArrayGeometry ue;
};

struct ChannelRealization {
    CMat h; // N_UE x N_BS
};

namespace detail {

inline double laplacian(Rng& rng, double scale) {
    if (scale <= 0.0)
        return 0.0;
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const double x = u(rng);
    const double s = x < 0.0 ? -1.0 : 1.0;
    return -scale * s * std::log(1.0 - 2.0 * std::abs(x));
}

inline Point2 uniform_in_disc(Rng& rng, const Point2& center, double r_min, double r_max) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = std::sqrt(u(rng) * (r_max * r_max - r_min * r_min) + r_min * r_min);
    const double phi = 2.0 * std::numbers::pi * u(rng);
    return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
}

// Uniform over the annular sector r in [r_min, r_max], |phi| <= half_angle.
inline Point2 uniform_in_sector(Rng& rng, const Point2& center, double r_min, double r_max, double half_angle) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = std::sqrt(u(rng) * (r_max * r_max - r_min * r_min) + r_min * r_min);
    const double phi = half_angle * (2.0 * u(rng) - 1.0);
    return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
}

// Broadside of the BS array points along +x.
inline double angle_from(const Point2& from, const Point2& to, double orientation) {
    return std::atan2(to.y - from.y, to.x - from.x) - orientation;
}

} // namespace detail

/// UEs are placed in the sector |azimuth| <= sector_half_angle_deg around the
/// array broadside (+x), at least 10 m from the BS.
inline DropGeometry place_users(Scenario scenario, int k, double cell_radius, double cluster_radius,
                                Rng& rng, double sector_half_angle_deg = 60.0) {
    require(k >= 1, "place_users: K must be >= 1");
    require(cell_radius > 0.0, "place_users: cell radius must be positive");
    require(scenario == Scenario::random || cluster_radius > 0.0,
            "place_users: cluster radius must be positive");
    require(sector_half_angle_deg > 0.0 && sector_half_angle_deg <= 180.0,
            "place_users: sector half angle must lie in (0, 180] degrees");
    const double half = sector_half_angle_deg * std::numbers::pi / 180.0;
    constexpr double kMinDistance = 10.0;
    DropGeometry g;
    g.scenario = scenario;
    g.ue_positions.reserve(static_cast<std::size_t>(k));
    if (scenario == Scenario::random) {
        for (int i = 0; i < k; ++i)
            g.ue_positions.push_back(detail::uniform_in_sector(rng, g.bs_position,
                                                               std::min(kMinDistance, cell_radius / 2), cell_radius,
                                                               half));
    } else {
        require(cluster_radius < cell_radius, "place_users: cluster radius must be below cell radius");
        const double r_min = std::min(kMinDistance + cluster_radius, 0.5 * (cell_radius + cluster_radius));
        const Point2 anchor = detail::uniform_in_sector(rng, g.bs_position, r_min - cluster_radius,
                                                        cell_radius - cluster_radius, half);
        for (int i = 0; i < k; ++i)
            g.ue_positions.push_back(detail::uniform_in_disc(rng, anchor, 0.0, cluster_radius));
    }
    return g;
}

inline ClusterSet draw_clusters(const DropGeometry& geometry, int ue_index, const ClusterConfig& cfg,
                                ScattererPool& pool, Rng& rng) {
    cfg.validate();
    require(ue_index >= 0 && ue_index < static_cast<int>(geometry.ue_positions.size()),
            "draw_clusters: UE index out of range");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Point2 ue = geometry.ue_positions[static_cast<std::size_t>(ue_index)];
    const double ue_orientation = 2.0 * std::numbers::pi * u(rng);
    const double deg = std::numbers::pi / 180.0;
    // Laplacian with standard deviation s has scale s / sqrt(2).
    const double bs_scale = cfg.angle_spread_deg * deg / std::numbers::sqrt2;
    const double ue_scale = cfg.ue_angle_spread_deg * deg / std::numbers::sqrt2;

    ClusterSet cs;
    cs.los_flag = u(rng) < cfg.los_probability;
    cs.k_factor = cs.los_flag ? cfg.k_factor : 0.0;
    const double scattered_share = cs.los_flag ? 1.0 / (1.0 + cs.k_factor) : 1.0;

    std::vector<double> cluster_power(static_cast<std::size_t>(cfg.n_clusters));
    double power_sum = 0.0;
    for (auto& p : cluster_power) {
        p = -std::log(1.0 - u(rng)); // exponential cluster powers
        power_sum += p;
    }

    cs.paths.reserve(static_cast<std::size_t>(cfg.n_clusters * cfg.paths_per_cluster + 1));
    for (int c = 0; c < cfg.n_clusters; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        Point2 scatterer;
        const bool share = u(rng) < cfg.shared_cluster_probability;
        if (share && ci < pool.scatterers.size()) {
            scatterer = pool.scatterers[ci];
        } else {
            scatterer = detail::uniform_in_disc(rng, ue, 0.0, cfg.scatter_radius);
            if (ci >= pool.scatterers.size())
                pool.scatterers.push_back(scatterer);
        }
        const double aod0 = detail::angle_from(geometry.bs_position, scatterer, 0.0);
        const double aoa0 = detail::angle_from(ue, scatterer, ue_orientation);
        const double per_path = scattered_share * cluster_power[ci] / power_sum / cfg.paths_per_cluster;
        for (int p = 0; p < cfg.paths_per_cluster; ++p) {
            Path path;
            path.aod = aod0 + detail::laplacian(rng, bs_scale);
            path.aoa = aoa0 + detail::laplacian(rng, ue_scale);
            path.mean_power = per_path;
            cs.paths.push_back(path);
        }
    }
    if (cs.los_flag) {
        Path los;
        los.aod = detail::angle_from(geometry.bs_position, ue, 0.0);
        los.aoa = detail::angle_from(ue, geometry.bs_position, ue_orientation);
        los.mean_power = cs.k_factor / (1.0 + cs.k_factor);
        cs.paths.push_back(los);
    }
    return cs;
}

inline ChannelStats covariance_from_clusters(const ClusterSet& cs, const ArrayGeometry& bs,
                                             const ArrayGeometry& ue) {
    bs.validate();
    ue.validate();
    require(!cs.paths.empty(), "covariance_from_clusters: cluster set has no paths");
    const Index dim = static_cast<Index>(bs.n_elements) * ue.n_elements;
    ChannelStats st;
    st.bs = bs;
    st.ue = ue;
    st.cluster_set = cs;
    st.path_factor.resize(dim, static_cast<Index>(cs.paths.size()));
    for (std::size_t p = 0; p < cs.paths.size(); ++p) {
        const auto& path = cs.paths[p];
        require(path.mean_power >= 0.0, "covariance_from_clusters: negative path power");
        const CVec a_bs = steering_vector(bs, path.aod).conjugate();
        const CVec a_ue = steering_vector(ue, path.aoa);
        const double amp = std::sqrt(path.mean_power);
        for (Index i = 0; i < a_bs.size(); ++i)
            st.path_factor.col(static_cast<Index>(p)).segment(i * a_ue.size(), a_ue.size()) = amp * a_bs(i) * a_ue;
    }
    st.sigma = st.path_factor * st.path_factor.adjoint();
    return st;
}

/// Draws H with vec(H) ~ CN(0, Sigma), using sqrt_sigma = Sigma^{1/2} when the
/// caller already has it.
inline ChannelRealization realize_channel(const ChannelStats& stats, Rng& rng,
                                          const std::optional<CMat>& sqrt_sigma = std::nullopt) {
    const Index dim = stats.sigma.rows();
    const CVec z = randn_complex(rng, dim, 1);
    const CVec v = sqrt_sigma ? CVec(*sqrt_sigma * z) : CVec(psd_sqrt(stats.sigma) * z);
    return {unvec(v, stats.ue.n_elements, stats.bs.n_elements)};
}

} // namespace gob

#endif // GOBSEL_CHANNEL_HPP
