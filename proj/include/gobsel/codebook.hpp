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

#ifndef GOBSEL_CODEBOOK_HPP
#define GOBSEL_CODEBOOK_HPP

#include "gobsel/linalg.hpp"

#include <numbers>
#include <set>

namespace gob {

enum class Side { bs, ue };

/// Ordered set of unit-norm beamforming vectors, one per column.
struct Codebook {
    CMat beams;
    Side side = Side::bs;

    int size() const { return static_cast<int>(beams.cols()); }
    int n_antennas() const { return static_cast<int>(beams.rows()); }
};

/// Beam m has entries exp(j*2*pi*p*m/b) / sqrt(n); orthonormal when b == n.
inline Codebook dft_codebook(int n, int b, Side side = Side::bs) {
    require(n >= 1 && b >= 1, "dft_codebook: n and b must be >= 1");
    Codebook cb;
    cb.side = side;
    cb.beams.resize(n, b);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < b; ++m)
        for (int p = 0; p < n; ++p)
            cb.beams(p, m) = std::polar(scale, 2.0 * std::numbers::pi * p * m / b);
    return cb;
}

inline void validate_indices(const Codebook& cb, std::span<const int> idx, const char* who) {
    std::set<int> seen;
    for (int i : idx) {
        if (i < 0 || i >= cb.size())
            throw InvalidArgument(std::string(who) + ": beam index " + std::to_string(i) + " out of range");
        if (!seen.insert(i).second)
            throw InvalidArgument(std::string(who) + ": duplicate beam index " + std::to_string(i));
    }
}

/// Columns are the selected beams, in the given order.
inline CMat assemble_precoder(const Codebook& cb, std::span<const int> idx) {
    validate_indices(cb, idx, "assemble_precoder");
    CMat v(cb.n_antennas(), static_cast<Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        v.col(static_cast<Index>(i)) = cb.beams.col(idx[i]);
    return v;
}

/// Block-diagonal stack of per-UE combiners, (K*N_UE) x (sum of list sizes).
inline CMat assemble_block_combiner(const Codebook& cb, const std::vector<BeamList>& per_ue_idx) {
    Index cols = 0;
    for (const auto& l : per_ue_idx) {
        validate_indices(cb, l, "assemble_block_combiner");
        cols += static_cast<Index>(l.size());
    }
    const Index n = cb.n_antennas();
    CMat w = CMat::Zero(n * static_cast<Index>(per_ue_idx.size()), cols);
    Index c = 0;
    for (std::size_t k = 0; k < per_ue_idx.size(); ++k) {
        const CMat wk = assemble_precoder(cb, per_ue_idx[k]);
        w.block(static_cast<Index>(k) * n, c, n, wk.cols()) = wk;
        c += wk.cols();
    }
    return w;
}

/// (BS beam, UE beam) index pair.
struct BeamPair {
    int v = 0;
    int w = 0;

    friend auto operator<=>(const BeamPair&, const BeamPair&) = default;
};

/// Beam pairs reported by one UE (its PMI), strongest first.
struct PmiSet {
    std::vector<BeamPair> pairs;

    std::set<int> bs_beams() const {
        std::set<int> s;
        for (const auto& p : pairs)
            s.insert(p.v);
        return s;
    }
};

struct BeamAssignment {
    std::vector<BeamList> ue_beams; // per UE, ascending
    BeamList bs_beams;              // ascending; PMI union plus any padding beams
    std::vector<PmiSet> pmi;
    int padded_beams = 0;           // beams added to satisfy (K-1)*M_UE < M_BS
    bool feasible = false;          // (K-1)*M_UE < M_BS after padding
};

} // namespace gob

#endif // GOBSEL_CODEBOOK_HPP
