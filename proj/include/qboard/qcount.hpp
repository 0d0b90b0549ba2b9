/*
 * Copyright 2026 The qboard Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qboard/bigint.hpp"
#include "qboard/board.hpp"
#include "qboard/gf.hpp"
#include "qboard/rookhit.hpp"

namespace qboard {

enum class CountMode { SupportContained, SupportExact };

struct RankCounts {
    long q = 0;
    CountMode mode = CountMode::SupportContained;
    std::vector<BigInt> byRank;  // index = rank d
};

struct SupportOrbitEntry {
    uint32_t mask = 0;  // over the base board's cells() order
    int forestEdges = 0;
    std::vector<uint64_t> orbitsByRank;
};

struct OrbitCensus {
    std::vector<BigInt> orbitsByRank;  // total orbits per rank, all supports
    // representative counts per (torus-orbit dimension = forest edges, rank)
    std::vector<std::vector<uint64_t>> repsByForest;  // [forest][rank]
    // per-support detail, filled only when requested and #B <= 16
    std::vector<SupportOrbitEntry> bySupport;
};

struct EnumOptions {
    int threads = 0;  // 0 = OpenMP default
    uint64_t budget = 100'000'000;
    bool supportDetail = false;
};

struct OrbitResult {
    RankCounts counts;
    OrbitCensus census;
};

/// m_d(B,q) by enumerating all q^#B assignments.  OpenMP-parallel kernel;
/// refuses when q^#B exceeds the budget.
RankCounts m_bruteforce(const Board& b, const FieldContext& f,
                        const EnumOptions& opts = {});

/// Serial reference implementation kept for testing the parallel kernel.
RankCounts m_bruteforce_serial(const Board& b, const FieldContext& f,
                               uint64_t budget = 100'000'000);

/// m_d(B,q) by torus-orbit canonical forms: for every support C of B the
/// spanning-forest entries are normalized to 1 and the remaining entries
/// range over nonzero elements; each representative is one orbit.
OrbitResult m_orbit(const Board& b, const FieldContext& f,
                    const EnumOptions& opts = {});

/// Serial reference implementation kept for testing the parallel kernel.
OrbitResult m_orbit_serial(const Board& b, const FieldContext& f,
                           const EnumOptions& opts = {});

enum class SExactMethod { Direct, Moebius };

/// #S_d(B,q): matrices with support exactly B, by rank.  Direct enumerates
/// orbit representatives of the full support; Moebius forms the alternating
/// sum of m_d over subboards with maxhit >= d.
RankCounts s_exact(const Board& b, const FieldContext& f, SExactMethod method,
                   const EnumOptions& opts = {});

/// M_d(B,q) = m_d(B,q) / (q-1)^d with exact divisibility asserted.
BigInt q_rook(const Board& b, const FieldContext& f, int d,
              const EnumOptions& opts = {});
std::vector<BigInt> q_rook_all(const Board& b, const FieldContext& f,
                               const EnumOptions& opts = {});
std::vector<BigInt> q_rook_from_counts(const RankCounts& counts);

/// Orbit count O_D(G,q) for the four pattern/rank pairs of the linear
/// residue layer: (Z,2) -> 1, (Shoelace,2) -> q-2, (WedgeRow,1) = (WedgeCol,1) -> 1.
BigInt orbit_count_pattern(Pattern g, int rankD, long q);

/// Rank census for every subboard of `base` at once (requires #B <= 16):
/// per-support orbit representatives plus a subset-lattice zeta transform
/// giving m_d for every subboard.  Backs the exhaustive verification sweeps.
class SupportLattice {
public:
    SupportLattice(const Board& base, const FieldContext& f,
                   const EnumOptions& opts = {});

    const Board& base() const { return base_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int cellCount() const { return static_cast<int>(cells_.size()); }
    int maxRank() const { return maxRank_; }
    long q() const { return q_; }

    int forestEdges(uint32_t mask) const { return forest_[mask]; }
    uint64_t orbits(uint32_t mask, int d) const {
        return reps_[static_cast<size_t>(mask) * (maxRank_ + 1) + d];
    }
    BigInt s_count(uint32_t mask, int d) const;
    BigInt m_count(uint32_t mask, int d) const;
    std::vector<BigInt> m_counts(uint32_t mask) const;

    Board subboard(uint32_t mask) const;

private:
    Board base_;
    std::vector<Cell> cells_;
    long q_ = 0;
    int maxRank_ = 0;
    std::vector<uint64_t> reps_;            // [mask][rank]
    std::vector<uint8_t> forest_;           // [mask]
    std::vector<unsigned __int128> mTable_;  // [mask][rank]
};

}  // namespace qboard
