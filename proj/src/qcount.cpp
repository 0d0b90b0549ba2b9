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

#include "qboard/qcount.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstring>
#include <string>

namespace qboard {

namespace {

constexpr int kSupportCellLimit = 30;
constexpr int kLatticeCellLimit = 16;

uint64_t pow_saturating(uint64_t base, int exp) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

int effective_threads(const EnumOptions& opts) {
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
}

// Odometer-driven enumeration of the normalized orbit representatives of one
// support.  Forest entries are 1; the remaining entries run over 1..q-1.
struct SupportScratch {
    std::vector<int> sel;          // selected cell indices
    std::vector<uint8_t> isForest;
    std::vector<int> freeSel;      // indices into sel for free cells
    std::vector<uint16_t> digits;
    std::vector<uint16_t> tmpl;
    std::vector<uint16_t> work;
    std::vector<int> uf;

    void init(int m, int n, size_t cellCount) {
        sel.reserve(cellCount);
        isForest.reserve(cellCount);
        freeSel.reserve(cellCount);
        digits.reserve(cellCount);
        tmpl.resize(static_cast<size_t>(m) * n);
        work.resize(static_cast<size_t>(m) * n);
        uf.resize(m + n);
    }
};

int uf_find(std::vector<int>& uf, int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
}

// gathers the support's cells, marks a scan-order spanning forest,
// returns the forest edge count
int analyze_support(const std::vector<Cell>& cells, uint32_t mask, int m,
                    SupportScratch& s) {
    s.sel.clear();
    s.isForest.clear();
    s.freeSel.clear();
    for (uint32_t bits = mask; bits;) {
        int i = std::countr_zero(bits);
        bits &= bits - 1;
        s.sel.push_back(i);
    }
    for (int v : s.sel) {
        int r = cells[v].row, c = m + cells[v].col;
        s.uf[r] = r;
        s.uf[c] = c;
    }
    int forest = 0;
    for (size_t k = 0; k < s.sel.size(); ++k) {
        const Cell& cell = cells[s.sel[k]];
        int a = uf_find(s.uf, cell.row);
        int b = uf_find(s.uf, m + cell.col);
        if (a != b) {
            s.uf[a] = b;
            s.isForest.push_back(1);
            ++forest;
        } else {
            s.isForest.push_back(0);
            s.freeSel.push_back(static_cast<int>(k));
        }
    }
    return forest;
}

// enumerates all representatives of the analyzed support, tallying
// rankCnt[rank]; returns the number of representatives
uint64_t enumerate_reps(const FieldContext& f, int m, int n,
                        const std::vector<Cell>& cells, SupportScratch& s,
                        uint64_t* rankCnt) {
    const int q = f.q();
    const size_t bytes = static_cast<size_t>(m) * n * sizeof(uint16_t);
    std::memset(s.tmpl.data(), 0, bytes);
    for (size_t k = 0; k < s.sel.size(); ++k) {
        const Cell& cell = cells[s.sel[k]];
        s.tmpl[static_cast<size_t>(cell.row) * n + cell.col] = 1;
    }
    const int nfree = static_cast<int>(s.freeSel.size());
    s.digits.assign(nfree, 1);
    uint64_t reps = 0;
    for (;;) {
        std::memcpy(s.work.data(), s.tmpl.data(), bytes);
        for (int i = 0; i < nfree; ++i) {
            const Cell& cell = cells[s.sel[s.freeSel[i]]];
            s.work[static_cast<size_t>(cell.row) * n + cell.col] = s.digits[i];
        }
        ++rankCnt[rank_dense(s.work.data(), m, n, f)];
        ++reps;
        int i = 0;
        while (i < nfree && s.digits[i] == q - 1) s.digits[i++] = 1;
        if (i == nfree) break;
        ++s.digits[i];
    }
    return reps;
}

struct CensusAccumulator {
    int ranks = 0;   // maxRank + 1
    int forests = 0; // m + n (upper bound on forest edges + 1)
    std::vector<uint64_t> cnt;  // [forest][rank]
    void init(int ranks_, int forests_) {
        ranks = ranks_;
        forests = forests_;
        cnt.assign(static_cast<size_t>(ranks) * forests, 0);
    }
    uint64_t* row(int forest) { return cnt.data() + static_cast<size_t>(forest) * ranks; }
    void merge(const CensusAccumulator& o) {
        for (size_t i = 0; i < cnt.size(); ++i) cnt[i] += o.cnt[i];
    }
};

struct OrbitSweepResult {
    CensusAccumulator acc;
    std::vector<SupportOrbitEntry> detail;
};

// Shared kernel: sweep all supports (submasks of fullMask's bit count) of the
// given cells, abort when the representative budget would be exceeded.
OrbitSweepResult sweep_supports(const Board& b, const FieldContext& f,
                                const EnumOptions& opts, bool parallel) {
    const int m = b.rowCount(), n = b.colCount();
    const std::vector<Cell> cells = b.cells();
    const int k = static_cast<int>(cells.size());
    if (k > kSupportCellLimit)
        throw BudgetError("orbit enumeration refused: " + std::to_string(k) +
                          " cells (limit " + std::to_string(kSupportCellLimit) + ")");
    const int ranks = std::min(m, n) + 1;
    const int forests = m + n;
    const uint64_t total = uint64_t{1} << k;
    const bool detail = opts.supportDetail && k <= kLatticeCellLimit;

    OrbitSweepResult out;
    out.acc.init(ranks, forests);
    std::atomic<uint64_t> repBudget{opts.budget};
    std::atomic<bool> aborted{false};

    const int nthreads = parallel ? effective_threads(opts) : 1;
#pragma omp parallel num_threads(nthreads)
    {
        CensusAccumulator local;
        local.init(ranks, forests);
        std::vector<SupportOrbitEntry> localDetail;
        SupportScratch scratch;
        scratch.init(m, n, k);
#pragma omp for schedule(dynamic, 256)
        for (int64_t mask = 0; mask < static_cast<int64_t>(total); ++mask) {
            if (aborted.load(std::memory_order_relaxed)) continue;
            int forest = analyze_support(cells, static_cast<uint32_t>(mask), m, scratch);
            uint64_t reps =
                pow_saturating(f.q() - 1, static_cast<int>(scratch.freeSel.size()));
            uint64_t prev = repBudget.load(std::memory_order_relaxed);
            bool ok;
            do {
                if (prev < reps) {
                    aborted.store(true, std::memory_order_relaxed);
                    ok = false;
                    break;
                }
                ok = true;
            } while (!repBudget.compare_exchange_weak(prev, prev - reps,
                                                      std::memory_order_relaxed));
            if (!ok) continue;
            uint64_t* rankRow = local.row(forest);
            if (detail) {
                std::vector<uint64_t> perRank(ranks, 0);
                enumerate_reps(f, m, n, cells, scratch, perRank.data());
                SupportOrbitEntry e;
                e.mask = static_cast<uint32_t>(mask);
                e.forestEdges = forest;
                e.orbitsByRank = std::move(perRank);
                for (int d = 0; d < ranks; ++d) rankRow[d] += e.orbitsByRank[d];
                localDetail.push_back(std::move(e));
            } else {
                enumerate_reps(f, m, n, cells, scratch, rankRow);
            }
        }
#pragma omp critical
        {
            out.acc.merge(local);
            for (auto& e : localDetail) out.detail.push_back(std::move(e));
        }
    }
    if (aborted.load())
        throw BudgetError(
            "orbit enumeration budget exceeded (" + std::to_string(opts.budget) +
            " representatives); raise --budget or use a smaller q");
    std::sort(out.detail.begin(), out.detail.end(),
              [](const SupportOrbitEntry& a, const SupportOrbitEntry& b) {
                  return a.mask < b.mask;
              });
    return out;
}

OrbitResult assemble_orbit_result(const Board& b, const FieldContext& f,
                                  OrbitSweepResult&& sweep) {
    const int ranks = sweep.acc.ranks;
    const BigInt qm1 = f.q() - 1;
    OrbitResult res;
    res.counts.q = f.q();
    res.counts.mode = CountMode::SupportContained;
    res.counts.byRank.assign(ranks, 0);
    res.census.orbitsByRank.assign(ranks, 0);
    res.census.repsByForest.assign(sweep.acc.forests,
                                   std::vector<uint64_t>(ranks, 0));
    for (int forest = 0; forest < sweep.acc.forests; ++forest) {
        const uint64_t* row = sweep.acc.row(forest);
        BigInt orbitSize = big_pow(qm1, forest);
        for (int d = 0; d < ranks; ++d) {
            if (!row[d]) continue;
            res.counts.byRank[d] += BigInt(row[d]) * orbitSize;
            res.census.orbitsByRank[d] += row[d];
            res.census.repsByForest[forest][d] = row[d];
        }
    }
    res.census.bySupport = std::move(sweep.detail);
    (void)b;
    return res;
}

}  // namespace

RankCounts m_bruteforce(const Board& b, const FieldContext& f,
                        const EnumOptions& opts) {
    const int m = b.rowCount(), n = b.colCount();
    const std::vector<Cell> cells = b.cells();
    const int k = static_cast<int>(cells.size());
    uint64_t total = pow_saturating(f.q(), k);
    if (total > opts.budget)
        throw BudgetError("q^#B = " + (total == UINT64_MAX
                                           ? std::string("overflow")
                                           : std::to_string(total)) +
                          " exceeds the budget; use the orbit method");
    const int ranks = std::min(m, n) + 1;
    std::vector<uint64_t> cnt(ranks, 0);
    const int q = f.q();
    const int nthreads = effective_threads(opts);
    const int64_t chunks = std::min<int64_t>(static_cast<int64_t>(total),
                                             int64_t{64} * std::max(nthreads, 1));
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<uint64_t> local(ranks, 0);
        std::vector<uint16_t> digits(k, 0), work(static_cast<size_t>(m) * n);
#pragma omp for schedule(dynamic, 1)
        for (int64_t chunk = 0; chunk < chunks; ++chunk) {
            uint64_t lo = total / chunks * chunk + std::min<uint64_t>(chunk, total % chunks);
            uint64_t hi = lo + total / chunks + (static_cast<uint64_t>(chunk) < total % chunks ? 1 : 0);
            uint64_t v = lo;
            for (int i = 0; i < k; ++i) {
                digits[i] = static_cast<uint16_t>(v % q);
                v /= q;
            }
            for (uint64_t idx = lo; idx < hi; ++idx) {
                std::memset(work.data(), 0, work.size() * sizeof(uint16_t));
                for (int i = 0; i < k; ++i)
                    work[static_cast<size_t>(cells[i].row) * n + cells[i].col] = digits[i];
                ++local[rank_dense(work.data(), m, n, f)];
                int i = 0;
                while (i < k && digits[i] == q - 1) digits[i++] = 0;
                if (i < k) ++digits[i];
            }
        }
#pragma omp critical
        for (int d = 0; d < ranks; ++d) cnt[d] += local[d];
    }
    RankCounts out;
    out.q = f.q();
    out.mode = CountMode::SupportContained;
    out.byRank.assign(ranks, 0);
    for (int d = 0; d < ranks; ++d) out.byRank[d] = cnt[d];
    return out;
}

RankCounts m_bruteforce_serial(const Board& b, const FieldContext& f,
                               uint64_t budget) {
    const int m = b.rowCount(), n = b.colCount();
    const std::vector<Cell> cells = b.cells();
    const int k = static_cast<int>(cells.size());
    uint64_t total = pow_saturating(f.q(), k);
    if (total > budget)
        throw BudgetError("q^#B exceeds the budget; use the orbit method");
    const int ranks = std::min(m, n) + 1;
    const int q = f.q();
    std::vector<uint64_t> cnt(ranks, 0);
    std::vector<uint16_t> digits(k, 0), work(static_cast<size_t>(m) * n);
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::memset(work.data(), 0, work.size() * sizeof(uint16_t));
        for (int i = 0; i < k; ++i)
            work[static_cast<size_t>(cells[i].row) * n + cells[i].col] = digits[i];
        ++cnt[rank_dense(work.data(), m, n, f)];
        int i = 0;
        while (i < k && digits[i] == q - 1) digits[i++] = 0;
        if (i < k) ++digits[i];
    }
    RankCounts out;
    out.q = f.q();
    out.mode = CountMode::SupportContained;
    out.byRank.assign(ranks, 0);
    for (int d = 0; d < ranks; ++d) out.byRank[d] = cnt[d];
    return out;
}

OrbitResult m_orbit(const Board& b, const FieldContext& f,
                    const EnumOptions& opts) {
    return assemble_orbit_result(b, f, sweep_supports(b, f, opts, true));
}

OrbitResult m_orbit_serial(const Board& b, const FieldContext& f,
                           const EnumOptions& opts) {
    return assemble_orbit_result(b, f, sweep_supports(b, f, opts, false));
}

RankCounts s_exact(const Board& b, const FieldContext& f, SExactMethod method,
                   const EnumOptions& opts) {
    const int m = b.rowCount(), n = b.colCount();
    const int ranks = std::min(m, n) + 1;
    RankCounts out;
    out.q = f.q();
    out.mode = CountMode::SupportExact;
    out.byRank.assign(ranks, 0);
    if (method == SExactMethod::Direct) {
        const std::vector<Cell> cells = b.cells();
        SupportScratch scratch;
        scratch.init(m, n, cells.size());
        const uint32_t full =
            cells.size() >= 32 ? ~uint32_t{0} : ((uint32_t{1} << cells.size()) - 1);
        if (cells.size() > kSupportCellLimit)
            throw BudgetError("support has too many cells for direct enumeration");
        int forest = analyze_support(cells, full, m, scratch);
        uint64_t reps = pow_saturating(f.q() - 1,
                                       static_cast<int>(scratch.freeSel.size()));
        if (reps > opts.budget)
            throw BudgetError("representative budget exceeded for exact-support count");
        std::vector<uint64_t> cnt(ranks, 0);
        enumerate_reps(f, m, n, cells, scratch, cnt.data());
        BigInt orbitSize = big_pow(BigInt(f.q() - 1), forest);
        for (int d = 0; d < ranks; ++d) out.byRank[d] = BigInt(cnt[d]) * orbitSize;
        return out;
    }
    // Moebius: alternating sum of m_d over subboards with maxhit >= d
    SupportLattice lattice(b, f, opts);
    const int k = lattice.cellCount();
    const uint32_t total = uint32_t{1} << k;
    std::vector<uint8_t> hits(total);
    for (uint32_t mask = 0; mask < total; ++mask)
        hits[mask] = static_cast<uint8_t>(maxhit(lattice.subboard(mask)));
    for (int d = 0; d < ranks; ++d) {
        BigInt sum = 0;
        for (uint32_t mask = 0; mask < total; ++mask) {
            if (hits[mask] < d) continue;
            BigInt term = lattice.m_count(mask, d);
            if ((k - std::popcount(mask)) & 1)
                sum -= term;
            else
                sum += term;
        }
        out.byRank[d] = sum;
    }
    return out;
}

std::vector<BigInt> q_rook_from_counts(const RankCounts& counts) {
    std::vector<BigInt> out(counts.byRank.size());
    const BigInt qm1 = counts.q - 1;
    for (size_t d = 0; d < counts.byRank.size(); ++d) {
        BigInt div = big_pow(qm1, static_cast<unsigned>(d));
        if (counts.byRank[d] % div != 0)
            throw std::logic_error("m_d not divisible by (q-1)^d");
        out[d] = counts.byRank[d] / div;
    }
    return out;
}

std::vector<BigInt> q_rook_all(const Board& b, const FieldContext& f,
                               const EnumOptions& opts) {
    return q_rook_from_counts(m_orbit(b, f, opts).counts);
}

BigInt q_rook(const Board& b, const FieldContext& f, int d,
              const EnumOptions& opts) {
    if (d < 0) return 0;
    auto all = q_rook_all(b, f, opts);
    if (d >= static_cast<int>(all.size())) return 0;
    return all[d];
}

BigInt orbit_count_pattern(Pattern g, int rankD, long q) {
    if (g == Pattern::Z && rankD == 2) return 1;
    if (g == Pattern::Shoelace && rankD == 2) return BigInt(q) - 2;
    if ((g == Pattern::WedgeRow || g == Pattern::WedgeCol) && rankD == 1) return 1;
    throw std::invalid_argument("unsupported (pattern, rank) pair");
}

SupportLattice::SupportLattice(const Board& base, const FieldContext& f,
                               const EnumOptions& opts)
    : base_(base), cells_(base.cells()), q_(f.q()) {
    const int k = static_cast<int>(cells_.size());
    if (k > kLatticeCellLimit)
        throw BudgetError("support lattice limited to 16 cells, got " +
                          std::to_string(k));
    maxRank_ = std::min(base.rowCount(), base.colCount());
    const int ranks = maxRank_ + 1;
    const size_t total = size_t{1} << k;
    reps_.assign(total * ranks, 0);
    forest_.assign(total, 0);

    EnumOptions sweepOpts = opts;
    sweepOpts.supportDetail = false;
    const int m = base.rowCount(), n = base.colCount();
    std::atomic<uint64_t> repBudget{opts.budget};
    std::atomic<bool> aborted{false};
#pragma omp parallel num_threads(effective_threads(opts))
    {
        SupportScratch scratch;
        scratch.init(m, n, k);
#pragma omp for schedule(dynamic, 256)
        for (int64_t mask = 0; mask < static_cast<int64_t>(total); ++mask) {
            if (aborted.load(std::memory_order_relaxed)) continue;
            int forest = analyze_support(cells_, static_cast<uint32_t>(mask), m, scratch);
            forest_[mask] = static_cast<uint8_t>(forest);
            uint64_t reps =
                pow_saturating(f.q() - 1, static_cast<int>(scratch.freeSel.size()));
            uint64_t prev = repBudget.load(std::memory_order_relaxed);
            bool ok;
            do {
                if (prev < reps) {
                    aborted.store(true, std::memory_order_relaxed);
                    ok = false;
                    break;
                }
                ok = true;
            } while (!repBudget.compare_exchange_weak(prev, prev - reps,
                                                      std::memory_order_relaxed));
            if (!ok) continue;
            enumerate_reps(f, m, n, cells_, scratch,
                           reps_.data() + static_cast<size_t>(mask) * ranks);
        }
    }
    if (aborted.load()) throw BudgetError("support lattice budget exceeded");

    // S_d(C) = reps * (q-1)^forest, then the subset-lattice zeta transform
    // turns exact-support counts into contained-support counts m_d
    mTable_.assign(total * ranks, 0);
    std::vector<unsigned __int128> qm1pow(base.rowCount() + base.colCount(), 1);
    for (size_t i = 1; i < qm1pow.size(); ++i)
        qm1pow[i] = qm1pow[i - 1] * static_cast<unsigned>(q_ - 1);
    for (size_t mask = 0; mask < total; ++mask) {
        const uint64_t* r = reps_.data() + mask * ranks;
        unsigned __int128* mrow = mTable_.data() + mask * ranks;
        for (int d = 0; d < ranks; ++d)
            mrow[d] = static_cast<unsigned __int128>(r[d]) * qm1pow[forest_[mask]];
    }
    for (int bit = 0; bit < k; ++bit)
        for (size_t mask = 0; mask < total; ++mask)
            if ((mask >> bit) & 1) {
                const unsigned __int128* src = mTable_.data() + (mask ^ (size_t{1} << bit)) * ranks;
                unsigned __int128* dst = mTable_.data() + mask * ranks;
                for (int d = 0; d < ranks; ++d) dst[d] += src[d];
            }
}

BigInt SupportLattice::s_count(uint32_t mask, int d) const {
    return BigInt(orbits(mask, d)) * big_pow(BigInt(q_ - 1), forest_[mask]);
}

namespace {
BigInt from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<uint64_t>(v >> 64);
    hi <<= 64;
    return hi + static_cast<uint64_t>(v);
}
}  // namespace

BigInt SupportLattice::m_count(uint32_t mask, int d) const {
    return from_u128(mTable_[static_cast<size_t>(mask) * (maxRank_ + 1) + d]);
}

std::vector<BigInt> SupportLattice::m_counts(uint32_t mask) const {
    std::vector<BigInt> out(maxRank_ + 1);
    for (int d = 0; d <= maxRank_; ++d) out[d] = m_count(mask, d);
    return out;
}

Board SupportLattice::subboard(uint32_t mask) const {
    Board out(base_.rowCount(), base_.colCount());
    for (size_t i = 0; i < cells_.size(); ++i)
        if ((mask >> i) & 1) out.set(cells_[i].row, cells_[i].col);
    return out;
}

}  // namespace qboard
