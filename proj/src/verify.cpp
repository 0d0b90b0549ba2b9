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

#include "qboard/verify.hpp"

#include <omp.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "qboard/fano.hpp"
#include "qboard/qhit.hpp"
#include "qboard/qpoly.hpp"

namespace qboard {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

struct FailLog {
    std::vector<std::string> messages;
    int total = 0;
    void fail(const std::string& msg) {
        ++total;
        if (messages.size() < 8) messages.push_back(msg);
    }
    void merge(const FailLog& o) {
        total += o.total;
        for (const auto& m : o.messages)
            if (messages.size() < 8) messages.push_back(m);
    }
    std::string summary() const {
        std::ostringstream os;
        os << total << " failure(s)";
        for (const auto& m : messages) os << "; " << m;
        return os.str();
    }
};

CheckResult finish(const std::string& name, const Timer& t, const FailLog& log,
                   const std::string& okDetail) {
    CheckResult r;
    r.name = name;
    r.seconds = t.elapsed();
    r.pass = log.total == 0;
    r.detail = r.pass ? okDetail : log.summary();
    return r;
}

Board full_board(int m, int n) {
    Board b(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) b.set(r, c);
    return b;
}

Board identity_board(int n) {
    Board b(n, n);
    for (int i = 0; i < n; ++i) b.set(i, i);
    return b;
}

EnumOptions enum_opts(const VerifyOptions& v) {
    EnumOptions e;
    e.threads = v.threads;
    e.budget = v.budget;
    return e;
}

int verify_threads(const VerifyOptions& v) {
    return v.threads > 0 ? v.threads : omp_get_max_threads();
}

// sample sets for the residue sweeps: the default set without q=25, whose
// x = 24 = 2^3*3 adds nothing to the CRT modulus but dominates the cost
std::vector<long> sweep_sample_set() {
    return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23};
}

std::vector<long> prime_powers_up_to(long limit) {
    std::vector<long> out;
    for (long q = 2; q <= limit; ++q)
        if (prime_power_decompose(q)) out.push_back(q);
    return out;
}

// M_d(B',q) for every subboard of `base` from one lattice pass per q
struct LatticeTables {
    std::vector<long> qs;
    std::vector<SupportLattice> lattices;  // aligned with qs

    LatticeTables(const Board& base, const std::vector<long>& samples,
                  const VerifyOptions& opts) {
        for (long q : samples) {
            FieldContext f = FieldContext::make(q);
            qs.push_back(q);
            lattices.emplace_back(base, f, enum_opts(opts));
        }
    }
    const SupportLattice& at(long q) const {
        for (size_t i = 0; i < qs.size(); ++i)
            if (qs[i] == q) return lattices[i];
        throw std::logic_error("no lattice for q");
    }
    BigInt M(uint32_t mask, long q, int d) const {
        const SupportLattice& lat = at(q);
        if (d > lat.maxRank()) return 0;
        BigInt m = lat.m_count(mask, d);
        BigInt div = big_pow(BigInt(q - 1), d);
        if (m % div != 0) throw std::logic_error("m_d not divisible by (q-1)^d");
        return m / div;
    }
    std::vector<BigInt> M_all(uint32_t mask, long q) const {
        const SupportLattice& lat = at(q);
        std::vector<BigInt> out(lat.maxRank() + 1);
        for (int d = 0; d <= lat.maxRank(); ++d) out[d] = M(mask, q, d);
        return out;
    }
};

}  // namespace

CheckResult check_worked_example(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const Board b = full_board(2, 2);
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) log.fail(what);
    };

    RookVector r = rook_numbers(b);
    expect(r == RookVector({1, 4, 2}), "rook vector of the full 2x2 board");
    expect(gen_rook(b, Pattern::Z, 0) == 4, "r_{Z,0} = 4");
    // the 2x2 board has exactly one shoelace-shaped subset (all four cells)
    expect(gen_rook(b, Pattern::Shoelace, 0) == 1, "r_{S,0} = 1");
    expect(gen_rook(b, Pattern::WedgeRow, 1) == 0, "r_{WR,1} = 0");
    expect(gen_rook(b, Pattern::WedgeCol, 1) == 0, "r_{WC,1} = 0");

    auto [rc0, rc1] = rook_residue_formula(b, 2);
    expect(rc0 == 2 && rc1 == 3, "M_2 residue formula (2,3)");

    std::vector<long> samples = {2, 3, 4, 5, 7, 8, 9};
    Sampler mSampler = [&](long q) {
        FieldContext f = FieldContext::make(q);
        return q_rook_all(b, f, enum_opts(opts))[2];
    };
    ResidueFit mfit = fit_residue(mSampler, 2, samples);
    expect(mfit.ok && !mfit.split && mfit.coeffs == std::vector<BigInt>({2, 3}),
           "fitted M_2 residue (2,3)");

    auto [hc0, hc1] = hit_residue_formula(b, 2);
    expect(hc0 == 2 && hc1 == 3, "H_2 residue formula (2,3)");
    Sampler hSampler = [&](long q) {
        FieldContext f = FieldContext::make(q);
        return q_hit_direct(b, q, 2, q_rook_all(b, f, enum_opts(opts)));
    };
    ResidueFit hfit = fit_residue(hSampler, 2, samples);
    expect(hfit.ok && !hfit.split && hfit.coeffs == std::vector<BigInt>({2, 3}),
           "fitted H_2 residue (2,3)");

    expect(gen_hit(b, Pattern::Z, 0) == 4, "h_{Z,0} = 4");
    expect(gen_hit(b, Pattern::Shoelace, 0) == 1, "h_{S,0} = 1");
    return finish("worked example on the full 2x2 board", t, log,
                  "r_2=2, r_Z0=4, r_S0=1, wedge terms 0, M_2=2+3x, H_2=2+3x, C_2=3");
}

CheckResult check_fano_orbit(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const Board f = fano_board();
    std::ostringstream detail;
    for (long q : {2L, 3L, 4L, 5L}) {
        FieldContext field = FieldContext::make(q);
        EnumOptions eo = enum_opts(opts);
        OrbitResult res = m_orbit(f, field, eo);
        BigInt m7 = res.counts.byRank[7];
        BigInt div = big_pow(BigInt(q - 1), 7);
        if (m7 % div != 0) {
            log.fail("m_7 not divisible by (q-1)^7 at q=" + std::to_string(q));
            continue;
        }
        BigInt M7 = m7 / div;
        BigInt expect = fano_m7_closed_form(q);
        if (M7 != expect) {
            std::ostringstream os;
            os << "M_7(F," << q << ") = " << M7 << ", closed form gives " << expect;
            log.fail(os.str());
        } else {
            detail << "q=" << q << ": M_7=" << M7 << "  ";
        }
    }
    return finish("Fano board orbit counts at q in {2,3,4,5}", t, log, detail.str());
}

CheckResult check_fano_residue_fits(const VerifyOptions& opts) {
    (void)opts;
    Timer t;
    FailLog log;
    // the closed form backs the sampler; the orbit check above ties it to the
    // actual matrix counts at q <= 5
    Sampler sampler = [](long q) { return fano_m7_closed_form(q); };

    ResidueFit fit6 = fit_residue(sampler, 6, default_sample_set());
    if (!(fit6.ok && !fit6.split))
        log.fail("k=6 single-class fit should succeed: " + fit6.failReason);

    ResidueFit fit7 = fit_residue(sampler, 7, default_sample_set());
    if (!fit7.ok)
        log.fail("k=7 fit should succeed after a residue-class split");
    else if (!fit7.split)
        log.fail("k=7 single-class fit unexpectedly succeeded");
    else if (fit7.split->modulus != 2)
        log.fail("k=7 split should use modulus 2, got " +
                 std::to_string(fit7.split->modulus));

    // canonical coefficients need a sample set whose CRT modulus dominates
    // them; prime powers up to 4096 include enough powers of two
    ResidueFit fitBig = fit_residue(sampler, 7, prime_powers_up_to(4096));
    if (!fitBig.ok || !fitBig.split || fitBig.split->modulus != 2) {
        log.fail("extended-sample k=7 fit should split mod 2");
    } else {
        const auto& even = fitBig.split->classes.at(0);
        const auto& odd = fitBig.split->classes.at(1);
        for (int i = 0; i < 6; ++i)
            if (even[i] != odd[i])
                log.fail("classes should agree below x^6, differ at x^" +
                         std::to_string(i));
        if (odd[6] - even[6] != 1)
            log.fail("classes should differ by exactly 1 in the x^6 coefficient");
    }
    return finish("Fano residue fits: k=6 single, k=7 split mod 2", t, log,
                  "k=6 single-class ok; k=7 single fails; k=7 splits mod 2 with "
                  "x^6 coefficients differing by 1");
}

CheckResult check_rook_residue_sweep(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const Board grid = full_board(3, 3);
    const std::vector<long> samples = sweep_sample_set();
    LatticeTables tables(grid, samples, opts);

    const int nthreads = verify_threads(opts);
#pragma omp parallel num_threads(nthreads)
    {
        FailLog local;
#pragma omp for schedule(dynamic, 16)
        for (int mask = 0; mask < 512; ++mask) {
            try {
                Board b = tables.lattices[0].subboard(mask);
                for (int d = 0; d <= 3; ++d) {
                    auto [c0, c1] = rook_residue_formula(b, d);
                    Sampler s = [&](long q) { return tables.M(mask, q, d); };
                    ResidueFit fit = fit_residue(s, 2, samples);
                    if (!fit.ok || fit.split || fit.coeffs[0] != c0 ||
                        fit.coeffs[1] != c1) {
                        std::ostringstream os;
                        os << "board mask " << mask << " d=" << d
                           << ": formula (" << c0 << "," << c1 << ") vs fit";
                        local.fail(os.str());
                    }
                }
            } catch (const std::exception& e) {
                local.fail(std::string("exception: ") + e.what());
            }
        }
#pragma omp critical
        log.merge(local);
    }
    return finish("q-rook linear residue vs fit on all 512 boards in [3]x[3]", t,
                  log, "512 boards x 4 ranks agree");
}

CheckResult check_hit_residue_sweep(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const std::vector<long> samples = sweep_sample_set();

    // square branch: all boards in [3]x[3]; C_d >= 0 asserted as well
    {
        LatticeTables tables(full_board(3, 3), samples, opts);
        const int nthreads = verify_threads(opts);
#pragma omp parallel num_threads(nthreads)
        {
            FailLog local;
#pragma omp for schedule(dynamic, 16)
            for (int mask = 0; mask < 512; ++mask) {
                try {
                    Board b = tables.lattices[0].subboard(mask);
                    std::map<long, std::vector<BigInt>> M;
                    for (long q : samples) M[q] = tables.M_all(mask, q);
                    for (int d = 0; d <= 3; ++d) {
                        auto [h_d, C_d] = hit_residue_formula(b, d);
                        if (C_d < 0) {
                            local.fail("negative C_d on a square board, mask " +
                                       std::to_string(mask));
                        }
                        Sampler s = [&](long q) {
                            return q_hit_direct(b, q, d, M[q]);
                        };
                        ResidueFit fit = fit_residue(s, 2, samples);
                        if (!fit.ok || fit.split || fit.coeffs[0] != h_d ||
                            fit.coeffs[1] != C_d) {
                            std::ostringstream os;
                            os << "square board mask " << mask << " d=" << d
                               << ": formula (" << h_d << "," << C_d
                               << ") differs from fit";
                            local.fail(os.str());
                        }
                    }
                } catch (const std::exception& e) {
                    local.fail(std::string("exception: ") + e.what());
                }
            }
#pragma omp critical
            log.merge(local);
        }
    }

    // rectangular branch: all boards in [2]x[4]
    {
        LatticeTables tables(full_board(2, 4), samples, opts);
        const int nthreads = verify_threads(opts);
#pragma omp parallel num_threads(nthreads)
        {
            FailLog local;
#pragma omp for schedule(dynamic, 16)
            for (int mask = 0; mask < 256; ++mask) {
                try {
                    Board b = tables.lattices[0].subboard(mask);
                    std::map<long, std::vector<BigInt>> M;
                    for (long q : samples) M[q] = tables.M_all(mask, q);
                    for (int d = 0; d <= 2; ++d) {
                        auto [h_d, C_d] = hit_residue_formula(b, d);
                        Sampler s = [&](long q) {
                            return q_hit_direct(b, q, d, M[q]);
                        };
                        ResidueFit fit = fit_residue(s, 2, samples);
                        if (!fit.ok || fit.split || fit.coeffs[0] != h_d ||
                            fit.coeffs[1] != C_d) {
                            std::ostringstream os;
                            os << "2x4 board mask " << mask << " d=" << d
                               << ": formula (" << h_d << "," << C_d
                               << ") differs from fit";
                            local.fail(os.str());
                        }
                    }
                } catch (const std::exception& e) {
                    local.fail(std::string("exception: ") + e.what());
                }
            }
#pragma omp critical
            log.merge(local);
        }
    }

    // rectangular branch: 200 seeded random boards in [3]x[5]
    {
        std::mt19937 rng(20260810u);
        std::vector<uint32_t> masks(200);
        for (auto& m : masks) m = rng() & 0x7FFFu;
        const Board grid = full_board(3, 5);
        const std::vector<Cell> gridCells = grid.cells();
        const int nthreads = verify_threads(opts);
#pragma omp parallel num_threads(nthreads)
        {
            FailLog local;
#pragma omp for schedule(dynamic, 1)
            for (int bi = 0; bi < static_cast<int>(masks.size()); ++bi) {
                try {
                    Board b(3, 5);
                    for (size_t i = 0; i < gridCells.size(); ++i)
                        if ((masks[bi] >> i) & 1)
                            b.set(gridCells[i].row, gridCells[i].col);
                    std::map<long, std::vector<BigInt>> M;
                    for (long q : samples) {
                        FieldContext f = FieldContext::make(q);
                        M[q] = q_rook_all(b, f, enum_opts(opts));
                    }
                    for (int d = 0; d <= 3; ++d) {
                        auto [h_d, C_d] = hit_residue_formula(b, d);
                        Sampler s = [&](long q) {
                            return q_hit_direct(b, q, d, M[q]);
                        };
                        ResidueFit fit = fit_residue(s, 2, samples);
                        if (!fit.ok || fit.split || fit.coeffs[0] != h_d ||
                            fit.coeffs[1] != C_d) {
                            std::ostringstream os;
                            os << "3x5 board mask " << masks[bi] << " d=" << d
                               << ": formula (" << h_d << "," << C_d
                               << ") differs from fit";
                            local.fail(os.str());
                        }
                    }
                } catch (const std::exception& e) {
                    local.fail(std::string("exception: ") + e.what());
                }
            }
#pragma omp critical
            log.merge(local);
        }
    }
    return finish(
        "q-hit linear residue vs fit: [3]x[3], [2]x[4], 200 random [3]x[5]", t,
        log, "both branches of the residue formula match the fits; C_d >= 0 on squares");
}

CheckResult check_square_chain(const VerifyOptions&) {
    Timer t;
    FailLog log;
    SquareChainReport rep = square_chain_check();
    if (rep.configs.size() != 16) log.fail("expected 16 configurations");
    int okCount = 0;
    for (const auto& cfg : rep.configs) {
        if (cfg.ok1 && cfg.ok2)
            ++okCount;
        else
            log.fail("configuration mask " + std::to_string(cfg.maskU) +
                     " violates a local inequality");
    }
    return finish("square-chain local inequalities over all 16 configurations", t,
                  log, std::to_string(okCount) + "/16 configurations pass both");
}

CheckResult check_orbit_oracle(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const Board grid = full_board(3, 3);
    const std::vector<Cell> cells = grid.cells();
    const int nthreads = verify_threads(opts);
    int checked = 0;
#pragma omp parallel num_threads(nthreads) reduction(+ : checked)
    {
        FailLog local;
#pragma omp for schedule(dynamic, 8)
        for (int mask = 0; mask < 512; ++mask) {
            try {
                Board b(3, 3);
                for (size_t i = 0; i < cells.size(); ++i)
                    if ((mask >> i) & 1) b.set(cells[i].row, cells[i].col);
                const int nc = b.cellCount();
                for (long q : {2L, 3L, 4L, 5L}) {
                    double sz = std::pow(static_cast<double>(q), nc);
                    if (sz > 1e6) continue;
                    FieldContext f = FieldContext::make(q);
                    EnumOptions eo = enum_opts(opts);
                    RankCounts brute = m_bruteforce(b, f, eo);
                    RankCounts orbit = m_orbit(b, f, eo).counts;
                    if (brute.byRank != orbit.byRank) {
                        std::ostringstream os;
                        os << "orbit != brute at mask " << mask << " q=" << q;
                        local.fail(os.str());
                    }
                    ++checked;
                }
            } catch (const std::exception& e) {
                local.fail(std::string("exception: ") + e.what());
            }
        }
#pragma omp critical
        log.merge(local);
    }
    return finish("orbit method vs brute force on [3]x[3] boards, q in {2,3,4,5}",
                  t, log, std::to_string(checked) + " board/field pairs agree");
}

CheckResult check_structural_sweep(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const std::vector<long> qs = {2, 3, 4, 5, 7, 8, 9};
    std::ostringstream detail;
    long boardsChecked = 0;

    for (int m = 1; m <= 4; ++m) {
        for (int n = m; m + n <= 8; ++n) {
            const Board grid = full_board(m, n);
            const uint32_t total = uint32_t{1} << (m * n);
            for (long q : qs) {
                FieldContext f = FieldContext::make(q);
                SupportLattice lattice(grid, f, enum_opts(opts));
                const BigInt qb(q);
                // H vectors stored for the reciprocity pairing on squares
                std::vector<QHitVector> hitTable;
                const bool square = (m == n);
                if (square) hitTable.resize(total);

                const int nthreads = verify_threads(opts);
#pragma omp parallel num_threads(nthreads)
                {
                    FailLog local;
#pragma omp for schedule(dynamic, 64)
                    for (int64_t mask = 0; mask < static_cast<int64_t>(total);
                         ++mask) {
                        try {
                            Board b = lattice.subboard(static_cast<uint32_t>(mask));
                            std::vector<BigInt> md = lattice.m_counts(
                                static_cast<uint32_t>(mask));
                            // sum over ranks = q^#B
                            BigInt sum = 0;
                            for (const auto& v : md) sum += v;
                            if (sum != big_pow(qb, b.cellCount()))
                                local.fail("rank counts do not sum to q^#B");
                            // exact-support divisibility by the orbit size
                            GraphSummary gs = graph_summary(b);
                            BigInt orbitSize = big_pow(
                                BigInt(q - 1), m + n - gs.components);
                            for (int d = 0; d <= lattice.maxRank(); ++d) {
                                BigInt s = lattice.s_count(
                                    static_cast<uint32_t>(mask), d);
                                if (s % orbitSize != 0)
                                    local.fail("#S_d not divisible by orbit size");
                            }
                            // q-hit identities
                            std::vector<BigInt> M(lattice.maxRank() + 1);
                            for (int d = 0; d <= lattice.maxRank(); ++d) {
                                BigInt div = big_pow(BigInt(q - 1), d);
                                if (md[d] % div != 0) {
                                    local.fail("m_d not divisible by (q-1)^d");
                                    continue;
                                }
                                M[d] = md[d] / div;
                            }
                            QHitVector H = q_hit_genfun(b, q, M);
                            RookVector h = hit_numbers(b);
                            const int mm = std::min(m, n);
                            for (int d = 0; d <= mm; ++d) {
                                BigInt hd = d < static_cast<int>(h.size())
                                                ? h[d]
                                                : BigInt(0);
                                if ((H.values[d] - hd) % (q - 1) != 0)
                                    local.fail("H_d != h_d mod q-1");
                            }
                            if (H.values[mm] != M[mm])
                                local.fail("H_m != M_m");
                            WitnessReport inv =
                                inverse_transform_check(b, q, M, H);
                            if (!inv.ok) local.fail(inv.detail);
                            WitnessReport sumCheck = hit_sum_check(b, q, H);
                            if (!sumCheck.ok) local.fail(sumCheck.detail);
                            if (square) hitTable[mask] = std::move(H);
                        } catch (const std::exception& e) {
                            local.fail(std::string("exception: ") + e.what());
                        }
                    }
#pragma omp critical
                    log.merge(local);
                }
                if (square) {
                    const uint32_t full = total - 1;
                    for (uint32_t mask = 0; mask < total; ++mask) {
                        Board b = lattice.subboard(mask);
                        WitnessReport rec = reciprocity_check_values(
                            b, q, hitTable[mask], hitTable[full ^ mask]);
                        if (!rec.ok)
                            log.fail("mask " + std::to_string(mask) + ": " +
                                     rec.detail);
                    }
                }
                boardsChecked += total;
            }
        }
    }
    detail << boardsChecked << " (board, q) pairs checked";
    return finish("structural identities on the m+n <= 8 sweep", t, log,
                  detail.str());
}

CheckResult check_generalized_relations(const VerifyOptions& opts) {
    Timer t;
    FailLog log;
    const std::vector<std::pair<Pattern, int>> fgdPairs = {
        {Pattern::Z, 2},
        {Pattern::Shoelace, 2},
        {Pattern::WedgeCol, 1},
        {Pattern::WedgeRow, 1}};
    const std::vector<Pattern> patterns = {Pattern::Empty, Pattern::Z,
                                           Pattern::Shoelace, Pattern::WedgeRow,
                                           Pattern::WedgeCol};
    long boardsChecked = 0;
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; m + n <= 8; ++n) {
            const Board grid = full_board(m, n);
            const std::vector<Cell> cells = grid.cells();
            const int64_t total = int64_t{1} << (m * n);
            const int nthreads = verify_threads(opts);
#pragma omp parallel num_threads(nthreads)
            {
                FailLog local;
#pragma omp for schedule(dynamic, 64)
                for (int64_t mask = 0; mask < total; ++mask) {
                    try {
                        Board b(m, n);
                        for (size_t i = 0; i < cells.size(); ++i)
                            if ((mask >> i) & 1)
                                b.set(cells[i].row, cells[i].col);
                        for (Pattern p : patterns) {
                            WitnessReport rep = check_gen_hit_rook(b, p);
                            if (!rep.ok)
                                local.fail("mask " + std::to_string(mask) + " " +
                                           pattern_name(p) + ": " + rep.detail);
                        }
                        for (auto [g, D] : fgdPairs) {
                            FGDResult res = f_GD(b, g, D);
                            if (!res.equal)
                                local.fail("f_GD forms differ, mask " +
                                           std::to_string(mask) + " " +
                                           pattern_name(g));
                        }
                    } catch (const std::exception& e) {
                        local.fail(std::string("exception: ") + e.what());
                    }
                }
#pragma omp critical
                log.merge(local);
            }
            boardsChecked += total;
        }
    }
    return finish("generalized rook-hit relations and both f_GD forms, m+n <= 8",
                  t, log, std::to_string(boardsChecked) + " boards checked");
}

CheckResult check_derangements(const VerifyOptions&) {
    Timer t;
    FailLog log;
    for (int n = 1; n <= 5; ++n) {
        Board comp = identity_board(n).complement();
        for (int d = 0; d <= n; ++d) {
            BigInt closed = derangement_C(n, d);
            if (closed < 0) log.fail("negative closed-form coefficient");
            auto [h, C] = hit_residue_formula(comp, n - d);
            if (closed != C) {
                std::ostringstream os;
                os << "n=" << n << " d=" << d << ": closed form " << closed
                   << " vs residue formula " << C;
                log.fail(os.str());
            }
        }
    }
    return finish("derangement-family closed form vs residue formula, n <= 5", t,
                  log, "all coefficients match and are non-negative");
}

CheckResult check_qanalogue_congruences(const VerifyOptions&) {
    Timer t;
    FailLog log;
    for (int n = 1; n <= 30; ++n) {
        for (long a = 1; a <= 4; ++a) {
            try {
                LinearResidueTable table = linear_residue_table(n, a);
                // spot-check the congruences numerically at a few prime powers
                for (long q : {3L, 4L, 5L, 9L}) {
                    BigInt x = q - 1, mod = x * x;
                    auto congruent = [&](const BigInt& value,
                                          const LinearResiduePair& p) {
                        return (value - (p.c0 + p.c1 * x)) % mod == 0;
                    };
                    if (!congruent(big_pow(BigInt(q), n), table.qPower))
                        log.fail("q^n congruence fails");
                    if (!congruent(q_int_at(n, q), table.qInt))
                        log.fail("[n]_q congruence fails");
                    if (!congruent(q_factorial_at(n, q), table.qFactorial))
                        log.fail("[n]!_q congruence fails");
                    for (int i = 0; i <= n; ++i)
                        if (!congruent(q_binomial_at(n, i, q), table.qBinomial[i]))
                            log.fail("qbinom congruence fails");
                    if (!congruent(pochhammer_int(a, n).eval(q), table.pochhammer))
                        log.fail("(a;q)_n congruence fails");
                }
            } catch (const std::exception& e) {
                log.fail(std::string("n=") + std::to_string(n) + ": " + e.what());
            }
        }
    }
    return finish("q-analogue linear congruences for n <= 30", t, log,
                  "all five congruence families verified");
}

std::vector<std::string> suite_names() {
    return {"rookhit-identities", "orbit-oracle", "residue-theorems",
            "square-chain",       "fano",         "derangements",
            "all"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = name;
    if (name == "rookhit-identities") {
        rep.checks.push_back(check_worked_example(opts));
        rep.checks.push_back(check_generalized_relations(opts));
    } else if (name == "orbit-oracle") {
        rep.checks.push_back(check_orbit_oracle(opts));
        rep.checks.push_back(check_structural_sweep(opts));
    } else if (name == "residue-theorems") {
        rep.checks.push_back(check_rook_residue_sweep(opts));
        rep.checks.push_back(check_hit_residue_sweep(opts));
        rep.checks.push_back(check_qanalogue_congruences(opts));
    } else if (name == "square-chain") {
        rep.checks.push_back(check_square_chain(opts));
    } else if (name == "fano") {
        rep.checks.push_back(check_fano_orbit(opts));
        rep.checks.push_back(check_fano_residue_fits(opts));
    } else if (name == "derangements") {
        rep.checks.push_back(check_derangements(opts));
    } else if (name == "all") {
        rep.checks = run_all_checks(opts);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(check_worked_example(opts));
    out.push_back(check_fano_orbit(opts));
    out.push_back(check_fano_residue_fits(opts));
    out.push_back(check_rook_residue_sweep(opts));
    out.push_back(check_hit_residue_sweep(opts));
    out.push_back(check_square_chain(opts));
    out.push_back(check_orbit_oracle(opts));
    out.push_back(check_structural_sweep(opts));
    out.push_back(check_generalized_relations(opts));
    out.push_back(check_derangements(opts));
    out.push_back(check_qanalogue_congruences(opts));
    return out;
}

}  // namespace qboard
