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

#include "qboard/rookhit.hpp"

#include <bit>
#include <sstream>

namespace qboard {

int pattern_row_verts(Pattern p) {
    switch (p) {
        case Pattern::Empty: return 0;
        case Pattern::Z: return 2;
        case Pattern::Shoelace: return 2;
        case Pattern::WedgeRow: return 2;
        case Pattern::WedgeCol: return 1;
    }
    return 0;
}

int pattern_col_verts(Pattern p) {
    switch (p) {
        case Pattern::Empty: return 0;
        case Pattern::Z: return 2;
        case Pattern::Shoelace: return 2;
        case Pattern::WedgeRow: return 1;
        case Pattern::WedgeCol: return 2;
    }
    return 0;
}

int pattern_cell_count(Pattern p) {
    switch (p) {
        case Pattern::Empty: return 0;
        case Pattern::Z: return 3;
        case Pattern::Shoelace: return 4;
        case Pattern::WedgeRow: return 2;
        case Pattern::WedgeCol: return 2;
    }
    return 0;
}

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::Empty: return "Empty";
        case Pattern::Z: return "Z";
        case Pattern::Shoelace: return "Shoelace";
        case Pattern::WedgeRow: return "WedgeRow";
        case Pattern::WedgeCol: return "WedgeCol";
    }
    return "?";
}

Pattern pattern_from_name(const std::string& name) {
    if (name == "Empty" || name == "E") return Pattern::Empty;
    if (name == "Z") return Pattern::Z;
    if (name == "Shoelace" || name == "S") return Pattern::Shoelace;
    if (name == "WedgeRow" || name == "WR") return Pattern::WedgeRow;
    if (name == "WedgeCol" || name == "WC") return Pattern::WedgeCol;
    throw std::invalid_argument("unknown pattern: " + name);
}

void for_each_placement(int m, int n, Pattern p,
                        const std::function<void(const PatternPlacement&)>& fn) {
    PatternPlacement pl;
    auto emit = [&](std::initializer_list<Cell> cells) {
        pl.rowsMask = pl.colsMask = 0;
        pl.cellCount = 0;
        for (const Cell& c : cells) {
            pl.cells[pl.cellCount++] = c;
            pl.rowsMask |= uint32_t{1} << c.row;
            pl.colsMask |= uint32_t{1} << c.col;
        }
        fn(pl);
    };
    switch (p) {
        case Pattern::Empty:
            emit({});
            break;
        case Pattern::Z:
            // {(a,c),(a,d),(b,d)}; the degree pattern pins the labels, so
            // ordered (a,b) x ordered (c,d) hits each Z-shaped subset once
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    if (a == b) continue;
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d) {
                            if (c == d) continue;
                            emit({{a, c}, {a, d}, {b, d}});
                        }
                }
            break;
        case Pattern::Shoelace:
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int d = c + 1; d < n; ++d)
                            emit({{a, c}, {a, d}, {b, c}, {b, d}});
            break;
        case Pattern::WedgeRow:
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = 0; c < n; ++c) emit({{a, c}, {b, c}});
            break;
        case Pattern::WedgeCol:
            for (int a = 0; a < m; ++a)
                for (int c = 0; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) emit({{a, c}, {a, d}});
            break;
    }
}

RookVector rook_numbers(const Board& b) {
    const Board work = b.rowCount() <= b.colCount() ? b : b.transposed();
    const int m = work.rowCount(), n = work.colCount();
    if (m > 16)
        throw BudgetError("rook numbers: min(m,n) = " + std::to_string(m) +
                          " exceeds the DP limit 16");
    // DP over columns; mask = rows already used
    std::vector<BigInt> f(size_t{1} << m, 0);
    f[0] = 1;
    for (int c = 0; c < n; ++c) {
        uint32_t colMask = 0;
        for (int r = 0; r < m; ++r)
            if (work.has(r, c)) colMask |= uint32_t{1} << r;
        if (!colMask) continue;
        for (uint32_t mask = (uint32_t{1} << m); mask-- > 0;) {
            if (f[mask] == 0) continue;
            for (uint32_t avail = colMask & ~mask; avail;) {
                uint32_t bit = avail & (~avail + 1);
                avail ^= bit;
                f[mask | bit] += f[mask];
            }
        }
    }
    RookVector r(m + 1, 0);
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask)
        if (f[mask] != 0) r[std::popcount(mask)] += f[mask];
    return r;
}

RookVector hit_numbers(const Board& b) {
    const Board work = b.rowCount() <= b.colCount() ? b : b.transposed();
    const int m = work.rowCount(), n = work.colCount();
    RookVector r = rook_numbers(work);
    RookVector h(m + 1, 0);
    for (int d = 0; d <= m; ++d) {
        BigInt s = 0;
        for (int i = d; i <= m; ++i) {
            BigInt term = r[i] * (big_factorial(n - i) / big_factorial(n - m)) *
                          big_binomial(i, d);
            if ((i - d) & 1)
                s -= term;
            else
                s += term;
        }
        if (s < 0) throw std::logic_error("negative hit number");
        h[d] = s;
    }
    return h;
}

namespace {
// B restricted to the grid without the given rows/columns, reindexed
Board restrict_board(const Board& b, uint32_t rowsExcl, uint32_t colsExcl) {
    const int m = b.rowCount(), n = b.colCount();
    std::vector<int> rmap(m, -1), cmap(n, -1);
    int mm = 0, nn = 0;
    for (int r = 0; r < m; ++r)
        if (!((rowsExcl >> r) & 1)) rmap[r] = mm++;
    for (int c = 0; c < n; ++c)
        if (!((colsExcl >> c) & 1)) cmap[c] = nn++;
    Board out(mm, nn);
    for (int r = 0; r < m; ++r) {
        if (rmap[r] < 0) continue;
        for (uint32_t bits = b.rowMask(r) & ~colsExcl; bits;) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            out.set(rmap[r], cmap[c]);
        }
    }
    return out;
}

bool placement_inside(const Board& b, const PatternPlacement& pl) {
    for (int i = 0; i < pl.cellCount; ++i)
        if (!b.has(pl.cells[i].row, pl.cells[i].col)) return false;
    return true;
}
}  // namespace

BigInt gen_rook(const Board& b, Pattern f, int i) {
    if (i < 0) return 0;
    const int m = b.rowCount(), n = b.colCount();
    if (m < pattern_row_verts(f) || n < pattern_col_verts(f)) return 0;
    BigInt total = 0;
    for_each_placement(m, n, f, [&](const PatternPlacement& pl) {
        if (!placement_inside(b, pl)) return;
        Board rest = restrict_board(b, pl.rowsMask, pl.colsMask);
        if (rest.rowCount() == 0 || rest.colCount() == 0) {
            if (i == 0) total += 1;
            return;
        }
        RookVector r = rook_numbers(rest);
        if (i < static_cast<int>(r.size())) total += r[i];
    });
    return total;
}

BigInt gen_hit(const Board& b, Pattern f, int d) {
    const int m = b.rowCount(), n = b.colCount();
    if (m < pattern_row_verts(f) || n < pattern_col_verts(f)) return 0;
    BigInt total = 0;
    for_each_placement(m, n, f, [&](const PatternPlacement& pl) {
        if (!placement_inside(b, pl)) return;
        Board rest = restrict_board(b, pl.rowsMask, pl.colsMask);
        if (rest.rowCount() == 0 || rest.colCount() == 0) {
            if (d == 0) total += 1;
            return;
        }
        RookVector h = hit_numbers(rest);
        if (0 <= d && d < static_cast<int>(h.size())) total += h[d];
    });
    return total;
}

namespace {
using IntPoly = std::vector<BigInt>;

IntPoly tminus1_pow(int i) {
    IntPoly p{1};
    for (int k = 0; k < i; ++k) {
        IntPoly next(p.size() + 1, 0);
        for (size_t d = 0; d < p.size(); ++d) {
            next[d + 1] += p[d];
            next[d] -= p[d];
        }
        p = std::move(next);
    }
    return p;
}

void add_scaled(IntPoly& acc, const IntPoly& p, const BigInt& s) {
    if (acc.size() < p.size()) acc.resize(p.size(), 0);
    for (size_t d = 0; d < p.size(); ++d) acc[d] += p[d] * s;
}

std::string poly_diff_report(const IntPoly& lhs, const IntPoly& rhs) {
    size_t len = std::max(lhs.size(), rhs.size());
    for (size_t d = 0; d < len; ++d) {
        BigInt a = d < lhs.size() ? lhs[d] : 0;
        BigInt b = d < rhs.size() ? rhs[d] : 0;
        if (a != b) {
            std::ostringstream os;
            os << "first differing coefficient at t^" << d << ": lhs=" << a
               << " rhs=" << b;
            return os.str();
        }
    }
    return "";
}
}  // namespace

WitnessReport check_gen_hit_rook(const Board& bIn, Pattern f) {
    const Board b = bIn.rowCount() <= bIn.colCount() ? bIn : bIn.transposed();
    const int m = b.rowCount(), n = b.colCount();
    const int x = pattern_row_verts(f), y = pattern_col_verts(f);
    if (m < x || n < y) return {true, "pattern does not fit; identity vacuous"};
    const int M = std::min(m - x, n - y);
    const int N = std::max(m - x, n - y);
    IntPoly lhs{0}, rhs{0};
    for (int i = 0; i <= M; ++i) {
        BigInt rg = gen_rook(b, f, i);
        if (rg != 0)
            add_scaled(lhs, tminus1_pow(i),
                       rg * (big_factorial(N - i) / big_factorial(N - M)));
        BigInt hg = gen_hit(b, f, i);
        if (rhs.size() < static_cast<size_t>(i + 1)) rhs.resize(i + 1, 0);
        rhs[i] += hg;
    }
    std::string diff = poly_diff_report(lhs, rhs);
    if (diff.empty()) return {true, ""};
    return {false, "generalized rook-hit identity fails for pattern " +
                       pattern_name(f) + ": " + diff};
}

WitnessReport falling_factorial_identity_check(const Board& bIn, int k) {
    const Board b = bIn.rowCount() <= bIn.colCount() ? bIn : bIn.transposed();
    const int m = b.rowCount(), n = b.colCount();
    if (k < 0 || k > m)
        throw std::invalid_argument("falling factorial order out of range");
    RookVector r = rook_numbers(b);
    RookVector h = hit_numbers(b);
    IntPoly lhs{0}, rhs{0};
    for (int i = 0; i <= m; ++i) {
        BigInt w = big_falling(i, k);
        if (w == 0) continue;
        add_scaled(lhs, tminus1_pow(i),
                   r[i] * (big_factorial(n - i) / big_factorial(n - m)) * w);
        // (t-1)^k t^{i-k} h_i
        IntPoly term = tminus1_pow(k);
        IntPoly shifted(term.size() + (i - k), 0);
        for (size_t d = 0; d < term.size(); ++d) shifted[d + (i - k)] = term[d];
        add_scaled(rhs, shifted, h[i] * w);
    }
    std::string diff = poly_diff_report(lhs, rhs);
    if (diff.empty()) return {true, ""};
    return {false, "falling-factorial identity fails at k=" + std::to_string(k) +
                       ": " + diff};
}

namespace {
using RatP = RatPoly;

RatP rat_tminus1_pow(int i) {
    IntPoly p = tminus1_pow(i);
    RatP out(p.size());
    for (size_t d = 0; d < p.size(); ++d) out[d] = BigRat(p[d]);
    return out;
}

void rat_add_scaled(RatP& acc, const RatP& p, const BigRat& s) {
    if (acc.size() < p.size()) acc.resize(p.size(), BigRat(0));
    for (size_t d = 0; d < p.size(); ++d) acc[d] += p[d] * s;
}

RatP rat_mul(const RatP& a, const RatP& b) {
    RatP out(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

bool rat_equal(const RatP& a, const RatP& b) {
    size_t len = std::max(a.size(), b.size());
    for (size_t d = 0; d < len; ++d) {
        BigRat x = d < a.size() ? a[d] : BigRat(0);
        BigRat y = d < b.size() ? b[d] : BigRat(0);
        if (x != y) return false;
    }
    return true;
}
}  // namespace

FGDResult f_GD(const Board& bIn, Pattern g, int rankD) {
    const bool supported = (g == Pattern::Z && rankD == 2) ||
                           (g == Pattern::Shoelace && rankD == 2) ||
                           (g == Pattern::WedgeCol && rankD == 1) ||
                           (g == Pattern::WedgeRow && rankD == 1);
    if (!supported)
        throw std::invalid_argument("unsupported (pattern, rank) pair for f_GD");
    const Board b = bIn.rowCount() <= bIn.colCount() ? bIn : bIn.transposed();
    const int m = b.rowCount(), n = b.colCount();
    const int x = pattern_row_verts(g), y = pattern_col_verts(g);
    FGDResult res;
    if (m < x || n < y) {
        res.direct = {BigRat(0)};
        res.expansion = {BigRat(0)};
        res.equal = true;
        return res;
    }
    const int M = std::min(m - x, n - y);
    const int N = std::max(m - x, n - y);
    const int K = n - rankD - N;
    res.defect = K;

    RatP direct{BigRat(0)};
    for (int i = rankD; i <= M + rankD; ++i) {
        BigInt rg = gen_rook(b, g, i - rankD);
        if (rg == 0) continue;
        BigRat w(rg * big_factorial(n - i), big_factorial(n - m));
        rat_add_scaled(direct, rat_tminus1_pow(i), w);
    }
    res.direct = std::move(direct);

    RatP inner(M + 1, BigRat(0));
    for (int i = 0; i <= M; ++i) {
        BigInt s = 0;
        for (int l = 0; l <= K; ++l) {
            BigInt hg = gen_hit(b, g, i + l);
            if (hg == 0) continue;
            BigInt t = 0;
            for (int j = l; j <= l + i; ++j)
                t += big_binomial(K, j) * big_binomial(j, l) *
                     big_falling(-N - 1, K - j) * big_falling(i + l, j);
            s += ((l & 1) ? -hg : hg) * t;
        }
        inner[i] = BigRat(s);
    }
    BigRat pre(big_factorial(N - M), big_factorial(n - m));
    if (K & 1) pre = -pre;
    RatP expansion = rat_mul(rat_tminus1_pow(rankD), inner);
    for (auto& c : expansion) c *= pre;
    res.expansion = std::move(expansion);

    res.equal = rat_equal(res.direct, res.expansion);
    return res;
}

}  // namespace qboard
