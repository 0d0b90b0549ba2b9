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

#include "qboard/residues.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "qboard/gf.hpp"

namespace qboard {

std::vector<long> default_sample_set() {
    return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25};
}

namespace {

// extended gcd: g = gcd(a,b) = ax + by
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    BigInt x1, y1;
    BigInt g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt x, y;
    BigInt g = ext_gcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw std::logic_error("modular inverse does not exist");
    x %= m;
    if (x < 0) x += m;
    return x;
}

// The sample congruences  sum_i c_i x^i = f (mod x^k)  form a joint linear
// system over the integers.  Coefficients cannot be solved one at a time: an
// off-by-a-multiple representative for c_i shifts every later congruence by
// a sample-dependent amount.  The solution set is tracked exactly as an
// affine lattice c0 + H Z^k and each sample cuts it down by one congruence.
class AffineLattice {
public:
    explicit AffineLattice(int k) : k_(k), offset_(k, 0) {
        cols_.assign(k, std::vector<BigInt>(k, 0));
        for (int i = 0; i < k; ++i) cols_[i][i] = 1;
    }

    // imposes  a . c = rhs (mod M);  returns false when inconsistent
    bool impose(const std::vector<BigInt>& a, BigInt rhs, const BigInt& M) {
        if (M == 1) return true;
        std::vector<BigInt> w(k_);
        for (int l = 0; l < k_; ++l) {
            BigInt s = 0;
            for (int i = 0; i < k_; ++i) s += a[i] * cols_[l][i];
            s %= M;
            if (s < 0) s += M;
            w[l] = s;
        }
        for (int i = 0; i < k_; ++i) rhs -= a[i] * offset_[i];
        rhs %= M;
        if (rhs < 0) rhs += M;

        // unimodular column ops collapsing w to (g, 0, ..., 0), tracked in U
        std::vector<std::vector<BigInt>> U(k_, std::vector<BigInt>(k_, 0));
        for (int i = 0; i < k_; ++i) U[i][i] = 1;
        for (int j = 1; j < k_; ++j) {
            if (w[j] == 0) continue;
            BigInt alpha, beta;
            BigInt g = ext_gcd(w[0], w[j], alpha, beta);
            if (g < 0) {
                g = -g;
                alpha = -alpha;
                beta = -beta;
            }
            std::vector<BigInt> c0(k_), cj(k_);
            for (int i = 0; i < k_; ++i) {
                c0[i] = alpha * U[0][i] + beta * U[j][i];
                cj[i] = (w[j] / g) * U[0][i] - (w[0] / g) * U[j][i];
            }
            U[0] = std::move(c0);
            U[j] = std::move(cj);
            w[0] = g;
            w[j] = 0;
        }
        const BigInt g = w[0];
        const BigInt d = gcd_big(g, M);
        if (rhs % d != 0) return false;
        BigInt s1 = 0;
        if (g != 0) {
            BigInt Md = M / d;
            s1 = (rhs / d) % Md * mod_inverse((g / d) % Md, Md) % Md;
        }
        // offset += H (U_col0 * s1);  H <- H U diag(M/d, 1, .., 1)
        std::vector<std::vector<BigInt>> newCols(k_, std::vector<BigInt>(k_, 0));
        for (int j = 0; j < k_; ++j)
            for (int i = 0; i < k_; ++i)
                for (int l = 0; l < k_; ++l)
                    newCols[j][i] += cols_[l][i] * U[j][l];
        for (int i = 0; i < k_; ++i) offset_[i] += newCols[0][i] * s1;
        for (int i = 0; i < k_; ++i) newCols[0][i] *= M / d;
        cols_ = std::move(newCols);
        reduce();
        return true;
    }

    // canonical representative: column HNF, each coordinate least
    // non-negative in index order
    const std::vector<BigInt>& coeffs() const { return offset_; }

private:
    void reduce() {
        for (int r = 0; r < k_; ++r) {
            for (int j = r + 1; j < k_; ++j) {
                if (cols_[j][r] == 0) continue;
                BigInt alpha, beta;
                BigInt g = ext_gcd(cols_[r][r], cols_[j][r], alpha, beta);
                if (g < 0) {
                    g = -g;
                    alpha = -alpha;
                    beta = -beta;
                }
                std::vector<BigInt> cr(k_), cj(k_);
                for (int i = 0; i < k_; ++i) {
                    cr[i] = alpha * cols_[r][i] + beta * cols_[j][i];
                    cj[i] = (cols_[j][r] / g) * cols_[r][i] -
                            (cols_[r][r] / g) * cols_[j][i];
                }
                cols_[r] = std::move(cr);
                cols_[j] = std::move(cj);
            }
            if (cols_[r][r] < 0)
                for (int i = 0; i < k_; ++i) cols_[r][i] = -cols_[r][i];
            if (cols_[r][r] == 0)
                throw std::logic_error("solution lattice lost full rank");
            for (int j = 0; j < r; ++j) {
                BigInt q = floor_div(cols_[j][r], cols_[r][r]);
                if (q != 0)
                    for (int i = 0; i < k_; ++i) cols_[j][i] -= q * cols_[r][i];
            }
            BigInt q = floor_div(offset_[r], cols_[r][r]);
            if (q != 0)
                for (int i = 0; i < k_; ++i) offset_[i] -= q * cols_[r][i];
        }
    }

    int k_;
    std::vector<BigInt> offset_;
    std::vector<std::vector<BigInt>> cols_;  // cols_[j][i] = H[i][j]
};

struct ClassFit {
    bool ok = false;
    std::vector<BigInt> coeffs;
    std::string reason;
};

ClassFit fit_class(const std::vector<std::pair<long, BigInt>>& pts, int k) {
    ClassFit out;
    AffineLattice lattice(k);
    for (const auto& [q, value] : pts) {
        const BigInt x = q - 1;
        std::vector<BigInt> a(k);
        BigInt pw = 1;
        for (int i = 0; i < k; ++i) {
            a[i] = pw;
            pw *= x;
        }
        if (!lattice.impose(a, value, pw /* = x^k */)) {
            std::ostringstream os;
            os << "no single polynomial matches the samples (congruence at q="
               << q << " inconsistent with earlier samples)";
            out.reason = os.str();
            return out;
        }
    }
    out.coeffs = lattice.coeffs();
    // verify every sample against the fitted polynomial mod (q-1)^k
    for (const auto& [q, value] : pts) {
        BigInt x = q - 1;
        BigInt acc = 0;
        for (int i = k; i-- > 0;) acc = acc * x + out.coeffs[i];
        BigInt mod = big_pow(x, static_cast<unsigned>(k));
        if ((value - acc) % mod != 0) {
            std::ostringstream os;
            os << "verification failed at q=" << q;
            out.reason = os.str();
            return out;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace

ResidueFit fit_residue(const Sampler& sampler, int k,
                       const std::vector<long>& sampleSet) {
    if (k < 1) throw std::invalid_argument("fit_residue requires k >= 1");
    if (static_cast<int>(sampleSet.size()) < 2 * k)
        throw std::invalid_argument("fit_residue requires at least 2k samples");
    std::set<long> seen;
    for (long q : sampleSet) {
        if (!prime_power_decompose(q))
            throw std::invalid_argument("sample " + std::to_string(q) +
                                        " is not a prime power");
        if (!seen.insert(q).second)
            throw std::invalid_argument("duplicate sample " + std::to_string(q));
    }

    ResidueFit fit;
    fit.k = k;
    fit.samples.reserve(sampleSet.size());
    for (long q : sampleSet) fit.samples.emplace_back(q, sampler(q));

    ClassFit single = fit_class(fit.samples, k);
    if (single.ok) {
        fit.ok = true;
        fit.coeffs = std::move(single.coeffs);
        return fit;
    }

    for (int modulus = 2; modulus <= 12; ++modulus) {
        std::map<int, std::vector<std::pair<long, BigInt>>> classes;
        for (const auto& s : fit.samples)
            classes[static_cast<int>(s.first % modulus)].push_back(s);
        ResidueFit::Split split;
        split.modulus = modulus;
        bool all = true;
        for (const auto& [cls, pts] : classes) {
            ClassFit cf = fit_class(pts, k);
            if (!cf.ok) {
                all = false;
                break;
            }
            split.classes[cls] = std::move(cf.coeffs);
        }
        if (all) {
            fit.ok = true;
            fit.split = std::move(split);
            return fit;
        }
    }
    fit.ok = false;
    fit.failReason = "unfittable: " + single.reason +
                     "; no residue-class split up to modulus 12 fits";
    return fit;
}

std::string ResidueFit::toJson() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    auto coeffArr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) coeffArr.push_back(c.str());
    j["coeffs"] = coeffArr;
    if (split) {
        nlohmann::ordered_json sj;
        sj["modulus"] = split->modulus;
        nlohmann::ordered_json cj = nlohmann::ordered_json::object();
        for (const auto& [cls, cs] : split->classes) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& c : cs) arr.push_back(c.str());
            cj[std::to_string(cls)] = arr;
        }
        sj["classes"] = cj;
        j["split"] = sj;
    } else {
        j["split"] = nullptr;
    }
    auto samp = nlohmann::ordered_json::array();
    for (const auto& [q, v] : samples)
        samp.push_back(nlohmann::ordered_json::array({q, v.str()}));
    j["samples"] = samp;
    if (!ok) j["error"] = failReason;
    return j.dump();
}

std::pair<BigInt, BigInt> rook_residue_formula(const Board& b, int d) {
    RookVector r = rook_numbers(b);
    BigInt c0 = (d >= 0 && d < static_cast<int>(r.size())) ? r[d] : BigInt(0);
    BigInt c1 = gen_rook(b, Pattern::Z, d - 2) - gen_rook(b, Pattern::Shoelace, d - 2) +
                gen_rook(b, Pattern::WedgeRow, d - 1) +
                gen_rook(b, Pattern::WedgeCol, d - 1);
    if (c1 < 0)
        throw std::logic_error("negative linear q-rook coefficient; "
                               "Z-count must dominate the shoelace count");
    return {c0, c1};
}

std::pair<BigInt, BigInt> hit_residue_formula(const Board& bIn, int d) {
    const Board b = bIn.rowCount() <= bIn.colCount() ? bIn : bIn.transposed();
    const int m = b.rowCount(), n = b.colCount();
    RookVector h = hit_numbers(b);
    auto hh = [&](int i) -> BigInt {
        return (i >= 0 && i < static_cast<int>(h.size())) ? h[i] : BigInt(0);
    };
    auto gh = [&](Pattern p, int i) -> BigInt {
        return i >= 0 ? gen_hit(b, p, i) : BigInt(0);
    };
    const BigInt hz2 = gh(Pattern::Z, d - 2), hs2 = gh(Pattern::Shoelace, d - 2);
    const BigInt hz1 = gh(Pattern::Z, d - 1), hs1 = gh(Pattern::Shoelace, d - 1);
    const BigInt hz0 = gh(Pattern::Z, d), hs0 = gh(Pattern::Shoelace, d);
    const BigInt hwr1 = gh(Pattern::WedgeRow, d - 1), hwr0 = gh(Pattern::WedgeRow, d);
    const BigInt hwc1 = gh(Pattern::WedgeCol, d - 1), hwc0 = gh(Pattern::WedgeCol, d);

    BigRat C;
    if (m == n) {
        C = BigRat(hz2 - hs2 + hwr1 + hwc1 - 2 * hz1 + 2 * hs1 - hwr0 - hwc0 + hz0 -
                   hs0);
        C += BigRat(hh(d) * (n - d) * (3 * n + d - 3) +
                        hh(d + 1) * (2 * d + 2) * (n - 1) +
                        hh(d + 2) * (d + 2) * (d + 1),
                    4);
    } else {
        const BigInt hwc2 = gh(Pattern::WedgeCol, d + 1);
        C = BigRat(hz2 - hs2 - 2 * hz1 + 2 * hs1 + hz0 - hs0);
        C += BigRat((n - m + 1) * (hwr1 - hwr0));
        C += BigRat((n - d) * hwc1 + (2 * d - n + 1) * hwc0 - (d + 1) * hwc2, n - m);
        C += BigRat(hh(d) * (m - d) * (m + 2 * n + d - 3) +
                        hh(d + 1) * (2 * d + 2) * (n - 1) +
                        hh(d + 2) * (d + 2) * (d + 1),
                    4);
    }
    if (denominator(C) != 1)
        throw std::logic_error("non-integer linear q-hit coefficient");
    return {hh(d), numerator(C)};
}

BigInt derangement_C(int n, int d) {
    if (d < 0 || d > n) throw std::invalid_argument("derangement_C requires 0 <= d <= n");
    BigRat sum = 0;
    for (int k = 0; k <= n - d; ++k) {
        BigRat weight(big_factorial(n), big_factorial(k) * big_factorial(d));
        BigRat inner = BigRat(big_binomial(n, 2) - big_binomial(d, 2) +
                              BigInt(n) * (d - 1)) +
                       BigRat(big_binomial(n - d - k, 2)) / 2 +
                       BigRat(BigInt(d) * k, 2);
        BigRat term = weight * inner;
        if (k & 1)
            sum -= term;
        else
            sum += term;
    }
    if (denominator(sum) != 1)
        throw std::logic_error("non-integer derangement coefficient");
    BigInt v = numerator(sum);
    if (v < 0) throw std::logic_error("negative derangement coefficient");
    return v;
}

namespace {

// component classification for the miniature square-chain enumeration
enum class Shape { Edge, Z, S, WC, WR, Other };

struct MiniGraph {
    // multiset of component shapes of a cell set within a small grid
    int edges = 0, z = 0, s = 0, wc = 0, wr = 0, other = 0;
    friend bool operator==(const MiniGraph&, const MiniGraph&) = default;
};

MiniGraph classify(const std::vector<Cell>& cells) {
    MiniGraph g;
    if (cells.empty()) return g;
    std::map<int, int> parent;
    auto key = [](bool isRow, int v) { return (isRow ? 0 : 100) + v; };
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& c : cells) {
        int r = key(true, c.row), cc = key(false, c.col);
        if (!parent.count(r)) parent[r] = r;
        if (!parent.count(cc)) parent[cc] = cc;
        int a = find(r), b = find(cc);
        if (a != b) parent[a] = b;
    }
    std::map<int, std::vector<Cell>> comps;
    for (const auto& c : cells) comps[find(key(true, c.row))].push_back(c);
    for (const auto& [root, cs] : comps) {
        std::set<int> rows, cols;
        for (const auto& c : cs) {
            rows.insert(c.row);
            cols.insert(c.col);
        }
        const size_t x = rows.size(), y = cols.size(), e = cs.size();
        if (x == 1 && y == 1 && e == 1)
            ++g.edges;
        else if (x == 2 && y == 2 && e == 3)
            ++g.z;
        else if (x == 2 && y == 2 && e == 4)
            ++g.s;
        else if (x == 1 && y == 2 && e == 2)
            ++g.wc;
        else if (x == 2 && y == 1 && e == 2)
            ++g.wr;
        else
            ++g.other;
    }
    return g;
}

MiniGraph pattern_with_edges(Shape p, int e) {
    MiniGraph g;
    g.edges = e;
    switch (p) {
        case Shape::Edge: ++g.edges; break;
        case Shape::Z: g.z = 1; break;
        case Shape::S: g.s = 1; break;
        case Shape::WC: g.wc = 1; break;
        case Shape::WR: g.wr = 1; break;
        case Shape::Other: g.other = 1; break;
    }
    return g;
}

}  // namespace

SquareChainReport square_chain_check() {
    // miniature square-chain in a 4x4 grid: K_{2,2} block on rows/cols {0,1}
    // plus a chain of two disjoint edges; both chain cells lie in B
    const std::vector<Cell> square = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const std::vector<Cell> chain = {{2, 2}, {3, 3}};
    const std::vector<Cell> tAll = {square[0], square[1], square[2], square[3],
                                    chain[0], chain[1]};
    SquareChainReport report;
    report.allOk = true;
    for (int maskU = 0; maskU < 16; ++maskU) {
        std::set<std::pair<int, int>> inB;
        for (int i = 0; i < 4; ++i)
            if ((maskU >> i) & 1) inB.insert({square[i].row, square[i].col});
        for (const auto& c : chain) inB.insert({c.row, c.col});

        SquareChainConfig cfg;
        cfg.maskU = maskU;
        // enumerate every subset omega of the miniature chain
        for (uint32_t wmask = 0; wmask < (1u << tAll.size()); ++wmask) {
            std::vector<Cell> omega, omegaInB;
            for (size_t i = 0; i < tAll.size(); ++i)
                if ((wmask >> i) & 1) {
                    omega.push_back(tAll[i]);
                    if (inB.count({tAll[i].row, tAll[i].col}))
                        omegaInB.push_back(tAll[i]);
                }
            MiniGraph gOmega = classify(omega);
            MiniGraph gInter = classify(omegaInB);
            const int chainLen = static_cast<int>(chain.size());
            // pattern omegas: pattern in the square block plus the full chain
            for (Shape p : {Shape::Z, Shape::S, Shape::WC, Shape::WR}) {
                if (gOmega == pattern_with_edges(p, chainLen) &&
                    gInter == pattern_with_edges(p, chainLen)) {
                    switch (p) {
                        case Shape::Z: ++cfg.zCount; break;
                        case Shape::S: ++cfg.sCount; break;
                        case Shape::WC: ++cfg.wcCount; break;
                        case Shape::WR: ++cfg.wrCount; break;
                        default: break;
                    }
                }
            }
            // plain-rook omegas: two disjoint square cells plus the chain
            MiniGraph allEdges;
            allEdges.edges = 2 + chainLen;
            if (gOmega == allEdges) {
                int hitCount = static_cast<int>(omegaInB.size());
                if (hitCount == chainLen + 1) ++cfg.diagOne;
                if (hitCount == chainLen + 2) ++cfg.diagBoth;
            }
        }
        cfg.ineq1 = cfg.wrCount + cfg.wcCount - 2 * cfg.zCount + 2 * cfg.sCount +
                    cfg.diagBoth;
        cfg.ineq2 = 2 * cfg.zCount - 2 * cfg.sCount - 2 * cfg.wrCount -
                    2 * cfg.wcCount + cfg.diagOne + cfg.diagBoth;
        cfg.ok1 = cfg.ineq1 >= 0;
        cfg.ok2 = cfg.ineq2 >= 0;
        if (!cfg.ok1 || !cfg.ok2) report.allOk = false;
        report.configs.push_back(cfg);
    }
    return report;
}

WitnessReport global_inequality_check(const Board& b, int i) {
    const int n = b.colCount();
    if (b.rowCount() != n)
        throw std::invalid_argument("global inequality check requires a square board");
    RookVector h = hit_numbers(b);
    auto hh = [&](int j) -> BigInt {
        return (j >= 0 && j < static_cast<int>(h.size())) ? h[j] : BigInt(0);
    };
    auto gh = [&](Pattern p, int j) -> BigInt {
        return j >= 0 ? gen_hit(b, p, j) : BigInt(0);
    };
    // both inequalities multiplied through by 4
    BigInt lhs1 = 4 * gh(Pattern::WedgeRow, i - 1) + 4 * gh(Pattern::WedgeCol, i - 1) -
                  8 * gh(Pattern::Z, i - 1) + 8 * gh(Pattern::Shoelace, i - 1) +
                  BigInt(2 * i + 2) * i * hh(i + 1);
    BigInt lhs2 = 4 * gh(Pattern::Z, i) - 4 * gh(Pattern::Shoelace, i) -
                  4 * gh(Pattern::WedgeRow, i) - 4 * gh(Pattern::WedgeCol, i) +
                  BigInt(2 * i + 2) * (n - i - 1) * hh(i + 1) +
                  BigInt(i + 1) * (i + 2) * hh(i + 2);
    std::ostringstream os;
    if (lhs1 < 0) {
        os << "first square-chain inequality fails at i=" << i << ": " << lhs1;
        return {false, os.str()};
    }
    if (lhs2 < 0) {
        os << "second square-chain inequality fails at i=" << i << ": " << lhs2;
        return {false, os.str()};
    }
    auto [h_i, C_i] = hit_residue_formula(b, i);
    if (C_i < 0) {
        os << "linear q-hit coefficient C_" << i << " is negative: " << C_i;
        return {false, os.str()};
    }
    return {true, ""};
}

}  // namespace qboard
