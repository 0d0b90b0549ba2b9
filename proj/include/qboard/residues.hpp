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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qboard/bigint.hpp"
#include "qboard/board.hpp"
#include "qboard/rookhit.hpp"

namespace qboard {

using Sampler = std::function<BigInt(long q)>;

/// A residue polynomial mod x^k (x = q-1) fitted from prime-power samples:
/// either one coefficient list valid on every sample, or one list per residue
/// class of q modulo `split->modulus`.
struct ResidueFit {
    int k = 0;
    bool ok = false;
    std::vector<BigInt> coeffs;  // single-class fit; empty when split
    struct Split {
        int modulus = 0;
        std::map<int, std::vector<BigInt>> classes;  // q mod modulus -> coeffs
    };
    std::optional<Split> split;
    std::vector<std::pair<long, BigInt>> samples;
    std::string failReason;

    std::string toJson() const;
};

/// Default sample set: ascending prime powers spanning both parities and
/// proper prime powers.
std::vector<long> default_sample_set();

/// Fits c_0..c_{k-1} with f(q) = sum c_i (q-1)^i mod (q-1)^k on the samples.
/// Coefficients are solved one at a time by CRT across all samples of the
/// class (balanced representative), with every sample then verified mod
/// (q-1)^k.  On single-class failure, the sample set is split by q mod M for
/// M = 2,3,...,12 and the smallest M whose nonempty classes all fit wins.
ResidueFit fit_residue(const Sampler& sampler, int k,
                       const std::vector<long>& sampleSet);

/// Linear residue of the q-rook number: M_d(B,q) = c0 + c1 (q-1) mod (q-1)^2
/// with c0 = r_d(B) and c1 = r_{Z,d-2} - r_{S,d-2} + r_{WR,d-1} + r_{WC,d-1}.
/// c1 >= 0 is asserted.
std::pair<BigInt, BigInt> rook_residue_formula(const Board& b, int d);

/// Linear residue of the q-hit number: H_d(B,x+1) = h_d(B) + C_d(B) x mod x^2.
/// Uses the square-board formula when m = n and the rectangular formula
/// otherwise; integrality of C_d is asserted.
std::pair<BigInt, BigInt> hit_residue_formula(const Board& b, int d);

/// Closed form for the linear q-hit coefficient of the complement of the
/// n x n identity-diagonal board: C_{n-d}(complement).
BigInt derangement_C(int n, int d);

/// Finite verification of the two local square-chain inequalities over all
/// 16 configurations of the K_{2,2} block's intersection with the board.
/// Local counts come from direct enumeration of the subsets of a miniature
/// square-chain, not from hand-derived formulas.
struct SquareChainConfig {
    int maskU = 0;  // subset of the 4 square cells lying in B
    long zCount = 0, sCount = 0, wrCount = 0, wcCount = 0;
    long diagOne = 0, diagBoth = 0;
    long ineq1 = 0;  // value of the first local combination (x2 to clear 1/2)
    long ineq2 = 0;  // value of the second local combination (x2)
    bool ok1 = false, ok2 = false;
};

struct SquareChainReport {
    std::vector<SquareChainConfig> configs;  // 16 entries
    bool allOk = false;
};

SquareChainReport square_chain_check();

/// The two global square-chain inequalities plus C_i(B) >= 0, on square
/// boards, with the 1/4 factors cleared by multiplying through by 4.
WitnessReport global_inequality_check(const Board& b, int i);

}  // namespace qboard
