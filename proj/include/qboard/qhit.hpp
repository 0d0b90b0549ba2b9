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

#include <vector>

#include "qboard/bigint.hpp"
#include "qboard/board.hpp"
#include "qboard/qcount.hpp"

namespace qboard {

/// q-hit numbers H_0..H_n of a board at a fixed prime power q.
struct QHitVector {
    long q = 0;
    std::vector<BigInt> values;  // index k = H_k; zero above m
    enum class Provenance { DirectFormula, GenFun } provenance =
        Provenance::GenFun;
};

/// H_k(B,q) by the direct transform from the q-rook numbers M_i(B,q).
/// All intermediates are exact rationals; integrality of the result is
/// asserted.  `M` must hold M_0..M_{min(m,n)} of the (transposed-to-m<=n)
/// board; boards with m > n are transposed internally.
BigInt q_hit_direct(const Board& b, long q, int k, const std::vector<BigInt>& M);

/// All H_k at once, by expanding the generating function in t.
QHitVector q_hit_genfun(const Board& b, long q, const std::vector<BigInt>& M);

/// Convenience overloads computing M via the orbit method.
BigInt q_hit_direct(const Board& b, const FieldContext& f, int k,
                    const EnumOptions& opts = {});
QHitVector q_hit_genfun(const Board& b, const FieldContext& f,
                        const EnumOptions& opts = {});

/// Recomputes every M_k from the H_i by the inverse transform and compares
/// with the supplied q-rook numbers.
WitnessReport inverse_transform_check(const Board& b, long q,
                                      const std::vector<BigInt>& M,
                                      const QHitVector& H);

/// Sum identity: sum_k H_k(B,q) = q^binom(m,2) [n]!_q / [n-m]!_q.
WitnessReport hit_sum_check(const Board& b, long q, const QHitVector& H);

/// Reciprocity on square boards: H_d(complement B, q) =
/// q^{n(n-d)-#B} H_{n-d}(B,q) for every d.
WitnessReport reciprocity_check(const Board& b, const FieldContext& f,
                                const EnumOptions& opts = {});
WitnessReport reciprocity_check_values(const Board& b, long q,
                                       const QHitVector& hB,
                                       const QHitVector& hComp);

}  // namespace qboard
