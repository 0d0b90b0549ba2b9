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

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qboard/bigint.hpp"
#include "qboard/board.hpp"

namespace qboard {

/// The five fixed bi-colored graph patterns used by generalized rook and hit
/// numbers.  Z is the 3-edge path, Shoelace is K_{2,2}, WedgeCol is one row
/// joined to two columns, WedgeRow is two rows joined to one column.
enum class Pattern { Empty, Z, Shoelace, WedgeRow, WedgeCol };

int pattern_row_verts(Pattern p);
int pattern_col_verts(Pattern p);
int pattern_cell_count(Pattern p);
std::string pattern_name(Pattern p);
Pattern pattern_from_name(const std::string& name);

struct PatternPlacement {
    uint32_t rowsMask = 0;
    uint32_t colsMask = 0;
    std::array<Cell, 4> cells{};  // first cellCount entries valid
    int cellCount = 0;
};

/// Enumerates every cell subset of the m x n grid shaped like the pattern,
/// each exactly once.
void for_each_placement(int m, int n, Pattern p,
                        const std::function<void(const PatternPlacement&)>& fn);

using RookVector = std::vector<BigInt>;

/// r_i(B) for 0 <= i <= min(m,n).  Requires min(m,n) <= 16.
RookVector rook_numbers(const Board& b);

/// h_i(B) for 0 <= i <= min(m,n), from the rook numbers by the binomial
/// transform of the classical rook-hit relation.
RookVector hit_numbers(const Board& b);

/// r_{F,i}(B): subboards of B shaped like F together with i disjoint rooks.
BigInt gen_rook(const Board& b, Pattern f, int i);

/// h_{F,d}(B): boards sigma containing an F-copy plus a maximal rook
/// placement on the remaining grid, with exactly the F-copy and d rooks
/// landing in B.
BigInt gen_hit(const Board& b, Pattern f, int d);

struct WitnessReport {
    bool ok = true;
    std::string detail;
};

/// Checks the generalized rook-hit generating identity for (B,F) by exact
/// polynomial expansion in t; reports the first differing coefficient.
WitnessReport check_gen_hit_rook(const Board& b, Pattern f);

/// Checks the k-th falling-factorial weighted identity between rook and hit
/// expansions, 0 <= k <= min(m,n).
WitnessReport falling_factorial_identity_check(const Board& b, int k);

using RatPoly = std::vector<BigRat>;  // index = t-degree

/// f_{G,D}(B,t), computed two ways: the direct rook-weighted sum and the
/// defect expansion in generalized hit numbers.  Supported pairs:
/// (Z,2), (Shoelace,2), (WedgeCol,1), (WedgeRow,1).
struct FGDResult {
    RatPoly direct;
    RatPoly expansion;
    int defect = 0;
    bool equal = false;
};

FGDResult f_GD(const Board& b, Pattern g, int rankD);

}  // namespace qboard
