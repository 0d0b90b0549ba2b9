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

#include "qboard/fano.hpp"

namespace qboard {

Board fano_board() {
    return Board::parse(
        "7 7\n"
        "**...*.\n"
        ".**...*\n"
        "*.**...\n"
        ".*.**..\n"
        "..*.**.\n"
        "...*.**\n"
        "*...*.*\n");
}

BigInt fano_m7_closed_form(long q) {
    const BigInt x = BigInt(q) - 1;
    // Z2 = 1 in even characteristic: confirmed against both the plain
    // brute-force count and the orbit count at q = 2,3,4,5
    const long z2 = (q % 2 == 0) ? 1 : 0;
    const long coeffs[] = {24, 264, 1236, 3260, 5386, 5845, 4236,
                           2043, 650,  135,  17,   1};
    BigInt inner = 0;
    BigInt pw = 1;
    for (int i = 0; i <= 11; ++i) {
        inner += coeffs[i] * pw;
        if (i == 6) inner -= z2 * pw;
        pw *= x;
    }
    return big_pow(x + 1, 3) * inner;
}

}  // namespace qboard
