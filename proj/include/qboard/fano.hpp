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

#include "qboard/bigint.hpp"
#include "qboard/board.hpp"

namespace qboard {

/// The 7x7 Fano board (incidence structure of the Fano plane), the minimal
/// board whose q-rook numbers are not polynomial in q.
Board fano_board();

/// Closed form for M_7(F,q): with x = q-1,
/// (x+1)^3 (x^11 + 17x^10 + 135x^9 + 650x^8 + 2043x^7 + 4236x^6 + 5845x^5
///  + 5386x^4 + 3260x^3 + 1236x^2 + 264x + 24 - Z2 x^6),
/// where Z2 is 1 for even q and 0 for odd q.
BigInt fano_m7_closed_form(long q);

}  // namespace qboard
