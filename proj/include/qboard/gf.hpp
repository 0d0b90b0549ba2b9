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
#include <optional>
#include <stdexcept>
#include <vector>

namespace qboard {

/// Decomposes q = p^e with p prime; nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power_decompose(long q);

/// Arithmetic tables for GF(q), q = p^e <= 4096.
///
/// Elements are 0..q-1.  For e > 1 an element encodes a degree-<e polynomial
/// over GF(p) with digits base p (lowest degree = least significant digit);
/// multiplication reduces by reductionPoly, the lexicographically least monic
/// irreducible of degree e (any irreducible gives isomorphic counts).
class FieldContext {
public:
    static FieldContext make(long q);
    // testing hook: explicit reduction polynomial, coefficients ascending,
    // degree e, leading coefficient 1
    static FieldContext makeWithPoly(long q, const std::vector<int>& poly);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& reductionPoly() const { return reductionPoly_; }

    uint16_t add(uint16_t a, uint16_t b) const {
        return e_ == 1 ? static_cast<uint16_t>((a + b) % q_) : addTable_[a * q_ + b];
    }
    uint16_t sub(uint16_t a, uint16_t b) const {
        return e_ == 1 ? static_cast<uint16_t>((a + q_ - b) % q_) : addTable_[a * q_ + negTable_[b]];
    }
    uint16_t neg(uint16_t a) const {
        return e_ == 1 ? static_cast<uint16_t>((q_ - a) % q_) : negTable_[a];
    }
    uint16_t mul(uint16_t a, uint16_t b) const { return mulTable_[a * q_ + b]; }
    uint16_t inv(uint16_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return invTable_[a];
    }

    const uint16_t* mulTable() const { return mulTable_.data(); }

private:
    FieldContext() = default;
    void buildTables();

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> reductionPoly_;
    std::vector<uint16_t> mulTable_;   // q*q
    std::vector<uint16_t> invTable_;   // q
    std::vector<uint16_t> addTable_;   // q*q, extension fields only
    std::vector<uint16_t> negTable_;   // q, extension fields only
};

struct GFMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint16_t> entries;  // row-major
    const FieldContext* field = nullptr;

    GFMatrix(int r, int c, const FieldContext& f)
        : rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0), field(&f) {}
    uint16_t& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    uint16_t at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

/// Row-echelon pivot count over GF(q).  Destroys `data` (row-major).
int rank_dense(uint16_t* data, int rows, int cols, const FieldContext& f);

int rank(const GFMatrix& m);

}  // namespace qboard
