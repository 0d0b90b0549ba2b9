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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qboard {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cell {
    int row = 0;  // 0-based internally; I/O is 1-based
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A subset of the m x n grid, stored as one column bitmask per row.
class Board {
public:
    Board() = default;
    Board(int m, int n);
    Board(int m, int n, const std::vector<Cell>& cells);

    /// Parses the board file grammar: "<m> <n>\n" then m rows of '*'/'.'.
    static Board parse(const std::string& text);

    int rowCount() const { return m_; }
    int colCount() const { return n_; }
    int cellCount() const;
    bool empty() const { return cellCount() == 0; }

    bool has(int r, int c) const { return (rows_[r] >> c) & 1u; }
    void set(int r, int c) { rows_[r] |= (uint32_t{1} << c); }
    void clear(int r, int c) { rows_[r] &= ~(uint32_t{1} << c); }
    uint32_t rowMask(int r) const { return rows_[r]; }

    std::vector<Cell> cells() const;

    Board complement() const;
    Board transposed() const;

    std::string toText() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<uint32_t> rows_;
};

struct GraphSummary {
    int activeRows = 0;        // rows with at least one cell
    int activeCols = 0;
    int components = 0;        // components of G(B), isolated vertices included
    int componentsActive = 0;  // components restricted to vertices with edges
};

GraphSummary graph_summary(const Board& b);

/// Maximum number of non-attacking rooks placeable on B (maximum matching).
int maxhit(const Board& b);

/// Streams all 2^#B subboards of B, optionally filtered by maxhit >= minHit.
/// Refuses boards with more than 30 cells.
class SubboardStream {
public:
    explicit SubboardStream(const Board& b, std::optional<int> minMaxhit = {});
    std::optional<Board> next();

private:
    Board base_;
    std::vector<Cell> cells_;
    uint64_t mask_ = 0;
    uint64_t end_ = 0;
    bool done_ = false;
    std::optional<int> minMaxhit_;
};

void for_each_subboard(const Board& b, const std::function<void(const Board&)>& fn,
                       std::optional<int> minMaxhit = {});

}  // namespace qboard
