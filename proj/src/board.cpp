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

#include "qboard/board.hpp"

#include <bit>
#include <sstream>

namespace qboard {

namespace {
constexpr int kMaxDim = 32;
constexpr int kSubboardCellLimit = 30;

int popcount32(uint32_t v) { return std::popcount(v); }
}  // namespace

Board::Board(int m, int n) : m_(m), n_(n), rows_(m, 0) {
    if (m < 0 || n < 0 || m > kMaxDim || n > kMaxDim)
        throw std::invalid_argument("board dimensions out of range (0..32)");
}

Board::Board(int m, int n, const std::vector<Cell>& cells) : Board(m, n) {
    for (const auto& c : cells) {
        if (c.row < 0 || c.row >= m || c.col < 0 || c.col >= n)
            throw std::invalid_argument("cell outside grid");
        set(c.row, c.col);
    }
}

Board Board::parse(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw ParseError("line 1: missing header");
    std::istringstream hs(header);
    long m = -1, n = -1;
    if (!(hs >> m >> n)) throw ParseError("line 1: header must be \"<m> <n>\"");
    std::string trailing;
    if (hs >> trailing) throw ParseError("line 1: trailing content after \"<m> <n>\"");
    if (m < 1 || n < 1 || m > kMaxDim || n > kMaxDim)
        throw ParseError("line 1: dimensions must be in 1..32");
    Board b(static_cast<int>(m), static_cast<int>(n));
    for (int r = 0; r < m; ++r) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError("line " + std::to_string(r + 2) + ": missing row");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long>(line.size()) != n)
            throw ParseError("line " + std::to_string(r + 2) + ": expected " +
                             std::to_string(n) + " characters, got " +
                             std::to_string(line.size()));
        for (int c = 0; c < n; ++c) {
            if (line[c] == '*')
                b.set(r, c);
            else if (line[c] != '.')
                throw ParseError("line " + std::to_string(r + 2) + ", column " +
                                 std::to_string(c + 1) +
                                 ": expected '*' or '.', got '" +
                                 std::string(1, line[c]) + "'");
        }
    }
    std::string rest;
    while (std::getline(in, rest)) {
        if (!rest.empty() && rest != "\r")
            throw ParseError("line " + std::to_string(m + 2) +
                             ": unexpected content after board rows");
    }
    return b;
}

int Board::cellCount() const {
    int c = 0;
    for (uint32_t r : rows_) c += popcount32(r);
    return c;
}

std::vector<Cell> Board::cells() const {
    std::vector<Cell> out;
    out.reserve(cellCount());
    for (int r = 0; r < m_; ++r)
        for (uint32_t bits = rows_[r]; bits;) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            out.push_back({r, c});
        }
    return out;
}

Board Board::complement() const {
    Board out(m_, n_);
    uint32_t full = (n_ == 32) ? ~uint32_t{0} : ((uint32_t{1} << n_) - 1);
    for (int r = 0; r < m_; ++r) out.rows_[r] = full & ~rows_[r];
    return out;
}

Board Board::transposed() const {
    Board out(n_, m_);
    for (int r = 0; r < m_; ++r)
        for (uint32_t bits = rows_[r]; bits;) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            out.set(c, r);
        }
    return out;
}

std::string Board::toText() const {
    std::ostringstream out;
    out << m_ << ' ' << n_ << '\n';
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < n_; ++c) out << (has(r, c) ? '*' : '.');
        out << '\n';
    }
    return out.str();
}

GraphSummary graph_summary(const Board& b) {
    const int m = b.rowCount(), n = b.colCount();
    std::vector<int> parent(m + n);
    for (int i = 0; i < m + n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<bool> activeRow(m, false), activeCol(n, false);
    for (int r = 0; r < m; ++r)
        for (uint32_t bits = b.rowMask(r); bits;) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            activeRow[r] = activeCol[c] = true;
            int a = find(r), bb = find(m + c);
            if (a != bb) parent[a] = bb;
        }
    GraphSummary s;
    for (int r = 0; r < m; ++r) s.activeRows += activeRow[r];
    for (int c = 0; c < n; ++c) s.activeCols += activeCol[c];
    std::vector<bool> seen(m + n, false);
    for (int r = 0; r < m; ++r)
        if (activeRow[r]) {
            int root = find(r);
            if (!seen[root]) {
                seen[root] = true;
                ++s.componentsActive;
            }
        }
    for (int c = 0; c < n; ++c)
        if (activeCol[c]) {
            int root = find(m + c);
            if (!seen[root]) {
                seen[root] = true;
                ++s.componentsActive;
            }
        }
    s.components = s.componentsActive + (m - s.activeRows) + (n - s.activeCols);
    return s;
}

namespace {
bool augment(const Board& b, int r, std::vector<int>& matchCol,
             std::vector<bool>& visited) {
    for (uint32_t bits = b.rowMask(r); bits;) {
        int c = std::countr_zero(bits);
        bits &= bits - 1;
        if (visited[c]) continue;
        visited[c] = true;
        if (matchCol[c] < 0 || augment(b, matchCol[c], matchCol, visited)) {
            matchCol[c] = r;
            return true;
        }
    }
    return false;
}
}  // namespace

int maxhit(const Board& b) {
    std::vector<int> matchCol(b.colCount(), -1);
    int matched = 0;
    for (int r = 0; r < b.rowCount(); ++r) {
        std::vector<bool> visited(b.colCount(), false);
        if (augment(b, r, matchCol, visited)) ++matched;
    }
    return matched;
}

SubboardStream::SubboardStream(const Board& b, std::optional<int> minMaxhit)
    : base_(b), cells_(b.cells()), minMaxhit_(minMaxhit) {
    if (cells_.size() > kSubboardCellLimit)
        throw BudgetError("subboard enumeration refused: board has " +
                          std::to_string(cells_.size()) + " cells (limit " +
                          std::to_string(kSubboardCellLimit) + ")");
    end_ = uint64_t{1} << cells_.size();
}

std::optional<Board> SubboardStream::next() {
    while (!done_) {
        Board sub(base_.rowCount(), base_.colCount());
        for (size_t i = 0; i < cells_.size(); ++i)
            if ((mask_ >> i) & 1) sub.set(cells_[i].row, cells_[i].col);
        if (++mask_ == end_) done_ = true;
        if (!minMaxhit_ || maxhit(sub) >= *minMaxhit_) return sub;
    }
    return std::nullopt;
}

void for_each_subboard(const Board& b, const std::function<void(const Board&)>& fn,
                       std::optional<int> minMaxhit) {
    SubboardStream stream(b, minMaxhit);
    while (auto sub = stream.next()) fn(*sub);
}

}  // namespace qboard
