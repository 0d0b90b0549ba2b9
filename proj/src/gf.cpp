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

#include "qboard/gf.hpp"

#include <algorithm>
#include <string>

namespace qboard {

namespace {
constexpr long kMaxQ = 4096;

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomials over GF(p), coefficients ascending
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        if (a[da] == 0) {
            a.pop_back();
            continue;
        }
        // m is monic, so the quotient digit is just a[da]
        int f = a[da];
        for (int i = 0; i <= dm; ++i) {
            int idx = da - dm + i;
            a[idx] = ((a[idx] - f * m[i]) % p + p) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

long poly_encode(const Poly& a, int p) {
    long v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly poly_decode(long v, int p) {
    Poly a;
    while (v) {
        a.push_back(static_cast<int>(v % p));
        v /= p;
    }
    return a;
}

bool is_irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    // trial division by all monic polynomials of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long enc = 0; enc < count; ++enc) {
            Poly g = poly_decode(enc, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            // f mod g == 0 ?
            Poly r = poly_mod(f, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

Poly least_irreducible(int p, int e) {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long enc = 0; enc < count; ++enc) {
        Poly f = poly_decode(enc, p);
        f.resize(e + 1, 0);
        f[e] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}
}  // namespace

std::optional<std::pair<int, int>> prime_power_decompose(long q) {
    if (q < 2) return std::nullopt;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        long v = q;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v != 1) return std::nullopt;
        return std::make_pair(static_cast<int>(p), e);
    }
    return std::make_pair(static_cast<int>(q), 1);  // q itself prime
}

FieldContext FieldContext::make(long q) {
    auto pe = prime_power_decompose(q);
    if (!pe) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (q > kMaxQ) throw std::invalid_argument("field size exceeds table limit 4096");
    FieldContext f;
    f.p_ = pe->first;
    f.e_ = pe->second;
    f.q_ = static_cast<int>(q);
    f.reductionPoly_ = (f.e_ == 1) ? Poly{0, 1} : least_irreducible(f.p_, f.e_);
    f.buildTables();
    return f;
}

FieldContext FieldContext::makeWithPoly(long q, const std::vector<int>& poly) {
    auto pe = prime_power_decompose(q);
    if (!pe) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (q > kMaxQ) throw std::invalid_argument("field size exceeds table limit 4096");
    FieldContext f;
    f.p_ = pe->first;
    f.e_ = pe->second;
    f.q_ = static_cast<int>(q);
    if (static_cast<int>(poly.size()) != f.e_ + 1 || poly.back() != 1)
        throw std::invalid_argument("reduction polynomial must be monic of degree e");
    if (!is_irreducible(poly, f.p_))
        throw std::invalid_argument("reduction polynomial is not irreducible");
    f.reductionPoly_ = poly;
    f.buildTables();
    return f;
}

void FieldContext::buildTables() {
    const int q = q_, p = p_;
    mulTable_.assign(static_cast<size_t>(q) * q, 0);
    invTable_.assign(q, 0);
    if (e_ == 1) {
        for (int a = 0; a < q; ++a)
            for (int b = a; b < q; ++b) {
                auto v = static_cast<uint16_t>((static_cast<long>(a) * b) % p);
                mulTable_[static_cast<size_t>(a) * q + b] = v;
                mulTable_[static_cast<size_t>(b) * q + a] = v;
            }
    } else {
        addTable_.assign(static_cast<size_t>(q) * q, 0);
        negTable_.assign(q, 0);
        for (int a = 0; a < q; ++a) {
            Poly pa = poly_decode(a, p);
            Poly na(pa.size());
            for (size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
            while (!na.empty() && na.back() == 0) na.pop_back();
            negTable_[a] = static_cast<uint16_t>(poly_encode(na, p));
            for (int b = a; b < q; ++b) {
                Poly pb = poly_decode(b, p);
                Poly sum(std::max(pa.size(), pb.size()), 0);
                for (size_t i = 0; i < pa.size(); ++i) sum[i] = pa[i];
                for (size_t i = 0; i < pb.size(); ++i) sum[i] = (sum[i] + pb[i]) % p;
                auto sv = static_cast<uint16_t>(poly_encode(sum, p));
                addTable_[static_cast<size_t>(a) * q + b] = sv;
                addTable_[static_cast<size_t>(b) * q + a] = sv;
                Poly prod = poly_mulmod(pa, pb, reductionPoly_, p);
                auto mv = static_cast<uint16_t>(poly_encode(prod, p));
                mulTable_[static_cast<size_t>(a) * q + b] = mv;
                mulTable_[static_cast<size_t>(b) * q + a] = mv;
            }
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (mulTable_[static_cast<size_t>(a) * q + b] == 1) {
                invTable_[a] = static_cast<uint16_t>(b);
                break;
            }
        if (invTable_[a] == 0) throw std::logic_error("field element without inverse");
    }
}

int rank_dense(uint16_t* data, int rows, int cols, const FieldContext& f) {
    const int q = f.q();
    const uint16_t* mt = f.mulTable();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (data[r * cols + c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = c; j < cols; ++j)
                std::swap(data[piv * cols + j], data[rank * cols + j]);
        const uint16_t pivInv = f.inv(data[rank * cols + c]);
        const uint16_t* prow = data + rank * cols;
        for (int r = rank + 1; r < rows; ++r) {
            uint16_t* row = data + r * cols;
            if (!row[c]) continue;
            const uint16_t factor = mt[static_cast<size_t>(row[c]) * q + pivInv];
            const uint16_t* fmul = mt + static_cast<size_t>(factor) * q;
            row[c] = 0;
            for (int j = c + 1; j < cols; ++j)
                if (prow[j]) row[j] = f.sub(row[j], fmul[prow[j]]);
        }
        ++rank;
    }
    return rank;
}

int rank(const GFMatrix& m) {
    std::vector<uint16_t> work = m.entries;
    return rank_dense(work.data(), m.rows, m.cols, *m.field);
}

}  // namespace qboard
