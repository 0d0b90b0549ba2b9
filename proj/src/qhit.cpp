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

#include "qboard/qhit.hpp"

#include <sstream>

#include "qboard/qpoly.hpp"

namespace qboard {

namespace {

struct QContext {
    BigInt q;
    std::vector<BigInt> qint;   // [j]_q
    std::vector<BigInt> qfact;  // [j]!_q
    explicit QContext(long qv, int upTo) : q(qv) {
        qint.resize(upTo + 1);
        qfact.resize(upTo + 1);
        BigInt acc = 0, pw = 1, fact = 1;
        qint[0] = 0;
        qfact[0] = 1;
        for (int j = 1; j <= upTo; ++j) {
            acc += pw;
            pw *= q;
            qint[j] = acc;
            fact *= acc;
            qfact[j] = fact;
        }
    }
    // [n-i]!_q / [n-m]!_q, an integer for i <= m
    BigInt factRatio(int n, int m, int i) const {
        BigInt r = qfact[n - i] / qfact[n - m];
        return r;
    }
    BigInt qbinom(int n, int k) const {
        if (k < 0 || k > n) return 0;
        BigInt r = qfact[n] / (qfact[k] * qfact[n - k]);
        return r;
    }
};

BigInt as_integer(const BigRat& v, const char* what) {
    if (denominator(v) != 1)
        throw std::logic_error(std::string(what) + ": non-integer result");
    return numerator(v);
}

Board to_wide(const Board& b) {
    return b.rowCount() <= b.colCount() ? b : b.transposed();
}

}  // namespace

BigInt q_hit_direct(const Board& bIn, long q, int k, const std::vector<BigInt>& M) {
    const Board b = to_wide(bIn);
    const int m = b.rowCount(), n = b.colCount();
    if (k < 0 || k > n) return 0;
    if (k > m) return 0;
    QContext ctx(q, n);
    BigRat sum = 0;
    for (int i = k; i <= m; ++i) {
        BigInt Mi = i < static_cast<int>(M.size()) ? M[i] : BigInt(0);
        if (Mi == 0) continue;
        BigInt term = Mi * ctx.factRatio(n, m, i) * ctx.qbinom(i, k);
        if ((i + k) & 1) term = -term;
        sum += BigRat(term, big_pow(ctx.q, static_cast<unsigned>(i) * k));
    }
    sum *= BigRat(big_pow(ctx.q, static_cast<unsigned>(k * (k + 1) / 2 + m * (m - 1) / 2)));
    return as_integer(sum, "q_hit_direct");
}

QHitVector q_hit_genfun(const Board& bIn, long q, const std::vector<BigInt>& M) {
    const Board b = to_wide(bIn);
    const int m = b.rowCount(), n = b.colCount();
    QContext ctx(q, n);
    // (-1)^i (t;q^{-1})_i expanded incrementally: poly *= (t q^{-(i-1)} - 1)
    std::vector<BigRat> poly{BigRat(1)};
    std::vector<BigRat> coeffs(m + 1, BigRat(0));
    for (int i = 0; i <= m; ++i) {
        if (i > 0) {
            std::vector<BigRat> next(poly.size() + 1, BigRat(0));
            BigRat qinv(1, big_pow(ctx.q, i - 1));
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d + 1] += poly[d] * qinv;
                next[d] -= poly[d];
            }
            poly = std::move(next);
        }
        BigInt Mi = i < static_cast<int>(M.size()) ? M[i] : BigInt(0);
        if (Mi == 0) continue;
        BigRat w(Mi * ctx.factRatio(n, m, i));
        for (size_t d = 0; d < poly.size() && d <= static_cast<size_t>(m); ++d)
            coeffs[d] += w * poly[d];
    }
    const BigRat scale(big_pow(ctx.q, static_cast<unsigned>(m * (m - 1) / 2)));
    QHitVector out;
    out.q = q;
    out.provenance = QHitVector::Provenance::GenFun;
    out.values.assign(n + 1, 0);
    for (int d = 0; d <= m; ++d)
        out.values[d] = as_integer(coeffs[d] * scale, "q_hit_genfun");
    return out;
}

BigInt q_hit_direct(const Board& b, const FieldContext& f, int k,
                    const EnumOptions& opts) {
    return q_hit_direct(b, f.q(), k, q_rook_all(to_wide(b), f, opts));
}

QHitVector q_hit_genfun(const Board& b, const FieldContext& f,
                        const EnumOptions& opts) {
    return q_hit_genfun(b, f.q(), q_rook_all(to_wide(b), f, opts));
}

WitnessReport inverse_transform_check(const Board& bIn, long q,
                                      const std::vector<BigInt>& M,
                                      const QHitVector& H) {
    const Board b = to_wide(bIn);
    const int m = b.rowCount(), n = b.colCount();
    QContext ctx(q, n);
    for (int k = 0; k <= m; ++k) {
        BigRat sum = 0;
        for (int i = k; i <= m; ++i) {
            BigInt Hi = i < static_cast<int>(H.values.size()) ? H.values[i] : BigInt(0);
            sum += BigRat(Hi * ctx.qbinom(i, k));
        }
        // q^{binom(k,2)-binom(m,2)} [n-m]!_q/[n-k]!_q * sum
        sum *= BigRat(big_pow(ctx.q, static_cast<unsigned>(k * (k - 1) / 2)),
                      big_pow(ctx.q, static_cast<unsigned>(m * (m - 1) / 2)));
        sum *= BigRat(ctx.qfact[n - m], ctx.qfact[n - k]);
        BigInt Mk = as_integer(sum, "inverse_transform_check");
        BigInt expect = k < static_cast<int>(M.size()) ? M[k] : BigInt(0);
        if (Mk != expect) {
            std::ostringstream os;
            os << "round trip M -> H -> M differs at k=" << k << ": got " << Mk
               << ", expected " << expect;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

WitnessReport hit_sum_check(const Board& bIn, long q, const QHitVector& H) {
    const Board b = to_wide(bIn);
    const int m = b.rowCount(), n = b.colCount();
    QContext ctx(q, n);
    BigInt total = 0;
    for (const auto& v : H.values) total += v;
    BigInt expect = big_pow(ctx.q, static_cast<unsigned>(m * (m - 1) / 2)) *
                    (ctx.qfact[n] / ctx.qfact[n - m]);
    if (total != expect) {
        std::ostringstream os;
        os << "sum of q-hit numbers is " << total << ", expected " << expect;
        return {false, os.str()};
    }
    return {true, ""};
}

WitnessReport reciprocity_check_values(const Board& b, long q,
                                       const QHitVector& hB,
                                       const QHitVector& hComp) {
    const int n = b.colCount();
    if (b.rowCount() != n)
        throw std::invalid_argument("reciprocity check requires a square board");
    const int cellCount = b.cellCount();
    for (int d = 0; d <= n; ++d) {
        long expo = static_cast<long>(n) * (n - d) - cellCount;
        BigInt lhs = hComp.values[d];
        BigInt rhs = hB.values[n - d];
        // q^{n(n-d)-#B} can have a negative exponent when d is large
        if (expo >= 0)
            rhs *= big_pow(BigInt(q), static_cast<unsigned>(expo));
        else {
            BigInt div = big_pow(BigInt(q), static_cast<unsigned>(-expo));
            if (lhs % div != 0) {
                std::ostringstream os;
                os << "reciprocity fails at d=" << d << " (divisibility)";
                return {false, os.str()};
            }
            lhs /= div;
        }
        if (lhs != rhs) {
            std::ostringstream os;
            os << "reciprocity fails at d=" << d << ": H_d(complement)=" << hComp.values[d]
               << " vs q^{n(n-d)-#B} H_{n-d}(B)=" << rhs;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

WitnessReport reciprocity_check(const Board& b, const FieldContext& f,
                                const EnumOptions& opts) {
    QHitVector hB = q_hit_genfun(b, f, opts);
    QHitVector hComp = q_hit_genfun(b.complement(), f, opts);
    return reciprocity_check_values(b, f.q(), hB, hComp);
}

}  // namespace qboard
