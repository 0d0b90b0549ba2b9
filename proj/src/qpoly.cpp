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

#include "qboard/qpoly.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace qboard {

void BigPoly::requireSameBasis(const BigPoly& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("polynomial basis mismatch; convert first");
}

BigInt BigPoly::eval(const BigInt& at) const {
    BigInt acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
}

BigInt BigPoly::evalAtQ(const BigInt& qValue) const {
    return basis_ == Basis::Q ? eval(qValue) : eval(qValue - 1);
}

BigPoly BigPoly::toBasis(Basis target) const {
    if (target == basis_) return *this;
    // iterated synthetic division by (q - 1) resp. (x + 1): after pass k,
    // a[k] is the coefficient of (v - s)^k
    const BigInt s = (target == Basis::X) ? 1 : -1;
    std::vector<BigInt> a = coeffs_;
    const int d = static_cast<int>(a.size()) - 1;
    for (int k = 0; k < d; ++k)
        for (int i = d - 1; i >= k; --i) a[i] += s * a[i + 1];
    BigPoly res;
    res.coeffs_ = std::move(a);
    res.basis_ = target;
    res.trim();
    return res;
}

BigPoly BigPoly::operator+(const BigPoly& o) const {
    requireSameBasis(o);
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return BigPoly(std::move(c), basis_);
}

BigPoly BigPoly::operator-(const BigPoly& o) const {
    requireSameBasis(o);
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return BigPoly(std::move(c), basis_);
}

BigPoly BigPoly::operator*(const BigPoly& o) const {
    requireSameBasis(o);
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return BigPoly(std::move(c), basis_);
}

BigPoly BigPoly::divideExact(const BigPoly& divisor) const {
    requireSameBasis(divisor);
    if (divisor.coeffs_.size() == 1 && divisor.coeffs_[0] == 0)
        throw std::domain_error("division by zero polynomial");
    std::vector<BigInt> rem = coeffs_;
    const int dd = divisor.degree();
    const BigInt& lead = divisor.coeffs_.back();
    int dq = degree() - dd;
    if (dq < 0) {
        for (const auto& c : rem)
            if (c != 0) throw std::domain_error("inexact polynomial division");
        return BigPoly({0}, basis_);
    }
    std::vector<BigInt> quot(dq + 1, 0);
    for (int i = dq; i >= 0; --i) {
        BigInt c = rem[i + dd];
        if (c % lead != 0) throw std::domain_error("inexact polynomial division");
        c /= lead;
        quot[i] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[i + j] -= c * divisor.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return BigPoly(std::move(quot), basis_);
}

std::string BigPoly::toJson() const {
    nlohmann::ordered_json j;
    j["basis"] = basis_ == Basis::Q ? "q" : "x";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_) arr.push_back(c.str());
    j["coeffs"] = arr;
    return j.dump();
}

BigPoly BigPoly::fromJson(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Basis b;
    const std::string bs = j.at("basis").get<std::string>();
    if (bs == "q")
        b = Basis::Q;
    else if (bs == "x")
        b = Basis::X;
    else
        throw std::invalid_argument("polynomial basis must be \"q\" or \"x\"");
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return BigPoly(std::move(coeffs), b);
}

BigPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int requires n >= 0");
    std::vector<BigInt> c(std::max(n, 1), 0);
    for (int i = 0; i < n; ++i) c[i] = 1;
    return BigPoly(std::move(c), Basis::Q);
}

BigPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
    BigPoly r = BigPoly::constant(1);
    for (int i = 1; i <= n; ++i) r *= q_int(i);
    return r;
}

BigPoly q_binomial(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("q_binomial requires n, m >= 0");
    if (m > n) return BigPoly::constant(0);
    return q_factorial(n).divideExact(q_factorial(m) * q_factorial(n - m));
}

BigPoly pochhammer_int(long a, int n) {
    // (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i)
    BigPoly r = BigPoly::constant(1);
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> f(i + 1, 0);
        f[0] = 1;
        f[i] -= a;  // i = 0 collapses to the constant 1 - a
        r *= BigPoly(std::move(f), Basis::Q);
    }
    return r;
}

std::vector<BigPoly> t_pochhammer(int k) {
    // (t;q)_k = prod (1 - t q^i); index = t-degree
    std::vector<BigPoly> acc{BigPoly::constant(1)};
    for (int i = 0; i < k; ++i) {
        std::vector<BigPoly> next(acc.size() + 1, BigPoly::constant(0));
        std::vector<BigInt> qi(i + 1, 0);
        qi[i] = 1;
        BigPoly qpow(std::move(qi), Basis::Q);
        for (size_t d = 0; d < acc.size(); ++d) {
            next[d] += acc[d];
            next[d + 1] += BigPoly::constant(0) - acc[d] * qpow;
        }
        acc = std::move(next);
    }
    return acc;
}

BigInt q_int_at(int n, const BigInt& q) {
    BigInt acc = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

BigInt q_factorial_at(int n, const BigInt& q) {
    BigInt r = 1;
    for (int i = 1; i <= n; ++i) r *= q_int_at(i, q);
    return r;
}

BigInt q_binomial_at(int n, int m, const BigInt& q) {
    if (m < 0 || m > n) return 0;
    BigInt num = 1, den = 1;
    m = std::min(m, n - m);
    for (int i = 0; i < m; ++i) {
        num *= q_int_at(n - i, q);
        den *= q_int_at(i + 1, q);
    }
    BigInt r = num / den;
    if (r * den != num) throw std::logic_error("q-binomial division not exact");
    return r;
}

namespace {
// first two coefficients of P in the x = q-1 basis
LinearResiduePair truncate2(const BigPoly& polyQ) {
    BigPoly px = polyQ.toBasis(Basis::X);
    return {px.coeff(0), px.coeff(1)};
}

void checkPair(const LinearResiduePair& claimed, const BigPoly& exact,
               const char* what) {
    auto got = truncate2(exact);
    if (claimed.c0 != got.c0 || claimed.c1 != got.c1)
        throw std::logic_error(std::string("linear residue mismatch for ") + what);
}
}  // namespace

LinearResidueTable linear_residue_table(int n, long a) {
    if (n < 1) throw std::invalid_argument("linear_residue_table requires n >= 1");
    LinearResidueTable t;
    t.n = n;
    t.a = a;

    // q^n = n(q-1) + 1
    t.qPower = {1, n};
    {
        std::vector<BigInt> qc(n + 1, 0);
        qc[n] = 1;
        checkPair(t.qPower, BigPoly(std::move(qc), Basis::Q), "q^n");
    }

    // [n]_q = C(n,2)(q-1) + n
    t.qInt = {n, big_binomial(n, 2)};
    checkPair(t.qInt, q_int(n), "[n]_q");

    // [n]!_q = (n!/2) C(n,2) (q-1) + n!
    {
        BigInt nf = big_factorial(n);
        BigInt lin = nf * big_binomial(n, 2);
        if (lin % 2 != 0) throw std::logic_error("odd q-factorial linear term");
        t.qFactorial = {nf, lin / 2};
        checkPair(t.qFactorial, q_factorial(n), "[n]!_q");
    }

    // qbinom(n,i) = C(n,i) i(n-i)/2 (q-1) + C(n,i)
    t.qBinomial.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt b = big_binomial(n, i);
        BigInt lin = b * i * (n - i);
        if (lin % 2 != 0) throw std::logic_error("odd q-binomial linear term");
        t.qBinomial[i] = {b, lin / 2};
        checkPair(t.qBinomial[i], q_binomial(n, i), "qbinom(n,i)");
    }

    // (a;q)_n = (-C(n,2)(1-a)^{n-1} a)(q-1) + (1-a)^n
    {
        BigInt oneMinusA = BigInt(1) - a;
        t.pochhammer = {big_pow(oneMinusA, n),
                        -big_binomial(n, 2) * big_pow(oneMinusA, n - 1) * a};
        checkPair(t.pochhammer, pochhammer_int(a, n), "(a;q)_n");
    }
    return t;
}

}  // namespace qboard
