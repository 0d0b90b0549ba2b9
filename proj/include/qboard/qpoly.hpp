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

#include <string>
#include <vector>

#include "qboard/bigint.hpp"

namespace qboard {

enum class Basis { Q, X };  // x = q - 1

/// Dense polynomial with arbitrary-precision integer coefficients, tracked in
/// either the q basis or the x = q-1 basis.
class BigPoly {
public:
    BigPoly() : coeffs_{0} {}
    explicit BigPoly(std::vector<BigInt> coeffs, Basis basis = Basis::Q)
        : coeffs_(std::move(coeffs)), basis_(basis) {
        if (coeffs_.empty()) coeffs_.push_back(0);
        trim();
    }
    static BigPoly constant(BigInt c, Basis basis = Basis::Q) {
        return BigPoly({std::move(c)}, basis);
    }
    static BigPoly variable(Basis basis = Basis::Q) { return BigPoly({0, 1}, basis); }

    Basis basis() const { return basis_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int i) const {
        static const BigInt zero = 0;
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& at) const;          // at a point in this basis
    BigInt evalAtQ(const BigInt& qValue) const;   // basis-aware: x -> q-1

    BigPoly toBasis(Basis target) const;

    BigPoly operator+(const BigPoly& o) const;
    BigPoly operator-(const BigPoly& o) const;
    BigPoly operator*(const BigPoly& o) const;
    BigPoly& operator+=(const BigPoly& o) { return *this = *this + o; }
    BigPoly& operator*=(const BigPoly& o) { return *this = *this * o; }

    /// Exact division; throws std::domain_error on a nonzero remainder.
    BigPoly divideExact(const BigPoly& divisor) const;

    friend bool operator==(const BigPoly&, const BigPoly&) = default;

    std::string toJson() const;
    static BigPoly fromJson(const std::string& text);

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void requireSameBasis(const BigPoly& o) const;

    std::vector<BigInt> coeffs_;  // index = degree
    Basis basis_ = Basis::Q;
};

BigPoly q_int(int n);                 // [n]_q = 1 + q + ... + q^{n-1}
BigPoly q_factorial(int n);           // [n]!_q
BigPoly q_binomial(int n, int m);     // zero when m > n
BigPoly pochhammer_int(long a, int n);  // (a;q)_n for integer a

/// (t;q)_k as a polynomial in t whose coefficients are q-polynomials;
/// index = t-degree.
std::vector<BigPoly> t_pochhammer(int k);

// evaluations at an integer point q
BigInt q_int_at(int n, const BigInt& q);
BigInt q_factorial_at(int n, const BigInt& q);
BigInt q_binomial_at(int n, int m, const BigInt& q);

struct LinearResiduePair {
    BigInt c0;  // constant term mod (q-1)^2
    BigInt c1;  // coefficient of (q-1)
};

/// The five linear congruence pairs for q^n, [n]_q, [n]!_q, qbinom(n,i), and
/// (a;q)_n; every entry is checked against truncation of the exact polynomial.
struct LinearResidueTable {
    int n = 0;
    long a = 0;
    LinearResiduePair qPower;
    LinearResiduePair qInt;
    LinearResiduePair qFactorial;
    std::vector<LinearResiduePair> qBinomial;  // index i = 0..n
    LinearResiduePair pochhammer;
};

LinearResidueTable linear_residue_table(int n, long a);

}  // namespace qboard
