// Copyright 2026 The Cycloshell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cycloshell/quadrat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace cycloshell {

namespace {

void check_disc(int d) {
  if (d != 2 && d != 3) {
    throw std::invalid_argument("QuadRat: discriminant must be 2 or 3, got " +
                                std::to_string(d));
  }
}

void check_same_field(int da, int db) {
  if (da != db) {
    throw std::invalid_argument("QuadRat: mixed discriminants " +
                                std::to_string(da) + " and " +
                                std::to_string(db));
  }
}

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

int bigint_sign(const BigInt& v) { return v.sign(); }

// Sign of a + b*sqrt(d) for integers a, b.
int pair_sign(const BigInt& a, const BigInt& b, int d) {
  int sa = bigint_sign(a);
  int sb = bigint_sign(b);
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite strict signs: compare a^2 with d*b^2.  Equality would force
  // sqrt(d) rational, so it cannot occur here.
  BigInt lhs = a * a;
  BigInt rhs = b * b * d;
  if (sa > 0) return lhs > rhs ? 1 : -1;
  return lhs < rhs ? 1 : -1;
}

BigInt pow10(int e) {
  BigInt v = 1;
  for (int i = 0; i < e; ++i) v *= 10;
  return v;
}

}  // namespace

QuadRat::QuadRat(int disc) : p_(0), q_(0), r_(1), d_(disc) {
  check_disc(disc);
}

QuadRat::QuadRat(BigInt p, BigInt q, BigInt r, int disc)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(disc) {
  check_disc(disc);
  if (r_ == 0) throw std::invalid_argument("QuadRat: zero denominator");
  normalize();
}

void QuadRat::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (p_ == 0 && q_ == 0) {
    r_ = 1;
    return;
  }
  BigInt g = gcd3(boost::multiprecision::abs(p_),
                  boost::multiprecision::abs(q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadRat QuadRat::operator-() const { return QuadRat(-p_, -q_, r_, d_); }

QuadRat& QuadRat::operator+=(const QuadRat& o) {
  check_same_field(d_, o.d_);
  p_ = p_ * o.r_ + o.p_ * r_;
  q_ = q_ * o.r_ + o.q_ * r_;
  r_ *= o.r_;
  normalize();
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o) {
  check_same_field(d_, o.d_);
  p_ = p_ * o.r_ - o.p_ * r_;
  q_ = q_ * o.r_ - o.q_ * r_;
  r_ *= o.r_;
  normalize();
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& o) {
  check_same_field(d_, o.d_);
  BigInt np = p_ * o.p_ + q_ * o.q_ * d_;
  BigInt nq = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(np);
  q_ = std::move(nq);
  r_ *= o.r_;
  normalize();
  return *this;
}

QuadRat QuadRat::inverse() const {
  if (is_zero()) throw std::domain_error("QuadRat: inverse of zero");
  // 1 / ((p + q*sqrt(d))/r) = r*(p - q*sqrt(d)) / (p^2 - d*q^2).
  BigInt norm = p_ * p_ - q_ * q_ * d_;
  return QuadRat(p_ * r_, -q_ * r_, norm, d_);
}

QuadRat& QuadRat::operator/=(const QuadRat& o) {
  check_same_field(d_, o.d_);
  if (o.is_zero()) throw std::domain_error("QuadRat: division by zero");
  return *this *= o.inverse();
}

int QuadRat::sign() const { return pair_sign(p_, q_, d_); }

std::string QuadRat::to_decimal(int digits) const {
  if (digits < 1 || digits > 50) {
    throw std::invalid_argument("QuadRat::to_decimal: digits out of range");
  }
  int s = sign();
  // Scaled target: |value| * 10^digits = |p + q*sqrt(d)| * 10^digits / r.
  // Approximate with guard digits; the decision (floor and round bit) is
  // accepted only when the approximation error cannot flip it.
  for (int guard = 24;; guard *= 2) {
    if (guard > 3000) {
      throw std::runtime_error("QuadRat::to_decimal: guard overflow");
    }
    BigInt scale = pow10(digits + guard);
    BigInt scaled_disc = scale * scale * d_;
    BigInt root = boost::multiprecision::sqrt(scaled_disc);
    // root = floor(sqrt(d)*scale), so 0 <= sqrt(d)*scale - root < 1 and
    // |num - exact| <= |q|.
    BigInt num = p_ * scale + q_ * root;
    if (s < 0) num = -num;
    if (num < 0) num = 0;  // only when value is zero up to the error bound
    BigInt den = r_ * pow10(guard);
    BigInt quo = num / den;
    BigInt rem = num % den;
    BigInt err = boost::multiprecision::abs(q_);
    // Accept when the remainder is at least err away from both the
    // carry boundaries 0/den and the rounding boundary den/2.
    bool safe = q_ == 0 || (rem > err && den - rem > err &&
                            boost::multiprecision::abs(2 * rem - den) > 2 * err);
    if (!safe) continue;
    if (2 * rem >= den) ++quo;  // ties away from zero (exact only if q == 0)
    BigInt ip = quo / pow10(digits);
    BigInt fp = quo % pow10(digits);
    std::string frac = fp.str();
    frac.insert(frac.begin(), digits - static_cast<int>(frac.size()), '0');
    std::string out;
    if (s < 0 && !(ip == 0 && fp == 0)) out += '-';
    out += ip.str();
    out += '.';
    out += frac;
    return out;
  }
}

double QuadRat::to_double() const {
  return std::strtod(to_decimal(19).c_str(), nullptr);
}

std::string QuadRat::str() const {
  std::string out = "(";
  out += p_.str();
  if (q_ >= 0) out += "+";
  out += q_.str();
  out += "*sqrt(";
  out += std::to_string(d_);
  out += "))/";
  out += r_.str();
  return out;
}

}  // namespace cycloshell
