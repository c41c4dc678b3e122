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

#ifndef CYCLOSHELL_QUADRAT_HPP_
#define CYCLOSHELL_QUADRAT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cycloshell {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of the real quadratic field Q(sqrt(d)), d in {2, 3},
// stored as (p + q*sqrt(d)) / r in canonical form:
//   r >= 1, gcd(p, q, r) == 1, and zero is (0, 0, 1).
//
// All arithmetic is exact.  Mixing values with different d throws
// std::invalid_argument.  Ordering uses the real embedding with the
// positive square root and is decided by integer arithmetic only.
class QuadRat {
 public:
  // Zero in Q(sqrt(2)).
  QuadRat() : QuadRat(2) {}

  // Zero in Q(sqrt(disc)).
  explicit QuadRat(int disc);

  // (p + q*sqrt(disc)) / r.  Throws std::invalid_argument if r == 0 or
  // disc is not 2 or 3.
  QuadRat(BigInt p, BigInt q, BigInt r, int disc);

  static QuadRat integer(const BigInt& v, int disc) {
    return QuadRat(v, 0, 1, disc);
  }
  static QuadRat rational(const BigInt& num, const BigInt& den, int disc) {
    return QuadRat(num, 0, den, disc);
  }
  // c * sqrt(disc).
  static QuadRat root_multiple(const BigInt& c, int disc) {
    return QuadRat(0, c, 1, disc);
  }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  int disc() const { return d_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && r_ == 1; }

  QuadRat operator-() const;
  QuadRat& operator+=(const QuadRat& o);
  QuadRat& operator-=(const QuadRat& o);
  QuadRat& operator*=(const QuadRat& o);
  QuadRat& operator/=(const QuadRat& o);

  friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
  friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
  friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
  friend QuadRat operator/(QuadRat a, const QuadRat& b) { return a /= b; }

  // Multiplicative inverse; throws std::domain_error on zero.
  QuadRat inverse() const;

  // Galois conjugate p - q*sqrt(d) over r.
  QuadRat conjugate() const { return QuadRat(p_, -q_, r_, d_); }

  // Sign of the real value: -1, 0, or +1.
  int sign() const;

  // Three-way comparison under the real embedding.
  int compare(const QuadRat& o) const { return (*this - o).sign(); }

  QuadRat abs() const { return sign() < 0 ? -*this : *this; }

  // Structural equality of canonical forms (p, q, r, d).  Values living
  // in different fields are never equal; no error is raised.
  friend bool operator==(const QuadRat& a, const QuadRat& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
  }
  friend bool operator!=(const QuadRat& a, const QuadRat& b) {
    return !(a == b);
  }
  friend bool operator<(const QuadRat& a, const QuadRat& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const QuadRat& a, const QuadRat& b) {
    return a.compare(b) <= 0;
  }
  friend bool operator>(const QuadRat& a, const QuadRat& b) {
    return a.compare(b) > 0;
  }
  friend bool operator>=(const QuadRat& a, const QuadRat& b) {
    return a.compare(b) >= 0;
  }

  // Decimal rendering with the given number of fractional digits
  // (1..50), rounded half away from zero.  The rounding decision is made
  // with enough guard precision that the printed digits are exact.
  std::string to_decimal(int digits) const;

  // Nearest double (via a 19-digit decimal rendering).
  double to_double() const;

  // Canonical text form "(p+q*sqrt(d))/r", e.g. "(-1+2*sqrt(2))/3".
  std::string str() const;

 private:
  void normalize();

  BigInt p_, q_, r_;
  int d_;
};

inline const QuadRat& min(const QuadRat& a, const QuadRat& b) {
  return b < a ? b : a;
}
inline const QuadRat& max(const QuadRat& a, const QuadRat& b) {
  return a < b ? b : a;
}

}  // namespace cycloshell

#endif  // CYCLOSHELL_QUADRAT_HPP_
