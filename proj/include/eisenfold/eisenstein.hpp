#pragma once

// Eisenstein integers a + b*alpha with alpha = (1 + i*sqrt(3))/2, so that
// alpha^2 = alpha - 1 and alpha^6 = 1. Also positive rationals in (0, 1], the
// slow Gauss map and the rational tree built from it.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eisenfold/errors.hpp"

namespace eisenfold {

using BigInt = mpz_class;
using BigRational = mpq_class;

template <class Int>
struct BasicEisenstein {
  Int a{0};  // coefficient of 1
  Int b{0};  // coefficient of alpha

  BasicEisenstein() = default;
  BasicEisenstein(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend BasicEisenstein operator+(const BasicEisenstein& z, const BasicEisenstein& w) {
    return {z.a + w.a, z.b + w.b};
  }
  friend BasicEisenstein operator-(const BasicEisenstein& z, const BasicEisenstein& w) {
    return {z.a - w.a, z.b - w.b};
  }
  friend BasicEisenstein operator-(const BasicEisenstein& z) { return {-z.a, -z.b}; }
  // (a + b alpha)(c + d alpha) = (ac - bd) + (ad + bc + bd) alpha
  friend BasicEisenstein operator*(const BasicEisenstein& z, const BasicEisenstein& w) {
    return {z.a * w.a - z.b * w.b, z.a * w.b + z.b * w.a + z.b * w.b};
  }
  friend BasicEisenstein operator*(const Int& k, const BasicEisenstein& z) { return {k * z.a, k * z.b}; }
  BasicEisenstein& operator+=(const BasicEisenstein& w) {
    a += w.a;
    b += w.b;
    return *this;
  }
  BasicEisenstein& operator-=(const BasicEisenstein& w) {
    a -= w.a;
    b -= w.b;
    return *this;
  }
  friend bool operator==(const BasicEisenstein& z, const BasicEisenstein& w) { return z.a == w.a && z.b == w.b; }
  friend bool operator!=(const BasicEisenstein& z, const BasicEisenstein& w) { return !(z == w); }
  friend bool operator<(const BasicEisenstein& z, const BasicEisenstein& w) {
    return z.a < w.a || (z.a == w.a && z.b < w.b);
  }

  Int norm() const { return a * a + a * b + b * b; }
  bool is_zero() const { return a == 0 && b == 0; }

  // Multiplication by alpha: rotation by 60 degrees about 0.
  BasicEisenstein times_alpha() const { return {-b, a + b}; }
  // Multiplication by alpha^-1 = 1 - alpha.
  BasicEisenstein times_alpha_inv() const { return {a + b, -a}; }
  BasicEisenstein rotated(int k) const {
    k %= 6;
    if (k < 0) k += 6;
    BasicEisenstein z = *this;
    for (int i = 0; i < k; ++i) z = z.times_alpha();
    return z;
  }
  // Complex conjugation: a + b alpha -> (a + b) - b alpha.
  BasicEisenstein conj() const { return {a + b, -b}; }

  friend std::ostream& operator<<(std::ostream& os, const BasicEisenstein& z) {
    return os << z.a << (z.b < 0 ? "" : "+") << z.b << "a";
  }
};

using EisensteinInt = BasicEisenstein<BigInt>;
using LatticePoint = BasicEisenstein<std::int64_t>;

inline const LatticePoint kOne{1, 0};
inline const LatticePoint kAlpha{0, 1};

// Throws DomainError when the value does not fit in int64 with the given headroom.
LatticePoint to_lattice(const EisensteinInt& z);
EisensteinInt to_big(const LatticePoint& p);

// gcd(a, b) == 1. Rejects zero.
bool is_primitive(const EisensteinInt& z);

// The unique member with 0 <= a <= b of the 12-element orbit of z under the six
// units and complex conjugation. Rejects zero.
EisensteinInt canonicalize(const EisensteinInt& z);

// Reduced positive rational p/q.
class PosRational {
 public:
  PosRational(BigInt p, BigInt q);
  PosRational(long p, long q) : PosRational(BigInt(p), BigInt(q)) {}

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_one() const { return p_ == q_; }
  BigRational value() const { return BigRational(p_, q_); }
  std::string str() const { return p_.get_str() + "/" + q_.get_str(); }

  friend bool operator==(const PosRational& x, const PosRational& y) { return x.p_ == y.p_ && x.q_ == y.q_; }
  friend bool operator!=(const PosRational& x, const PosRational& y) { return !(x == y); }
  friend std::ostream& operator<<(std::ostream& os, const PosRational& r) { return os << r.str(); }

 private:
  BigInt p_, q_;
};

// gamma(r) for 0 < r < 1: whichever of 1/r - 1 and 1/(1/r - 1) lies in (0, 1].
PosRational slow_gauss(const PosRational& r);

// The gamma-orbit of r down to 1/1, listed from 1/1 up to r.
std::vector<PosRational> g_sequence(const PosRational& r);

// Smallest k >= 1 with gamma^k(r) == gamma*(r). For r = 1/n the Gauss image is
// 0, which is identified with the root 1/1, giving k = n - 1.
BigInt comparison_exponent(const PosRational& r);

// Canonical continued fraction: [0; a1, ..., am] with am >= 2 for r < 1, and
// [1] for r = 1. Built from comparison exponents and checked against Euclid.
std::vector<BigInt> continued_fraction(const PosRational& r);
std::vector<BigInt> euclid_continued_fraction(const BigRational& x);
BigRational evaluate_continued_fraction(const std::vector<BigInt>& terms);

// Preimages of r under gamma: a/(a+b) and b/(a+b). The root 1/1 has the single
// child 1/2.
std::vector<PosRational> tree_children(const PosRational& r);

}  // namespace eisenfold
