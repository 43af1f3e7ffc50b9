#pragma once

// Real quadratic surds r + s sqrt(d), periodic continued fractions, the
// Fibonacci closed forms and the numerical reconstruction of eta-limits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eisenfold/eisenstein.hpp"

namespace eisenfold {

class QuadraticSurd {
 public:
  QuadraticSurd() : r_(0), s_(0), d_(1) {}
  // r + s sqrt(n) for any n >= 1; square factors of n are pulled into s.
  static QuadraticSurd make(const BigRational& r, const BigRational& s, const BigInt& n);
  static QuadraticSurd rational(const BigRational& r) { return make(r, 0, 1); }

  const BigRational& r() const { return r_; }
  const BigRational& s() const { return s_; }
  // Squarefree radicand; 1 for rationals.
  const BigInt& d() const { return d_; }
  bool is_rational() const { return s_ == 0; }

  int sign() const;
  BigInt floor() const;
  double to_double() const;
  QuadraticSurd conjugate() const { return make(r_, -s_, d_); }
  std::string str() const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.r_ == y.r_ && x.s_ == y.s_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x == y); }
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }

 private:
  BigRational r_, s_;
  BigInt d_;
};

BigInt squarefree_part(const BigInt& n, BigInt* square_root_of_rest = nullptr);

// sqrt:N means sqrt(N) - floor(sqrt(N)); "golden" is (sqrt 5 - 1)/2.
QuadraticSurd parse_surd(const std::string& text);

struct CFExpansion {
  std::vector<BigInt> preperiod;  // starts with the integer part
  std::vector<BigInt> period;     // empty for rationals
  friend bool operator==(const CFExpansion& x, const CFExpansion& y) {
    return x.preperiod == y.preperiod && x.period == y.period;
  }
  std::string str() const;
};

CFExpansion periodic_cf_of_surd(const QuadraticSurd& x);
QuadraticSurd surd_from_periodic_cf(const CFExpansion& e);
// First n partial quotients of the (eventually periodic) expansion.
std::vector<BigInt> cf_terms(const CFExpansion& e, std::size_t n);

// Closed forms along the golden approximants a_n / a_{n+1} (a_1 = a_2 = 1).
BigInt fibonacci(int n);
BigInt fib_fold_count(int n);
BigInt fib_face_count(int n);

struct Approximant {
  BigInt p, q;  // aspect p/q, so beta = p + q alpha
  BigInt folds, faces;
  BigRational eta;
};
// eta(C(p + q alpha)) from the layer formula (sizes far beyond construction).
Approximant approximant(const BigInt& p, const BigInt& q);

// Convergents p_k/q_k of x in (0, 1), k = 1..n (the zeroth, 0/1, is skipped).
std::vector<std::pair<BigInt, BigInt>> convergents(const QuadraticSurd& x, std::size_t n);

struct RatioRow {
  int index = 0;
  Approximant approx;
  BigRational fold_ratio;  // f / F
};
std::vector<RatioRow> ratio_scan(const QuadraticSurd& zeta, int n_max);

struct EtaLimitOptions {
  // Decimal digits of the approximant denominators, tried in pairs of
  // consecutive entries. Empty: 40, 60, then growing by half until max_digits.
  std::vector<int> depth_digits;
  int max_digits = 7000;
  int safety_margin = 5;
  int min_repeats = 3;
  double time_limit_seconds = 0;  // 0: none
};

struct EtaLimitReport {
  enum class Status { Determined, Undetermined } status = Status::Undetermined;
  QuadraticSurd zeta;
  std::optional<QuadraticSurd> eta;
  std::optional<CFExpansion> expansion;
  std::vector<Approximant> approximants;  // the pair that settled it (or the last pair tried)
  std::vector<int> digits_tried;
  std::size_t reliable_terms = 0;
  std::string reason;
  const QuadraticSurd& surd() const;  // throws UndeterminedError
};

EtaLimitReport eta_limit_numeric(const QuadraticSurd& zeta, const EtaLimitOptions& options = {});

// Detects a preperiod/period in a finite prefix: the pair (m, k) minimizing
// m + k (then k) such that c[m..) is k-periodic with at least `repeats` full periods.
std::optional<CFExpansion> detect_period(const std::vector<BigInt>& terms, int repeats);

}  // namespace eisenfold
