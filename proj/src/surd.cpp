#include "eisenfold/surd.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "eisenfold/coloring.hpp"

namespace eisenfold {

namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<char> sieve(kTrialBound + 1, 1);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialBound; j += i) sieve[j] = 0;
    }
    return out;
  }();
  return primes;
}

BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt fdiv(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt lcm(const BigInt& x, const BigInt& y) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

BigRational canon(BigRational x) {
  x.canonicalize();
  return x;
}

// x = (A + B sqrt(d)) / C with C > 0.
void common_form(const QuadraticSurd& x, BigInt& A, BigInt& B, BigInt& C) {
  C = lcm(x.r().get_den(), x.s().get_den());
  A = x.r().get_num() * (C / x.r().get_den());
  B = x.s().get_num() * (C / x.s().get_den());
}

void require_same_field(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (!x.is_rational() && !y.is_rational() && x.d() != y.d())
    throw DomainError("QuadraticSurd: operands lie in different quadratic fields");
}

BigInt field_radicand(const QuadraticSurd& x, const QuadraticSurd& y) { return x.is_rational() ? y.d() : x.d(); }

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw DomainError("cannot parse rational '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// Convergent numerators/denominators of a term list.
void convergent(const std::vector<BigInt>& terms, BigInt& h, BigInt& k, BigInt& h_prev, BigInt& k_prev) {
  h_prev = 1;
  k_prev = 0;
  h = terms.at(0);
  k = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    BigInt hn = terms[i] * h + h_prev, kn = terms[i] * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = hn;
    k = kn;
  }
}

// Streams the partial quotients of an eventually periodic expansion.
class TermStream {
 public:
  explicit TermStream(const CFExpansion& e) : e_(e) {}
  const BigInt& next() {
    const std::size_t i = i_++;
    if (i < e_.preperiod.size()) return e_.preperiod[i];
    if (e_.period.empty()) throw DomainError("continued fraction is finite");
    return e_.period[(i - e_.preperiod.size()) % e_.period.size()];
  }
  bool exhausted() const { return e_.period.empty() && i_ >= e_.preperiod.size(); }

 private:
  const CFExpansion& e_;
  std::size_t i_ = 0;
};

std::size_t common_prefix(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  std::size_t n = 0;
  while (n < x.size() && n < y.size() && x[n] == y[n]) ++n;
  return n;
}

}  // namespace

BigInt squarefree_part(const BigInt& n_in, BigInt* square_root_of_rest) {
  if (n_in <= 0) throw DomainError("squarefree_part: argument must be positive");
  BigInt n = n_in, d = 1, root = 1;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (BigInt(p) * p > n) break;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) d *= p;
  }
  if (n > 1) {
    // Cofactor without small primes: a square, a prime, or (if below the
    // square of the trial bound) necessarily prime.
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      root *= isqrt(n);
    } else if (n <= BigInt(kTrialBound) * kTrialBound || mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
      d *= n;
    } else {
      throw DomainError("squarefree_part: cannot certify the squarefree part of a large cofactor");
    }
  }
  if (square_root_of_rest) *square_root_of_rest = root;
  return d;
}

QuadraticSurd QuadraticSurd::make(const BigRational& r, const BigRational& s, const BigInt& n) {
  if (n <= 0) throw DomainError("QuadraticSurd: radicand must be positive");
  QuadraticSurd x;
  x.r_ = canon(r);
  x.s_ = canon(s);
  if (x.s_ == 0) return x;
  BigInt root;
  x.d_ = squarefree_part(n, &root);
  x.s_ = canon(x.s_ * root);
  if (x.d_ == 1) {
    x.r_ = canon(x.r_ + x.s_);
    x.s_ = 0;
  }
  return x;
}

int QuadraticSurd::sign() const {
  const int sr = sgn(r_), ss = sgn(s_);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  return canon(r_ * r_) > canon(s_ * s_ * d_) ? sr : ss;
}

BigInt QuadraticSurd::floor() const {
  BigInt A, B, C;
  common_form(*this, A, B, C);
  if (B == 0) return fdiv(A, C);
  const BigInt m = isqrt(B * B * d_);  // sqrt(B^2 d) is irrational
  if (B > 0) return fdiv(A + m, C);
  return fdiv(A - m - 1, C);
}

double QuadraticSurd::to_double() const { return r_.get_d() + s_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadraticSurd::str() const {
  if (is_rational()) return r_.get_str();
  BigInt A, B, C;
  common_form(*this, A, B, C);
  std::ostringstream os;
  std::string num;
  if (A != 0) num = A.get_str() + (B < 0 ? "-" : "+");
  else if (B < 0) num = "-";
  BigInt absB = abs(B);
  num += (absB == 1 ? std::string() : absB.get_str() + "*") + "sqrt(" + d_.get_str() + ")";
  if (C == 1) return num;
  return "(" + num + ")/" + C.get_str();
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  return QuadraticSurd::make(x.r_ + y.r_, x.s_ + y.s_, field_radicand(x, y));
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  return QuadraticSurd::make(x.r_ - y.r_, x.s_ - y.s_, field_radicand(x, y));
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  const BigInt d = field_radicand(x, y);
  return QuadraticSurd::make(x.r_ * y.r_ + x.s_ * y.s_ * d, x.r_ * y.s_ + x.s_ * y.r_, d);
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  const BigRational n = canon(y.r_ * y.r_ - y.s_ * y.s_ * y.d_);
  if (n == 0) throw DomainError("QuadraticSurd: division by zero");
  const QuadraticSurd num = x * y.conjugate();
  return QuadraticSurd::make(num.r_ / n, num.s_ / n, field_radicand(x, y));
}

QuadraticSurd parse_surd(const std::string& text) {
  if (text == "golden") return QuadraticSurd::make(BigRational(-1, 2), BigRational(1, 2), 5);
  if (text.rfind("sqrt:", 0) == 0) {
    std::string body = text.substr(5);
    if (body.size() > 6 && body.compare(body.size() - 6, 6, "-floor") == 0) body.resize(body.size() - 6);
    BigInt n;
    if (body.empty() || n.set_str(body, 10) != 0 || n <= 0) throw DomainError("bad surd '" + text + "'");
    if (mpz_perfect_square_p(n.get_mpz_t())) throw DomainError("sqrt:" + body + " is rational");
    return QuadraticSurd::make(BigRational(-isqrt(n)), 1, n);
  }
  if (text.rfind("surd:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(5));
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw DomainError("surd syntax is surd:R,S,N");
    BigInt n;
    if (n.set_str(parts[2], 10) != 0) throw DomainError("bad radicand in '" + text + "'");
    return QuadraticSurd::make(parse_rational(parts[0]), parse_rational(parts[1]), n);
  }
  throw DomainError("unknown surd '" + text + "' (use golden, sqrt:N or surd:R,S,N)");
}

std::string CFExpansion::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < preperiod.size(); ++i) os << (i == 0 ? "" : i == 1 ? "; " : ", ") << preperiod[i];
  if (!period.empty()) {
    os << (preperiod.empty() ? "" : preperiod.size() == 1 ? "; " : ", ") << "(";
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? ", " : "") << period[i];
    os << ")";
  }
  os << "]";
  return os.str();
}

CFExpansion periodic_cf_of_surd(const QuadraticSurd& x) {
  CFExpansion e;
  if (x.is_rational()) {
    e.preperiod = euclid_continued_fraction(x.r());
    return e;
  }
  // Complete quotients (P + sqrt(D)) / Q with Q | D - P^2.
  BigInt A, B, C;
  common_form(x, A, B, C);
  BigInt D = B * B * x.d(), P = A, Q = C;
  if (B < 0) {
    P = -A;
    Q = -C;
  }
  if ((D - P * P) % Q != 0) {
    const BigInt q = abs(Q);
    P *= q;
    D *= q * q;
    Q *= q;
  }
  const BigInt root = isqrt(D);
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> terms;
  while (true) {
    auto [it, fresh] = seen.emplace(std::make_pair(P, Q), terms.size());
    if (!fresh) {
      const std::size_t j = it->second;
      e.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(j));
      e.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(j), terms.end());
      return e;
    }
    const BigInt a = Q > 0 ? fdiv(P + root, Q) : fdiv(-P - root - 1, -Q);
    terms.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

QuadraticSurd surd_from_periodic_cf(const CFExpansion& e) {
  if (e.period.empty()) {
    if (e.preperiod.empty()) throw DomainError("surd_from_periodic_cf: empty expansion");
    return QuadraticSurd::rational(evaluate_continued_fraction(e.preperiod));
  }
  for (std::size_t i = 0; i < e.period.size(); ++i)
    if (e.period[i] <= 0) throw DomainError("surd_from_periodic_cf: period terms must be positive");
  // y = [period; y]: q_k y^2 + (q_{k-1} - h_k) y - h_{k-1} = 0, y > 1.
  BigInt h, k, hp, kp;
  convergent(e.period, h, k, hp, kp);
  const BigInt b = kp - h;
  const BigInt disc = b * b + 4 * k * hp;
  QuadraticSurd y = QuadraticSurd::make(BigRational(-b, 2 * k), BigRational(1, 2 * k), disc);
  if (e.preperiod.empty()) return y;
  BigInt H, K, Hp, Kp;
  convergent(e.preperiod, H, K, Hp, Kp);
  auto R = [](const BigInt& v) { return QuadraticSurd::rational(BigRational(v)); };
  return (R(H) * y + R(Hp)) / (R(K) * y + R(Kp));
}

std::vector<BigInt> cf_terms(const CFExpansion& e, std::size_t n) {
  std::vector<BigInt> out;
  TermStream ts(e);
  while (out.size() < n && !ts.exhausted()) out.push_back(ts.next());
  return out;
}

BigInt fibonacci(int n) {
  if (n < 1) throw DomainError("fibonacci: index must be >= 1");
  BigInt f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt fib_fold_count(int n) {
  if (n < 2) throw DomainError("fib_fold_count: n must be >= 2");
  BigInt s = 0;
  for (int k = 1; k <= n + 2; ++k) s += fibonacci(k);
  return -1 + 2 * s;
}

BigInt fib_face_count(int n) {
  if (n < 2) throw DomainError("fib_face_count: n must be >= 2");
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += fibonacci(k) * fibonacci(k + 1);
  return 2 + 4 * s;
}

Approximant approximant(const BigInt& p, const BigInt& q) {
  const PosRational aspect(p, q);
  if (aspect.p() > aspect.q()) throw DomainError("approximant: aspect must lie in (0, 1]");
  Approximant a;
  a.p = aspect.p();
  a.q = aspect.q();
  a.folds = layer_fold_count(aspect);
  a.faces = 2 * (a.p * a.p + a.p * a.q + a.q * a.q);
  a.eta = eta(a.folds, a.faces);
  return a;
}

std::vector<std::pair<BigInt, BigInt>> convergents(const QuadraticSurd& x, std::size_t n) {
  if (x.sign() <= 0 || x.floor() != 0) throw DomainError("convergents: argument must lie in (0, 1)");
  const CFExpansion e = periodic_cf_of_surd(x);
  TermStream ts(e);
  BigInt h = ts.next(), k = 1, hp = 1, kp = 0;
  std::vector<std::pair<BigInt, BigInt>> out;
  while (out.size() < n && !ts.exhausted()) {
    const BigInt& a = ts.next();
    BigInt hn = a * h + hp, kn = a * k + kp;
    hp = h;
    kp = k;
    h = hn;
    k = kn;
    out.emplace_back(h, k);
  }
  return out;
}

std::vector<RatioRow> ratio_scan(const QuadraticSurd& zeta, int n_max) {
  std::vector<RatioRow> rows;
  int index = 0;
  for (const auto& [p, q] : convergents(zeta, static_cast<std::size_t>(std::max(n_max, 0)))) {
    RatioRow row;
    row.index = ++index;
    row.approx = approximant(p, q);
    row.fold_ratio = canon(BigRational(row.approx.folds, row.approx.faces));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<CFExpansion> detect_period(const std::vector<BigInt>& c, int repeats) {
  const std::size_t L = c.size();
  const std::size_t r = static_cast<std::size_t>(std::max(repeats, 1));
  for (std::size_t s = 1; s <= L; ++s) {
    for (std::size_t k = 1; k <= s; ++k) {
      const std::size_t m = s - k;
      if (L < m || L - m < r * k) continue;
      bool periodic = true;
      for (std::size_t i = m; i + k < L && periodic; ++i) periodic = c[i] == c[i + k];
      if (!periodic) continue;
      CFExpansion e;
      e.preperiod.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
      e.period.assign(c.begin() + static_cast<std::ptrdiff_t>(m), c.begin() + static_cast<std::ptrdiff_t>(m + k));
      return e;
    }
  }
  return std::nullopt;
}

const QuadraticSurd& EtaLimitReport::surd() const {
  if (status != Status::Determined || !eta) throw UndeterminedError("eta limit undetermined: " + reason);
  return *eta;
}

EtaLimitReport eta_limit_numeric(const QuadraticSurd& zeta, const EtaLimitOptions& options) {
  if (zeta.is_rational()) throw DomainError("eta_limit_numeric: zeta must be irrational");
  if (zeta.sign() <= 0 || zeta.floor() != 0) throw DomainError("eta_limit_numeric: zeta must lie in (0, 1)");
  const auto start = std::chrono::steady_clock::now();
  EtaLimitReport rep;
  rep.zeta = zeta;

  std::vector<int> schedule = options.depth_digits;
  if (schedule.empty()) {
    schedule = {40, 60};
    while (schedule.back() < options.max_digits) schedule.push_back(std::min(options.max_digits, schedule.back() * 3 / 2));
  }

  const CFExpansion zcf = periodic_cf_of_surd(zeta);
  TermStream ts(zcf);
  BigInt h = ts.next(), k = 1, hp = 1, kp = 0;

  struct Level {
    Approximant approx;
    std::vector<BigInt> eta_cf;
  };
  std::optional<Level> prev;
  std::optional<QuadraticSurd> prev_candidate;
  for (int digits : schedule) {
    if (options.time_limit_seconds > 0) {
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed > options.time_limit_seconds) {
        rep.reason = "time limit reached";
        return rep;
      }
    }
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    while (k < bound) {
      const BigInt& a = ts.next();
      BigInt hn = a * h + hp, kn = a * k + kp;
      hp = h;
      kp = k;
      h = hn;
      k = kn;
    }
    rep.digits_tried.push_back(digits);
    Level cur{approximant(h, k), {}};
    cur.eta_cf = euclid_continued_fraction(cur.approx.eta);
    if (prev) {
      rep.approximants = {prev->approx, cur.approx};
      const std::size_t common = common_prefix(prev->eta_cf, cur.eta_cf);
      const std::size_t margin = static_cast<std::size_t>(std::max(options.safety_margin, 0));
      const std::size_t reliable = common > margin ? common - margin : 0;
      rep.reliable_terms = reliable;
      std::optional<QuadraticSurd> candidate;
      std::optional<CFExpansion> found;
      if (reliable > 0) {
        found = detect_period(std::vector<BigInt>(cur.eta_cf.begin(), cur.eta_cf.begin() + static_cast<std::ptrdiff_t>(reliable)),
                              options.min_repeats);
        if (found) {
          const QuadraticSurd s = surd_from_periodic_cf(*found);
          // eta(zeta) lies in Q(zeta); a period pointing elsewhere is spurious.
          if (s.d() == zeta.d() && s.sign() > 0) candidate = s;
        }
      }
      // Accept only when two consecutive depth pairs reconstruct the same surd.
      if (candidate && prev_candidate && *candidate == *prev_candidate) {
        rep.status = EtaLimitReport::Status::Determined;
        rep.eta = candidate;
        rep.expansion = periodic_cf_of_surd(*candidate);
        rep.reason.clear();
        return rep;
      }
      prev_candidate = candidate;
    }
    prev = std::move(cur);
  }
  rep.reason = "no stable period within the depth schedule";
  return rep;
}

}  // namespace eisenfold
