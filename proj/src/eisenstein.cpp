#include "eisenfold/eisenstein.hpp"

namespace eisenfold {

namespace {

void require_nonzero(const EisensteinInt& z, const char* op) {
  if (z.is_zero()) throw DomainError(std::string(op) + ": zero Eisenstein integer");
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

LatticePoint to_lattice(const EisensteinInt& z) {
  if (!z.a.fits_slong_p() || !z.b.fits_slong_p()) throw DomainError("coordinate does not fit in 64 bits");
  return {static_cast<std::int64_t>(z.a.get_si()), static_cast<std::int64_t>(z.b.get_si())};
}

EisensteinInt to_big(const LatticePoint& p) {
  return {BigInt(static_cast<long>(p.a)), BigInt(static_cast<long>(p.b))};
}

bool is_primitive(const EisensteinInt& z) {
  require_nonzero(z, "is_primitive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), z.a.get_mpz_t(), z.b.get_mpz_t());
  return g == 1;
}

EisensteinInt canonicalize(const EisensteinInt& z) {
  require_nonzero(z, "canonicalize");
  EisensteinInt u = z;
  for (int k = 0; k < 6; ++k, u = u.times_alpha()) {
    for (const EisensteinInt& w : {u, u.conj()}) {
      if (w.a >= 0 && w.a <= w.b) return w;
    }
  }
  throw InternalError("canonicalize: orbit has no member in the fundamental sector");
}

PosRational::PosRational(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ <= 0 || q_ <= 0) throw DomainError("PosRational: numerator and denominator must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

PosRational slow_gauss(const PosRational& r) {
  if (r.p() >= r.q()) throw DomainError("slow_gauss: argument must lie in (0, 1)");
  // 1/r - 1 = (q - p)/p; take the reciprocal when it exceeds 1.
  BigInt num = r.q() - r.p();
  if (num <= r.p()) return PosRational(num, r.p());
  return PosRational(r.p(), num);
}

std::vector<PosRational> g_sequence(const PosRational& r) {
  if (r.p() > r.q()) throw DomainError("g_sequence: argument must lie in (0, 1]");
  std::vector<PosRational> orbit{r};
  while (!orbit.back().is_one()) orbit.push_back(slow_gauss(orbit.back()));
  return {orbit.rbegin(), orbit.rend()};
}

BigInt comparison_exponent(const PosRational& r) {
  if (r.p() >= r.q()) throw DomainError("comparison_exponent: argument must lie in (0, 1)");
  // While q > 2p, gamma maps p/q to p/(q - p), so gamma needs floor(q/p) steps
  // to reach (q mod p)/p. When p divides q the orbit reaches 1/1 one step early.
  BigInt k = r.q() / r.p();
  if (r.q() % r.p() == 0) k -= 1;
  return k;
}

std::vector<BigInt> continued_fraction(const PosRational& r) {
  if (r.p() > r.q()) throw DomainError("continued_fraction: argument must lie in (0, 1]");
  if (r.is_one()) return {BigInt(1)};
  std::vector<BigInt> terms{BigInt(0)};
  BigInt p = r.p(), q = r.q();
  while (true) {
    const PosRational cur(p, q);
    terms.push_back(comparison_exponent(cur));
    BigInt rem = q % p;
    if (rem == 0) break;
    q = p;
    p = rem;
  }
  // The orbit ends at the root 1/1 = [1], which merges into the last quotient.
  terms.back() += 1;
  if (euclid_continued_fraction(r.value()) != terms)
    throw InternalError("continued_fraction: comparison exponents disagree with Euclid");
  return terms;
}

std::vector<BigInt> euclid_continued_fraction(const BigRational& x) {
  std::vector<BigInt> terms;
  BigInt n = x.get_num(), d = x.get_den();
  while (true) {
    BigInt a = floor_div(n, d);
    terms.push_back(a);
    BigInt rem = n - a * d;
    if (rem == 0) break;
    n = d;
    d = rem;
  }
  return terms;
}

BigRational evaluate_continued_fraction(const std::vector<BigInt>& terms) {
  if (terms.empty()) throw DomainError("evaluate_continued_fraction: empty expansion");
  // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}.
  BigInt h_prev = 1, h = terms[0], k_prev = 0, k = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    BigInt h_next = terms[i] * h + h_prev;
    BigInt k_next = terms[i] * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  BigRational v(h, k);
  v.canonicalize();
  return v;
}

std::vector<PosRational> tree_children(const PosRational& r) {
  if (r.p() > r.q()) throw DomainError("tree_children: argument must lie in (0, 1]");
  if (r.is_one()) return {PosRational(1, 2)};
  const BigInt s = r.p() + r.q();
  return {PosRational(r.p(), s), PosRational(r.q(), s)};
}

}  // namespace eisenfold
