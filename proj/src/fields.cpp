#include "semilin/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "semilin/matrix.hpp"

namespace semilin {

// ---------------------------------------------------------------------------
// Rational polynomial helpers (dense, coefficient 0 = constant term).
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// Exact division a / b; throws if the remainder is nonzero.
Poly poly_div_exact(Poly a, const Poly& b) {
  poly_trim(a);
  Poly q(std::max<size_t>(1, a.size() >= b.size() ? a.size() - b.size() + 1 : 1), Rat(0));
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    size_t shift = a.size() - b.size();
    Rat f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
    if (a.size() < b.size()) break;
  }
  internal_check(a.size() == 1 && a[0] == 0, "poly_div_exact: nonzero remainder");
  poly_trim(q);
  return q;
}

// a mod b, b monic.
Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rat f = a.back();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
  }
  return a;
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

std::vector<Rat> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(n + 1, Rat(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

const CycField* cyc_field(int n) {
  internal_check(n >= 1, "cyc_field: conductor must be positive");
  static std::map<int, std::unique_ptr<CycField>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second.get();
  auto F = std::make_unique<CycField>();
  F->n = n;
  F->deg = euler_phi(n);
  F->phi = cyclotomic_polynomial(n);
  internal_check(static_cast<int>(F->phi.size()) == F->deg + 1 && F->phi.back() == 1,
                 "cyc_field: bad cyclotomic polynomial");
  int npow = std::max(n, 2 * F->deg - 1);
  F->pow.resize(npow);
  Poly cur(1, Rat(1));
  for (int k = 0; k < npow; ++k) {
    Poly red = poly_mod(cur, F->phi);
    red.resize(F->deg, Rat(0));
    F->pow[k] = red;
    // multiply by x
    cur.insert(cur.begin(), Rat(0));
  }
  const CycField* ptr = F.get();
  cache[n] = std::move(F);
  return ptr;
}

Cyc cyc_zero(const CycField* F) { return Cyc{F, std::vector<Rat>(F->deg, Rat(0))}; }
Cyc cyc_one(const CycField* F) {
  Cyc r = cyc_zero(F);
  r.c[0] = 1;
  return r;
}
Cyc cyc_from_rat(const CycField* F, const Rat& v) {
  Cyc r = cyc_zero(F);
  r.c[0] = v;
  return r;
}
Cyc cyc_zeta_pow(const CycField* F, long k) {
  long kk = ((k % F->n) + F->n) % F->n;
  Cyc r{F, F->pow[kk]};
  return r;
}

static void check_same(const Cyc& a, const Cyc& b) {
  internal_check(a.F == b.F, "cyclotomic elements from different conductors");
}

Cyc cyc_add(const Cyc& a, const Cyc& b) {
  check_same(a, b);
  Cyc r = a;
  for (int i = 0; i < a.F->deg; ++i) r.c[i] += b.c[i];
  return r;
}
Cyc cyc_sub(const Cyc& a, const Cyc& b) {
  check_same(a, b);
  Cyc r = a;
  for (int i = 0; i < a.F->deg; ++i) r.c[i] -= b.c[i];
  return r;
}
Cyc cyc_neg(const Cyc& a) {
  Cyc r = a;
  for (auto& x : r.c) x = -x;
  return r;
}
Cyc cyc_mul(const Cyc& a, const Cyc& b) {
  check_same(a, b);
  const int d = a.F->deg;
  std::vector<Rat> conv(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c[j] == 0) continue;
      conv[i + j] += a.c[i] * b.c[j];
    }
  }
  Cyc r = cyc_zero(a.F);
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (conv[k] == 0) continue;
    const auto& pw = a.F->pow[k];
    for (int i = 0; i < d; ++i) r.c[i] += conv[k] * pw[i];
  }
  return r;
}

bool cyc_is_zero(const Cyc& a) {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}
bool cyc_eq(const Cyc& a, const Cyc& b) {
  check_same(a, b);
  return a.c == b.c;
}

Cyc cyc_inv(const Cyc& a) {
  internal_check(!cyc_is_zero(a), "division by zero in cyclotomic field");
  // Extended Euclid for gcd(a, Phi) = 1 in Q[x].
  Poly r0 = a.F->phi, r1 = a.c;
  poly_trim(r1);
  Poly s0(1, Rat(0)), s1(1, Rat(1));  // coefficients of a
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // q, rem of r0 / r1
    Poly q(std::max<size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1), Rat(0));
    Poly rem = r0;
    poly_trim(rem);
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
      size_t shift = rem.size() - r1.size();
      Rat f = rem.back() / r1.back();
      q[shift] += f;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
      poly_trim(rem);
      if (rem.size() < r1.size()) break;
    }
    Poly s2 = s0;  // s2 = s0 - q*s1
    {
      Poly qs = poly_mul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      poly_trim(s2);
    }
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd (a nonzero constant since Phi_n is irreducible), s0 * a = r0 mod Phi
  internal_check(r0.size() == 1 && r0[0] != 0, "cyclotomic inverse: gcd not constant");
  Rat lead = r0[0];
  Poly inv = poly_mod(s0, a.F->phi);
  inv.resize(a.F->deg, Rat(0));
  Cyc out{a.F, inv};
  for (auto& x : out.c) x /= lead;
  return out;
}

Cyc cyc_galois(const Cyc& a, long j) {
  long n = a.F->n;
  long jj = ((j % n) + n) % n;
  internal_check(std::gcd(jj, n) == 1, "cyclotomic Galois exponent not coprime to conductor");
  Cyc r = cyc_zero(a.F);
  for (int i = 0; i < a.F->deg; ++i) {
    if (a.c[i] == 0) continue;
    const auto& pw = a.F->pow[(static_cast<long>(i) * jj) % n];
    for (int k = 0; k < a.F->deg; ++k) r.c[k] += a.c[i] * pw[k];
  }
  return r;
}

std::optional<Rat> cyc_to_rat(const Cyc& a) {
  for (int i = 1; i < a.F->deg; ++i)
    if (a.c[i] != 0) return std::nullopt;
  return a.c[0];
}

Cyc cyc_embed(const Cyc& a, const CycField* target) {
  if (a.F == target) return a;
  internal_check(target->n % a.F->n == 0, "cyc_embed: source conductor must divide target");
  long step = target->n / a.F->n;
  Cyc r = cyc_zero(target);
  for (int i = 0; i < a.F->deg; ++i) {
    if (a.c[i] == 0) continue;
    const auto& pw = target->pow[(step * i) % target->n];
    for (int k = 0; k < target->deg; ++k) r.c[k] += a.c[i] * pw[k];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Quadratic numbers
// ---------------------------------------------------------------------------

long long squarefree_kernel(long long d, long long* square_part) {
  internal_check(d != 0, "squarefree kernel of 0");
  long long sign = d < 0 ? -1 : 1;
  unsigned long long m = static_cast<unsigned long long>(d < 0 ? -d : d);
  long long kernel = 1, sq = 1;
  for (unsigned long long p = 2; p * p <= m && p <= 1000000ULL; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e & 1) kernel *= static_cast<long long>(p);
    for (int i = 0; i < e / 2; ++i) sq *= static_cast<long long>(p);
  }
  if (m > 1) {
    unsigned long long r = static_cast<unsigned long long>(sqrtl(static_cast<long double>(m)));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    if (r * r == m) {
      if (r > 1000000ULL * 1000000ULL)
        throw SpecError("quadratic discriminant too large to factor by trial division");
      sq *= static_cast<long long>(r);
    } else if (m < 1000000ULL * 1000000ULL) {
      kernel *= static_cast<long long>(m);  // cofactor is prime
    } else {
      throw SpecError("quadratic discriminant too large to factor by trial division");
    }
  }
  if (square_part) *square_part = sq;
  return sign * kernel;
}

Quad quad_make(long long d, const Rat& a, const Rat& b) {
  long long sq = 1;
  long long kd = squarefree_kernel(d, &sq);
  if (kd == 0 || kd == 1) throw SpecError("quadratic field needs squarefree d != 0, 1");
  return Quad{kd, a, b * Rat(sq)};
}

static void quad_same(const Quad& x, const Quad& y) {
  internal_check(x.d == y.d, "quadratic elements from different fields");
}

Quad quad_add(const Quad& x, const Quad& y) {
  quad_same(x, y);
  return Quad{x.d, x.a + y.a, x.b + y.b};
}
Quad quad_sub(const Quad& x, const Quad& y) {
  quad_same(x, y);
  return Quad{x.d, x.a - y.a, x.b - y.b};
}
Quad quad_neg(const Quad& x) { return Quad{x.d, -x.a, -x.b}; }
Quad quad_mul(const Quad& x, const Quad& y) {
  quad_same(x, y);
  return Quad{x.d, x.a * y.a + Rat(x.d) * x.b * y.b, x.a * y.b + x.b * y.a};
}
Quad quad_conj(const Quad& x) { return Quad{x.d, x.a, -x.b}; }
bool quad_is_zero(const Quad& x) { return x.a == 0 && x.b == 0; }
bool quad_eq(const Quad& x, const Quad& y) {
  quad_same(x, y);
  return x.a == y.a && x.b == y.b;
}
Quad quad_inv(const Quad& x) {
  Rat nrm = x.a * x.a - Rat(x.d) * x.b * x.b;
  internal_check(nrm != 0, "division by zero in quadratic field");
  return Quad{x.d, x.a / nrm, -x.b / nrm};
}

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

namespace {

using FpPoly = std::vector<uint32_t>;  // dense, c[0] constant

FpPoly fp_mod(FpPoly a, const FpPoly& f, uint64_t p) {
  while (a.size() >= f.size()) {
    uint64_t lead = a.back();
    if (lead) {
      size_t shift = a.size() - f.size();
      for (size_t i = 0; i + 1 < f.size(); ++i) {
        uint64_t t = (static_cast<uint64_t>(f[i]) * lead) % p;
        a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, uint64_t p) {
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return fp_mod(std::move(r), f, p);
}

bool fp_is_zero(const FpPoly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& f, uint64_t p) {
  FpPoly r{1};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_mulmod(r, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
  auto trim = [](FpPoly& x) { while (x.size() > 1 && x.back() == 0) x.pop_back(); };
  trim(a);
  trim(b);
  while (!fp_is_zero(b)) {
    // a mod b with b not necessarily monic
    uint64_t binv = 1;
    {  // inverse of leading coeff mod p
      uint64_t g = b.back(), e = p - 2, r = 1;
      while (e) {
        if (e & 1) r = (r * g) % p;
        g = (g * g) % p;
        e >>= 1;
      }
      binv = r;
    }
    FpPoly r = a;
    trim(r);
    while (r.size() >= b.size() && !fp_is_zero(r)) {
      uint64_t f = (static_cast<uint64_t>(r.back()) * binv) % p;
      size_t shift = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t t = (static_cast<uint64_t>(b[i]) * f) % p;
        r[shift + i] = static_cast<uint32_t>((r[shift + i] + p - t) % p);
      }
      trim(r);
      if (r.size() < b.size()) break;
    }
    a = b;
    b = r;
    trim(b);
  }
  return a;
}

bool fp_irreducible(const FpPoly& f, uint32_t p) {
  int k = static_cast<int>(f.size()) - 1;
  // x^(p^k) == x mod f, and gcd(x^(p^(k/q)) - x, f) = 1 for primes q | k.
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  FpPoly x{0, 1};
  FpPoly xq = fp_powmod(x, pk, f, p);
  xq.resize(std::max<size_t>(xq.size(), 2), 0);
  FpPoly diff = xq;
  diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
  if (!fp_is_zero(fp_mod(diff, f, p))) return false;
  for (int q = 2; q <= k; ++q) {
    if (k % q) continue;
    bool isprime = true;
    for (int t = 2; t * t <= q; ++t)
      if (q % t == 0) isprime = false;
    if (!isprime) continue;
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, k / q);
    FpPoly xe = fp_powmod(x, pe, f, p);
    xe.resize(std::max<size_t>(xe.size(), 2), 0);
    FpPoly d2 = xe;
    d2[1] = static_cast<uint32_t>((d2[1] + p - 1) % p);
    FpPoly g = fp_gcd(d2, f, p);
    if (!(g.size() == 1 && g[0] != 0)) return false;
  }
  return true;
}

}  // namespace

const GFField* gf_field(uint32_t p, int k) {
  internal_check(p >= 2 && k >= 1, "gf_field: bad parameters");
  for (uint32_t t = 2; t * t <= p; ++t)
    if (p % t == 0) throw SpecError("finite tower characteristic must be prime");
  static std::map<std::pair<uint32_t, int>, std::unique_ptr<GFField>> cache;
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.get();
  auto F = std::make_unique<GFField>();
  F->p = p;
  F->k = k;
  if (k == 1) {
    F->modulus = {0, 1};  // x, i.e. plain Z/p
  } else {
    // Least monic irreducible, coefficient tuples (c_0, .., c_{k-1}) in
    // lexicographic order with c_0 most significant.
    std::vector<uint32_t> c(k, 0);
    bool found = false;
    while (!found) {
      FpPoly f(c.begin(), c.end());
      f.push_back(1);
      if (fp_irreducible(f, p)) {
        F->modulus = f;
        found = true;
        break;
      }
      int i = k - 1;
      while (i >= 0) {
        if (++c[i] < p) break;
        c[i] = 0;
        --i;
      }
      internal_check(i >= 0, "no irreducible polynomial found");
    }
  }
  const GFField* ptr = F.get();
  cache[key] = std::move(F);
  return ptr;
}

GFel gf_zero(const GFField* F) { return GFel{F, std::vector<uint32_t>(F->k, 0)}; }
GFel gf_one(const GFField* F) {
  GFel r = gf_zero(F);
  r.c[0] = 1 % F->p;
  return r;
}
GFel gf_from_int(const GFField* F, long v) {
  long m = ((v % static_cast<long>(F->p)) + F->p) % F->p;
  GFel r = gf_zero(F);
  r.c[0] = static_cast<uint32_t>(m);
  return r;
}
GFel gf_gen(const GFField* F) {
  GFel r = gf_zero(F);
  if (F->k == 1) throw SpecError("prime field has no generator symbol t");
  r.c[1] = 1;
  return r;
}

static void gf_same(const GFel& a, const GFel& b) {
  internal_check(a.F == b.F, "finite field elements from different fields");
}

GFel gf_add(const GFel& a, const GFel& b) {
  gf_same(a, b);
  GFel r = a;
  for (int i = 0; i < a.F->k; ++i) r.c[i] = (r.c[i] + b.c[i]) % a.F->p;
  return r;
}
GFel gf_sub(const GFel& a, const GFel& b) {
  gf_same(a, b);
  GFel r = a;
  for (int i = 0; i < a.F->k; ++i) r.c[i] = (r.c[i] + a.F->p - b.c[i]) % a.F->p;
  return r;
}
GFel gf_neg(const GFel& a) {
  GFel r = a;
  for (auto& x : r.c) x = (a.F->p - x) % a.F->p;
  return r;
}
GFel gf_mul(const GFel& a, const GFel& b) {
  gf_same(a, b);
  FpPoly prod = fp_mulmod(FpPoly(a.c.begin(), a.c.end()), FpPoly(b.c.begin(), b.c.end()),
                          a.F->modulus, a.F->p);
  prod.resize(a.F->k, 0);
  return GFel{a.F, std::vector<uint32_t>(prod.begin(), prod.end())};
}
bool gf_is_zero(const GFel& a) {
  for (auto c : a.c)
    if (c) return false;
  return true;
}
bool gf_eq(const GFel& a, const GFel& b) {
  gf_same(a, b);
  return a.c == b.c;
}
GFel gf_pow(const GFel& a, const Int& e) {
  internal_check(e >= 0, "gf_pow: negative exponent");
  FpPoly r = fp_powmod(FpPoly(a.c.begin(), a.c.end()), e, a.F->modulus, a.F->p);
  r.resize(a.F->k, 0);
  return GFel{a.F, std::vector<uint32_t>(r.begin(), r.end())};
}
GFel gf_inv(const GFel& a) {
  internal_check(!gf_is_zero(a), "division by zero in finite field");
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), a.F->p, a.F->k);
  return gf_pow(a, q - 2);
}
GFel gf_frobenius(const GFel& a, int times) {
  int t = ((times % a.F->k) + a.F->k) % a.F->k;
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), a.F->p, t);
  return gf_pow(a, e);
}
uint64_t gf_index(const GFel& a) {
  uint64_t idx = 0;
  for (int i = a.F->k - 1; i >= 0; --i) idx = idx * a.F->p + a.c[i];
  return idx;
}
GFel gf_from_index(const GFField* F, uint64_t idx) {
  GFel r = gf_zero(F);
  for (int i = 0; i < F->k; ++i) {
    r.c[i] = static_cast<uint32_t>(idx % F->p);
    idx /= F->p;
  }
  internal_check(idx == 0, "gf_from_index: index out of range");
  return r;
}

// ---------------------------------------------------------------------------
// FEl dispatch
// ---------------------------------------------------------------------------

namespace {

// Promote a rational to the shape of the model element.
FEl promote_like(const FEl& model, const Rat& r) {
  if (std::holds_alternative<Rat>(model)) return r;
  if (std::holds_alternative<Quad>(model)) {
    const Quad& q = std::get<Quad>(model);
    return Quad{q.d, r, Rat(0)};
  }
  if (std::holds_alternative<Cyc>(model)) return cyc_from_rat(std::get<Cyc>(model).F, r);
  const GFel& g = std::get<GFel>(model);
  Rat rr = r;
  rr.canonicalize();
  internal_check(rr.get_den() == 1 || mpz_divisible_ui_p(rr.get_den().get_mpz_t(), g.F->p) == 0,
                 "rational with denominator divisible by the characteristic");
  Int num = rr.get_num() % Int(g.F->p);
  Int den = rr.get_den() % Int(g.F->p);
  GFel n = gf_from_int(g.F, num.get_si());
  GFel d = gf_from_int(g.F, den.get_si());
  return gf_mul(n, gf_inv(d));
}

template <typename FQ, typename FC, typename FG, typename FR>
FEl binop(const FEl& a, const FEl& b, FR fr, FQ fq, FC fc, FG fg) {
  if (std::holds_alternative<Rat>(a) && !std::holds_alternative<Rat>(b))
    return binop(promote_like(b, std::get<Rat>(a)), b, fr, fq, fc, fg);
  if (std::holds_alternative<Rat>(b) && !std::holds_alternative<Rat>(a))
    return binop(a, promote_like(a, std::get<Rat>(b)), fr, fq, fc, fg);
  if (std::holds_alternative<Rat>(a)) return fr(std::get<Rat>(a), std::get<Rat>(b));
  if (std::holds_alternative<Quad>(a) && std::holds_alternative<Quad>(b))
    return fq(std::get<Quad>(a), std::get<Quad>(b));
  if (std::holds_alternative<Cyc>(a) && std::holds_alternative<Cyc>(b))
    return fc(std::get<Cyc>(a), std::get<Cyc>(b));
  if (std::holds_alternative<GFel>(a) && std::holds_alternative<GFel>(b))
    return fg(std::get<GFel>(a), std::get<GFel>(b));
  throw InternalError("mixed field elements in arithmetic");
}

}  // namespace

FEl fe_add(const FEl& a, const FEl& b) {
  return binop(a, b, [](const Rat& x, const Rat& y) { return FEl(Rat(x + y)); },
               [](const Quad& x, const Quad& y) { return FEl(quad_add(x, y)); },
               [](const Cyc& x, const Cyc& y) { return FEl(cyc_add(x, y)); },
               [](const GFel& x, const GFel& y) { return FEl(gf_add(x, y)); });
}
FEl fe_sub(const FEl& a, const FEl& b) {
  return binop(a, b, [](const Rat& x, const Rat& y) { return FEl(Rat(x - y)); },
               [](const Quad& x, const Quad& y) { return FEl(quad_sub(x, y)); },
               [](const Cyc& x, const Cyc& y) { return FEl(cyc_sub(x, y)); },
               [](const GFel& x, const GFel& y) { return FEl(gf_sub(x, y)); });
}
FEl fe_mul(const FEl& a, const FEl& b) {
  return binop(a, b, [](const Rat& x, const Rat& y) { return FEl(Rat(x * y)); },
               [](const Quad& x, const Quad& y) { return FEl(quad_mul(x, y)); },
               [](const Cyc& x, const Cyc& y) { return FEl(cyc_mul(x, y)); },
               [](const GFel& x, const GFel& y) { return FEl(gf_mul(x, y)); });
}
FEl fe_neg(const FEl& a) {
  if (std::holds_alternative<Rat>(a)) return Rat(-std::get<Rat>(a));
  if (std::holds_alternative<Quad>(a)) return quad_neg(std::get<Quad>(a));
  if (std::holds_alternative<Cyc>(a)) return cyc_neg(std::get<Cyc>(a));
  return gf_neg(std::get<GFel>(a));
}
FEl fe_inv(const FEl& a) {
  if (std::holds_alternative<Rat>(a)) {
    const Rat& r = std::get<Rat>(a);
    internal_check(r != 0, "division by zero");
    return Rat(1 / r);
  }
  if (std::holds_alternative<Quad>(a)) return quad_inv(std::get<Quad>(a));
  if (std::holds_alternative<Cyc>(a)) return cyc_inv(std::get<Cyc>(a));
  return gf_inv(std::get<GFel>(a));
}
bool fe_is_zero(const FEl& a) {
  if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) == 0;
  if (std::holds_alternative<Quad>(a)) return quad_is_zero(std::get<Quad>(a));
  if (std::holds_alternative<Cyc>(a)) return cyc_is_zero(std::get<Cyc>(a));
  return gf_is_zero(std::get<GFel>(a));
}
bool fe_eq(const FEl& a, const FEl& b) { return fe_is_zero(fe_sub(a, b)); }

std::string fe_to_string(const FEl& a) {
  std::ostringstream os;
  if (std::holds_alternative<Rat>(a)) {
    os << std::get<Rat>(a);
    return os.str();
  }
  if (std::holds_alternative<Quad>(a)) {
    const Quad& q = std::get<Quad>(a);
    bool first = true;
    if (q.a != 0 || q.b == 0) {
      os << q.a;
      first = false;
    }
    if (q.b != 0) {
      Rat b = q.b;
      if (!first) {
        os << (b > 0 ? "+" : "-");
        if (b < 0) b = -b;
      }
      if (b == 1)
        os << "sqrt" << q.d;
      else if (b == -1)
        os << "-sqrt" << q.d;
      else
        os << b << "*sqrt" << q.d;
    }
    return os.str();
  }
  if (std::holds_alternative<Cyc>(a)) {
    const Cyc& c = std::get<Cyc>(a);
    bool any = false;
    for (int i = 0; i < c.F->deg; ++i) {
      if (c.c[i] == 0) continue;
      Rat v = c.c[i];
      if (any) {
        os << (v > 0 ? "+" : "-");
        if (v < 0) v = -v;
      }
      if (i == 0) {
        os << v;
      } else {
        if (v == 1) {
        } else if (v == -1) {
          os << "-";
        } else {
          os << v << "*";
        }
        os << "zeta" << c.F->n;
        if (i > 1) os << "^" << i;
      }
      any = true;
    }
    if (!any) os << "0";
    return os.str();
  }
  const GFel& g = std::get<GFel>(a);
  bool any = false;
  for (int i = 0; i < g.F->k; ++i) {
    if (!g.c[i]) continue;
    if (any) os << "+";
    if (i == 0) {
      os << g.c[i];
    } else {
      if (g.c[i] != 1) os << g.c[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Towers
// ---------------------------------------------------------------------------

int FieldTower::compose(int g1, int g2) const {
  switch (kind) {
    case TowerKind::Quadratic:
    case TowerKind::Archimedean:
      return g1 ^ g2;
    case TowerKind::Cyclotomic: {
      long e = (static_cast<long>(exponents[g1]) * exponents[g2]) % n;
      for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] == e) return static_cast<int>(i);
      throw InternalError("gamma not closed under composition");
    }
    case TowerKind::Finite:
      return (g1 + g2) % k;
  }
  throw InternalError("bad tower kind");
}

int FieldTower::inverse(int g) const {
  for (int h = 0; h < gamma_order; ++h)
    if (compose(g, h) == 0) return h;
  throw InternalError("gamma element has no inverse");
}

FEl FieldTower::zero() const { return from_rat(Rat(0)); }
FEl FieldTower::one() const { return from_rat(Rat(1)); }

FEl FieldTower::from_rat(const Rat& r) const {
  switch (kind) {
    case TowerKind::Quadratic:
      return Quad{d, r, Rat(0)};
    case TowerKind::Cyclotomic:
      return cyc_from_rat(cyc_field(n), r);
    case TowerKind::Finite: {
      FEl model = GFel{gf_field(p, k), std::vector<uint32_t>(k, 0)};
      return promote_like(model, r);
    }
    case TowerKind::Archimedean:
      throw SpecError("the archimedean tower carries no exact element arithmetic");
  }
  throw InternalError("bad tower kind");
}

std::vector<Rat> FieldTower::coordsQ(const FEl& x) const {
  if (kind == TowerKind::Quadratic) {
    if (std::holds_alternative<Rat>(x)) return {std::get<Rat>(x), Rat(0)};
    const Quad& q = std::get<Quad>(x);
    internal_check(q.d == d, "tower mismatch");
    return {q.a, q.b};
  }
  if (kind == TowerKind::Cyclotomic) {
    if (std::holds_alternative<Rat>(x)) {
      std::vector<Rat> v(dimQ_L, Rat(0));
      v[0] = std::get<Rat>(x);
      return v;
    }
    const Cyc& c = std::get<Cyc>(x);
    internal_check(c.F->n == n, "tower mismatch");
    return c.c;
  }
  throw InternalError("coordsQ on a non-characteristic-0 tower");
}

FEl FieldTower::from_coordsQ(const std::vector<Rat>& v) const {
  if (kind == TowerKind::Quadratic) return Quad{d, v.at(0), v.at(1)};
  if (kind == TowerKind::Cyclotomic) return Cyc{cyc_field(n), v};
  throw InternalError("from_coordsQ on a non-characteristic-0 tower");
}

std::vector<uint32_t> FieldTower::coordsP(const FEl& x) const {
  internal_check(kind == TowerKind::Finite, "coordsP needs a finite tower");
  if (std::holds_alternative<Rat>(x)) {
    FEl y = promote_like(GFel{gf_field(p, k), std::vector<uint32_t>(k, 0)}, std::get<Rat>(x));
    return std::get<GFel>(y).c;
  }
  const GFel& g = std::get<GFel>(x);
  internal_check(g.F->p == p && g.F->k == k, "tower mismatch");
  return g.c;
}

FEl FieldTower::from_coordsP(const std::vector<uint32_t>& v) const {
  return GFel{gf_field(p, k), v};
}

std::string FieldTower::describe() const {
  std::ostringstream os;
  switch (kind) {
    case TowerKind::Quadratic:
      os << "Q(sqrt" << d << ")/Q";
      break;
    case TowerKind::Cyclotomic: {
      os << "Q(zeta" << n << ")/fixed field of {";
      for (size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
      os << "}";
      break;
    }
    case TowerKind::Finite:
      os << "GF(" << p << "^" << k << ")/GF(" << p << ")";
      break;
    case TowerKind::Archimedean:
      os << "archimedean C/R";
      break;
  }
  return os.str();
}

FieldTower make_quadratic_tower(long long d) {
  long long kd = squarefree_kernel(d, nullptr);
  if (kd == 0 || kd == 1) throw SpecError("quadratic tower needs squarefree d != 0, 1");
  FieldTower T;
  T.kind = TowerKind::Quadratic;
  T.d = kd;
  T.gamma_order = 2;
  T.dimQ_L = 2;
  T.dimQ_K = 1;
  T.K_basis = {FEl(Quad{kd, Rat(1), Rat(0)})};
  return T;
}

FieldTower make_finite_tower(uint32_t p, int k) {
  if (k < 1) throw SpecError("finite tower needs extension degree >= 1");
  const GFField* F = gf_field(p, k);
  (void)F;
  FieldTower T;
  T.kind = TowerKind::Finite;
  T.p = p;
  T.k = k;
  T.gamma_order = k;
  T.dimQ_L = k;
  T.dimQ_K = 1;
  T.K_basis = {FEl(gf_one(F))};
  return T;
}

FieldTower make_archimedean_tower() {
  FieldTower T;
  T.kind = TowerKind::Archimedean;
  T.gamma_order = 2;
  T.dimQ_L = 0;
  T.dimQ_K = 0;
  return T;
}

FieldTower make_cyclotomic_tower(int n, const std::vector<int>& subgroup_gens) {
  if (n < 1) throw SpecError("cyclotomic tower needs conductor n >= 1");
  FieldTower T;
  T.kind = TowerKind::Cyclotomic;
  T.n = n;
  // Closure of the generators in (Z/n)^x.
  std::vector<int> elems{1 % n == 0 ? 0 : 1};
  if (n == 1) elems = {0};
  for (int g : subgroup_gens) {
    int gg = ((g % n) + n) % n;
    if (n > 1 && std::gcd(gg, n) != 1)
      throw SpecError("cyclotomic tower subgroup exponent not coprime to n");
    if (std::find(elems.begin(), elems.end(), gg) == elems.end()) elems.push_back(gg);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = elems.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        int e = static_cast<int>((static_cast<long>(elems[i]) * elems[j]) % std::max(n, 1));
        if (n == 1) e = 0;
        if (std::find(elems.begin(), elems.end(), e) == elems.end()) {
          elems.push_back(e);
          grew = true;
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  T.exponents = elems;
  T.gamma_order = static_cast<int>(elems.size());
  T.dimQ_L = euler_phi(n);
  internal_check(T.dimQ_L % T.gamma_order == 0, "gamma order must divide [L:Q]");
  T.dimQ_K = T.dimQ_L / T.gamma_order;

  // Fixed-field witness: a Q-basis of K = L^Gamma from the fixed-point system.
  const CycField* F = cyc_field(n);
  int dim = T.dimQ_L;
  FMat sys = fmat_zero(dim * T.gamma_order, dim, FEl(Rat(0)));
  for (int gi = 0; gi < T.gamma_order; ++gi) {
    long j = T.exponents[gi];
    for (int b = 0; b < dim; ++b) {
      Cyc img = cyc_galois(Cyc{F, F->pow[b]}, j);
      for (int r = 0; r < dim; ++r) {
        Rat v = img.c[r] - (r == b ? Rat(1) : Rat(0));
        sys.at(gi * dim + r, b) = v;
      }
    }
  }
  auto ker = fmat_kernel(sys, FEl(Rat(0)), FEl(Rat(1)));
  internal_check(static_cast<int>(ker.size()) == T.dimQ_K,
                 "fixed field of gamma has wrong dimension");
  for (const auto& kv : ker) {
    std::vector<Rat> coeffs(dim);
    for (int i = 0; i < dim; ++i) coeffs[i] = std::get<Rat>(kv[i]);
    T.K_basis.push_back(FEl(Cyc{F, coeffs}));
  }
  return T;
}

FEl galois_apply(const FieldTower& T, GaloisElement g, const FEl& x) {
  if (g.index < 0 || g.index >= T.gamma_order)
    throw SpecError("Galois element index out of range");
  if (std::holds_alternative<Rat>(x)) return x;
  switch (T.kind) {
    case TowerKind::Quadratic: {
      if (!std::holds_alternative<Quad>(x) || std::get<Quad>(x).d != T.d)
        throw SpecError("tower mismatch: element not in this quadratic field");
      return g.index == 0 ? x : FEl(quad_conj(std::get<Quad>(x)));
    }
    case TowerKind::Cyclotomic: {
      if (!std::holds_alternative<Cyc>(x) || std::get<Cyc>(x).F->n != T.n)
        throw SpecError("tower mismatch: element not in this cyclotomic field");
      return cyc_galois(std::get<Cyc>(x), T.exponents[g.index]);
    }
    case TowerKind::Finite: {
      if (!std::holds_alternative<GFel>(x) || std::get<GFel>(x).F != gf_field(T.p, T.k))
        throw SpecError("tower mismatch: element not in this finite field");
      return gf_frobenius(std::get<GFel>(x), g.index);
    }
    case TowerKind::Archimedean:
      throw SpecError("the archimedean tower carries no exact element arithmetic");
  }
  throw InternalError("bad tower kind");
}

FEl norm_L_over_K(const FieldTower& T, const FEl& x) {
  FEl prod = T.one();
  for (int g = 0; g < T.gamma_order; ++g) prod = fe_mul(prod, galois_apply(T, {g}, x));
  for (int g = 0; g < T.gamma_order; ++g)
    internal_check(fe_eq(galois_apply(T, {g}, prod), prod), "norm is not Gamma-fixed");
  if (T.kind == TowerKind::Quadratic) return FEl(std::get<Quad>(prod).a);
  return prod;
}

int fixed_subfield_dimension(const FieldTower& T, const std::vector<GaloisElement>& subset) {
  // Close the subset under composition.
  std::vector<int> sub{0};
  for (auto g : subset)
    if (std::find(sub.begin(), sub.end(), g.index) == sub.end()) sub.push_back(g.index);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = sub.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        int e = T.compose(sub[i], sub[j]);
        if (std::find(sub.begin(), sub.end(), e) == sub.end()) {
          sub.push_back(e);
          grew = true;
        }
      }
  }
  const bool finite = T.kind == TowerKind::Finite;
  FEl fzero = finite ? FEl(gf_zero(gf_field(T.p, 1))) : FEl(Rat(0));
  FEl fone = finite ? FEl(gf_one(gf_field(T.p, 1))) : FEl(Rat(1));
  int dim = T.dimQ_L;
  FMat sys = fmat_zero(dim * static_cast<int>(sub.size()), dim, fzero);
  for (size_t si = 0; si < sub.size(); ++si) {
    for (int b = 0; b < dim; ++b) {
      // image of the b-th basis vector of L under gamma, in prime-field coords
      FEl basis_el;
      if (finite) {
        std::vector<uint32_t> bv(T.k, 0);
        bv[b] = 1;
        basis_el = T.from_coordsP(bv);
      } else {
        std::vector<Rat> bv(dim, Rat(0));
        bv[b] = 1;
        basis_el = T.from_coordsQ(bv);
      }
      FEl img = galois_apply(T, {sub[si]}, basis_el);
      if (finite) {
        auto co = T.coordsP(img);
        for (int r = 0; r < dim; ++r) {
          long v = (static_cast<long>(co[r]) + (r == b ? static_cast<long>(T.p) - 1 : 0)) % T.p;
          sys.at(si * dim + r, b) = gf_from_int(gf_field(T.p, 1), v);
        }
      } else {
        auto co = T.coordsQ(img);
        for (int r = 0; r < dim; ++r)
          sys.at(si * dim + r, b) = Rat(co[r] - (r == b ? Rat(1) : Rat(0)));
      }
    }
  }
  auto ker = fmat_kernel(sys, fzero, fone);
  int fixdim = static_cast<int>(ker.size());
  internal_check(fixdim % T.dimQ_K == 0, "fixed field is not a K-vector space");
  return fixdim / T.dimQ_K;
}

// ---------------------------------------------------------------------------
// Embeddings into cyclotomic fields
// ---------------------------------------------------------------------------

long long quadratic_conductor(long long d) {
  long long kd = squarefree_kernel(d, nullptr);
  long long mod4 = ((kd % 4) + 4) % 4;
  return mod4 == 1 ? (kd < 0 ? -kd : kd) : 4 * (kd < 0 ? -kd : kd);
}

Cyc embed_sqrt(long long d, const CycField* F) {
  long long kd = squarefree_kernel(d, nullptr);
  internal_check(F->n % quadratic_conductor(kd) == 0,
                 "embed_sqrt: conductor of the quadratic field must divide n");
  // Factor d over odd primes; g_p^2 = p* = (-1)^((p-1)/2) p.
  long long t = 1;
  Cyc acc = cyc_one(F);
  long long m = kd < 0 ? -kd : kd;
  if (m % 2 == 0) m /= 2;
  for (long long p = 3; p * p <= m; p += 2) {
    if (m % p) continue;
    m /= p;
    t *= (p % 4 == 1) ? p : -p;
    acc = cyc_mul(acc, [&] {
      Cyc g = cyc_zero(F);
      for (long long a = 1; a < p; ++a) {
        // Legendre symbol a^((p-1)/2) mod p
        long long s = 1, base = a % p, e = (p - 1) / 2;
        while (e) {
          if (e & 1) s = (s * base) % p;
          base = (base * base) % p;
          e >>= 1;
        }
        Cyc z = cyc_zeta_pow(F, (F->n / p) * a);
        g = (s == 1) ? cyc_add(g, z) : cyc_sub(g, z);
      }
      return g;
    }());
  }
  if (m > 1) {
    long long p = m;
    t *= (p % 4 == 1) ? p : -p;
    Cyc g = cyc_zero(F);
    for (long long a = 1; a < p; ++a) {
      long long s = 1, base = a % p, e = (p - 1) / 2;
      while (e) {
        if (e & 1) s = (s * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      Cyc z = cyc_zeta_pow(F, (F->n / p) * a);
      g = (s == 1) ? cyc_add(g, z) : cyc_sub(g, z);
    }
    acc = cyc_mul(acc, g);
  }
  long long r = kd / t;  // in {1, -1, 2, -2}
  internal_check(r == 1 || r == -1 || r == 2 || r == -2, "embed_sqrt: bad residual factor");
  if (r == -1) {
    acc = cyc_mul(acc, cyc_zeta_pow(F, F->n / 4));
  } else if (r == 2) {
    Cyc s2 = cyc_add(cyc_zeta_pow(F, F->n / 8), cyc_zeta_pow(F, F->n - F->n / 8));
    acc = cyc_mul(acc, s2);
  } else if (r == -2) {
    Cyc s2 = cyc_add(cyc_zeta_pow(F, F->n / 8), cyc_zeta_pow(F, 3 * (F->n / 8)));
    acc = cyc_mul(acc, s2);
  }
  Cyc square = cyc_mul(acc, acc);
  internal_check(cyc_eq(square, cyc_from_rat(F, Rat(kd))), "embed_sqrt: result does not square to d");
  return acc;
}

Compositum compositum_with(const FieldTower& T, int m) {
  long long mm = std::max(m, 1);
  switch (T.kind) {
    case TowerKind::Cyclotomic:
      mm = std::lcm<long long>(mm, T.n);
      break;
    case TowerKind::Quadratic:
      mm = std::lcm<long long>(mm, quadratic_conductor(T.d));
      break;
    case TowerKind::Archimedean:
      break;
    case TowerKind::Finite:
      throw SpecError("no characteristic-0 compositum for a finite tower");
  }
  Compositum c;
  c.m = static_cast<int>(mm);
  c.M = cyc_field(c.m);
  return c;
}

Cyc embed_into(const FieldTower& T, const FEl& x, const CycField* M) {
  if (std::holds_alternative<Rat>(x)) return cyc_from_rat(M, std::get<Rat>(x));
  if (std::holds_alternative<Cyc>(x)) return cyc_embed(std::get<Cyc>(x), M);
  if (std::holds_alternative<Quad>(x)) {
    const Quad& q = std::get<Quad>(x);
    Cyc s = embed_sqrt(q.d, M);
    return cyc_add(cyc_from_rat(M, q.a), cyc_mul(cyc_from_rat(M, q.b), s));
  }
  throw SpecError("cannot embed a finite-field element into a cyclotomic field");
}

// ---------------------------------------------------------------------------
// Parsing and printing of L-element strings
// ---------------------------------------------------------------------------

namespace {

struct ElemParser {
  const FieldTower& T;
  std::string s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  Rat parse_rat() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !isdigit(static_cast<unsigned char>(s[start]))))
      throw SpecError("expected a number in field element '" + s + "'");
    std::string num = s.substr(start, pos - start);
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) throw SpecError("expected a denominator in '" + s + "'");
      num += "/" + s.substr(dstart, pos - dstart);
    }
    Rat r(num);
    r.canonicalize();
    return r;
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw SpecError("expected an integer in '" + s + "'");
    return std::stol(s.substr(start, pos - start));
  }

  // factor := rational | zetaN[^k] | sqrtD | t[^k]
  FEl parse_factor() {
    skip_ws();
    if (pos >= s.size()) throw SpecError("unexpected end of field element '" + s + "'");
    if (s.compare(pos, 4, "zeta") == 0) {
      pos += 4;
      long conductor = parse_int();
      long e = 1;
      if (eat('^')) e = parse_int();
      if (T.kind != TowerKind::Cyclotomic)
        throw SpecError("zeta literal in a non-cyclotomic tower");
      if (conductor <= 0 || T.n % conductor != 0)
        throw SpecError("zeta conductor must divide the tower conductor");
      return cyc_zeta_pow(cyc_field(T.n), (T.n / conductor) * e);
    }
    if (s.compare(pos, 4, "sqrt") == 0) {
      pos += 4;
      bool paren = eat('(');
      long dd = parse_int();
      if (paren && !eat(')')) throw SpecError("unbalanced parenthesis in '" + s + "'");
      long long sq = 1;
      long long kd = squarefree_kernel(dd, &sq);
      if (T.kind == TowerKind::Quadratic) {
        if (kd != T.d) throw SpecError("sqrt literal outside the tower's quadratic field");
        return Quad{T.d, Rat(0), Rat(sq)};
      }
      if (T.kind == TowerKind::Cyclotomic) {
        const CycField* F = cyc_field(T.n);
        if (T.n % quadratic_conductor(kd) != 0)
          throw SpecError("sqrt literal does not lie in the tower's cyclotomic field");
        return cyc_mul(cyc_from_rat(F, Rat(sq)), embed_sqrt(kd, F));
      }
      throw SpecError("sqrt literal in an incompatible tower");
    }
    if (s[pos] == 't' && T.kind == TowerKind::Finite) {
      ++pos;
      long e = 1;
      if (eat('^')) e = parse_int();
      return gf_pow(gf_gen(gf_field(T.p, T.k)), Int(e));
    }
    Rat r = parse_rat();
    return T.kind == TowerKind::Finite ? promote_like(FEl(gf_zero(gf_field(T.p, T.k))), r)
                                       : FEl(r);
  }

  FEl parse_term() {
    FEl f = parse_factor();
    while (eat('*')) f = fe_mul(f, parse_factor());
    return f;
  }

  FEl parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    FEl acc = parse_term();
    if (neg) acc = fe_neg(acc);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        acc = fe_add(acc, parse_term());
      } else if (eat('-')) {
        acc = fe_sub(acc, parse_term());
      } else {
        throw SpecError("trailing characters in field element '" + s + "'");
      }
    }
    return acc;
  }
};

}  // namespace

FEl parse_field_element(const FieldTower& T, const std::string& str) {
  ElemParser p{T, str};
  FEl v = p.parse_expr();
  // Normalize rationals into the tower's representation.
  if (std::holds_alternative<Rat>(v) && T.kind != TowerKind::Archimedean)
    return T.from_rat(std::get<Rat>(v));
  return v;
}

std::string field_element_to_string(const FieldTower& T, const FEl& x) {
  (void)T;
  return fe_to_string(x);
}

}  // namespace semilin
