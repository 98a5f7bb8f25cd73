#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "semilin/errors.hpp"

namespace semilin {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Cyclotomic field Q(zeta_n), elements in the power basis 1, z, ..., z^(phi-1)
// reduced mod the n-th cyclotomic polynomial.
// ---------------------------------------------------------------------------

struct CycField {
  int n = 1;
  int deg = 1;                          // phi(n)
  std::vector<Rat> phi;                 // Phi_n, monic, coefficients 0..deg
  std::vector<std::vector<Rat>> pow;    // z^k mod Phi_n, k = 0 .. max(n, 2*deg-1)
};

// Shared, lazily built per conductor. Pointers stay valid for the process.
const CycField* cyc_field(int n);

int euler_phi(int n);
std::vector<Rat> cyclotomic_polynomial(int n);

struct Cyc {
  const CycField* F = nullptr;
  std::vector<Rat> c;  // length F->deg
};

Cyc cyc_zero(const CycField* F);
Cyc cyc_one(const CycField* F);
Cyc cyc_from_rat(const CycField* F, const Rat& r);
Cyc cyc_zeta_pow(const CycField* F, long k);  // zeta_n^k
Cyc cyc_add(const Cyc& a, const Cyc& b);
Cyc cyc_sub(const Cyc& a, const Cyc& b);
Cyc cyc_neg(const Cyc& a);
Cyc cyc_mul(const Cyc& a, const Cyc& b);
Cyc cyc_inv(const Cyc& a);
bool cyc_is_zero(const Cyc& a);
bool cyc_eq(const Cyc& a, const Cyc& b);
Cyc cyc_galois(const Cyc& a, long j);  // zeta -> zeta^j, gcd(j, n) = 1
std::optional<Rat> cyc_to_rat(const Cyc& a);
// Map an element of Q(zeta_m) into Q(zeta_n) via zeta_m = zeta_n^(n/m); m | n.
Cyc cyc_embed(const Cyc& a, const CycField* target);

// ---------------------------------------------------------------------------
// Quadratic field Q(sqrt(d)), d squarefree, d != 0, 1.
// ---------------------------------------------------------------------------

struct Quad {
  long long d = 0;
  Rat a, b;  // a + b*sqrt(d)
};

long long squarefree_kernel(long long d, long long* square_part = nullptr);

Quad quad_make(long long d, const Rat& a, const Rat& b);  // normalizes d
Quad quad_add(const Quad& x, const Quad& y);
Quad quad_sub(const Quad& x, const Quad& y);
Quad quad_neg(const Quad& x);
Quad quad_mul(const Quad& x, const Quad& y);
Quad quad_inv(const Quad& x);
Quad quad_conj(const Quad& x);
bool quad_is_zero(const Quad& x);
bool quad_eq(const Quad& x, const Quad& y);

// ---------------------------------------------------------------------------
// Finite field GF(p^k): polynomials over Z/p modulo the lexicographically
// least monic irreducible of degree k (coefficients compared from the
// constant term upward).
// ---------------------------------------------------------------------------

struct GFField {
  uint32_t p = 0;
  int k = 1;
  std::vector<uint32_t> modulus;  // monic, length k+1
};

const GFField* gf_field(uint32_t p, int k);

struct GFel {
  const GFField* F = nullptr;
  std::vector<uint32_t> c;  // length k, coefficients in [0, p)
};

GFel gf_zero(const GFField* F);
GFel gf_one(const GFField* F);
GFel gf_from_int(const GFField* F, long v);
GFel gf_gen(const GFField* F);  // the class of x
GFel gf_add(const GFel& a, const GFel& b);
GFel gf_sub(const GFel& a, const GFel& b);
GFel gf_neg(const GFel& a);
GFel gf_mul(const GFel& a, const GFel& b);
GFel gf_inv(const GFel& a);
GFel gf_pow(const GFel& a, const Int& e);
GFel gf_frobenius(const GFel& a, int times);  // x -> x^(p^times)
bool gf_is_zero(const GFel& a);
bool gf_eq(const GFel& a, const GFel& b);
// Index of a in the fixed enumeration of GF(p^k): coefficient vectors read as
// base-p integers, constant term least significant.
uint64_t gf_index(const GFel& a);
GFel gf_from_index(const GFField* F, uint64_t idx);

// ---------------------------------------------------------------------------
// FieldElement: one exact scalar from whichever L a tower works in.
// ---------------------------------------------------------------------------

using FEl = std::variant<Rat, Quad, Cyc, GFel>;

FEl fe_add(const FEl& a, const FEl& b);
FEl fe_sub(const FEl& a, const FEl& b);
FEl fe_neg(const FEl& a);
FEl fe_mul(const FEl& a, const FEl& b);
FEl fe_inv(const FEl& a);
bool fe_is_zero(const FEl& a);
bool fe_eq(const FEl& a, const FEl& b);
std::string fe_to_string(const FEl& a);

// ---------------------------------------------------------------------------
// FieldTower: K, L, and Gamma = Gal(L/K) with explicit automorphisms.
// Gamma element 0 is always the identity.
// ---------------------------------------------------------------------------

enum class TowerKind { Quadratic, Cyclotomic, Finite, Archimedean };

struct GaloisElement {
  int index = 0;  // index into the tower's gamma list
};

struct FieldTower {
  TowerKind kind;

  // Quadratic: L = Q(sqrt(d))/Q, gamma = {id, conj}.
  long long d = 0;

  // Cyclotomic: L = Q(zeta_n), Gamma = subgroup of (Z/n)^x, K its fixed field.
  int n = 0;
  std::vector<int> exponents;  // gamma index -> exponent, exponents[0] = 1

  // Finite: L = GF(p^k)/GF(p), gamma index i acts as Frobenius^i.
  uint32_t p = 0;
  int k = 1;

  int gamma_order = 1;   // = [L:K]
  int dimQ_L = 1;        // dim of L over the prime field (Q or F_p)
  int dimQ_K = 1;        // dim of K over the prime field
  // Q-basis (resp. F_p-basis) of K inside L, as elements of L; the
  // fixed-field witness of the tower invariant.
  std::vector<FEl> K_basis;

  int compose(int g1, int g2) const;  // gamma group law
  int inverse(int g) const;
  FEl zero() const;
  FEl one() const;
  FEl from_rat(const Rat& r) const;
  bool is_archimedean() const { return kind == TowerKind::Archimedean; }

  // Coordinates of x in L as a vector over the prime field, and back.
  std::vector<Rat> coordsQ(const FEl& x) const;        // char 0
  FEl from_coordsQ(const std::vector<Rat>& v) const;   // char 0
  std::vector<uint32_t> coordsP(const FEl& x) const;   // finite
  FEl from_coordsP(const std::vector<uint32_t>& v) const;

  std::string describe() const;
};

FieldTower make_quadratic_tower(long long d);
FieldTower make_cyclotomic_tower(int n, const std::vector<int>& subgroup_gens);
FieldTower make_finite_tower(uint32_t p, int k);
FieldTower make_archimedean_tower();

// g(x) for x in the tower's L. Throws SpecError on a tower mismatch.
FEl galois_apply(const FieldTower& T, GaloisElement g, const FEl& x);

// prod_{g in Gamma} g(x); the result is verified to be Gamma-fixed.
FEl norm_L_over_K(const FieldTower& T, const FEl& x);

// K-dimension of the fixed field of the subgroup generated by `subset`,
// computed as the nullspace dimension of the fixed-point linear system.
int fixed_subfield_dimension(const FieldTower& T,
                             const std::vector<GaloisElement>& subset);

// sqrt(d) for squarefree d expressed in Q(zeta_m); requires cond(d) | m where
// cond(d) = |d| if d = 1 mod 4 and 4|d| otherwise. The result squares to d.
Cyc embed_sqrt(long long d, const CycField* F);
long long quadratic_conductor(long long d);

// Smallest conductor field containing both the tower's L and Q(zeta_m)
// (char-0 towers only), together with maps into it.
struct Compositum {
  const CycField* M = nullptr;
  int m = 1;
};
Compositum compositum_with(const FieldTower& T, int m);
Cyc embed_into(const FieldTower& T, const FEl& x, const CycField* M);

// Parsing / printing of L-elements ("-1/2", "zeta12^5+1", "sqrt-3",
// "2*sqrt5-1/3", "t^2+2*t" for finite fields).
FEl parse_field_element(const FieldTower& T, const std::string& s);
std::string field_element_to_string(const FieldTower& T, const FEl& x);

}  // namespace semilin
