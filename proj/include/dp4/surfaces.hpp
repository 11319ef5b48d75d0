#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp4/numfield.hpp"

namespace dp4 {

// Quadratic form on P^4 via its symmetric gram matrix; a cross term
// c*u_a*u_b contributes c/2 to the (a,b) and (b,a) entries.
class Quadric {
 public:
  static Quadric from_gram(FieldPtr field, std::vector<std::vector<FieldElement>> gram);
  static Quadric from_diagonal(const FieldPtr& field, std::vector<FieldElement> diag);
  static Quadric zero(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const FieldElement& at(int i, int j) const { return g_[i * 5 + j]; }
  void set(int i, int j, const FieldElement& v);  // keeps symmetry

  FieldElement eval(const std::array<FieldElement, 5>& u) const;
  bool is_zero() const;
  Quadric scaled(const FieldElement& s) const;
  Quadric plus(const Quadric& o) const;
  bool operator==(const Quadric& o) const { return g_ == o.g_; }

 private:
  FieldPtr field_;
  std::vector<FieldElement> g_;  // 25, row-major, symmetric
};

// Pencil spanned by two linearly independent quadrics.
struct QuadricPencil {
  Quadric q1, q2;

  static QuadricPencil make(Quadric q1, Quadric q2);  // validates independence
  const FieldPtr& field() const { return q1.field(); }
};

// Etale algebra k[x]/(P) for monic separable P of degree five; elements are
// polynomials of degree < 5 over k.
class EtaleAlgebra {
 public:
  static EtaleAlgebra make(FieldPtr k, FPoly p);

  const FieldPtr& base() const { return k_; }
  const FPoly& modulus() const { return p_; }
  FPoly reduce(const FPoly& a) const { return fp_mod(a, p_); }
  FPoly mul(const FPoly& a, const FPoly& b) const { return fp_mod(fp_mul(a, b), p_); }

  // trace of the multiplication-by-a matrix in the power basis
  FieldElement trace(const FPoly& a) const;
  // inverse mod P; throws std::domain_error for zero divisors
  FPoly inverse(const FPoly& a) const;

 private:
  EtaleAlgebra(FieldPtr k, FPoly p) : k_(std::move(k)), p_(std::move(p)) {}
  FieldPtr k_;
  FPoly p_;
};

inline FieldElement et_trace(const EtaleAlgebra& alg, const FPoly& a) { return alg.trace(a); }
inline FPoly et_inv(const EtaleAlgebra& alg, const FPoly& a) { return alg.inverse(a); }

// Gram entry (a,b) of q_j is Tr(lambda P'(theta)^{-1} theta^{j+a+b}).
QuadricPencil trace_quadrics(const EtaleAlgebra& alg, const FPoly& lambda);

// Chinese-remainder reconstruction: the element congruent to parts[i] modulo
// factors[i]; the factors must multiply to the modulus.
FPoly component_lambda(const EtaleAlgebra& alg, const std::vector<FPoly>& factors,
                       const std::vector<FPoly>& parts);

// Binary quintic c[k] mu^(5-k) la^k.
struct BinaryQuintic {
  FieldPtr field;
  std::array<FieldElement, 6> c;

  bool operator==(const BinaryQuintic& o) const { return c == o.c; }
};

// det(mu G1 + la G2); nullopt when identically zero.
std::optional<BinaryQuintic> discriminant(const QuadricPencil& p);

// Smoothness criterion: the discriminant is a separable binary form of
// degree five (no repeated root, including at infinity).
bool is_smooth(const QuadricPencil& p);

BinaryQuintic binform_from_points(const FieldPtr& field, const std::vector<P1Point>& pts);
bool binform_proportional(const BinaryQuintic& a, const BinaryQuintic& b);
BinaryQuintic binform_lift(const BinaryQuintic& f, const FieldPtr& target,
                           const FieldElement& gen_image);
FieldElement binform_eval(const BinaryQuintic& f, const P1Point& p);
bool binform_separable(const BinaryQuintic& f);

// Invertible projective map of P^4, stored as the raw matrix (relation
// checks compare exactly; closure uses normalized representatives).
class ProjMap5 {
 public:
  static ProjMap5 make(FieldPtr field, std::vector<std::vector<FieldElement>> rows);
  static ProjMap5 identity(const FieldPtr& field);
  static ProjMap5 diagonal(const FieldPtr& field, std::vector<FieldElement> diag);

  const FieldPtr& field() const { return field_; }
  const FieldElement& at(int i, int j) const { return m_[i * 5 + j]; }
  ProjMap5 compose(const ProjMap5& o) const;  // this * o
  ProjMap5 inverse() const;
  ProjMap5 normalized() const;
  bool operator==(const ProjMap5& o) const { return m_ == o.m_; }

 private:
  FieldPtr field_;
  std::vector<FieldElement> m_;
};

// Substitution u -> m u: gram -> m^T gram m.
Quadric apply_map(const ProjMap5& m, const Quadric& q);

struct Mat2 {
  std::array<FieldElement, 4> m;  // [[a,b],[c,d]]
  bool operator==(const Mat2& o) const { return m == o.m; }
};

// Change-of-pencil matrix T with (q1, q2) pulled back by m equal to
// T * (q1, q2) as form vectors; absent when the span moves.
std::optional<Mat2> preserves_pencil(const ProjMap5& m, const QuadricPencil& p);

// Order of the generated group of projective transformations; throws
// std::runtime_error past the cap.
int group_order_of_maps(const std::vector<ProjMap5>& gens, int cap = 10000);

bool point_on(const QuadricPencil& p, const std::array<FieldElement, 5>& pt);

// Equivalence by coordinate rescaling: diagonal D and invertible T with
// T * (D^T q_i D) = p2 exactly.
struct PencilWitness {
  std::vector<FieldElement> diag;  // 5 entries
  Mat2 t;
};

QuadricPencil witness_transform(const PencilWitness& w, const QuadricPencil& p);
std::optional<PencilWitness> pencil_equivalent(const QuadricPencil& p1,
                                               const QuadricPencil& p2);

// ---------------------------------------------------------------------------
// The example catalog: six surfaces with generators, expected pencil
// relations, group orders, discriminant data and trace-form fixtures.

struct TraceFixture {
  std::vector<FPoly> factors;  // CRT order; product is the modulus
  // substitute x -> s - x in degree-2 lambda parts before CRT (component
  // identification via the conjugate root)
  bool conj_quad_lambda = false;
  std::vector<FPoly> lambda_parts;
  ProjMap5 alignment;  // coordinate map V; pencils are aligned via V^{-1}
  PencilWitness expected_witness;
};

struct SurfaceRecord {
  std::string name;
  FieldPtr field;
  QuadricPencil pencil;
  std::vector<ProjMap5> sign_gens;   // k-defined diagonal sign maps
  std::vector<ProjMap5> named_gens;  // the printed generators
  std::vector<Mat2> expected_rel;    // pencil relation per named generator
  int expected_group_order = 0;
  FieldPtr ext;                 // extension for root-set checks
  FieldElement base_gen_image;  // image of the base generator in ext
  std::vector<P1Point> printed_points;  // over ext
  std::vector<P1Point> expected_roots;  // over ext
  std::optional<TraceFixture> trace;
  std::vector<std::array<FieldElement, 5>> surface_points;
};

const std::vector<std::string>& catalog_names();
SurfaceRecord catalog(const std::string& name);
SurfaceRecord catalog_c2(const Rat& a);  // free parameter, a not in {0, 1, -1, 3, -3}

struct SurfaceCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SurfaceCheck> verify_surface(const SurfaceRecord& rec);
bool all_pass(const std::vector<SurfaceCheck>& checks);

// Aligned trace pencil of a fixture (trace_quadrics pulled to the record's
// printed coordinates); exposed for tests.
QuadricPencil aligned_trace_pencil(const SurfaceRecord& rec,
                                   const std::vector<FPoly>& lambda_parts);
FPoly fixture_lambda(const SurfaceRecord& rec, const std::vector<FPoly>& lambda_parts);

}  // namespace dp4
