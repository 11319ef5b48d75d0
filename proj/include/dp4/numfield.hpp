#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

// Number field Q[x]/(m) for a monic polynomial m of small degree.
// Irreducibility is an input contract; it is checked for degree <= 2
// (discriminant test). Elements are coefficient vectors of length deg(m).
class NumberField {
 public:
  NumberField(std::vector<Rat> min_poly, std::string name);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rat>& min_poly() const { return min_poly_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<Rat> min_poly_;  // dense, low -> high, monic
  std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Rat> min_poly, std::string name = "");
const FieldPtr& rationals();

bool same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElement {
 public:
  FieldElement();  // 0 in Q
  FieldElement(FieldPtr field, std::vector<Rat> coeffs);

  static FieldElement from_rat(const FieldPtr& field, const Rat& v);
  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;  // all non-constant coefficients zero
  const Rat& rational_part() const { return c_[0]; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement inv() const;  // throws std::domain_error on zero
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;  // lexicographic, for containers

  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<Rat> c_;
};

inline FieldElement operator*(const Rat& s, const FieldElement& e) { return e * s; }

// Generator class of x (zero in the degree-1 field).
FieldElement field_gen(const FieldPtr& field);

// Ring map F -> target sending F's generator to gen_image; exact.
FieldElement embed(const FieldElement& e, const FieldPtr& target,
                   const FieldElement& gen_image);

// Exact square root in fields of degree <= 2; nullopt if no root in the field
// (or degree > 2, where no algorithm is provided).
std::optional<FieldElement> field_sqrt(const FieldElement& e);

// ---------------------------------------------------------------------------
// Dense polynomials over a field, low -> high. Used for minimal polynomials,
// etale algebras and discriminants.
using FPoly = std::vector<FieldElement>;

FPoly fp_from_rats(const FieldPtr& field, const std::vector<Rat>& coeffs);
FPoly fp_trim(FPoly p);
int fp_deg(const FPoly& p);  // -1 for zero
bool fp_is_zero(const FPoly& p);
FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_neg(const FPoly& a);
FPoly fp_mul(const FPoly& a, const FPoly& b);
std::pair<FPoly, FPoly> fp_divmod(const FPoly& a, const FPoly& b);
FPoly fp_mod(const FPoly& a, const FPoly& b);
FPoly fp_gcd(const FPoly& a, const FPoly& b);  // monic
// g = s*a + t*b with g monic gcd
void fp_xgcd(const FPoly& a, const FPoly& b, FPoly& g, FPoly& s, FPoly& t);
FPoly fp_deriv(const FPoly& a);
FieldElement fp_eval(const FPoly& a, const FieldElement& x);
FPoly fp_scale(const FPoly& a, const FieldElement& s);

// ---------------------------------------------------------------------------
// Projective line and Moebius transformations.

// Point (x : y), not both zero, normalized so the first nonzero coordinate
// is one.
struct P1Point {
  FieldElement x, y;

  static P1Point make(const FieldElement& x, const FieldElement& y);
  bool operator==(const P1Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
  bool operator<(const P1Point& o) const { return x < o.x || (x == o.x && y < o.y); }
  std::string str() const;
};

struct Mobius {
  // row-major [[a,b],[c,d]], nonzero determinant
  std::array<FieldElement, 4> m;

  static Mobius make(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
  static Mobius identity(const FieldPtr& field);
  FieldElement det() const;
  Mobius normalized() const;  // first nonzero entry scaled to 1
  bool operator==(const Mobius& o) const { return m == o.m; }
};

Mobius mobius_mul(const Mobius& a, const Mobius& b);
Mobius mobius_inverse(const Mobius& a);
Mobius mobius_lift(const Mobius& a, const FieldPtr& target, const FieldElement& gen_image);
P1Point mobius_apply(const Mobius& m, const P1Point& p);

// Projective order: least n >= 1 with m^n scalar; nullopt past the cap.
std::optional<int> mobius_order(const Mobius& m, int cap = 60);

// Eigenvector classes of a non-scalar map; the matrix must already live over
// the splitting field. Throws std::domain_error when the eigenvalues do not
// lie in the field (degree <= 2 fields only).
std::vector<P1Point> fixed_points(const Mobius& m);

// Unique projective map with p_i -> q_i for three distinct points each way.
Mobius mobius_from_3pts(const P1Point& p1, const P1Point& p2, const P1Point& p3,
                        const P1Point& q1, const P1Point& q2, const P1Point& q3);

struct PointStabilizer {
  std::vector<Mobius> maps;
  std::vector<std::array<int, 5>> perms;  // perms[k][i] = sigma(i), 0-indexed
};

// Subgroup of PGL2 stabilizing five distinct points, via three-point
// interpolation over all 120 candidate permutations.
PointStabilizer stabilizer_of_5pts(const std::array<P1Point, 5>& pts);

// Moebius map sending the set A onto the set B, if the two five-point sets
// are projectively equivalent.
std::optional<Mobius> point_set_equivalent(const std::vector<P1Point>& a,
                                           const std::vector<P1Point>& b);

}  // namespace dp4
