#include "doctest.h"

#include <set>

#include "dp4/numfield.hpp"

using namespace dp4;

namespace {

const FieldPtr& golden() {
  // x^2 - x - 1, generator phi
  static const FieldPtr f = make_field({rat(-1), rat(-1), rat(1)}, "Q(phi)");
  return f;
}
const FieldPtr& qi() {
  static const FieldPtr f = make_field({rat(1), rat(0), rat(1)}, "Q(i)");
  return f;
}
const FieldPtr& qe3() {
  static const FieldPtr f = make_field({rat(1), rat(1), rat(1)}, "Q(eps3)");
  return f;
}

FieldElement fr(const FieldPtr& k, long n, long d = 1) {
  return FieldElement::from_rat(k, rat(n, d));
}

P1Point pt(const FieldElement& x, const FieldElement& y) { return P1Point::make(x, y); }
P1Point ptr(const FieldPtr& k, long xn, long xd, long yn, long yd) {
  return P1Point::make(fr(k, xn, xd), fr(k, yn, yd));
}

}  // namespace

TEST_CASE("field arithmetic") {
  FieldElement phi = field_gen(golden());
  CHECK(phi * phi == phi + FieldElement::one(golden()));
  CHECK(phi.inv() == phi - FieldElement::one(golden()));
  CHECK(phi * phi.inv() == FieldElement::one(golden()));

  FieldElement i = field_gen(qi());
  CHECK(i * i == fr(qi(), -1));
  CHECK_THROWS_AS(FieldElement::zero(qi()).inv(), std::domain_error);

  // reducible quadratic modulus is rejected
  CHECK_THROWS_AS(make_field({rat(-1), rat(0), rat(1)}), std::invalid_argument);
  // rationals: plain fraction arithmetic
  CHECK(fr(rationals(), 1, 3) + fr(rationals(), 1, 6) == fr(rationals(), 1, 2));
}

TEST_CASE("embedding into a bigger field") {
  // Q(zeta12): i = z^3, eps3 = z^2 - 1
  FieldPtr z12 = make_field({rat(1), rat(0), rat(-1), rat(0), rat(1)}, "Q(zeta12)");
  FieldElement z = field_gen(z12);
  FieldElement i_img = z * z * z;
  CHECK(i_img * i_img == fr(z12, -1));
  FieldElement e3_img = z * z - FieldElement::one(z12);
  CHECK(e3_img * e3_img + e3_img + FieldElement::one(z12) == FieldElement::zero(z12));

  FieldElement x = field_gen(qi()) * rat(2) + fr(qi(), 3);  // 3 + 2i
  FieldElement lifted = embed(x, z12, i_img);
  CHECK(lifted == i_img * rat(2) + fr(z12, 3));
}

TEST_CASE("square roots") {
  CHECK(field_sqrt(fr(rationals(), 25, 9)).has_value());
  CHECK(*field_sqrt(fr(rationals(), 25, 9)) == fr(rationals(), 5, 3));
  CHECK_FALSE(field_sqrt(fr(rationals(), 2)).has_value());

  auto r = field_sqrt(fr(qe3(), -3));
  REQUIRE(r.has_value());
  CHECK(*r * *r == fr(qe3(), -3));

  auto s = field_sqrt(fr(qi(), -4));
  REQUIRE(s.has_value());
  CHECK(*s * *s == fr(qi(), -4));

  CHECK_FALSE(field_sqrt(fr(qi(), 2)).has_value());
  CHECK(field_sqrt(FieldElement::zero(qi()))->is_zero());

  // non-rational square in Q(phi): (1+phi)^2 = 2 + 3 phi
  FieldElement phi = field_gen(golden());
  FieldElement sq = (FieldElement::one(golden()) + phi) * (FieldElement::one(golden()) + phi);
  auto t = field_sqrt(sq);
  REQUIRE(t.has_value());
  CHECK(*t * *t == sq);
}

TEST_CASE("polynomials over a field") {
  FPoly p = fp_from_rats(rationals(), {rat(-6), rat(11), rat(-6), rat(1)});
  FPoly q = fp_from_rats(rationals(), {rat(-1), rat(1)});
  auto [quo, rem] = fp_divmod(p, q);
  CHECK(fp_is_zero(rem));
  CHECK(fp_deg(quo) == 2);
  CHECK(fp_eval(p, fr(rationals(), 2)).is_zero());
  CHECK(fp_deg(fp_gcd(p, fp_deriv(p))) == 0);

  FPoly g, s, t;
  fp_xgcd(p, q, g, s, t);
  CHECK(fp_deg(g) == 1);  // x-1 divides p
  CHECK(fp_eval(g, fr(rationals(), 1)).is_zero());
  // Bezout identity s*p + t*q = g
  CHECK(fp_add(fp_mul(s, p), fp_mul(t, q)) == g);
}

TEST_CASE("gcd detects common factors") {
  // p = (x-1)(x-2), q = (x-1)(x-3)
  FPoly p = fp_from_rats(rationals(), {rat(2), rat(-3), rat(1)});
  FPoly q = fp_from_rats(rationals(), {rat(3), rat(-4), rat(1)});
  FPoly g = fp_gcd(p, q);
  CHECK(fp_deg(g) == 1);
  CHECK(fp_eval(g, fr(rationals(), 1)).is_zero());
}

TEST_CASE("projective points normalize") {
  FieldElement i = field_gen(qi());
  P1Point a = pt(i, FieldElement::one(qi()));
  CHECK(a.x == FieldElement::one(qi()));
  CHECK(a.y == -i);  // (i : 1) ~ (1 : -i)
  CHECK_THROWS_AS(pt(FieldElement::zero(qi()), FieldElement::zero(qi())),
                  std::invalid_argument);
}

TEST_CASE("mobius basics") {
  FieldPtr q = rationals();
  Mobius h2 = Mobius::make(fr(q, 0), fr(q, 1), fr(q, 1), fr(q, 0));
  CHECK(mobius_apply(h2, ptr(q, 2, 1, 3, 1)) == ptr(q, 3, 1, 2, 1));
  CHECK(mobius_apply(Mobius::identity(q), ptr(q, 7, 1, 1, 1)) == ptr(q, 7, 1, 1, 1));

  Mobius h3 = Mobius::make(fr(q, 0), fr(q, -1), fr(q, 1), fr(q, -1));
  CHECK(mobius_apply(h3, ptr(q, 1, 1, 0, 1)) == ptr(q, 0, 1, 1, 1));

  CHECK(mobius_order(Mobius::identity(q)) == 1);
  CHECK(mobius_order(h2) == 2);
  CHECK(mobius_order(h3) == 3);

  Mobius h4p = Mobius::make(fr(q, 1), fr(q, 1), fr(q, -1), fr(q, 1));
  CHECK(mobius_order(h4p) == 4);

  FieldElement phi = field_gen(golden());
  Mobius h5 = Mobius::make(FieldElement::one(golden()), FieldElement::one(golden()),
                           -FieldElement::one(golden()), phi);
  CHECK(mobius_order(h5) == 5);

  // parabolic map has infinite projective order
  Mobius shear = Mobius::make(fr(q, 1), fr(q, 1), fr(q, 0), fr(q, 1));
  CHECK_FALSE(mobius_order(shear).has_value());

  CHECK_THROWS_AS(Mobius::make(fr(q, 1), fr(q, 2), fr(q, 2), fr(q, 4)),
                  std::invalid_argument);
}

TEST_CASE("fixed points") {
  FieldElement i = field_gen(qi());
  Mobius h4p = mobius_lift(
      Mobius::make(fr(rationals(), 1), fr(rationals(), 1), fr(rationals(), -1),
                   fr(rationals(), 1)),
      qi(), i);
  auto fps = fixed_points(h4p);
  std::set<P1Point> got(fps.begin(), fps.end());
  std::set<P1Point> expected = {pt(FieldElement::one(qi()), -i), pt(-i, FieldElement::one(qi()))};
  CHECK(got == expected);
  for (const auto& p : fps) CHECK(mobius_apply(h4p, p) == p);

  FieldElement e3 = field_gen(qe3());
  Mobius h3 = mobius_lift(
      Mobius::make(fr(rationals(), 0), fr(rationals(), -1), fr(rationals(), 1),
                   fr(rationals(), -1)),
      qe3(), e3);
  auto fps3 = fixed_points(h3);
  std::set<P1Point> got3(fps3.begin(), fps3.end());
  std::set<P1Point> expected3 = {pt(FieldElement::one(qe3()), -e3),
                                 pt(-e3, FieldElement::one(qe3()))};
  CHECK(got3 == expected3);

  Mobius diag = Mobius::make(fr(rationals(), 1), fr(rationals(), 0), fr(rationals(), 0),
                             fr(rationals(), 2));
  auto fd = fixed_points(diag);
  std::set<P1Point> gotd(fd.begin(), fd.end());
  std::set<P1Point> expd = {ptr(rationals(), 1, 1, 0, 1), ptr(rationals(), 0, 1, 1, 1)};
  CHECK(gotd == expd);

  // eigenvalues outside the field
  Mobius rot = Mobius::make(fr(rationals(), 0), fr(rationals(), -1), fr(rationals(), 1),
                            fr(rationals(), 0));
  CHECK_THROWS_AS(fixed_points(rot), std::domain_error);
}

TEST_CASE("three point interpolation") {
  FieldPtr q = rationals();
  P1Point z = ptr(q, 0, 1, 1, 1), inf = ptr(q, 1, 1, 0, 1), one = ptr(q, 1, 1, 1, 1);
  Mobius id = mobius_from_3pts(z, inf, one, z, inf, one);
  CHECK(id.normalized() == Mobius::identity(q).normalized());

  Mobius m = mobius_from_3pts(z, inf, one, inf, z, one);
  Mobius h2 = Mobius::make(fr(q, 0), fr(q, 1), fr(q, 1), fr(q, 0));
  CHECK(m.normalized() == h2.normalized());

  P1Point p4 = ptr(q, 5, 1, 1, 1), p5 = ptr(q, 7, 2, 1, 1), p6 = ptr(q, 9, 4, 1, 1);
  Mobius f = mobius_from_3pts(z, inf, one, p4, p5, p6);
  Mobius g = mobius_from_3pts(p4, p5, p6, z, inf, one);
  CHECK(mobius_mul(f, g).normalized() == Mobius::identity(q).normalized());

  CHECK_THROWS_AS(mobius_from_3pts(z, z, one, inf, z, one), std::invalid_argument);
}

namespace {

struct IsoType {
  size_t order;
  bool abelian;
  int max_elt_order;
};

IsoType iso_type(const PointStabilizer& st) {
  IsoType t{st.maps.size(), true, 1};
  for (size_t a = 0; a < st.maps.size(); ++a) {
    auto o = mobius_order(st.maps[a]);
    t.max_elt_order = std::max(t.max_elt_order, o.value_or(0));
    for (size_t b = a + 1; b < st.maps.size(); ++b) {
      if (!(mobius_mul(st.maps[a], st.maps[b]).normalized() ==
            mobius_mul(st.maps[b], st.maps[a]).normalized()))
        t.abelian = false;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("stabilizers of five-point sets") {
  FieldPtr q = rationals();

  // swap-symmetric rational set: {2, 1/2, 1, 3, 1/3}
  std::array<P1Point, 5> set_c2 = {ptr(q, 2, 1, 1, 1), ptr(q, 1, 1, 2, 1),
                                   ptr(q, 1, 1, 1, 1), ptr(q, 3, 1, 1, 1),
                                   ptr(q, 1, 1, 3, 1)};
  auto st2 = iso_type(stabilizer_of_5pts(set_c2));
  CHECK(st2.order == 2);

  FieldElement e3 = field_gen(qe3());
  std::array<P1Point, 5> set_s3 = {
      P1Point::make(FieldElement::one(qe3()), FieldElement::zero(qe3())),
      P1Point::make(FieldElement::zero(qe3()), FieldElement::one(qe3())),
      P1Point::make(FieldElement::one(qe3()), FieldElement::one(qe3())),
      P1Point::make(-e3, FieldElement::one(qe3())),
      P1Point::make(FieldElement::one(qe3()), -e3)};
  auto st3 = iso_type(stabilizer_of_5pts(set_s3));
  CHECK(st3.order == 6);
  CHECK_FALSE(st3.abelian);

  FieldElement i = field_gen(qi());
  std::array<P1Point, 5> set_c4 = {
      ptr(qi(), 2, 1, 1, 1), ptr(qi(), 2, 1, -1, 1),
      P1Point::make(FieldElement::one(qi()), FieldElement::zero(qi())),
      P1Point::make(fr(qi(), 2), i), P1Point::make(fr(qi(), 2), -i)};
  auto st4 = iso_type(stabilizer_of_5pts(set_c4));
  CHECK(st4.order == 4);
  CHECK(st4.abelian);
  CHECK(st4.max_elt_order == 4);  // cyclic

  FieldElement phi = field_gen(golden());
  std::array<P1Point, 5> set_d5 = {
      P1Point::make(phi, FieldElement::one(golden())),
      P1Point::make(FieldElement::one(golden()), phi),
      ptr(golden(), 1, 1, -1, 1),
      P1Point::make(FieldElement::zero(golden()), FieldElement::one(golden())),
      P1Point::make(FieldElement::one(golden()), FieldElement::zero(golden()))};
  auto st5 = iso_type(stabilizer_of_5pts(set_d5));
  CHECK(st5.order == 10);
  CHECK_FALSE(st5.abelian);
  CHECK(st5.max_elt_order == 5);

  // a set with trivial stabilizer
  std::array<P1Point, 5> plain = {ptr(q, 0, 1, 1, 1), ptr(q, 1, 1, 0, 1),
                                  ptr(q, 1, 1, 1, 1), ptr(q, 2, 1, 1, 1),
                                  ptr(q, 5, 1, 1, 1)};
  CHECK(stabilizer_of_5pts(plain).maps.size() == 1);

  // the permutation representation is faithful: identity permutation only
  // for the identity map
  auto full = stabilizer_of_5pts(set_d5);
  for (size_t k = 0; k < full.maps.size(); ++k) {
    bool id_perm = true;
    for (int i = 0; i < 5; ++i) id_perm = id_perm && full.perms[k][i] == i;
    CHECK(id_perm == (full.maps[k] == Mobius::identity(golden()).normalized()));
  }

  // closure under composition
  for (const auto& a : full.maps)
    for (const auto& b : full.maps) {
      Mobius c = mobius_mul(a, b).normalized();
      CHECK(std::count(full.maps.begin(), full.maps.end(), c) == 1);
    }
}

TEST_CASE("point set equivalence") {
  FieldPtr q = rationals();
  std::vector<P1Point> a = {ptr(q, 0, 1, 1, 1), ptr(q, 1, 1, 0, 1), ptr(q, 1, 1, 1, 1),
                            ptr(q, 2, 1, 1, 1), ptr(q, 3, 1, 1, 1)};
  CHECK(point_set_equivalent(a, a).has_value());

  // translate by 7: still equivalent
  std::vector<P1Point> b;
  Mobius shift = Mobius::make(fr(q, 1), fr(q, 7), fr(q, 0), fr(q, 1));
  for (const auto& p : a) b.push_back(mobius_apply(shift, p));
  auto w = point_set_equivalent(a, b);
  REQUIRE(w.has_value());
  std::set<P1Point> img, tgt(b.begin(), b.end());
  for (const auto& p : a) img.insert(mobius_apply(*w, p));
  CHECK(img == tgt);

  // different cross ratios: not equivalent
  std::vector<P1Point> c = {ptr(q, 0, 1, 1, 1), ptr(q, 1, 1, 0, 1), ptr(q, 1, 1, 1, 1),
                            ptr(q, 2, 1, 1, 1), ptr(q, 7, 1, 1, 1)};
  CHECK_FALSE(point_set_equivalent(a, c).has_value());
}
