#include "dp4/numfield.hpp"

#include <algorithm>
#include <sstream>

namespace dp4 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// polynomial helpers over Rat, dense low -> high
using RPoly = std::vector<Rat>;

void rtrim(RPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int rdeg(const RPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RPoly rmul(const RPoly& a, const RPoly& b) {
  RPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  rtrim(out);
  return out;
}

RPoly rsub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rtrim(a);
  return a;
}

// a = q*b + r
void rdivmod(RPoly a, const RPoly& b, RPoly& q, RPoly& r) {
  int db = rdeg(b);
  if (db < 0) fail("polynomial division by zero");
  q.assign(std::max<int>(1, static_cast<int>(a.size()) - db), Rat(0));
  while (rdeg(a) >= db) {
    int da = rdeg(a);
    Rat c = a[da] / b[db];
    q[da - db] += c;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
  }
  rtrim(a);
  rtrim(q);
  r = a;
}

// monic gcd plus Bezout s with s*a == g (mod b)
void rxgcd(const RPoly& a, const RPoly& b, RPoly& g, RPoly& s) {
  RPoly r0 = a, r1 = b, s0 = {Rat(1)}, s1 = {Rat(0)};
  rtrim(r0);
  rtrim(r1);
  while (rdeg(r1) >= 0) {
    RPoly q, r;
    rdivmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    RPoly snew = rsub(s0, rmul(q, s1));
    s0 = s1;
    s1 = snew;
  }
  g = r0;
  s = s0;
  int dg = rdeg(g);
  if (dg >= 0 && g[dg] != 1) {
    Rat lead = g[dg];
    for (auto& c : g) c /= lead;
    for (auto& c : s) c /= lead;
  }
}

}  // namespace

NumberField::NumberField(std::vector<Rat> min_poly, std::string name)
    : min_poly_(std::move(min_poly)), name_(std::move(name)) {
  if (min_poly_.size() < 2 || min_poly_.size() > 9)
    fail("NumberField: degree must be between 1 and 8");
  if (min_poly_.back() != 1) fail("NumberField: minimal polynomial must be monic");
  if (degree() == 2) {
    Rat disc = min_poly_[1] * min_poly_[1] - 4 * min_poly_[0];
    if (disc == 0 || rat_sqrt(disc).has_value())
      fail("NumberField: quadratic minimal polynomial is reducible");
  }
}

FieldPtr make_field(std::vector<Rat> min_poly, std::string name) {
  return std::make_shared<NumberField>(std::move(min_poly), std::move(name));
}

const FieldPtr& rationals() {
  static const FieldPtr q = make_field({Rat(0), Rat(1)}, "Q");
  return q;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  return a && b && a->min_poly() == b->min_poly();
}

FieldElement::FieldElement() : field_(rationals()), c_{Rat(0)} {}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_->degree())
    fail("FieldElement: coefficient count must equal the field degree");
}

FieldElement FieldElement::from_rat(const FieldPtr& field, const Rat& v) {
  std::vector<Rat> c(field->degree(), Rat(0));
  c[0] = v;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::zero(const FieldPtr& field) { return from_rat(field, Rat(0)); }
FieldElement FieldElement::one(const FieldPtr& field) { return from_rat(field, Rat(1)); }

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) fail("field mismatch in +");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) fail("field mismatch in -");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) fail("field mismatch in *");
  const int d = field_->degree();
  if (d == 1) return FieldElement(field_, {c_[0] * o.c_[0]});
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  const auto& m = field_->min_poly();
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    Rat v = prod[k];
    prod[k] = 0;
    for (int j = 0; j < d; ++j) prod[k - d + j] -= v * m[j];
  }
  prod.resize(d);
  return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::operator*(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= s;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::domain_error("FieldElement::inv: division by zero");
  const int d = field_->degree();
  if (d == 1) return FieldElement(field_, {Rat(1) / c_[0]});
  RPoly g, s;
  rxgcd(c_, field_->min_poly(), g, s);
  if (rdeg(g) != 0)
    throw std::domain_error("FieldElement::inv: element not invertible (reducible modulus)");
  s.resize(d, Rat(0));
  return FieldElement(field_, std::move(s));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(field_, o.field_) && c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  for (size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return c_.size() < o.c_.size();
}

std::string FieldElement::str() const {
  if (field_->degree() == 1 || is_rational()) return rat_str(c_[0]);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rat_str(c_[i]);
  }
  os << "]";
  return os.str();
}

FieldElement field_gen(const FieldPtr& field) {
  if (field->degree() == 1) return FieldElement::from_rat(field, -field->min_poly()[0]);
  std::vector<Rat> c(field->degree(), Rat(0));
  c[1] = 1;
  return FieldElement(field, std::move(c));
}

FieldElement embed(const FieldElement& e, const FieldPtr& target,
                   const FieldElement& gen_image) {
  if (!same_field(gen_image.field(), target)) fail("embed: image not in the target field");
  FieldElement acc = FieldElement::zero(target);
  for (int i = static_cast<int>(e.coeffs().size()) - 1; i >= 0; --i)
    acc = acc * gen_image + FieldElement::from_rat(target, e.coeffs()[i]);
  return acc;
}

std::optional<FieldElement> field_sqrt(const FieldElement& e) {
  const FieldPtr& K = e.field();
  if (e.is_zero()) return FieldElement::zero(K);
  if (e.is_rational()) {
    if (auto r = rat_sqrt(e.rational_part())) return FieldElement::from_rat(K, *r);
    if (K->degree() != 2) return std::nullopt;
  }
  if (K->degree() != 2) return std::nullopt;
  // g^2 = -m0 - m1 g ; solve (u + v g)^2 = D0 + D1 g with v != 0:
  //   u = (D1 + m1 v^2) / (2v),  (m1^2-4m0) w^2 + (2 D1 m1 - 4 D0) w + D1^2 = 0
  // for w = v^2.
  const Rat m0 = K->min_poly()[0], m1 = K->min_poly()[1];
  const Rat D0 = e.coeffs()[0], D1 = e.coeffs()[1];
  const Rat A = m1 * m1 - 4 * m0;
  const Rat B = 2 * D1 * m1 - 4 * D0;
  const Rat C = D1 * D1;
  std::vector<Rat> ws;
  if (A == 0) {
    if (B != 0) ws.push_back(-C / B);
  } else {
    Rat disc = B * B - 4 * A * C;
    if (auto sd = rat_sqrt(disc)) {
      ws.push_back((-B + *sd) / (2 * A));
      ws.push_back((-B - *sd) / (2 * A));
    }
  }
  for (const Rat& w : ws) {
    if (sgn(w) <= 0) continue;
    auto v = rat_sqrt(w);
    if (!v || *v == 0) continue;
    Rat u = (D1 + m1 * w) / (2 * *v);
    FieldElement z(K, {u, *v});
    if (z * z == e) return z;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FPoly fp_from_rats(const FieldPtr& field, const std::vector<Rat>& coeffs) {
  FPoly p;
  p.reserve(coeffs.size());
  for (const Rat& c : coeffs) p.push_back(FieldElement::from_rat(field, c));
  return p;
}

FPoly fp_trim(FPoly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

int fp_deg(const FPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

bool fp_is_zero(const FPoly& p) { return fp_deg(p) < 0; }

FPoly fp_add(const FPoly& a, const FPoly& b) {
  FPoly out = a.size() >= b.size() ? a : b;
  const FPoly& small = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
  return fp_trim(std::move(out));
}

FPoly fp_neg(const FPoly& a) {
  FPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(-c);
  return out;
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
  const FieldPtr& K = a.empty() ? rationals() : a[0].field();
  FPoly out(a.size() + b.size() - 1, FieldElement::zero(K));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return fp_trim(std::move(out));
}

std::pair<FPoly, FPoly> fp_divmod(const FPoly& a, const FPoly& b) {
  const FieldPtr& K = a.empty() ? rationals() : a[0].field();
  FPoly r = fp_trim(a);
  int db = fp_deg(b);
  if (db < 0) fail("fp_divmod: division by zero polynomial");
  FPoly q(std::max<int>(1, static_cast<int>(r.size()) - db), FieldElement::zero(K));
  FieldElement lead_inv = b[db].inv();
  while (fp_deg(r) >= db) {
    int dr = fp_deg(r);
    FieldElement c = r[dr] * lead_inv;
    q[dr - db] = q[dr - db] + c;
    for (int j = 0; j <= db; ++j) r[dr - db + j] = r[dr - db + j] - c * b[j];
    r = fp_trim(std::move(r));
  }
  return {fp_trim(std::move(q)), r};
}

FPoly fp_mod(const FPoly& a, const FPoly& b) { return fp_divmod(a, b).second; }

FPoly fp_gcd(const FPoly& a, const FPoly& b) {
  FPoly r0 = fp_trim(a), r1 = fp_trim(b);
  while (!fp_is_zero(r1)) {
    FPoly r = fp_mod(r0, r1);
    r0 = r1;
    r1 = r;
  }
  int d = fp_deg(r0);
  if (d >= 0 && !(r0[d] == FieldElement::one(r0[d].field()))) {
    FieldElement li = r0[d].inv();
    for (auto& c : r0) c = c * li;
  }
  return r0;
}

void fp_xgcd(const FPoly& a, const FPoly& b, FPoly& g, FPoly& s, FPoly& t) {
  const FieldPtr& K = a.empty() ? rationals() : a[0].field();
  FPoly r0 = fp_trim(a), r1 = fp_trim(b);
  FPoly s0 = {FieldElement::one(K)}, s1 = {FieldElement::zero(K)};
  FPoly t0 = {FieldElement::zero(K)}, t1 = {FieldElement::one(K)};
  while (!fp_is_zero(r1)) {
    auto [q, r] = fp_divmod(r0, r1);
    r0 = r1;
    r1 = r;
    FPoly sn = fp_add(s0, fp_neg(fp_mul(q, s1)));
    s0 = s1;
    s1 = sn;
    FPoly tn = fp_add(t0, fp_neg(fp_mul(q, t1)));
    t0 = t1;
    t1 = tn;
  }
  int d = fp_deg(r0);
  if (d >= 0 && !(r0[d] == FieldElement::one(K))) {
    FieldElement li = r0[d].inv();
    for (auto& c : r0) c = c * li;
    for (auto& c : s0) c = c * li;
    for (auto& c : t0) c = c * li;
  }
  g = r0;
  s = s0;
  t = t0;
}

FPoly fp_deriv(const FPoly& a) {
  const FieldPtr& K = a.empty() ? rationals() : a[0].field();
  if (a.size() <= 1) return {FieldElement::zero(K)};
  FPoly out;
  out.reserve(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rat(static_cast<long>(i)));
  return fp_trim(std::move(out));
}

FieldElement fp_eval(const FPoly& a, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(x.field());
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * x + a[i];
  return acc;
}

FPoly fp_scale(const FPoly& a, const FieldElement& s) {
  FPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c * s);
  return out;
}

// ---------------------------------------------------------------------------

P1Point P1Point::make(const FieldElement& x, const FieldElement& y) {
  if (!same_field(x.field(), y.field())) fail("P1Point: coordinate field mismatch");
  if (x.is_zero() && y.is_zero()) fail("P1Point: (0:0) is not a point");
  if (!x.is_zero()) {
    FieldElement xi = x.inv();
    return P1Point{x * xi, y * xi};
  }
  FieldElement yi = y.inv();
  return P1Point{x * yi, y * yi};
}

std::string P1Point::str() const { return "(" + x.str() + ":" + y.str() + ")"; }

Mobius Mobius::make(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
  Mobius m{{std::move(a), std::move(b), std::move(c), std::move(d)}};
  if (!same_field(m.m[0].field(), m.m[1].field()) ||
      !same_field(m.m[0].field(), m.m[2].field()) ||
      !same_field(m.m[0].field(), m.m[3].field()))
    fail("Mobius: entry field mismatch");
  if (m.det().is_zero()) fail("Mobius: singular matrix");
  return m;
}

Mobius Mobius::identity(const FieldPtr& field) {
  return make(FieldElement::one(field), FieldElement::zero(field),
              FieldElement::zero(field), FieldElement::one(field));
}

FieldElement Mobius::det() const { return m[0] * m[3] - m[1] * m[2]; }

Mobius Mobius::normalized() const {
  for (const auto& e : m) {
    if (!e.is_zero()) {
      FieldElement s = e.inv();
      return Mobius{{m[0] * s, m[1] * s, m[2] * s, m[3] * s}};
    }
  }
  fail("Mobius: zero matrix");
}

Mobius mobius_mul(const Mobius& a, const Mobius& b) {
  return Mobius{{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                 a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

Mobius mobius_inverse(const Mobius& a) {
  FieldElement di = a.det().inv();
  return Mobius{{a.m[3] * di, -a.m[1] * di, -a.m[2] * di, a.m[0] * di}};
}

Mobius mobius_lift(const Mobius& a, const FieldPtr& target, const FieldElement& gen_image) {
  return Mobius::make(embed(a.m[0], target, gen_image), embed(a.m[1], target, gen_image),
                      embed(a.m[2], target, gen_image), embed(a.m[3], target, gen_image));
}

P1Point mobius_apply(const Mobius& m, const P1Point& p) {
  return P1Point::make(m.m[0] * p.x + m.m[1] * p.y, m.m[2] * p.x + m.m[3] * p.y);
}

std::optional<int> mobius_order(const Mobius& m, int cap) {
  Mobius id = Mobius::identity(m.m[0].field()).normalized();
  Mobius acc = m.normalized();
  for (int n = 1; n <= cap; ++n) {
    if (acc == id) return n;
    acc = mobius_mul(acc, m).normalized();
  }
  return std::nullopt;
}

std::vector<P1Point> fixed_points(const Mobius& m) {
  const FieldPtr& K = m.m[0].field();
  const FieldElement &a = m.m[0], &b = m.m[1], &c = m.m[2], &d = m.m[3];
  if (b.is_zero() && c.is_zero() && a == d)
    fail("fixed_points: scalar (identity) map");
  std::vector<P1Point> out;
  if (c.is_zero()) {
    out.push_back(P1Point::make(FieldElement::one(K), FieldElement::zero(K)));
    if (!(d - a).is_zero())
      out.push_back(P1Point::make(b * (d - a).inv(), FieldElement::one(K)));
    return out;
  }
  // c x^2 + (d - a) x - b = 0
  FieldElement disc = (d - a) * (d - a) + c * b * Rat(4);
  auto sq = field_sqrt(disc);
  if (!sq) throw std::domain_error("fixed_points: eigenvalues do not lie in the field");
  FieldElement two_c_inv = (c * Rat(2)).inv();
  FieldElement r1 = (a - d + *sq) * two_c_inv;
  out.push_back(P1Point::make(r1, FieldElement::one(K)));
  if (!sq->is_zero()) {
    FieldElement r2 = (a - d - *sq) * two_c_inv;
    out.push_back(P1Point::make(r2, FieldElement::one(K)));
  }
  return out;
}

namespace {

// 2x2 matrix sending (1:0),(0:1),(1:1) to a,b,c; fails only on coincident input
std::optional<Mobius> std_frame_to(const P1Point& a, const P1Point& b, const P1Point& c) {
  FieldElement det = a.x * b.y - a.y * b.x;
  if (det.is_zero()) return std::nullopt;
  FieldElement di = det.inv();
  FieldElement u = (c.x * b.y - c.y * b.x) * di;
  FieldElement v = (a.x * c.y - a.y * c.x) * di;
  if (u.is_zero() || v.is_zero()) return std::nullopt;
  return Mobius{{a.x * u, b.x * v, a.y * u, b.y * v}};
}

}  // namespace

Mobius mobius_from_3pts(const P1Point& p1, const P1Point& p2, const P1Point& p3,
                        const P1Point& q1, const P1Point& q2, const P1Point& q3) {
  auto A = std_frame_to(p1, p2, p3);
  auto B = std_frame_to(q1, q2, q3);
  if (!A || !B) fail("mobius_from_3pts: coincident points");
  return mobius_mul(*B, mobius_inverse(*A));
}

PointStabilizer stabilizer_of_5pts(const std::array<P1Point, 5>& pts) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) fail("stabilizer_of_5pts: points must be distinct");
  PointStabilizer out;
  std::array<int, 5> sigma{0, 1, 2, 3, 4};
  std::sort(sigma.begin(), sigma.end());
  do {
    auto A = std_frame_to(pts[0], pts[1], pts[2]);
    auto B = std_frame_to(pts[sigma[0]], pts[sigma[1]], pts[sigma[2]]);
    if (!A || !B) continue;
    Mobius m = mobius_mul(*B, mobius_inverse(*A));
    if (mobius_apply(m, pts[3]) == pts[sigma[3]] && mobius_apply(m, pts[4]) == pts[sigma[4]]) {
      out.maps.push_back(m.normalized());
      out.perms.push_back(sigma);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::optional<Mobius> point_set_equivalent(const std::vector<P1Point>& a,
                                           const std::vector<P1Point>& b) {
  if (a.size() != 5 || b.size() != 5) fail("point_set_equivalent: need five points each");
  std::vector<P1Point> bs = b;
  std::sort(bs.begin(), bs.end());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 5; ++k) {
        if (k == i || k == j) continue;
        Mobius m = mobius_from_3pts(a[0], a[1], a[2], b[i], b[j], b[k]);
        std::vector<P1Point> img;
        img.reserve(5);
        for (const auto& p : a) img.push_back(mobius_apply(m, p));
        std::sort(img.begin(), img.end());
        if (img == bs) return m.normalized();
      }
    }
  return std::nullopt;
}

}  // namespace dp4
