// Acceptance suite: every headline claim is recomputed exactly, one
// pass/fail line per criterion. Exit code is the number of failures.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "dp4/classify.hpp"
#include "dp4/lines.hpp"
#include "dp4/picard.hpp"
#include "dp4/surfaces.hpp"
#include "dp4/weyl.hpp"

using namespace dp4;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass) {
  std::printf("[%s] %2d. %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  if (!pass) ++failures;
}

WeylElement el(const std::string& w) { return parse_element(w); }
Subgroup grp(const std::string& words) { return closure(parse_generators(words)); }

std::set<std::string> names(const std::vector<ClassName>& v) {
  std::set<std::string> out;
  for (ClassName n : v) out.insert(class_name_str(n));
  return out;
}

FieldElement fr(const FieldPtr& k, long n, long d = 1) {
  return FieldElement::from_rat(k, rat(n, d));
}

// --- criterion 1: group sizes ---
void criterion_1() {
  Subgroup w = grp("c1,c2,c3,c4,(12),(12345)");
  bool pass = w.order() == 1920;
  pass = pass && kernel_in_a(w).order() == 16;
  int order3 = 0;
  for (int bits = 0; bits < 32; ++bits) {
    if (__builtin_popcount(bits) % 2 != 0) continue;
    WeylElement a{SignVector{uint8_t(bits)}, Perm5::identity()};
    if (we_order(we_mul(a, el("(123)"))) == 3) ++order3;
  }
  pass = pass && order3 == 4;
  report(1, "group sizes: |W(D5)| = 1920, |A| = 16, four order-3 twists of (123)", pass);
}

// --- criterion 2: lattice ---
void criterion_2() {
  bool pass = exceptional_classes().size() == 16;
  pass = pass && exceptional_pairs().size() == 5;
  PicMap printed;
  printed.m = {{{-1, 0, 0, 0, -1, -1},
                {0, -1, 0, 0, -1, -1},
                {0, 0, -1, 0, -1, -1},
                {-1, -1, -1, -1, -1, -2},
                {0, 0, 0, -1, -1, -1},
                {1, 1, 1, 1, 2, 3}}};
  PicMap m = pic_action(el("c4(45)"));
  pass = pass && m == printed;
  pass = pass && invariant_rank({m}) == 1;
  report(2, "lattice: 16 classes, 5 pairs, printed matrix for c4(45), fixed rank 1", pass);
}

// --- criterion 3: action coherence over all 1920 elements ---
void criterion_3() {
  bool pass = true;
  for (const auto& g : all_weyl_elements()) {
    PicMap m = pic_action(g);
    if (!preserves_form(m)) {
      pass = false;
      break;
    }
    for (const auto& l : all_lines()) {
      if (!(m.apply(class_of(l)) == class_of(line_action(g, l)))) {
        pass = false;
        break;
      }
    }
    if (!pass) break;
  }
  report(3, "action coherence: line and Picard actions agree, form and K preserved", pass);
}

// --- criterion 4: the classification table ---
void criterion_4() {
  bool pass = true;
  using S = std::set<std::string>;
  // the eight case outcomes of the quasi-split analysis
  auto qs_expected = [](bool i, bool e3, bool s5) -> S {
    if (i && e3 && s5) return {"C2^4:C4", "C2^4:S3", "C2^4:D5"};
    if (!i && e3 && s5) return {"C2^4:S3", "C2^4:D5"};
    if (i && !e3 && s5) return {"C2^4:C4", "C2^4:D5", "C2^3:S3"};
    if (i && e3 && !s5) return {"C2^4:C4", "C2^4:S3"};
    if (i && !e3 && !s5) return {"C2^4:C4", "C2^3:S3"};
    if (!i && e3 && !s5) return {"C2^4:S3"};
    if (!i && !e3 && s5) return {"C2^4:D5", "C2^3:S3"};
    return {"C2^4:C2", "C2^3:S3"};
  };
  for (const auto& p : all_valid_profiles()) {
    S qs = names(maximal_qs(p));
    if (qs != qs_expected(p.has_i, p.has_eps3, p.has_sqrt5)) pass = false;
    S m = names(maximal_m(p));
    S m_expected = qs_expected(p.has_i, p.has_eps3, p.has_sqrt5);
    if (p.sum2sq_minus3 && !p.has_eps3) m_expected.insert("C2^3.S3");
    if (m != m_expected) pass = false;
  }
  // rational membership differs exactly on the two non-split classes,
  // exactly when s2s holds and eps3 does not
  std::vector<Subgroup> family = {closure({}),
                                  grp("c1,c2"),
                                  grp("c4c5,(123)"),
                                  named_class(ClassName::C24_C2),
                                  named_class(ClassName::C24_S3),
                                  named_class(ClassName::C23_S3),
                                  named_class(ClassName::C23_S3_NONSPLIT),
                                  named_class(ClassName::C2_S3_NONSPLIT)};
  for (const auto& p : all_valid_profiles()) {
    for (const auto& g : family) {
      bool mk = in_mk(g, p), mkrat = in_mk_rat(g, p);
      bool bad = false;
      for (ClassName n : non_qs_only_classes())
        if (g.order() == named_class(n).order() &&
            conjugate_into(g, named_class(n)).has_value())
          bad = true;
      bool expect_diff = mk && bad && p.sum2sq_minus3 && !p.has_eps3;
      if ((mk != mkrat) != expect_diff) pass = false;
    }
  }
  report(4, "classification table over all profiles, with the rationality window", pass);
}

// --- criterion 5: extension structure ---
void criterion_5() {
  bool pass = !is_split_extension(named_class(ClassName::C23_S3_NONSPLIT));
  pass = pass && !is_split_extension(named_class(ClassName::C2_S3_NONSPLIT));
  pass = pass && is_split_extension(named_class(ClassName::C23_S3));
  // the four order-6 cyclic twists are mutually conjugate
  std::vector<Subgroup> twists = {grp("c4c5(123)"), grp("c1(123)"), grp("c2(123)"),
                                  grp("c3(123)")};
  for (const auto& a : twists)
    for (const auto& b : twists)
      pass = pass && conjugate_into(a, b).has_value();
  pass = pass && centralizer(named_class(ClassName::C2_S3_NONSPLIT)) == grp("c4(45)");
  const Subgroup c1c5 = grp("c1,c5"), c515 = grp("c5(15)");
  for (ClassName n : {ClassName::I1, ClassName::I2, ClassName::I3}) {
    Subgroup c = centralizer(named_class(n));
    bool in_first = true, in_second = true;
    for (const auto& e : c.elements()) {
      in_first = in_first && c1c5.contains(e);
      in_second = in_second && c515.contains(e);
    }
    pass = pass && (in_first || in_second);
  }
  pass = pass && stable_window(grp("c4(45)"), named_class(ClassName::C2_S3_NONSPLIT)) ==
                     StableWindow::excluded;
  report(5, "extension structure: splitness, conjugacies, centralizers, stable window",
         pass);
}

// --- criterion 6: twist orbits ---
void criterion_6() {
  bool pass = true;
  try {
    GaloisAction act = load_scenario(std::string(DP4_SCENARIO_DIR) + "/c4_twist.json");
    auto orbits = galois_orbits(act);
    std::set<std::set<std::string>> got;
    for (const auto& o : orbits) {
      std::set<std::string> s;
      for (const auto& l : o) s.insert(l.name());
      got.insert(s);
    }
    std::set<std::set<std::string>> expected = {{"E1", "L23", "L14", "L15"},
                                                {"E2", "L13", "L24", "L25"},
                                                {"E3", "L12", "L34", "L35"},
                                                {"E4", "E5", "L45", "C"}};
    pass = got == expected && is_k_minimal(orbits) && !is_quasi_split(orbits);
  } catch (const std::exception&) {
    pass = false;
  }
  report(6, "twist orbits: the validated cocycle yields the four 4-sets, minimal,"
            " not quasi-split",
         pass);
}

// --- criterion 7: the surface catalog ---
void criterion_7() {
  bool pass = true;
  for (const auto& name : catalog_names()) {
    SurfaceRecord rec = catalog(name);
    auto checks = verify_surface(rec);
    if (!all_pass(checks)) {
      pass = false;
      for (const auto& c : checks)
        if (!c.pass) std::printf("        %s: %s failed (%s)\n", name.c_str(),
                                 c.name.c_str(), c.detail.c_str());
    }
  }
  report(7, "surface catalog: smoothness, printed relations, orders 32/64/96/160/48/48,"
            " root sets, special point",
         pass);
}

// --- criterion 8: the trace-form oracle ---
void criterion_8() {
  bool pass = true;
  // Euler identities for several separable quintics
  std::vector<std::vector<Rat>> root_sets = {
      {rat(1), rat(2), rat(3), rat(4), rat(5)},
      {rat(-1), rat(0), rat(2), rat(1, 2), rat(3)},
      {rat(-2), rat(-1, 3), rat(1), rat(5, 2), rat(7)},
      {rat(0), rat(1), rat(-1), rat(4), rat(-5)},
      {rat(2, 3), rat(-3, 4), rat(1), rat(6), rat(-2)}};
  for (const auto& roots : root_sets) {
    FPoly p = {FieldElement::one(rationals())};
    for (const Rat& r : roots)
      p = fp_mul(p, FPoly{FieldElement::from_rat(rationals(), -r),
                          FieldElement::one(rationals())});
    EtaleAlgebra alg = EtaleAlgebra::make(rationals(), p);
    FPoly cur = alg.inverse(fp_deriv(alg.modulus()));
    for (int m = 0; m <= 4; ++m) {
      if (m > 0) {
        cur.insert(cur.begin(), FieldElement::zero(rationals()));
        cur = alg.reduce(cur);
      }
      Rat expected = (m == 4) ? rat(1) : rat(0);
      if (!(alg.trace(cur) == FieldElement::from_rat(rationals(), expected))) pass = false;
      // independent oracle: sum over the roots of r^m / P'(r)
      Rat oracle = 0;
      for (size_t i = 0; i < roots.size(); ++i) {
        Rat deriv = 1;
        for (size_t j = 0; j < roots.size(); ++j)
          if (j != i) deriv *= roots[i] - roots[j];
        Rat num = 1;
        for (int t = 0; t < m; ++t) num *= roots[i];
        oracle += num / deriv;
      }
      if (oracle != expected) pass = false;
    }
  }

  // reconstruction of the printed pencil and its families
  SurfaceRecord sd = catalog("c23-semidirect");
  FPoly one = {FieldElement::one(sd.field)};
  QuadricPencil aligned1 = aligned_trace_pencil(sd, {one, one, one, one});
  auto w = pencil_equivalent(aligned1, sd.pencil);
  pass = pass && w.has_value();
  if (w) {
    QuadricPencil img = witness_transform(*w, aligned1);
    pass = pass && img.q1 == sd.pencil.q1 && img.q2 == sd.pencil.q2;
    // the (b, c) family under the same witness
    for (auto [b, c] : std::vector<std::pair<long, long>>{{1, 0}, {2, 3}, {-1, 5}}) {
      FPoly part4 = fp_from_rats(sd.field, {rat(c), rat(b)});
      QuadricPencil twisted = aligned_trace_pencil(sd, {one, one, one, part4});
      QuadricPencil timg = witness_transform(*w, twisted);
      const FieldPtr& k = sd.field;
      FieldElement bb = fr(k, b), cc = fr(k, c);
      Quadric q1 = Quadric::zero(k), q2 = Quadric::zero(k);
      q1.set(0, 0, fr(k, 1));
      q1.set(1, 1, fr(k, -8));
      q1.set(2, 2, fr(k, 1));
      q1.set(3, 3, fr(k, -3) * (cc + bb * rat(2)));
      q1.set(3, 4, fr(k, 3) * (cc - bb));
      q1.set(4, 4, fr(k, 3) * (bb + cc * rat(2)));
      q2.set(0, 0, fr(k, 2));
      q2.set(1, 1, fr(k, -4));
      q2.set(2, 2, fr(k, -1));
      q2.set(3, 3, fr(k, -3) * (bb + cc * rat(2)));
      q2.set(3, 4, fr(k, -3) * (bb * rat(2) + cc));
      q2.set(4, 4, fr(k, 3) * (cc - bb));
      pass = pass && timg.q1 == q1 && timg.q2 == q2;
    }
  }

  // the specific alpha-lambda over Q(i)
  SurfaceRecord ns = catalog("c23-nonsplit");
  QuadricPencil aligned_alpha = aligned_trace_pencil(ns, ns.trace->lambda_parts);
  auto wa = pencil_equivalent(aligned_alpha, ns.pencil);
  pass = pass && wa.has_value();
  report(8, "trace-form oracle: Euler identities, printed pencil, (b,c) family,"
            " alpha twist",
         pass);
}

// --- criterion 9: stabilizers and fixed points ---
void criterion_9() {
  bool pass = true;
  FieldPtr q = rationals();
  FieldPtr qi = make_field({rat(1), rat(0), rat(1)}, "Q(i)");
  FieldPtr qe3 = make_field({rat(1), rat(1), rat(1)}, "Q(eps3)");
  FieldPtr qphi = make_field({rat(-1), rat(-1), rat(1)}, "Q(phi)");
  auto P = [](const FieldElement& x, const FieldElement& y) { return P1Point::make(x, y); };

  std::array<P1Point, 5> set_c2 = {P(fr(q, 2), fr(q, 1)), P(fr(q, 1), fr(q, 2)),
                                   P(fr(q, 1), fr(q, 1)), P(fr(q, 3), fr(q, 1)),
                                   P(fr(q, 1), fr(q, 3))};
  FieldElement e3 = field_gen(qe3);
  std::array<P1Point, 5> set_s3 = {P(fr(qe3, 1), fr(qe3, 0)), P(fr(qe3, 0), fr(qe3, 1)),
                                   P(fr(qe3, 1), fr(qe3, 1)), P(-e3, fr(qe3, 1)),
                                   P(fr(qe3, 1), -e3)};
  FieldElement i = field_gen(qi);
  std::array<P1Point, 5> set_c4 = {P(fr(qi, 2), fr(qi, 1)), P(fr(qi, 2), fr(qi, -1)),
                                   P(fr(qi, 1), fr(qi, 0)), P(fr(qi, 2), i),
                                   P(fr(qi, 2), -i)};
  FieldElement phi = field_gen(qphi);
  std::array<P1Point, 5> set_d5 = {P(phi, fr(qphi, 1)), P(fr(qphi, 1), phi),
                                   P(fr(qphi, 1), fr(qphi, -1)), P(fr(qphi, 0), fr(qphi, 1)),
                                   P(fr(qphi, 1), fr(qphi, 0))};
  auto check_group = [&](const auto& set, size_t order, bool want_abelian,
                         int want_max_order) {
    auto st = stabilizer_of_5pts(set);
    if (st.maps.size() != order) return false;
    bool abelian = true;
    int max_order = 1;
    for (size_t a = 0; a < st.maps.size(); ++a) {
      max_order = std::max(max_order, mobius_order(st.maps[a]).value_or(0));
      for (size_t b = a + 1; b < st.maps.size(); ++b)
        if (!(mobius_mul(st.maps[a], st.maps[b]).normalized() ==
              mobius_mul(st.maps[b], st.maps[a]).normalized()))
          abelian = false;
    }
    return abelian == want_abelian && max_order == want_max_order;
  };
  pass = pass && check_group(set_c2, 2, true, 2);     // C2
  pass = pass && check_group(set_s3, 6, false, 3);    // S3
  pass = pass && check_group(set_c4, 4, true, 4);     // C4
  pass = pass && check_group(set_d5, 10, false, 5);   // D5

  // fixed points of h4' and h3 are the printed conjugate pairs
  Mobius h4p = mobius_lift(Mobius::make(fr(q, 1), fr(q, 1), fr(q, -1), fr(q, 1)), qi, i);
  auto f4 = fixed_points(h4p);
  std::set<P1Point> got4(f4.begin(), f4.end());
  std::set<P1Point> want4 = {P(fr(qi, 1), -i), P(-i, fr(qi, 1))};
  pass = pass && got4 == want4;

  Mobius h3 = mobius_lift(Mobius::make(fr(q, 0), fr(q, -1), fr(q, 1), fr(q, -1)), qe3, e3);
  auto f3 = fixed_points(h3);
  std::set<P1Point> got3(f3.begin(), f3.end());
  std::set<P1Point> want3 = {P(fr(qe3, 1), -e3), P(-e3, fr(qe3, 1))};
  pass = pass && got3 == want3;

  report(9, "stabilizer orders 2/6/4/10 with matching group types; printed fixed points",
         pass);
}

// --- criterion 10: the open-question fixture for d5 ---
void criterion_10() {
  SurfaceRecord d5 = catalog("d5");
  FieldElement s5 = field_gen(d5.field);
  // pinned: the recomputed pencil matches the printed q2 with a -> sqrt(5)
  bool pass = d5.pencil.q2.at(4, 4) == s5 * rat(8) - fr(d5.field, 16);
  QuadricPencil aligned = aligned_trace_pencil(d5, d5.trace->lambda_parts);
  auto w = pencil_equivalent(aligned, d5.pencil);
  pass = pass && w.has_value();
  // relation checks hold on the recomputed route regardless
  for (size_t g = 0; g < d5.named_gens.size(); ++g) {
    auto T = preserves_pencil(d5.named_gens[g], d5.pencil);
    pass = pass && T.has_value() && *T == d5.expected_rel[g];
  }
  report(10, "open-question guard: printed d5 form matches with a -> sqrt5 (pinned)",
         pass);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}
