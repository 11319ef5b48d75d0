#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "dp4/lines.hpp"
#include "dp4/picard.hpp"

using namespace dp4;

namespace {

WeylElement el(const std::string& w) { return parse_element(w); }

std::set<std::pair<std::string, std::string>> two_cycles(SignVector a) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& l : all_lines()) {
    LineId img = sign_action(a, l);
    if (l == img) continue;
    std::string x = l.name(), y = img.name();
    out.insert(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
  }
  return out;
}

GaloisAction c4_twist() {
  FiniteGroup g;
  g.names = {"1", "s", "s2", "s3"};
  g.table = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  std::vector<WeylElement> rep = {el("id"), el("(45)"), el("id"), el("(45)")};
  std::vector<SignVector> coc = {SignVector::zero(), el("c4").sign, el("c4c5").sign,
                                 el("c5").sign};
  return make_galois_action(g, rep, coc);
}

}  // namespace

TEST_CASE("single generator actions") {
  CHECK(line_action(el("c1"), LineId::E(1)) == LineId::C());
  CHECK(line_action(el("c1"), LineId::C()) == LineId::E(1));
  CHECK(line_action(el("c1"), LineId::E(2)) == LineId::L(1, 2));
  CHECK(line_action(el("c1"), LineId::L(2, 3)) == LineId::L(4, 5));
  CHECK(line_action(el("c4c5"), LineId::E(1)) == LineId::L(2, 3));
  CHECK(line_action(el("(12)(45)"), LineId::E(1)) == LineId::E(2));
  CHECK(line_action(el("(12)(45)"), LineId::L(1, 4)) == LineId::L(2, 5));
}

TEST_CASE("printed involution cycle lists") {
  using P = std::pair<std::string, std::string>;
  std::set<P> c4_expected = {{"E1", "L14"}, {"E2", "L24"}, {"E3", "L34"}, {"E4", "C"},
                             {"E5", "L45"}, {"L12", "L35"}, {"L13", "L25"}, {"L15", "L23"}};
  std::set<P> c5_expected = {{"E1", "L15"}, {"E2", "L25"}, {"E3", "L35"}, {"E4", "L45"},
                             {"E5", "C"},   {"L12", "L34"}, {"L13", "L24"}, {"L14", "L23"}};
  std::set<P> c45_expected = {{"E1", "L23"}, {"E2", "L13"}, {"E3", "L12"}, {"E4", "E5"},
                              {"L14", "L15"}, {"L24", "L25"}, {"L34", "L35"}, {"C", "L45"}};
  auto norm = [](std::set<P> s) {
    std::set<P> out;
    for (auto [a, b] : s) out.insert(a < b ? P{a, b} : P{b, a});
    return out;
  };
  CHECK(two_cycles(el("c4").sign) == norm(c4_expected));
  CHECK(two_cycles(el("c5").sign) == norm(c5_expected));
  CHECK(two_cycles(el("c4c5").sign) == norm(c45_expected));
}

TEST_CASE("incidence") {
  CHECK(incidence(LineId::E(4), LineId::C()) == 1);
  CHECK(incidence(LineId::L(1, 2), LineId::L(3, 4)) == 1);
  CHECK(incidence(LineId::L(1, 2), LineId::L(1, 3)) == 0);
  CHECK(incidence(LineId::E(1), LineId::L(2, 3)) == 0);
  CHECK(incidence(LineId::E(1), LineId::L(1, 3)) == 1);
  CHECK(incidence(LineId::E(2), LineId::E(2)) == -1);

  // agrees with the Picard pairing on every pair
  for (const auto& a : all_lines())
    for (const auto& b : all_lines())
      CHECK(incidence(a, b) == intersect(class_of(a), class_of(b)));
}

TEST_CASE("incidence is invariant and the action is an action") {
  std::mt19937 rng(4242);
  const auto& all = all_weyl_elements();
  for (int trial = 0; trial < 60; ++trial) {
    const WeylElement& g = all[rng() % all.size()];
    const WeylElement& h = all[rng() % all.size()];
    for (const auto& l : all_lines())
      CHECK(line_action(we_mul(g, h), l) == line_action(g, line_action(h, l)));
    for (const auto& l1 : all_lines())
      for (const auto& l2 : all_lines())
        CHECK(incidence(line_action(g, l1), line_action(g, l2)) == incidence(l1, l2));
  }
}

TEST_CASE("torsor structure") {
  CHECK(torsor_check());

  // a -> a(C) is a bijection from the sign subgroup to the lines
  std::set<std::string> images;
  int count = 0;
  for (int bits = 0; bits < 32; ++bits) {
    if (__builtin_popcount(bits) % 2 != 0) continue;
    images.insert(sign_action(SignVector{uint8_t(bits)}, LineId::C()).name());
    ++count;
  }
  CHECK(count == 16);
  CHECK(images.size() == 16);

  // stabilizer of E1 in the sign subgroup is trivial
  int stab = 0;
  for (int bits = 0; bits < 32; ++bits) {
    if (__builtin_popcount(bits) % 2 != 0) continue;
    if (sign_action(SignVector{uint8_t(bits)}, LineId::E(1)) == LineId::E(1)) ++stab;
  }
  CHECK(stab == 1);
}

TEST_CASE("galois orbits") {
  FiniteGroup triv;
  triv.names = {"1"};
  triv.table = {{0}};
  auto act = make_galois_action(triv, {el("id")}, std::nullopt);
  auto orbits = galois_orbits(act);
  CHECK(orbits.size() == 16);
  CHECK(is_quasi_split(orbits));
  CHECK_FALSE(is_k_minimal(orbits));

  FiniteGroup c2;
  c2.names = {"1", "g"};
  c2.table = {{0, 1}, {1, 0}};
  auto act45 = make_galois_action(c2, {el("id"), el("(45)")}, std::nullopt);
  auto orbits45 = galois_orbits(act45);
  bool c_singleton = false, e45_pair = false, l45_pair = false;
  for (const auto& o : orbits45) {
    if (o.size() == 1 && o[0] == LineId::C()) c_singleton = true;
    if (o.size() == 2 && o[0] == LineId::E(4) && o[1] == LineId::E(5)) e45_pair = true;
    if (o.size() == 2 && o[0] == LineId::L(1, 4) && o[1] == LineId::L(1, 5))
      l45_pair = true;
  }
  CHECK(c_singleton);
  CHECK(e45_pair);
  CHECK(l45_pair);
  CHECK(is_quasi_split(orbits45));
  CHECK_FALSE(is_k_minimal(orbits45));
}

TEST_CASE("twisted orbits") {
  auto act = c4_twist();
  auto orbits = galois_orbits(act);
  REQUIRE(orbits.size() == 4);
  auto names = [](const std::vector<LineId>& o) {
    std::set<std::string> out;
    for (const auto& l : o) out.insert(l.name());
    return out;
  };
  std::set<std::set<std::string>> got;
  for (const auto& o : orbits) got.insert(names(o));
  std::set<std::set<std::string>> expected = {{"E1", "L23", "L14", "L15"},
                                              {"E2", "L13", "L24", "L25"},
                                              {"E3", "L12", "L34", "L35"},
                                              {"E4", "E5", "L45", "C"}};
  CHECK(got == expected);
  CHECK(is_k_minimal(orbits));
  CHECK_FALSE(is_quasi_split(orbits));
}

TEST_CASE("coboundary variant has the same partition type") {
  FiniteGroup g;
  g.names = {"1", "s", "s2", "s3"};
  g.table = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  std::vector<WeylElement> rep = {el("id"), el("(45)"), el("id"), el("(45)")};
  std::vector<SignVector> coc = {SignVector::zero(), el("c5").sign, el("c4c5").sign,
                                 el("c4").sign};
  auto act = make_galois_action(g, rep, coc);
  auto orbits = galois_orbits(act);
  std::multiset<size_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<size_t>{4, 4, 4, 4});
  CHECK(is_k_minimal(orbits));
}

TEST_CASE("validation rejects bad input") {
  FiniteGroup g;
  g.names = {"1", "s", "s2", "s3"};
  g.table = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};

  // not a homomorphism
  CHECK_THROWS_WITH_AS(
      make_galois_action(g, {el("id"), el("(45)"), el("(45)"), el("(45)")}, std::nullopt),
      doctest::Contains("homomorphism"), std::invalid_argument);

  // broken cocycle reports the offending pair
  std::vector<WeylElement> rep = {el("id"), el("(45)"), el("id"), el("(45)")};
  std::vector<SignVector> coc = {SignVector::zero(), el("c4").sign, el("c4").sign,
                                 el("c5").sign};
  CHECK_THROWS_WITH_AS(make_galois_action(g, rep, coc), doctest::Contains("(s,s)"),
                       std::invalid_argument);

  // cocycle values must be defined on every element
  std::vector<SignVector> short_coc = {SignVector::zero()};
  CHECK_THROWS_AS(make_galois_action(g, rep, short_coc), std::invalid_argument);
}

TEST_CASE("scenario files") {
  auto act = load_scenario(std::string(DP4_SCENARIO_DIR) + "/c4_twist.json");
  auto orbits = galois_orbits(act);
  CHECK(orbits.size() == 4);
  CHECK(is_k_minimal(orbits));
  CHECK_FALSE(is_quasi_split(orbits));

  auto triv = load_scenario(std::string(DP4_SCENARIO_DIR) + "/trivial.json");
  CHECK(galois_orbits(triv).size() == 16);

  auto untw = load_scenario(std::string(DP4_SCENARIO_DIR) + "/untwisted_45.json");
  CHECK(is_quasi_split(galois_orbits(untw)));
}
