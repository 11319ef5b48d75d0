#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp4/weyl.hpp"

namespace dp4 {

// One of the 16 lines: E_i, L_ij (i<j), or C.
struct LineId {
  // E_i -> (i,0); L_ij -> (i,j); C -> (0,0)
  int8_t a = 0, b = 0;

  static LineId E(int i);
  static LineId L(int i, int j);  // normalizes i<j
  static LineId C() { return {}; }

  bool is_E() const { return a != 0 && b == 0; }
  bool is_L() const { return b != 0; }
  bool is_C() const { return a == 0; }

  bool operator==(const LineId& o) const = default;
  bool operator<(const LineId& o) const { return a < o.a || (a == o.a && b < o.b); }
  std::string name() const;
};

const std::vector<LineId>& all_lines();
std::optional<LineId> parse_line(const std::string& name);

// Action of a single c_i per the torsor rule: E_i <-> C, E_j <-> L_ij,
// L_jk <-> L_{i,j,k}^c.
LineId ci_action(int i, LineId l);
LineId sign_action(SignVector a, LineId l);
// Permutation part relabels indices first, then the sign part acts.
LineId line_action(const WeylElement& g, LineId l);

// Intersection number of the corresponding divisor classes (diagonal -1),
// computed combinatorially; agreement with the Picard pairing is a tested
// invariant.
int incidence(LineId l1, LineId l2);

// True iff the 16 sign elements act simply transitively on the 16 lines.
bool torsor_check();

// Finite group by multiplication table; table[i][j] = index of g_i g_j
// (g_j applied first, matching we_mul).
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;

  size_t size() const { return names.size(); }
  int mul(int i, int j) const { return table[i][j]; }
  int identity() const;
  // checks Latin square, identity, inverses, associativity
  void validate() const;
};

// Galois action through a finite quotient: a homomorphism into W(D5) plus an
// optional twisting cocycle valued in the sign subgroup.
struct GaloisAction {
  FiniteGroup group;
  std::vector<WeylElement> rep;           // rep[i] for group element i
  std::optional<std::vector<SignVector>> cocycle;
};

// Validates the homomorphism and, when present, the cocycle identity
// a(g1 g2) = a(g1) * (g1 . a(g2)); reports the offending pair on failure.
GaloisAction make_galois_action(FiniteGroup group, std::vector<WeylElement> rep,
                                std::optional<std::vector<SignVector>> cocycle);

// Orbits of the (possibly twisted) action g'(l) = a_g . (rep(g) l); sorted
// partition of all 16 lines.
std::vector<std::vector<LineId>> galois_orbits(const GaloisAction& action);

bool is_k_minimal(const std::vector<std::vector<LineId>>& orbits);
bool is_quasi_split(const std::vector<std::vector<LineId>>& orbits);

// Scenario file: JSON with the group table, rep words in the element
// grammar, and an optional cocycle of sign words.
GaloisAction load_scenario(const std::string& path);
GaloisAction parse_scenario(const std::string& json_text);

}  // namespace dp4
