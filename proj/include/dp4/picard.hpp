#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dp4/lines.hpp"
#include "dp4/weyl.hpp"

namespace dp4 {

// Element of Pic in the ordered basis (E1,...,E5,H). The basis order matches
// the printed matrices.
struct DivisorClass {
  std::array<int64_t, 6> c{};

  bool operator==(const DivisorClass& o) const = default;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-() const;
};

// Intersection form: H^2 = 1, E_i^2 = -1, H.E_i = 0.
int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);

// K = -3H + sum E_i.
DivisorClass canonical_class();
DivisorClass hyperplane_class();
DivisorClass class_of(LineId l);

// Exhaustive search over aH - sum b_i E_i with |a|<=3, |b_i|<=2 for classes
// with D^2 = D.K = -1; returns the 16 catalog classes.
std::vector<DivisorClass> exceptional_classes();

// The five pairs {H-E_i, -K-H+E_i}; members square to 0 and sum to -K.
std::vector<std::pair<DivisorClass, DivisorClass>> exceptional_pairs();

// Integer 6x6 matrix, columns = images of the basis vectors.
struct PicMap {
  std::array<std::array<int64_t, 6>, 6> m{};

  bool operator==(const PicMap& o) const = default;
  static PicMap identity();
  DivisorClass apply(const DivisorClass& d) const;
  PicMap compose(const PicMap& o) const;  // this after o
};

// Linear action of g on Pic: columns E_i -> class(g E_i), column H via the
// decomposition H = L45 + E4 + E5.
PicMap pic_action(const WeylElement& g);

// M^T J M == J and M K == K.
bool preserves_form(const PicMap& m);

// Rank of the common fixed sublattice of the given maps.
int invariant_rank(const std::vector<PicMap>& maps);

}  // namespace dp4
