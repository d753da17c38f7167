#pragma once

#include "ybr/skein.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ybr {

struct Relation {
  std::string family;  // "R2", "YB", "L1".."L14"
  std::string text;    // "lhs = rhs" in the word DSL
  AlgElem lhs, rhs;
  bool corrected = false;  // differs from the printed presentation
};

// R^2 = 1 - h/delta at every position of an m-box.
std::vector<Relation> r_squared_relations(int m);
// r2 r1 r2 as a combination of two rotation orbits of one-crossing pictures and the opposite triangle.
Relation yang_baxter_relation();
// Every instance of the 14 families whose indices fit in an m-box. With
// corrected = true, families 10 to 13 are replaced by their valid forms.
std::vector<Relation> local_relations(int m, bool corrected);
// Families 2, 5, 8 with |i - j| >= 2.
std::vector<Relation> far_commutation_relations(int m);

// A sandwich s (lhs) t and s (rhs) t that collapse onto the same word w with different scalars.
struct Witness {
  Word left, right, target;
  FieldElem lhs_scalar, rhs_scalar;
  std::string str() const;
};
std::optional<Witness> inconsistency_witness(const Relation& r, const std::vector<Word>& probes);

std::vector<Word> sample_probes(const std::vector<Word>& all, std::size_t count, std::uint64_t seed);

}  // namespace ybr
