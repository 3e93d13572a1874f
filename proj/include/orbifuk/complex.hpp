/**
 * complex.hpp — graded cochain complexes of labeled ℚ-vector spaces.
 *
 * spaces: degree → ordered basis labels; differential: degree k → matrix
 * from the degree-k space to the degree-(k+1) space (columns indexed by
 * the source basis). validate() checks shapes and d∘d = 0 exactly.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbifuk/matrix.hpp"

namespace orbifuk {

struct NotAComplex : std::runtime_error {
  explicit NotAComplex(const std::string& what) : std::runtime_error(what) {}
};

struct GradedComplex {
  std::map<int, std::vector<std::string>> basis;  // degree -> labels
  std::map<int, Matrix> diff;                     // degree k -> d_k

  int dim(int k) const {
    auto it = basis.find(k);
    return it == basis.end() ? 0 : (int)it->second.size();
  }

  const Matrix* differential(int k) const {
    auto it = diff.find(k);
    return it == diff.end() ? nullptr : &it->second;
  }

  // Throws NotAComplex on shape mismatch or d∘d ≠ 0.
  void validate() const;

  struct Cohom {
    int dim = 0;
    // Cocycle coordinate vectors spanning a complement of the coboundaries.
    std::vector<std::vector<Rat>> reps;
  };

  Cohom cohomology(int k) const;
};

}  // namespace orbifuk
