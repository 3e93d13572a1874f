/**
 * ainfty.hpp — generic A∞ categories with sparse product tables.
 *
 * An AInftyCategory stores objects, a graded hom basis, and a sparse table
 * of higher products. Chains are kept first-applied-first: the stored key
 * (c1,...,cn) denotes mu^n(cn,...,c1) in right-to-left notation. mu^n has
 * degree 2-n, the reduced degree is ||a|| = |a| - 1, and units are strict:
 *   mu^1(1) = 0,  mu^2(a, 1) picks up (-1)^{|a|} with the unit applied
 * second, mu^2(1, a) = a with the unit applied first, and any unit inside
 * mu^{n>=3} kills the product. The differential mu^1 is identically zero
 * at this level; differentials appear later as twisted-complex data.
 *
 * On top of the plain products sits the additive-Z (shift-decorated)
 * evaluation: entries s^k ⊗ a acquire the Koszul sign
 * (-1)^{sum_{i<j} |phi_i|·||a_j||} with |phi_i| = -(shift drop of entry i).
 */
#pragma once

#include "orbifuk/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbifuk {

struct NotComposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AInftyCategory {
  struct BasisElement {
    std::string label;
    int src = -1;
    int tgt = -1;
    long long degree = 0;
    bool is_unit = false;
  };

  struct Term {
    Rat coeff;
    int basis = -1;
  };

  std::vector<std::string> objects;
  std::vector<BasisElement> basis;
  std::map<std::string, int> basis_index;
  std::vector<int> unit_of;  // object id -> basis id of its unit
  // Product table, keyed by first-applied-first chains of non-unit basis
  // ids with length >= 2. Absent keys evaluate to zero.
  std::map<std::vector<int>, std::vector<Term>> mu_table;

  // Registers an object together with its strict unit "1_<name>".
  int add_object(const std::string& name);
  int add_basis(const std::string& label, int src, int tgt, long long degree,
                bool is_unit);

  // Inserts a relation; re-inserting a key with a different value throws.
  void set_mu(const std::vector<int>& chain, std::vector<Term> value);

  bool composable(const std::vector<int>& chain) const;
  // Evaluates mu on a chain of basis ids, applying the unit rules; returns
  // the empty combination when the product vanishes or the chain does not
  // compose.
  std::vector<Term> mu_chain(const std::vector<int>& chain) const;

  std::vector<int> hom_basis(int src, int tgt) const;
};

// A scalar multiple of s^{tgt_shift - src_shift} ⊗ basis, regarded as a
// morphism X[src_shift] -> Y[tgt_shift]. Its total degree is
// degree(basis) - (tgt_shift - src_shift).
struct ShiftedMorphism {
  Rat coeff;
  int basis = -1;
  int src_shift = 0;
  int tgt_shift = 0;
};

long long shifted_degree(const AInftyCategory& cat, const ShiftedMorphism& m);

// Shift-decorated product of a first-applied-first chain. Throws
// NotComposable when objects or shifts fail to line up.
std::vector<ShiftedMorphism> mu_addz(const AInftyCategory& cat,
                                     const std::vector<ShiftedMorphism>& chain);

// A strict, degree-preserving functor given by an object permutation and a
// scaled basis permutation. Verification compares the pushed-forward
// product table with the original, so it is meaningful for invertible maps.
struct StrictFunctor {
  std::vector<int> object_map;                 // object id -> object id
  std::vector<std::pair<Rat, int>> basis_map;  // basis id -> (coeff, basis id)
};

ShiftedMorphism apply_functor(const AInftyCategory& cat, const StrictFunctor& f,
                              const ShiftedMorphism& m);
bool verify_strict_functor(const AInftyCategory& cat, const StrictFunctor& f);
bool functor_has_order_two(const AInftyCategory& cat, const StrictFunctor& f);

struct StasheffReport {
  struct Violation {
    std::vector<int> chain;
  };
  bool ok = true;
  long long chains_checked = 0;
  std::vector<Violation> violations;  // first few offenders only
};

// Verifies sum_{k,j} (-1)^{||c_1||+...+||c_k||} mu(. mu(.) .) = 0 over
// composable chains of length 2..max_n, either exhaustively or on seeded
// random chains.
StasheffReport check_stasheff(const AInftyCategory& cat, int max_n,
                              bool exhaustive = true,
                              unsigned long long seed = 0,
                              long long trials = 0);

}  // namespace orbifuk
