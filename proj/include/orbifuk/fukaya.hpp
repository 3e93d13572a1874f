/**
 * fukaya.hpp — the A∞ category of a full arc system on a graded marked
 * surface.
 *
 * Objects are the arcs; the hom basis consists of all boundary runs
 * between arc ends on a marked segment (composite runs included) plus
 * strict units. Products:
 *   - mu^2(b, a) = (-1)^{|a|} ba whenever b concatenates after a;
 *   - for every disc sequence (c_1,...,c_N) — the corner cycle of an
 *     interior polygon, either a single fully marked face or several
 *     faces glued across interior arcs (corners at a glued end merge
 *     into composite runs) — every rotation is a relation with value
 *     the unit of its start object, and one-sided extensions return the
 *     extending run: mu(a_N,...,a_1 b) = (-1)^{|b|} b and
 *     mu(b a_N,...,a_1) = b.
 * Discs are enumerated as trees of face instances glued along arc sides;
 * on annuli these wrap indefinitely, so the table is truncated at a
 * length bound and products are complete for chains up to that bound.
 */
#pragma once

#include "orbifuk/ainfty.hpp"
#include "orbifuk/surface.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace orbifuk {

struct FullnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FukayaCategory {
  Surface surface;
  AInftyCategory cat;  // object ids coincide with arc ids
  std::map<MSegRun, int> run_basis;  // run -> basis id
  std::vector<MSegRun> run_of;       // basis id -> run (units: seg = -1)
  std::vector<std::vector<MSegRun>> disc_chains;  // enumerated disc sequences
  int table_limit = 8;

  int basis_of(const MSegRun& r) const { return run_basis.at(r); }
};

// Builds the category; products are tabulated for chains of length at most
// table_limit. Throws FullnessError when the arc system is not full.
FukayaCategory build_category(const Surface& s, int table_limit = 8);

// The strict order-two functor induced by the surface involution; throws
// InvolutionError when the surface has none or the functor equation fails.
StrictFunctor induced_involution(const FukayaCategory& f);

}  // namespace orbifuk
