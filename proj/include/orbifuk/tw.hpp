/**
 * tw.hpp — one-sided twisted complexes over a tabulated A∞-category.
 *
 * A twisted complex is an ordered list of shifted objects (summands)
 * together with a strictly upper triangular matrix δ of degree-one
 * morphisms satisfying the Maurer–Cartan equation Σ_k μ^k(δ,…,δ) = 0.
 * Morphisms between twisted complexes are matrices of shift-decorated
 * basis combinations; the products μ_Tw interleave the input morphisms
 * with arbitrarily many δ-insertions and evaluate each resulting chain
 * with mu_addz, so all Koszul signs come from one place.
 *
 * Entry matrices are sparse maps keyed by (row summand of the source,
 * column summand of the target). A δ entry (i,j) points from summand i
 * to summand j with i < j; a morphism component (i,j) points from
 * summand i of the source complex to summand j of the target complex
 * with no triangularity constraint.
 *
 * Degree bookkeeping: a component of a degree-k morphism between
 * summands carrying shifts m_i (source) and m_j (target) is a basis
 * combination of total degree k, i.e. |b| + m_i - m_j = k, stored with
 * src_shift = m_i and tgt_shift = m_j.
 */
#pragma once

#include "orbifuk/ainfty.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbifuk {

struct NotUpperTriangular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotACocycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using EntryKey = std::pair<int, int>;
using EntrySum = std::vector<ShiftedMorphism>;
using EntryMap = std::map<EntryKey, EntrySum>;

// Thrown when the Maurer-Cartan sum of a candidate δ does not vanish;
// carries the offending sum, entry by entry, for inspection.
struct MaurerCartanViolation : std::runtime_error {
  EntryMap residue;
  explicit MaurerCartanViolation(EntryMap r);
};

struct Summand {
  int object = -1;
  int shift = 0;
};

struct TwistedComplex {
  const AInftyCategory* cat = nullptr;
  std::vector<Summand> summands;
  EntryMap delta;  // strictly upper triangular, entries of total degree one
};

// Validates shape (shifts, objects, triangularity, entry degree one) and
// the Maurer-Cartan equation. Shape violations throw std::logic_error or
// NotUpperTriangular; a nonzero Maurer-Cartan sum throws
// MaurerCartanViolation carrying the residue.
TwistedComplex make_twisted(const AInftyCategory& cat,
                            std::vector<Summand> summands, EntryMap delta);

bool tw_equal(const TwistedComplex& a, const TwistedComplex& b);

// Total shift: adds m to every summand and every entry decoration. The
// Maurer-Cartan equation is untouched because entry drops are preserved.
TwistedComplex shift_complex(const TwistedComplex& w, int m);

// Reorders summands; perm[k] names the old position placed at k. The
// permuted δ is re-checked, so an order that breaks triangularity throws.
TwistedComplex permute_summands(const TwistedComplex& w,
                                const std::vector<int>& perm);

// Applies a strict functor entrywise and revalidates the result.
TwistedComplex apply_functor_tw(const AInftyCategory& cat,
                                const StrictFunctor& f,
                                const TwistedComplex& w);

// A morphism of twisted complexes of pure total degree. Components map
// summand i of src to summand j of tgt and carry the summand shifts.
struct TwHomElement {
  TwistedComplex src;
  TwistedComplex tgt;
  long long degree = 0;
  EntryMap comps;
};

// Validates component shape against the two complexes and the degree.
TwHomElement make_hom_element(const TwistedComplex& src,
                              const TwistedComplex& tgt, long long degree,
                              EntryMap comps);

TwHomElement identity_hom(const TwistedComplex& w);
bool hom_equal(const TwHomElement& a, const TwHomElement& b);
bool hom_is_zero(const TwHomElement& a);

// Linear structure on each Hom space. Addition requires equal sources,
// targets, and degrees (a zero element still carries its type).
TwHomElement hom_scale(const Rat& r, const TwHomElement& a);
TwHomElement hom_add(const TwHomElement& a, const TwHomElement& b);

// Pushes a morphism forward along a strict functor: both complexes and
// every component term are mapped. Strictness means no signs appear.
TwHomElement apply_functor_hom(const AInftyCategory& cat,
                               const StrictFunctor& f, const TwHomElement& h);

// Shifts source and target by the same total amount; the components keep
// their coefficients because both shift decorations move together.
TwHomElement shift_hom(const TwHomElement& h, int m);

// μ_Tw on a first-applied-first chain of morphisms: sums over all ways of
// interleaving δ-entries of the complexes between, before, and after the
// inputs, evaluating every chain with mu_addz. A single-element chain is
// the Hom-complex differential. Throws NotComposable when the chain is
// empty or consecutive complexes disagree.
TwHomElement mu_tw(const std::vector<TwHomElement>& chain);

// The canonical basis of the degree-k component of Hom(w1, w2): one
// element per (summand pair, matching basis morphism) triple.
std::vector<TwHomElement> hom_space_elements(const TwistedComplex& w1,
                                             const TwistedComplex& w2,
                                             long long k);

struct HomCohomology {
  int dimension = 0;
  std::vector<TwHomElement> representatives;  // one closed element per class
};

// Cohomology of (Hom(w1, w2), μ^1_Tw) in degree k, with representatives
// chosen to extend a basis of the coboundaries.
HomCohomology hom_cohomology(const TwistedComplex& w1, const TwistedComplex& w2,
                             long long k);

// True iff x - y is a coboundary (both must be morphisms between the same
// pair of complexes).
bool equal_mod_coboundaries(const TwHomElement& x, const TwHomElement& y);

struct H0IsoResult {
  bool is_iso = false;
  TwHomElement inverse;  // a degree-zero two-sided inverse up to coboundaries
};

// Decides whether a closed degree-zero morphism becomes invertible in the
// degree-zero cohomology category, by solving the affine system for an
// inverse together with the two correcting coboundaries. Throws
// NotACocycle when the input is not closed.
H0IsoResult is_h0_isomorphism(const TwHomElement& f);

}  // namespace orbifuk
