/**
 * skew.hpp — the order-two skew-group layer over twisted complexes.
 *
 * Morphisms between complexes W, W' acquire a second component along the
 * deck transformation g: an element of Hom(W, W') ⊕ Hom(gW, W'), written
 * a ⊗ 1 + b ⊗ g. Products transport the earlier factors through the tags
 * of the later ones; because g is strict and degree-preserving, no signs
 * appear beyond those of the underlying twisted complexes. Objects are
 * split by degree-zero idempotents of this algebra — the engine keeps the
 * ambient complex together with its idempotent and computes Hom spaces
 * between split objects as the induced corner of the plain cohomology.
 *
 * Constructors for the standard split objects live here as well: invariant
 * arcs tagged by a sign, the two-term complex of an arc pair exchanged by
 * g (closed by a corner that squares to the identity), double-tagged bands
 * on two invariant arcs, and symmetric bands on summand pairs permuted by
 * g. Each validates its input configuration and certifies closedness and
 * idempotency of the produced idempotent exactly.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "orbifuk/fukaya.hpp"
#include "orbifuk/tw.hpp"

namespace orbifuk {

// ====== context ======

// The ambient category together with the strict order-two functor g.
struct SkewContext {
  const AInftyCategory* cat = nullptr;
  StrictFunctor g;
};

// Builds the context from a surface category and its involution.
SkewContext skew_context(const FukayaCategory& f);

// ====== morphisms ======

// a ⊗ 1 + b ⊗ g with a : W -> W' and b : gW -> W', both of the same pure
// degree. A zero part still carries its source and target.
struct SkewMorphism {
  TwHomElement part_id;
  TwHomElement part_g;
  long long degree = 0;
};

// Thrown when a candidate idempotent is not closed; carries d(e).
struct NotCocycle : std::runtime_error {
  SkewMorphism residue;
  explicit NotCocycle(SkewMorphism r);
};

// Thrown when a closed candidate fails e∘e = e; carries e∘e - e.
struct NotIdempotent : std::runtime_error {
  SkewMorphism defect;
  explicit NotIdempotent(SkewMorphism d);
};

// Thrown when a constructor's input arcs or corners do not form the shape
// the construction needs (wrong endpoints, degrees, or invariance).
struct ConfigurationError : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown for scalar inputs outside their allowed range (signs, parameters).
struct ParameterError : std::logic_error {
  using std::logic_error::logic_error;
};

// Validates that part_g runs from the g-image of part_id's source into the
// same target, and that nonzero parts agree in degree.
SkewMorphism make_skew_morphism(const SkewContext& ctx, TwHomElement part_id,
                                TwHomElement part_g);

SkewMorphism skew_zero(const SkewContext& ctx, const TwistedComplex& src,
                       const TwistedComplex& tgt, long long degree);
SkewMorphism skew_unit(const SkewContext& ctx, const TwistedComplex& w);
// Embeds a plain morphism as a ⊗ 1, or a g-twisted one as b ⊗ g.
SkewMorphism skew_from_plain(const SkewContext& ctx, const TwHomElement& a);
SkewMorphism skew_from_twisted_part(const SkewContext& ctx,
                                    const TwHomElement& b);
SkewMorphism skew_scale(const Rat& r, const SkewMorphism& m);
SkewMorphism skew_add(const SkewMorphism& a, const SkewMorphism& b);
bool skew_equal(const SkewMorphism& a, const SkewMorphism& b);
bool skew_is_zero(const SkewMorphism& m);

// μ on a first-applied-first chain of skew morphisms: expands the 2^n tag
// choices, transports each factor through the product of the tags applied
// after it, and evaluates μ_Tw on the resulting chain. A single-element
// chain is the differential, which acts blockwise on the two parts.
SkewMorphism mu_skew(const SkewContext& ctx,
                     const std::vector<SkewMorphism>& chain);

// ====== split objects ======

// An ambient complex together with a degree-zero idempotent endomorphism;
// the pair stands for the direct summand the idempotent cuts out.
struct SplitObject {
  TwistedComplex base;
  SkewMorphism idem;
};

// Validates degree zero, closedness (NotCocycle), and exact idempotency
// (NotIdempotent).
SplitObject make_split(const SkewContext& ctx, const TwistedComplex& base,
                       const SkewMorphism& e);

// The whole complex, split by its identity.
SplitObject unsplit(const SkewContext& ctx, const TwistedComplex& w);

// The complementary summand, split by 1 - e.
SplitObject complement_split(const SkewContext& ctx, const SplitObject& s);

// Equal base complexes and equal idempotents, both exactly.
bool split_equal(const SplitObject& a, const SplitObject& b);

// Image of a split object under the deck functor: both the base and the
// idempotent are pushed forward.
SplitObject transport_split(const SkewContext& ctx, const SplitObject& s);

// Total shift of base and idempotent.
SplitObject shift_split(const SplitObject& s, int m);

// A g-invariant arc split by (1 ⊗ 1 + sign · 1 ⊗ g)/2. Rejects arcs moved
// by g (ConfigurationError) and signs outside {+1, -1} (ParameterError).
SplitObject tagged_arc(const SkewContext& ctx, int arc, int sign);

// ====== corner Hom spaces ======

struct CornerHom {
  int dimension = 0;
  std::vector<SkewMorphism> representatives;  // closed, one per class
};

// Dimension and representatives of e_b ∘ H^ell(Hom(a, b)) ∘ e_a, the
// degree-ell Hom space between the split objects.
CornerHom corner_hom(const SkewContext& ctx, const SplitObject& a,
                     const SplitObject& b, long long ell);

// True iff the closed morphism is a coboundary.
bool skew_class_is_zero(const SkewContext& ctx, const SkewMorphism& m);

// Decides isomorphism of two split objects with one-dimensional
// degree-zero endomorphism corners ("bricks") by searching for a pair of
// degree-zero corner classes composing to a nonzero multiple of each
// identity. Throws std::logic_error when an endomorphism corner is not
// one-dimensional.
bool corner_isomorphic(const SkewContext& ctx, const SplitObject& a,
                       const SplitObject& b);

// ====== tagged arc pairs ======

// The two-term complex X1[p] -> X2[p + |a1| - 1] over an arc pair exchanged
// by g, closed by the corner a0ga2 : gX2 -> X1, split by the idempotents
// (1 ± φ ⊗ g)/2 where φ = (-1)^p s^{1-|a1|} ⊗ a0ga2. Validates the
// triangle shape, |a0ga2| + |a1| = 1, and μ²(φ, gφ) = 1 exactly.
struct TildeArc {
  SplitObject object;
  TwHomElement phi;
};

TildeArc build_tilde_arc(const SkewContext& ctx, int a1_basis,
                         int a0ga2_basis, int p, int sign);

// ====== double-tagged bands ======

// The band complex X[p] -> Y[q-1] over two invariant arcs with connecting
// corner c : X -> Y, |c| = q - p, and differential
// λ(-1)^{|c|-1} c + g(c), split by
// e = (1_X ⊗ (1 + εP(-1)^p g) + 1_Y ⊗ (1 + εQ(-1)^{q-1} g))/2,
// where λ = εP·εQ. Signs outside {±1} raise ParameterError; wrong degree
// or non-invariant endpoints raise ConfigurationError.
struct DoubleTaggedBand {
  SplitObject object;
  int eps_p = 1;
  int eps_q = 1;
  long long p = 0;
  long long q = 0;
  Rat lambda;
};

DoubleTaggedBand build_double_tagged(const SkewContext& ctx, int c_basis,
                                     long long p, long long q, int eps_p,
                                     int eps_q);

// ====== symmetric bands ======

// The four-term complex (X3[p], gX3[p], X4[p-1], gX4[p-1]) with arrows
// λa, ga', a', λga for a : X3 -> X4, a' : gX3 -> X4 of degree zero, split
// by (1 ± φ ⊗ g)/2 where φ permutes each summand with its g-image. The
// parameter λ must be nonzero; the split object realizes λ² of the
// ordinary band family.
struct SymmetricBand {
  SplitObject object;
  Rat lambda;
  int sign = 1;
};

SymmetricBand build_symmetric_band(const SkewContext& ctx, int a_basis,
                                   int aprime_basis, int p, const Rat& lambda,
                                   int sign);

}  // namespace orbifuk
