/**
 * skew.cpp — order-two skew-group layer over twisted complexes.
 *
 * Morphisms carry two parts, a ⊗ 1 + b ⊗ g. Products expand the 2^n tag
 * choices of a chain; each factor is transported through the tags applied
 * after it (an even number of tags cancels, an odd number applies g once)
 * and the transported chain is handed to μ_Tw. Since g is strict and
 * degree-preserving the transport introduces no signs of its own.
 *
 * Hom spaces between split objects are computed on cohomology: the two
 * blocks H(Hom(W, W')) ⊕ H(Hom(gW, W')) are projected by e' ∘ − ∘ e, the
 * projected classes are expressed in the representative basis modulo
 * coboundaries by one affine solve per representative, and the rank of
 * that matrix is the corner dimension. Representatives of the corner are
 * the projections whose classes enlarge the span.
 */
#include "orbifuk/skew.hpp"

#include <bit>
#include <map>
#include <tuple>
#include <utility>

#include "orbifuk/matrix.hpp"

namespace orbifuk {

namespace {

TwistedComplex g_tw(const SkewContext& ctx, const TwistedComplex& w) {
  return apply_functor_tw(*ctx.cat, ctx.g, w);
}

TwHomElement g_hom(const SkewContext& ctx, const TwHomElement& h) {
  return apply_functor_hom(*ctx.cat, ctx.g, h);
}

TwHomElement zero_hom(const TwistedComplex& src, const TwistedComplex& tgt,
                      long long degree) {
  return make_hom_element(src, tgt, degree, {});
}

const AInftyCategory::BasisElement& checked_basis(const SkewContext& ctx,
                                                  int basis) {
  if (basis < 0 || basis >= (int)ctx.cat->basis.size())
    throw ConfigurationError("no such basis morphism");
  return ctx.cat->basis[(size_t)basis];
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1)
    throw ParameterError("tag signs must be +1 or -1");
}

// Canonical coordinates on Hom(a, b) ⊕ Hom(ga, b) in a fixed degree. Each
// canonical element has a single component with coefficient one, so a
// component term is addressed by (block, summand pair, basis morphism).
struct BlockBasis {
  std::vector<TwHomElement> elems;
  int plain_count = 0;
  std::map<std::tuple<int, int, int, int>, int> pos;
};

BlockBasis block_basis(const TwistedComplex& a, const TwistedComplex& ga,
                       const TwistedComplex& b, long long k) {
  BlockBasis bb;
  for (int blk : {0, 1}) {
    const TwistedComplex& src = blk == 0 ? a : ga;
    std::vector<TwHomElement> elems = hom_space_elements(src, b, k);
    if (blk == 0) bb.plain_count = (int)elems.size();
    for (TwHomElement& e : elems) {
      const auto& [key, terms] = *e.comps.begin();
      bb.pos[{blk, key.first, key.second, terms.front().basis}] =
          (int)bb.elems.size();
      bb.elems.push_back(std::move(e));
    }
  }
  return bb;
}

std::vector<Rat> coords_of(const BlockBasis& bb, const SkewMorphism& m) {
  std::vector<Rat> v(bb.elems.size(), Rat(0));
  for (int blk : {0, 1}) {
    const TwHomElement& part = blk == 0 ? m.part_id : m.part_g;
    for (const auto& [key, terms] : part.comps)
      for (const ShiftedMorphism& t : terms) {
        auto it = bb.pos.find({blk, key.first, key.second, t.basis});
        if (it == bb.pos.end())
          throw std::logic_error("morphism outside the expected Hom space");
        v[(size_t)it->second] += t.coeff;
      }
  }
  return v;
}

SkewMorphism embed_block(const SkewContext& ctx, const BlockBasis& bb, int i) {
  return i < bb.plain_count
             ? skew_from_plain(ctx, bb.elems[(size_t)i])
             : skew_from_twisted_part(ctx, bb.elems[(size_t)i]);
}

// Columns of the differential C^{k-1} -> C^k in the canonical coordinates,
// written into sys starting at column col0.
void fill_differential(const SkewContext& ctx, const BlockBasis& prev,
                       const BlockBasis& cur, Matrix& sys, int col0) {
  for (int k = 0; k < (int)prev.elems.size(); ++k) {
    SkewMorphism d = mu_skew(ctx, {embed_block(ctx, prev, k)});
    std::vector<Rat> col = coords_of(cur, d);
    for (int r = 0; r < (int)col.size(); ++r)
      sys.add(r, col0 + k, col[(size_t)r]);
  }
}

}  // namespace

// ====== context and morphisms ======

NotCocycle::NotCocycle(SkewMorphism r)
    : std::runtime_error("split idempotent candidate is not closed"),
      residue(std::move(r)) {}

NotIdempotent::NotIdempotent(SkewMorphism d)
    : std::runtime_error("split candidate does not square to itself"),
      defect(std::move(d)) {}

SkewContext skew_context(const FukayaCategory& f) {
  return SkewContext{&f.cat, induced_involution(f)};
}

SkewMorphism make_skew_morphism(const SkewContext& ctx, TwHomElement part_id,
                                TwHomElement part_g) {
  if (ctx.cat == nullptr) throw std::logic_error("skew context is empty");
  if (part_id.src.cat != ctx.cat || part_g.src.cat != ctx.cat)
    throw std::logic_error("morphism parts live over another category");
  if (!tw_equal(part_g.src, g_tw(ctx, part_id.src)))
    throw std::logic_error(
        "g-part source is not the g-image of the plain source");
  if (!tw_equal(part_g.tgt, part_id.tgt))
    throw std::logic_error("the two parts have different targets");
  bool zid = hom_is_zero(part_id), zg = hom_is_zero(part_g);
  if (!zid && !zg && part_id.degree != part_g.degree)
    throw std::logic_error("the two parts have different degrees");
  SkewMorphism m;
  m.degree = zid ? part_g.degree : part_id.degree;
  m.part_id = std::move(part_id);
  m.part_g = std::move(part_g);
  m.part_id.degree = m.degree;
  m.part_g.degree = m.degree;
  return m;
}

SkewMorphism skew_zero(const SkewContext& ctx, const TwistedComplex& src,
                       const TwistedComplex& tgt, long long degree) {
  return make_skew_morphism(ctx, zero_hom(src, tgt, degree),
                            zero_hom(g_tw(ctx, src), tgt, degree));
}

SkewMorphism skew_unit(const SkewContext& ctx, const TwistedComplex& w) {
  return make_skew_morphism(ctx, identity_hom(w), zero_hom(g_tw(ctx, w), w, 0));
}

SkewMorphism skew_from_plain(const SkewContext& ctx, const TwHomElement& a) {
  return make_skew_morphism(ctx, a, zero_hom(g_tw(ctx, a.src), a.tgt, a.degree));
}

SkewMorphism skew_from_twisted_part(const SkewContext& ctx,
                                    const TwHomElement& b) {
  // The plain source is the g-image of b's source since g squares to one.
  return make_skew_morphism(ctx, zero_hom(g_tw(ctx, b.src), b.tgt, b.degree),
                            b);
}

SkewMorphism skew_scale(const Rat& r, const SkewMorphism& m) {
  SkewMorphism out;
  out.part_id = hom_scale(r, m.part_id);
  out.part_g = hom_scale(r, m.part_g);
  out.degree = m.degree;
  return out;
}

SkewMorphism skew_add(const SkewMorphism& a, const SkewMorphism& b) {
  if (!skew_is_zero(a) && !skew_is_zero(b) && a.degree != b.degree)
    throw std::logic_error("cannot add skew morphisms of different degrees");
  SkewMorphism out;
  out.part_id = hom_add(a.part_id, b.part_id);
  out.part_g = hom_add(a.part_g, b.part_g);
  out.degree = hom_is_zero(out.part_id)
                   ? (hom_is_zero(out.part_g) ? a.degree : out.part_g.degree)
                   : out.part_id.degree;
  return out;
}

bool skew_equal(const SkewMorphism& a, const SkewMorphism& b) {
  return tw_equal(a.part_id.src, b.part_id.src) &&
         tw_equal(a.part_id.tgt, b.part_id.tgt) &&
         hom_equal(a.part_id, b.part_id) && hom_equal(a.part_g, b.part_g);
}

bool skew_is_zero(const SkewMorphism& m) {
  return hom_is_zero(m.part_id) && hom_is_zero(m.part_g);
}

SkewMorphism mu_skew(const SkewContext& ctx,
                     const std::vector<SkewMorphism>& chain) {
  size_t n = chain.size();
  if (n == 0) throw NotComposable("empty skew chain");
  for (size_t i = 0; i + 1 < n; ++i)
    if (!tw_equal(chain[i].part_id.tgt, chain[i + 1].part_id.src))
      throw NotComposable("skew chain does not compose");

  long long degree = 2 - (long long)n;
  for (const SkewMorphism& m : chain) degree += m.degree;
  const TwistedComplex& src = chain.front().part_id.src;
  const TwistedComplex& tgt = chain.back().part_id.tgt;
  TwHomElement acc_id = zero_hom(src, tgt, degree);
  TwHomElement acc_g = zero_hom(g_tw(ctx, src), tgt, degree);

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<TwHomElement> twc;
    twc.reserve(n);
    bool dead = false;
    for (size_t i = 0; i < n; ++i) {
      bool tagged = (mask >> i) & 1u;
      const TwHomElement& part = tagged ? chain[i].part_g : chain[i].part_id;
      if (hom_is_zero(part)) {
        dead = true;
        break;
      }
      unsigned after = mask >> (i + 1);
      twc.push_back(std::popcount(after) % 2 == 1 ? g_hom(ctx, part) : part);
    }
    if (dead) continue;
    TwHomElement val = mu_tw(twc);
    if (std::popcount(mask) % 2 == 0)
      acc_id = hom_add(acc_id, val);
    else
      acc_g = hom_add(acc_g, val);
  }
  return make_skew_morphism(ctx, acc_id, acc_g);
}

// ====== split objects ======

SplitObject make_split(const SkewContext& ctx, const TwistedComplex& base,
                       const SkewMorphism& e) {
  SkewMorphism em = make_skew_morphism(ctx, e.part_id, e.part_g);
  if (!tw_equal(em.part_id.src, base) || !tw_equal(em.part_id.tgt, base))
    throw std::logic_error("idempotent is not an endomorphism of the base");
  if (!skew_is_zero(em) && em.degree != 0)
    throw std::logic_error("split idempotents must have degree zero");
  SkewMorphism residue = mu_skew(ctx, {em});
  if (!skew_is_zero(residue)) throw NotCocycle(residue);
  SkewMorphism defect =
      skew_add(mu_skew(ctx, {em, em}), skew_scale(Rat(-1), em));
  if (!skew_is_zero(defect)) throw NotIdempotent(defect);
  return SplitObject{base, std::move(em)};
}

SplitObject unsplit(const SkewContext& ctx, const TwistedComplex& w) {
  return make_split(ctx, w, skew_unit(ctx, w));
}

SplitObject complement_split(const SkewContext& ctx, const SplitObject& s) {
  SkewMorphism rest =
      skew_add(skew_unit(ctx, s.base), skew_scale(Rat(-1), s.idem));
  return make_split(ctx, s.base, rest);
}

bool split_equal(const SplitObject& a, const SplitObject& b) {
  return tw_equal(a.base, b.base) && skew_equal(a.idem, b.idem);
}

SplitObject transport_split(const SkewContext& ctx, const SplitObject& s) {
  TwistedComplex gb = g_tw(ctx, s.base);
  SkewMorphism e = make_skew_morphism(ctx, g_hom(ctx, s.idem.part_id),
                                      g_hom(ctx, s.idem.part_g));
  return make_split(ctx, gb, e);
}

SplitObject shift_split(const SplitObject& s, int m) {
  SplitObject out;
  out.base = shift_complex(s.base, m);
  out.idem.part_id = shift_hom(s.idem.part_id, m);
  out.idem.part_g = shift_hom(s.idem.part_g, m);
  out.idem.degree = s.idem.degree;
  return out;
}

SplitObject tagged_arc(const SkewContext& ctx, int arc, int sign) {
  check_sign(sign);
  if (arc < 0 || arc >= (int)ctx.g.object_map.size())
    throw ConfigurationError("no such arc");
  if (ctx.g.object_map[(size_t)arc] != arc)
    throw ConfigurationError("only arcs fixed by the involution carry tags");
  TwistedComplex w = make_twisted(*ctx.cat, {{arc, 0}}, {});
  EntryMap comps;
  comps[{0, 0}] = {
      ShiftedMorphism{Rat(1), ctx.cat->unit_of[(size_t)arc], 0, 0}};
  TwHomElement ug = make_hom_element(g_tw(ctx, w), w, 0, comps);
  SkewMorphism e =
      skew_add(skew_scale(Rat(1) / Rat(2), skew_unit(ctx, w)),
               skew_scale(Rat(sign) / Rat(2), skew_from_twisted_part(ctx, ug)));
  return make_split(ctx, w, e);
}

// ====== corner Hom spaces ======

CornerHom corner_hom(const SkewContext& ctx, const SplitObject& a,
                     const SplitObject& b, long long ell) {
  if (a.base.cat != ctx.cat || b.base.cat != ctx.cat)
    throw std::logic_error("split objects live over another category");
  TwistedComplex ga = g_tw(ctx, a.base);

  std::vector<SkewMorphism> reps;
  for (const TwHomElement& r : hom_cohomology(a.base, b.base, ell).representatives)
    reps.push_back(skew_from_plain(ctx, r));
  for (const TwHomElement& r : hom_cohomology(ga, b.base, ell).representatives)
    reps.push_back(skew_from_twisted_part(ctx, r));

  CornerHom out;
  if (reps.empty()) return out;
  int m = (int)reps.size();

  BlockBasis cur = block_basis(a.base, ga, b.base, ell);
  BlockBasis prev = block_basis(a.base, ga, b.base, ell - 1);

  // [classes | coboundaries] z = projected element; the class block of z
  // is unique because the representatives are independent in cohomology.
  Matrix sys((int)cur.elems.size(), m + (int)prev.elems.size());
  for (int j = 0; j < m; ++j) {
    std::vector<Rat> col = coords_of(cur, reps[(size_t)j]);
    for (int r = 0; r < (int)col.size(); ++r) sys.add(r, j, col[(size_t)r]);
  }
  fill_differential(ctx, prev, cur, sys, m);

  SpanTracker span;
  for (int i = 0; i < m; ++i) {
    SkewMorphism projected =
        mu_skew(ctx, {mu_skew(ctx, {a.idem, reps[(size_t)i]}), b.idem});
    std::optional<std::vector<Rat>> sol =
        solve_affine(sys, coords_of(cur, projected));
    if (!sol) throw std::logic_error("projection left the cohomology span");
    std::vector<Rat> cls(sol->begin(), sol->begin() + m);
    if (span.accept(std::move(cls)))
      out.representatives.push_back(std::move(projected));
  }
  out.dimension = span.dim();
  return out;
}

bool skew_class_is_zero(const SkewContext& ctx, const SkewMorphism& m) {
  if (!skew_is_zero(mu_skew(ctx, {m})))
    throw std::logic_error("only closed morphisms have a class");
  const TwistedComplex& src = m.part_id.src;
  const TwistedComplex& tgt = m.part_id.tgt;
  TwistedComplex gsrc = g_tw(ctx, src);
  BlockBasis cur = block_basis(src, gsrc, tgt, m.degree);
  BlockBasis prev = block_basis(src, gsrc, tgt, m.degree - 1);
  Matrix d((int)cur.elems.size(), (int)prev.elems.size());
  fill_differential(ctx, prev, cur, d, 0);
  return solve_affine(d, coords_of(cur, m)).has_value();
}

bool corner_isomorphic(const SkewContext& ctx, const SplitObject& a,
                       const SplitObject& b) {
  if (corner_hom(ctx, a, a, 0).dimension != 1 ||
      corner_hom(ctx, b, b, 0).dimension != 1)
    throw std::logic_error(
        "isomorphism testing needs scalar endomorphism corners");
  CornerHom fwd = corner_hom(ctx, a, b, 0);
  CornerHom bwd = corner_hom(ctx, b, a, 0);
  for (const SkewMorphism& f : fwd.representatives)
    for (const SkewMorphism& h : bwd.representatives) {
      // h ∘ f is a degree-zero corner endomorphism of a; for scalar
      // corners a nonzero class is invertible, and then f is invertible
      // from either side by the same scalar argument.
      if (!skew_class_is_zero(ctx, mu_skew(ctx, {f, h}))) return true;
    }
  return false;
}

// ====== tagged arc pairs ======

TildeArc build_tilde_arc(const SkewContext& ctx, int a1_basis, int a0ga2_basis,
                         int p, int sign) {
  check_sign(sign);
  const auto& a1 = checked_basis(ctx, a1_basis);
  const auto& a02 = checked_basis(ctx, a0ga2_basis);
  if (a1.is_unit || a02.is_unit)
    throw ConfigurationError("units cannot form an arc pair");
  int X1 = a1.src, X2 = a1.tgt;
  int gX1 = ctx.g.object_map[(size_t)X1], gX2 = ctx.g.object_map[(size_t)X2];
  if (gX1 == X1 || gX2 == X2)
    throw ConfigurationError("both arcs of the pair must be moved by the involution");
  if (X1 == X2 || gX1 == X2)
    throw ConfigurationError("the two arcs must span different orbits");
  if (a02.src != gX2 || a02.tgt != X1)
    throw ConfigurationError(
        "the closing corner must run from the image of the second arc back "
        "to the first");
  if (a1.degree + a02.degree != 1)
    throw ConfigurationError("the two corner degrees must add up to one");

  int q = p + (int)a1.degree - 1;
  EntryMap delta;
  delta[{0, 1}] = {ShiftedMorphism{Rat(1), a1_basis, p, q}};
  TwistedComplex base =
      make_twisted(*ctx.cat, {{X1, p}, {X2, q}}, std::move(delta));

  EntryMap pc;
  pc[{1, 0}] = {ShiftedMorphism{sign_pow(p), a0ga2_basis, q, p}};
  TwHomElement phi = make_hom_element(g_tw(ctx, base), base, 0, std::move(pc));
  if (!hom_equal(mu_tw({g_hom(ctx, phi), phi}), identity_hom(base)))
    throw ConfigurationError("the closing corner does not invert");

  SkewMorphism e = skew_add(
      skew_scale(Rat(1) / Rat(2), skew_unit(ctx, base)),
      skew_scale(Rat(sign) / Rat(2), skew_from_twisted_part(ctx, phi)));
  return TildeArc{make_split(ctx, base, e), std::move(phi)};
}

// ====== double-tagged bands ======

DoubleTaggedBand build_double_tagged(const SkewContext& ctx, int c_basis,
                                     long long p, long long q, int eps_p,
                                     int eps_q) {
  check_sign(eps_p);
  check_sign(eps_q);
  const auto& c = checked_basis(ctx, c_basis);
  if (c.is_unit)
    throw ConfigurationError("a unit cannot connect the band's two arcs");
  int X = c.src, Y = c.tgt;
  if (ctx.g.object_map[(size_t)X] != X || ctx.g.object_map[(size_t)Y] != Y)
    throw ConfigurationError("band endpoints must be invariant arcs");
  if (X == Y)
    throw ConfigurationError("the band needs two distinct invariant arcs");
  if (q != p + c.degree)
    throw ConfigurationError("shifts must satisfy q = p + |c|");
  const auto& [gcoeff, gc_basis] = ctx.g.basis_map[(size_t)c_basis];
  if (gc_basis == c_basis)
    throw ConfigurationError("the connecting corner must be moved by the involution");

  Rat lambda = Rat(eps_p * eps_q);
  EntryMap delta;
  delta[{0, 1}] = {
      ShiftedMorphism{lambda * sign_pow(c.degree - 1), c_basis, (int)p,
                      (int)(q - 1)},
      ShiftedMorphism{gcoeff, gc_basis, (int)p, (int)(q - 1)}};
  TwistedComplex base = make_twisted(
      *ctx.cat, {{X, (int)p}, {Y, (int)(q - 1)}}, std::move(delta));

  EntryMap pc;
  pc[{0, 0}] = {ShiftedMorphism{Rat(eps_p) * sign_pow(p) / Rat(2),
                                ctx.cat->unit_of[(size_t)X], (int)p, (int)p}};
  pc[{1, 1}] = {ShiftedMorphism{Rat(eps_q) * sign_pow(q - 1) / Rat(2),
                                ctx.cat->unit_of[(size_t)Y], (int)(q - 1),
                                (int)(q - 1)}};
  TwHomElement half_g = make_hom_element(g_tw(ctx, base), base, 0, std::move(pc));
  SkewMorphism e = skew_add(skew_scale(Rat(1) / Rat(2), skew_unit(ctx, base)),
                            skew_from_twisted_part(ctx, half_g));

  DoubleTaggedBand out;
  out.object = make_split(ctx, base, e);
  out.eps_p = eps_p;
  out.eps_q = eps_q;
  out.p = p;
  out.q = q;
  out.lambda = lambda;
  return out;
}

// ====== symmetric bands ======

SymmetricBand build_symmetric_band(const SkewContext& ctx, int a_basis,
                                   int aprime_basis, int p, const Rat& lambda,
                                   int sign) {
  check_sign(sign);
  if (lambda == 0) throw ParameterError("the band parameter must be nonzero");
  const auto& a = checked_basis(ctx, a_basis);
  const auto& ap = checked_basis(ctx, aprime_basis);
  if (a.is_unit || ap.is_unit)
    throw ConfigurationError("units cannot connect the band's arcs");
  if (a.degree != 0 || ap.degree != 0)
    throw ConfigurationError("both connecting corners must have degree zero");
  int X3 = a.src, X4 = a.tgt;
  int gX3 = ctx.g.object_map[(size_t)X3], gX4 = ctx.g.object_map[(size_t)X4];
  if (gX3 == X3 || gX4 == X4)
    throw ConfigurationError("band arcs must be moved by the involution");
  if (X3 == X4 || gX3 == X4 || gX4 == X3)
    throw ConfigurationError("the band needs two distinct arc orbits");
  if (ap.src != gX3 || ap.tgt != X4)
    throw ConfigurationError(
        "the second corner must run from the image of the first's source "
        "into the same target");

  const auto& [ga_coeff, ga_basis] = ctx.g.basis_map[(size_t)a_basis];
  const auto& [gap_coeff, gap_basis] = ctx.g.basis_map[(size_t)aprime_basis];
  int lo = p - 1;
  EntryMap delta;
  delta[{0, 2}] = {ShiftedMorphism{lambda, a_basis, p, lo}};
  delta[{0, 3}] = {ShiftedMorphism{gap_coeff, gap_basis, p, lo}};
  delta[{1, 2}] = {ShiftedMorphism{Rat(1), aprime_basis, p, lo}};
  delta[{1, 3}] = {ShiftedMorphism{lambda * ga_coeff, ga_basis, p, lo}};
  TwistedComplex base = make_twisted(
      *ctx.cat, {{X3, p}, {gX3, p}, {X4, lo}, {gX4, lo}}, std::move(delta));

  // g permutes each summand with its partner; the closing morphism is the
  // same permutation by units, closed for every parameter value.
  int objs[4] = {X3, gX3, X4, gX4};
  int partner[4] = {1, 0, 3, 2};
  EntryMap pc;
  for (int i = 0; i < 4; ++i) {
    int sh = i < 2 ? p : lo;
    pc[{i, partner[i]}] = {ShiftedMorphism{
        Rat(1), ctx.cat->unit_of[(size_t)objs[partner[i]]], sh, sh}};
  }
  TwHomElement phi = make_hom_element(g_tw(ctx, base), base, 0, std::move(pc));
  SkewMorphism e = skew_add(
      skew_scale(Rat(1) / Rat(2), skew_unit(ctx, base)),
      skew_scale(Rat(sign) / Rat(2), skew_from_twisted_part(ctx, phi)));

  SymmetricBand out;
  out.object = make_split(ctx, base, e);
  out.lambda = lambda;
  out.sign = sign;
  return out;
}

}  // namespace orbifuk
