/**
 * tw.cpp — twisted complexes: validation, products, cohomology.
 *
 * All products reduce to mu_addz on interleaved chains, enumerated by a
 * depth-first walk that alternates strictly ascending δ-paths inside each
 * complex with exactly one component of each input morphism. Cohomology
 * and invertibility questions reduce to exact linear algebra over ℚ in
 * the canonical cochain bases produced by hom_space_elements.
 */
#include "orbifuk/tw.hpp"

#include "orbifuk/matrix.hpp"

#include <functional>
#include <string>
#include <tuple>

namespace orbifuk {

MaurerCartanViolation::MaurerCartanViolation(EntryMap r)
    : std::runtime_error("Maurer-Cartan sum does not vanish"),
      residue(std::move(r)) {}

namespace {

// Combines like terms within each entry and drops zeros; entries that empty
// out are removed. Within one entry the summand shifts are fixed, so terms
// are distinguished by basis id alone.
void normalize_entries(EntryMap& m) {
  for (auto it = m.begin(); it != m.end();) {
    std::map<int, ShiftedMorphism> by_basis;
    for (const ShiftedMorphism& t : it->second) {
      auto jt = by_basis.find(t.basis);
      if (jt == by_basis.end())
        by_basis.emplace(t.basis, t);
      else
        jt->second.coeff += t.coeff;
    }
    EntrySum out;
    for (auto& [bid, t] : by_basis) {
      (void)bid;
      if (!(t.coeff == 0)) out.push_back(t);
    }
    if (out.empty()) {
      it = m.erase(it);
    } else {
      it->second = std::move(out);
      ++it;
    }
  }
}

bool entry_maps_equal(const EntryMap& a, const EntryMap& b) {
  if (a.size() != b.size()) return false;
  auto it = a.begin();
  auto jt = b.begin();
  for (; it != a.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second.size() != jt->second.size()) return false;
    for (size_t k = 0; k < it->second.size(); ++k) {
      const ShiftedMorphism& x = it->second[k];
      const ShiftedMorphism& y = jt->second[k];
      if (x.basis != y.basis || !(x.coeff == y.coeff) ||
          x.src_shift != y.src_shift || x.tgt_shift != y.tgt_shift)
        return false;
    }
  }
  return true;
}

// Validates every term of an entry matrix against the summand lists: the
// basis morphism must run between the named summand objects, carry their
// shifts, and have the stated total degree.
void check_entry_terms(const AInftyCategory& cat,
                       const std::vector<Summand>& src_sum,
                       const std::vector<Summand>& tgt_sum, const EntryMap& m,
                       long long degree, const char* what) {
  for (const auto& [key, terms] : m) {
    if (key.first < 0 || key.first >= (int)src_sum.size() || key.second < 0 ||
        key.second >= (int)tgt_sum.size())
      throw std::logic_error(std::string(what) +
                             ": component index out of range");
    const Summand& si = src_sum[(size_t)key.first];
    const Summand& tj = tgt_sum[(size_t)key.second];
    for (const ShiftedMorphism& t : terms) {
      if (t.basis < 0 || t.basis >= (int)cat.basis.size())
        throw std::logic_error(std::string(what) + ": basis id out of range");
      const auto& be = cat.basis[(size_t)t.basis];
      if (be.src != si.object || be.tgt != tj.object)
        throw std::logic_error(std::string(what) + ": term " + be.label +
                               " does not run between the summand objects");
      if (t.src_shift != si.shift || t.tgt_shift != tj.shift)
        throw std::logic_error(std::string(what) + ": term " + be.label +
                               " carries the wrong summand shifts");
      if (shifted_degree(cat, t) != degree)
        throw std::logic_error(std::string(what) + ": term " + be.label +
                               " has the wrong total degree");
    }
  }
}

// Sum of mu over all strictly ascending δ-paths of length >= 2, entry by
// entry. A valid complex returns an empty map.
EntryMap curvature_sum(const TwistedComplex& w) {
  EntryMap residue;
  std::vector<ShiftedMorphism> chain;
  std::function<void(int, int)> rec = [&](int start, int cur) {
    for (const auto& [key, terms] : w.delta) {
      if (key.first != cur) continue;
      for (const ShiftedMorphism& t : terms) {
        chain.push_back(t);
        if (chain.size() >= 2)
          for (const ShiftedMorphism& r : mu_addz(*w.cat, chain))
            residue[{start, key.second}].push_back(r);
        rec(start, key.second);
        chain.pop_back();
      }
    }
  };
  for (int s = 0; s < (int)w.summands.size(); ++s) rec(s, s);
  normalize_entries(residue);
  return residue;
}

}  // namespace

// ====== construction, equality, reshaping ======

TwistedComplex make_twisted(const AInftyCategory& cat,
                            std::vector<Summand> summands, EntryMap delta) {
  TwistedComplex w;
  w.cat = &cat;
  for (const Summand& s : summands)
    if (s.object < 0 || s.object >= (int)cat.objects.size())
      throw std::logic_error("twisted complex: summand object out of range");
  w.summands = std::move(summands);
  for (const auto& [key, terms] : delta) {
    (void)terms;
    if (key.first >= key.second)
      throw NotUpperTriangular("delta entry (" + std::to_string(key.first) +
                               "," + std::to_string(key.second) +
                               ") is not strictly above the diagonal");
  }
  check_entry_terms(cat, w.summands, w.summands, delta, 1, "delta");
  normalize_entries(delta);
  w.delta = std::move(delta);
  EntryMap residue = curvature_sum(w);
  if (!residue.empty()) throw MaurerCartanViolation(std::move(residue));
  return w;
}

bool tw_equal(const TwistedComplex& a, const TwistedComplex& b) {
  if (a.cat != b.cat) return false;
  if (a.summands.size() != b.summands.size()) return false;
  for (size_t k = 0; k < a.summands.size(); ++k)
    if (a.summands[k].object != b.summands[k].object ||
        a.summands[k].shift != b.summands[k].shift)
      return false;
  return entry_maps_equal(a.delta, b.delta);
}

TwistedComplex shift_complex(const TwistedComplex& w, int m) {
  std::vector<Summand> s = w.summands;
  for (Summand& x : s) x.shift += m;
  EntryMap d = w.delta;
  for (auto& [key, terms] : d) {
    (void)key;
    for (ShiftedMorphism& t : terms) {
      t.src_shift += m;
      t.tgt_shift += m;
    }
  }
  return make_twisted(*w.cat, std::move(s), std::move(d));
}

TwistedComplex permute_summands(const TwistedComplex& w,
                                const std::vector<int>& perm) {
  int n = (int)w.summands.size();
  if ((int)perm.size() != n)
    throw std::logic_error("permutation length differs from summand count");
  std::vector<int> pos((size_t)n, -1);  // old index -> new position
  for (int k = 0; k < n; ++k) {
    if (perm[(size_t)k] < 0 || perm[(size_t)k] >= n ||
        pos[(size_t)perm[(size_t)k]] != -1)
      throw std::logic_error("not a permutation of the summands");
    pos[(size_t)perm[(size_t)k]] = k;
  }
  std::vector<Summand> s((size_t)n);
  for (int k = 0; k < n; ++k) s[(size_t)k] = w.summands[(size_t)perm[(size_t)k]];
  EntryMap d;
  for (const auto& [key, terms] : w.delta)
    d[{pos[(size_t)key.first], pos[(size_t)key.second]}] = terms;
  return make_twisted(*w.cat, std::move(s), std::move(d));
}

TwistedComplex apply_functor_tw(const AInftyCategory& cat,
                                const StrictFunctor& f,
                                const TwistedComplex& w) {
  if (w.cat != &cat)
    throw std::logic_error("functor applied over a different category");
  std::vector<Summand> s = w.summands;
  for (Summand& x : s) x.object = f.object_map[(size_t)x.object];
  EntryMap d;
  for (const auto& [key, terms] : w.delta) {
    EntrySum out;
    out.reserve(terms.size());
    for (const ShiftedMorphism& t : terms)
      out.push_back(apply_functor(cat, f, t));
    d[key] = std::move(out);
  }
  return make_twisted(cat, std::move(s), std::move(d));
}

// ====== morphisms ======

TwHomElement make_hom_element(const TwistedComplex& src,
                              const TwistedComplex& tgt, long long degree,
                              EntryMap comps) {
  if (src.cat == nullptr || src.cat != tgt.cat)
    throw std::logic_error("hom element: complexes over different categories");
  check_entry_terms(*src.cat, src.summands, tgt.summands, comps, degree,
                    "hom element");
  normalize_entries(comps);
  TwHomElement e;
  e.src = src;
  e.tgt = tgt;
  e.degree = degree;
  e.comps = std::move(comps);
  return e;
}

TwHomElement identity_hom(const TwistedComplex& w) {
  EntryMap comps;
  for (int i = 0; i < (int)w.summands.size(); ++i) {
    const Summand& s = w.summands[(size_t)i];
    comps[{i, i}] = {ShiftedMorphism{
        Rat(1), w.cat->unit_of[(size_t)s.object], s.shift, s.shift}};
  }
  return make_hom_element(w, w, 0, std::move(comps));
}

bool hom_equal(const TwHomElement& a, const TwHomElement& b) {
  if (!tw_equal(a.src, b.src) || !tw_equal(a.tgt, b.tgt)) return false;
  if (a.comps.empty() && b.comps.empty()) return true;
  if (a.degree != b.degree) return false;
  return entry_maps_equal(a.comps, b.comps);
}

bool hom_is_zero(const TwHomElement& a) { return a.comps.empty(); }

TwHomElement hom_scale(const Rat& r, const TwHomElement& a) {
  EntryMap comps = a.comps;
  for (auto& [key, terms] : comps) {
    (void)key;
    for (ShiftedMorphism& t : terms) t.coeff *= r;
  }
  return make_hom_element(a.src, a.tgt, a.degree, std::move(comps));
}

TwHomElement hom_add(const TwHomElement& a, const TwHomElement& b) {
  if (!tw_equal(a.src, b.src) || !tw_equal(a.tgt, b.tgt))
    throw std::logic_error("hom add: morphisms between different complexes");
  if (!a.comps.empty() && !b.comps.empty() && a.degree != b.degree)
    throw std::logic_error("hom add: morphisms of different degrees");
  long long degree = a.comps.empty() ? b.degree : a.degree;
  EntryMap comps = a.comps;
  for (const auto& [key, terms] : b.comps) {
    EntrySum& slot = comps[key];
    slot.insert(slot.end(), terms.begin(), terms.end());
  }
  return make_hom_element(a.src, a.tgt, degree, std::move(comps));
}

TwHomElement apply_functor_hom(const AInftyCategory& cat,
                               const StrictFunctor& f, const TwHomElement& h) {
  TwistedComplex src = apply_functor_tw(cat, f, h.src);
  TwistedComplex tgt = apply_functor_tw(cat, f, h.tgt);
  EntryMap comps;
  for (const auto& [key, terms] : h.comps) {
    EntrySum out;
    out.reserve(terms.size());
    for (const ShiftedMorphism& t : terms)
      out.push_back(apply_functor(cat, f, t));
    comps[key] = std::move(out);
  }
  return make_hom_element(src, tgt, h.degree, std::move(comps));
}

TwHomElement shift_hom(const TwHomElement& h, int m) {
  TwistedComplex src = shift_complex(h.src, m);
  TwistedComplex tgt = shift_complex(h.tgt, m);
  EntryMap comps;
  for (const auto& [key, terms] : h.comps) {
    EntrySum out;
    out.reserve(terms.size());
    for (ShiftedMorphism t : terms) {
      t.src_shift += m;
      t.tgt_shift += m;
      out.push_back(t);
    }
    comps[key] = std::move(out);
  }
  return make_hom_element(src, tgt, h.degree, std::move(comps));
}

TwHomElement mu_tw(const std::vector<TwHomElement>& chain) {
  if (chain.empty()) throw NotComposable("mu_tw: empty chain");
  const AInftyCategory* cat = chain[0].src.cat;
  for (const TwHomElement& f : chain)
    if (f.src.cat != cat || f.tgt.cat != cat)
      throw NotComposable("mu_tw: chain mixes categories");
  for (size_t t = 0; t + 1 < chain.size(); ++t)
    if (!tw_equal(chain[t].tgt, chain[t + 1].src))
      throw NotComposable("mu_tw: target of chain entry " + std::to_string(t) +
                          " differs from the next source");
  const size_t n = chain.size();
  long long deg = 2 - (long long)n;
  for (const TwHomElement& f : chain) deg += f.degree;

  // Complexes along the chain: W[0] = first source, W[t] = t-th target.
  std::vector<const TwistedComplex*> W(n + 1);
  W[0] = &chain[0].src;
  for (size_t t = 0; t < n; ++t) W[t + 1] = &chain[t].tgt;

  EntryMap acc;
  std::vector<ShiftedMorphism> terms;
  // rec(t, start, cur): t inputs consumed, at summand cur of W[t]. Records
  // the accumulated chain whenever all inputs are consumed, then keeps
  // extending by δ-entries; within W[t] the walk may also consume the next
  // input from its current summand.
  std::function<void(size_t, int, int)> rec = [&](size_t t, int start,
                                                  int cur) {
    if (t == n) {
      for (const ShiftedMorphism& r : mu_addz(*cat, terms))
        acc[{start, cur}].push_back(r);
    } else {
      for (const auto& [key, ts] : chain[t].comps) {
        if (key.first != cur) continue;
        for (const ShiftedMorphism& x : ts) {
          terms.push_back(x);
          rec(t + 1, start, key.second);
          terms.pop_back();
        }
      }
    }
    for (const auto& [key, ts] : W[t]->delta) {
      if (key.first != cur) continue;
      for (const ShiftedMorphism& x : ts) {
        terms.push_back(x);
        rec(t, start, key.second);
        terms.pop_back();
      }
    }
  };
  for (int s = 0; s < (int)W[0]->summands.size(); ++s) rec(0, s, s);
  normalize_entries(acc);
  TwHomElement out;
  out.src = *W[0];
  out.tgt = *W[n];
  out.degree = deg;
  out.comps = std::move(acc);
  return out;
}

// ====== cochain coordinates ======

std::vector<TwHomElement> hom_space_elements(const TwistedComplex& w1,
                                             const TwistedComplex& w2,
                                             long long k) {
  if (w1.cat == nullptr || w1.cat != w2.cat)
    throw std::logic_error("hom space: complexes over different categories");
  const AInftyCategory& cat = *w1.cat;
  std::vector<TwHomElement> out;
  for (int i = 0; i < (int)w1.summands.size(); ++i)
    for (int j = 0; j < (int)w2.summands.size(); ++j) {
      const Summand& si = w1.summands[(size_t)i];
      const Summand& sj = w2.summands[(size_t)j];
      for (int bid : cat.hom_basis(si.object, sj.object)) {
        ShiftedMorphism t{Rat(1), bid, si.shift, sj.shift};
        if (shifted_degree(cat, t) != k) continue;
        EntryMap comps;
        comps[{i, j}] = {t};
        out.push_back(make_hom_element(w1, w2, k, std::move(comps)));
      }
    }
  return out;
}

namespace {

struct CochainIndex {
  std::vector<TwHomElement> elements;
  std::map<std::tuple<int, int, int>, int> column;  // (i, j, basis) -> column
};

CochainIndex cochain_basis(const TwistedComplex& w1, const TwistedComplex& w2,
                           long long k) {
  CochainIndex ci;
  ci.elements = hom_space_elements(w1, w2, k);
  for (int c = 0; c < (int)ci.elements.size(); ++c) {
    const auto& [key, ts] = *ci.elements[(size_t)c].comps.begin();
    ci.column[{key.first, key.second, ts[0].basis}] = c;
  }
  return ci;
}

std::vector<Rat> coords_of(const CochainIndex& ci, const TwHomElement& e) {
  std::vector<Rat> v(ci.elements.size(), Rat(0));
  for (const auto& [key, ts] : e.comps)
    for (const ShiftedMorphism& t : ts) {
      auto it = ci.column.find({key.first, key.second, t.basis});
      if (it == ci.column.end())
        throw std::logic_error("cochain coordinates: unindexed term");
      v[(size_t)it->second] = t.coeff;
    }
  return v;
}

TwHomElement element_from_coords(const TwistedComplex& w1,
                                 const TwistedComplex& w2, long long k,
                                 const CochainIndex& ci,
                                 const std::vector<Rat>& v) {
  EntryMap comps;
  for (size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    const auto& [key, ts] = *ci.elements[c].comps.begin();
    ShiftedMorphism t = ts[0];
    t.coeff = v[c];
    comps[key].push_back(t);
  }
  return make_hom_element(w1, w2, k, std::move(comps));
}

// Matrix of the Hom-complex differential from one cochain basis to the
// next; columns follow `from`, rows follow `to`.
Matrix differential_matrix(const CochainIndex& from, const CochainIndex& to) {
  Matrix d((int)to.elements.size(), (int)from.elements.size());
  for (int c = 0; c < (int)from.elements.size(); ++c) {
    TwHomElement img = mu_tw({from.elements[(size_t)c]});
    std::vector<Rat> v = coords_of(to, img);
    for (int r = 0; r < (int)v.size(); ++r) d.add(r, c, v[(size_t)r]);
  }
  return d;
}

}  // namespace

// ====== cohomology ======

HomCohomology hom_cohomology(const TwistedComplex& w1, const TwistedComplex& w2,
                             long long k) {
  HomCohomology out;
  CochainIndex here = cochain_basis(w1, w2, k);
  if (here.elements.empty()) return out;
  CochainIndex below = cochain_basis(w1, w2, k - 1);
  CochainIndex above = cochain_basis(w1, w2, k + 1);
  Matrix d_here = differential_matrix(here, above);
  Matrix d_below = differential_matrix(below, here);
  std::vector<std::vector<Rat>> cycles = kernel_basis(d_here);
  SpanTracker span;
  for (int c = 0; c < (int)below.elements.size(); ++c) {
    std::vector<Rat> col(here.elements.size(), Rat(0));
    for (int r = 0; r < (int)here.elements.size(); ++r)
      col[(size_t)r] = d_below.get(r, c);
    span.accept(std::move(col));
  }
  int boundary_dim = span.dim();
  for (const std::vector<Rat>& v : cycles)
    if (span.accept(v))
      out.representatives.push_back(element_from_coords(w1, w2, k, here, v));
  out.dimension = (int)cycles.size() - boundary_dim;
  return out;
}

bool equal_mod_coboundaries(const TwHomElement& x, const TwHomElement& y) {
  if (!tw_equal(x.src, y.src) || !tw_equal(x.tgt, y.tgt))
    throw std::logic_error(
        "coboundary comparison requires one pair of complexes");
  if (!x.comps.empty() && !y.comps.empty() && x.degree != y.degree)
    return false;
  EntryMap diff = x.comps;
  for (const auto& [key, ts] : y.comps)
    for (const ShiftedMorphism& t : ts) {
      ShiftedMorphism nt = t;
      nt.coeff = -t.coeff;
      diff[key].push_back(nt);
    }
  normalize_entries(diff);
  if (diff.empty()) return true;
  long long k = x.comps.empty() ? y.degree : x.degree;
  CochainIndex below = cochain_basis(x.src, x.tgt, k - 1);
  if (below.elements.empty()) return false;
  CochainIndex here = cochain_basis(x.src, x.tgt, k);
  Matrix d = differential_matrix(below, here);
  TwHomElement de = make_hom_element(x.src, x.tgt, k, std::move(diff));
  return solve_affine(d, coords_of(here, de)).has_value();
}

// ====== invertibility in degree-zero cohomology ======

H0IsoResult is_h0_isomorphism(const TwHomElement& f) {
  if (!f.comps.empty() && f.degree != 0)
    throw std::logic_error("invertibility test requires a degree-zero input");
  if (!hom_is_zero(mu_tw({f})))
    throw NotACocycle("invertibility test: input is not closed");
  const TwistedComplex& S = f.src;
  const TwistedComplex& T = f.tgt;
  CochainIndex inv0 = cochain_basis(T, S, 0);
  CochainIndex inv1 = cochain_basis(T, S, 1);
  CochainIndex end_s0 = cochain_basis(S, S, 0);
  CochainIndex end_sm = cochain_basis(S, S, -1);
  CochainIndex end_t0 = cochain_basis(T, T, 0);
  CochainIndex end_tm = cochain_basis(T, T, -1);

  const int p = (int)inv0.elements.size();
  const int q1 = (int)end_sm.elements.size();
  const int q2 = (int)end_tm.elements.size();
  const int r1 = (int)inv1.elements.size();
  const int r2 = (int)end_s0.elements.size();
  const int r3 = (int)end_t0.elements.size();

  // Unknowns: a candidate inverse h (p columns) and two degree minus-one
  // correction terms (q1 + q2 columns). Equations: h is closed; h after f
  // equals the source identity up to the first correction's coboundary;
  // f after h equals the target identity up to the second's.
  Matrix M(r1 + r2 + r3, p + q1 + q2);
  {
    Matrix d = differential_matrix(inv0, inv1);
    for (int r = 0; r < r1; ++r)
      for (const auto& [c, v] : d.rows[(size_t)r]) M.add(r, c, v);
  }
  for (int c = 0; c < p; ++c) {
    std::vector<Rat> v = coords_of(end_s0, mu_tw({f, inv0.elements[(size_t)c]}));
    for (int r = 0; r < r2; ++r) M.add(r1 + r, c, v[(size_t)r]);
  }
  {
    Matrix d = differential_matrix(end_sm, end_s0);
    for (int r = 0; r < r2; ++r)
      for (const auto& [c, v] : d.rows[(size_t)r]) M.add(r1 + r, p + c, -v);
  }
  for (int c = 0; c < p; ++c) {
    std::vector<Rat> v = coords_of(end_t0, mu_tw({inv0.elements[(size_t)c], f}));
    for (int r = 0; r < r3; ++r) M.add(r1 + r2 + r, c, v[(size_t)r]);
  }
  {
    Matrix d = differential_matrix(end_tm, end_t0);
    for (int r = 0; r < r3; ++r)
      for (const auto& [c, v] : d.rows[(size_t)r])
        M.add(r1 + r2 + r, p + q1 + c, -v);
  }

  std::vector<Rat> rhs((size_t)(r1 + r2 + r3), Rat(0));
  {
    std::vector<Rat> e1 = coords_of(end_s0, identity_hom(S));
    for (int r = 0; r < r2; ++r) rhs[(size_t)(r1 + r)] = e1[(size_t)r];
    std::vector<Rat> e2 = coords_of(end_t0, identity_hom(T));
    for (int r = 0; r < r3; ++r) rhs[(size_t)(r1 + r2 + r)] = e2[(size_t)r];
  }

  H0IsoResult out;
  out.inverse = make_hom_element(T, S, 0, {});
  std::optional<std::vector<Rat>> sol = solve_affine(M, rhs);
  if (!sol) return out;
  out.is_iso = true;
  std::vector<Rat> hv(sol->begin(), sol->begin() + p);
  out.inverse = element_from_coords(T, S, 0, inv0, hv);
  return out;
}

}  // namespace orbifuk
