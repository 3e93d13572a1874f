/**
 * fukaya.cpp — building the arc-system A∞ category: run bases, mu^2
 * concatenation, and disc relations enumerated by gluing faces into
 * immersed polygons.
 */
#include "orbifuk/fukaya.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace orbifuk {

namespace {

using Chain = std::vector<MSegRun>;

// Lexicographically smallest rotation, used to count each cyclic disc
// sequence once.
Chain canonical_rotation(const Chain& c) {
  Chain best = c;
  Chain cur = c;
  for (size_t i = 1; i < c.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(),
                                     best.end()))
      best = cur;
  }
  return best;
}

struct SideLoc {
  int face = -1;
  int item = -1;
};

}  // namespace

FukayaCategory build_category(const Surface& s, int table_limit) {
  FullnessReport full = validate_fullness(s);
  if (!full.ok) {
    std::string msg = "arc system is not full; uncut boundary between:";
    for (const std::string& m : full.missing) msg += " [" + m + "]";
    throw FullnessError(msg);
  }

  FukayaCategory f;
  f.surface = s;
  f.table_limit = table_limit;

  // ====== objects and hom basis ======
  for (const std::string& name : s.arc_names) f.cat.add_object(name);
  for (const MSegInfo& info : enumerate_msegments(s)) {
    int id = f.cat.add_basis(s.run_label(info.run), info.src_arc, info.tgt_arc,
                             info.degree, false);
    f.run_basis[info.run] = id;
  }
  f.run_of.assign(f.cat.basis.size(), MSegRun{-1, 0, 0});
  for (const auto& [run, id] : f.run_basis) f.run_of[(size_t)id] = run;

  // ====== mu^2: concatenation of runs on one segment ======
  for (int seg = 0; seg < (int)s.msegs.size(); ++seg) {
    int k = (int)s.msegs[(size_t)seg].ends.size();
    for (int hi = 2; hi <= k; ++hi)
      for (int mid = 2; mid < hi; ++mid)
        for (int lo = 1; lo < mid; ++lo) {
          MSegRun first{seg, mid, hi};
          MSegRun second{seg, lo, mid};
          MSegRun whole{seg, lo, hi};
          f.cat.set_mu({f.basis_of(first), f.basis_of(second)},
                       {{sign_pow(s.run_degree(first)), f.basis_of(whole)}});
        }
  }

  // ====== disc sequences ======
  // Each directed arc side lies in exactly one face.
  std::map<std::pair<int, int>, SideLoc> side_loc;
  for (int fi = 0; fi < (int)s.faces.size(); ++fi) {
    const Face& face = s.faces[(size_t)fi];
    for (int ii = 0; ii < (int)face.items.size(); ++ii)
      if (face.items[(size_t)ii].what == FaceItem::Side) {
        const DirectedSide& d = face.items[(size_t)ii].side;
        side_loc[{d.arc, d.to_end}] = SideLoc{fi, ii};
      }
  }

  std::set<Chain> seen;
  std::deque<Chain> queue;
  auto offer = [&](const Chain& c) {
    if ((int)c.size() > table_limit) return;
    Chain key = canonical_rotation(c);
    if (seen.insert(key).second) queue.push_back(c);
  };

  for (const Face& face : s.faces) {
    if (face.kind != Face::FullyMarkedDisc) continue;
    offer(face.marked_corners());
  }

  while (!queue.empty()) {
    Chain d = queue.front();
    queue.pop_front();
    f.disc_chains.push_back(d);
    int n = (int)d.size();

    // Glue a neighbouring face across each boundary side.
    for (int i = 0; i < n; ++i) {
      const MSegRun& cur = d[(size_t)i];
      const MSegRun& nxt = d[(size_t)(i + 1) % (size_t)n];
      int arc = s.run_target(cur);
      // The disc traverses the arc away from cur's landing end; the face on
      // the far side contains the opposite direction, toward that end.
      int to_end = (s.end_location(arc, 0) == std::make_pair(cur.seg, cur.lo)) ? 0 : 1;
      SideLoc loc = side_loc.at({arc, to_end});
      const Face& across = s.faces[(size_t)loc.face];
      if (across.kind != Face::FullyMarkedDisc) continue;
      int m = (int)across.marked_corners().size();
      if (n + m - 2 > table_limit) continue;
      int sz = (int)across.items.size();
      const MSegRun& after = across.items[(size_t)((loc.item + 1) % sz)].run;
      const MSegRun& before =
          across.items[(size_t)((loc.item - 1 + sz) % sz)].run;
      if (after.seg != cur.seg || after.hi != cur.lo)
        throw std::logic_error("face walk mismatch at glued arc end");
      if (before.seg != nxt.seg || before.lo != nxt.hi)
        throw std::logic_error("face walk mismatch at glued arc end");
      Chain glued;
      glued.push_back(MSegRun{cur.seg, after.lo, cur.hi});
      for (int step = (loc.item + 3) % sz; step != (loc.item - 1 + sz) % sz;
           step = (step + 2) % sz)
        glued.push_back(across.items[(size_t)step].run);
      glued.push_back(MSegRun{nxt.seg, nxt.lo, before.hi});
      for (int step = 2; step < n; ++step)
        glued.push_back(d[(size_t)(i + step) % (size_t)n]);
      offer(glued);
    }
  }

  // ====== relations from the disc sequences ======
  for (const Chain& disc : f.disc_chains) {
    int n = (int)disc.size();
    long long degsum = 0;
    for (const MSegRun& r : disc) degsum += s.run_degree(r);
    if (degsum != n - 2)
      throw std::logic_error("disc corner degrees violate the index rule");
    Chain rot = disc;
    for (int r = 0; r < n; ++r) {
      if (r > 0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      std::vector<int> key;
      for (const MSegRun& run : rot) key.push_back(f.basis_of(run));
      f.cat.set_mu(key, {{Rat(1), f.cat.unit_of[(size_t)s.run_source(rot[0])]}});
      // Left extensions lengthen the first corner upward.
      int k_first = (int)s.msegs[(size_t)rot[0].seg].ends.size();
      for (int hi2 = rot[0].hi + 1; hi2 <= k_first; ++hi2) {
        MSegRun b{rot[0].seg, rot[0].hi, hi2};
        std::vector<int> key2 = key;
        key2[0] = f.basis_of(MSegRun{rot[0].seg, rot[0].lo, hi2});
        f.cat.set_mu(key2, {{sign_pow(s.run_degree(b)), f.basis_of(b)}});
      }
      // Right extensions lengthen the last corner downward.
      const MSegRun& last = rot[(size_t)n - 1];
      for (int lo2 = 1; lo2 < last.lo; ++lo2) {
        MSegRun b{last.seg, lo2, last.lo};
        std::vector<int> key2 = key;
        key2[(size_t)n - 1] = f.basis_of(MSegRun{last.seg, lo2, last.hi});
        f.cat.set_mu(key2, {{Rat(1), f.basis_of(b)}});
      }
    }
  }

  return f;
}

StrictFunctor induced_involution(const FukayaCategory& f) {
  const Surface& s = f.surface;
  if (!s.involution.has_value())
    throw InvolutionError("surface carries no involution");
  const Involution& inv = *s.involution;

  StrictFunctor g;
  g.object_map.assign(s.arc_names.size(), -1);
  for (int a = 0; a < (int)s.arc_names.size(); ++a)
    g.object_map[(size_t)a] = inv.arc_map[(size_t)a];
  g.basis_map.assign(f.cat.basis.size(), {Rat(1), -1});
  for (int id = 0; id < (int)f.cat.basis.size(); ++id) {
    const AInftyCategory::BasisElement& be = f.cat.basis[(size_t)id];
    if (be.is_unit) {
      g.basis_map[(size_t)id] = {Rat(1),
                                 f.cat.unit_of[(size_t)inv.arc_map[(size_t)be.src]]};
    } else {
      const MSegRun& run = f.run_of[(size_t)id];
      MSegRun img{inv.mseg_map[(size_t)run.seg], run.lo, run.hi};
      g.basis_map[(size_t)id] = {Rat(1), f.basis_of(img)};
    }
  }
  if (!verify_strict_functor(f.cat, g))
    throw InvolutionError("induced map does not satisfy the functor equation");
  if (!functor_has_order_two(f.cat, g))
    throw InvolutionError("induced map is not an involution");
  return g;
}

}  // namespace orbifuk
