#include "orbifuk/surface.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace orbifuk {

// ====== face accessors ======

int Face::nsides() const {
  int n = 0;
  for (const FaceItem& it : items) n += (it.what == FaceItem::Side) ? 1 : 0;
  return n;
}

int Face::ngaps() const {
  int n = 0;
  for (const FaceItem& it : items) n += (it.what == FaceItem::GapCorner) ? 1 : 0;
  return n;
}

std::vector<MSegRun> Face::marked_corners() const {
  std::vector<MSegRun> out;
  for (const FaceItem& it : items)
    if (it.what == FaceItem::MarkedCorner) out.push_back(it.run);
  return out;
}

std::vector<DirectedSide> Face::sides() const {
  std::vector<DirectedSide> out;
  for (const FaceItem& it : items)
    if (it.what == FaceItem::Side) out.push_back(it.side);
  return out;
}

// ====== surface accessors ======

int Surface::arc(const std::string& n) const {
  auto it = arc_index.find(n);
  if (it == arc_index.end()) throw ParseError("unknown arc: " + n);
  return it->second;
}

std::pair<int, int> Surface::end_location(int a, int e) const {
  for (int s = 0; s < (int)msegs.size(); s++)
    for (int p = 0; p < (int)msegs[s].ends.size(); p++)
      if (msegs[s].ends[p].arc == a && msegs[s].ends[p].end == e)
        return {s, p + 1};
  throw ValidationError("arc end not placed: " + arc_names[a]);
}

long long Surface::min_degree(int seg, int pos) const {
  auto it = min_deg.find({seg, pos});
  return it == min_deg.end() ? 0 : it->second;
}

long long Surface::run_degree(const MSegRun& r) const {
  long long d = 0;
  for (int p = r.lo; p < r.hi; p++) d += min_degree(r.seg, p);
  return d;
}

int Surface::run_source(const MSegRun& r) const {
  return msegs[r.seg].ends[r.hi - 1].arc;
}

int Surface::run_target(const MSegRun& r) const {
  return msegs[r.seg].ends[r.lo - 1].arc;
}

std::string Surface::run_label(const MSegRun& r) const {
  return msegs[r.seg].id + "[" + std::to_string(r.lo) + "," +
         std::to_string(r.hi) + "]";
}

std::string Surface::describe_face(const Face& f) const {
  std::string out = "(";
  bool first = true;
  for (const FaceItem& it : f.items) {
    if (it.what == FaceItem::Side) continue;
    if (!first) out += " ";
    first = false;
    out += (it.what == FaceItem::GapCorner) ? usegs[it.useg].id : run_label(it.run);
  }
  return out + ")";
}

// ====== parsing ======

namespace {

std::vector<std::string> words_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

struct PendingInvolution {
  std::vector<std::tuple<std::string, std::string, bool>> arc_pairs;
  std::vector<std::pair<std::string, std::string>> seg_pairs;
  int fixedpoints = 0;
  bool any = false;
};

ArcEnd parse_arc_end(Surface& s, const std::string& tok) {
  auto dot = tok.rfind('.');
  if (dot == std::string::npos || dot + 2 != tok.size() ||
      (tok[dot + 1] != '0' && tok[dot + 1] != '1'))
    throw ParseError("malformed arc end: " + tok);
  std::string name = tok.substr(0, dot);
  int end = tok[dot + 1] - '0';
  auto it = s.arc_index.find(name);
  int arc;
  if (it == s.arc_index.end()) {
    arc = (int)s.arc_names.size();
    s.arc_names.push_back(name);
    s.arc_index[name] = arc;
  } else {
    arc = it->second;
  }
  return ArcEnd{arc, end};
}

// `m(<id>)[ <arc>.<e> ... ]` and `u(<id>)` tokens of one boundary line.
void parse_boundary_line(Surface& s, const std::vector<std::string>& w) {
  if (w.size() < 2 || w[1].back() != ':')
    throw ParseError("malformed boundary line");
  int circle = (int)s.boundaries.size();
  s.boundaries.emplace_back();
  size_t i = 2;
  while (i < w.size()) {
    const std::string& t = w[i];
    if (t.rfind("u(", 0) == 0 && t.back() == ')') {
      UnmarkedSegment u;
      u.id = t.substr(2, t.size() - 3);
      u.boundary = circle;
      s.boundaries[circle].push_back({false, (int)s.usegs.size()});
      s.usegs.push_back(u);
      i++;
    } else if (t.rfind("m(", 0) == 0 && t.size() > 4 &&
               t.compare(t.size() - 2, 2, ")[") == 0) {
      MarkedSegment m;
      m.id = t.substr(2, t.size() - 4);
      m.boundary = circle;
      i++;
      while (i < w.size() && w[i] != "]") {
        m.ends.push_back(parse_arc_end(s, w[i]));
        i++;
      }
      if (i == w.size()) throw ParseError("unterminated segment " + m.id);
      i++;  // skip ']'
      s.boundaries[circle].push_back({true, (int)s.msegs.size()});
      s.msegs.push_back(std::move(m));
    } else {
      throw ParseError("unexpected boundary token: " + t);
    }
  }
}

std::tuple<std::string, std::string, bool> parse_pair(const std::string& tok) {
  auto at = tok.find("<->");
  if (at == std::string::npos) throw ParseError("malformed pair: " + tok);
  std::string a = tok.substr(0, at);
  std::string b = tok.substr(at + 3);
  bool flag = false;
  if (!b.empty() && b.back() == '!') {
    flag = true;
    b.pop_back();
  }
  if (a.empty() || b.empty()) throw ParseError("malformed pair: " + tok);
  return {a, b, flag};
}

int find_mseg(const Surface& s, const std::string& id) {
  for (int i = 0; i < (int)s.msegs.size(); i++)
    if (s.msegs[i].id == id) return i;
  return -1;
}

int find_useg(const Surface& s, const std::string& id) {
  for (int i = 0; i < (int)s.usegs.size(); i++)
    if (s.usegs[i].id == id) return i;
  return -1;
}

void install_involution(Surface& s, const PendingInvolution& p) {
  Involution inv;
  inv.arc_map.assign(s.arc_names.size(), -1);
  inv.end_swap.assign(s.arc_names.size(), 0);
  inv.mseg_map.assign(s.msegs.size(), -1);
  inv.useg_map.assign(s.usegs.size(), -1);
  inv.declared_fixedpoints = p.fixedpoints;
  for (const auto& [a, b, swap] : p.arc_pairs) {
    int ia = s.arc(a), ib = s.arc(b);
    inv.arc_map[ia] = ib;
    inv.arc_map[ib] = ia;
    inv.end_swap[ia] = inv.end_swap[ib] = swap ? 1 : 0;
  }
  for (const auto& [a, b] : p.seg_pairs) {
    int ma = find_mseg(s, a), mb = find_mseg(s, b);
    if (ma >= 0 || mb >= 0) {
      if (ma < 0 || mb < 0)
        throw ParseError("segment pair mixes kinds: " + a + "<->" + b);
      inv.mseg_map[ma] = mb;
      inv.mseg_map[mb] = ma;
      continue;
    }
    int ua = find_useg(s, a), ub = find_useg(s, b);
    if (ua < 0 || ub < 0) throw ParseError("unknown segment in pair: " + a);
    inv.useg_map[ua] = ub;
    inv.useg_map[ub] = ua;
  }
  for (int a = 0; a < (int)s.arc_names.size(); a++)
    if (inv.arc_map[a] < 0)
      throw ParseError("involution misses arc " + s.arc_names[a]);
  for (int m = 0; m < (int)s.msegs.size(); m++)
    if (inv.mseg_map[m] < 0)
      throw ParseError("involution misses segment " + s.msegs[m].id);
  for (int u = 0; u < (int)s.usegs.size(); u++)
    if (inv.useg_map[u] < 0)
      throw ParseError("involution misses segment " + s.usegs[u].id);
  s.involution = std::move(inv);
}

// ====== structural validation ======

void check_structure(const Surface& s) {
  std::set<std::string> seg_ids;
  for (const auto& m : s.msegs)
    if (!seg_ids.insert(m.id).second)
      throw ParseError("duplicate segment id: " + m.id);
  for (const auto& u : s.usegs)
    if (!seg_ids.insert(u.id).second)
      throw ParseError("duplicate segment id: " + u.id);

  std::vector<int> seen0(s.arc_names.size(), 0), seen1(s.arc_names.size(), 0);
  for (const auto& m : s.msegs)
    for (const ArcEnd& e : m.ends) (e.end == 0 ? seen0 : seen1)[e.arc]++;
  for (int a = 0; a < (int)s.arc_names.size(); a++)
    if (seen0[a] != 1 || seen1[a] != 1)
      throw ParseError("arc " + s.arc_names[a] +
                       " must have exactly one end of each kind");

  for (const auto& circle : s.boundaries) {
    if (circle.empty()) throw ValidationError("empty boundary circle");
    bool any_unmarked = false;
    for (const BoundaryToken& t : circle) any_unmarked |= !t.marked;
    if (!any_unmarked)
      throw ValidationError("boundary circle without an unmarked segment");
    if (circle.size() == 1) continue;  // a wholly unmarked circle
    for (size_t i = 0; i < circle.size(); i++) {
      const BoundaryToken& a = circle[i];
      const BoundaryToken& b = circle[(i + 1) % circle.size()];
      if (a.marked == b.marked)
        throw ValidationError("adjacent boundary segments of equal kind");
    }
  }
}

// ====== face tracing ======

struct TokenPos {
  int boundary = -1;
  int pos = -1;
};

struct Walker {
  const Surface& s;
  std::vector<TokenPos> mseg_at;

  explicit Walker(const Surface& s_) : s(s_), mseg_at(s_.msegs.size()) {
    for (int b = 0; b < (int)s.boundaries.size(); b++)
      for (int i = 0; i < (int)s.boundaries[b].size(); i++)
        if (s.boundaries[b][i].marked)
          mseg_at[s.boundaries[b][i].idx] = {b, i};
  }

  const BoundaryToken& before(int boundary, int pos) const {
    const auto& circle = s.boundaries[boundary];
    return circle[(pos + circle.size() - 1) % circle.size()];
  }

  // Appends the corner items after arriving at `at`, and returns the next
  // directed side of the face walk.
  DirectedSide advance(const DirectedSide& at, std::vector<FaceItem>& items) const {
    auto [seg, pos] = s.end_location(at.arc, at.to_end);
    if (pos >= 2) {
      FaceItem c;
      c.what = FaceItem::MarkedCorner;
      c.run = MSegRun{seg, pos - 1, pos};
      items.push_back(c);
      const ArcEnd& nxt = s.msegs[seg].ends[pos - 2];
      return DirectedSide{nxt.arc, 1 - nxt.end};
    }
    TokenPos tp = mseg_at[seg];
    int cursor = tp.pos;
    while (true) {
      const BoundaryToken& gap = before(tp.boundary, cursor);
      if (gap.marked)
        throw ValidationError("expected a gap before segment " +
                              s.msegs[seg].id);
      FaceItem c;
      c.what = FaceItem::GapCorner;
      c.useg = gap.idx;
      items.push_back(c);
      const auto& circle = s.boundaries[tp.boundary];
      cursor = (int)((cursor + circle.size() - 1) % circle.size());
      const BoundaryToken& prev = before(tp.boundary, cursor);
      if (!prev.marked)
        throw ValidationError("adjacent gaps on a boundary circle");
      cursor = (int)((cursor + circle.size() - 1) % circle.size());
      const MarkedSegment& pm = s.msegs[prev.idx];
      if (!pm.ends.empty()) {
        const ArcEnd& nxt = pm.ends.back();
        return DirectedSide{nxt.arc, 1 - nxt.end};
      }
      // Empty marked segment: keep crossing gaps.
    }
  }
};

void trace_faces(Surface& s) {
  s.faces.clear();
  int narcs = (int)s.arc_names.size();

  // Boundary circles with marked segments but no arc ends can only be
  // the base case of a bare disc; otherwise their face is unreachable.
  int circles_with_ends = 0, empty_marked_circles = 0;
  for (const auto& circle : s.boundaries) {
    bool marked = false;
    int ends = 0;
    for (const BoundaryToken& t : circle)
      if (t.marked) {
        marked = true;
        ends += (int)s.msegs[t.idx].ends.size();
      }
    if (ends > 0) circles_with_ends++;
    if (marked && ends == 0) empty_marked_circles++;
  }
  if (empty_marked_circles > 0) {
    if (narcs != 0 || s.boundaries.size() != 1 || s.genus != 0)
      throw ValidationError(
          "marked segments without arc ends on a non-trivial surface");
    Face f;
    f.kind = Face::DiscWithUnmarkedCorner;
    for (const BoundaryToken& t : s.boundaries[0])
      if (!t.marked) {
        FaceItem c;
        c.what = FaceItem::GapCorner;
        c.useg = t.idx;
        f.items.push_back(c);
      }
    s.faces.push_back(std::move(f));
    return;
  }

  Walker walker(s);
  std::set<std::pair<int, int>> used;
  for (int a = 0; a < narcs; a++)
    for (int e = 0; e < 2; e++) {
      if (used.count({a, e})) continue;
      DirectedSide start{a, e};
      DirectedSide cur = start;
      Face f;
      while (true) {
        used.insert({cur.arc, cur.to_end});
        FaceItem side;
        side.what = FaceItem::Side;
        side.side = cur;
        f.items.push_back(side);
        DirectedSide nxt = walker.advance(cur, f.items);
        if (nxt.arc == start.arc && nxt.to_end == start.to_end) break;
        if (used.count({nxt.arc, nxt.to_end}))
          throw ValidationError("face walk revisited a side");
        cur = nxt;
      }
      f.kind = (f.ngaps() > 0) ? Face::DiscWithUnmarkedCorner
                               : Face::FullyMarkedDisc;
      s.faces.push_back(std::move(f));
    }
}

// Fully marked cycles violating the degree rule must bound annuli around
// wholly unmarked circles; the counts have to match exactly.
void assign_annuli_and_check(Surface& s) {
  int unmarked_circles = 0;
  for (const auto& circle : s.boundaries) {
    bool any_marked = false;
    for (const BoundaryToken& t : circle) any_marked |= t.marked;
    if (!any_marked) unmarked_circles++;
  }

  std::vector<int> failing, passing;
  for (int i = 0; i < (int)s.faces.size(); i++) {
    Face& f = s.faces[i];
    if (f.kind != Face::FullyMarkedDisc) continue;
    long long sum = 0;
    for (const MSegRun& r : f.marked_corners()) sum += s.run_degree(r);
    if (sum == f.nsides() - 2)
      passing.push_back(i);
    else
      failing.push_back(i);
  }

  if ((int)failing.size() > unmarked_circles)
    throw ValidationError("face " + s.describe_face(s.faces[failing[0]]) +
                          " breaks the degree rule");
  for (int i : failing) s.faces[i].kind = Face::Annulus;
  int need = unmarked_circles - (int)failing.size();
  if (need > 0) {
    if ((int)passing.size() != need)
      throw ValidationError("cannot decide which interior cycles bound annuli");
    for (int i : passing) s.faces[i].kind = Face::Annulus;
  }

  for (const Face& f : s.faces)
    if (f.kind == Face::FullyMarkedDisc && f.nsides() < 3)
      throw ValidationError("interior face " + s.describe_face(f) +
                            " has fewer than three sides");

  // Euler count; annulus faces absorb their unmarked circle.
  int V = 2 * (int)s.arc_names.size();
  int E = (int)s.arc_names.size();
  for (const auto& m : s.msegs) E += (int)m.ends.size();
  int chi = V - E + (int)s.faces.size() - unmarked_circles;
  if (chi != 2 - 2 * s.genus - (int)s.boundaries.size())
    throw ValidationError("face data inconsistent with genus and boundary");
}

}  // namespace

Surface parse_surface(const std::string& text) {
  Surface s;
  PendingInvolution pending;
  int declared_boundaries = -1;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> w = words_of(raw);
    if (w.empty()) continue;
    if (w[0] == "surface" && w.size() == 2) {
      s.name = w[1];
    } else if (w[0] == "genus" && w.size() == 2) {
      s.genus = std::stoi(w[1]);
    } else if (w[0] == "boundaries" && w.size() == 2) {
      declared_boundaries = std::stoi(w[1]);
    } else if (w[0] == "boundary") {
      parse_boundary_line(s, w);
    } else if (w[0] == "deg" && w.size() == 5 && w[3] == "=") {
      int seg = find_mseg(s, w[1]);
      if (seg < 0) throw ParseError("deg line names unknown segment " + w[1]);
      int pos = std::stoi(w[2]);
      if (pos < 1 || pos >= (int)s.msegs[seg].ends.size())
        throw ParseError("deg position out of range on " + w[1]);
      s.min_deg[{seg, pos}] = std::stoll(w[4]);
    } else if (w[0] == "involution" && w.size() >= 2 && w[1] == "arcs:") {
      pending.any = true;
      for (size_t i = 2; i < w.size(); i++)
        pending.arc_pairs.push_back(parse_pair(w[i]));
    } else if (w[0] == "involution" && w.size() >= 2 && w[1] == "segs:") {
      pending.any = true;
      for (size_t i = 2; i < w.size(); i++) {
        auto [a, b, flag] = parse_pair(w[i]);
        if (flag) throw ParseError("segment pairs take no end marker");
        pending.seg_pairs.push_back({a, b});
      }
    } else if (w[0] == "fixedpoints" && w.size() == 2) {
      pending.any = true;
      pending.fixedpoints = std::stoi(w[1]);
    } else {
      throw ParseError("unrecognised line: " + raw);
    }
  }

  if (declared_boundaries != (int)s.boundaries.size())
    throw ParseError("boundary count does not match declaration");
  check_structure(s);
  if (pending.any) install_involution(s, pending);
  trace_faces(s);
  assign_annuli_and_check(s);
  if (s.involution) validate_involution(s);
  return s;
}

Surface load_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

// ====== fullness ======

FullnessReport validate_fullness(const Surface& s) {
  FullnessReport rep;
  rep.ok = true;
  for (const Face& f : s.faces) {
    if (f.ngaps() <= 1) continue;
    rep.ok = false;
    for (const FaceItem& it : f.items) {
      if (it.what != FaceItem::GapCorner) continue;
      // Name the marked segments flanking the uncut gap.
      const auto& circle = s.boundaries[s.usegs[it.useg].boundary];
      int at = -1;
      for (int i = 0; i < (int)circle.size(); i++)
        if (!circle[i].marked && circle[i].idx == it.useg) at = i;
      const BoundaryToken& a = circle[(at + circle.size() - 1) % circle.size()];
      const BoundaryToken& b = circle[(at + 1) % circle.size()];
      rep.missing.push_back(s.msegs[a.idx].id + " / " + s.msegs[b.idx].id);
    }
  }
  return rep;
}

// ====== involution validation ======

InvolutionReport validate_involution(const Surface& s) {
  if (!s.involution) throw InvolutionError("no involution declared");
  const Involution& g = *s.involution;
  int narcs = (int)s.arc_names.size();

  for (int a = 0; a < narcs; a++) {
    if (g.arc_map[g.arc_map[a]] != a)
      throw InvolutionError("arc map is not an involution at " +
                            s.arc_names[a]);
    if (g.end_swap[a] != g.end_swap[g.arc_map[a]])
      throw InvolutionError("inconsistent end swap on " + s.arc_names[a]);
    if (g.arc_map[a] == a && !g.end_swap[a])
      throw InvolutionError("arc " + s.arc_names[a] +
                            " is fixed pointwise; an invariant arc must "
                            "exchange its ends");
  }
  for (int m = 0; m < (int)s.msegs.size(); m++) {
    if (g.mseg_map[g.mseg_map[m]] != m)
      throw InvolutionError("segment map is not an involution");
    if (g.mseg_map[m] == m)
      throw InvolutionError("segment " + s.msegs[m].id +
                            " is fixed; the action must be free on the "
                            "boundary");
  }
  for (int u = 0; u < (int)s.usegs.size(); u++) {
    if (g.useg_map[g.useg_map[u]] != u)
      throw InvolutionError("segment map is not an involution");
    if (g.useg_map[u] == u)
      throw InvolutionError("segment " + s.usegs[u].id +
                            " is fixed; the action must be free on the "
                            "boundary");
  }

  for (int m = 0; m < (int)s.msegs.size(); m++) {
    const MarkedSegment& src = s.msegs[m];
    const MarkedSegment& dst = s.msegs[g.mseg_map[m]];
    if (src.ends.size() != dst.ends.size())
      throw InvolutionError("segments " + src.id + " and " + dst.id +
                            " differ in length");
    for (int i = 0; i < (int)src.ends.size(); i++)
      if (!(g.apply(src.ends[i]) == dst.ends[i]))
        throw InvolutionError("ends of " + src.id + " and " + dst.id +
                              " do not correspond");
    for (int pos = 1; pos < (int)src.ends.size(); pos++)
      if (s.min_degree(m, pos) != s.min_degree(g.mseg_map[m], pos))
        throw InvolutionError("degrees differ between " + src.id + " and " +
                              dst.id);
  }

  // Boundary circles must map to boundary circles, preserving the cyclic
  // order of segments.
  auto token_key = [&](const BoundaryToken& t) {
    return (t.marked ? "m" : "u") + std::to_string(t.idx);
  };
  std::vector<int> circle_image(s.boundaries.size(), -1);
  for (int b = 0; b < (int)s.boundaries.size(); b++) {
    const auto& circle = s.boundaries[b];
    std::vector<std::string> image;
    for (const BoundaryToken& t : circle) {
      BoundaryToken m;
      m.marked = t.marked;
      m.idx = t.marked ? g.mseg_map[t.idx] : g.useg_map[t.idx];
      image.push_back(token_key(m));
    }
    int tb = circle[0].marked ? s.msegs[g.mseg_map[circle[0].idx]].boundary
                              : s.usegs[g.useg_map[circle[0].idx]].boundary;
    const auto& tc = s.boundaries[tb];
    if (tc.size() != circle.size())
      throw InvolutionError("boundary circles do not correspond");
    bool matched = false;
    for (size_t rot = 0; rot < tc.size() && !matched; rot++) {
      bool ok = true;
      for (size_t i = 0; i < tc.size() && ok; i++)
        ok = token_key(tc[(rot + i) % tc.size()]) == image[i];
      matched = ok;
    }
    if (!matched)
      throw InvolutionError("involution does not preserve a boundary circle");
    circle_image[b] = tb;
  }

  // Faces must map to faces.
  auto face_key = [&](const Face& f) {
    std::vector<std::string> toks;
    for (const FaceItem& it : f.items) {
      if (it.what == FaceItem::Side)
        toks.push_back("s" + std::to_string(it.side.arc) + "." +
                       std::to_string(it.side.to_end));
      else if (it.what == FaceItem::MarkedCorner)
        toks.push_back("c" + std::to_string(it.run.seg) + "." +
                       std::to_string(it.run.lo));
      else
        toks.push_back("g" + std::to_string(it.useg));
    }
    std::string best;
    for (size_t rot = 0; rot < toks.size(); rot++) {
      std::string cand;
      for (size_t i = 0; i < toks.size(); i++)
        cand += toks[(rot + i) % toks.size()] + "|";
      if (best.empty() || cand < best) best = cand;
    }
    return best;
  };
  std::set<std::string> keys;
  for (const Face& f : s.faces) keys.insert(face_key(f));
  for (const Face& f : s.faces) {
    Face image;
    image.kind = f.kind;
    for (const FaceItem& it : f.items) {
      FaceItem m = it;
      if (it.what == FaceItem::Side) {
        ArcEnd e = g.apply(ArcEnd{it.side.arc, it.side.to_end});
        m.side = DirectedSide{e.arc, e.end};
      } else if (it.what == FaceItem::MarkedCorner) {
        m.run.seg = g.mseg_map[it.run.seg];
      } else {
        m.useg = g.useg_map[it.useg];
      }
      image.items.push_back(m);
    }
    if (!keys.count(face_key(image)))
      throw InvolutionError("involution does not preserve face " +
                            s.describe_face(f));
  }

  InvolutionReport rep;
  for (int a = 0; a < narcs; a++) rep.invariant_arcs += (g.arc_map[a] == a);
  rep.x = rep.invariant_arcs + g.declared_fixedpoints;

  std::vector<char> seen(s.boundaries.size(), 0);
  for (int b = 0; b < (int)s.boundaries.size(); b++) {
    if (seen[b]) continue;
    seen[b] = 1;
    seen[circle_image[b]] = 1;
    rep.quotient_boundaries++;
  }

  int chi = 2 - 2 * s.genus - (int)s.boundaries.size();
  if ((chi + rep.x) % 2 != 0)
    throw InvolutionError("fixed point count inconsistent with the cover");
  int chi_q = (chi + rep.x) / 2;
  int twice_genus = 2 - rep.quotient_boundaries - chi_q;
  if (twice_genus % 2 != 0 || twice_genus < 0)
    throw InvolutionError("quotient data inconsistent with the cover");
  rep.quotient_genus = twice_genus / 2;
  return rep;
}

// ====== M-segment enumeration ======

std::vector<MSegInfo> enumerate_msegments(const Surface& s) {
  std::vector<MSegInfo> out;
  for (int seg = 0; seg < (int)s.msegs.size(); seg++) {
    int k = (int)s.msegs[seg].ends.size();
    for (int lo = 1; lo <= k; lo++)
      for (int hi = lo + 1; hi <= k; hi++) {
        MSegInfo info;
        info.run = MSegRun{seg, lo, hi};
        info.src_arc = s.run_source(info.run);
        info.tgt_arc = s.run_target(info.run);
        info.degree = s.run_degree(info.run);
        info.minimal = (hi == lo + 1);
        out.push_back(info);
      }
  }
  return out;
}

}  // namespace orbifuk
