// ============================================================
//  Graded marked surfaces: boundary data, arc systems, faces
// ============================================================
//
// A surface is described by its boundary circles, each a cyclic
// alternation of marked segments (carrying ordered arc ends) and
// unmarked segments (gaps).  Arc systems are validated by tracing the
// complementary faces and checking the degree sum rule on interior
// discs; an optional order-two symmetry is checked segment by segment.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbifuk {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};
struct InvolutionError : std::runtime_error {
  explicit InvolutionError(const std::string& m) : std::runtime_error(m) {}
};

// One endpoint of an arc: which arc, and which of its two ends (0 or 1).
struct ArcEnd {
  int arc = -1;
  int end = 0;
};
inline bool operator==(const ArcEnd& a, const ArcEnd& b) {
  return a.arc == b.arc && a.end == b.end;
}

struct MarkedSegment {
  std::string id;
  int boundary = -1;
  std::vector<ArcEnd> ends;  // in boundary orientation order
};

struct UnmarkedSegment {
  std::string id;
  int boundary = -1;
};

struct BoundaryToken {
  bool marked = false;
  int idx = -1;  // into msegs or usegs
};

// Piece of a marked segment between the ends at 1-based positions hi and
// lo (hi > lo), traversed against the boundary orientation.  As a
// morphism it runs from the arc at position hi to the arc at position lo.
struct MSegRun {
  int seg = -1;
  int lo = 0;
  int hi = 0;
};
inline bool operator==(const MSegRun& a, const MSegRun& b) {
  return a.seg == b.seg && a.lo == b.lo && a.hi == b.hi;
}
inline bool operator<(const MSegRun& a, const MSegRun& b) {
  if (a.seg != b.seg) return a.seg < b.seg;
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.hi < b.hi;
}

// An arc side traversed toward the end `to_end`.
struct DirectedSide {
  int arc = -1;
  int to_end = 0;
};

// Entry of a face walk: an arc side, a minimal-run corner, or a gap.
struct FaceItem {
  enum What { Side, MarkedCorner, GapCorner };
  What what = Side;
  DirectedSide side;  // when Side
  MSegRun run;        // when MarkedCorner (always minimal, hi = lo+1)
  int useg = -1;      // when GapCorner
};

struct Face {
  enum Kind { FullyMarkedDisc, DiscWithUnmarkedCorner, Annulus };
  Kind kind = FullyMarkedDisc;
  std::vector<FaceItem> items;  // cyclic, in walk order

  int nsides() const;
  int ngaps() const;
  std::vector<MSegRun> marked_corners() const;
  std::vector<DirectedSide> sides() const;
};

struct Involution {
  std::vector<int> arc_map;     // arc -> arc
  std::vector<char> end_swap;   // arc -> whether ends are exchanged
  std::vector<int> mseg_map;    // marked segment -> marked segment
  std::vector<int> useg_map;    // unmarked segment -> unmarked segment
  int declared_fixedpoints = 0;

  ArcEnd apply(const ArcEnd& e) const {
    return ArcEnd{arc_map[e.arc], end_swap[e.arc] ? 1 - e.end : e.end};
  }
};

struct Surface {
  std::string name;
  int genus = 0;
  std::vector<std::string> arc_names;
  std::map<std::string, int> arc_index;
  std::vector<MarkedSegment> msegs;
  std::vector<UnmarkedSegment> usegs;
  std::vector<std::vector<BoundaryToken>> boundaries;
  std::map<std::pair<int, int>, long long> min_deg;  // (seg, pos) -> degree
  std::optional<Involution> involution;
  std::vector<Face> faces;

  int arc(const std::string& name) const;
  // (segment, 1-based position) of the given arc end.
  std::pair<int, int> end_location(int arc, int end) const;
  long long min_degree(int seg, int pos) const;
  long long run_degree(const MSegRun& r) const;
  int run_source(const MSegRun& r) const;  // arc at position hi
  int run_target(const MSegRun& r) const;  // arc at position lo
  std::string run_label(const MSegRun& r) const;
  std::string describe_face(const Face& f) const;
};

struct FullnessReport {
  bool ok = false;
  // One entry per uncut gap: the marked segments flanking it.
  std::vector<std::string> missing;
};

struct InvolutionReport {
  int x = 0;  // invariant arcs plus declared isolated fixed points
  int invariant_arcs = 0;
  int quotient_boundaries = 0;
  int quotient_genus = 0;
};

struct MSegInfo {
  MSegRun run;
  int src_arc = -1;
  int tgt_arc = -1;
  long long degree = 0;
  bool minimal = false;
};

Surface parse_surface(const std::string& text);
Surface load_surface_file(const std::string& path);
FullnessReport validate_fullness(const Surface& s);
InvolutionReport validate_involution(const Surface& s);
std::vector<MSegInfo> enumerate_msegments(const Surface& s);

}  // namespace orbifuk
