#include "orbifuk/complex.hpp"

namespace orbifuk {

void GradedComplex::validate() const {
  for (const auto& [k, d] : diff) {
    if (d.ncols != dim(k) || d.nrows != dim(k + 1))
      throw NotAComplex("differential shape mismatch in degree " +
                        std::to_string(k));
    const Matrix* next = differential(k + 1);
    if (next) {
      Matrix sq = next->times(d);
      for (int r = 0; r < sq.nrows; ++r)
        if (!sq.rows[r].empty())
          throw NotAComplex("d∘d ≠ 0 out of degree " + std::to_string(k));
    }
  }
}

GradedComplex::Cohom GradedComplex::cohomology(int k) const {
  Cohom out;
  int n = dim(k);
  if (n == 0) return out;

  // Kernel of the outgoing differential (whole space if absent).
  std::vector<std::vector<Rat>> cocycles;
  const Matrix* dk = differential(k);
  if (dk) {
    cocycles = kernel_basis(*dk);
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = Rat(1);
      cocycles.push_back(std::move(e));
    }
  }

  // Span the coboundaries first, then keep the cocycles that still add
  // new directions; those are the representatives.
  SpanTracker tracker;
  const Matrix* din = differential(k - 1);
  if (din) {
    for (int c = 0; c < din->ncols; ++c) {
      std::vector<Rat> col(n, Rat(0));
      for (int r = 0; r < din->nrows; ++r) {
        Rat v = din->get(r, c);
        if (v != 0) col[r] = v;
      }
      tracker.accept(std::move(col));
    }
  }
  for (auto& z : cocycles) {
    std::vector<Rat> copy = z;
    if (tracker.accept(std::move(copy))) out.reps.push_back(z);
  }
  out.dim = (int)out.reps.size();
  return out;
}

}  // namespace orbifuk
