/**
 * ainfty.cpp — sparse A∞ products, shifted evaluation, Stasheff checking,
 * and strict functors.
 */
#include "orbifuk/ainfty.hpp"

#include <algorithm>
#include <random>

namespace orbifuk {

namespace {

// Collapses duplicate basis ids and drops zero coefficients.
std::vector<AInftyCategory::Term> normalize(std::vector<AInftyCategory::Term> v) {
  std::sort(v.begin(), v.end(), [](const AInftyCategory::Term& a,
                                   const AInftyCategory::Term& b) {
    return a.basis < b.basis;
  });
  std::vector<AInftyCategory::Term> out;
  for (const AInftyCategory::Term& t : v) {
    if (!out.empty() && out.back().basis == t.basis) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const AInftyCategory::Term& t) { return t.coeff == 0; }),
            out.end());
  return out;
}

bool same_combination(const std::vector<AInftyCategory::Term>& a,
                      const std::vector<AInftyCategory::Term>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].basis != b[i].basis || !(a[i].coeff == b[i].coeff)) return false;
  return true;
}

}  // namespace

// ====== category construction ======

int AInftyCategory::add_object(const std::string& name) {
  int id = (int)objects.size();
  objects.push_back(name);
  unit_of.push_back(-1);
  int u = add_basis("1_" + name, id, id, 0, true);
  unit_of[(size_t)id] = u;
  return id;
}

int AInftyCategory::add_basis(const std::string& label, int src, int tgt,
                              long long degree, bool is_unit) {
  if (basis_index.count(label))
    throw std::logic_error("duplicate basis label: " + label);
  int id = (int)basis.size();
  basis.push_back(BasisElement{label, src, tgt, degree, is_unit});
  basis_index[label] = id;
  return id;
}

void AInftyCategory::set_mu(const std::vector<int>& chain, std::vector<Term> value) {
  if (chain.size() < 2) throw std::logic_error("mu table keys have length >= 2");
  for (int c : chain)
    if (basis[(size_t)c].is_unit)
      throw std::logic_error("mu table keys must not contain units");
  if (!composable(chain)) throw std::logic_error("mu table key does not compose");
  std::vector<Term> v = normalize(std::move(value));
  auto it = mu_table.find(chain);
  if (it != mu_table.end()) {
    if (!same_combination(it->second, v)) {
      std::string key;
      for (int c : chain) key += basis[(size_t)c].label + " ";
      throw std::logic_error("conflicting relation for chain: " + key);
    }
    return;
  }
  if (!v.empty()) mu_table.emplace(chain, std::move(v));
}

bool AInftyCategory::composable(const std::vector<int>& chain) const {
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (basis[(size_t)chain[i]].tgt != basis[(size_t)chain[i + 1]].src) return false;
  return true;
}

std::vector<AInftyCategory::Term> AInftyCategory::mu_chain(
    const std::vector<int>& chain) const {
  std::vector<Term> out;
  size_t n = chain.size();
  if (n <= 1) return out;
  if (n == 2) {
    int a = chain[0], b = chain[1];
    if (basis[(size_t)b].is_unit) {
      // unit applied second: mu^2(1, a) = (-1)^{|a|} a
      if (basis[(size_t)a].tgt == basis[(size_t)b].src)
        out.push_back(Term{sign_pow(basis[(size_t)a].degree), a});
      return out;
    }
    if (basis[(size_t)a].is_unit) {
      // unit applied first: mu^2(b, 1) = b
      if (basis[(size_t)b].src == basis[(size_t)a].src) out.push_back(Term{Rat(1), b});
      return out;
    }
  } else {
    for (int c : chain)
      if (basis[(size_t)c].is_unit) return out;
  }
  auto it = mu_table.find(chain);
  if (it != mu_table.end()) out = it->second;
  return out;
}

std::vector<int> AInftyCategory::hom_basis(int src, int tgt) const {
  std::vector<int> out;
  for (int id = 0; id < (int)basis.size(); ++id)
    if (basis[(size_t)id].src == src && basis[(size_t)id].tgt == tgt)
      out.push_back(id);
  return out;
}

// ====== shifted products ======

long long shifted_degree(const AInftyCategory& cat, const ShiftedMorphism& m) {
  return cat.basis[(size_t)m.basis].degree - (m.tgt_shift - m.src_shift);
}

std::vector<ShiftedMorphism> mu_addz(const AInftyCategory& cat,
                                     const std::vector<ShiftedMorphism>& chain) {
  std::vector<ShiftedMorphism> out;
  if (chain.empty()) return out;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& cur = cat.basis[(size_t)chain[i].basis];
    const auto& nxt = cat.basis[(size_t)chain[i + 1].basis];
    if (cur.tgt != nxt.src)
      throw NotComposable("object mismatch between chain entries " +
                          cur.label + " and " + nxt.label);
    if (chain[i].tgt_shift != chain[i + 1].src_shift)
      throw NotComposable("shift mismatch between chain entries " +
                          cur.label + " and " + nxt.label);
  }
  if (chain.size() == 1) return out;  // mu^1 vanishes
  // Koszul sign: sum over pairs i<j of |phi_i|·||a_j|| with
  // |phi_i| = src_shift - tgt_shift.
  long long sgn = 0;
  Rat coeff(1);
  std::vector<int> bases;
  bases.reserve(chain.size());
  long long reduced_suffix = 0;  // sum of ||a_j|| for j > current i
  for (size_t j = 0; j < chain.size(); ++j)
    reduced_suffix += cat.basis[(size_t)chain[j].basis].degree - 1;
  for (size_t i = 0; i < chain.size(); ++i) {
    reduced_suffix -= cat.basis[(size_t)chain[i].basis].degree - 1;
    long long phi = (long long)chain[i].src_shift - (long long)chain[i].tgt_shift;
    sgn += phi * reduced_suffix;
    coeff *= chain[i].coeff;
    bases.push_back(chain[i].basis);
  }
  if (coeff == 0) return out;
  Rat total = coeff * sign_pow(sgn);
  for (const AInftyCategory::Term& t : cat.mu_chain(bases)) {
    Rat c = total * t.coeff;
    out.push_back(ShiftedMorphism{c, t.basis, chain.front().src_shift,
                                  chain.back().tgt_shift});
  }
  return out;
}

// ====== strict functors ======

ShiftedMorphism apply_functor(const AInftyCategory& cat, const StrictFunctor& f,
                              const ShiftedMorphism& m) {
  (void)cat;
  const auto& img = f.basis_map[(size_t)m.basis];
  Rat c = m.coeff * img.first;
  return ShiftedMorphism{c, img.second, m.src_shift, m.tgt_shift};
}

bool verify_strict_functor(const AInftyCategory& cat, const StrictFunctor& f) {
  if (f.object_map.size() != cat.objects.size()) return false;
  if (f.basis_map.size() != cat.basis.size()) return false;
  for (int id = 0; id < (int)cat.basis.size(); ++id) {
    const auto& [c, img] = f.basis_map[(size_t)id];
    if (img < 0 || img >= (int)cat.basis.size() || c == 0) return false;
    const auto& src = cat.basis[(size_t)id];
    const auto& dst = cat.basis[(size_t)img];
    if (dst.src != f.object_map[(size_t)src.src]) return false;
    if (dst.tgt != f.object_map[(size_t)src.tgt]) return false;
    if (dst.degree != src.degree) return false;
    if (src.is_unit && (!dst.is_unit || !(c == Rat(1)))) return false;
  }
  // Push the table forward and compare: for each relation mu(c) = v we need
  // mu(F(c)) = F(v) up to the product of entry coefficients, and no extra
  // or missing relations on the image side.
  std::map<std::vector<int>, std::vector<AInftyCategory::Term>> pushed;
  for (const auto& [chain, value] : cat.mu_table) {
    std::vector<int> key;
    Rat scale(1);
    for (int c : chain) {
      key.push_back(f.basis_map[(size_t)c].second);
      scale *= f.basis_map[(size_t)c].first;
    }
    std::vector<AInftyCategory::Term> img;
    for (const AInftyCategory::Term& t : value) {
      Rat c2 = t.coeff * f.basis_map[(size_t)t.basis].first;
      // mu(F(c)) = scale^{-1} · F(v) rearranged to mu(F(c))·scale = F(v):
      // store F(v)/scale.
      Rat c3 = c2 / scale;
      img.push_back(AInftyCategory::Term{c3, f.basis_map[(size_t)t.basis].second});
    }
    auto it = pushed.find(key);
    if (it != pushed.end()) return false;  // image chains collide: not injective
    pushed.emplace(std::move(key), normalize(std::move(img)));
  }
  if (pushed.size() != cat.mu_table.size()) return false;
  for (const auto& [chain, value] : pushed) {
    auto it = cat.mu_table.find(chain);
    if (it == cat.mu_table.end()) return false;
    if (!same_combination(it->second, value)) return false;
  }
  return true;
}

bool functor_has_order_two(const AInftyCategory& cat, const StrictFunctor& f) {
  for (int o = 0; o < (int)cat.objects.size(); ++o)
    if (f.object_map[(size_t)f.object_map[(size_t)o]] != o) return false;
  for (int id = 0; id < (int)cat.basis.size(); ++id) {
    const auto& [c1, mid] = f.basis_map[(size_t)id];
    const auto& [c2, back] = f.basis_map[(size_t)mid];
    if (back != id) return false;
    Rat prod = c1 * c2;
    if (!(prod == Rat(1))) return false;
  }
  return true;
}

// ====== Stasheff consistency ======

namespace {

// Residue of the Stasheff identity on one chain; empty means it holds.
std::map<int, Rat> stasheff_residue(const AInftyCategory& cat,
                                    const std::vector<int>& chain) {
  std::map<int, Rat> acc;
  int n = (int)chain.size();
  long long red = 0;  // ||c_1|| + ... + ||c_k|| as k advances
  for (int k = 0; k <= n - 1; ++k) {
    if (k > 0) red += cat.basis[(size_t)chain[(size_t)k - 1]].degree - 1;
    for (int j = 2; j <= n - k; ++j) {
      if (k == 0 && j == n) continue;  // outer mu^1 of the full product
      std::vector<int> inner(chain.begin() + k, chain.begin() + k + j);
      std::vector<AInftyCategory::Term> mid = cat.mu_chain(inner);
      if (mid.empty()) continue;
      Rat sgn = sign_pow(red);
      for (const AInftyCategory::Term& t : mid) {
        std::vector<int> outer(chain.begin(), chain.begin() + k);
        outer.push_back(t.basis);
        outer.insert(outer.end(), chain.begin() + k + j, chain.end());
        for (const AInftyCategory::Term& top : cat.mu_chain(outer)) {
          Rat add = sgn * t.coeff * top.coeff;
          acc[top.basis] += add;
        }
      }
    }
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  return acc;
}

}  // namespace

StasheffReport check_stasheff(const AInftyCategory& cat, int max_n,
                              bool exhaustive, unsigned long long seed,
                              long long trials) {
  StasheffReport rep;
  const size_t kMaxViolations = 20;
  // Outgoing basis elements per object for fast chain extension.
  std::vector<std::vector<int>> outgoing(cat.objects.size());
  for (int id = 0; id < (int)cat.basis.size(); ++id)
    outgoing[(size_t)cat.basis[(size_t)id].src].push_back(id);

  auto visit = [&](const std::vector<int>& chain) {
    ++rep.chains_checked;
    if (!stasheff_residue(cat, chain).empty()) {
      rep.ok = false;
      if (rep.violations.size() < kMaxViolations)
        rep.violations.push_back(StasheffReport::Violation{chain});
    }
  };

  if (exhaustive) {
    std::vector<std::vector<int>> stack;
    for (int id = 0; id < (int)cat.basis.size(); ++id) stack.push_back({id});
    while (!stack.empty()) {
      std::vector<int> c = stack.back();
      stack.pop_back();
      if (c.size() >= 2) visit(c);
      if ((int)c.size() < max_n)
        for (int id : outgoing[(size_t)cat.basis[(size_t)c.back()].tgt]) {
          std::vector<int> c2 = c;
          c2.push_back(id);
          stack.push_back(std::move(c2));
        }
    }
    return rep;
  }

  std::mt19937_64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> len_dist(2, max_n);
    int n = len_dist(rng);
    std::uniform_int_distribution<size_t> start(0, cat.basis.size() - 1);
    std::vector<int> chain{(int)start(rng)};
    while ((int)chain.size() < n) {
      const auto& next = outgoing[(size_t)cat.basis[(size_t)chain.back()].tgt];
      if (next.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, next.size() - 1);
      chain.push_back(next[pick(rng)]);
    }
    if ((int)chain.size() == n) visit(chain);
  }
  return rep;
}

}  // namespace orbifuk
