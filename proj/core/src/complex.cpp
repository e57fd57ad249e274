#include "weid/complex.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <unordered_map>

namespace weid {

FieldConfig FieldConfig::fp(std::uint64_t prime) {
  if (prime < 2 || prime > (std::uint64_t{1} << 31))
    throw DomainError("prime field characteristic must lie in [2, 2^31]");
  for (std::uint64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw DomainError(std::to_string(prime) + " is not prime");
  return {false, prime};
}

void CellBudget::charge(std::uint64_t k) {
  if (k > remaining)
    throw ResourceLimitError("cell budget exhausted while enumerating faces (raise --budget-faces)");
  remaining -= k;
}

// ---------------------------------------------------------------------------
// SimplicialComplex basics

namespace {

/// Keep only inclusion-minimal masks; sort; dedupe.
std::vector<VarMask> minimalize_masks(std::vector<VarMask> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const VarMask& a, const VarMask& b) {
              auto ca = a.count(), cb = b.count();
              return ca != cb ? ca < cb : a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarMask> out;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& kept : out)
      if (kept.subset_of(s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t nverts, std::vector<VarMask> minimal_nonfaces)
    : n(nverts), nonfaces(minimalize_masks(std::move(minimal_nonfaces))) {
  if (n > kMaxVariables) throw ResourceLimitError("complex exceeds the vertex cap");
  VarMask uni = VarMask::first_n(n);
  for (const auto& N : nonfaces) {
    if (N.empty())
      throw DomainError("empty nonface would make the void complex; refuse");
    if (!N.subset_of(uni)) throw DomainError("nonface outside the vertex universe");
  }
}

SimplicialComplex SimplicialComplex::from_squarefree(const MonomialIdeal& J) {
  if (J.is_unit()) throw DomainError("Stanley-Reisner complex of the unit ideal is void");
  if (!J.is_squarefree()) throw DomainError("Stanley-Reisner complex needs a squarefree ideal");
  std::vector<VarMask> nf;
  nf.reserve(J.num_gens());
  for (const auto& g : J.gens()) nf.push_back(g.support());
  return SimplicialComplex(J.nvars(), std::move(nf));
}

bool SimplicialComplex::is_face(const VarMask& F) const {
  for (const auto& N : nonfaces)
    if (N.subset_of(F)) return false;
  return true;
}

std::size_t min_hitting_set_size(const std::vector<VarMask>& sets) {
  // Exact branch and bound: branch over the elements of the first unhit set.
  std::size_t best = SIZE_MAX;
  struct Rec {
    const std::vector<VarMask>& sets;
    std::size_t* best;
    void run(VarMask chosen, std::size_t size) {
      if (size >= *best) return;
      const VarMask* unhit = nullptr;
      for (const auto& s : sets)
        if (!s.intersects(chosen)) {
          unhit = &s;
          break;
        }
      if (!unhit) {
        *best = size;
        return;
      }
      unhit->for_each([&](std::size_t v) {
        VarMask c2 = chosen;
        c2.set(v);
        run(c2, size + 1);
      });
    }
  } rec{sets, &best};
  rec.run(VarMask{}, 0);
  return best == SIZE_MAX ? 0 : best;
}

std::size_t SimplicialComplex::max_face_size() const {
  return n - min_hitting_set_size(nonfaces);
}

std::vector<std::vector<VarMask>> SimplicialComplex::faces_by_size(CellBudget& budget) const {
  std::vector<std::vector<VarMask>> groups(max_face_size() + 1);
  // Backtracking in increasing vertex order; F stays a face throughout, so
  // adding v violates only nonfaces N with v in N and N \ {v} ⊆ F.
  struct Rec {
    const SimplicialComplex& C;
    CellBudget& budget;
    std::vector<std::vector<VarMask>>& groups;
    void run(VarMask F, std::size_t nextv, std::size_t size) {
      budget.charge(1);
      groups[size].push_back(F);
      for (std::size_t v = nextv; v < C.n; ++v) {
        VarMask Fv = F;
        Fv.set(v);
        bool ok = true;
        for (const auto& N : C.nonfaces)
          if (N.test(v) && N.subset_of(Fv)) {
            ok = false;
            break;
          }
        if (ok) run(Fv, v + 1, size + 1);
      }
    }
  } rec{*this, budget, groups};
  rec.run(VarMask{}, 0, 0);
  return groups;
}

std::vector<VarMask> SimplicialComplex::facets(CellBudget& budget) const {
  auto groups = faces_by_size(budget);
  std::vector<VarMask> out;
  for (const auto& group : groups)
    for (const auto& F : group) {
      bool maximal = true;
      for (std::size_t v = 0; v < n && maximal; ++v) {
        if (F.test(v)) continue;
        VarMask Fv = F;
        Fv.set(v);
        if (is_face(Fv)) maximal = false;
      }
      if (maximal) out.push_back(F);
    }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(std::int64_t i) const {
  if (i >= dim()) return *this;
  if (i < -1) throw DomainError("skeleton index below -1");
  if (n > 20) throw ResourceLimitError("skeleton nonface generation limited to 20 vertices");
  std::vector<VarMask> nf = nonfaces;
  // All (i+2)-subsets become nonfaces; minimalization reconciles them with
  // the inherited ones.
  const std::size_t k = static_cast<std::size_t>(i + 2);
  std::vector<std::size_t> idx(k);
  struct Rec {
    std::size_t n, k;
    std::vector<std::size_t>& idx;
    std::vector<VarMask>& nf;
    void run(std::size_t pos, std::size_t start) {
      if (pos == k) {
        VarMask m;
        for (auto v : idx) m.set(v);
        nf.push_back(m);
        return;
      }
      for (std::size_t v = start; v + (k - pos) <= n; ++v) {
        idx[pos] = v;
        run(pos + 1, v + 1);
      }
    }
  } rec{n, k, idx, nf};
  if (k == 0)
    nf.push_back(VarMask{});  // unreachable: k >= 1 since i >= -1
  else
    rec.run(0, 0);
  return SimplicialComplex(n, std::move(nf));
}

SimplicialComplex SimplicialComplex::link(const VarMask& F) const {
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::size_t m = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!F.test(v)) map[v] = m++;
  std::vector<VarMask> nf;
  nf.reserve(nonfaces.size());
  for (const auto& N : nonfaces) {
    VarMask r;
    N.minus(F).for_each([&](std::size_t v) { r.set(map[v]); });
    if (r.empty())
      throw DomainError("link of a nonface requested");
    nf.push_back(r);
  }
  return SimplicialComplex(m, std::move(nf));
}

// ---------------------------------------------------------------------------
// Exact matrix ranks

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::size_t rank_bareiss_int64(std::vector<std::vector<std::int64_t>> M) {
  const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 t = static_cast<__int128>(M[i][j]) * M[r][c] -
                     static_cast<__int128>(M[i][c]) * M[r][j];
        t /= prev;  // exact by the Bareiss identity
        if (t > INT64_MAX || t < INT64_MIN) throw OverflowError("bareiss entry overflow");
        M[i][j] = static_cast<std::int64_t>(t);
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_bareiss_big(const std::vector<std::vector<std::int64_t>>& M0) {
  std::vector<std::vector<BigInt>> M(M0.size());
  for (std::size_t i = 0; i < M0.size(); ++i) M[i].assign(M0[i].begin(), M0[i].end());
  const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        M[i][j] = (M[i][j] * M[r][c] - M[i][c] * M[r][j]) / prev;
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> M0, std::uint64_t p) {
  const std::size_t rows = M0.size(), cols = rows ? M0[0].size() : 0;
  std::vector<std::vector<std::uint64_t>> M(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t v = M0[i][j] % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      M[i][j] = static_cast<std::uint64_t>(v);
    }
  auto inv = [&](std::uint64_t a) {
    // Fermat: p prime.
    std::uint64_t e = p - 2, b = 1;
    while (e) {
      if (e & 1) b = b * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return b;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    std::uint64_t s = inv(M[r][c]);
    for (std::size_t j = c; j < cols; ++j) M[r][j] = M[r][j] * s % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (!M[i][c]) continue;
      std::uint64_t f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] = (M[i][j] + (p - f) * M[r][j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& M,
                        const FieldConfig& field) {
  if (M.empty() || M[0].empty()) return 0;
  if (!field.rationals) return rank_mod_p(M, field.p);
  try {
    return rank_bareiss_int64(M);
  } catch (const OverflowError&) {
    return rank_bareiss_big(M);
  }
}

// ---------------------------------------------------------------------------
// Homology of an explicitly listed complex

namespace {

/// Reduced Betti numbers from face groups: result[i] = rank H~_{i-1}.
/// Each boundary matrix charges its entry count against the budget, so
/// elimination work (and its memory) stays inside the same cap as face
/// enumeration instead of silently dwarfing it.
std::vector<std::int64_t> homology_of_groups(std::vector<std::vector<VarMask>> groups,
                                             const FieldConfig& field, CellBudget& budget) {
  const std::size_t K = groups.size() - 1;  // largest face size
  for (auto& g : groups) std::sort(g.begin(), g.end());

  std::vector<std::size_t> rank_up(K + 2, 0);  // rank_up[s] = rank of d: C_s -> C_{s-1}
  for (std::size_t s = 1; s <= K; ++s) {
    const auto& rows = groups[s - 1];
    const auto& cols = groups[s];
    if (rows.empty() || cols.empty()) continue;
    budget.charge(static_cast<std::uint64_t>(rows.size()) *
                  static_cast<std::uint64_t>(cols.size()));
    std::vector<std::vector<std::int64_t>> M(rows.size(),
                                             std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
      int sign = 1;
      cols[cj].for_each([&](std::size_t v) {
        VarMask sub = cols[cj];
        sub.reset(v);
        auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        // Every boundary face of a face is a face.
        M[static_cast<std::size_t>(it - rows.begin())][cj] = sign;
        sign = -sign;
      });
    }
    rank_up[s] = matrix_rank(M, field);
  }

  std::vector<std::int64_t> betti(K + 1, 0);  // betti[s] = rank H~_{s-1}
  for (std::size_t s = 0; s <= K; ++s)
    betti[s] = static_cast<std::int64_t>(groups[s].size()) -
               static_cast<std::int64_t>(rank_up[s]) - static_cast<std::int64_t>(rank_up[s + 1]);
  return betti;
}

}  // namespace

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& C,
                                                 const FieldConfig& field, CellBudget& budget) {
  const std::int64_t d = C.dim();
  std::vector<std::int64_t> out(static_cast<std::size_t>(d + 2), 0);

  if (C.n == 0) {
    out[0] = 1;  // the complex {∅}: H~_{-1} = K
    return out;
  }
  if (C.nonfaces.empty()) return out;  // full simplex: acyclic

  // Cone shortcut: a vertex in no nonface cones the complex, so everything
  // vanishes.
  {
    VarMask used;
    for (const auto& N : C.nonfaces) used |= N;
    if (used != VarMask::first_n(C.n)) return out;
  }

  const std::size_t s = C.nonfaces.size();
  const bool direct_feasible = C.n <= 16;
  const bool dual_feasible = s <= 24;
  if (!direct_feasible && !dual_feasible)
    throw ResourceLimitError("homology: both 2^n and 2^s enumerations exceed supported size");

  if (direct_feasible && (C.n <= s || !dual_feasible)) {
    auto betti = homology_of_groups(C.faces_by_size(budget), field, budget);
    // max face size == betti.size()-1 == d+1
    for (std::size_t i = 0; i < betti.size() && i < out.size(); ++i) out[i] = betti[i];
    return out;
  }

  // Dual route: nerve of the nonface family, then Alexander duality
  // H~_i(C) = H~_{n-3-i}(nerve).
  std::vector<std::vector<VarMask>> groups(s + 1);
  VarMask full = VarMask::first_n(C.n);
  struct Rec {
    const std::vector<VarMask>& sets;
    const VarMask& full;
    CellBudget& budget;
    std::vector<std::vector<VarMask>>& groups;
    std::size_t s;
    void run(VarMask S, VarMask uni, std::size_t next, std::size_t size) {
      budget.charge(1);
      groups[size].push_back(S);
      for (std::size_t i = next; i < s; ++i) {
        VarMask u2 = uni | sets[i];
        if (u2 == full) continue;  // union covers V: not a nerve face, nor any superset
        VarMask S2 = S;
        S2.set(i);
        run(S2, u2, i + 1, size + 1);
      }
    }
  } rec{C.nonfaces, full, budget, groups, s};
  rec.run(VarMask{}, VarMask{}, 0, 0);
  while (groups.size() > 1 && groups.back().empty()) groups.pop_back();
  auto nerve_betti = homology_of_groups(std::move(groups), field, budget);

  // H~_{deg}(C) = nerve_betti[n - 2 - deg] for deg = -1 .. d.
  for (std::int64_t deg = -1; deg <= d; ++deg) {
    std::int64_t j = static_cast<std::int64_t>(C.n) - 2 - deg;
    if (j >= 0 && j < static_cast<std::int64_t>(nerve_betti.size()))
      out[static_cast<std::size_t>(deg + 1)] = nerve_betti[static_cast<std::size_t>(j)];
  }
  // Sanity: duality cannot place homology outside [-1, dim].
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(nerve_betti.size()); ++j) {
    std::int64_t deg = static_cast<std::int64_t>(C.n) - 2 - j;
    if ((deg < -1 || deg > d) && nerve_betti[static_cast<std::size_t>(j)] != 0)
      throw std::logic_error("dual homology landed outside the complex's degree range");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cohen–Macaulayness and depth

namespace {

std::string complex_key(const SimplicialComplex& C) {
  std::string k;
  k.reserve(8 + C.nonfaces.size() * VarMask::kWords * 8);
  auto put64 = [&k](std::uint64_t w) {
    for (int b = 0; b < 8; ++b) k.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  };
  put64(C.n);
  for (const auto& N : C.nonfaces) {
    std::uint64_t words[VarMask::kWords] = {};
    N.for_each([&](std::size_t v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); });
    for (auto w : words) put64(w);
  }
  return k;
}

/// Remove ghost vertices (singleton nonfaces: the variable itself is in the
/// ideal) and cone vertices (in no nonface); both preserve CM-ness.
SimplicialComplex reduce_for_cm(const SimplicialComplex& C) {
  VarMask ghosts, used;
  for (const auto& N : C.nonfaces) {
    if (N.count() == 1) ghosts |= N;
    used |= N;
  }
  VarMask keepmask = VarMask::first_n(C.n).minus(ghosts) & used;
  if (keepmask == VarMask::first_n(C.n)) return C;
  std::vector<std::size_t> map(C.n, SIZE_MAX);
  std::size_t m = 0;
  for (std::size_t v = 0; v < C.n; ++v)
    if (keepmask.test(v)) map[v] = m++;
  std::vector<VarMask> nf;
  for (const auto& N : C.nonfaces) {
    if (N.count() == 1) continue;
    VarMask r;
    N.for_each([&](std::size_t v) { r.set(map[v]); });
    nf.push_back(r);
  }
  return SimplicialComplex(m, std::move(nf));
}

bool is_cm_rec(const SimplicialComplex& C0, const FieldConfig& field, CellBudget& budget,
               std::unordered_map<std::string, bool>& memo) {
  SimplicialComplex C = reduce_for_cm(C0);
  if (C.n == 0) return true;  // {∅} and (iterated) cones/full simplices
  auto key = complex_key(C);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  budget.charge(1);

  bool ok = true;
  const std::int64_t d = C.dim();
  auto ranks = reduced_homology_ranks(C, field, budget);
  for (std::int64_t deg = -1; deg < d && ok; ++deg)
    if (ranks[static_cast<std::size_t>(deg + 1)] != 0) ok = false;

  // Links of all faces = iterated vertex links; recurse on vertex links.
  for (std::size_t v = 0; v < C.n && ok; ++v) {
    // After reduction every singleton is a face.
    if (!is_cm_rec(C.link(VarMask::single(v)), field, budget, memo)) ok = false;
  }
  memo.emplace(std::move(key), ok);
  return ok;
}

}  // namespace

bool is_cm_complex(const SimplicialComplex& C, const FieldConfig& field, CellBudget& budget) {
  std::unordered_map<std::string, bool> memo;
  return is_cm_rec(C, field, budget, memo);
}

std::int64_t complex_depth(const SimplicialComplex& C, const FieldConfig& field,
                           CellBudget& budget) {
  for (std::int64_t i = C.dim(); i >= 0; --i)
    if (is_cm_complex(C.skeleton(i), field, budget)) return i + 1;
  return 0;  // the (-1)-skeleton {∅} is CM by convention
}

}  // namespace weid
