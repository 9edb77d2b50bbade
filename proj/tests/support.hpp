#pragma once

#include "heartglue/bondal.hpp"
#include "heartglue/yoneda.hpp"
#include "io.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace hgtest {

using namespace heartglue;

inline AlgebraPtr algebra(const std::string& name) {
  static std::map<std::string, AlgebraPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  AlgebraPtr a = cli::load_algebra(name).alg;
  cache.emplace(name, a);
  return a;
}

inline const std::vector<std::string>& corpus() { return cli::corpus_names(); }

inline Cx P(const AlgebraPtr& a, int i, int s = 0) { return shift(module_cx(projective(a, i)), s); }
inline Cx S(const AlgebraPtr& a, int i, int s = 0) { return shift(module_cx(simple(a, i)), s); }

// Oracles. None of these call into the library's linear algebra.

// Plain Gaussian elimination over Q.
inline std::size_t oracle_rank(const Matrix& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim Hom_A(M, N) from the intertwiner equations act_N[a] f_t = f_s act_M[a].
inline std::size_t oracle_hom_dim(const Rep& m, const Rep& n) {
  const Quiver& q = m.alg->quiver();
  std::vector<std::size_t> off(q.vertices + 1, 0);
  for (int v = 1; v <= q.vertices; ++v)
    off[v] = off[v - 1] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  std::size_t unknowns = off[q.vertices];
  // f_v entry (r, c) sits at off[v-1] + r * m.dim(v) + c.
  auto var = [&](int v, int r, int c) { return off[v - 1] + static_cast<std::size_t>(r * m.dim(v) + c); };
  std::vector<std::vector<Rat>> rows;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int s = q.arrows[ai].source, t = q.arrows[ai].target;
    const Matrix& am = m.act[ai];
    const Matrix& an = n.act[ai];
    for (int r = 0; r < n.dim(s); ++r)
      for (int c = 0; c < m.dim(t); ++c) {
        std::vector<Rat> row(unknowns);
        for (int k = 0; k < n.dim(t); ++k) row[var(t, k, c)] += an(r, k);
        for (int k = 0; k < m.dim(s); ++k) row[var(s, r, k)] -= am(k, c);
        rows.push_back(std::move(row));
      }
  }
  Matrix sys(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
  return unknowns - oracle_rank(sys);
}

// Cartan matrix C(i, j) = number of independent paths i -> j, counted by
// depth-first search over the quiver and corrected by a hand table for the
// corpus relations.
inline long count_free_paths(const Quiver& q, int i, int j) {
  if (i == j) return 1;
  long total = 0;
  for (const auto& a : q.arrows)
    if (a.source == i) total += count_free_paths(q, a.target, j);
  return total;
}

inline std::vector<std::vector<long>> oracle_cartan(const std::string& name, const Quiver& q) {
  int n = q.vertices;
  std::vector<std::vector<long>> c(n, std::vector<long>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c[i - 1][j - 1] = count_free_paths(q, i, j);
  if (name == "a3_rel") c[0][2] = 0;        // the length-two path 1 -> 3 is zero
  if (name == "comm_square") c[0][3] = 1;   // the two paths 1 -> 4 are identified
  return c;
}

// Euler form m^T C^{-T} n, with C the Cartan matrix of the algebra; equals
// sum_k (-1)^k dim Ext^k(M, N) when gl.dim is finite.
inline Rat oracle_euler(const std::vector<std::vector<long>>& cartan, const std::vector<int>& m,
                        const std::vector<int>& n) {
  std::size_t k = cartan.size();
  // Solve C^T y = n by elimination; then chi = m . y.
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = cartan[c][r];
    a[r][k] = n[r];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t x = c; x <= k; ++x) a[r][x] -= f * a[c][x];
    }
  }
  Rat chi = 0;
  for (std::size_t r = 0; r < k; ++r) chi += Rat(m[r]) * a[r][k] / a[r][r];
  return chi;
}

// Generators, seeded for reproducibility.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
  Rat small() { return Rat(uniform(-3, 3)); }
  Rat nonzero() {
    int v = uniform(1, 3);
    return Rat(coin() ? v : -v);
  }

  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(0.6) ? small() : Rat(0);
    return m;
  }

  std::vector<int> tops(int vertices, int lo, int hi) {
    std::vector<int> t;
    int n = uniform(lo, hi);
    for (int k = 0; k < n; ++k) t.push_back(uniform(1, vertices));
    return t;
  }

  // Cokernel of a random map between sums of indecomposable projectives.
  Rep module(const AlgebraPtr& a, int max_gens = 3) {
    ProjSum p = make_proj_sum(a, tops(a->vertices(), 1, max_gens));
    ProjSum q = make_proj_sum(a, tops(a->vertices(), 0, 2));
    RepMap f = map_from_coords(q, p.rep, matrix(coord_dim(q, p.rep), 1));
    return cokernel(f).obj;
  }

  // Random combination of a basis of Hom(M, N).
  RepMap map(const Rep& m, const Rep& n) {
    RepMap f = zero_map(m, n);
    for (const auto& b : hom_space(m, n))
      if (coin(0.7)) f = add(f, scale(b, small()));
    return f;
  }

  // 0 -> ker g -> E -> im g -> 0 for a random g out of a random module.
  Ses ses(const AlgebraPtr& a) {
    Rep e = module(a);
    Rep t = module(a);
    RepMap g = map(e, t);
    KernelResult k = kernel(g);
    ImageResult im = image(g);
    return Ses{k.incl, im.epi};
  }

  DHomClass cls(const DHomPtr& sp) {
    Matrix c(sp->dim(), 1);
    for (std::size_t i = 0; i < sp->dim(); ++i) c(i, 0) = small();
    return DHomClass{sp, c};
  }

  // A shifted module or the cone of a random map from a projective sum.
  Cx object(const AlgebraPtr& a) {
    if (coin(0.5)) return shift(module_cx(module(a)), uniform(-1, 1));
    ProjSum p = make_proj_sum(a, tops(a->vertices(), 1, 2));
    Rep m = module(a);
    RepMap f = map_from_coords(p, m, matrix(coord_dim(p, m), 1));
    Cx src = proj_module_cx(p, 0);
    Cx dst = module_cx(m, 0);
    CxMap cf{src, dst, {{0, f}}};
    return shift(cone(cf).obj, uniform(-1, 1));
  }
};

inline std::vector<int> dims_of(const Rep& m) { return m.dims; }

}  // namespace hgtest
