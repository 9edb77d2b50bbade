#include "heartglue/modules.hpp"

#include <numeric>
#include <string>

namespace heartglue {

namespace {

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* where) {
  if (a.get() != b.get()) throw ModuleError(std::string(where) + ": modules over different algebras");
}

std::size_t udim(const Rep& m, int v) { return static_cast<std::size_t>(m.dim(v)); }

}  // namespace

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Matrix path_action(const Rep& m, const Path& p, int source) {
  Matrix acc = Matrix::identity(udim(m, source));
  for (int a : p) acc = acc * m.act.at(a);
  return acc;
}

Matrix basis_action(const Rep& m, std::size_t k) {
  const BasisPath& b = m.alg->basis(k);
  return path_action(m, b.arrows, b.source);
}

void validate(const Rep& m) {
  if (!m.alg) throw ModuleError("representation without an algebra");
  const Quiver& q = m.alg->quiver();
  if (static_cast<int>(m.dims.size()) != q.vertices)
    throw ModuleError("expected " + std::to_string(q.vertices) + " vertex dimensions, got " +
                      std::to_string(m.dims.size()));
  for (int d : m.dims)
    if (d < 0) throw ModuleError("negative vertex dimension");
  if (m.act.size() != q.arrows.size())
    throw ModuleError("expected " + std::to_string(q.arrows.size()) + " arrow matrices");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (m.act[a].rows() != udim(m, ar.source) || m.act[a].cols() != udim(m, ar.target))
      throw ModuleError("arrow '" + ar.name + "' needs a " + std::to_string(m.dim(ar.source)) + "x" +
                        std::to_string(m.dim(ar.target)) + " matrix (G_" + std::to_string(ar.target) + " -> G_" +
                        std::to_string(ar.source) + ")");
  }
  for (std::size_t r = 0; r < m.alg->relations().size(); ++r) {
    const Relation& rel = m.alg->relations()[r];
    int s = q.arrows[rel.front().path.front()].source;
    int t = q.arrows[rel.front().path.back()].target;
    Matrix sum(udim(m, s), udim(m, t));
    for (const auto& term : rel) sum = sum + path_action(m, term.path, s).scaled(term.coef);
    if (!sum.is_zero()) throw ModuleError("relation " + std::to_string(r) + " does not act by zero");
  }
}

Rep make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> act) {
  Rep m{std::move(alg), std::move(dims), std::move(act)};
  validate(m);
  return m;
}

bool same_rep(const Rep& a, const Rep& b) { return a.alg == b.alg && a.dims == b.dims && a.act == b.act; }

Rep zero_rep(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  Rep m{alg, std::vector<int>(q.vertices, 0), {}};
  for (std::size_t a = 0; a < q.arrows.size(); ++a) m.act.emplace_back(0, 0);
  return m;
}

Rep projective(AlgebraPtr alg, int i) {
  const Quiver& q = alg->quiver();
  Rep m{alg, std::vector<int>(q.vertices), {}};
  for (int v = 1; v <= q.vertices; ++v) m.dims[v - 1] = static_cast<int>(alg->paths_between(v, i).size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    const auto& from = alg->paths_between(ar.target, i);
    const auto& to = alg->paths_between(ar.source, i);
    long ak = alg->find_basis(Path{static_cast<int>(a)}, ar.source);
    Matrix act(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      const auto& prod = alg->mult(from[c], static_cast<std::size_t>(ak));
      for (std::size_t r = 0; r < to.size(); ++r) act(r, c) = prod[to[r]];
    }
    m.act.push_back(act);
  }
  return m;
}

Rep simple(AlgebraPtr alg, int i) {
  if (i < 1 || i > alg->vertices()) throw ModuleError("simple: vertex out of range");
  const Quiver& q = alg->quiver();
  Rep m{alg, std::vector<int>(q.vertices, 0), {}};
  m.dims[i - 1] = 1;
  for (const auto& ar : q.arrows) m.act.emplace_back(udim(m, ar.source), udim(m, ar.target));
  return m;
}

RepMap zero_map(const Rep& src, const Rep& dst) {
  require_same_algebra(src.alg, dst.alg, "zero_map");
  RepMap f{src, dst, {}};
  for (int v = 1; v <= src.alg->vertices(); ++v) f.blocks.emplace_back(udim(dst, v), udim(src, v));
  return f;
}

RepMap identity_map(const Rep& m) {
  RepMap f{m, m, {}};
  for (int v = 1; v <= m.alg->vertices(); ++v) f.blocks.push_back(Matrix::identity(udim(m, v)));
  return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  if (g.src.dims != f.dst.dims) throw ModuleError("compose: middle objects differ");
  RepMap h{f.src, g.dst, {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

RepMap add(const RepMap& f, const RepMap& g) {
  RepMap h = f;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks[v] = f.blocks[v] + g.blocks[v];
  return h;
}

RepMap scale(const RepMap& f, const Rat& c) {
  RepMap h = f;
  for (auto& b : h.blocks) b = b.scaled(c);
  return h;
}

bool is_morphism(const RepMap& f) {
  const Quiver& q = f.src.alg->quiver();
  for (int v = 1; v <= q.vertices; ++v)
    if (f.at(v).rows() != udim(f.dst, v) || f.at(v).cols() != udim(f.src, v)) return false;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (f.at(ar.source) * f.src.act[a] != f.dst.act[a] * f.at(ar.target)) return false;
  }
  return true;
}

bool is_zero(const RepMap& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool is_iso(const RepMap& f) {
  for (int v = 1; v <= f.src.alg->vertices(); ++v) {
    const Matrix& b = f.at(v);
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  }
  return is_morphism(f);
}

bool equal(const RepMap& f, const RepMap& g) { return f.blocks == g.blocks; }

Matrix flatten(const RepMap& f) {
  std::size_t n = 0;
  for (const auto& b : f.blocks) n += b.rows() * b.cols();
  Matrix v(n, 1);
  std::size_t k = 0;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) v(k++, 0) = b(i, j);
  return v;
}

RepMap unflatten(const Rep& src, const Rep& dst, const Matrix& v) {
  RepMap f = zero_map(src, dst);
  std::size_t k = 0;
  for (auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = v(k++, 0);
  return f;
}

std::vector<RepMap> hom_space(const Rep& m, const Rep& n) {
  require_same_algebra(m.alg, n.alg, "hom_space");
  const Quiver& q = m.alg->quiver();
  std::vector<std::size_t> off(q.vertices + 1, 0);
  for (int v = 1; v <= q.vertices; ++v) off[v] = off[v - 1] + udim(n, v) * udim(m, v);
  std::size_t unknowns = off[q.vertices];
  std::size_t eqs = 0;
  for (const auto& ar : q.arrows) eqs += udim(n, ar.source) * udim(m, ar.target);
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.arrows[a].source, t = q.arrows[a].target;
    const std::size_t Ns = udim(n, s), Ms = udim(m, s), Mt = udim(m, t), Nt = udim(n, t);
    const Matrix& am = m.act[a];
    const Matrix& an = n.act[a];
    // F_s * am - an * F_t, entry (p, r)
    for (std::size_t p = 0; p < Ns; ++p)
      for (std::size_t r = 0; r < Mt; ++r, ++row) {
        for (std::size_t x = 0; x < Ms; ++x)
          if (!heartglue::is_zero(am(x, r))) sys(row, off[s - 1] + p * Ms + x) += am(x, r);
        for (std::size_t x = 0; x < Nt; ++x)
          if (!heartglue::is_zero(an(p, x))) sys(row, off[t - 1] + x * Mt + r) -= an(p, x);
      }
  }
  Matrix k = kernel_basis(sys);
  std::vector<RepMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unflatten(m, n, k.col(c)));
  return out;
}

KernelResult kernel(const RepMap& f) {
  const Quiver& q = f.src.alg->quiver();
  std::vector<Matrix> basis, linv;
  Rep k{f.src.alg, std::vector<int>(q.vertices), {}};
  for (int v = 1; v <= q.vertices; ++v) {
    basis.push_back(kernel_basis(f.at(v)));
    linv.push_back(left_inverse(basis.back()));
    k.dims[v - 1] = static_cast<int>(basis.back().cols());
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    k.act.push_back(linv[ar.source - 1] * f.src.act[a] * basis[ar.target - 1]);
  }
  return {k, RepMap{k, f.src, basis}};
}

CokernelResult cokernel(const RepMap& f) {
  const Quiver& q = f.src.alg->quiver();
  std::vector<Matrix> proj, rinv;
  Rep c{f.src.alg, std::vector<int>(q.vertices), {}};
  for (int v = 1; v <= q.vertices; ++v) {
    proj.push_back(cokernel_projection(f.at(v)));
    rinv.push_back(right_inverse(proj.back()));
    c.dims[v - 1] = static_cast<int>(proj.back().rows());
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    c.act.push_back(proj[ar.source - 1] * f.dst.act[a] * rinv[ar.target - 1]);
  }
  return {c, RepMap{f.dst, c, proj}};
}

ImageResult image(const RepMap& f) {
  const Quiver& q = f.src.alg->quiver();
  std::vector<Matrix> basis, linv;
  Rep im{f.src.alg, std::vector<int>(q.vertices), {}};
  for (int v = 1; v <= q.vertices; ++v) {
    basis.push_back(independent_columns(f.at(v)));
    if (basis.back().rows() != udim(f.dst, v)) basis.back() = Matrix(udim(f.dst, v), 0);
    linv.push_back(left_inverse(basis.back()));
    im.dims[v - 1] = static_cast<int>(basis.back().cols());
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    im.act.push_back(linv[ar.source - 1] * f.dst.act[a] * basis[ar.target - 1]);
  }
  RepMap epi{f.src, im, {}};
  for (int v = 1; v <= q.vertices; ++v) epi.blocks.push_back(linv[v - 1] * f.at(v));
  return {im, epi, RepMap{im, f.dst, basis}};
}

DirectSum direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw ModuleError("direct_sum of nothing");
  const AlgebraPtr& alg = parts.front().alg;
  for (const auto& p : parts) require_same_algebra(alg, p.alg, "direct_sum");
  const Quiver& q = alg->quiver();
  Rep s{alg, std::vector<int>(q.vertices, 0), {}};
  for (const auto& p : parts)
    for (int v = 1; v <= q.vertices; ++v) s.dims[v - 1] += p.dim(v);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    Matrix m(udim(s, ar.source), udim(s, ar.target));
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.act[a]);
      r += udim(p, ar.source);
      c += udim(p, ar.target);
    }
    s.act.push_back(m);
  }
  DirectSum out{s, {}, {}};
  std::vector<std::size_t> off(q.vertices, 0);
  for (const auto& p : parts) {
    RepMap inj = zero_map(p, s), pr = zero_map(s, p);
    for (int v = 1; v <= q.vertices; ++v) {
      for (std::size_t i = 0; i < udim(p, v); ++i) {
        inj.blocks[v - 1](off[v - 1] + i, i) = 1;
        pr.blocks[v - 1](i, off[v - 1] + i) = 1;
      }
      off[v - 1] += udim(p, v);
    }
    out.inj.push_back(inj);
    out.proj.push_back(pr);
  }
  return out;
}

DirectSum direct_sum(const Rep& a, const Rep& b) { return direct_sum(std::vector<Rep>{a, b}); }

RepMap map_from_sum(const DirectSum& s, const std::vector<RepMap>& parts) {
  RepMap f = zero_map(s.obj, parts.front().dst);
  for (std::size_t i = 0; i < parts.size(); ++i) f = add(f, compose(parts[i], s.proj[i]));
  return f;
}

RepMap map_into_sum(const DirectSum& s, const std::vector<RepMap>& parts) {
  RepMap f = zero_map(parts.front().src, s.obj);
  for (std::size_t i = 0; i < parts.size(); ++i) f = add(f, compose(s.inj[i], parts[i]));
  return f;
}

RepMap sum_of_maps(const DirectSum& src, const DirectSum& dst, const std::vector<RepMap>& diag) {
  RepMap f = zero_map(src.obj, dst.obj);
  for (std::size_t i = 0; i < diag.size(); ++i) f = add(f, compose(dst.inj[i], compose(diag[i], src.proj[i])));
  return f;
}

RepMap factor_through_cokernel(const CokernelResult& c, const RepMap& h) {
  RepMap out{c.obj, h.dst, {}};
  for (int v = 1; v <= c.obj.alg->vertices(); ++v) out.blocks.push_back(h.at(v) * right_inverse(c.proj.at(v)));
  return out;
}

RepMap lift_to_kernel(const KernelResult& k, const RepMap& u) {
  RepMap out{u.src, k.obj, {}};
  for (int v = 1; v <= k.obj.alg->vertices(); ++v) out.blocks.push_back(left_inverse(k.incl.at(v)) * u.at(v));
  return out;
}

FiltrationStep filtration_step(const Rep& v, int k) {
  const Quiver& q = v.alg->quiver();
  if (k < 0 || k > q.vertices) throw ModuleError("filtration_step: level out of range");
  Rep f{v.alg, v.dims, {}};
  for (int j = k + 1; j <= q.vertices; ++j) f.dims[j - 1] = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (ar.target <= k)
      f.act.push_back(v.act[a]);
    else
      f.act.emplace_back(udim(f, ar.source), udim(f, ar.target));
  }
  RepMap incl = zero_map(f, v);
  for (int j = 1; j <= k; ++j) incl.blocks[j - 1] = Matrix::identity(udim(v, j));
  return {f, incl};
}

}  // namespace heartglue
