#include "heartglue/derived_hom.hpp"

#include <mutex>
#include <tuple>

namespace heartglue {

std::size_t HomLayout::block_dim(int k) const {
  if (k < p.lo || k > p.hi()) return 0;
  return coord_dim(p.proj_at(k), y.term(k + n));
}

HomLayout hom_layout(const Cx& p, const Cx& y, int n) {
  if (!p.is_projective()) throw ModuleError("hom_layout: source is not a projective complex");
  HomLayout l{p, y, n, {}, 0};
  for (int k = p.lo; k <= p.hi(); ++k) {
    l.offset.emplace(k, l.dim);
    l.dim += l.block_dim(k);
  }
  return l;
}

Matrix hom_differential(const HomLayout& from, const HomLayout& to) {
  const Cx& p = from.p;
  const Cx& y = from.y;
  int n = from.n;
  Matrix m(to.dim, from.dim);
  Rat sgn = (n % 2 == 0) ? Rat(-1) : Rat(1);
  for (int k = p.lo; k <= p.hi(); ++k) {
    std::size_t src_dim = from.block_dim(k);
    if (src_dim == 0) continue;
    std::size_t src_off = from.offset.at(k);
    const ProjSum& pk = p.proj_at(k);
    if (to.block_dim(k) > 0)
      m.add_block(to.offset.at(k), src_off, postcompose_matrix(pk, y.diff(k + n)));
    if (k - 1 >= p.lo && to.block_dim(k - 1) > 0) {
      const ProjSum& pk1 = p.proj_at(k - 1);
      Matrix g = coords_of(pk1, p.diff(k - 1));
      m.add_block(to.offset.at(k - 1), src_off, precompose_matrix(pk1, pk, g, y.term(k + n)), sgn);
    }
  }
  return m;
}

Matrix family_coords(const HomLayout& l, const std::map<int, RepMap>& f) {
  Matrix c(l.dim, 1);
  for (const auto& [k, fk] : f) {
    if (l.block_dim(k) == 0) continue;
    c.set_block(l.offset.at(k), 0, coords_of(l.p.proj_at(k), fk));
  }
  return c;
}

std::map<int, RepMap> family_from_coords(const HomLayout& l, const Matrix& c) {
  std::map<int, RepMap> f;
  for (int k = l.p.lo; k <= l.p.hi(); ++k) {
    std::size_t bd = l.block_dim(k);
    const ProjSum& pk = l.p.proj_at(k);
    Rep tgt = l.y.term(k + l.n);
    if (bd == 0) {
      f.emplace(k, zero_map(pk.rep, tgt));
      continue;
    }
    f.emplace(k, map_from_coords(pk, tgt, c.block(l.offset.at(k), 0, bd, 1)));
  }
  return f;
}

DHomSpace::DHomSpace(const Cx& x, const Cx& y, int n) : x_(x), y_(y), n_(n), res_(resolve(x)) {
  layout_ = hom_layout(res_.proj, y, n);
  HomLayout prev = hom_layout(res_.proj, y, n - 1);
  HomLayout next = hom_layout(res_.proj, y, n + 1);
  std::size_t dim = layout_.dim;
  d_out_ = hom_differential(layout_, next);
  if (dim == 0) {
    reps_ = Matrix(0, 0);
    decomp_inv_ = Matrix(0, 0);
    return;
  }
  Matrix z = next.dim == 0 ? Matrix::identity(dim) : kernel_basis(d_out_);
  Matrix b = prev.dim == 0 ? Matrix(dim, 0) : hom_differential(prev, layout_);
  std::vector<Matrix> chosen;
  if (z.cols() > 0) {
    Rref r = rref(hstack(b, z));
    for (std::size_t p : r.pivots)
      if (p >= b.cols()) chosen.push_back(z.col(p - b.cols()));
  }
  reps_ = chosen.empty() ? Matrix(dim, 0) : Matrix::from_columns(dim, chosen);
  Matrix bind = b.cols() == 0 ? Matrix(dim, 0) : independent_columns(b);
  Matrix full = hstack(reps_, bind);
  decomp_inv_ = full.cols() == 0 ? Matrix(0, dim) : left_inverse(full);
}

Matrix DHomSpace::representative(const Matrix& coords) const {
  if (coords.rows() != dim()) throw ModuleError("class coordinates have the wrong length");
  if (dim() == 0) return Matrix(layout_.dim, 1);
  return reps_ * coords;
}

bool DHomSpace::is_cocycle(const Matrix& cocycle) const {
  if (cocycle.rows() != layout_.dim || cocycle.cols() != 1) return false;
  if (d_out_.rows() == 0 || layout_.dim == 0) return true;
  return (d_out_ * cocycle).is_zero();
}

Matrix DHomSpace::coordinates(const Matrix& cocycle) const {
  if (!is_cocycle(cocycle)) throw ModuleError("not a cocycle of the Hom complex");
  if (dim() == 0) return Matrix(0, 1);
  Matrix c = decomp_inv_ * cocycle;
  return c.rows_range(0, dim());
}

std::map<int, RepMap> DHomSpace::family(const Matrix& coords) const {
  return family_from_coords(layout_, representative(coords));
}

namespace {

struct SpaceCache {
  std::mutex mu;
  std::map<std::tuple<const void*, const void*, int>, std::weak_ptr<const DHomSpace>> entries;
};

SpaceCache& space_cache() {
  static SpaceCache c;
  return c;
}

}  // namespace

DHomPtr derived_hom(const Cx& x, const Cx& y, int n) {
  if (!x.cache || !y.cache) return std::make_shared<const DHomSpace>(x, y, n);
  auto key = std::make_tuple(static_cast<const void*>(x.cache.get()),
                             static_cast<const void*>(y.cache.get()), n);
  SpaceCache& c = space_cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.entries.find(key);
    if (it != c.entries.end()) {
      if (auto sp = it->second.lock()) return sp;
    }
  }
  auto sp = std::make_shared<const DHomSpace>(x, y, n);
  std::lock_guard<std::mutex> lock(c.mu);
  if (c.entries.size() > 4096) {
    for (auto it = c.entries.begin(); it != c.entries.end();)
      it = it->second.expired() ? c.entries.erase(it) : std::next(it);
  }
  c.entries[key] = sp;
  return sp;
}

std::size_t ext_dim(const Rep& m, const Rep& n, int degree) {
  return derived_hom(module_cx(m), module_cx(n), degree)->dim();
}

std::size_t hom_dim(const Cx& x, const Cx& y, int n) {
  if (x.empty() || y.empty()) return 0;
  const Cx& p = resolve(x).proj;
  if (p.empty() || n < y.lo - p.hi() || n > y.hi() - p.lo) return 0;
  return derived_hom(x, y, n)->dim();
}

DHomClass basis_class(const DHomPtr& space, std::size_t i) {
  Matrix c(space->dim(), 1);
  c(i, 0) = 1;
  return DHomClass{space, c};
}

DHomClass class_add(const DHomClass& a, const DHomClass& b) {
  if (a.space != b.space && a.space->dim() != b.space->dim())
    throw ModuleError("adding classes from different Hom spaces");
  return DHomClass{a.space, a.coords + b.coords};
}

DHomClass class_scale(const DHomClass& a, const Rat& c) {
  return DHomClass{a.space, a.coords.scaled(c)};
}

DHomClass class_of_chain_map(const CxMap& f, const DHomPtr& space) {
  const Resolution& r = space->resolution();
  std::map<int, RepMap> fam;
  for (const auto& [k, phi] : r.quasi.comp) fam.emplace(k, compose(f.at(k), phi));
  return DHomClass{space, space->coordinates(family_coords(space->layout(), fam))};
}

DHomClass class_of_chain_map(const CxMap& f) {
  return class_of_chain_map(f, derived_hom(f.src, f.dst, 0));
}

DHomClass identity_class(const Cx& x) {
  DHomPtr s = derived_hom(x, x, 0);
  return DHomClass{s, s->coordinates(family_coords(s->layout(), s->resolution().quasi.comp))};
}

namespace {

std::map<int, RepMap> lift_class_impl(const DHomClass& a, const Resolution& ry) {
  const DHomSpace& s = *a.space;
  const Cx& px = s.resolution().proj;
  int n = s.degree();
  HomLayout la = hom_layout(px, ry.proj, n);
  HomLayout la_next = hom_layout(px, ry.proj, n + 1);
  HomLayout lprev = hom_layout(px, s.target(), n - 1);
  const HomLayout& lt = s.layout();

  Matrix da = hom_differential(la, la_next);
  Matrix dprev = hom_differential(lprev, lt);
  Matrix post(lt.dim, la.dim);
  for (int k = px.lo; k <= px.hi(); ++k) {
    if (la.block_dim(k) == 0 || lt.block_dim(k) == 0) continue;
    post.set_block(lt.offset.at(k), la.offset.at(k),
                   postcompose_matrix(px.proj_at(k), ry.quasi.at(k + n)));
  }
  std::size_t rows = la_next.dim + lt.dim;
  Matrix sys(rows, la.dim + lprev.dim);
  if (la_next.dim > 0 && la.dim > 0) sys.set_block(0, 0, da);
  if (lt.dim > 0 && la.dim > 0) sys.set_block(la_next.dim, 0, post);
  if (lt.dim > 0 && lprev.dim > 0) sys.set_block(la_next.dim, la.dim, -dprev);
  Matrix rhs(rows, 1);
  if (lt.dim > 0) rhs.set_block(la_next.dim, 0, s.representative(a.coords));
  if (sys.cols() == 0) {
    if (!rhs.is_zero()) throw std::logic_error("lift to resolution failed");
    return family_from_coords(la, Matrix(la.dim, 1));
  }
  Solution sol = solve(sys, rhs);
  if (!sol.x) throw std::logic_error("lift to resolution failed");
  return family_from_coords(la, sol.x->rows_range(0, la.dim));
}

}  // namespace

std::map<int, RepMap> lift_to_resolution(const DHomClass& a) {
  return lift_class_impl(a, resolve(a.space->target()));
}

std::map<int, RepMap> lift_class(const DHomClass& a, const Resolution& q) {
  return lift_class_impl(a, q);
}

DHomClass compose(const DHomClass& b, const DHomClass& a, const DHomPtr& target) {
  if (!same_cx(a.space->target(), b.space->source()))
    throw ModuleError("compose: middle objects differ");
  int n = a.space->degree();
  auto lifted = lift_class_impl(a, b.space->resolution());
  auto beta = b.space->family(b.coords);
  std::map<int, RepMap> gamma;
  for (const auto& [k, ak] : lifted) {
    auto it = beta.find(k + n);
    if (it == beta.end()) continue;
    gamma.emplace(k, compose(it->second, ak));
  }
  return DHomClass{target, target->coordinates(family_coords(target->layout(), gamma))};
}

DHomClass compose(const DHomClass& b, const DHomClass& a) {
  DHomPtr t = derived_hom(a.space->source(), b.space->target(),
                          a.space->degree() + b.space->degree());
  return compose(b, a, t);
}

Matrix postcompose_matrix(const DHomClass& b, const DHomPtr& from, const DHomPtr& to) {
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < from->dim(); ++i)
    cols.push_back(compose(b, basis_class(from, i), to).coords);
  if (cols.empty()) return Matrix(to->dim(), 0);
  return Matrix::from_columns(to->dim(), cols);
}

Matrix precompose_matrix(const DHomClass& c, const DHomPtr& from, const DHomPtr& to) {
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < from->dim(); ++i)
    cols.push_back(compose(basis_class(from, i), c, to).coords);
  if (cols.empty()) return Matrix(to->dim(), 0);
  return Matrix::from_columns(to->dim(), cols);
}

}  // namespace heartglue
