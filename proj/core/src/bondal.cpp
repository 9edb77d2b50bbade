#include "heartglue/bondal.hpp"

#include <algorithm>

namespace heartglue {

namespace {

std::vector<Rat> zero_vec(std::size_t n) { return std::vector<Rat>(n, Rat(0)); }

std::vector<Rat> unit_vec(std::size_t n, std::size_t k) {
  std::vector<Rat> v = zero_vec(n);
  v[k] = Rat(1);
  return v;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

DHomClass EndAlgebra::element(std::size_t x) const {
  const EndBasis& b = basis.at(x);
  Matrix c(hom[b.i][b.j]->dim(), 1);
  c(b.k, 0) = Rat(1);
  return element(b.i, b.j, c);
}

DHomClass EndAlgebra::element(std::size_t i, std::size_t j, const Matrix& coords) const {
  if (i == j) return DHomClass{hom[i][i], identity[i].scaled(coords(0, 0))};
  return DHomClass{hom[i][j], coords};
}

Matrix EndAlgebra::block_coords(std::size_t i, std::size_t j, const std::vector<Rat>& v) const {
  std::size_t d = hom[i][j]->dim();
  Matrix c(d, 1);
  for (std::size_t k = 0; k < d; ++k) c(k, 0) = v[offset[i][j] + k];
  return c;
}

std::vector<Rat> EndAlgebra::to_global(std::size_t i, std::size_t j, const Matrix& coords) const {
  std::vector<Rat> v = zero_vec(dim());
  if (i == j) {
    v[offset[i][i]] = coords(0, 0) / identity[i](0, 0);
    return v;
  }
  for (std::size_t k = 0; k < coords.rows(); ++k) v[offset[i][j] + k] = coords(k, 0);
  return v;
}

std::vector<Rat> EndAlgebra::product(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  std::size_t d = dim();
  std::vector<Rat> out = zero_vec(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (is_zero(x[a])) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (is_zero(y[b])) continue;
      Rat c = x[a] * y[b];
      const auto& m = mult[a * d + b];
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(m[k])) out[k] += c * m[k];
    }
  }
  return out;
}

EndAlgebra end_algebra(const ExcSequence& es) {
  if (!es.exceptional || !es.strong) {
    std::string msg = "sequence is not strong exceptional";
    if (es.violation || !es.strong) {
      msg += ": ";
      msg += es.violation ? es.violation->rule : std::string("strong");
    }
    throw BondalError(msg);
  }
  EndAlgebra ea;
  ea.objects = es.objects;
  std::size_t n = ea.size();
  ea.hom.assign(n, std::vector<DHomPtr>(n));
  ea.offset.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ea.hom[i][j] = derived_hom(ea.objects[i], ea.objects[j], 0);
      if (i > j && ea.hom[i][j]->dim() != 0)
        throw BondalError("Hom" + pair_name(i, j) + " is nonzero below the diagonal");
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (ea.hom[i][i]->dim() != 1)
      throw BondalError("End(E" + std::to_string(i + 1) + ") has dimension " +
                        std::to_string(ea.hom[i][i]->dim()));
    ea.identity.push_back(identity_class(ea.objects[i]).coords);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ea.offset[i][j] = ea.basis.size();
      for (std::size_t k = 0; k < ea.hom[i][j]->dim(); ++k) ea.basis.push_back(EndBasis{i, j, k});
    }
  std::size_t d = ea.dim();
  ea.mult.assign(d * d, zero_vec(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const EndBasis& bx = ea.basis[x];
      const EndBasis& by = ea.basis[y];
      if (by.j != bx.i) continue;
      DHomClass c = compose(ea.element(x), ea.element(y), ea.hom[by.i][bx.j]);
      ea.mult[x * d + y] = ea.to_global(by.i, bx.j, c.coords);
    }
  ea.associative = true;
  for (std::size_t x = 0; x < d && ea.associative; ++x)
    for (std::size_t y = 0; y < d && ea.associative; ++y)
      for (std::size_t z = 0; z < d && ea.associative; ++z) {
        std::vector<Rat> l = ea.product(ea.mult[x * d + y], unit_vec(d, z));
        std::vector<Rat> r = ea.product(unit_vec(d, x), ea.mult[y * d + z]);
        if (l != r) ea.associative = false;
      }
  return ea;
}

AlgebraIso check_algebra_map(const PathAlgebra& a, const EndAlgebra& ea, const Matrix& map) {
  AlgebraIso iso;
  iso.map = map;
  std::size_t n = a.dim();
  if (map.rows() != ea.dim() || map.cols() != n) {
    iso.failure = "dimension mismatch: " + std::to_string(n) + " vs " + std::to_string(ea.dim());
    return iso;
  }
  iso.bijective = rank(map) == n;
  if (!iso.bijective) iso.failure = "basis correspondence is not bijective";
  iso.unital = true;
  for (int v = 1; v <= a.vertices() && iso.unital; ++v) {
    std::size_t i = static_cast<std::size_t>(v - 1);
    std::vector<Rat> want = unit_vec(ea.dim(), ea.offset[i][i]);
    if (map.col(a.idempotent(v)).to_vector() != want) {
      iso.unital = false;
      if (iso.failure.empty()) iso.failure = "e" + std::to_string(v) + " does not map to an identity";
    }
  }
  iso.multiplicative = true;
  for (std::size_t x = 0; x < n && iso.multiplicative; ++x)
    for (std::size_t y = 0; y < n && iso.multiplicative; ++y) {
      std::vector<Rat> lhs = (map * Matrix::column(a.mult(x, y))).to_vector();
      std::vector<Rat> rhs = ea.product(map.col(x).to_vector(), map.col(y).to_vector());
      if (lhs != rhs) {
        iso.multiplicative = false;
        if (iso.failure.empty())
          iso.failure = "structure constants differ at " + a.name_of(x) + " * " + a.name_of(y);
      }
    }
  return iso;
}

QuiverPresentation quiver_presentation(const EndAlgebra& ea) {
  std::size_t n = ea.size();
  std::size_t d = ea.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (ea.hom[i][i]->dim() != 1)
      throw BondalError("radical identification failed: End(E" + std::to_string(i + 1) + ") is not K");
  QuiverPresentation pres;
  pres.quiver.vertices = static_cast<int>(n);
  std::vector<std::vector<Rat>> arrow_vec;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t dij = ea.hom[i][j]->dim();
      if (dij == 0) continue;
      std::vector<Matrix> sq;
      for (std::size_t m = i + 1; m < j; ++m)
        for (std::size_t y = 0; y < ea.hom[i][m]->dim(); ++y)
          for (std::size_t x = 0; x < ea.hom[m][j]->dim(); ++x) {
            std::vector<Rat> p = ea.mult[(ea.offset[m][j] + x) * d + ea.offset[i][m] + y];
            sq.push_back(ea.block_coords(i, j, p));
          }
      Matrix rad2 = sq.empty() ? Matrix(dij, 0) : hstack(sq, dij);
      Matrix comp = complement_columns(rad2, dij);
      for (std::size_t c = 0; c < comp.cols(); ++c) {
        std::string name = "a" + std::to_string(i + 1) + std::to_string(j + 1);
        if (comp.cols() > 1) name += "_" + std::to_string(c + 1);
        pres.quiver.arrows.push_back(Arrow{name, static_cast<int>(i + 1), static_cast<int>(j + 1)});
        pres.arrow_coords.push_back(comp.col(c));
        arrow_vec.push_back(ea.to_global(i, j, comp.col(c)));
      }
    }

  AlgebraPtr free_alg = build_algebra(pres.quiver, {});
  auto evaluate = [&](const Path& p, int source) {
    std::size_t s = static_cast<std::size_t>(source - 1);
    if (p.empty()) return unit_vec(d, ea.offset[s][s]);
    std::vector<Rat> v = arrow_vec[static_cast<std::size_t>(p[0])];
    for (std::size_t k = 1; k < p.size(); ++k) v = ea.product(arrow_vec[static_cast<std::size_t>(p[k])], v);
    return v;
  };

  // Relations degree by degree: pairs with closer endpoints first, keeping only
  // kernel vectors outside the ideal of the relations found so far.
  std::vector<std::pair<int, int>> pairs;
  for (int s = 1; s <= static_cast<int>(n); ++s)
    for (int t = s + 1; t <= static_cast<int>(n); ++t) pairs.emplace_back(s, t);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return a.second - a.first < b.second - b.first; });
  for (const auto& [s, t] : pairs) {
    std::vector<Path> paths = free_alg->free_paths(s, t);
    std::size_t i = static_cast<std::size_t>(s - 1), j = static_cast<std::size_t>(t - 1);
    std::size_t dij = ea.hom[i][j]->dim();
    std::vector<Matrix> cols;
    for (const auto& p : paths) cols.push_back(ea.block_coords(i, j, evaluate(p, s)));
    Matrix m = cols.empty() ? Matrix(dij, 0) : hstack(cols, dij);
    if (rank(m) != dij)
      throw BondalError("arrows do not generate Hom" + pair_name(i, j));
    if (paths.empty()) continue;
    std::map<Path, std::size_t> pos;
    for (std::size_t k = 0; k < paths.size(); ++k) pos[paths[k]] = k;
    std::vector<Matrix> ideal;
    for (const auto& rel : pres.relations) {
      int rs = pres.quiver.arrows[static_cast<std::size_t>(rel.front().path.front())].source;
      int rt = pres.quiver.arrows[static_cast<std::size_t>(rel.front().path.back())].target;
      if (rs < s || rt > t || (rs == s && rt == t)) continue;
      for (const auto& u : free_alg->free_paths(s, rs))
        for (const auto& v : free_alg->free_paths(rt, t)) {
          Matrix g(paths.size(), 1);
          for (const auto& term : rel) {
            Path w = u;
            w.insert(w.end(), term.path.begin(), term.path.end());
            w.insert(w.end(), v.begin(), v.end());
            g(pos.at(w), 0) += term.coef;
          }
          ideal.push_back(g);
        }
    }
    Matrix ker = kernel_basis(m);
    std::size_t have = ideal.empty() ? 0 : rank(hstack(ideal, paths.size()));
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      ideal.push_back(ker.col(c));
      std::size_t r = rank(hstack(ideal, paths.size()));
      if (r == have) {
        ideal.pop_back();
        continue;
      }
      have = r;
      Relation rel;
      for (std::size_t k = paths.size(); k-- > 0;)
        if (!is_zero(ker(k, c))) rel.push_back(Term{ker(k, c), paths[k]});
      pres.relations.push_back(rel);
    }
  }

  pres.algebra = build_algebra(pres.quiver, pres.relations);
  const PathAlgebra& alg = *pres.algebra;
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < alg.dim(); ++k)
    cols.push_back(Matrix::column(evaluate(alg.basis(k).arrows, alg.basis(k).source)));
  pres.certificate = check_algebra_map(alg, ea, cols.empty() ? Matrix(d, 0) : hstack(cols, d));
  if (!pres.certificate.ok())
    throw BondalError("presentation is not isomorphic: " + pres.certificate.failure);
  return pres;
}

AlgebraIso regular_iso(const EndAlgebra& ea, const AlgebraPtr& a) {
  if (static_cast<int>(ea.size()) != a->vertices())
    throw BondalError("sequence length differs from the vertex count");
  for (int v = 1; v <= a->vertices(); ++v)
    if (!same_cx(ea.objects[static_cast<std::size_t>(v - 1)], module_cx(projective(a, v))))
      throw BondalError("object " + std::to_string(v) + " is not the projective P" + std::to_string(v));
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    const BasisPath& b = a->basis(k);
    std::size_t i = static_cast<std::size_t>(b.source - 1), j = static_cast<std::size_t>(b.target - 1);
    const Cx& src = ea.objects[i];
    const Cx& dst = ea.objects[j];
    Rep pt = dst.term(0);
    Matrix coords(static_cast<std::size_t>(pt.dim(b.source)), 1);
    coords(a->position_in_block(k), 0) = Rat(1);
    RepMap f = map_from_coords(make_proj_sum(a, {b.source}), pt, coords);
    CxMap g{src, dst, {{0, RepMap{src.term(0), pt, f.blocks}}}};
    DHomClass c = class_of_chain_map(g, ea.hom[i][j]);
    cols.push_back(Matrix::column(ea.to_global(i, j, c.coords)));
  }
  return check_algebra_map(*a, ea, hstack(cols, ea.dim()));
}

bool same_shape(const Quiver& a, const Quiver& b) {
  if (a.vertices != b.vertices) return false;
  std::map<std::pair<int, int>, int> count;
  for (const auto& ar : a.arrows) ++count[{ar.source, ar.target}];
  for (const auto& ar : b.arrows) --count[{ar.source, ar.target}];
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0; });
}

BondalFunctor::BondalFunctor(const ExcSequence& es, Window w)
    : ea_(end_algebra(es)), pres_(quiver_presentation(ea_)), window_(w) {}

void BondalFunctor::check_scope(const Cx& x) const {
  for (std::size_t i = 0; i < ea_.size(); ++i)
    for (int n = window_.lo; n <= window_.hi; ++n) {
      if (n == 0) continue;
      std::size_t dim = hom_dim(ea_.objects[i], x, n);
      if (dim != 0)
        throw BondalError("Hom(E" + std::to_string(i + 1) + ", X[" + std::to_string(n) +
                          "]) has dimension " + std::to_string(dim) + "; object outside the functor's scope");
    }
}

Rep BondalFunctor::apply(const Cx& x) const {
  check_scope(x);
  std::size_t n = ea_.size();
  std::vector<DHomPtr> h;
  std::vector<int> dims;
  for (std::size_t i = 0; i < n; ++i) {
    h.push_back(derived_hom(ea_.objects[i], x, 0));
    dims.push_back(static_cast<int>(h.back()->dim()));
  }
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < pres_.quiver.arrows.size(); ++a) {
    const Arrow& ar = pres_.quiver.arrows[a];
    std::size_t s = static_cast<std::size_t>(ar.source - 1), t = static_cast<std::size_t>(ar.target - 1);
    DHomClass alpha = ea_.element(s, t, pres_.arrow_coords[a]);
    act.push_back(precompose_matrix(alpha, h[t], h[s]));
  }
  return make_rep(pres_.algebra, std::move(dims), std::move(act));
}

RepMap BondalFunctor::apply(const DHomClass& f) const {
  if (f.space->degree() != 0) throw BondalError("functor applies to degree-0 morphisms");
  const Cx& x = f.space->source();
  const Cx& y = f.space->target();
  Rep fx = apply(x), fy = apply(y);
  RepMap out{fx, fy, {}};
  for (std::size_t i = 0; i < ea_.size(); ++i)
    out.blocks.push_back(
        postcompose_matrix(f, derived_hom(ea_.objects[i], x, 0), derived_hom(ea_.objects[i], y, 0)));
  return out;
}

RepMap BondalFunctor::projective_certificate(std::size_t i) const {
  Rep phi = apply(ea_.objects.at(i));
  int v = static_cast<int>(i + 1);
  Rep p = projective(pres_.algebra, v);
  RepMap f = map_from_coords(make_proj_sum(pres_.algebra, {v}), phi, ea_.identity[i]);
  return RepMap{p, phi, f.blocks};
}

Rep module_functor(const ExcSequence& es, const Cx& x) {
  const Cx& e0 = es.objects.at(0);
  return BondalFunctor(es, default_window(*e0.alg, es.objects.size())).apply(x);
}

bool FaithfulFullReport::ok() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.ok(); });
}

FaithfulFullReport faithful_full_check(const BondalFunctor& phi,
                                       const std::vector<std::pair<Cx, Cx>>& sample) {
  FaithfulFullReport rep;
  for (std::size_t k = 0; k < sample.size(); ++k) {
    PairCheck pc;
    pc.index = k;
    try {
      const auto& [x, y] = sample[k];
      DHomPtr h = derived_hom(x, y, 0);
      Rep fx = phi.apply(x), fy = phi.apply(y);
      pc.hom_dim = h->dim();
      pc.image_hom_dim = hom_space(fx, fy).size();
      std::vector<Matrix> cols;
      bool morphisms = true;
      for (std::size_t b = 0; b < h->dim(); ++b) {
        RepMap g = phi.apply(basis_class(h, b));
        morphisms = morphisms && is_morphism(g);
        cols.push_back(flatten(g));
      }
      std::size_t r = cols.empty() ? 0 : rank(hstack(cols, cols.front().rows()));
      pc.bijective = morphisms && r == pc.hom_dim && r == pc.image_hom_dim;
    } catch (const BondalError& e) {
      pc.error = e.what();
    }
    rep.pairs.push_back(pc);
  }
  return rep;
}

}  // namespace heartglue
