#include "heartglue/yoneda.hpp"

namespace heartglue {

namespace {

int epsilon(int n) { return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1; }

void require_module_cx(const Cx& x, const char* what) {
  if (!x.empty() && (x.lo != 0 || x.terms.size() != 1))
    throw ModuleError(std::string(what) + " must be a module in degree 0");
}

}  // namespace

YExt make_yext(std::vector<RepMap> xi) {
  if (xi.size() < 2) throw ModuleError("an n-extension needs n >= 1");
  YExt x;
  x.n = static_cast<int>(xi.size()) - 1;
  x.left = xi.front().src;
  x.right = xi.back().dst;
  for (std::size_t k = 0; k + 1 < xi.size(); ++k) x.mid.push_back(xi[k].dst);
  x.xi = std::move(xi);
  validate(x);
  return x;
}

void validate(const YExt& x) {
  if (x.n < 1 || x.mid.size() != static_cast<std::size_t>(x.n) ||
      x.xi.size() != static_cast<std::size_t>(x.n + 1))
    throw ModuleError("n-extension has inconsistent length");
  for (int k = 0; k <= x.n; ++k) {
    const Rep& src = k == 0 ? x.left : x.mid[static_cast<std::size_t>(k - 1)];
    const Rep& dst = k == x.n ? x.right : x.mid[static_cast<std::size_t>(k)];
    const RepMap& f = x.xi[static_cast<std::size_t>(k)];
    if (!same_rep(f.src, src) || !same_rep(f.dst, dst))
      throw ModuleError("n-extension map " + std::to_string(k) + " has the wrong endpoints");
    if (!is_morphism(f)) throw ModuleError("n-extension map " + std::to_string(k) + " is not a module map");
  }
  int verts = static_cast<int>(x.left.dims.size());
  for (int v = 1; v <= verts; ++v) {
    // Exact at B, at every X_k and at A.
    if (rank(x.xi[0].at(v)) != static_cast<std::size_t>(x.left.dim(v)))
      throw ModuleError("n-extension is not exact at the left end");
    if (rank(x.xi.back().at(v)) != static_cast<std::size_t>(x.right.dim(v)))
      throw ModuleError("n-extension is not exact at the right end");
    for (int k = 1; k <= x.n; ++k) {
      const RepMap& in = x.xi[static_cast<std::size_t>(k - 1)];
      const RepMap& out = x.xi[static_cast<std::size_t>(k)];
      if (!(out.at(v) * in.at(v)).is_zero())
        throw ModuleError("n-extension composite is nonzero at term " + std::to_string(k));
      std::size_t d = static_cast<std::size_t>(x.mid[static_cast<std::size_t>(k - 1)].dim(v));
      if (d - rank(out.at(v)) != rank(in.at(v)))
        throw ModuleError("n-extension is not exact at term " + std::to_string(k));
    }
  }
}

YExt yext_from_ses(const Ses& s) {
  check_exact(s);
  return make_yext({s.i, s.p});
}

Ses ses_of(const YExt& x) {
  if (x.n != 1) throw ModuleError("ses_of needs a 1-extension");
  return Ses{x.xi[0], x.xi[1]};
}

YExt split_yext(const Rep& a, const Rep& b, int n) {
  if (n < 1) throw ModuleError("split extension needs n >= 1");
  if (n == 1) {
    Ses s = split_ses(b, a);
    return make_yext({s.i, s.p});
  }
  AlgebraPtr alg = a.alg;
  std::vector<Rep> mid(static_cast<std::size_t>(n), zero_rep(alg));
  mid.front() = b;
  mid.back() = a;
  std::vector<RepMap> xi;
  xi.push_back(identity_map(b));
  for (int k = 1; k < n; ++k)
    xi.push_back(zero_map(mid[static_cast<std::size_t>(k - 1)], mid[static_cast<std::size_t>(k)]));
  xi.push_back(identity_map(a));
  return make_yext(std::move(xi));
}

YExt pushout_action(const RepMap& g, const YExt& x) {
  if (!same_rep(g.src, x.left)) throw ModuleError("pushout: map source differs from the left end");
  const Rep& x1 = x.mid.front();
  DirectSum s = direct_sum(x1, g.dst);
  CokernelResult q = cokernel(map_into_sum(s, {x.xi[0], scale(g, Rat(-1))}));
  RepMap xi0 = compose(q.proj, s.inj[1]);
  const RepMap& next = x.xi[1];
  RepMap xi1 = factor_through_cokernel(q, map_from_sum(s, {next, zero_map(g.dst, next.dst)}));
  std::vector<RepMap> xi{xi0, xi1};
  for (std::size_t k = 2; k < x.xi.size(); ++k) xi.push_back(x.xi[k]);
  return make_yext(std::move(xi));
}

YExt pullback_action(const YExt& x, const RepMap& h) {
  if (!same_rep(h.dst, x.right)) throw ModuleError("pullback: map target differs from the right end");
  const Rep& xn = x.mid.back();
  DirectSum s = direct_sum(xn, h.src);
  KernelResult k = kernel(map_from_sum(s, {x.xi.back(), scale(h, Rat(-1))}));
  RepMap last = compose(s.proj[1], k.incl);
  const RepMap& prev = x.xi[x.xi.size() - 2];
  RepMap before = lift_to_kernel(k, map_into_sum(s, {prev, zero_map(prev.src, h.src)}));
  std::vector<RepMap> xi(x.xi.begin(), x.xi.end() - 2);
  xi.push_back(before);
  xi.push_back(last);
  return make_yext(std::move(xi));
}

YExt yoneda_product(const YExt& x, const YExt& y) {
  if (!same_rep(y.right, x.left)) throw ModuleError("yoneda product: splice objects differ");
  std::vector<RepMap> xi(y.xi.begin(), y.xi.end() - 1);
  xi.push_back(compose(x.xi[0], y.xi.back()));
  xi.insert(xi.end(), x.xi.begin() + 1, x.xi.end());
  return make_yext(std::move(xi));
}

YExt baer_sum(const YExt& x, const YExt& y) {
  if (x.n != y.n) throw ModuleError("baer sum: lengths differ");
  if (!same_rep(x.left, y.left) || !same_rep(x.right, y.right))
    throw ModuleError("baer sum: endpoints differ");
  std::vector<DirectSum> sums;
  sums.push_back(direct_sum(x.left, y.left));
  for (std::size_t k = 0; k < x.mid.size(); ++k) sums.push_back(direct_sum(x.mid[k], y.mid[k]));
  sums.push_back(direct_sum(x.right, y.right));
  std::vector<RepMap> xi;
  for (std::size_t k = 0; k < x.xi.size(); ++k)
    xi.push_back(sum_of_maps(sums[k], sums[k + 1], {x.xi[k], y.xi[k]}));
  YExt s = make_yext(std::move(xi));
  RepMap codiag = map_from_sum(sums.front(), {identity_map(x.left), identity_map(x.left)});
  RepMap diag = map_into_sum(sums.back(), {identity_map(x.right), identity_map(x.right)});
  return pullback_action(pushout_action(codiag, s), diag);
}

YExt scalar_multiple(const YExt& x, const Rat& c) {
  return pullback_action(x, scale(identity_map(x.right), c));
}

DHomClass f_map(const YExt& x, const DHomPtr& space) {
  validate(x);
  const Cx& p = space->resolution().proj;
  RepMap phi = space->resolution().quasi.at(0);
  int n = x.n;
  RepMap cur = lift_through(p.proj_term(0), phi, x.xi.back());
  for (int j = 1; j <= n; ++j) {
    RepMap g = compose(cur, p.diff(-j));
    cur = lift_through(p.proj_term(-j), g, x.xi[static_cast<std::size_t>(n - j)]);
  }
  std::map<int, RepMap> fam{{-n, cur}};
  Matrix coords = space->coordinates(family_coords(space->layout(), fam));
  return DHomClass{space, coords.scaled(Rat(epsilon(n)))};
}

DHomClass f_map(const YExt& x) {
  return f_map(x, derived_hom(module_cx(x.right), module_cx(x.left), x.n));
}

YExt splice_from_class(const DHomClass& c) {
  const DHomSpace& s = *c.space;
  int n = s.degree();
  if (n < 1) throw ModuleError("splice needs a class of degree >= 1");
  require_module_cx(s.source(), "splice source");
  require_module_cx(s.target(), "splice target");
  AlgebraPtr alg = s.resolution().proj.alg;
  Rep a = s.source().empty() ? zero_rep(alg) : s.source().term(0);
  Rep b = s.target().empty() ? zero_rep(alg) : s.target().term(0);
  const Cx& p = s.resolution().proj;

  auto fam = s.family(c.coords.scaled(Rat(epsilon(n))));
  auto it = fam.find(-n);
  RepMap z = it != fam.end() ? it->second : zero_map(p.term(-n), b);

  CokernelResult omega = cokernel(p.diff(-n - 1));
  RepMap g = factor_through_cokernel(omega, z);
  std::vector<RepMap> xi{factor_through_cokernel(omega, p.diff(-n))};
  for (int k = 1; k < n; ++k) xi.push_back(p.diff(-n + k));
  RepMap phi = s.resolution().quasi.at(0);
  xi.push_back(RepMap{p.term(0), a, phi.blocks});
  return pushout_action(g, make_yext(std::move(xi)));
}

YClass make_yclass(const YExt& x) { return YClass{x, f_map(x)}; }

bool same_class(const YClass& a, const YClass& b) {
  return a.canonical.coords == b.canonical.coords;
}

namespace {

// Coordinates of the composites A -> G[1] -> B[n] over basis pairs.
Matrix factor_columns(const DHomPtr& space, const std::vector<Cx>& gens) {
  int n = space->degree();
  std::vector<Matrix> cols;
  for (const Cx& g : gens) {
    DHomPtr h1 = derived_hom(space->source(), g, 1);
    DHomPtr h2 = derived_hom(g, space->target(), n - 1);
    for (std::size_t i = 0; i < h1->dim(); ++i)
      for (std::size_t j = 0; j < h2->dim(); ++j)
        cols.push_back(compose(basis_class(h2, j), basis_class(h1, i), space).coords);
  }
  if (cols.empty()) return Matrix(space->dim(), 0);
  return Matrix::from_columns(space->dim(), cols);
}

}  // namespace

std::size_t factor_span_dim(const DHomPtr& space, const std::vector<Cx>& gens) {
  Matrix cols = factor_columns(space, gens);
  if (cols.cols() == 0 || space->dim() == 0) return 0;
  return rank(cols);
}

bool factors_through(const DHomClass& c, const std::vector<Cx>& gens) {
  if (c.is_zero()) return true;
  Matrix cols = factor_columns(c.space, gens);
  if (cols.cols() == 0) return false;
  return span_membership(c.coords, cols);
}

}  // namespace heartglue
