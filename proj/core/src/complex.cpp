#include "heartglue/complex.hpp"

#include <algorithm>
#include <mutex>

namespace heartglue {

namespace detail {
struct CxCache {
  std::once_flag once;
  Resolution res;
};
}  // namespace detail

namespace {

Cx build(AlgebraPtr alg, int lo, std::vector<Rep> terms, std::vector<RepMap> d,
         std::vector<ProjSum> proj = {}) {
  Cx x;
  x.alg = std::move(alg);
  x.lo = terms.empty() ? 0 : lo;
  x.terms = std::move(terms);
  x.d = std::move(d);
  x.proj = std::move(proj);
  x.cache = std::make_shared<detail::CxCache>();
  return x;
}

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

// Map between direct sums from its component grid: comps[dst part][src part].
RepMap block_map(const DirectSum& src, const DirectSum& dst,
                 const std::vector<std::vector<RepMap>>& comps) {
  std::vector<RepMap> cols;
  for (std::size_t j = 0; j < src.inj.size(); ++j) {
    std::vector<RepMap> parts;
    for (std::size_t i = 0; i < dst.proj.size(); ++i) parts.push_back(comps[i][j]);
    cols.push_back(map_into_sum(dst, parts));
  }
  return map_from_sum(src, cols);
}

CxMap restrict_to(CxMap f) {
  for (auto it = f.comp.begin(); it != f.comp.end();) {
    if (it->second.src.is_zero() || it->second.dst.is_zero())
      it = f.comp.erase(it);
    else
      ++it;
  }
  return f;
}

}  // namespace

Rep Cx::term(int deg) const {
  if (deg < lo || deg > hi()) return zero_rep(alg);
  return terms[static_cast<std::size_t>(deg - lo)];
}

RepMap Cx::diff(int deg) const {
  if (deg < lo || deg >= hi()) return zero_map(term(deg), term(deg + 1));
  return d[static_cast<std::size_t>(deg - lo)];
}

const ProjSum& Cx::proj_at(int deg) const {
  if (!is_projective() || deg < lo || deg > hi())
    throw ModuleError("complex term is not a stored projective sum");
  return proj[static_cast<std::size_t>(deg - lo)];
}

ProjSum Cx::proj_term(int deg) const {
  if (deg < lo || deg > hi()) return make_proj_sum(alg, {});
  return proj_at(deg);
}

RepMap CxMap::at(int deg) const {
  auto it = comp.find(deg);
  if (it != comp.end()) return it->second;
  return zero_map(src.term(deg), dst.term(deg));
}

Cx make_cx(AlgebraPtr alg, int lo, std::vector<Rep> terms, std::vector<RepMap> d) {
  if (!terms.empty() && d.size() + 1 != terms.size())
    throw ModuleError("complex needs one differential between consecutive terms");
  Cx x = build(std::move(alg), lo, std::move(terms), std::move(d));
  validate(x);
  return x;
}

Cx make_proj_cx(AlgebraPtr alg, int lo, std::vector<ProjSum> terms, std::vector<RepMap> d) {
  std::vector<Rep> reps;
  for (const auto& p : terms) reps.push_back(p.rep);
  if (!reps.empty() && d.size() + 1 != reps.size())
    throw ModuleError("complex needs one differential between consecutive terms");
  Cx x = build(std::move(alg), lo, std::move(reps), std::move(d), std::move(terms));
  validate(x);
  return x;
}

Cx zero_cx(AlgebraPtr alg) { return build(std::move(alg), 0, {}, {}, {}); }

Cx module_cx(const Rep& m, int degree) {
  if (m.is_zero()) return zero_cx(m.alg);
  return build(m.alg, degree, {m}, {});
}

Cx proj_module_cx(const ProjSum& p, int degree) {
  if (p.rep.is_zero()) return zero_cx(p.alg);
  return build(p.alg, degree, {p.rep}, {}, {p});
}

void validate(const Cx& x) {
  for (std::size_t k = 0; k < x.d.size(); ++k) {
    const RepMap& f = x.d[k];
    if (!same_rep(f.src, x.terms[k]) || !same_rep(f.dst, x.terms[k + 1]))
      throw ModuleError("differential does not match the terms of the complex");
    if (!is_morphism(f)) throw ModuleError("differential is not a module map");
    if (k + 1 < x.d.size() && !is_zero(compose(x.d[k + 1], f)))
      throw ModuleError("d o d != 0 at degree " + std::to_string(x.lo + static_cast<int>(k)));
  }
}

Cx trimmed(const Cx& x) {
  int first = x.lo, last = x.hi();
  while (first <= last && x.term(first).is_zero()) ++first;
  while (last >= first && x.term(last).is_zero()) --last;
  if (first > last) return zero_cx(x.alg);
  if (first == x.lo && last == x.hi()) return x;
  std::vector<Rep> terms;
  std::vector<RepMap> d;
  std::vector<ProjSum> proj;
  for (int k = first; k <= last; ++k) {
    terms.push_back(x.term(k));
    if (k < last) d.push_back(x.diff(k));
    if (x.is_projective()) proj.push_back(x.proj_at(k));
  }
  return build(x.alg, first, std::move(terms), std::move(d), std::move(proj));
}

bool same_cx(const Cx& a, const Cx& b) {
  if (a.cache && a.cache == b.cache) return true;
  if (a.alg != b.alg) return false;
  Cx ta = trimmed(a), tb = trimmed(b);
  if (ta.lo != tb.lo || ta.terms.size() != tb.terms.size()) return false;
  for (std::size_t k = 0; k < ta.terms.size(); ++k)
    if (!same_rep(ta.terms[k], tb.terms[k])) return false;
  for (std::size_t k = 0; k < ta.d.size(); ++k)
    if (!equal(ta.d[k], tb.d[k])) return false;
  return true;
}

Cx shift(const Cx& x, int k) {
  std::vector<RepMap> d;
  for (const auto& f : x.d) d.push_back(sign(k) == 1 ? f : scale(f, Rat(-1)));
  return build(x.alg, x.lo - k, x.terms, std::move(d), x.proj);
}

CxMap shift(const CxMap& f, int k) {
  CxMap g{shift(f.src, k), shift(f.dst, k), {}};
  for (const auto& [deg, m] : f.comp) g.comp.emplace(deg - k, m);
  return g;
}

CxMap identity_cx_map(const Cx& x) {
  CxMap f{x, x, {}};
  for (int k = x.lo; k <= x.hi(); ++k) f.comp.emplace(k, identity_map(x.term(k)));
  return f;
}

CxMap zero_cx_map(const Cx& x, const Cx& y) { return CxMap{x, y, {}}; }

CxMap compose(const CxMap& g, const CxMap& f) {
  CxMap h{f.src, g.dst, {}};
  for (const auto& [deg, m] : f.comp) {
    auto it = g.comp.find(deg);
    if (it != g.comp.end()) h.comp.emplace(deg, compose(it->second, m));
  }
  return h;
}

CxMap add(const CxMap& f, const CxMap& g) {
  CxMap h{f.src, f.dst, f.comp};
  for (const auto& [deg, m] : g.comp) {
    auto it = h.comp.find(deg);
    if (it == h.comp.end())
      h.comp.emplace(deg, m);
    else
      it->second = add(it->second, m);
  }
  return h;
}

CxMap scale(const CxMap& f, const Rat& c) {
  CxMap h{f.src, f.dst, {}};
  for (const auto& [deg, m] : f.comp) h.comp.emplace(deg, scale(m, c));
  return h;
}

bool is_chain_map(const CxMap& f) {
  int lo = std::min(f.src.lo, f.dst.lo) - 1;
  int hi = std::max(f.src.hi(), f.dst.hi());
  for (int k = lo; k <= hi; ++k) {
    RepMap fk = f.at(k);
    if (!same_rep(fk.src, f.src.term(k)) || !same_rep(fk.dst, f.dst.term(k))) return false;
    if (!is_morphism(fk)) return false;
    RepMap lhs = compose(f.at(k + 1), f.src.diff(k));
    RepMap rhs = compose(f.dst.diff(k), fk);
    if (!equal(lhs, rhs)) return false;
  }
  return true;
}

Cone cone(const CxMap& f) {
  const Cx& x = f.src;
  const Cx& y = f.dst;
  AlgebraPtr alg = y.alg ? y.alg : x.alg;
  bool proj = x.is_projective() && y.is_projective();
  int lo = std::min(x.empty() ? y.lo : x.lo - 1, y.empty() ? x.lo - 1 : y.lo);
  int hi = std::max(x.empty() ? y.hi() : x.hi() - 1, y.empty() ? x.hi() - 1 : y.hi());
  if (x.empty() && y.empty()) {
    Cx z = zero_cx(alg);
    return Cone{z, CxMap{y, z, {}}, CxMap{z, shift(x, 1), {}}};
  }

  std::vector<DirectSum> sums;
  std::vector<Rep> terms;
  std::vector<ProjSum> projs;
  for (int k = lo; k <= hi + 1; ++k) {
    sums.push_back(direct_sum(x.term(k + 1), y.term(k)));
    if (k <= hi) {
      terms.push_back(sums.back().obj);
      if (proj) {
        projs.push_back(concat(x.proj_term(k + 1), y.proj_term(k)));
        if (!same_rep(projs.back().rep, terms.back()))
          throw std::logic_error("cone: projective sum layout mismatch");
      }
    }
  }
  std::vector<RepMap> d;
  for (int k = lo; k < hi; ++k) {
    const DirectSum& s = sums[static_cast<std::size_t>(k - lo)];
    const DirectSum& t = sums[static_cast<std::size_t>(k - lo + 1)];
    d.push_back(block_map(s, t,
                          {{scale(x.diff(k + 1), Rat(-1)), zero_map(y.term(k), x.term(k + 2))},
                           {f.at(k + 1), y.diff(k)}}));
  }
  Cx c = build(alg, lo, std::move(terms), std::move(d), std::move(projs));

  Cone out{c, CxMap{y, c, {}}, CxMap{c, shift(x, 1), {}}};
  for (int k = lo; k <= hi; ++k) {
    const DirectSum& s = sums[static_cast<std::size_t>(k - lo)];
    out.incl.comp.emplace(k, s.inj[1]);
    out.proj.comp.emplace(k, s.proj[0]);
  }
  out.incl = restrict_to(out.incl);
  out.proj = restrict_to(out.proj);
  return out;
}

Fiber fiber(const CxMap& f) {
  Cone c = cone(f);
  CxMap p = shift(c.proj, -1);
  p.dst = f.src;
  return Fiber{p.src, p};
}

CxSum direct_sum(const Cx& a, const Cx& b) {
  AlgebraPtr alg = a.alg ? a.alg : b.alg;
  if (a.empty() && b.empty()) {
    Cx z = zero_cx(alg);
    return CxSum{z, CxMap{a, z, {}}, CxMap{b, z, {}}, CxMap{z, a, {}}, CxMap{z, b, {}}};
  }
  int lo = std::min(a.empty() ? b.lo : a.lo, b.empty() ? a.lo : b.lo);
  int hi = std::max(a.empty() ? b.hi() : a.hi(), b.empty() ? a.hi() : b.hi());
  bool proj = a.is_projective() && b.is_projective();
  std::vector<DirectSum> sums;
  std::vector<Rep> terms;
  std::vector<ProjSum> projs;
  for (int k = lo; k <= hi; ++k) {
    sums.push_back(direct_sum(a.term(k), b.term(k)));
    terms.push_back(sums.back().obj);
    if (proj) projs.push_back(concat(a.proj_term(k), b.proj_term(k)));
  }
  std::vector<RepMap> d;
  for (int k = lo; k < hi; ++k)
    d.push_back(sum_of_maps(sums[static_cast<std::size_t>(k - lo)],
                            sums[static_cast<std::size_t>(k - lo + 1)], {a.diff(k), b.diff(k)}));
  Cx s = build(alg, lo, std::move(terms), std::move(d), std::move(projs));
  CxSum out{s, CxMap{a, s, {}}, CxMap{b, s, {}}, CxMap{s, a, {}}, CxMap{s, b, {}}};
  for (int k = lo; k <= hi; ++k) {
    const DirectSum& ds = sums[static_cast<std::size_t>(k - lo)];
    out.inj_a.comp.emplace(k, ds.inj[0]);
    out.inj_b.comp.emplace(k, ds.inj[1]);
    out.proj_a.comp.emplace(k, ds.proj[0]);
    out.proj_b.comp.emplace(k, ds.proj[1]);
  }
  out.inj_a = restrict_to(out.inj_a);
  out.inj_b = restrict_to(out.inj_b);
  out.proj_a = restrict_to(out.proj_a);
  out.proj_b = restrict_to(out.proj_b);
  return out;
}

CohomologyData cohomology_data(const Cx& x, int i) {
  KernelResult z = kernel(x.diff(i));
  RepMap b = lift_to_kernel(z, x.diff(i - 1));
  return CohomologyData{z, cokernel(b)};
}

Rep heart_cohomology(const Cx& x, int i) { return cohomology_data(x, i).classes.obj; }

RepMap cohomology_map(const CxMap& f, int i) {
  CohomologyData cx = cohomology_data(f.src, i);
  CohomologyData cy = cohomology_data(f.dst, i);
  RepMap u = compose(f.at(i), cx.cycles.incl);
  RepMap h = compose(cy.classes.proj, lift_to_kernel(cy.cycles, u));
  return factor_through_cokernel(cx.classes, h);
}

bool is_acyclic(const Cx& x) {
  for (int k = x.lo; k <= x.hi(); ++k)
    if (!heart_cohomology(x, k).is_zero()) return false;
  return true;
}

bool is_module_object(const Cx& x) {
  for (int k = x.lo; k <= x.hi(); ++k)
    if (k != 0 && !heart_cohomology(x, k).is_zero()) return false;
  return true;
}

StdTruncation truncate_std(const Cx& x, int level) {
  AlgebraPtr alg = x.alg;
  if (x.empty()) {
    Cx z = zero_cx(alg);
    return StdTruncation{z, z, CxMap{z, x, {}}, CxMap{x, z, {}}};
  }
  // Lower part: x^j for j < level, ker d^level at level.
  std::vector<Rep> at;
  std::vector<RepMap> ad;
  std::map<int, RepMap> a_comp;
  int alo = x.lo;
  if (level >= x.lo) {
    for (int k = x.lo; k < level && k <= x.hi(); ++k) {
      at.push_back(x.term(k));
      a_comp.emplace(k, identity_map(x.term(k)));
    }
    if (level <= x.hi()) {
      KernelResult z = kernel(x.diff(level));
      at.push_back(z.obj);
      a_comp.emplace(level, z.incl);
      for (int k = x.lo; k < level - 1; ++k) ad.push_back(x.diff(k));
      if (level > x.lo) ad.push_back(lift_to_kernel(z, x.diff(level - 1)));
    } else {
      for (int k = x.lo; k < x.hi(); ++k) ad.push_back(x.diff(k));
    }
  }
  Cx a = at.empty() ? zero_cx(alg) : build(alg, alo, at, ad);

  // Upper part: coker d^level at level + 1, x^j above.
  std::vector<Rep> bt;
  std::vector<RepMap> bd;
  std::map<int, RepMap> b_comp;
  int blo = std::max(level + 1, x.lo);
  if (level < x.hi()) {
    if (level + 1 >= x.lo) {
      CokernelResult q = cokernel(x.diff(level));
      bt.push_back(q.obj);
      b_comp.emplace(level + 1, q.proj);
      if (level + 1 < x.hi()) bd.push_back(factor_through_cokernel(q, x.diff(level + 1)));
      for (int k = level + 2; k <= x.hi(); ++k) {
        bt.push_back(x.term(k));
        b_comp.emplace(k, identity_map(x.term(k)));
        if (k < x.hi()) bd.push_back(x.diff(k));
      }
    } else {
      for (int k = x.lo; k <= x.hi(); ++k) {
        bt.push_back(x.term(k));
        b_comp.emplace(k, identity_map(x.term(k)));
        if (k < x.hi()) bd.push_back(x.diff(k));
      }
    }
  }
  Cx b = bt.empty() ? zero_cx(alg) : build(alg, blo, bt, bd);

  Cx ta = trimmed(a), tb = trimmed(b);
  StdTruncation out{ta, tb, restrict_to(CxMap{ta, x, a_comp}), restrict_to(CxMap{x, tb, b_comp})};
  return out;
}

Minimal minimize(const Cx& p) {
  if (!p.is_projective()) throw ModuleError("minimize needs a projective complex");
  AlgebraPtr alg = p.alg;
  std::vector<ProjSum> terms = p.proj;
  std::vector<RepMap> d = p.d;
  std::vector<RepMap> g, f;
  for (const auto& t : terms) {
    g.push_back(identity_map(t.rep));
    f.push_back(identity_map(t.rep));
  }
  for (;;) {
    bool found = false;
    std::size_t k = 0, r = 0, s = 0;
    Rat lambda;
    for (k = 0; k < d.size() && !found; ++k) {
      const ProjSum& src = terms[k];
      const ProjSum& dst = terms[k + 1];
      for (r = 0; r < src.size() && !found; ++r) {
        int top = src.tops[r];
        for (s = 0; s < dst.size(); ++s) {
          if (dst.tops[s] != top) continue;
          const Rat& c = d[k].at(top)(dst.generator_row(s), src.generator_row(r));
          if (!heartglue::is_zero(c)) {
            lambda = c;
            found = true;
            break;
          }
        }
      }
    }
    if (!found) break;
    --k;
    --r;
    auto others = [](std::size_t n, std::size_t skip) {
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
      return v;
    };
    SubSum b1 = sub_sum(terms[k], {r});
    SubSum c = sub_sum(terms[k], others(terms[k].size(), r));
    SubSum b2 = sub_sum(terms[k + 1], {s});
    SubSum dd = sub_sum(terms[k + 1], others(terms[k + 1].size(), s));
    RepMap phi_inv = scale(RepMap{b2.part.rep, b1.part.rep, identity_map(b1.part.rep).blocks},
                           Rat(1) / lambda);
    const RepMap& dk = d[k];
    RepMap delta = compose(b2.proj, compose(dk, c.incl));
    RepMap gamma = compose(dd.proj, compose(dk, b1.incl));
    RepMap eps = compose(dd.proj, compose(dk, c.incl));
    RepMap pd = compose(phi_inv, delta);
    RepMap gp = compose(gamma, phi_inv);

    d[k] = add(eps, scale(compose(gamma, pd), Rat(-1)));
    if (k > 0) d[k - 1] = compose(c.proj, d[k - 1]);
    if (k + 1 < d.size()) d[k + 1] = compose(d[k + 1], dd.incl);
    g[k] = compose(g[k], add(c.incl, scale(compose(b1.incl, pd), Rat(-1))));
    g[k + 1] = compose(g[k + 1], dd.incl);
    f[k] = compose(c.proj, f[k]);
    f[k + 1] = compose(add(dd.proj, scale(compose(gp, b2.proj), Rat(-1))), f[k + 1]);
    terms[k] = c.part;
    terms[k + 1] = dd.part;
  }
  std::vector<Rep> reps;
  for (const auto& t : terms) reps.push_back(t.rep);
  Cx full = build(alg, p.lo, std::move(reps), std::move(d), std::move(terms));
  Cx m = trimmed(full);
  Minimal out{m, CxMap{m, p, {}}, CxMap{p, m, {}}};
  for (std::size_t k = 0; k < g.size(); ++k) {
    int deg = p.lo + static_cast<int>(k);
    out.to_orig.comp.emplace(deg, g[k]);
    out.from_orig.comp.emplace(deg, f[k]);
  }
  out.to_orig = restrict_to(out.to_orig);
  out.from_orig = restrict_to(out.from_orig);
  return out;
}

namespace {

Resolution compute_resolution(const Cx& x) {
  AlgebraPtr alg = x.alg;
  if (x.is_projective()) {
    Cx p = build(alg, x.lo, x.terms, x.d, x.proj);
    Cx xd = x;
    xd.cache = nullptr;
    CxMap phi{p, xd, {}};
    for (int k = x.lo; k <= x.hi(); ++k) phi.comp.emplace(k, identity_map(x.term(k)));
    return Resolution{p, phi};
  }
  if (x.empty()) {
    Cx z = zero_cx(alg);
    return Resolution{z, CxMap{z, zero_cx(alg), {}}};
  }

  // Walk down from the top degree; p_terms are collected in descending degree.
  std::vector<ProjSum> p_terms;
  std::vector<RepMap> p_diff;  // p_diff[j]: P^k -> P^{k+1} for the j-th built k
  std::vector<RepMap> phi;
  ProjSum p_next = make_proj_sum(alg, {});
  RepMap phi_next = zero_map(p_next.rep, x.term(x.hi() + 1));
  RepMap dp_next = zero_map(p_next.rep, zero_rep(alg));
  int bound = x.lo - static_cast<int>(alg->vertices()) - 3;
  int k = x.hi();
  for (;; --k) {
    if (k < bound) throw std::logic_error("projective resolution did not terminate");
    DirectSum c = direct_sum(p_next.rep, x.term(k));
    DirectSum c1 = direct_sum(dp_next.dst, x.term(k + 1));
    RepMap delta = block_map(c, c1,
                             {{scale(dp_next, Rat(-1)), zero_map(x.term(k), dp_next.dst)},
                              {phi_next, x.diff(k)}});
    KernelResult z = kernel(delta);
    if (k < x.lo && z.obj.is_zero()) break;
    Cover q = projective_cover(z.obj);
    RepMap pi = compose(z.incl, q.map);
    RepMap dp = scale(compose(c.proj[0], pi), Rat(-1));
    RepMap ph = compose(c.proj[1], pi);
    p_terms.push_back(q.proj);
    p_diff.push_back(dp);
    phi.push_back(ph);
    p_next = q.proj;
    phi_next = ph;
    dp_next = dp;
  }
  int lo = k + 1;
  std::reverse(p_terms.begin(), p_terms.end());
  std::reverse(p_diff.begin(), p_diff.end());
  std::reverse(phi.begin(), phi.end());
  std::vector<Rep> reps;
  for (const auto& p : p_terms) reps.push_back(p.rep);
  // p_diff[0] maps P^lo to P^{lo+1}; the last one maps into degree hi + 1 (zero).
  p_diff.pop_back();
  Cx p = trimmed(build(alg, lo, std::move(reps), std::move(p_diff), std::move(p_terms)));
  Cx xd = x;
  xd.cache = nullptr;
  CxMap q{p, xd, {}};
  for (std::size_t j = 0; j < phi.size(); ++j) q.comp.emplace(lo + static_cast<int>(j), phi[j]);
  q = restrict_to(q);
  Minimal m = minimize(p);
  CxMap qm = compose(q, m.to_orig);
  qm.src = m.obj;
  return Resolution{m.obj, restrict_to(qm)};
}

}  // namespace

Resolution resolve(const Cx& x) {
  if (!x.cache) return compute_resolution(x);
  std::call_once(x.cache->once, [&] { x.cache->res = compute_resolution(x); });
  Resolution r = x.cache->res;
  r.quasi.dst = x;
  return r;
}

Cx proj_resolution(const Rep& m) { return resolve(module_cx(m)).proj; }

}  // namespace heartglue
