#include "heartglue/glue.hpp"

#include "heartglue/triangles.hpp"

#include <algorithm>
#include <functional>

namespace heartglue {

namespace {

AlgebraPtr alg_of(const Cx& x) { return x.alg; }

// Minimal projective model with its quasi-isomorphism to x.
Resolution proj_model(const Cx& x) {
  if (x.is_projective()) {
    Minimal m = minimize(x);
    return Resolution{m.obj, m.to_orig};
  }
  return resolve(x);
}

struct Eval {
  Cx sum;
  CxMap map;
  std::map<int, std::size_t> mult;
};

// Evaluation map from the sum of E[m] (x) Hom(E[m], y) over shifts m kept by `keep`.
Eval evaluation(const Cx& e, const Cx& y, const std::function<bool(int)>& keep) {
  AlgebraPtr alg = alg_of(y) ? alg_of(y) : alg_of(e);
  Cx zero = zero_cx(alg);
  Eval out{zero, CxMap{zero, y, {}}, {}};
  if (y.empty() || e.empty()) return out;
  Cx pe = resolve(e).proj;
  if (pe.empty()) return out;
  for (int n = y.lo - pe.hi(); n <= y.hi() - pe.lo; ++n) {
    int m = -n;
    if (!keep(m)) continue;
    DHomPtr s = derived_hom(e, y, n);
    if (s->dim() == 0) continue;
    out.mult[m] = s->dim();
    const Cx& p = s->resolution().proj;
    Cx pm = shift(p, m);
    for (std::size_t i = 0; i < s->dim(); ++i) {
      CxMap f{pm, y, {}};
      for (const auto& [k, fk] : s->family(basis_class(s, i).coords)) f.comp.emplace(k + n, fk);
      if (out.sum.empty()) {
        out.sum = pm;
        out.map = f;
        continue;
      }
      CxSum ds = direct_sum(out.sum, pm);
      CxMap total = add(compose(out.map, ds.proj_a), compose(f, ds.proj_b));
      total.src = ds.obj;
      total.dst = y;
      out.sum = ds.obj;
      out.map = total;
    }
  }
  return out;
}

struct Projection {
  Cx r;
  CxMap r_to_p;
  Cx l;
  CxMap p_to_l;
};

// Triangle R -> p -> L with R in <gens> and L in its left orthogonal; p projective.
Projection project_right(const Cx& p, const std::vector<Cx>& gens) {
  Cx y = p;
  CxMap pi = identity_cx_map(p);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    Eval ev = evaluation(*it, y, [](int) { return true; });
    if (ev.sum.empty()) continue;
    Cone c = cone(ev.map);
    Minimal m = minimize(c.obj);
    pi = compose(m.from_orig, compose(c.incl, pi));
    y = m.obj;
    pi.dst = y;
  }
  Fiber f = fiber(pi);
  Minimal m = minimize(f.obj);
  CxMap rp = compose(f.proj, m.to_orig);
  rp.src = m.obj;
  rp.dst = p;
  return Projection{m.obj, rp, y, pi};
}

struct PTrunc {
  Cx a;
  CxMap a_to_x;
  Cx b;
  CxMap x_to_b;
};

PTrunc finish(const Cx& p, const Cx& a, const CxMap& a_map) {
  Minimal ma = minimize(a);
  CxMap am = compose(a_map, ma.to_orig);
  am.src = ma.obj;
  am.dst = p;
  Cone c = cone(am);
  Minimal mb = minimize(c.obj);
  CxMap xb = compose(mb.from_orig, c.incl);
  xb.src = p;
  xb.dst = mb.obj;
  return PTrunc{ma.obj, am, mb.obj, xb};
}

std::vector<Cx> leaf_gens(const AisleSpec& a) {
  std::vector<Cx> out;
  for (const auto& l : leaves(a)) out.push_back(l.gen);
  return out;
}

// q: f -> b with q o rho homotopic to can, for projective f and r.
CxMap solve_extension(const Cx& f, const CxMap& rho, const CxMap& can) {
  const Cx& r = rho.src;
  const Cx& b = can.dst;
  CxMap q{f, b, {}};
  if (f.empty() || b.empty()) return q;
  HomLayout lq = hom_layout(f, b, 0);
  HomLayout lqn = hom_layout(f, b, 1);
  HomLayout lh = hom_layout(r, b, -1);
  HomLayout lt = hom_layout(r, b, 0);
  Matrix sys(lqn.dim + lt.dim, lq.dim + lh.dim);
  if (lqn.dim > 0 && lq.dim > 0) sys.set_block(0, 0, hom_differential(lq, lqn));
  for (int k = r.lo; k <= r.hi(); ++k) {
    if (lt.block_dim(k) == 0 || lq.block_dim(k) == 0) continue;
    const ProjSum& rk = r.proj_at(k);
    Matrix pre = precompose_matrix(rk, f.proj_at(k), coords_of(rk, rho.at(k)), b.term(k));
    sys.set_block(lqn.dim + lt.offset.at(k), lq.offset.at(k), pre);
  }
  if (lt.dim > 0 && lh.dim > 0)
    sys.set_block(lqn.dim, lq.dim, -hom_differential(lh, lt));
  Matrix rhs(sys.rows(), 1);
  if (lt.dim > 0) rhs.set_block(lqn.dim, 0, family_coords(lt, can.comp));
  if (sys.cols() == 0) {
    if (!rhs.is_zero()) throw GlueError("truncation map does not extend; aisles are not compatible");
    return q;
  }
  Solution sol = solve(sys, rhs);
  if (!sol.x) throw GlueError("truncation map does not extend; aisles are not compatible");
  for (auto& [k, m] : family_from_coords(lq, sol.x->rows_range(0, lq.dim))) q.comp.emplace(k, m);
  return q;
}

PTrunc trunc_proj(const Cx& p, const AisleSpec& a) {
  switch (a.kind) {
    case AisleSpec::Kind::Standard:
      throw GlueError("standard aisles cannot be glued components");
    case AisleSpec::Kind::AddGenerated: {
      int s = a.shift;
      Eval ev = evaluation(a.gen, p, [s](int m) { return m >= s; });
      return finish(p, ev.sum, ev.map);
    }
    case AisleSpec::Kind::Glued:
      break;
  }
  const AisleSpec& left = *a.left;
  const AisleSpec& right = *a.right;
  std::vector<Cx> rgens = leaf_gens(right);

  Projection pr = project_right(p, rgens);
  Cx cm1 = shift(pr.l, -1);
  PTrunc t1 = trunc_proj(cm1, left);
  CxMap b = shift(t1.x_to_b, 1);
  b.src = pr.l;
  CxMap h = compose(b, pr.p_to_l);

  Fiber fb = fiber(h);
  Minimal mf = minimize(fb.obj);
  CxMap j = compose(fb.proj, mf.to_orig);
  j.src = mf.obj;
  j.dst = p;
  const Cx& f = mf.obj;

  Projection rf = project_right(f, rgens);
  PTrunc t2 = trunc_proj(rf.r, right);
  CxMap q = solve_extension(f, rf.r_to_p, t2.x_to_b);

  Fiber fa = fiber(q);
  CxMap a_map = compose(j, fa.proj);
  a_map.src = fa.obj;
  return finish(p, fa.obj, a_map);
}

void require_gluable(const AisleSpec& a) {
  if (a.kind == AisleSpec::Kind::Standard) throw GlueError("standard aisles cannot be glued components");
}

}  // namespace

Window default_window(const PathAlgebra& alg, std::size_t seq_len) {
  return symmetric_window(alg.vertices() + static_cast<int>(seq_len) + 2);
}

Window symmetric_window(int w) { return Window{-w, w}; }

std::size_t HomTable::at(std::size_t i, std::size_t j, int n) const {
  if (n < window.lo || n > window.hi) return 0;
  std::size_t width = static_cast<std::size_t>(window.hi - window.lo + 1);
  return dims[(i * size + j) * width + static_cast<std::size_t>(n - window.lo)];
}

HomTable hom_table(const std::vector<Cx>& objs, Window w) {
  HomTable t{w, objs.size(), {}};
  std::size_t width = static_cast<std::size_t>(w.hi - w.lo + 1);
  t.dims.assign(objs.size() * objs.size() * width, 0);
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (int n = w.lo; n <= w.hi; ++n)
        t.dims[(i * objs.size() + j) * width + static_cast<std::size_t>(n - w.lo)] =
            hom_dim(objs[i], objs[j], n);
  return t;
}

ExcObjectReport check_exceptional(const Cx& e, Window w) {
  ExcObjectReport r{w, {}, std::nullopt};
  for (int n = w.lo; n <= w.hi; ++n) {
    std::size_t d = hom_dim(e, e, n);
    if (d != 0) r.self_homs[n] = d;
    std::size_t want = n == 0 ? 1 : 0;
    if (d != want && !r.violation) r.violation = Violation{0, 0, n, d, "exceptional"};
  }
  return r;
}

ExcSequence check_sequence(const std::vector<Cx>& es, bool strong, Window w) {
  if (es.empty()) throw GlueError("empty sequence");
  ExcSequence s;
  s.objects = es;
  s.window = w;
  s.strong_requested = strong;
  s.table = hom_table(es, w);
  std::optional<Violation> exc, strong_v;
  for (std::size_t i = 0; i < es.size() && !exc; ++i)
    for (int n = w.lo; n <= w.hi && !exc; ++n) {
      std::size_t d = s.table.at(i, i, n);
      if (d != (n == 0 ? 1u : 0u)) exc = Violation{i, i, n, d, "exceptional"};
    }
  for (std::size_t i = 0; i < es.size() && !exc; ++i)
    for (std::size_t j = 0; j < i && !exc; ++j)
      for (int n = w.lo; n <= w.hi && !exc; ++n) {
        std::size_t d = s.table.at(i, j, n);
        if (d != 0) exc = Violation{i, j, n, d, "order"};
      }
  for (std::size_t i = 0; i < es.size() && !strong_v; ++i)
    for (std::size_t j = i + 1; j < es.size() && !strong_v; ++j)
      for (int n = w.lo; n <= w.hi && !strong_v; ++n) {
        std::size_t d = n == 0 ? 0 : s.table.at(i, j, n);
        if (d != 0) strong_v = Violation{i, j, n, d, "strong"};
      }
  s.exceptional = !exc;
  s.strong = s.exceptional && !strong_v;
  if (exc)
    s.violation = exc;
  else if (strong && strong_v)
    s.violation = strong_v;
  return s;
}

AisleSpec standard_aisle(AlgebraPtr alg, int cut) {
  AisleSpec a;
  a.kind = AisleSpec::Kind::Standard;
  a.alg = std::move(alg);
  a.cut = cut;
  return a;
}

AisleSpec point_aisle(const Cx& e, int shift) {
  AisleSpec a;
  a.kind = AisleSpec::Kind::AddGenerated;
  a.alg = e.alg;
  a.gen = e;
  a.shift = shift;
  return a;
}

AisleSpec glued_aisle(const AisleSpec& left, const AisleSpec& right) {
  require_gluable(left);
  require_gluable(right);
  AisleSpec a;
  a.kind = AisleSpec::Kind::Glued;
  a.alg = right.alg ? right.alg : left.alg;
  a.left = std::make_shared<const AisleSpec>(left);
  a.right = std::make_shared<const AisleSpec>(right);
  return a;
}

AisleSpec iterated_gluing(const std::vector<Cx>& es, const std::vector<int>& shifts) {
  if (es.empty()) throw GlueError("empty sequence");
  if (!shifts.empty() && shifts.size() != es.size()) throw GlueError("one shift per generator expected");
  auto sh = [&](std::size_t i) { return shifts.empty() ? 0 : shifts[i]; };
  AisleSpec a = point_aisle(es[0], sh(0));
  for (std::size_t i = 1; i < es.size(); ++i) a = glued_aisle(a, point_aisle(es[i], sh(i)));
  return a;
}

std::vector<Leaf> leaves(const AisleSpec& a) {
  switch (a.kind) {
    case AisleSpec::Kind::Standard:
      throw GlueError("standard aisle has no exceptional generators");
    case AisleSpec::Kind::AddGenerated:
      return {Leaf{a.gen, a.shift}};
    case AisleSpec::Kind::Glued:
      break;
  }
  std::vector<Leaf> out = leaves(*a.left);
  for (auto& l : out) l.eff += 1;
  for (auto& l : leaves(*a.right)) out.push_back(l);
  return out;
}

HeartDesc heart_of(const AisleSpec& a) {
  switch (a.kind) {
    case AisleSpec::Kind::Standard: {
      HeartDesc h{{}, "standard"};
      for (int i = 1; i <= a.alg->vertices(); ++i) h.gens.push_back(module_cx(simple(a.alg, i), a.cut));
      return h;
    }
    case AisleSpec::Kind::AddGenerated:
      return HeartDesc{{shift(a.gen, a.shift)}, "point"};
    case AisleSpec::Kind::Glued:
      break;
  }
  HeartDesc h{heart_of(*a.right).gens, "glued"};
  for (const auto& g : heart_of(*a.left).gens) h.gens.push_back(shift(g, 1));
  return h;
}

CompatReport compatible(const AisleSpec& a1, const AisleSpec& a2, Window w) {
  require_gluable(a1);
  require_gluable(a2);
  std::vector<Leaf> l1 = leaves(a1), l2 = leaves(a2);
  for (std::size_t i = 0; i < l1.size(); ++i)
    for (std::size_t j = 0; j < l2.size(); ++j) {
      int bound = l2[j].eff - l1[i].eff - 1;
      for (int d = w.lo; d <= bound; ++d) {
        std::size_t dim = hom_dim(l1[i].gen, l2[j].gen, d);
        if (dim != 0) return CompatReport{false, Violation{i, j, d, dim, "compatibility"}};
      }
    }
  return CompatReport{};
}

NFoldReport check_nfold(const std::vector<Cx>& es, const std::vector<int>& shifts, Window w) {
  if (!shifts.empty() && shifts.size() != es.size()) throw GlueError("one shift per generator expected");
  auto sh = [&](std::size_t i) { return shifts.empty() ? 0 : shifts[i]; };
  NFoldReport r;
  for (std::size_t k = 1; k < es.size() && r.direct.compatible; ++k)
    for (std::size_t i = 0; i < k && r.direct.compatible; ++i) {
      int bound = sh(k) - sh(i) - static_cast<int>(k - i);
      for (int d = w.lo; d <= bound; ++d) {
        std::size_t dim = hom_dim(es[i], es[k], d);
        if (dim != 0) {
          r.direct = CompatReport{false, Violation{i, k, d, dim, "nfold"}};
          break;
        }
      }
    }
  for (std::size_t k = 1; k < es.size(); ++k) {
    std::vector<Cx> head(es.begin(), es.begin() + static_cast<long>(k));
    std::vector<int> hs;
    for (std::size_t i = 0; i < k; ++i) hs.push_back(sh(i));
    CompatReport c = compatible(iterated_gluing(head, hs), point_aisle(es[k], sh(k)), w);
    if (!c.compatible) {
      c.witness->j = k;
      r.iterated = c;
      break;
    }
  }
  return r;
}

GlueResult glue(const AisleSpec& a1, const AisleSpec& a2, Window w) {
  CompatReport c = compatible(a1, a2, w);
  if (!c.compatible) {
    const Violation& v = *c.witness;
    throw GlueError("aisles are not compatible: hom(E" + std::to_string(v.i + 1) + ", F" +
                    std::to_string(v.j + 1) + "[" + std::to_string(v.n) + "]) has dimension " +
                    std::to_string(v.dim));
  }
  AisleSpec g = glued_aisle(a1, a2);
  return GlueResult{g, heart_of(g), c};
}

Decomposition decompose(const Cx& x, const std::vector<Cx>& es) {
  Decomposition d;
  d.parts.resize(es.size());
  Cx y = proj_model(x).proj;
  for (std::size_t k = es.size(); k-- > 0;) {
    Eval ev = evaluation(es[k], y, [](int) { return true; });
    d.parts[k] = Component{ev.sum, ev.mult};
    if (ev.sum.empty()) continue;
    Cone c = cone(ev.map);
    y = minimize(c.obj).obj;
  }
  d.complete = is_acyclic(y);
  return d;
}

Cx sod_project(const Cx& x, const std::vector<Cx>& es, std::size_t k) {
  if (k >= es.size()) throw GlueError("component index out of range");
  return decompose(x, es).parts[k].object;
}

namespace {

enum class Side { Aisle, Coaisle };

bool member(const Cx& x, const AisleSpec& a, Side side) {
  if (a.kind == AisleSpec::Kind::Standard) {
    for (int i = x.lo; i <= x.hi(); ++i) {
      bool relevant = side == Side::Aisle ? i > a.cut : i <= a.cut;
      if (relevant && !heart_cohomology(x, i).is_zero()) return false;
    }
    return true;
  }
  std::vector<Leaf> ls = leaves(a);
  std::vector<Cx> gens;
  for (const auto& l : ls) gens.push_back(l.gen);
  Decomposition d = decompose(x, gens);
  if (!d.complete) return false;
  for (std::size_t k = 0; k < ls.size(); ++k)
    for (const auto& [m, mult] : d.parts[k].mult) {
      bool bad = side == Side::Aisle ? m < ls[k].eff : m >= ls[k].eff;
      if (bad && mult != 0) return false;
    }
  return true;
}

}  // namespace

bool in_aisle(const Cx& x, const AisleSpec& a) { return member(x, a, Side::Aisle); }
bool in_coaisle(const Cx& x, const AisleSpec& a) { return member(x, a, Side::Coaisle); }
bool in_heart(const Cx& x, const AisleSpec& a) {
  return in_aisle(x, a) && in_coaisle(shift(x, -1), a);
}

GluedTruncation truncate_glued(const Cx& x, const AisleSpec& a) {
  if (a.kind == AisleSpec::Kind::Standard) {
    StdTruncation st = truncate_std(x, a.cut);
    Cone c = cone(st.a_to_x);
    // cone(a -> x) -> b is a quasi-isomorphism since b o a = 0 strictly.
    CxMap q{c.obj, st.b, {}};
    for (int k = c.obj.lo; k <= c.obj.hi(); ++k) {
      Rep bk = st.b.term(k);
      if (bk.is_zero()) continue;
      DirectSum parts = direct_sum(st.a.term(k + 1), x.term(k));
      q.comp.emplace(k, compose(st.x_to_b.at(k), parts.proj[1]));
    }
    DHomPtr space = derived_hom(st.b, st.a, 1);
    return GluedTruncation{st.a, st.b, st.a_to_x, st.x_to_b, class_of_roof(q, c.proj, space)};
  }
  std::vector<Cx> gens;
  for (const auto& l : leaves(a)) gens.push_back(l.gen);
  if (!decompose(x, gens).complete) throw GlueError("object lies outside the glued category");
  Resolution model = proj_model(x);
  PTrunc t = trunc_proj(model.proj, a);
  CxMap ax = compose(model.quasi, t.a_to_x);
  ax.src = t.a;
  ax.dst = x;
  Cone c = cone(ax);
  Cx b = c.obj;
  CxMap xb = c.incl;
  CxMap to_a1 = c.proj;
  if (b.is_projective()) {
    Minimal m = minimize(b);
    b = m.obj;
    xb = compose(m.from_orig, c.incl);
    xb.dst = b;
    to_a1 = compose(c.proj, m.to_orig);
    to_a1.src = b;
  }
  DHomPtr space = derived_hom(b, t.a, 1);
  return GluedTruncation{t.a, b, ax, xb, class_of_chain_map(to_a1, space)};
}

HeartDim heart_dim(const HeartDesc& h, Window w) {
  HeartDim r;
  for (std::size_t a = 0; a < h.gens.size(); ++a)
    for (std::size_t b = 0; b < h.gens.size(); ++b)
      for (int n = w.hi; n >= w.lo; --n) {
        if (r.value && n <= *r.value) break;
        if (hom_dim(h.gens[a], h.gens[b], n) != 0) {
          r.value = n;
          r.witness = PairWitness{a, b, n};
          break;
        }
      }
  return r;
}

RDim rdim(const HeartDesc& h1, const HeartDesc& h2, Window w) {
  RDim r;
  bool found = false;
  for (std::size_t a = 0; a < h1.gens.size(); ++a)
    for (std::size_t b = 0; b < h2.gens.size(); ++b)
      for (int n = w.hi; n >= w.lo; --n) {
        if (found && n <= r.value) break;
        if (hom_dim(h1.gens[a], h2.gens[b], n) != 0) {
          r.value = n;
          r.witness = PairWitness{a, b, n};
          found = true;
          break;
        }
      }
  return r;
}

std::optional<PairWitness> negative_hom_witness(const HeartDesc& h, Window w) {
  for (std::size_t a = 0; a < h.gens.size(); ++a)
    for (std::size_t b = 0; b < h.gens.size(); ++b)
      for (int n = w.lo; n < 0; ++n)
        if (hom_dim(h.gens[a], h.gens[b], n) != 0) return PairWitness{a, b, n};
  return std::nullopt;
}

DimFormulaReport check_dim_formula(const HeartDesc& h1, const HeartDesc& h2,
                                   const HeartDesc& glued, Window w) {
  DimFormulaReport r;
  r.window = w;
  r.lhs = heart_dim(glued, w);
  r.dim1 = heart_dim(h1, w);
  r.dim2 = heart_dim(h2, w);
  r.rd = rdim(h1, h2, w);
  std::optional<int> rhs;
  auto take = [&rhs](std::optional<int> v) {
    if (v && (!rhs || *v > *rhs)) rhs = v;
  };
  take(r.dim1.value);
  take(r.dim2.value);
  if (r.dim1.value || r.dim2.value) take(r.rd.value + 1);
  r.rhs = rhs;
  r.holds = r.lhs.value == r.rhs;
  return r;
}

}  // namespace heartglue
