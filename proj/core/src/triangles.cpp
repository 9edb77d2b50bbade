#include "heartglue/triangles.hpp"

namespace heartglue {

namespace {

bool is_mono(const RepMap& f) {
  for (int v = 1; v <= static_cast<int>(f.src.dims.size()); ++v)
    if (rank(f.at(v)) != static_cast<std::size_t>(f.src.dim(v))) return false;
  return true;
}

bool is_epi(const RepMap& f) {
  for (int v = 1; v <= static_cast<int>(f.dst.dims.size()); ++v)
    if (rank(f.at(v)) != static_cast<std::size_t>(f.dst.dim(v))) return false;
  return true;
}

}  // namespace

void check_exact(const Ses& s) {
  if (!same_rep(s.i.dst, s.p.src)) throw ModuleError("ses: middle terms differ");
  if (!is_morphism(s.i) || !is_morphism(s.p)) throw ModuleError("ses: maps are not module maps");
  if (!is_mono(s.i)) throw ModuleError("ses: first map is not injective");
  if (!is_epi(s.p)) throw ModuleError("ses: second map is not surjective");
  if (!is_zero(compose(s.p, s.i))) throw ModuleError("ses: composite is nonzero");
  for (int v = 1; v <= static_cast<int>(s.i.dst.dims.size()); ++v)
    if (s.i.dst.dim(v) != s.i.src.dim(v) + s.p.dst.dim(v))
      throw ModuleError("ses: not exact in the middle at vertex " + std::to_string(v));
}

Ses split_ses(const Rep& m, const Rep& n) {
  DirectSum s = direct_sum(m, n);
  return Ses{s.inj[0], s.proj[1]};
}

DHomClass class_of_roof(const CxMap& q, const CxMap& g, const DHomPtr& space) {
  DHomClass id = identity_class(space->source());
  auto psi = lift_class(id, Resolution{q.src, q});
  std::map<int, RepMap> fam;
  for (const auto& [k, pk] : psi) fam.emplace(k, compose(g.at(k), pk));
  return DHomClass{space, space->coordinates(family_coords(space->layout(), fam))};
}

Triangle cone_triangle(const CxMap& f) {
  Cone c = cone(f);
  DHomPtr space = derived_hom(c.obj, f.src, 1);
  return Triangle{f.src, f.dst, c.obj, f, c.incl, class_of_chain_map(c.proj, space)};
}

Triangle ses_to_triangle(const Ses& s) {
  check_exact(s);
  Cx a = module_cx(s.i.src, 0);
  Cx b = module_cx(s.i.dst, 0);
  Cx c = module_cx(s.p.dst, 0);
  CxMap u{a, b, {}};
  CxMap v{b, c, {}};
  if (!a.empty() && !b.empty()) u.comp.emplace(0, s.i);
  if (!b.empty() && !c.empty()) v.comp.emplace(0, s.p);
  Cone k = cone(u);
  CxMap q{k.obj, c, {}};
  // C(i)^0 = 0 + E, so the degree-0 component is p itself.
  if (!k.obj.empty() && !c.empty()) q.comp.emplace(0, RepMap{k.obj.term(0), c.term(0), s.p.blocks});
  DHomPtr space = derived_hom(c, a, 1);
  return Triangle{a, b, c, u, v, class_of_roof(q, k.proj, space)};
}

std::optional<Ses> triangle_to_ses(const Triangle& t) {
  if (!is_module_object(t.a) || !is_module_object(t.b) || !is_module_object(t.c)) return std::nullopt;
  Ses s{cohomology_map(t.u, 0), cohomology_map(t.v, 0)};
  try {
    check_exact(s);
  } catch (const ModuleError&) {
    return std::nullopt;
  }
  return s;
}

}  // namespace heartglue
