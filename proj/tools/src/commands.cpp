#include "commands.hpp"

#include "heartglue/bondal.hpp"
#include "heartglue/yoneda.hpp"

#include <sstream>

namespace heartglue::cli {

namespace {

json window_json(Window w) { return json{{"lo", w.lo}, {"hi", w.hi}}; }

std::string window_str(Window w) { return std::to_string(w.lo) + ".." + std::to_string(w.hi); }

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::vector<Cx> cxs(const ObjectSet& objs) {
  std::vector<Cx> out;
  for (const auto& o : objs.objects) out.push_back(o.cx);
  return out;
}

json names_json(const ObjectSet& objs) {
  json a = json::array();
  for (const auto& o : objs.objects) a.push_back(o.name);
  return a;
}

std::string names_str(const ObjectSet& objs) {
  std::string s;
  for (const auto& o : objs.objects) s += (s.empty() ? "" : ", ") + o.name;
  return s;
}

std::string shifted(const std::string& name, int s) {
  return s == 0 ? name : name + "[" + std::to_string(s) + "]";
}

json header(const std::string& cmd, const LoadedAlgebra& a, const ObjectSet& objs, Window w) {
  return json{{"command", cmd}, {"algebra", a.name}, {"objects", names_json(objs)}, {"window", window_json(w)}};
}

std::string text_header(const std::string& cmd, const LoadedAlgebra& a, const ObjectSet& objs, Window w) {
  return cmd + " " + a.name + "  window " + window_str(w) + "\nobjects: " + names_str(objs) + "\n";
}

json violation_json(const Violation& v, const std::string& src, const std::string& dst) {
  return json{{"rule", v.rule}, {"i", v.i + 1}, {"j", v.j + 1}, {"shift", v.n}, {"dim", v.dim},
              {"source", src}, {"target", dst}};
}

std::string violation_str(const Violation& v, const std::string& src, const std::string& dst) {
  return v.rule + ": Hom(" + src + ", " + dst + "[" + std::to_string(v.n) + "]) has dim " +
         std::to_string(v.dim);
}

int shift_of(const ObjectSet& objs, std::size_t k) { return objs.shifts.empty() ? 0 : objs.shifts[k]; }

// Names of the heart generators of the left-nested gluing, in heart_of order.
std::vector<std::string> heart_names(const ObjectSet& objs) {
  std::vector<std::string> out;
  std::size_t n = objs.objects.size();
  for (std::size_t k = n; k-- > 0;)
    out.push_back(shifted(objs.objects[k].name, shift_of(objs, k) + static_cast<int>(n - 1 - k)));
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"ext-table",    "check-exceptional", "glue-hearts",
                                              "dim-formula",  "yoneda-oracle",     "bondal-check",
                                              "remark-counterexamples"};
  return names;
}

Report ext_table(const LoadedAlgebra& a, const ObjectSet& objs, Window w) {
  Report r;
  r.data = header("ext-table", a, objs, w);
  std::ostringstream t;
  t << text_header("ext-table", a, objs, w);
  HomTable table = hom_table(cxs(objs), w);
  json rows = json::array();
  for (std::size_t i = 0; i < objs.objects.size(); ++i)
    for (std::size_t j = 0; j < objs.objects.size(); ++j) {
      json dims = json::array();
      std::string nz;
      for (int n = w.lo; n <= w.hi; ++n) {
        std::size_t d = table.at(i, j, n);
        dims.push_back(d);
        if (d != 0) nz += "  n=" + std::to_string(n) + ": " + std::to_string(d);
      }
      rows.push_back(json{{"source", objs.objects[i].name}, {"target", objs.objects[j].name}, {"dims", dims}});
      t << "Hom(" << objs.objects[i].name << ", " << objs.objects[j].name << "[n])"
        << (nz.empty() ? "  0 in window" : nz) << "\n";
    }
  r.data["table"] = rows;
  r.data["ok"] = true;
  r.text = t.str();
  return r;
}

Report check_exceptional_cmd(const LoadedAlgebra& a, const ObjectSet& objs, Window w, bool strong) {
  Report r;
  r.data = header("check-exceptional", a, objs, w);
  ExcSequence s = check_sequence(cxs(objs), strong, w);
  r.data["strong_requested"] = strong;
  r.data["exceptional"] = s.exceptional;
  r.data["strong"] = s.strong;
  std::ostringstream t;
  t << text_header("check-exceptional", a, objs, w);
  t << "strong requested: " << (strong ? "yes" : "no") << "\n";
  if (s.violation) {
    const Violation& v = *s.violation;
    const std::string& src = objs.objects[v.i].name;
    const std::string& dst = objs.objects[v.j].name;
    r.data["violation"] = violation_json(v, src, dst);
    t << "FAIL " << violation_str(v, src, dst) << "\n";
    r.status = 1;
  } else {
    r.data["violation"] = nullptr;
    t << "OK exceptional" << (s.strong ? ", strong" : "") << "\n";
  }
  r.data["ok"] = r.status == 0;
  r.text = t.str();
  return r;
}

Report glue_hearts(const LoadedAlgebra& a, const ObjectSet& objs, Window w) {
  Report r;
  r.data = header("glue-hearts", a, objs, w);
  std::ostringstream t;
  t << text_header("glue-hearts", a, objs, w);
  std::vector<Cx> es = cxs(objs);
  json shifts = json::array();
  for (std::size_t k = 0; k < es.size(); ++k) shifts.push_back(shift_of(objs, k));
  r.data["shifts"] = shifts;

  ExcSequence s = check_sequence(es, false, w);
  r.data["exceptional"] = s.exceptional;
  if (!s.exceptional) {
    const Violation& v = *s.violation;
    r.data["violation"] = violation_json(v, objs.objects[v.i].name, objs.objects[v.j].name);
    t << "FAIL not exceptional: " << violation_str(v, objs.objects[v.i].name, objs.objects[v.j].name) << "\n";
    r.status = 1;
    r.data["ok"] = false;
    r.text = t.str();
    return r;
  }
  NFoldReport nf = check_nfold(es, objs.shifts, w);
  auto compat_json = [&](const CompatReport& c) {
    json j{{"compatible", c.compatible}};
    if (c.witness)
      j["witness"] = violation_json(*c.witness, objs.objects[c.witness->i].name, objs.objects[c.witness->j].name);
    else
      j["witness"] = nullptr;
    return j;
  };
  r.data["direct"] = compat_json(nf.direct);
  r.data["iterated"] = compat_json(nf.iterated);
  r.data["agree"] = nf.agree();
  t << "n-fold condition, direct: " << (nf.direct.compatible ? "compatible" : "incompatible");
  if (nf.direct.witness)
    t << " (" << violation_str(*nf.direct.witness, objs.objects[nf.direct.witness->i].name,
                               objs.objects[nf.direct.witness->j].name)
      << ")";
  t << "\nn-fold condition, pairwise iterated: " << (nf.iterated.compatible ? "compatible" : "incompatible");
  if (nf.iterated.witness) t << " (first failing step " << nf.iterated.witness->j + 1 << ")";
  t << "\n";
  if (!nf.agree()) {
    t << "FAIL direct and iterated conditions disagree\n";
    r.status = 1;
  }
  if (nf.iterated.compatible) {
    AisleSpec g = iterated_gluing(es, objs.shifts);
    HeartDesc h = heart_of(g);
    std::vector<std::string> hn = heart_names(objs);
    r.data["heart"] = hn;
    t << "heart generators: ";
    for (std::size_t k = 0; k < hn.size(); ++k) t << (k ? ", " : "") << hn[k];
    t << "\n";
    auto neg = negative_hom_witness(h, w);
    if (neg) {
      r.data["negative_hom"] = json{{"a", hn[neg->a]}, {"b", hn[neg->b]}, {"shift", neg->n}};
      t << "FAIL negative Hom(" << hn[neg->a] << ", " << hn[neg->b] << "[" << neg->n << "])\n";
      r.status = 1;
    } else {
      r.data["negative_hom"] = nullptr;
    }
    HeartDim hd = heart_dim(h, w);
    r.data["heart_dim"] = opt_json(hd.value);
    t << "heart dimension: " << opt_str(hd.value) << "\n";
  } else {
    r.data["heart"] = nullptr;
    r.status = 1;
    t << "FAIL gluing is not compatible\n";
  }
  if (r.status == 0) t << "OK\n";
  r.data["ok"] = r.status == 0;
  r.text = t.str();
  return r;
}

Report dim_formula(const LoadedAlgebra& a, const ObjectSet& objs, Window w) {
  Report r;
  r.data = header("dim-formula", a, objs, w);
  std::ostringstream t;
  t << text_header("dim-formula", a, objs, w);
  std::vector<Cx> es = cxs(objs);
  json levels = json::array();
  if (es.size() < 2) {
    t << "FAIL need at least two objects to glue\n";
    r.status = 1;
  }
  for (std::size_t k = 1; k < es.size(); ++k) {
    std::vector<Cx> head(es.begin(), es.begin() + static_cast<long>(k));
    std::vector<int> hs;
    for (std::size_t i = 0; i < k; ++i) hs.push_back(shift_of(objs, i));
    AisleSpec a1 = iterated_gluing(head, hs);
    AisleSpec a2 = point_aisle(es[k], shift_of(objs, k));
    json lv{{"level", k + 1}};
    CompatReport c = compatible(a1, a2, w);
    if (!c.compatible) {
      lv["compatible"] = false;
      levels.push_back(lv);
      t << "level " << k + 1 << ": FAIL aisles are not compatible\n";
      r.status = 1;
      break;
    }
    AisleSpec g = glued_aisle(a1, a2);
    DimFormulaReport d = check_dim_formula(heart_of(a1), heart_of(a2), heart_of(g), w);
    lv["compatible"] = true;
    lv["lhs"] = opt_json(d.lhs.value);
    lv["dim1"] = opt_json(d.dim1.value);
    lv["dim2"] = opt_json(d.dim2.value);
    lv["rdim"] = d.rd.value;
    lv["rhs"] = opt_json(d.rhs);
    lv["holds"] = d.holds;
    levels.push_back(lv);
    t << "level " << k + 1 << ": lhs=" << opt_str(d.lhs.value) << " rhs=" << opt_str(d.rhs) << " "
      << (d.holds ? "OK" : "FAIL") << "  (dim1=" << opt_str(d.dim1.value) << " dim2=" << opt_str(d.dim2.value)
      << " rdim+1=" << d.rd.value + 1 << ")\n";
    if (!d.holds) r.status = 1;
  }
  r.data["levels"] = levels;
  r.data["ok"] = r.status == 0;
  r.text = t.str();
  return r;
}

Report yoneda_oracle(const LoadedAlgebra& a, const ObjectSet& objs, int max_degree) {
  Report r;
  Window w{1, max_degree};
  r.data = header("yoneda-oracle", a, objs, w);
  std::ostringstream t;
  t << a.name << " yoneda-oracle  degrees 1.." << max_degree << "\nobjects: " << names_str(objs) << "\n";
  for (const auto& o : objs.objects)
    if (!o.cx.empty() && (o.cx.lo != 0 || o.cx.terms.size() != 1))
      throw InputError(o.name, 0, "yoneda-oracle needs modules in degree 0");
  std::size_t spaces = 0, classes = 0, trip_ok = 0, back_ok = 0, baer = 0, baer_ok = 0, prod = 0, prod_ok = 0;
  std::vector<std::string> failures;
  const auto& os = objs.objects;
  for (const auto& x : os)
    for (const auto& y : os)
      for (int n = 1; n <= max_degree; ++n) {
        DHomPtr sp = derived_hom(x.cx, y.cx, n);
        if (sp->dim() == 0) continue;
        ++spaces;
        std::string where = "Hom(" + x.name + ", " + y.name + "[" + std::to_string(n) + "])";
        for (std::size_t i = 0; i < sp->dim(); ++i) {
          DHomClass c = basis_class(sp, i);
          YExt e = splice_from_class(c);
          DHomClass fc = f_map(e, sp);
          ++classes;
          if (fc.coords == c.coords)
            ++trip_ok;
          else
            failures.push_back("f o splice at " + where);
          if (f_map(splice_from_class(fc), sp).coords == fc.coords)
            ++back_ok;
          else
            failures.push_back("splice o f at " + where);
        }
        YExt e0 = splice_from_class(basis_class(sp, 0));
        YExt e1 = splice_from_class(basis_class(sp, sp->dim() - 1));
        ++baer;
        Matrix want = f_map(e0, sp).coords + f_map(e1, sp).coords;
        if (f_map(baer_sum(e0, e1), sp).coords == want)
          ++baer_ok;
        else
          failures.push_back("baer sum at " + where);
      }
  for (const auto& x : os)
    for (const auto& y : os)
      for (const auto& z : os) {
        if (max_degree < 2) break;
        DHomPtr h1 = derived_hom(x.cx, y.cx, 1);
        DHomPtr h2 = derived_hom(y.cx, z.cx, 1);
        if (h1->dim() == 0 || h2->dim() == 0) continue;
        DHomPtr h12 = derived_hom(x.cx, z.cx, 2);
        DHomClass c1 = basis_class(h1, 0), c2 = basis_class(h2, 0);
        YExt p = yoneda_product(splice_from_class(c1), splice_from_class(c2));
        ++prod;
        if (f_map(p, h12).coords == compose(c2, c1, h12).coords)
          ++prod_ok;
        else
          failures.push_back("product vs composite at " + x.name + " -> " + y.name + " -> " + z.name);
      }
  r.status = failures.empty() ? 0 : 1;
  r.data["spaces"] = spaces;
  r.data["classes"] = classes;
  r.data["f_after_splice"] = json{{"checked", classes}, {"passed", trip_ok}};
  r.data["splice_after_f"] = json{{"checked", classes}, {"passed", back_ok}};
  r.data["baer_sums"] = json{{"checked", baer}, {"passed", baer_ok}};
  r.data["products"] = json{{"checked", prod}, {"passed", prod_ok}};
  r.data["failures"] = failures;
  r.data["ok"] = r.status == 0;
  t << "nonzero spaces " << spaces << "  basis classes " << classes << "\n";
  t << "f o splice = id: " << trip_ok << "/" << classes << "\n";
  t << "splice o f = id: " << back_ok << "/" << classes << "\n";
  t << "baer sums additive: " << baer_ok << "/" << baer << "\n";
  t << "products to composites: " << prod_ok << "/" << prod << "\n";
  for (const auto& f : failures) t << "FAIL " << f << "\n";
  t << (r.status == 0 ? "OK\n" : "FAIL\n");
  r.text = t.str();
  return r;
}

Report bondal_check(const LoadedAlgebra& a, const ObjectSet& objs, Window w) {
  Report r;
  r.data = header("bondal-check", a, objs, w);
  std::ostringstream t;
  t << text_header("bondal-check", a, objs, w);
  std::vector<Cx> es = cxs(objs);
  ExcSequence seq = check_sequence(es, true, w);
  std::optional<BondalFunctor> phi;
  try {
    phi.emplace(seq, w);
  } catch (const BondalError& e) {
    r.data["error"] = e.what();
    r.data["ok"] = false;
    r.status = 1;
    t << "FAIL " << e.what() << "\n";
    r.text = t.str();
    return r;
  }
  const EndAlgebra& ea = phi->end();
  const QuiverPresentation& pres = phi->presentation();
  r.data["end_dim"] = ea.dim();
  r.data["associative"] = ea.associative;
  json arrows = json::array();
  for (const auto& ar : pres.quiver.arrows)
    arrows.push_back(json{{"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
  json rels = json::array();
  for (const auto& rel : pres.relations) {
    json terms = json::array();
    for (const auto& term : rel) {
      json path = json::array();
      for (int k : term.path) path.push_back(pres.quiver.arrows[static_cast<std::size_t>(k)].name);
      terms.push_back(json{{"coef", to_string(term.coef)}, {"path", path}});
    }
    rels.push_back(terms);
  }
  r.data["presentation"] = json{{"vertices", pres.quiver.vertices}, {"arrows", arrows}, {"relations", rels}};
  r.data["certificate"] = pres.certificate.ok();
  t << "End algebra: dim " << ea.dim() << (ea.associative ? ", associative" : ", NOT associative") << "\n";
  t << "presentation: " << pres.quiver.vertices << " vertices, " << pres.quiver.arrows.size() << " arrows, "
    << pres.relations.size() << " relations; certificate " << (pres.certificate.ok() ? "ok" : "FAILED") << "\n";
  if (!ea.associative || !pres.certificate.ok()) r.status = 1;

  bool projectives = static_cast<int>(es.size()) == a.alg->vertices();
  for (std::size_t i = 0; projectives && i < es.size(); ++i)
    projectives = same_cx(es[i], module_cx(projective(a.alg, static_cast<int>(i + 1))));
  if (projectives) {
    AlgebraIso iso = regular_iso(ea, a.alg);
    bool shape = same_shape(pres.quiver, a.alg->quiver());
    r.data["round_trip"] = json{{"same_shape", shape}, {"isomorphic", iso.ok()}};
    t << "round trip to " << a.name << ": shape " << (shape ? "matches" : "DIFFERS") << ", algebra map "
      << (iso.ok() ? "is an isomorphism" : "FAILED: " + iso.failure) << "\n";
    if (!shape || !iso.ok()) r.status = 1;
  } else {
    r.data["round_trip"] = nullptr;
  }

  json certs = json::array();
  for (std::size_t i = 0; i < es.size(); ++i) {
    bool ok = is_iso(phi->projective_certificate(i));
    certs.push_back(ok);
    t << "Phi(" << objs.objects[i].name << ") = P" << i + 1 << ": " << (ok ? "iso" : "FAILED") << "\n";
    if (!ok) r.status = 1;
  }
  r.data["projective_certificates"] = certs;

  std::vector<std::pair<Cx, Cx>> sample;
  for (const auto& x : es)
    for (const auto& y : es) sample.emplace_back(x, y);
  FaithfulFullReport ff = faithful_full_check(*phi, sample);
  std::size_t passed = 0;
  for (const auto& pc : ff.pairs) passed += pc.ok() ? 1 : 0;
  r.data["faithful_full"] = json{{"checked", ff.pairs.size()}, {"passed", passed}};
  t << "faithful and full on generator pairs: " << passed << "/" << ff.pairs.size() << "\n";
  if (!ff.ok()) r.status = 1;
  r.data["ok"] = r.status == 0;
  t << (r.status == 0 ? "OK\n" : "FAIL\n");
  r.text = t.str();
  return r;
}

Report remark_counterexamples(Window w) {
  Report r;
  r.data = json{{"command", "remark-counterexamples"}, {"window", window_json(w)}};
  std::ostringstream t;
  t << "remark-counterexamples  window " << window_str(w) << "\n";

  // Kronecker, heart generators P1[2] and P2.
  LoadedAlgebra kr = load_algebra("kronecker");
  Cx p1 = module_cx(projective(kr.alg, 1)), p2 = module_cx(projective(kr.alg, 2));
  Cx p1s = shift(p1, 2);
  std::vector<Cx> gens{p1s, p2};
  DHomPtr sp = derived_hom(p1s, p2, 2);
  std::size_t span = factor_span_dim(sp, gens);
  std::vector<DHomClass> nonzero;
  for (std::size_t i = 0; i < sp->dim(); ++i) nonzero.push_back(basis_class(sp, i));
  if (sp->dim() == 2) {
    nonzero.push_back(class_add(nonzero[0], nonzero[1]));
    nonzero.push_back(class_add(nonzero[0], class_scale(nonzero[1], Rat(-1))));
  }
  std::size_t refused = 0;
  for (const auto& c : nonzero) refused += factors_through(c, gens) ? 0 : 1;
  bool zero_ok = factors_through(class_scale(nonzero.front(), Rat(0)), gens);
  bool kron_ok = sp->dim() == 2 && span == 0 && refused == nonzero.size() && zero_ok;
  r.data["kronecker"] = json{{"hom_dim", sp->dim()},
                             {"factor_span_dim", span},
                             {"nonzero_classes", nonzero.size()},
                             {"nonzero_refused", refused},
                             {"zero_factors", zero_ok},
                             {"reproduced", kron_ok}};
  t << "kronecker, heart {P1[2], P2}: Hom(P1[2], P2[2]) dim " << sp->dim() << ", span of composites through "
    << "heart[1] dim " << span << "; " << refused << "/" << nonzero.size()
    << " nonzero classes do not factor; zero class factors: " << (zero_ok ? "yes" : "no") << "  "
    << (kron_ok ? "REPRODUCED" : "NOT REPRODUCED") << "\n";

  // Fork 1 -> 2, f: 1 -> 3 with the 3-term gluing of P1, P2, P3.
  LoadedAlgebra fk = load_algebra("fork");
  std::vector<Cx> es;
  for (int i = 1; i <= 3; ++i) es.push_back(module_cx(projective(fk.alg, i)));
  NFoldReport nf = check_nfold(es, {}, w);
  HeartDesc h = heart_of(iterated_gluing(es));
  int fi = fk.alg->quiver().arrow_index("f");
  long fb = fk.alg->find_basis(Path{fi}, 1);
  Rep p3 = es[2].term(0);
  Matrix coords(static_cast<std::size_t>(p3.dim(1)), 1);
  coords(fk.alg->position_in_block(static_cast<std::size_t>(fb)), 0) = Rat(1);
  RepMap g = map_from_coords(make_proj_sum(fk.alg, {1}), p3, coords);
  Cx e1s = shift(es[0], 2);
  DHomPtr fsp = derived_hom(e1s, es[2], 2);
  CxMap fmap{e1s, shift(es[2], 2), {{-2, RepMap{e1s.term(-2), p3, g.blocks}}}};
  DHomClass fc = class_of_chain_map(fmap, fsp);
  bool fact = factors_through(fc, h.gens);
  bool fork_ok = nf.direct.compatible && nf.iterated.compatible && !fc.is_zero() && !fact;
  r.data["fork"] = json{{"compatible", nf.iterated.compatible},
                        {"hom_dim", fsp->dim()},
                        {"class_nonzero", !fc.is_zero()},
                        {"factors", fact},
                        {"reproduced", fork_ok}};
  t << "fork, heart {P3, P2[1], P1[2]}: class of f in Hom(P1[2], P3[2]) is "
    << (fc.is_zero() ? "zero" : "nonzero") << " and " << (fact ? "factors" : "does not factor")
    << " through heart[1]  " << (fork_ok ? "REPRODUCED" : "NOT REPRODUCED") << "\n";

  r.status = kron_ok && fork_ok ? 0 : 1;
  r.data["ok"] = r.status == 0;
  r.text = t.str();
  return r;
}

Report run_job(const Job& job) {
  if (job.command == "remark-counterexamples")
    return remark_counterexamples(symmetric_window(job.window > 0 ? job.window : 6));
  LoadedAlgebra a = load_algebra(job.algebra);
  ObjectSet objs;
  if (job.objects) {
    objs = load_objects(*job.objects, a.alg);
  } else if (job.command == "yoneda-oracle") {
    for (int i = 1; i <= a.alg->vertices(); ++i) {
      objs.objects.push_back(NamedObject{"S" + std::to_string(i), module_cx(simple(a.alg, i))});
      objs.objects.push_back(NamedObject{"P" + std::to_string(i), module_cx(projective(a.alg, i))});
    }
  } else {
    objs = projective_objects(a.alg);
  }
  Window w = job.window > 0 ? symmetric_window(job.window) : default_window(*a.alg, objs.objects.size());
  if (job.command == "ext-table") return ext_table(a, objs, w);
  if (job.command == "check-exceptional")
    return check_exceptional_cmd(a, objs, w, job.weak ? false : objs.strong.value_or(true));
  if (job.command == "glue-hearts") return glue_hearts(a, objs, w);
  if (job.command == "dim-formula") return dim_formula(a, objs, w);
  if (job.command == "yoneda-oracle") return yoneda_oracle(a, objs, job.window > 0 ? std::min(job.window, 3) : 3);
  if (job.command == "bondal-check") return bondal_check(a, objs, w);
  throw InputError(job.command, 0, "unknown command");
}

std::string render(const Report& r, Format f) {
  if (f == Format::Json) return r.data.dump(2) + "\n";
  return r.text;
}

}  // namespace heartglue::cli
