#pragma once

#include "heartglue/modules.hpp"
#include "heartglue/projective.hpp"

#include <map>
#include <memory>
#include <vector>

namespace heartglue {

namespace detail {
struct CxCache;
}

// Bounded cochain complex of representations: d^k raises degree, d o d = 0.
// X[1] moves terms to lower degree: X[1]^k = X^{k+1}, d_{X[1]} = -d_X.
// When `proj` is non-empty every term is the projective sum proj[k].
struct Cx {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<Rep> terms;
  std::vector<RepMap> d;  // d[k]: terms[k] -> terms[k+1]
  std::vector<ProjSum> proj;
  std::shared_ptr<detail::CxCache> cache;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool empty() const { return terms.empty(); }
  bool is_projective() const { return proj.size() == terms.size(); }
  Rep term(int deg) const;
  RepMap diff(int deg) const;  // term(deg) -> term(deg + 1)
  const ProjSum& proj_at(int deg) const;
  ProjSum proj_term(int deg) const;  // empty sum outside the range
};

// Chain map; missing components are zero.
struct CxMap {
  Cx src;
  Cx dst;
  std::map<int, RepMap> comp;

  RepMap at(int deg) const;
};

Cx make_cx(AlgebraPtr alg, int lo, std::vector<Rep> terms, std::vector<RepMap> d);
Cx make_proj_cx(AlgebraPtr alg, int lo, std::vector<ProjSum> terms, std::vector<RepMap> d);
Cx zero_cx(AlgebraPtr alg);
Cx module_cx(const Rep& m, int degree = 0);
Cx proj_module_cx(const ProjSum& p, int degree = 0);
void validate(const Cx& x);  // throws ModuleError when d o d != 0

// Drops zero terms at both ends.
Cx trimmed(const Cx& x);

bool same_cx(const Cx& a, const Cx& b);

Cx shift(const Cx& x, int k);
CxMap shift(const CxMap& f, int k);

CxMap identity_cx_map(const Cx& x);
CxMap zero_cx_map(const Cx& x, const Cx& y);
CxMap compose(const CxMap& g, const CxMap& f);
CxMap add(const CxMap& f, const CxMap& g);
CxMap scale(const CxMap& f, const Rat& c);
bool is_chain_map(const CxMap& f);

// Mapping cone C(f)^k = X^{k+1} + Y^k with d = [[-d_X, 0], [f, d_Y]] and the
// triangle X -> Y -> C(f) -> X[1].
struct Cone {
  Cx obj;
  CxMap incl;  // Y -> C(f)
  CxMap proj;  // C(f) -> X[1]
};
Cone cone(const CxMap& f);

// C(f)[-1] with its projection to the source of f: fib -> X -> Y.
struct Fiber {
  Cx obj;
  CxMap proj;
};
Fiber fiber(const CxMap& f);

struct CxSum {
  Cx obj;
  CxMap inj_a;
  CxMap inj_b;
  CxMap proj_a;
  CxMap proj_b;
};
CxSum direct_sum(const Cx& a, const Cx& b);

struct CohomologyData {
  KernelResult cycles;
  CokernelResult classes;  // cycles -> H^i
};
CohomologyData cohomology_data(const Cx& x, int i);
Rep heart_cohomology(const Cx& x, int i);
RepMap cohomology_map(const CxMap& f, int i);
bool is_acyclic(const Cx& x);
// Cohomology concentrated in degree 0.
bool is_module_object(const Cx& x);

// Smart truncation: a has H^i(x) for i <= level, b the rest; a -> x -> b.
struct StdTruncation {
  Cx a;
  Cx b;
  CxMap a_to_x;
  CxMap x_to_b;
};
StdTruncation truncate_std(const Cx& x, int level);

// Homotopy-equivalent projective complex with no isomorphism components in
// its differential, with comparison maps both ways.
struct Minimal {
  Cx obj;
  CxMap to_orig;
  CxMap from_orig;
};
Minimal minimize(const Cx& p);

// Projective complex with a quasi-isomorphism onto x.
struct Resolution {
  Cx proj;
  CxMap quasi;
};
// Built degree by degree from projective covers of the cycles of the
// mapping cone; cached per complex (copies share the cache).
Resolution resolve(const Cx& x);
Cx proj_resolution(const Rep& m);

}  // namespace heartglue
