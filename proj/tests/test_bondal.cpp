#include "doctest.h"
#include "support.hpp"

using namespace hgtest;

namespace {

std::vector<Cx> projectives(const AlgebraPtr& a) {
  std::vector<Cx> out;
  for (int i = 1; i <= a->vertices(); ++i) out.push_back(P(a, i));
  return out;
}

ExcSequence strong_seq(const std::vector<Cx>& es) {
  return check_sequence(es, true, default_window(*es.front().alg, es.size()));
}

}  // namespace

TEST_SUITE("bondal") {

TEST_CASE("endomorphism algebra of the projectives has the algebra's dimension") {
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    EndAlgebra ea = end_algebra(strong_seq(projectives(a)));
    CAPTURE(name);
    CHECK(ea.dim() == a->dim());
    CHECK(ea.associative);
    AlgebraIso iso = regular_iso(ea, a);
    CHECK(iso.ok());
  }
}

TEST_CASE("quiver presentation recovers the corpus quiver and relation count") {
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    EndAlgebra ea = end_algebra(strong_seq(projectives(a)));
    QuiverPresentation qp = quiver_presentation(ea);
    CAPTURE(name);
    CHECK(same_shape(qp.quiver, a->quiver()));
    CHECK(qp.relations.size() == a->relations().size());
    CHECK(qp.algebra->dim() == a->dim());
    CHECK(qp.certificate.ok());
  }
}

TEST_CASE("endomorphism algebra of a simple sequence") {
  // Over A2, <S2, S1[1]> is strong with Hom(S2, S1[1]) of dimension one.
  AlgebraPtr a = algebra("a2");
  EndAlgebra ea = end_algebra(strong_seq({S(a, 2), S(a, 1, 1)}));
  CHECK(ea.dim() == 3);
  QuiverPresentation qp = quiver_presentation(ea);
  CHECK(same_shape(qp.quiver, a->quiver()));
  CHECK(qp.certificate.ok());
}

TEST_CASE("non-strong sequences are refused") {
  AlgebraPtr a = algebra("a2");
  CHECK_THROWS_AS(end_algebra(check_sequence({S(a, 2), S(a, 1)}, true, symmetric_window(4))), BondalError);
  AlgebraPtr k = algebra("kronecker");
  CHECK_THROWS_AS(end_algebra(check_sequence({P(k, 2), P(k, 1)}, true, symmetric_window(4))), BondalError);
}

TEST_CASE("product on the endomorphism algebra is unital") {
  AlgebraPtr a = algebra("comm_square");
  EndAlgebra ea = end_algebra(strong_seq(projectives(a)));
  std::vector<Rat> one(ea.dim());
  for (std::size_t i = 0; i < ea.size(); ++i) {
    auto v = ea.to_global(i, i, ea.identity[i]);
    for (std::size_t k = 0; k < v.size(); ++k) one[k] += v[k];
  }
  for (std::size_t x = 0; x < ea.dim(); ++x) {
    std::vector<Rat> e(ea.dim());
    e[x] = 1;
    CHECK(ea.product(one, e) == e);
    CHECK(ea.product(e, one) == e);
  }
}

TEST_CASE("functor sends each generator to the projective with an explicit iso") {
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    auto es = projectives(a);
    ExcSequence s = strong_seq(es);
    BondalFunctor phi(s, s.window);
    for (std::size_t i = 0; i < es.size(); ++i) {
      RepMap c = phi.projective_certificate(i);
      CHECK(is_morphism(c));
      CHECK(is_iso(c));
      CHECK(same_rep(c.src, projective(phi.algebra(), static_cast<int>(i + 1))));
    }
  }
}

TEST_CASE("functor is faithful and full on random kronecker modules") {
  Gen g(71);
  AlgebraPtr a = algebra("kronecker");
  ExcSequence s = strong_seq(projectives(a));
  BondalFunctor phi(s, s.window);
  std::vector<std::pair<Cx, Cx>> sample;
  for (int t = 0; t < 10; ++t) sample.emplace_back(module_cx(g.module(a)), module_cx(g.module(a)));
  FaithfulFullReport r = faithful_full_check(phi, sample);
  CHECK(r.ok());
  REQUIRE(r.pairs.size() == sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    CHECK(r.pairs[i].hom_dim == oracle_hom_dim(sample[i].first.term(0), sample[i].second.term(0)));
}

TEST_CASE("functor respects composition") {
  Gen g(72);
  AlgebraPtr a = algebra("a3_rel");
  ExcSequence s = strong_seq(projectives(a));
  BondalFunctor phi(s, s.window);
  for (int t = 0; t < 8; ++t) {
    Rep l = g.module(a), m = g.module(a), n = g.module(a);
    RepMap f = g.map(l, m), h = g.map(m, n);
    CxMap cf{module_cx(l), module_cx(m), {{0, f}}};
    CxMap ch{module_cx(m), module_cx(n), {{0, h}}};
    DHomClass cf_c = class_of_chain_map(cf), ch_c = class_of_chain_map(ch);
    RepMap lhs = phi.apply(compose(ch_c, cf_c));
    RepMap rhs = compose(phi.apply(ch_c), phi.apply(cf_c));
    CHECK(equal(lhs, rhs));
    CHECK(is_morphism(lhs));
  }
}

TEST_CASE("functor refuses objects with higher homs from the generators") {
  AlgebraPtr a = algebra("kronecker");
  ExcSequence s = strong_seq(projectives(a));
  BondalFunctor phi(s, s.window);
  CHECK_THROWS_AS(phi.apply(P(a, 1, 1)), BondalError);
  CHECK(phi.apply(zero_cx(a)).is_zero());
}

TEST_CASE("module functor matches dimension vectors of Hom from the generators") {
  Gen g(73);
  AlgebraPtr a = algebra("comm_square");
  ExcSequence s = strong_seq(projectives(a));
  for (int t = 0; t < 6; ++t) {
    Rep m = g.module(a);
    Rep fm = module_functor(s, module_cx(m));
    for (int v = 1; v <= a->vertices(); ++v) CHECK(fm.dim(v) == m.dim(v));
  }
}

}
