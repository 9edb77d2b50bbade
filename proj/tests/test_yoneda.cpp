#include "doctest.h"
#include "support.hpp"

using namespace hgtest;

namespace {

std::vector<Rep> sp_modules(const AlgebraPtr& a) {
  std::vector<Rep> out;
  for (int i = 1; i <= a->vertices(); ++i) {
    out.push_back(simple(a, i));
    out.push_back(projective(a, i));
  }
  return out;
}

}  // namespace

TEST_SUITE("yoneda") {

TEST_CASE("splice and f_map are inverse on simples and projectives") {
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    auto mods = sp_modules(a);
    for (const auto& m : mods)
      for (const auto& n : mods)
        for (int deg = 1; deg <= 3; ++deg) {
          DHomPtr sp = derived_hom(module_cx(m), module_cx(n), deg);
          for (std::size_t k = 0; k < sp->dim(); ++k) {
            DHomClass c = basis_class(sp, k);
            YExt x = splice_from_class(c);
            validate(x);
            CHECK(x.n == deg);
            CHECK(f_map(x, sp).coords == c.coords);
          }
        }
  }
}

TEST_CASE("f_map of a short exact sequence is its connecting class") {
  Gen g(51);
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    for (int t = 0; t < 6; ++t) {
      Ses s = g.ses(a);
      YExt x = yext_from_ses(s);
      validate(x);
      Triangle tr = ses_to_triangle(s);
      DHomClass f = f_map(x, tr.w.space);
      CHECK(f.coords == tr.w.coords);
    }
  }
}

TEST_CASE("split sequences map to zero") {
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    auto mods = sp_modules(a);
    for (const auto& m : mods)
      for (const auto& n : mods)
        for (int deg = 1; deg <= 2; ++deg) CHECK(f_map(split_yext(m, n, deg)).is_zero());
  }
}

TEST_CASE("round trip through splice preserves the Yoneda class") {
  Gen g(52);
  AlgebraPtr a = algebra("kronecker");
  for (int t = 0; t < 10; ++t) {
    Ses s = g.ses(a);
    YClass c = make_yclass(yext_from_ses(s));
    YClass d = make_yclass(splice_from_class(c.canonical));
    CHECK(same_class(c, d));
  }
}

TEST_CASE("Baer sum and scalar multiple are linear under f_map") {
  Gen g(53);
  for (const std::string name : {"kronecker", "a3_rel"}) {
    AlgebraPtr a = algebra(name);
    int done = 0;
    for (int t = 0; t < 40 && done < 8; ++t) {
      Rep m = g.coin() ? simple(a, g.uniform(2, a->vertices())) : g.module(a);
      Rep n = g.coin() ? simple(a, g.uniform(1, a->vertices() - 1)) : g.module(a);
      int deg = g.uniform(1, 2);
      DHomPtr sp = derived_hom(module_cx(m), module_cx(n), deg);
      if (sp->dim() == 0) continue;
      DHomClass c1 = g.cls(sp), c2 = g.cls(sp);
      YExt x = splice_from_class(c1), y = splice_from_class(c2);
      CHECK(f_map(baer_sum(x, y), sp).coords == class_add(c1, c2).coords);
      Rat s = g.nonzero();
      CHECK(f_map(scalar_multiple(x, s), sp).coords == class_scale(c1, s).coords);
      ++done;
    }
    CHECK(done > 0);
  }
}

TEST_CASE("pushout and pullback act by composition") {
  Gen g(54);
  AlgebraPtr a = algebra("comm_square");
  int done = 0;
  for (int t = 0; t < 60 && done < 8; ++t) {
    Rep m = simple(a, g.uniform(2, a->vertices()));
    Rep n = g.module(a), c = g.module(a), d = g.module(a);
    DHomPtr sp = derived_hom(module_cx(m), module_cx(n), 1);
    if (sp->dim() == 0) continue;
    YExt x = splice_from_class(g.cls(sp));
    RepMap gb = g.map(n, c);
    RepMap ha = g.map(d, m);
    CxMap cg{module_cx(n), module_cx(c), {{0, gb}}};
    CxMap ch{module_cx(d), module_cx(m), {{0, ha}}};
    DHomClass fx = f_map(x);
    DHomClass push = f_map(pushout_action(gb, x));
    DHomClass pull = f_map(pullback_action(x, ha));
    CHECK(push.coords == compose(class_of_chain_map(cg), fx, push.space).coords);
    CHECK(pull.coords == compose(fx, class_of_chain_map(ch), pull.space).coords);
    ++done;
  }
  CHECK(done > 0);
}

TEST_CASE("Yoneda product goes to composition") {
  Gen g(55);
  int total = 0, nonzero = 0;
  for (const auto& name : corpus()) {
    AlgebraPtr a = algebra(name);
    int nv = a->vertices();
    std::vector<Rep> mods;
    for (int i = 1; i <= nv; ++i) mods.push_back(simple(a, i));
    for (int i = 1; i < nv; ++i) mods.push_back(direct_sum(simple(a, i), simple(a, i + 1)).obj);
    for (int t = 0; t < 3; ++t) mods.push_back(g.module(a));
    std::vector<Cx> cxs;
    for (const auto& m : mods) cxs.push_back(module_cx(m));
    for (std::size_t x = 0; x < mods.size(); ++x)
      for (std::size_t y = 0; y < mods.size(); ++y)
        for (std::size_t z = 0; z < mods.size(); ++z)
          for (int p = 1; p <= 2; ++p)
            for (int q = 1; p + q <= 3; ++q) {
              DHomPtr s1 = derived_hom(cxs[x], cxs[y], p), s2 = derived_hom(cxs[y], cxs[z], q);
              if (s1->dim() == 0 || s2->dim() == 0) continue;
              DHomClass c1 = g.cls(s1), c2 = g.cls(s2);
              YExt xy = yoneda_product(splice_from_class(c1), splice_from_class(c2));
              validate(xy);
              DHomPtr target = derived_hom(cxs[x], cxs[z], p + q);
              DHomClass expect = compose(c2, c1, target);
              CAPTURE(name);
              CHECK(f_map(xy, target).coords == expect.coords);
              ++total;
              nonzero += expect.is_zero() ? 0 : 1;
            }
  }
  CHECK(total >= 10);
  CHECK(nonzero > 0);
}

}
