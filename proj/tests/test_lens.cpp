#include <doctest.h>

#include "catlens/enumerate.hpp"
#include "catlens/errors.hpp"
#include "catlens/lens.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catlens;

namespace {

CategoryPtr c2() {
  static auto c = share(codiscrete({"0", "1"}));
  return c;
}

FinLens swap_lens() {
  auto get = FinFunctor::from_names(c2(), c2(), {{"0", "1"}, {"1", "0"}},
                                    {{"0*0", "1*1"}, {"0*1", "1*0"}, {"1*0", "0*1"}, {"1*1", "0*0"}});
  auto put = FinCofunctor::from_names(c2(), c2(), {{"0", "1"}, {"1", "0"}},
                                      {{{"0", "1*1"}, "0*0"}, {{"0", "1*0"}, "0*1"}, {{"1", "0*0"}, "1*1"},
                                       {{"1", "0*1"}, "1*0"}});
  return FinLens(get, put);
}

}  // namespace

TEST_SUITE("lenses") {

TEST_CASE("identity and swap lenses are valid") {
  for (const auto& [name, c] : fixtures::small_corpus()) CHECK(validate_lens(identity_lens(c)).valid());
  CHECK(validate_lens(swap_lens()).valid());
}

TEST_CASE("constant get cannot satisfy put-get") {
  auto get = FinFunctor::from_names(c2(), c2(), {{"0", "0"}, {"1", "0"}},
                                    {{"0*0", "0*0"}, {"0*1", "0*0"}, {"1*0", "0*0"}, {"1*1", "0*0"}});
  CHECK(validate_functor(get).valid());
  std::size_t candidates = 0;
  oracle::for_each_lift_assignment(*c2(), *c2(), get.object_map(), [&](const std::vector<Index>& lift) {
    ++candidates;
    FinLens lens(get, FinCofunctor(c2(), c2(), get.object_map(), lift, infer_p0(*c2(), lift)));
    auto report = validate_lens(lens);
    CHECK_FALSE(report.valid());
    bool witnessed = false;
    for (const auto& v : report.violations()) {
      if (v.law == "put-get" && v.witness[1] == "0*1") witnessed = true;
    }
    CHECK(witnessed);
  });
  CHECK(candidates == 16);
}

TEST_CASE("get and put over different categories is a structural error") {
  auto one = share(codiscrete({"x"}));
  CHECK_THROWS_AS(FinLens(identity_functor(c2()), identity_cofunctor(one)), StructuralError);
}

TEST_CASE("triangles") {
  auto t = lens_triangle(identity_lens(c2()));
  CHECK(t.left.morphism_map() == std::vector<Index>{0, 1, 2, 3});
  CHECK(t.right.morphism_map() == std::vector<Index>{0, 1, 2, 3});
  CHECK(t.base == identity_functor(c2()));
  for (const auto& [na, a] : fixtures::small_corpus()) {
    for (const auto& [nb, b] : fixtures::small_corpus()) {
      for (const auto& f : enumerate_dopfs(a, b)) {
        auto tri = lens_triangle(dopf_to_lens(f));
        auto m = tri.left.morphism_map();
        std::sort(m.begin(), m.end());
        CHECK(std::adjacent_find(m.begin(), m.end()) == m.end());
        CHECK(m.size() == a->morphism_count());
      }
    }
  }
}

TEST_CASE("composition examples") {
  auto l = swap_lens();
  CHECK(compose_lenses(l, identity_lens(c2())) == l);
  CHECK(compose_lenses(identity_lens(c2()), l) == l);
  CHECK(compose_lenses(l, l) == identity_lens(c2()));
  auto one = share(codiscrete({"x"}));
  CHECK_THROWS_AS(compose_lenses(l, identity_lens(one)), BoundaryMismatch);
}

TEST_CASE("dopf lenses") {
  CHECK(dopf_to_lens(identity_functor(c2())) == identity_lens(c2()));
  auto swap = share(fixtures::swap_groupoid());
  auto z2 = share(fixtures::cyclic_group(2));
  auto act = FinFunctor::from_names(swap, z2, {{"x", "*"}, {"y", "*"}},
                                    {{"idx", "e"}, {"idy", "e"}, {"sx", "r1"}, {"sy", "r1"}});
  CHECK(validate_lens(dopf_to_lens(act)).valid());
  auto one = share(codiscrete({"x"}));
  try {
    dopf_to_lens(fixtures::to_terminal(c2(), one));
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(e.report().count("unique-lift") == 2);
    CHECK(e.report().violations()[0].witness[2] == "2");
  }
}

TEST_CASE("dopf lenses form a wide subcategory") {
  auto corpus = fixtures::small_corpus();
  for (const auto& [na, a] : corpus) {
    CHECK(dopf_to_lens(identity_functor(a)) == identity_lens(a));
    for (const auto& [nb, b] : corpus) {
      auto fs = enumerate_dopfs(a, b);
      for (const auto& f : fs) CHECK(validate_lens(dopf_to_lens(f)).valid());
      if (fs.empty()) continue;
      for (const auto& [nc, c] : corpus) {
        for (const auto& g : enumerate_dopfs(b, c)) {
          for (const auto& f : fs) {
            auto composite = compose_lenses(dopf_to_lens(f), dopf_to_lens(g));
            CHECK(composite == dopf_to_lens(compose_functors(f, g)));
            CHECK(is_discrete_opfibration(composite.get()));
          }
        }
      }
      // Lenses whose put is dopf-induced correspond to dopfs.
      std::size_t induced = 0;
      for (const auto& lens : enumerate_lenses(a, b)) {
        if (is_discrete_opfibration(lens.get()) && dopf_to_lens(lens.get()) == lens) ++induced;
      }
      CHECK(induced == fs.size());
    }
  }
}

TEST_CASE("enumeration counts") {
  auto c1 = share(codiscrete({"x"}));
  auto c3 = share(codiscrete({"a", "b", "c"}));
  CHECK(enumerate_lenses(c2(), c1).size() == 1);
  CHECK(enumerate_lenses(c2(), c2()).size() == 2);
  CHECK(enumerate_lenses(c3, c3).size() == 6);
  CHECK(enumerate_lenses(share(interval(1)), c1).size() == 1);
  CHECK(enumerate_dopfs(share(interval(1)), c1).size() == 0);
  CHECK_THROWS_AS(enumerate_lenses(c3, c3, 10), GuardExceeded);
}

TEST_CASE("internal lens laws agree with the classical d-lens laws") {
  for (const auto& [na, a] : fixtures::small_corpus()) {
    for (const auto& [nb, b] : fixtures::small_corpus()) {
      CAPTURE(na);
      CAPTURE(nb);
      std::size_t lawful = 0;
      for (const auto& get : oracle::all_functors(*a, *b)) {
        FinFunctor f(a, b, get.f0, get.f1);
        oracle::for_each_lift_assignment(*a, *b, get.f0, [&](const std::vector<Index>& lift) {
          FinLens lens(f, FinCofunctor(a, b, get.f0, lift, infer_p0(*a, lift)));
          bool classical = oracle::dlens_laws(*a, *b, get, lift);
          CHECK(validate_lens(lens).valid() == classical);
          if (classical) ++lawful;
        });
      }
      CHECK(enumerate_lenses(a, b).size() == lawful);
    }
  }
}

TEST_CASE("both composition routes agree; composition is associative and unital") {
  auto corpus = fixtures::small_corpus();
  std::vector<std::vector<std::vector<FinLens>>> all(corpus.size(), std::vector<std::vector<FinLens>>(corpus.size()));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) all[i][j] = enumerate_lenses(corpus[i].category, corpus[j].category);
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      for (const auto& l1 : all[i][j]) {
        CHECK(compose_lenses(l1, identity_lens(corpus[j].category)) == l1);
        CHECK(compose_lenses(identity_lens(corpus[i].category), l1) == l1);
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          for (const auto& l2 : all[j][k]) {
            CHECK(compose_puts_via_pullback(l1, l2) == compose_cofunctors(l1.put(), l2.put()));
            auto l12 = compose_lenses(l1, l2);
            CHECK(validate_lens(l12).valid());
            for (std::size_t m = 0; m < corpus.size(); ++m) {
              for (const auto& l3 : all[k][m]) {
                CHECK(compose_lenses(l12, l3) == compose_lenses(l1, compose_lenses(l2, l3)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("forgetful accessors commute") {
  for (const auto& [na, a] : fixtures::small_corpus()) {
    for (const auto& [nb, b] : fixtures::small_corpus()) {
      for (const auto& lens : enumerate_lenses(a, b)) {
        CHECK(lens.object_map() == lens.get().object_map());
        CHECK(lens.object_map() == lens.put().object_map());
      }
    }
  }
}

}  // TEST_SUITE
