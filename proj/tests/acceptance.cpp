// Runs every acceptance criterion, printing one PASS/FAIL line each.
// Usage: catlens_acceptance [path-to-catlens-binary]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catlens/double_category.hpp"
#include "catlens/enumerate.hpp"
#include "catlens/lens.hpp"
#include "catlens/state_lens.hpp"
#include "cli_support.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace catlens;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Collects the first few failures; a criterion passes only with none.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 3) failures_.push_back(what);
    ++failed_;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checks_ << " checks";
    if (failed_ > 0) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return {failed_ == 0 && checks_ > 0, s.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<fixtures::Named> bounded_corpus() {
  std::vector<fixtures::Named> out;
  auto all = fixtures::small_corpus();
  for (const auto& x : fixtures::larger_pool()) all.push_back(x);
  for (const auto& x : all) {
    if (x.category->object_count() <= 4 && x.category->morphism_count() <= 12) out.push_back(x);
  }
  return out;
}

template <class T>
using Grid = std::vector<std::vector<std::vector<T>>>;

Grid<FinCofunctor> corpus_cofunctors(const std::vector<fixtures::Named>& corpus) {
  Grid<FinCofunctor> all(corpus.size(), std::vector<std::vector<FinCofunctor>>(corpus.size()));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) all[i][j] = enumerate_cofunctors(corpus[i].category, corpus[j].category);
  }
  return all;
}

Grid<FinLens> corpus_lenses(const std::vector<fixtures::Named>& corpus) {
  Grid<FinLens> all(corpus.size(), std::vector<std::vector<FinLens>>(corpus.size()));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) all[i][j] = enumerate_lenses(corpus[i].category, corpus[j].category);
  }
  return all;
}

std::string pair_name(const std::vector<fixtures::Named>& c, std::size_t i, std::size_t j) {
  return c[i].name + "->" + c[j].name;
}

// Pullback legs are functors and the square commutes.
bool pullback_sound(const Pullback& pb, const FinFunctor& f, const FinFunctor& g) {
  return validate_category(*pb.apex).valid() && validate_functor(pb.left).valid() &&
         validate_functor(pb.right).valid() && compose_functors(pb.left, f) == compose_functors(pb.right, g);
}

// Comma legs are functors and the comparison to the arrow category sits over both.
bool comma_sound(const Comma& cm, const FinFunctor& f) {
  auto arrows_dom = arrow_domain_functor(cm.arrows, f.target_ptr());
  auto arrows_cod = arrow_codomain_functor(cm.arrows, f.target_ptr());
  return validate_category(*cm.apex).valid() && validate_functor(cm.left).valid() &&
         validate_functor(cm.right).valid() && validate_functor(cm.to_arrows).valid() &&
         compose_functors(cm.to_arrows, arrows_dom) == compose_functors(cm.left, f) &&
         compose_functors(cm.to_arrows, arrows_cod) == cm.right;
}

Outcome constructor_soundness() {
  Tally t;
  for (std::size_t n = 0; n <= 4; ++n) {
    t.expect(validate_category(codiscrete(numbered(n))).valid(), "codiscrete " + std::to_string(n));
    t.expect(validate_category(discrete(numbered(n))).valid(), "discrete " + std::to_string(n));
    if (n > 0) t.expect(validate_category(interval(n - 1)).valid(), "interval " + std::to_string(n));
  }
  auto corpus = bounded_corpus();
  auto terminal = share(codiscrete({"pt"}));
  std::size_t functors = 0;
  for (const auto& [name, c] : corpus) {
    t.expect(validate_category(*c).valid(), name);
    t.expect(validate_category(arrow_category(*c)).valid(), "arrow " + name);
    t.expect(validate_double_category(squares_double_category(c)).valid(), "squares " + name);
    auto id = identity_functor(c);
    auto bang = fixtures::to_terminal(c, terminal);
    t.expect(comma_sound(comma_category(id), id), "comma id " + name);
    t.expect(comma_sound(comma_category(bang), bang), "comma bang " + name);
    for (const auto& [other, d] : corpus) {
      auto bang_d = fixtures::to_terminal(d, terminal);
      t.expect(pullback_sound(pullback_category(bang, bang_d), bang, bang_d), "product " + name + "," + other);
    }
  }
  for (const auto& [na, a] : fixtures::small_corpus()) {
    for (const auto& [nb, b] : fixtures::small_corpus()) {
      auto id_b = identity_functor(b);
      for (const auto& f : enumerate_functors(a, b)) {
        ++functors;
        t.expect(pullback_sound(pullback_category(f, f), f, f), "pullback f,f " + na + "->" + nb);
        t.expect(pullback_sound(pullback_category(f, id_b), f, id_b), "pullback f,id " + na + "->" + nb);
        t.expect(comma_sound(comma_category(f), f), "comma " + na + "->" + nb);
      }
      for (const auto& phi : enumerate_cofunctors(a, b)) {
        t.expect(validate_category(lambda_category(phi)).valid(), "lambda " + na + "->" + nb);
      }
    }
  }
  std::mt19937_64 rng(20240601);
  auto pool = fixtures::larger_pool();
  std::size_t random_lambdas = 0;
  for (const auto& [na, a] : pool) {
    for (const auto& [nb, b] : pool) {
      if (auto phi = random_cofunctor(a, b, rng)) {
        ++random_lambdas;
        t.expect(validate_category(lambda_category(*phi)).valid(), "lambda " + na + "->" + nb);
      }
    }
  }
  return t.outcome(std::to_string(corpus.size()) + " base categories, " + std::to_string(functors) + " functors, " +
                   std::to_string(random_lambdas) + " random cofunctors");
}

// Cofunctors are generated here by the oracle, independently of the library search.
Outcome lambda_is_category() {
  Tally t;
  auto corpus = fixtures::small_corpus();
  for (const auto& [name, c] : corpus) {
    t.expect(c->object_count() <= 2 && c->morphism_count() <= 4, "corpus bound " + name);
  }
  std::size_t total = 0;
  for (const auto& [na, a] : corpus) {
    for (const auto& [nb, b] : corpus) {
      std::size_t lawful = 0;
      oracle::for_each_put_candidate(*a, *b, [&](const std::vector<Index>& phi0, const std::vector<Index>& lift) {
        if (!oracle::cofunctor_laws(*a, *b, phi0, lift)) return;
        ++lawful;
        FinCofunctor phi(a, b, phi0, lift, infer_p0(*a, lift));
        t.expect(validate_category(lambda_category(phi)).valid(), na + "->" + nb);
      });
      t.expect(enumerate_cofunctors(a, b).size() == lawful, "count " + na + "->" + nb);
      total += lawful;
    }
  }
  return t.outcome(std::to_string(total) + " cofunctors");
}

Outcome span_round_trip() {
  Tally t;
  auto corpus = fixtures::small_corpus();
  auto all = corpus_cofunctors(corpus);
  std::size_t exhaustive = 0;
  auto check = [&](const FinCofunctor& phi, const std::string& where) {
    auto span = span_of_cofunctor(phi);
    t.expect(cofunctor_from_span(span) == phi, "cofunctor " + where);
    auto renamed = fixtures::scramble(span);
    t.expect(canonical_span(span_of_cofunctor(cofunctor_from_span(renamed))) == canonical_span(renamed), "span " + where);
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      for (const auto& phi : all[i][j]) {
        ++exhaustive;
        check(phi, pair_name(corpus, i, j));
      }
    }
  }
  // Seeded random instances with at least one side from the larger pool.
  std::vector<fixtures::Named> sources = fixtures::larger_pool();
  std::vector<fixtures::Named> targets = fixtures::larger_pool();
  for (const auto& x : corpus) {
    if (x.category->object_count() > 0) targets.push_back(x);
  }
  std::mt19937_64 rng(7);
  std::size_t random = 0, attempts = 0;
  while (random < 500 && attempts < 100000) {
    ++attempts;
    const auto& a = sources[rng() % sources.size()];
    const auto& b = targets[rng() % targets.size()];
    if (auto phi = random_cofunctor(a.category, b.category, rng)) {
      t.expect(validate_cofunctor(*phi).valid(), "random lawful " + a.name + "->" + b.name);
      check(*phi, "random " + a.name + "->" + b.name);
      ++random;
    }
  }
  t.expect(random == 500, "500 random instances");
  return t.outcome(std::to_string(exhaustive) + " exhaustive and " + std::to_string(random) + " random cofunctors");
}

Outcome cofunctor_category_laws() {
  Tally t;
  auto corpus = fixtures::small_corpus();
  auto all = corpus_cofunctors(corpus);
  std::size_t triples = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto id_i = identity_cofunctor(corpus[i].category);
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      auto id_j = identity_cofunctor(corpus[j].category);
      for (const auto& phi : all[i][j]) {
        t.expect(compose_cofunctors(id_i, phi) == phi, "left unit " + pair_name(corpus, i, j));
        t.expect(compose_cofunctors(phi, id_j) == phi, "right unit " + pair_name(corpus, i, j));
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          for (const auto& gamma : all[j][k]) {
            auto pg = compose_cofunctors(phi, gamma);
            for (std::size_t l = 0; l < corpus.size(); ++l) {
              for (const auto& delta : all[k][l]) {
                ++triples;
                t.expect(compose_cofunctors(pg, delta) == compose_cofunctors(phi, compose_cofunctors(gamma, delta)),
                         "associativity " + pair_name(corpus, i, j) + "->" + corpus[k].name + "->" + corpus[l].name);
              }
            }
          }
        }
      }
    }
  }
  return t.outcome(std::to_string(triples) + " composable triples");
}

Outcome lens_coherence() {
  Tally t;
  auto corpus = fixtures::small_corpus();
  auto all = corpus_lenses(corpus);
  std::size_t pairs = 0, triples = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto id_i = identity_lens(corpus[i].category);
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      auto id_j = identity_lens(corpus[j].category);
      for (const auto& x : all[i][j]) {
        t.expect(compose_lenses(id_i, x) == x && compose_lenses(x, id_j) == x, "units " + pair_name(corpus, i, j));
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          for (const auto& y : all[j][k]) {
            ++pairs;
            auto xy = compose_lenses(x, y);
            t.expect(compose_puts_via_pullback(x, y) == xy.put(), "routes " + pair_name(corpus, i, j) + "->" + corpus[k].name);
            t.expect(xy.get() == compose_functors(x.get(), y.get()), "get " + pair_name(corpus, i, j));
            for (std::size_t l = 0; l < corpus.size(); ++l) {
              for (const auto& z : all[k][l]) {
                ++triples;
                t.expect(compose_lenses(xy, z) == compose_lenses(x, compose_lenses(y, z)), "associativity");
              }
            }
          }
        }
      }
    }
  }
  return t.outcome(std::to_string(pairs) + " composable pairs, " + std::to_string(triples) + " triples");
}

Outcome enumeration_counts() {
  Tally t;
  struct Case {
    std::string name;
    CategoryPtr a, b;
    std::size_t expected;
  };
  std::vector<Case> cases = {
      {"codiscrete(2)->codiscrete(1)", share(codiscrete(numbered(2))), share(codiscrete(numbered(1))), 1},
      {"codiscrete(2)->codiscrete(2)", share(codiscrete(numbered(2))), share(codiscrete(numbered(2))), 2},
      {"codiscrete(3)->codiscrete(3)", share(codiscrete(numbered(3))), share(codiscrete(numbered(3))), 6},
      {"interval(2 objects)->terminal", share(interval(1)), share(codiscrete(numbered(1))), 1},
  };
  std::ostringstream summary;
  for (const auto& c : cases) {
    auto library = enumerate_lenses(c.a, c.b).size();
    auto brute = oracle::all_lenses(*c.a, *c.b).size();
    t.expect(brute == c.expected, c.name + " oracle " + std::to_string(brute));
    t.expect(library == c.expected, c.name + " library " + std::to_string(library));
    summary << c.name << "=" << library << " ";
  }
  return t.outcome(summary.str());
}

Outcome dlens_agreement() {
  Tally t;
  auto corpus = fixtures::small_corpus();
  std::size_t candidates = 0, lawful = 0;
  for (const auto& [na, a] : corpus) {
    for (const auto& [nb, b] : corpus) {
      for (const auto& f : oracle::all_functors(*a, *b)) {
        FinFunctor get(a, b, f.f0, f.f1);
        oracle::for_each_lift_assignment(*a, *b, f.f0, [&](const std::vector<Index>& lift) {
          ++candidates;
          FinLens lens(get, FinCofunctor(a, b, f.f0, lift, infer_p0(*a, lift)));
          bool expected = oracle::dlens_laws(*a, *b, f, lift);
          if (expected) ++lawful;
          t.expect(validate_lens(lens).valid() == expected, na + "->" + nb);
        });
      }
    }
  }
  return t.outcome(std::to_string(candidates) + " candidates, " + std::to_string(lawful) + " lenses");
}

Outcome state_lens_embedding() {
  Tally t;
  std::vector<std::vector<std::vector<StateLens>>> all(4, std::vector<std::vector<StateLens>>(4));
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) all[n][m] = fixtures::all_state_lenses(n, m);
  }
  std::size_t pairs = 0;
  for (int n = 0; n <= 3; ++n) {
    std::vector<std::string> els;
    for (int i = 0; i < n; ++i) els.push_back("e" + std::to_string(i));
    t.expect(state_lens_to_internal(identity_state_lens(els)) == identity_lens(share(codiscrete(els))),
             "identity " + std::to_string(n));
    for (int m = 0; m <= 3; ++m) {
      for (const auto& s1 : all[n][m]) {
        t.expect(validate_lens(state_lens_to_internal(s1)).valid(), "image lawful");
        for (int k = 0; k <= 3; ++k) {
          for (const auto& s2 : all[m][k]) {
            ++pairs;
            t.expect(state_lens_to_internal(compose_state_lenses(s1, s2)) ==
                         compose_lenses(state_lens_to_internal(s1), state_lens_to_internal(s2)),
                     "composite " + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k));
          }
        }
      }
    }
  }
  return t.outcome(std::to_string(pairs) + " composable pairs");
}

Outcome dopf_wide_subcategory() {
  Tally t;
  auto corpus = fixtures::small_corpus();
  Grid<FinFunctor> all(corpus.size(), std::vector<std::vector<FinFunctor>>(corpus.size()));
  std::size_t dopfs = 0, pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i].category;
    t.expect(dopf_to_lens(identity_functor(c)) == identity_lens(c), "identity " + corpus[i].name);
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      all[i][j] = enumerate_dopfs(c, corpus[j].category);
      for (const auto& f : all[i][j]) {
        ++dopfs;
        t.expect(validate_lens(dopf_to_lens(f)).valid(), "lawful " + pair_name(corpus, i, j));
      }
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        for (const auto& f : all[i][j]) {
          for (const auto& g : all[j][k]) {
            ++pairs;
            t.expect(dopf_to_lens(compose_functors(f, g)) == compose_lenses(dopf_to_lens(f), dopf_to_lens(g)),
                     "composite " + pair_name(corpus, i, j) + "->" + corpus[k].name);
          }
        }
      }
    }
  }
  return t.outcome(std::to_string(dopfs) + " dopfs, " + std::to_string(pairs) + " composable pairs");
}

Outcome clens_check() {
  Tally t;
  std::vector<fixtures::Named> factors = {
      {"terminal", share(codiscrete({"x"}))},
      {"discrete2", share(discrete({"p", "q"}))},
      {"interval1", share(interval(1))},
      {"codiscrete2", share(codiscrete({"p", "q"}))},
      {"z2", share(fixtures::cyclic_group(2))},
      {"idempotent", share(fixtures::idempotent_monoid())},
  };
  std::size_t instances = 0;
  for (const auto& [nx, x] : factors) {
    for (const auto& [nf, fib] : factors) {
      std::string where = nx + "x" + nf;
      auto p = fixtures::product_split_opfibration(x, fib);
      const auto& f = p.pb.left;
      t.expect(split_opfibration_report(f, p.lifts).valid(), "split opfibration " + where);
      auto comma = comma_category(f);
      auto put = put_from_lift_table(f, comma, p.lifts);
      auto tri = clens_to_internal_lens(f, put);
      ++instances;
      t.expect(compose_double_functors(tri.phi, tri.get) == tri.phibar, "triangle " + where);
      t.expect(tri.phi_count == 1, "phi unique " + where + " (" + std::to_string(tri.phi_count) + ")");
      t.expect(tri.phibar_count == 1, "phibar unique " + where + " (" + std::to_string(tri.phibar_count) + ")");
      t.expect(internal_dopf_report(tri.phibar).valid(), "internal dopf " + where);
    }
  }
  return t.outcome(std::to_string(instances) + " product projections");
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

// Each fixture is run twice in separate processes when the binary is known.
Outcome cli_determinism(const std::string& binary) {
  Tally t;
  auto dir = clisupport::scratch_dir("acceptance-cli");
  clisupport::write_inputs(dir);
  auto cmds = clisupport::artifact_commands(dir);
  auto run_once = [&](const std::vector<std::string>& cmd) {
    if (binary.empty()) return clisupport::run(cmd).code;
    std::string line = quote(binary);
    for (const auto& a : cmd) line += " " + quote(a);
    line += " >/dev/null";
    return std::system(line.c_str()) == 0 ? 0 : 1;
  };
  for (const auto& cmd : cmds) {
    const std::string& out = cmd.back();
    t.expect(run_once(cmd) == 0, "first run " + cmd[1]);
    auto first = clisupport::slurp(out);
    std::filesystem::remove(out);
    t.expect(run_once(cmd) == 0, "second run " + cmd[1]);
    t.expect(clisupport::slurp(out) == first, "bytes differ: " + cmd[0] + " " + cmd[1] + " -> " + out);
  }
  std::filesystem::remove_all(dir);
  return t.outcome(std::to_string(cmds.size()) + " fixtures" + (binary.empty() ? " in process" : " in separate processes"));
}

}  // namespace

int main(int argc, char** argv) {
  std::string binary = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria = {
      {"constructor-soundness", 10, constructor_soundness},
      {"lambda-is-category", 30, lambda_is_category},
      {"span-round-trip", 30, span_round_trip},
      {"cofunctor-composition-laws", 60, cofunctor_category_laws},
      {"lens-composition-coherence", 30, lens_coherence},
      {"lens-enumeration-counts", 10, enumeration_counts},
      {"dlens-agreement", 60, dlens_agreement},
      {"state-lens-embedding", 10, state_lens_embedding},
      {"dopf-wide-subcategory", 10, dopf_wide_subcategory},
      {"clens-internal-lens", 60, clens_check},
      {"cli-determinism", 10, [&] { return cli_determinism(binary); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds <= c.limit_seconds;
    bool pass = o.pass && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << " (" << timing << (in_time ? "" : ", over the limit") << "): "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
