#include <doctest.h>

#include <algorithm>

#include "ordbench/mess.hpp"
#include "test_support.hpp"

using namespace ordbench;
using namespace ordbench::testing;

namespace {

PartialFn pf(std::size_t n, const std::vector<int>& dom, const std::vector<int>& one_positions) {
  return PartialFn{Subset::of(n, dom), Subset::of(n, one_positions)};
}

}  // namespace

TEST_CASE("build_mess validates both clauses") {
  // {ε, (x↦1)} is a mess on {x}
  Mess m = Mess::extensional({"x"}, {pf(1, {}, {}), pf(1, {0}, {0})}, false);
  CHECK(m.members().size() == 2);

  // close=true reaches the same mess from the single full member
  Mess closed = Mess::extensional({"x"}, {pf(1, {0}, {0})}, true);
  CHECK(closed.members() == m.members());

  // a missing restriction is rejected without close
  CHECK_ERRC(Mess::extensional({"x", "y"}, {pf(2, {0, 1}, {0})}, false), not_restriction_closed);

  // dropping every function with domain {x,y} breaks coverage at {x,y}
  std::vector<PartialFn> partials;
  for (const Subset& F : shortlex_domains(2)) {
    if (F.count() == 2) continue;
    std::vector<int> elems = F.elements();
    for (const Subset& ones : all_subsets(2)) {
      if (!F.contains(ones)) continue;
      partials.push_back(PartialFn{F, ones});
    }
  }
  try {
    Mess::extensional({"x", "y"}, partials, false);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::coverage_gap);
    CHECK(e.detail() == std::vector<std::string>{"x", "y"});
  }
}

TEST_CASE("consistent_functions lists the full-domain members") {
  Mess m = Mess::extensional({"x"}, {pf(1, {0}, {0})}, true);
  std::vector<TotalFn> fs = consistent_functions(m);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].ones == Subset::of(1, {0}));

  // all partial functions on {x, y}: every total function is consistent
  std::vector<PartialFn> everything;
  for (const Subset& F : shortlex_domains(2))
    for (const Subset& ones : all_subsets(2))
      if (F.contains(ones)) everything.push_back(PartialFn{F, ones});
  Mess full = Mess::extensional({"x", "y"}, everything, false);
  CHECK(consistent_functions(full).size() == 4);
}

TEST_CASE("mess_from_cnf membership and materialization") {
  // single clause (v1 ∨ v2): every partial except the all-zero total
  Cnf cnf{2, {{1, 2}}};
  Mess m = mess_from_cnf(cnf);
  CHECK_FALSE(m.is_extensional());
  CHECK(m.contains(pf(2, {0}, {})));
  CHECK_FALSE(m.contains(pf(2, {0, 1}, {})));
  CHECK(m.materialized().members().size() == 8);

  std::vector<TotalFn> fs = consistent_functions(m);
  std::vector<Subset> expected = truth_table(cnf);
  REQUIRE(fs.size() == 3);
  REQUIRE(expected.size() == 3);
  for (const TotalFn& f : fs)
    CHECK(std::count(expected.begin(), expected.end(), f.ones) == 1);

  // empty CNF on one variable: the full mess (3 members)
  Cnf empty{1, {}};
  CHECK(mess_from_cnf(empty).materialized().members().size() == 3);

  // contradictory units: coverage gap at {v1}
  Cnf contra{1, {{1}, {-1}}};
  try {
    mess_from_cnf(contra, /*validate=*/true);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::coverage_gap);
    CHECK(e.detail() == std::vector<std::string>{"v1"});
  }
  // lazy validation surfaces the same gap at solve time
  CHECK_ERRC(consistent_functions(mess_from_cnf(contra)), coverage_gap);
}

TEST_CASE("DIMACS parsing") {
  Cnf cnf = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3 0\n");
  CHECK(cnf.num_vars == 3);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.clauses[0] == std::vector<int>{1, -2});
  CHECK(cnf.clauses[1] == std::vector<int>{3});
  CHECK(cnf_variable_labels(cnf) ==
        std::vector<std::string>{"v1", "v2", "v3"});

  CHECK_ERRC(parse_dimacs("1 2 0\n"), parse_error);            // clause before header
  CHECK_ERRC(parse_dimacs("p cnf 1 1\n2 0\n"), parse_error);   // literal out of range
  CHECK_ERRC(parse_dimacs("p cnf 1 2\n1 0\n"), parse_error);   // clause count mismatch
}

TEST_CASE("random messes are restriction closed and never inconsistent") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> ground = letters(1 + trial % 4);
    Mess m = random_mess(rng, ground);
    for (const PartialFn& s : m.members()) {
      s.domain.for_each([&](int x) {
        Subset F = s.domain;
        F.reset(x);
        CHECK(m.contains(s.restrict_to(F)));
      });
    }
    // the finite Consistency Principle: some total function is consistent
    CHECK_FALSE(consistent_functions(m).empty());
  }
}

TEST_CASE("intensional and extensional CNF messes agree on membership") {
  Rng rng(777);
  std::uniform_int_distribution<int> var(1, 3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    Cnf cnf;
    cnf.num_vars = 3;
    int clause_count = trial % 3 + 1;
    for (int c = 0; c < clause_count; ++c) {
      std::vector<int> clause;
      for (int v = 1; v <= 3; ++v)
        if (coin(rng)) clause.push_back(coin(rng) ? v : -v);
      if (clause.empty()) clause.push_back(var(rng));
      cnf.clauses.push_back(clause);
    }
    Mess lazy = mess_from_cnf(cnf);
    try {
      Mess eager = lazy.materialized();
      for (const Subset& F : shortlex_domains(3))
        for (const Subset& ones : all_subsets(3)) {
          if (!F.contains(ones)) continue;
          PartialFn s{F, ones};
          CHECK(lazy.contains(s) == eager.contains(s));
        }
    } catch (const Error& e) {
      CHECK(e.code() == errc::coverage_gap);
    }
  }
}

TEST_CASE("cnf bridge matches the truth table") {
  Rng rng(31337);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 60; ++trial) {
    Cnf cnf;
    cnf.num_vars = 3;
    for (int c = 0; c < trial % 4; ++c) {
      std::vector<int> clause;
      for (int v = 1; v <= 3; ++v)
        if (coin(rng)) clause.push_back(coin(rng) ? v : -v);
      if (clause.empty()) clause.push_back(1);
      cnf.clauses.push_back(clause);
    }
    std::vector<Subset> expected = truth_table(cnf);
    try {
      std::vector<TotalFn> fs = consistent_functions(mess_from_cnf(cnf));
      REQUIRE(fs.size() == expected.size());
      for (const TotalFn& f : fs)
        CHECK(std::count(expected.begin(), expected.end(), f.ones) == 1);
    } catch (const Error& e) {
      CHECK(e.code() == errc::coverage_gap);
      CHECK(expected.empty());
    }
  }
}
