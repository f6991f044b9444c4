#include <doctest.h>

#include <algorithm>
#include <memory>

#include "ordbench/reduction.hpp"
#include "test_support.hpp"

using namespace ordbench;
using namespace ordbench::testing;

namespace {

OrderPtr two_antichain() {
  return std::make_shared<const Order>(Order::from_pairs(Order::Kind::poset, {"p", "q"}, {}));
}

OrderPtr fork_poset() {
  return std::make_shared<const Order>(
      Order::from_pairs(Order::Kind::poset, {"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
}

// a, b, c pairwise compatible through ab, bc, ac, but with no common lower
// bound of all three: the pinned "sat but not centred" example
OrderPtr triangle_poset() {
  return std::make_shared<const Order>(Order::from_pairs(
      Order::Kind::poset, {"a", "b", "c", "ab", "bc", "ac"},
      {{"ab", "a"}, {"ab", "b"}, {"bc", "b"}, {"bc", "c"}, {"ac", "a"}, {"ac", "c"}}));
}

// χ_G for a subset of the poset's elements
TotalFn chi(const Subset& G) { return TotalFn{G}; }

}  // namespace

TEST_CASE("is_centred and centred_witness") {
  OrderPtr P = two_antichain();
  CHECK(is_centred(*P, {P->subset_of({"p", "q"})}));
  CHECK_FALSE(is_centred(*P, {P->subset_of({"p"}), P->subset_of({"q"})}));
  CHECK(is_centred(*P, {}));

  CentredWitness w = centred_witness(*P, {P->subset_of({"p", "q"})});
  CHECK(w.witness == P->index_of("p"));
  CHECK(w.selection == std::vector<int>{P->index_of("p")});

  OrderPtr F = fork_poset();
  CentredWitness wf = centred_witness(*F, {F->subset_of({"c"})});
  CHECK(wf.witness == F->index_of("a"));
  CHECK(wf.selection == std::vector<int>{F->index_of("c")});

  CentredWitness we = centred_witness(*P, {});
  CHECK(we.witness == 0);
  CHECK(we.selection.empty());

  CHECK_ERRC(centred_witness(*P, {P->subset_of({"p"}), P->subset_of({"q"})}), not_centred);
}

TEST_CASE("is_centred single-witness form equals the all-subfamilies form") {
  Rng rng(2023);
  for (int trial = 0; trial < 60; ++trial) {
    Order built = random_poset(rng, 2 + trial % 5);
    auto P = std::make_shared<const Order>(std::move(built));
    std::vector<Subset> family = random_antichain_family(rng, *P, 1 + trial % 5, trial % 2 == 0);

    bool single = is_centred(*P, family);
    bool all_subfamilies = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << family.size()); ++mask) {
      std::vector<Subset> sub;
      for (std::size_t i = 0; i < family.size(); ++i)
        if ((mask >> i) & 1) sub.push_back(family[i]);
      if (!is_centred(*P, sub)) all_subfamilies = false;
    }
    CHECK(single == all_subfamilies);
  }
}

TEST_CASE("mess_from_poset membership matches the displayed clauses") {
  OrderPtr P = two_antichain();
  AntichainFamily family = make_antichain_family(P, {P->subset_of({"p", "q"})});
  Mess M = mess_from_poset(P, family);

  // 7 members: all 9 partials except (p↦0,q↦0) and (p↦1,q↦1)
  Mess mm = M.materialized();
  CHECK(mm.members().size() == 7);
  CHECK_FALSE(M.contains(PartialFn{P->full_subset(), P->empty_subset()}));
  CHECK_FALSE(M.contains(PartialFn{P->full_subset(), P->full_subset()}));
  CHECK(M.contains(PartialFn{P->full_subset(), P->subset_of({"p"})}));

  // empty family: the 1-set only needs to be 2-linked
  Mess M0 = mess_from_poset(P, AntichainFamily{P, {}});
  CHECK(M0.contains(PartialFn{P->empty_subset(), P->empty_subset()}));
  CHECK_FALSE(M0.contains(PartialFn{P->full_subset(), P->full_subset()}));
  OrderPtr F = fork_poset();
  Mess MF = mess_from_poset(F, AntichainFamily{F, {}});
  CHECK(MF.contains(PartialFn{F->subset_of({"a", "c"}), F->subset_of({"a", "c"})}));

  // the proof's covering member for F = {p,q}
  PartialFn w = coverage_witness(*P, family.members, P->full_subset());
  CHECK(w.domain == P->full_subset());
  CHECK(w.ones == P->subset_of({"p"}));
}

TEST_CASE("two_linked_from_consistent") {
  OrderPtr P = two_antichain();
  AntichainFamily family = make_antichain_family(P, {P->subset_of({"p", "q"})});
  Mess M = mess_from_poset(P, family);

  LinkedGenericSet g = two_linked_from_consistent(family, M, chi(P->subset_of({"p"})));
  CHECK(g.members == P->subset_of({"p"}));
  REQUIRE(g.certificates.size() == 1);
  CHECK(g.certificates[0].witness == P->index_of("p"));

  // all-zero is consistent when the family is empty
  AntichainFamily none{P, {}};
  Mess M0 = mess_from_poset(P, none);
  CHECK(two_linked_from_consistent(none, M0, chi(P->empty_subset())).members == P->empty_subset());

  OrderPtr F = fork_poset();
  AntichainFamily fam_ab = make_antichain_family(F, {F->subset_of({"a", "b"})});
  Mess MF = mess_from_poset(F, fam_ab);
  LinkedGenericSet gf = two_linked_from_consistent(fam_ab, MF, chi(F->subset_of({"a", "c"})));
  CHECK(gf.members == F->subset_of({"a", "c"}));

  // (p↦1,q↦1) breaks clause (i)
  CHECK_ERRC(two_linked_from_consistent(family, M, chi(P->full_subset())), not_consistent);
}

TEST_CASE("poset_from_mess on the worked messes") {
  // M = {ε, (x↦1)}: a 2-chain with A_∅ = {ε}, A_{x} = {(x↦1)}
  Mess m = Mess::extensional({"x"}, {PartialFn{Subset::of(1, {0}), Subset::of(1, {0})}}, true);
  MessPoset mp = poset_from_mess(m);
  CHECK(mp.order->size() == 2);
  CHECK(mp.order->label(0) == "{}");
  CHECK(mp.order->label(1) == "{x=1}");
  CHECK(mp.order->leq(1, 0));  // (x↦1) extends ε
  CHECK_FALSE(mp.order->leq(0, 1));
  REQUIRE(mp.antichains.members.size() == 2);
  CHECK(mp.antichains.members[0].count() == 1);
  CHECK(mp.antichains.members[1].count() == 1);

  // the 7-member mess: |A_{p,q}| = 2 ≤ 2²
  OrderPtr P = two_antichain();
  AntichainFamily family = make_antichain_family(P, {P->subset_of({"p", "q"})});
  MessPoset mp7 = poset_from_mess(mess_from_poset(P, family));
  CHECK(mp7.order->size() == 7);
  CHECK(mp7.antichains.members.back().count() == 2);

  // full mess on {x}: |A_{x}| = 2 is the tight bound
  std::vector<PartialFn> full_members;
  full_members.push_back(PartialFn{Subset::of(1, {0}), Subset(1)});
  full_members.push_back(PartialFn{Subset::of(1, {0}), Subset::of(1, {0})});
  MessPoset mp_full = poset_from_mess(Mess::extensional({"x"}, full_members, true));
  CHECK(mp_full.antichains.members.back().count() == 2);
}

TEST_CASE("consistent_from_two_linked") {
  Mess m = Mess::extensional({"x"}, {PartialFn{Subset::of(1, {0}), Subset::of(1, {0})}}, true);
  MessPoset mp = poset_from_mess(m);
  TotalFn f = consistent_from_two_linked(m, mp, mp.order->full_subset());
  CHECK(f.ones == Subset::of(1, {0}));

  // up-set of a full-domain member reproduces the member
  OrderPtr P = two_antichain();
  AntichainFamily family = make_antichain_family(P, {P->subset_of({"p", "q"})});
  Mess M7 = mess_from_poset(P, family);
  MessPoset mp7 = poset_from_mess(M7);
  int target = mp7.order->index_of("{p=1,q=0}");
  TotalFn f7 = consistent_from_two_linked(M7, mp7, mp7.order->up_set(target));
  CHECK(f7.ones == Subset::of(2, {0}));

  CHECK_ERRC(consistent_from_two_linked(m, mp, mp.order->subset_of({"{}"})), not_generic);
}

TEST_CASE("solve_two_linked_generic on the worked families") {
  OrderPtr P = two_antichain();
  TransversalResult sat =
      solve_two_linked_generic(make_antichain_family(P, {P->subset_of({"p", "q"})}));
  REQUIRE(sat.sat);
  CHECK(sat.solution->members == P->subset_of({"p"}));

  TransversalResult unsat = solve_two_linked_generic(
      make_antichain_family(P, {P->subset_of({"p"}), P->subset_of({"q"})}));
  CHECK_FALSE(unsat.sat);
  CHECK(unsat.conflict == std::vector<int>{0, 1});

  OrderPtr T = triangle_poset();
  AntichainFamily singles = make_antichain_family(
      T, {T->subset_of({"a"}), T->subset_of({"b"}), T->subset_of({"c"})});
  CHECK_FALSE(is_centred(*T, singles.members));
  TransversalResult tri = solve_two_linked_generic(singles);
  REQUIRE(tri.sat);
  CHECK(tri.solution->members == T->subset_of({"a", "b", "c"}));

  // an empty antichain is immediately unsatisfiable
  TransversalResult empty = solve_two_linked_generic(
      AntichainFamily{P, {P->subset_of({"p", "q"}), P->empty_subset()}});
  CHECK_FALSE(empty.sat);
  CHECK(empty.conflict == std::vector<int>{1});

  OrderPtr F = fork_poset();
  CHECK_ERRC(solve_two_linked_generic(AntichainFamily{F, {F->subset_of({"a", "c"})}}),
             invalid_family);
}

TEST_CASE("correspondence: 2-linked generic subsets are the consistent characteristic functions") {
  Rng rng(515);
  for (int trial = 0; trial < 40; ++trial) {
    Order built = random_poset(rng, 2 + trial % 5);
    auto P = std::make_shared<const Order>(std::move(built));
    AntichainFamily family{
        P, random_antichain_family(rng, *P, 1 + trial % 3, /*centred=*/trial % 2 == 0)};
    Mess M = mess_from_poset(P, family);
    for (const Subset& G : all_subsets(P->size())) {
      bool wanted = is_two_linked(*P, G);
      for (const Subset& A : family.members) wanted = wanted && G.intersects(A);
      CHECK(wanted == M.contains(chi(G).as_partial(P->size())));
    }
  }
}

TEST_CASE("round trip: consistent functions against 2-linked generic restriction sets") {
  Rng rng(99172);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::string> ground = letters(1 + trial % 3);
    Mess M = random_mess(rng, ground);
    MessPoset mp = poset_from_mess(M);
    for (const TotalFn& f : consistent_functions(M)) {
      // the restriction set of f inside the mess poset
      Subset G(mp.order->size());
      for (std::size_t i = 0; i < mp.members.size(); ++i)
        if ((f.ones & mp.members[i].domain) == mp.members[i].ones) G.set(static_cast<int>(i));
      TotalFn back = consistent_from_two_linked(M, mp, G);
      CHECK(back.ones == f.ones);
      for (std::size_t k = 0; k < mp.antichains.members.size(); ++k)
        CHECK((G & mp.antichains.members[k]).count() == 1);
    }
  }
}

TEST_CASE("centred families are always satisfiable") {
  Rng rng(61803);
  for (int trial = 0; trial < 60; ++trial) {
    Order built = random_poset(rng, 2 + trial % 6);
    auto P = std::make_shared<const Order>(std::move(built));
    AntichainFamily family{P, random_antichain_family(rng, *P, 1 + trial % 4, /*centred=*/true)};
    REQUIRE(is_centred(*P, family.members));
    CHECK(solve_two_linked_generic(family).sat);
  }
}

TEST_CASE("solver agrees with brute force and certificates re-validate") {
  Rng rng(8712);
  SolveOptions no_fast;
  no_fast.centred_fast_path = false;
  SolveOptions heuristic;
  heuristic.most_constrained_first = true;
  for (int trial = 0; trial < 120; ++trial) {
    Order built = random_poset(rng, 2 + trial % 7);
    auto P = std::make_shared<const Order>(std::move(built));
    AntichainFamily family{
        P, random_antichain_family(rng, *P, 1 + trial % 4, /*centred=*/trial % 3 == 0)};
    TransversalResult res = solve_two_linked_generic(family);
    CHECK(res.sat == brute_force_transversal(*P, family.members).has_value());
    CHECK(res.sat == solve_two_linked_generic(family, no_fast).sat);
    CHECK(res.sat == solve_two_linked_generic(family, heuristic).sat);
    if (res.sat) {
      CHECK(is_two_linked(*P, res.solution->members));
      for (const SolutionCertificate& c : res.solution->certificates) {
        CHECK(res.solution->members.test(c.witness));
        CHECK(family.members[static_cast<std::size_t>(c.antichain_index)].test(c.witness));
      }
    }
  }
}

TEST_CASE("streaming solver equals the one-shot backtracking solve") {
  Rng rng(40490);
  SolveOptions no_fast;
  no_fast.centred_fast_path = false;
  for (int trial = 0; trial < 80; ++trial) {
    Order built = random_poset(rng, 2 + trial % 6);
    auto P = std::make_shared<const Order>(std::move(built));
    std::vector<Subset> antichains =
        random_antichain_family(rng, *P, 1 + trial % 5, /*centred=*/trial % 2 == 0);

    TransversalSolver streaming(P);
    for (const Subset& A : antichains) streaming.add_antichain(A);
    TransversalResult one_shot = solve_two_linked_generic(AntichainFamily{P, antichains}, no_fast);

    CHECK(streaming.sat() == one_shot.sat);
    if (one_shot.sat) CHECK(streaming.result().solution->members == one_shot.solution->members);
  }
}
