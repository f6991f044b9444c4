#include <doctest.h>

#include <algorithm>
#include <memory>

#include "ordbench/error.hpp"
#include "ordbench/generic.hpp"
#include "test_support.hpp"

using namespace ordbench;
using namespace ordbench::testing;

namespace {

OrderPtr fork_poset() {
  return std::make_shared<const Order>(
      Order::from_pairs(Order::Kind::poset, {"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
}

OrderPtr two_chain() {
  return std::make_shared<const Order>(
      Order::from_pairs(Order::Kind::poset, {"0", "1"}, {{"0", "1"}}));
}

}  // namespace

TEST_CASE("principal_upset") {
  OrderPtr P = fork_poset();
  CHECK(principal_upset(*P, 0) == P->subset_of({"a", "c"}));
  Order isolated = Order::from_pairs(Order::Kind::poset, {"p", "q"}, {});
  CHECK(principal_upset(isolated, 0) == isolated.subset_of({"p"}));
  CHECK(principal_upset(*two_chain(), 0) == two_chain()->full_subset());
}

TEST_CASE("fully_generic_filters on the worked posets") {
  OrderPtr P = fork_poset();
  std::vector<Subset> expected{P->subset_of({"a", "c"}), P->subset_of({"b", "c"})};
  CHECK(fully_generic_filters(*P) == expected);

  Order single = Order::from_pairs(Order::Kind::poset, {"p"}, {});
  CHECK(fully_generic_filters(single) == std::vector<Subset>{single.full_subset()});

  Order pair = Order::from_pairs(Order::Kind::poset, {"a", "b"}, {});
  std::vector<Subset> singles{pair.subset_of({"a"}), pair.subset_of({"b"})};
  CHECK(fully_generic_filters(pair) == singles);

  FullyGenericOptions tiny;
  tiny.cap = 2;
  CHECK_ERRC(fully_generic_filters(*P, tiny), cap_exceeded);
}

TEST_CASE("fully_generic_filters: antichain basis agrees with the naive route") {
  Rng rng(314159);
  FullyGenericOptions naive;
  naive.naive = true;
  for (int trial = 0; trial < 60; ++trial) {
    Order P = random_poset(rng, 1 + trial % 6);
    CHECK(fully_generic_filters(P) == fully_generic_filters(P, naive));
  }
}

TEST_CASE("check_lemma_2_2 on the worked posets") {
  CHECK(check_lemma_2_2(*fork_poset()));
  CHECK(check_lemma_2_2(Order::from_pairs(Order::Kind::poset, {"p"}, {})));
  // two forks glued at a common top
  Order glued = Order::from_pairs(Order::Kind::poset, {"a", "b", "c", "t"},
                                  {{"a", "t"}, {"b", "t"}, {"c", "t"}});
  CHECK(check_lemma_2_2(glued));
  CHECK_ERRC(check_lemma_2_2(*two_chain()), not_semi_separative);
}

TEST_CASE("check_lemma_2_2 exhaustively to 4 elements and on random larger posets") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Order& P : enumerate_posets(n))
      if (is_semi_separative(P)) CHECK(check_lemma_2_2(P));

  Rng rng(271828);
  int found = 0;
  while (found < 100) {
    Order P = random_poset(rng, 5 + found % 2);
    if (!is_semi_separative(P)) continue;
    ++found;
    CHECK(check_lemma_2_2(P));
  }
}

TEST_CASE("find_generic_filter follows the chain construction") {
  OrderPtr P = fork_poset();
  GenericFilter g = find_generic_filter(make_dense_family(P, {P->subset_of({"a", "b"})}));
  CHECK(g.members == P->subset_of({"a", "c"}));
  REQUIRE(g.certificates.size() == 1);
  CHECK(g.certificates[0].witness == P->index_of("a"));

  // empty family: principal up-set of the canonically first minimal element
  GenericFilter empty_family = find_generic_filter(DenseFamily{P, {}});
  CHECK(empty_family.members == P->subset_of({"a", "c"}));

  OrderPtr C = two_chain();
  GenericFilter chain = find_generic_filter(
      make_dense_family(C, {C->subset_of({"0"}), C->full_subset()}));
  CHECK(chain.members == C->full_subset());

  CHECK_ERRC(find_generic_filter(DenseFamily{P, {P->subset_of({"c"})}}), not_dense);
}

TEST_CASE("find_generic_filter output re-validates") {
  Rng rng(8888);
  for (int trial = 0; trial < 60; ++trial) {
    Order built = random_order(rng, 1 + trial % 7);
    auto P = std::make_shared<const Order>(std::move(built));
    std::vector<Subset> dense;
    for (const Subset& S : all_subsets(P->size()))
      if (is_dense(*P, S) && dense.size() < 4) dense.push_back(S);
    std::shuffle(dense.begin(), dense.end(), rng);
    GenericFilter g = find_generic_filter(make_dense_family(P, dense));
    CHECK(is_filter(*P, g.members));
    for (const FilterCertificate& c : g.certificates) {
      CHECK(g.members.test(c.witness));
      CHECK(dense[static_cast<std::size_t>(c.family_index)].test(c.witness));
    }
  }
}

TEST_CASE("max_antichain") {
  OrderPtr P = fork_poset();
  CHECK(max_antichain(*P) == P->subset_of({"a", "b"}));

  Order chain3 = Order::from_pairs(Order::Kind::poset, {"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(max_antichain(chain3) == chain3.subset_of({"x"}));

  // diamond: everything is pairwise compatible through bot, so singletons only
  Order diamond = Order::from_pairs(Order::Kind::poset, {"bot", "l", "r", "top"},
                                    {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
  CHECK(max_antichain(diamond) == diamond.subset_of({"bot"}));
}

TEST_CASE("compatibility_class") {
  OrderPtr P = fork_poset();
  CHECK(compatibility_class(*P, 0) == P->subset_of({"a", "c"}));
  Order T = Order::from_pairs(Order::Kind::preorder, {"a", "b", "c"},
                              {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(compatibility_class(T, 0) == T.full_subset());
  Order pair = Order::from_pairs(Order::Kind::poset, {"a", "b"}, {});
  CHECK(compatibility_class(pair, 0) == pair.subset_of({"a"}));
}

TEST_CASE("directedness_dense_set") {
  OrderPtr P = fork_poset();
  CHECK(directedness_dense_set(*P, 0, 1) == P->subset_of({"a", "b"}));
  CHECK(is_dense(*P, directedness_dense_set(*P, 0, 1)));
  // q = r: extensions of q together with everything incompatible
  Subset D = directedness_dense_set(*P, 2, 2);
  CHECK(D == P->full_subset());
  OrderPtr C = two_chain();
  CHECK(directedness_dense_set(*C, 0, 1) == C->subset_of({"0"}));
}

TEST_CASE("directedness_dense_set is dense on random orders") {
  Rng rng(5150);
  for (int trial = 0; trial < 120; ++trial) {
    Order P = random_order(rng, 1 + trial % 10);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(P.size()) - 1);
    int q = pick(rng);
    int r = pick(rng);
    CHECK(is_dense(P, directedness_dense_set(P, q, r)));
  }
}

TEST_CASE("maximum-antichain compatibility classes behave like generic filters") {
  Rng rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    Order P = random_order(rng, 1 + trial % 6);
    Subset A = max_antichain(P);
    A.for_each([&](int p) {
      Subset G = compatibility_class(P, p);
      CHECK(is_two_linked(P, G));
      CHECK(G.contains(P.up_set(p)));
      bool upward_closed = true;
      G.for_each([&](int q) { upward_closed = upward_closed && G.contains(P.up_set(q)); });
      CHECK(upward_closed);
      for (const Subset& D : all_subsets(P.size()))
        if (is_dense(P, D)) CHECK(G.intersects(D));
    });
  }
}
