#pragma once

#include <optional>
#include <random>
#include <vector>

#include "ordbench/error.hpp"
#include "ordbench/mess.hpp"
#include "ordbench/order.hpp"

// asserts that `expr` throws ordbench::Error with the given code
#define CHECK_ERRC(expr, expected)                          \
  do {                                                      \
    bool thrown_ = false;                                   \
    try {                                                   \
      (void)(expr);                                         \
    } catch (const ordbench::Error& e_) {                   \
      thrown_ = true;                                       \
      CHECK(e_.code() == ordbench::errc::expected);         \
    }                                                       \
    CHECK_MESSAGE(thrown_, "expected " #expected " error"); \
  } while (0)

namespace ordbench::testing {

// ---- naive oracles, written against the definitions only ----

bool oracle_compatible(const Order& P, int p, int q);
bool oracle_antichain(const Order& P, const std::vector<int>& elems);
bool oracle_dense(const Order& P, const std::vector<int>& elems);

// all subsets of {0..n-1} in mask order
std::vector<Subset> all_subsets(std::size_t n);

// exhaustive transversal search over the product of the antichains
std::optional<std::vector<int>> brute_force_transversal(const Order& P,
                                                        const std::vector<Subset>& antichains);

// satisfying assignments of a CNF by truth table, as value bitsets
std::vector<Subset> truth_table(const Cnf& cnf);

// ---- generators ----

using Rng = std::mt19937_64;

std::vector<std::string> letters(std::size_t n);  // "e0", "e1", ...

// every labeled poset on n elements (reflexive-transitive-antisymmetric
// relations), via brute force over the off-diagonal masks
std::vector<Order> enumerate_posets(std::size_t n);

Order random_poset(Rng& rng, std::size_t n, double edge_probability = 0.4);
Order random_order(Rng& rng, std::size_t n, double edge_probability = 0.4);  // poset or preorder

// random antichain family, optionally centred via a random witness
std::vector<Subset> random_antichain_family(Rng& rng, const Order& P, std::size_t count,
                                            bool centred);

// random extensional mess: one random nonempty member set per domain, closed
Mess random_mess(Rng& rng, const std::vector<std::string>& ground);

}  // namespace ordbench::testing
