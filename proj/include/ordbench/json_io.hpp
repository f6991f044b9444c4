#pragma once

#include <nlohmann/json.hpp>

#include "ordbench/choice.hpp"
#include "ordbench/generic.hpp"
#include "ordbench/hahn_banach.hpp"
#include "ordbench/mess.hpp"
#include "ordbench/order.hpp"
#include "ordbench/reduction.hpp"

#if !defined(NLOHMANN_JSON_VERSION_MAJOR)
#error "vendored nlohmann/json expected on the include path"
#endif

namespace ordbench {

// Insertion-ordered documents keep output byte-stable.
using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);  // wraps parse failures in parse_error

// {"kind":"poset"|"preorder","elements":[...],"leq":[[x,y],...]}
Json order_to_json(const Order& P);
OrderPtr order_from_json(const Json& j, std::size_t cap = kDefaultOrderCap);

// subsets are name lists
Json subset_to_json(const Order& P, const Subset& s);
Subset subset_from_json(const Order& P, const Json& j);

// {"dense":[[names...],...]}
Json dense_family_to_json(const DenseFamily& family);
DenseFamily dense_family_from_json(OrderPtr order, const Json& j);

// {"antichains":[[names...],...]}
Json antichain_family_to_json(const AntichainFamily& family);
AntichainFamily antichain_family_from_json(OrderPtr order, const Json& j);

// {"members":[...],"certificates":[{"dense_index":i,"witness":name},...]}
Json generic_filter_to_json(const GenericFilter& filter);

// {"status":"sat","members":[...],"certificates":[...]} | {"status":"unsat","conflict":[...]}
Json transversal_result_to_json(const Order& P, const TransversalResult& result);

// {"ground":[...],"members":[{"x":1,...},...],"close":bool}
Json partial_fn_to_json(const std::vector<std::string>& ground, const PartialFn& s);
Json mess_to_json(const Mess& M, std::size_t cap = kDefaultMaterializeCap);
Mess mess_from_json(const Json& j, std::size_t cap = kDefaultMaterializeCap);

// rationals: JSON integer or "p/q" string in, lowest-terms string out
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

// {"sets":{"i":[...],...},"relation":[[u,v],...]}
SConsistentInstance s_consistent_from_json(const Json& j);

// {"dim":d,"forms":[[...]],"subspace_basis":[[...]],"f_values":[...],
//  "tracked":[[...]],"sums":[[i,j,k],...],"scalings":[[r,i,j],...],"depth":N}
HahnBanachInstance hahn_banach_from_json(const Json& j);
Json hahn_banach_solution_to_json(const HahnBanachInstance& instance,
                                  const HahnBanachSolution& solution);

}  // namespace ordbench
