#include "ordbench/json_io.hpp"

#include <map>

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(errc::parse_error, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) bad(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, e.what());
  }
}

Json order_to_json(const Order& P) {
  Json j;
  j["kind"] = P.kind() == Order::Kind::poset ? "poset" : "preorder";
  j["elements"] = P.labels();
  Json leq = Json::array();
  for (int p = 0; p < static_cast<int>(P.size()); ++p)
    P.up_set(p).for_each([&](int q) {
      if (p != q) leq.push_back(Json::array({P.label(p), P.label(q)}));
    });
  j["leq"] = std::move(leq);
  return j;
}

OrderPtr order_from_json(const Json& j, std::size_t cap) {
  const Json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) bad("\"kind\" must be a string");
  std::string kind_s = kind_j.get<std::string>();
  Order::Kind kind;
  if (kind_s == "poset")
    kind = Order::Kind::poset;
  else if (kind_s == "preorder")
    kind = Order::Kind::preorder;
  else
    bad("\"kind\" must be \"poset\" or \"preorder\"");

  std::vector<std::string> labels = string_list(field(j, "elements"), "\"elements\"");
  std::vector<std::pair<std::string, std::string>> pairs;
  const Json& leq = field(j, "leq");
  if (!leq.is_array()) bad("\"leq\" must be an array of pairs");
  for (const Json& e : leq) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      bad("\"leq\" entries must be [x, y] name pairs");
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return std::make_shared<const Order>(Order::from_pairs(kind, std::move(labels), pairs, cap));
}

Json subset_to_json(const Order& P, const Subset& s) {
  Json j = Json::array();
  s.for_each([&](int i) { j.push_back(P.label(i)); });
  return j;
}

Subset subset_from_json(const Order& P, const Json& j) {
  return P.subset_of(string_list(j, "subset"));
}

Json dense_family_to_json(const DenseFamily& family) {
  Json members = Json::array();
  for (const Subset& D : family.members) members.push_back(subset_to_json(*family.order, D));
  Json j;
  j["dense"] = std::move(members);
  return j;
}

DenseFamily dense_family_from_json(OrderPtr order, const Json& j) {
  const Json& arr = field(j, "dense");
  if (!arr.is_array()) bad("\"dense\" must be an array");
  std::vector<Subset> members;
  for (const Json& e : arr) members.push_back(subset_from_json(*order, e));
  return make_dense_family(std::move(order), std::move(members));
}

Json antichain_family_to_json(const AntichainFamily& family) {
  Json members = Json::array();
  for (const Subset& A : family.members) members.push_back(subset_to_json(*family.order, A));
  Json j;
  j["antichains"] = std::move(members);
  return j;
}

AntichainFamily antichain_family_from_json(OrderPtr order, const Json& j) {
  const Json& arr = field(j, "antichains");
  if (!arr.is_array()) bad("\"antichains\" must be an array");
  std::vector<Subset> members;
  for (const Json& e : arr) members.push_back(subset_from_json(*order, e));
  return make_antichain_family(std::move(order), std::move(members));
}

Json generic_filter_to_json(const GenericFilter& filter) {
  Json j;
  j["members"] = subset_to_json(*filter.order, filter.members);
  Json certs = Json::array();
  for (const FilterCertificate& c : filter.certificates) {
    Json e;
    e["dense_index"] = c.family_index;
    e["witness"] = filter.order->label(c.witness);
    certs.push_back(std::move(e));
  }
  j["certificates"] = std::move(certs);
  return j;
}

Json transversal_result_to_json(const Order& P, const TransversalResult& result) {
  Json j;
  if (result.sat) {
    j["status"] = "sat";
    j["members"] = subset_to_json(P, result.solution->members);
    Json certs = Json::array();
    for (const SolutionCertificate& c : result.solution->certificates) {
      Json e;
      e["antichain_index"] = c.antichain_index;
      e["witness"] = P.label(c.witness);
      certs.push_back(std::move(e));
    }
    j["certificates"] = std::move(certs);
  } else {
    j["status"] = "unsat";
    j["conflict"] = result.conflict;
  }
  return j;
}

Json partial_fn_to_json(const std::vector<std::string>& ground, const PartialFn& s) {
  Json j = Json::object();
  s.domain.for_each([&](int x) { j[ground[static_cast<std::size_t>(x)]] = s.ones.test(x) ? 1 : 0; });
  return j;
}

Json mess_to_json(const Mess& M, std::size_t cap) {
  Mess mm = M.materialized(cap);
  Json j;
  j["ground"] = mm.ground();
  Json members = Json::array();
  for (const PartialFn& s : mm.members()) members.push_back(partial_fn_to_json(mm.ground(), s));
  j["members"] = std::move(members);
  j["close"] = false;  // the member list is already restriction-closed
  return j;
}

Mess mess_from_json(const Json& j, std::size_t cap) {
  std::vector<std::string> ground = string_list(field(j, "ground"), "\"ground\"");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < ground.size(); ++i) index[ground[i]] = static_cast<int>(i);
  if (index.size() != ground.size()) bad("duplicate ground label");

  const Json& arr = field(j, "members");
  if (!arr.is_array()) bad("\"members\" must be an array");
  std::vector<PartialFn> members;
  for (const Json& e : arr) {
    if (!e.is_object()) bad("mess members must be objects");
    PartialFn s{Subset(ground.size()), Subset(ground.size())};
    for (const auto& [key, value] : e.items()) {
      auto it = index.find(key);
      if (it == index.end()) bad("member references unknown ground label \"" + key + "\"");
      if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1))
        bad("member values must be 0 or 1");
      s.domain.set(it->second);
      if (value.get<int>() == 1) s.ones.set(it->second);
    }
    members.push_back(std::move(s));
  }
  bool close = false;
  if (j.contains("close")) {
    if (!j.at("close").is_boolean()) bad("\"close\" must be a boolean");
    close = j.at("close").get<bool>();
  }
  return Mess::extensional(std::move(ground), std::move(members), close, cap);
}

Json rational_to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("rationals must be integers or \"p/q\" strings");
}

namespace {

RatVec rat_vec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  RatVec out;
  for (const Json& e : j) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

SConsistentInstance s_consistent_from_json(const Json& j) {
  const Json& sets = field(j, "sets");
  if (!sets.is_object()) bad("\"sets\" must be an object keyed by index label");
  SConsistentInstance inst;
  for (const auto& [key, value] : sets.items()) {
    inst.indices.push_back(key);
    inst.sets.push_back(string_list(value, "value set"));
  }
  const Json& rel = field(j, "relation");
  if (!rel.is_array()) bad("\"relation\" must be an array of pairs");
  for (const Json& e : rel) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      bad("\"relation\" entries must be [u, v] pairs");
    inst.relation.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return inst;
}

HahnBanachInstance hahn_banach_from_json(const Json& j) {
  HahnBanachInstance inst;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) bad("\"dim\" must be a nonnegative integer");
  inst.dim = dim.get<std::size_t>();
  inst.p.dim = inst.dim;
  for (const Json& e : field(j, "forms")) inst.p.forms.push_back(rat_vec_from_json(e, "form"));
  for (const Json& e : field(j, "subspace_basis"))
    inst.subspace_basis.push_back(rat_vec_from_json(e, "basis vector"));
  for (const Json& e : field(j, "f_values")) inst.f_values.push_back(rational_from_json(e));
  for (const Json& e : field(j, "tracked")) inst.tracked.push_back(rat_vec_from_json(e, "tracked vector"));
  if (j.contains("sums")) {
    for (const Json& e : j.at("sums")) {
      if (!e.is_array() || e.size() != 3) bad("\"sums\" entries must be [i, j, k]");
      inst.sums.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
  }
  if (j.contains("scalings")) {
    for (const Json& e : j.at("scalings")) {
      if (!e.is_array() || e.size() != 3) bad("\"scalings\" entries must be [r, i, j]");
      inst.scalings.push_back({rational_from_json(e[0]), {e[1].get<int>(), e[2].get<int>()}});
    }
  }
  const Json& depth = field(j, "depth");
  if (!depth.is_number_unsigned()) bad("\"depth\" must be a nonnegative integer");
  inst.depth = depth.get<unsigned>();
  return inst;
}

Json hahn_banach_solution_to_json(const HahnBanachInstance& instance,
                                  const HahnBanachSolution& solution) {
  Json enclosure = Json::array();
  for (std::size_t i = 0; i < instance.tracked.size(); ++i) {
    Json e;
    Json vec = Json::array();
    for (const Rational& c : instance.tracked[i]) vec.push_back(rational_to_json(c));
    e["x"] = std::move(vec);
    e["lo"] = rational_to_json(solution.enclosure[i].lo());
    e["hi"] = rational_to_json(solution.enclosure[i].hi());
    e["width"] = rational_to_json(solution.enclosure[i].width());
    enclosure.push_back(std::move(e));
  }
  Json j;
  j["depth"] = instance.depth;
  j["enclosure"] = std::move(enclosure);
  return j;
}

}  // namespace ordbench
