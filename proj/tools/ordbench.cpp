// ordbench: batch front end for the finite-order genericity workbench.
//
// Verbs: check (validate invariants), solve (transversal / generic-filter
// solvers), reduce (the mess/poset constructions), demo (end-to-end
// pipelines), oracle (brute-force cross-checks).
// Exit codes: 0 sat/true, 1 unsat/false, 2 error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ordbench/choice.hpp"
#include "ordbench/error.hpp"
#include "ordbench/generic.hpp"
#include "ordbench/hahn_banach.hpp"
#include "ordbench/json_io.hpp"
#include "ordbench/mess.hpp"
#include "ordbench/ordering.hpp"
#include "ordbench/reduction.hpp"

namespace {

using namespace ordbench;

constexpr const char* kToolVersion = "ordbench 0.1.0";

struct Options {
  std::string format = "json";
  bool no_timing = false;
  bool all_subsets = false;
  bool naive = false;
  bool validate = false;
  std::optional<unsigned> depth;
  std::optional<std::size_t> cap;
  std::string set_list;  // demo order --set
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json load_json(const std::string& path) { return parse_json(read_file(path)); }

std::size_t cap_or(const Options& opt, std::size_t fallback) {
  return opt.cap.value_or(fallback);
}

struct Outcome {
  std::string status;  // sat | unsat | true | false | error
  Json payload;
};

// ---- check ----

Outcome check_poset(const Options& opt, const std::string& path) {
  Json payload;
  payload["check"] = "poset";
  try {
    OrderPtr P = order_from_json(load_json(path), cap_or(opt, kDefaultOrderCap));
    payload["elements"] = P->size();
    payload["valid"] = true;
    return {"true", payload};
  } catch (const Error& e) {
    if (e.code() == errc::parse_error) throw;
    payload["valid"] = false;
    payload["reason"] = errc_name(e.code());
    payload["message"] = e.what();
    return {"false", payload};
  }
}

Outcome check_mess(const Options& opt, const std::string& path) {
  Json payload;
  payload["check"] = "mess";
  try {
    Mess M = mess_from_json(load_json(path), cap_or(opt, kDefaultMaterializeCap));
    payload["ground"] = M.ground();
    payload["members"] = M.members().size();
    payload["valid"] = true;
    return {"true", payload};
  } catch (const Error& e) {
    if (e.code() == errc::parse_error || e.code() == errc::cap_exceeded) throw;
    payload["valid"] = false;
    payload["reason"] = errc_name(e.code());
    payload["message"] = e.what();
    if (!e.detail().empty()) payload["witness"] = e.detail();
    return {"false", payload};
  }
}

Outcome check_subsets(const Options& opt, const std::string& which, const std::string& poset_path,
                      const std::string& family_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  Json doc = load_json(family_path);
  const char* key = which == "antichains" ? "antichains" : "dense";
  if (!doc.contains(key)) throw Error(errc::parse_error, std::string("missing field \"") + key + "\"");
  Json payload;
  payload["check"] = which;
  Json verdicts = Json::array();
  bool all_good = true;
  for (const Json& entry : doc.at(key)) {
    Subset S = subset_from_json(*P, entry);
    bool good = which == "antichains" ? is_antichain(*P, S) : is_dense(*P, S);
    verdicts.push_back(good);
    all_good = all_good && good;
  }
  payload["members"] = std::move(verdicts);
  payload["valid"] = all_good;
  return {all_good ? "true" : "false", payload};
}

// ---- solve ----

Outcome solve_transversal(const Options& opt, const std::string& poset_path,
                          const std::string& family_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  AntichainFamily family = antichain_family_from_json(P, load_json(family_path));
  TransversalResult res = solve_two_linked_generic(family);
  return {res.sat ? "sat" : "unsat", transversal_result_to_json(*P, res)};
}

Outcome solve_filter(const Options& opt, const std::string& poset_path,
                     const std::string& family_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  DenseFamily family = dense_family_from_json(P, load_json(family_path));
  GenericFilter filter = find_generic_filter(family);
  return {"sat", generic_filter_to_json(filter)};
}

// ---- reduce ----

Outcome reduce_to_mess(const Options& opt, const std::string& poset_path,
                       const std::string& family_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  AntichainFamily family = antichain_family_from_json(P, load_json(family_path));
  Mess M = mess_from_poset(P, family);
  return {"true", mess_to_json(M, cap_or(opt, kDefaultMaterializeCap))};
}

Outcome reduce_to_poset(const Options& opt, const std::string& mess_path) {
  Mess M = mess_from_json(load_json(mess_path), cap_or(opt, kDefaultMaterializeCap));
  MessPoset mp = poset_from_mess(M, cap_or(opt, kDefaultMaterializeCap));
  Json payload;
  payload["poset"] = order_to_json(*mp.order);
  payload["antichains"] = antichain_family_to_json(mp.antichains).at("antichains");
  return {"true", payload};
}

Outcome reduce_cnf_to_mess(const Options& opt, const std::string& cnf_path) {
  std::istringstream in(read_file(cnf_path));
  Cnf cnf = parse_dimacs(in);
  Mess M = mess_from_cnf(cnf, opt.validate, cap_or(opt, kDefaultMaterializeCap));
  return {"true", mess_to_json(M, cap_or(opt, kDefaultMaterializeCap))};
}

// ---- demo ----

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

Outcome demo_order(const Options& opt, const std::string& path) {
  std::vector<std::string> elements;
  if (!opt.set_list.empty()) {
    elements = split_commas(opt.set_list);
  } else {
    if (path.empty()) throw Error(errc::parse_error, "demo order needs --set or an instance file");
    Json doc = load_json(path);
    if (!doc.contains("set")) throw Error(errc::parse_error, "missing field \"set\"");
    for (const Json& e : doc.at("set")) elements.push_back(e.get<std::string>());
  }
  OrderingInstance instance(elements, opt.all_subsets, cap_or(opt, kDefaultOrderingCap));
  OrderingInstance::Solution sol = instance.solve();
  Json payload;
  payload["order"] = sol.sequence;
  Json sizes = Json::array();
  for (const Subset& A : instance.family().members) sizes.push_back(A.count());
  payload["antichain_sizes"] = std::move(sizes);
  return {"sat", payload};
}

std::vector<std::vector<std::string>> sets_from_json(const Json& doc) {
  if (!doc.contains("sets")) throw Error(errc::parse_error, "missing field \"sets\"");
  std::vector<std::vector<std::string>> sets;
  for (const Json& entry : doc.at("sets")) {
    std::vector<std::string> s;
    for (const Json& v : entry) s.push_back(v.get<std::string>());
    sets.push_back(std::move(s));
  }
  return sets;
}

Outcome demo_choice(const Options& opt, const std::string& path) {
  ChoiceSolution sol = choice_function_poset(sets_from_json(load_json(path)),
                                             cap_or(opt, kDefaultChoiceCap));
  Json payload;
  payload["choice"] = sol.values;
  payload["filter"] = generic_filter_to_json(sol.filter);
  return {"sat", payload};
}

Outcome demo_koenig(const Options& opt, const std::string& path) {
  KoenigSolution sol = koenig_choice(sets_from_json(load_json(path)), cap_or(opt, kDefaultChoiceCap));
  Json payload;
  payload["choice"] = sol.values;
  payload["level_sizes"] = sol.level_sizes;
  payload["filter"] = generic_filter_to_json(sol.filter);
  return {"sat", payload};
}

Outcome demo_s_choice(const Options& opt, const std::string& path) {
  SConsistentInstance inst = s_consistent_from_json(load_json(path));
  SChoiceResult res = s_consistent_choice(inst, opt.all_subsets, cap_or(opt, kDefaultChoiceCap));
  Json payload;
  if (res.sat) {
    Json choice = Json::object();
    for (std::size_t i = 0; i < inst.indices.size(); ++i) choice[inst.indices[i]] = res.values[i];
    payload["choice"] = std::move(choice);
    return {"sat", payload};
  }
  payload["failed_domain"] = res.failed_domain;
  return {"unsat", payload};
}

Outcome demo_hahn_banach(const Options& opt, const std::string& path) {
  HahnBanachInstance inst = hahn_banach_from_json(load_json(path));
  if (opt.depth) inst.depth = *opt.depth;
  HahnBanachSolution sol = hahn_banach_solve(inst);
  return {"sat", hahn_banach_solution_to_json(inst, sol)};
}

// ---- oracle ----

bool oracle_extend(const Order& P, const std::vector<Subset>& antichains, std::vector<int>& picked) {
  if (picked.size() == antichains.size()) return true;
  std::vector<int> options = antichains[picked.size()].elements();
  for (int c : options) {
    bool ok = true;
    for (int prev : picked)
      if (!P.compatible(prev, c)) ok = false;
    if (!ok) continue;
    picked.push_back(c);
    if (oracle_extend(P, antichains, picked)) return true;
    picked.pop_back();
  }
  return false;
}

Outcome oracle_transversal(const Options& opt, const std::string& poset_path,
                           const std::string& family_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  AntichainFamily family = antichain_family_from_json(P, load_json(family_path));
  TransversalResult res = solve_two_linked_generic(family);

  std::vector<int> picked;
  bool oracle_sat = oracle_extend(*P, family.members, picked);

  bool valid = true;
  if (res.sat) {
    valid = is_two_linked(*P, res.solution->members);
    for (const SolutionCertificate& c : res.solution->certificates)
      valid = valid && res.solution->members.test(c.witness) &&
              family.members[static_cast<std::size_t>(c.antichain_index)].test(c.witness);
  }

  Json payload;
  payload["solver"] = res.sat ? "sat" : "unsat";
  payload["oracle"] = oracle_sat ? "sat" : "unsat";
  payload["agree"] = res.sat == oracle_sat;
  payload["certificates_valid"] = valid;
  payload["solution"] = transversal_result_to_json(*P, res);
  if (res.sat != oracle_sat || !valid)
    return {"error", payload};
  return {res.sat ? "sat" : "unsat", payload};
}

Outcome oracle_filter(const Options& opt, const std::string& poset_path,
                      const std::string& family_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  DenseFamily family = dense_family_from_json(P, load_json(family_path));
  GenericFilter filter = find_generic_filter(family);

  bool valid = is_filter(*P, filter.members);
  for (std::size_t i = 0; i < family.members.size(); ++i)
    valid = valid && filter.members.intersects(family.members[i]);
  for (const FilterCertificate& c : filter.certificates)
    valid = valid && filter.members.test(c.witness) &&
            family.members[static_cast<std::size_t>(c.family_index)].test(c.witness);

  // exhaustive cross-check: the result appears among all generic filters
  bool found = false;
  if (P->size() <= cap_or(opt, kDefaultExhaustiveCap)) {
    const std::size_t n = P->size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found; ++mask) {
      Subset G(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) G.set(static_cast<int>(i));
      if (G != filter.members) continue;
      bool ok = is_filter(*P, G);
      for (const Subset& D : family.members) ok = ok && G.intersects(D);
      found = ok;
    }
  } else {
    found = valid;
  }

  Json payload;
  payload["filter"] = generic_filter_to_json(filter);
  payload["valid"] = valid;
  payload["agree"] = found;
  return {valid && found ? "sat" : "error", payload};
}

Outcome oracle_lemma22(const Options& opt, const std::string& poset_path) {
  OrderPtr P = order_from_json(load_json(poset_path), cap_or(opt, kDefaultOrderCap));
  FullyGenericOptions fg;
  fg.cap = cap_or(opt, kDefaultExhaustiveCap);
  fg.naive = opt.naive;
  bool holds = check_lemma_2_2(*P, fg);
  Json payload;
  payload["lemma_2_2"] = holds;
  payload["naive"] = opt.naive;
  Json filters = Json::array();
  for (const Subset& G : fully_generic_filters(*P, fg)) filters.push_back(subset_to_json(*P, G));
  payload["fully_generic_filters"] = std::move(filters);
  return {holds ? "true" : "false", payload};
}

// ---- report plumbing ----

void render_text(std::ostream& out, const Outcome& outcome) {
  out << "status: " << outcome.status << "\n";
  for (const auto& [key, value] : outcome.payload.items()) {
    out << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << "\n";
  }
}

int emit(const Options& opt, const Outcome& outcome, long long elapsed_ms) {
  if (opt.format == "text") {
    render_text(std::cout, outcome);
  } else {
    Json report;
    report["status"] = outcome.status;
    report["payload"] = outcome.payload;
    if (!opt.no_timing) report["timing_ms"] = elapsed_ms;
    report["tool"] = kToolVersion;
    std::cout << report.dump(2) << "\n";
  }
  if (outcome.status == "sat" || outcome.status == "true") return 0;
  if (outcome.status == "unsat" || outcome.status == "false") return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-order genericity workbench"};
  app.set_version_flag("--version", kToolVersion);
  Options opt;
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timing", opt.no_timing, "omit timing from the report");

  std::string file_a, file_b;
  std::function<Outcome()> action;

  auto* check = app.add_subcommand("check", "validate invariants");
  {
    auto* poset = check->add_subcommand("poset");
    poset->add_option("file", file_a)->required();
    poset->add_option("--cap", opt.cap);
    poset->callback([&] { action = [&] { return check_poset(opt, file_a); }; });
    auto* mess = check->add_subcommand("mess");
    mess->add_option("file", file_a)->required();
    mess->add_option("--cap", opt.cap);
    mess->callback([&] { action = [&] { return check_mess(opt, file_a); }; });
    for (const char* which : {"antichains", "dense"}) {
      auto* sub = check->add_subcommand(which);
      sub->add_option("poset", file_a)->required();
      sub->add_option("family", file_b)->required();
      sub->add_option("--cap", opt.cap);
      std::string name = which;
      sub->callback([&, name] { action = [&, name] { return check_subsets(opt, name, file_a, file_b); }; });
    }
    check->require_subcommand(1);
  }

  auto* solve = app.add_subcommand("solve", "run the solvers");
  {
    auto* transversal = solve->add_subcommand("transversal");
    transversal->add_option("poset", file_a)->required();
    transversal->add_option("family", file_b)->required();
    transversal->add_option("--cap", opt.cap);
    transversal->callback([&] { action = [&] { return solve_transversal(opt, file_a, file_b); }; });
    auto* filter = solve->add_subcommand("filter");
    filter->add_option("poset", file_a)->required();
    filter->add_option("family", file_b)->required();
    filter->add_option("--cap", opt.cap);
    filter->callback([&] { action = [&] { return solve_filter(opt, file_a, file_b); }; });
    solve->require_subcommand(1);
  }

  auto* reduce = app.add_subcommand("reduce", "run the two-way constructions");
  {
    auto* to_mess = reduce->add_subcommand("to-mess");
    to_mess->add_option("poset", file_a)->required();
    to_mess->add_option("family", file_b)->required();
    to_mess->add_option("--cap", opt.cap);
    to_mess->callback([&] { action = [&] { return reduce_to_mess(opt, file_a, file_b); }; });
    auto* to_poset = reduce->add_subcommand("to-poset");
    to_poset->add_option("mess", file_a)->required();
    to_poset->add_option("--cap", opt.cap);
    to_poset->callback([&] { action = [&] { return reduce_to_poset(opt, file_a); }; });
    auto* cnf = reduce->add_subcommand("cnf-to-mess");
    cnf->add_option("cnf", file_a)->required();
    cnf->add_option("--cap", opt.cap);
    cnf->add_flag("--validate", opt.validate, "eagerly check coverage of every variable subset");
    cnf->callback([&] { action = [&] { return reduce_cnf_to_mess(opt, file_a); }; });
    reduce->require_subcommand(1);
  }

  auto* demo = app.add_subcommand("demo", "end-to-end pipelines");
  {
    auto* order = demo->add_subcommand("order");
    order->add_option("file", file_a);
    order->add_option("--set", opt.set_list, "comma-separated ground set");
    order->add_flag("--all-subsets", opt.all_subsets);
    order->add_option("--cap", opt.cap);
    order->callback([&] { action = [&] { return demo_order(opt, file_a); }; });
    auto* choice = demo->add_subcommand("choice");
    choice->add_option("file", file_a)->required();
    choice->add_option("--cap", opt.cap);
    choice->callback([&] { action = [&] { return demo_choice(opt, file_a); }; });
    auto* koenig = demo->add_subcommand("koenig");
    koenig->add_option("file", file_a)->required();
    koenig->add_option("--cap", opt.cap);
    koenig->callback([&] { action = [&] { return demo_koenig(opt, file_a); }; });
    auto* schoice = demo->add_subcommand("s-choice");
    schoice->add_option("file", file_a)->required();
    schoice->add_flag("--all-subsets", opt.all_subsets);
    schoice->add_option("--cap", opt.cap);
    schoice->callback([&] { action = [&] { return demo_s_choice(opt, file_a); }; });
    auto* hb = demo->add_subcommand("hahn-banach");
    hb->add_option("file", file_a)->required();
    hb->add_option("--depth", opt.depth, "override the instance depth");
    hb->callback([&] { action = [&] { return demo_hahn_banach(opt, file_a); }; });
    demo->require_subcommand(1);
  }

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  {
    auto* transversal = oracle->add_subcommand("transversal");
    transversal->add_option("poset", file_a)->required();
    transversal->add_option("family", file_b)->required();
    transversal->add_option("--cap", opt.cap);
    transversal->callback([&] { action = [&] { return oracle_transversal(opt, file_a, file_b); }; });
    auto* filter = oracle->add_subcommand("filter");
    filter->add_option("poset", file_a)->required();
    filter->add_option("family", file_b)->required();
    filter->add_option("--cap", opt.cap);
    filter->callback([&] { action = [&] { return oracle_filter(opt, file_a, file_b); }; });
    auto* lemma = oracle->add_subcommand("lemma22");
    lemma->add_option("poset", file_a)->required();
    lemma->add_flag("--naive", opt.naive, "enumerate all dense subsets instead of the antichain basis");
    lemma->add_option("--cap", opt.cap);
    lemma->callback([&] { action = [&] { return oracle_lemma22(opt, file_a); }; });
    oracle->require_subcommand(1);
  }

  app.require_subcommand(1);
  // global flags (--format, --no-timing) may follow the subcommand
  for (CLI::App* top : app.get_subcommands(nullptr)) {
    top->fallthrough();
    for (CLI::App* sub : top->get_subcommands(nullptr)) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    Json payload;
    payload["error"] = "ParseError";
    payload["message"] = e.what();
    return emit(opt, Outcome{"error", payload}, 0);
  }

  auto started = std::chrono::steady_clock::now();
  try {
    Outcome outcome = action();
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    return emit(opt, outcome, elapsed);
  } catch (const Error& e) {
    Json payload;
    payload["error"] = errc_name(e.code());
    payload["message"] = e.what();
    if (!e.detail().empty()) payload["detail"] = e.detail();
    return emit(opt, Outcome{"error", payload}, 0);
  } catch (const std::exception& e) {
    Json payload;
    payload["error"] = "InternalError";
    payload["message"] = e.what();
    return emit(opt, Outcome{"error", payload}, 0);
  }
}
