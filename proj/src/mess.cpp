#include "ordbench/mess.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "ordbench/error.hpp"

namespace ordbench {

namespace {

std::string domain_names(const std::vector<std::string>& ground, const Subset& F) {
  std::string out = "{";
  bool first = true;
  F.for_each([&](int i) {
    if (!first) out += ",";
    out += ground[static_cast<std::size_t>(i)];
    first = false;
  });
  return out + "}";
}

std::vector<std::string> domain_labels(const std::vector<std::string>& ground, const Subset& F) {
  std::vector<std::string> out;
  F.for_each([&](int i) { out.push_back(ground[static_cast<std::size_t>(i)]); });
  return out;
}

void check_ground_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw Error(errc::cap_exceeded, std::string(what) + ": ground size " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(cap));
}

}  // namespace

bool partial_fn_less(const PartialFn& a, const PartialFn& b) {
  std::size_t ca = a.domain.count();
  std::size_t cb = b.domain.count();
  if (ca != cb) return ca < cb;
  if (a.domain != b.domain) return canonical_subset_less(a.domain, b.domain);
  // same domain: compare value vectors in domain order
  for (int i = a.domain.first(); i >= 0; i = a.domain.next_after(i)) {
    bool va = a.ones.test(i);
    bool vb = b.ones.test(i);
    if (va != vb) return vb;
  }
  return false;
}

std::vector<Subset> shortlex_domains(std::size_t n) {
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset F(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) F.set(static_cast<int>(i));
    out.push_back(F);
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    std::size_t ca = a.count();
    std::size_t cb = b.count();
    if (ca != cb) return ca < cb;
    return canonical_subset_less(a, b);
  });
  return out;
}

Mess Mess::extensional(std::vector<std::string> ground, std::vector<PartialFn> members, bool close,
                       std::size_t cap) {
  const std::size_t n = ground.size();
  check_ground_cap(n, cap, "extensional mess");
  for (const PartialFn& s : members) {
    if (s.domain.universe() != n || !s.domain.contains(s.ones))
      throw Error(errc::parse_error, "partial function values not confined to its domain");
  }

  std::sort(members.begin(), members.end(), partial_fn_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());

  auto member_present = [&](const PartialFn& s) {
    return std::binary_search(members.begin(), members.end(), s, partial_fn_less);
  };

  if (close) {
    // Close under restrictions: removing elements one at a time reaches every
    // subdomain.
    std::vector<PartialFn> queue = members;
    while (!queue.empty()) {
      PartialFn s = queue.back();
      queue.pop_back();
      s.domain.for_each([&](int x) {
        Subset F = s.domain;
        F.reset(x);
        PartialFn r = s.restrict_to(F);
        auto it = std::lower_bound(members.begin(), members.end(), r, partial_fn_less);
        if (it == members.end() || !(*it == r)) {
          members.insert(it, r);
          queue.push_back(r);
        }
      });
    }
  } else {
    for (const PartialFn& s : members) {
      bool ok = true;
      s.domain.for_each([&](int x) {
        Subset F = s.domain;
        F.reset(x);
        if (!member_present(s.restrict_to(F))) ok = false;
      });
      if (!ok)
        throw Error(errc::not_restriction_closed,
                    "a restriction of a member with domain " + domain_names(ground, s.domain) +
                        " is missing");
    }
  }

  // Coverage: every F ⊆ X has a member with that exact domain.
  for (const Subset& F : shortlex_domains(n)) {
    PartialFn probe{F, Subset(n)};
    auto it = std::lower_bound(members.begin(), members.end(), probe, partial_fn_less);
    if (it == members.end() || !(it->domain == F))
      throw Error(errc::coverage_gap, "no member with domain " + domain_names(ground, F),
                  domain_labels(ground, F));
  }

  Mess m;
  m.ground_ = std::move(ground);
  m.members_ = std::move(members);
  return m;
}

Mess Mess::intensional(std::vector<std::string> ground, Predicate predicate,
                       std::size_t materialize_cap) {
  Mess m;
  m.ground_ = std::move(ground);
  m.predicate_ = std::move(predicate);
  (void)materialize_cap;
  return m;
}

bool Mess::contains(const PartialFn& s) const {
  if (s.domain.universe() != ground_.size() || !s.domain.contains(s.ones)) return false;
  if (predicate_) return predicate_(s);
  return std::binary_search(members_.begin(), members_.end(), s, partial_fn_less);
}

const std::vector<PartialFn>& Mess::members() const {
  if (predicate_)
    throw Error(errc::cap_exceeded, "intensional mess has no materialized member list");
  return members_;
}

Mess Mess::materialized(std::size_t cap) const {
  if (!predicate_) return *this;
  const std::size_t n = ground_.size();
  check_ground_cap(n, cap, "materialization");
  std::vector<PartialFn> members;
  for (const Subset& F : shortlex_domains(n)) {
    std::vector<int> elems = F.elements();
    const std::size_t k = elems.size();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      Subset ones(n);
      for (std::size_t j = 0; j < k; ++j)
        if ((v >> j) & 1) ones.set(elems[j]);
      PartialFn s{F, ones};
      if (predicate_(s)) members.push_back(s);
    }
  }
  return extensional(ground_, std::move(members), /*close=*/false, cap);
}

std::vector<Subset> Mess::uncovered_domains(std::size_t cap) const {
  const std::size_t n = ground_.size();
  check_ground_cap(n, cap, "coverage scan");
  std::vector<Subset> gaps;
  for (const Subset& F : shortlex_domains(n)) {
    bool covered = false;
    if (predicate_) {
      std::vector<int> elems = F.elements();
      const std::size_t k = elems.size();
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << k) && !covered; ++v) {
        Subset ones(n);
        for (std::size_t j = 0; j < k; ++j)
          if ((v >> j) & 1) ones.set(elems[j]);
        covered = predicate_(PartialFn{F, ones});
      }
    } else {
      PartialFn probe{F, Subset(n)};
      auto it = std::lower_bound(members_.begin(), members_.end(), probe, partial_fn_less);
      covered = it != members_.end() && it->domain == F;
    }
    if (!covered) gaps.push_back(F);
  }
  return gaps;
}

namespace {

void enumerate_consistent(const Mess& M, std::size_t depth, Subset& prefix_domain, Subset& ones,
                          std::vector<TotalFn>& out) {
  const std::size_t n = M.ground_size();
  if (depth == n) {
    out.push_back(TotalFn{ones});
    return;
  }
  prefix_domain.set(static_cast<int>(depth));
  // 0 before 1: emission is lexicographic with earlier labels more
  // significant. Prefix pruning is sound because messes are
  // restriction-closed.
  if (M.contains(PartialFn{prefix_domain, ones})) {
    enumerate_consistent(M, depth + 1, prefix_domain, ones, out);
  }
  ones.set(static_cast<int>(depth));
  if (M.contains(PartialFn{prefix_domain, ones})) {
    enumerate_consistent(M, depth + 1, prefix_domain, ones, out);
  }
  ones.reset(static_cast<int>(depth));
  prefix_domain.reset(static_cast<int>(depth));
}

}  // namespace

std::vector<TotalFn> consistent_functions(const Mess& M, std::size_t cap) {
  const std::size_t n = M.ground_size();
  check_ground_cap(n, cap, "consistency enumeration");

  Subset prefix(n);
  Subset ones(n);
  std::vector<TotalFn> via_backtracking;
  enumerate_consistent(M, 0, prefix, ones, via_backtracking);

  if (M.is_extensional()) {
    // Closure makes full-domain membership sufficient, so the two
    // characterizations must agree.
    std::vector<TotalFn> via_members;
    Subset all = Subset::full(n);
    for (const PartialFn& s : M.members())
      if (s.domain == all) via_members.push_back(TotalFn{s.ones});
    std::sort(via_members.begin(), via_members.end(), [n](const TotalFn& a, const TotalFn& b) {
      return partial_fn_less(a.as_partial(n), b.as_partial(n));
    });
    if (!(via_members == via_backtracking))
      throw Error(errc::not_restriction_closed,
                  "member list and backtracking enumeration disagree; mess is not closed");
  }

  if (via_backtracking.empty()) {
    // A finite binary mess always admits a consistent function (any full
    // domain member); an empty result means some domain is uncovered.
    std::vector<Subset> gaps = M.uncovered_domains(cap);
    if (!gaps.empty())
      throw Error(errc::coverage_gap, "no member with domain " + domain_names(M.ground(), gaps.front()),
                  domain_labels(M.ground(), gaps.front()));
  }
  return via_backtracking;
}

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  std::string line;
  bool header_seen = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      long vars = 0, clauses = 0;
      if (!(ls >> p >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw Error(errc::parse_error, "line " + std::to_string(line_no) + ": bad DIMACS header");
      cnf.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      header_seen = true;
      continue;
    }
    if (!header_seen)
      throw Error(errc::parse_error, "line " + std::to_string(line_no) + ": clause before header");
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        std::size_t var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
        if (var > cnf.num_vars)
          throw Error(errc::parse_error,
                      "line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                          " out of range");
        current.push_back(lit);
      }
    }
    if (!ls.eof())
      throw Error(errc::parse_error, "line " + std::to_string(line_no) + ": bad literal token");
  }
  if (!header_seen) throw Error(errc::parse_error, "missing DIMACS header");
  if (!current.empty()) cnf.clauses.push_back(current);  // tolerate missing final 0
  if (declared_clauses != cnf.clauses.size())
    throw Error(errc::parse_error, "header declares " + std::to_string(declared_clauses) +
                                       " clauses, found " + std::to_string(cnf.clauses.size()));
  return cnf;
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::vector<std::string> cnf_variable_labels(const Cnf& cnf) {
  std::vector<std::string> labels;
  labels.reserve(cnf.num_vars);
  for (std::size_t v = 1; v <= cnf.num_vars; ++v) labels.push_back("v" + std::to_string(v));
  return labels;
}

Mess mess_from_cnf(const Cnf& cnf, bool validate, std::size_t validate_cap) {
  const std::size_t n = cnf.num_vars;
  auto clauses = cnf.clauses;
  auto predicate = [n, clauses](const PartialFn& s) {
    for (const auto& clause : clauses) {
      bool in_domain = true;
      bool falsified = true;
      for (int lit : clause) {
        int var = (lit > 0 ? lit : -lit) - 1;
        if (!s.domain.test(var)) {
          in_domain = false;
          break;
        }
        bool value = s.ones.test(var);
        if (value == (lit > 0)) falsified = false;
      }
      if (in_domain && falsified) return false;
    }
    return true;
  };
  Mess m = Mess::intensional(cnf_variable_labels(cnf), predicate);
  if (validate) {
    std::vector<Subset> gaps = m.uncovered_domains(validate_cap);
    if (!gaps.empty()) {
      std::vector<std::string> labels;
      gaps.front().for_each([&](int i) { labels.push_back("v" + std::to_string(i + 1)); });
      std::string msg = "variable set {";
      for (std::size_t i = 0; i < labels.size(); ++i) msg += (i ? "," : "") + labels[i];
      throw Error(errc::coverage_gap, msg + "} has unsatisfiable induced clauses", labels);
    }
  }
  return m;
}

}  // namespace ordbench
