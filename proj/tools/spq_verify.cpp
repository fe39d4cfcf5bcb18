// Copyright 2026 The spq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// spq-verify: command-line front end for the order tables, the enumeration,
// the exclusion pipeline and the matrix scans.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
// errors (bad flags, unparsable names, parameters out of range).

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"
#include "spq/alt_chain.hpp"
#include "spq/braid_checks.hpp"
#include "spq/catalog.hpp"
#include "spq/enumerator.hpp"
#include "spq/errors.hpp"
#include "spq/exact_arith.hpp"
#include "spq/exceptional.hpp"
#include "spq/flag_oracle.hpp"
#include "spq/quotient_filter.hpp"
#include "spq/sporadic_table.hpp"

#ifndef SPQ_VERSION
#define SPQ_VERSION "0.0.0"
#endif

using namespace spq;
using cli::Check;
using cli::Report;
using cli::Status;
using nlohmann::ordered_json;

namespace {

constexpr unsigned kMaxGenus = 12;

std::string dec(const BigInt& v) { return to_decimal(v); }

ordered_json witness_json(const std::vector<Witness>& w) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : w) j[k] = v;
  return j;
}

std::string witness_text(const std::vector<Witness>& w) {
  std::string s;
  for (const auto& [k, v] : w) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return s;
}

void add_trace(Report& r, const ProofTrace& t) {
  auto& c = r.add(t.title, cli::pass_if(t.ok()));
  for (const auto& s : t.steps) {
    ordered_json j;
    j["label"] = s.label;
    j["relation"] = s.relation;
    j["lhs"] = s.lhs;
    j["rhs"] = s.rhs;
    j["ok"] = s.ok;
    j["informational"] = s.informational;
    if (!s.note.empty()) j["note"] = s.note;
    c.items.push_back(std::move(j));
    // Very long decimal strings are elided in text mode only.
    auto shorten = [](const std::string& v) {
      return v.size() > 60 ? v.substr(0, 24) + "...(" + std::to_string(v.size()) + " digits)" : v;
    };
    c.item_lines.push_back(std::string(s.ok ? "ok   " : "FAIL ") + (s.informational ? "[info] " : "") + s.label +
                           ": " + shorten(s.lhs) + " " + s.relation + " " + shorten(s.rhs));
  }
}

// ---- order ----------------------------------------------------------------

void cmd_order(Report& r, const std::string& name) {
  const GroupId g = parse_group(name);
  const BigInt o = order(g);
  const bool simple = is_simple(g);
  auto& c = r.add("order " + name, Status::Info);
  c.add("group", g.name()).add("order", dec(o)).add("simple", simple ? "yes" : "no");
  if (simple) {
    c.add("canonical", canonicalize(g).name());
    c.add("g_K", std::to_string(g_of(g)));
  }
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::string target;
  std::optional<std::string> bound;
  std::uint64_t max_q = kDefaultExplicitQLimit;
  std::optional<unsigned> max_rank;
};

BigInt enumerate_bound(const EnumerateArgs& a) {
  if (a.bound) return parse_decimal(*a.bound);
  if (a.target.empty()) throw InvalidParameters("enumerate needs N, sp:g or --bound");
  if (a.target.rfind("sp:", 0) == 0) {
    const std::string gs = a.target.substr(3);
    if (gs.empty() || gs.find_first_not_of("0123456789") != std::string::npos || gs.size() > 3)
      throw InvalidParameters("expected sp:g with a small integer g");
    const unsigned g = static_cast<unsigned>(std::stoul(gs));
    if (g < 1 || g > kMaxGenus) throw RangeError("sp:g needs 1 <= g <= " + std::to_string(kMaxGenus));
    return sp_order(g);
  }
  return parse_decimal(a.target);
}

void cmd_enumerate(Report& r, const EnumerateArgs& a) {
  const BigInt bound = enumerate_bound(a);
  if (bound > sp_order(kMaxGenus))
    throw RangeError("enumeration bound must be at most |Sp_" + std::to_string(2 * kMaxGenus) + "(2)|");
  const auto res = enumerate_simple_below(bound, a.max_q);
  auto& c = r.add("enumerate up to " + dec(bound), Status::Info);
  std::size_t shown = 0;
  for (const auto& e : res.groups) {
    if (a.max_rank && e.group.is_lie() && e.group.as_lie().rank > *a.max_rank) continue;
    ++shown;
    c.items.push_back({{"group", e.group.name()}, {"order", dec(e.order)}});
    c.item_lines.push_back(dec(e.order) + "  " + e.group.name());
  }
  for (const auto& s : res.series) {
    if (a.max_rank && s.rank > *a.max_rank) continue;
    c.items.push_back({{"series", s.name()}});
    c.item_lines.push_back("series  " + s.name());
  }
  c.add("bound", dec(bound)).add("groups", std::to_string(shown)).add("series", std::to_string(res.series.size()));
  c.add("explicit_q_limit", std::to_string(res.explicit_q_limit));
}

// ---- pipeline -------------------------------------------------------------

void pipeline_check(Report& r, unsigned g, std::uint64_t max_q, const SporadicTable& table) {
  const auto rep = run_pipeline(g, max_q, table);
  auto& c = r.add("pipeline g=" + std::to_string(g), cli::pass_if(rep.theorem_holds()));
  std::string surv;
  for (const auto& s : rep.survivors) surv += (surv.empty() ? "" : ", ") + s;
  c.add("bound", dec(rep.bound)).add("groups", std::to_string(rep.entries.size()));
  c.add("series", std::to_string(rep.series.size())).add("survivors", surv);
  c.add("expected", GroupId::lie(LieFamily::C, g, 2).name());

  auto row = [&](const std::string& name, const std::string& order, const Verdict& v) {
    ordered_json j;
    j["group"] = name;
    if (!order.empty()) j["order"] = order;
    j["verdict"] = std::string(verdict_kind_name(v.kind));
    if (v.rule) {
      j["rule"] = std::string(rule_id(*v.rule));
      j["citation"] = std::string(rule_citation(*v.rule));
    }
    j["witness"] = witness_json(v.witness);
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (!v.factors.empty()) {
      auto& fs = j["factors"] = ordered_json::array();
      for (const auto& f : v.factors)
        fs.push_back({{"factor", f.factor.name()},
                      {"canonical", f.canonical.name()},
                      {"excluded", f.excluded},
                      {"reason", f.reason},
                      {"witness", witness_json(f.witness)}});
    }
    c.items.push_back(std::move(j));
    std::string line = name + "  " + std::string(verdict_kind_name(v.kind));
    if (v.rule) line += " " + std::string(rule_id(*v.rule));
    if (!v.witness.empty()) line += " [" + witness_text(v.witness) + "]";
    if (!v.excluded() && !v.reason.empty()) line += " (" + v.reason + ")";
    c.item_lines.push_back(std::move(line));
  };
  for (const auto& e : rep.entries) row(e.group.name(), dec(e.order), e.verdict);
  for (const auto& s : rep.series) row(s.series.name(), "", s.verdict);
}

// ---- flag scan and braid checks ------------------------------------------

void flag_scan_check(Report& r, std::size_t n, std::uint32_t q) {
  const auto rep = flag_scan(n, q);
  auto& c = r.add("flag scan GL_" + std::to_string(n) + "(" + std::to_string(q) + ")", cli::pass_if(rep.ok()));
  c.add("scanned", std::to_string(rep.scanned)).add("eligible", std::to_string(rep.eligible));
  c.add("centralizer_elements", std::to_string(rep.centralizer_elements));
  c.add("violations", std::to_string(rep.violation_count));
  for (std::size_t k = 0; k < rep.by_case.size(); ++k)
    c.add(std::string("case: ") + flag_case_name(static_cast<FlagCase>(k)), std::to_string(rep.by_case[k]));
  for (const auto& v : rep.violations) {
    c.items.push_back({{"matrix", v.x.to_string()}, {"what", v.what}});
    c.item_lines.push_back(v.x.to_string() + ": " + v.what);
  }
  c.item_lines.insert(c.item_lines.begin(), std::to_string(rep.scanned) + " matrices scanned, " +
                                                std::to_string(rep.violation_count) + " violations");
}

void braid_checks(Report& r, std::uint32_t q) {
  const auto [p, k] = split_prime_power(q);
  const auto f = FiniteField::get(p, k);
  {
    const auto tp = verify_triple_product(f);
    auto& c = r.add("triple product over " + f->name(), cli::pass_if(tp.ok()));
    c.add("pairs", std::to_string(tp.pairs)).add("braid_pairs", std::to_string(tp.braid_pairs));
    c.add("failures", std::to_string(tp.failures.size()));
  }
  {
    const auto sw = verify_swap_case(f);
    auto& c = r.add("swap case over " + f->name(), cli::pass_if(sw.ok()));
    c.add("characteristic", std::to_string(sw.characteristic));
    c.add("degenerate", sw.degenerate ? "yes (only w = 1)" : "no");
    for (const auto& row : sw.rows) {
      c.items.push_back({{"omega", std::to_string(row.omega)}, {"ok", row.ok()}});
      c.item_lines.push_back("w=" + std::to_string(row.omega) + (row.ok() ? " ok" : " FAIL"));
    }
  }
  if (q <= 9) {
    const auto gs = golden_braid_scan(f);
    auto list = [](const std::vector<FiniteField::Elem>& v) {
      std::string s;
      for (auto m : v) s += (s.empty() ? "" : ",") + std::to_string(m);
      return "{" + s + "}";
    };
    const auto stated = gs.stated_counterexamples();
    const auto corrected = gs.corrected_counterexamples();
    auto& c = r.add("golden braid scan over " + f->name(), cli::pass_if(stated.empty()));
    c.add("rule", "unequal braid pairs exist iff mu^2 - mu - 1 = 0");
    c.add("counterexamples", list(stated));
    c.add("counterexamples_to_mu^2-mu+1", list(corrected));
    for (const auto& s : gs.summary) {
      c.items.push_back({{"mu", std::to_string(s.mu)},
                         {"unequal_braid_exists", s.unequal_braid_exists},
                         {"mu^2-mu-1=0", s.stated_root},
                         {"mu^2-mu+1=0", s.corrected_root}});
      c.item_lines.push_back("mu=" + std::to_string(s.mu) + " braids=" + (s.unequal_braid_exists ? "yes" : "no") +
                             " mu^2-mu-1=0:" + (s.stated_root ? "yes" : "no") +
                             " mu^2-mu+1=0:" + (s.corrected_root ? "yes" : "no"));
    }
  }
}

// ---- verify ---------------------------------------------------------------

void cmd_verify(Report& r, const SporadicTable& table, std::uint64_t max_q) {
  const auto checks = check_sporadic_table(table);
  const bool table_ok = all_ok(checks);
  {
    auto& c = r.add("sporadic table", cli::pass_if(table_ok));
    for (const auto& t : checks) {
      c.items.push_back({{"check", t.name}, {"ok", t.ok}, {"detail", t.detail}});
      if (!t.ok) c.item_lines.push_back("FAIL " + t.name + ": " + t.detail);
    }
    c.add("checks", std::to_string(checks.size()));
  }
  {
    bool ok = true;
    auto& c = r.add("symplectic order formula, g = 2..10", Status::Pass);
    for (unsigned g = 2; g <= 10; ++g) {
      const BigInt a = universal_order(LieFamily::C, g, 2);
      const BigInt b = sp_order(g);
      ok = ok && a == b;
      c.item_lines.push_back("Sp_" + std::to_string(2 * g) + "(2) = " + dec(b) + (a == b ? "" : " MISMATCH " + dec(a)));
      c.items.push_back({{"g", std::to_string(g)}, {"shape", dec(a)}, {"closed_form", dec(b)}});
    }
    c.status = cli::pass_if(ok);
  }
  for (unsigned g = 3; g <= 12; ++g) add_trace(r, verify_alt_chain(g, {.exact_factorial = g <= 8}));
  add_trace(r, verify_exceptional_inequalities());

  if (!table_ok) {
    r.add("g(K) column", Status::Skipped).add("reason", "sporadic table failed its checks");
    r.add("pipeline g=3..10", Status::Skipped).add("reason", "sporadic table failed its checks");
  } else {
    bool ok = true;
    auto& c = r.add("g(K) column", Status::Pass);
    for (const auto& rec : table.sporadics) {
      if (!rec.g_k) continue;
      const unsigned got = g_of_order(rec.order);
      ok = ok && got == *rec.g_k;
      c.item_lines.push_back(rec.name + ": " + std::to_string(got) + (got == *rec.g_k ? "" : " (table " +
                                                                       std::to_string(*rec.g_k) + ")"));
      c.items.push_back({{"group", rec.name}, {"g_K", std::to_string(got)}, {"table", std::to_string(*rec.g_k)}});
    }
    c.status = cli::pass_if(ok);
    for (unsigned g = 3; g <= 10; ++g) pipeline_check(r, g, max_q, table);
  }
  flag_scan_check(r, 3, 2);
  flag_scan_check(r, 3, 3);
  flag_scan_check(r, 4, 2);
}

struct UsageError {
  std::string type;
  std::string message;
  std::optional<std::size_t> position;
};

int emit(const Report& r, const std::optional<UsageError>& err, bool json) {
  if (json) {
    auto doc = r.to_json(SPQ_VERSION);
    if (err) {
      doc["status"] = "error";
      ordered_json e{{"type", err->type}, {"message", err->message}};
      if (err->position) e["position"] = std::to_string(*err->position);
      doc["error"] = e;
    }
    std::cout << doc.dump(2) << "\n";
  } else if (err) {
    std::cerr << "error: " << err->message << "\n";
  } else {
    r.print_text(std::cout);
  }
  if (err) return 2;
  return r.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spq-verify: exact checks on finite simple group orders, the exclusion pipeline and matrix scans.\n\n"
      "Group names: A(n,q) or A_n(q) and likewise for B C D G2 F4 E6 E7 E8 and the twisted\n"
      "families 2A 2D 3D4 2B2 2G2 2F4 2E6; classical sugar L(n,q) U(n,q) Sp(2n,q) O(2n+1,q)\n"
      "O+(2n,q) O-(2n,q); Alt(n) or Alt_n; Z(p); sporadic names (M11 ... Fi24' B M) and Tits."};
  app.set_version_flag("--version", SPQ_VERSION);
  app.require_subcommand(1);

  bool json = false;
  std::string sporadic_data;
  app.add_flag("--json", json, "print a JSON report (all numbers as decimal strings)");
  app.add_option("--sporadic-data", sporadic_data, "load the sporadic table from this file instead of the built-in copy")
      ->check(CLI::ExistingFile);

  auto* order_cmd = app.add_subcommand("order", "order, simplicity, canonical form and g(K) of one group");
  std::string order_name;
  order_cmd->add_option("name", order_name, "group name")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run every check; non-zero exit on any failure");
  std::uint64_t max_q = kPipelineQLimit;
  verify_cmd->add_option("--max-q", max_q, "largest q enumerated group by group in the pipeline")
      ->check(CLI::Range(std::uint64_t{16}, std::uint64_t{1} << 20));

  auto* enum_cmd = app.add_subcommand("enumerate", "simple groups of order at most N (or |Sp_2g(2)| for sp:g)");
  EnumerateArgs ea;
  enum_cmd->add_option("target", ea.target, "N or sp:g");
  enum_cmd->add_option("--bound", ea.bound, "order bound as a decimal integer");
  enum_cmd->add_option("--max-q", ea.max_q, "largest q listed individually; larger q are reported as series")
      ->check(CLI::Range(std::uint64_t{16}, std::uint64_t{1} << 20));
  enum_cmd->add_option("--max-rank", ea.max_rank, "only show Lie-type groups up to this rank");

  auto* pipe_cmd = app.add_subcommand("pipeline", "classify every simple group of order at most |Sp_2g(2)|");
  unsigned genus = 0;
  std::uint64_t pipe_max_q = kPipelineQLimit;
  pipe_cmd->add_option("g,--genus,-g", genus, "genus (3.." + std::to_string(kMaxGenus) + ")")->required();
  pipe_cmd->add_option("--max-q", pipe_max_q, "largest q enumerated group by group")
      ->check(CLI::Range(std::uint64_t{16}, std::uint64_t{1} << 20));

  auto* flag_cmd = app.add_subcommand("flag-scan", "exhaustive invariant-flag check over GL_n(q)");
  std::size_t n = 3;
  std::uint32_t q = 2;
  flag_cmd->add_option("n", n, "matrix size (3..5)")->required();
  flag_cmd->add_option("q", q, "field size, a prime power")->required();

  auto* braid_cmd = app.add_subcommand("braid", "triple product, swap case and golden braid scan over GF(q)");
  std::uint32_t braid_q = 7;
  braid_cmd->add_option("q", braid_q, "field size, a prime power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report report;
  for (int i = 1; i < argc; ++i) report.command.emplace_back(argv[i]);
  std::optional<UsageError> err;
  try {
    std::optional<SporadicTable> loaded;
    if (!sporadic_data.empty()) loaded = load_sporadic_table(sporadic_data);
    const SporadicTable& table = loaded ? *loaded : builtin_sporadic_table();

    if (*order_cmd) {
      cmd_order(report, order_name);
    } else if (*verify_cmd) {
      cmd_verify(report, table, max_q);
    } else if (*enum_cmd) {
      cmd_enumerate(report, ea);
    } else if (*pipe_cmd) {
      if (genus < 3 || genus > kMaxGenus)
        throw RangeError("pipeline needs 3 <= g <= " + std::to_string(kMaxGenus));
      pipeline_check(report, genus, pipe_max_q, table);
    } else if (*flag_cmd) {
      flag_scan_check(report, n, q);
    } else if (*braid_cmd) {
      braid_checks(report, braid_q);
    }
  } catch (const ParseError& e) {
    err = UsageError{"ParseError", e.what(), e.position()};
  } catch (const UnknownGroup& e) {
    err = UsageError{"UnknownGroup", e.what(), std::nullopt};
  } catch (const RangeError& e) {
    err = UsageError{"RangeError", e.what(), std::nullopt};
  } catch (const Error& e) {
    err = UsageError{"InvalidParameters", e.what(), std::nullopt};
  }
  return emit(report, err, json);
}
