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

// Acceptance runner: one PASS/FAIL line per criterion. With --criterion N
// only that one runs; the exit status is non-zero when any selected
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "naive_enum.hpp"
#include "printed_tables.hpp"
#include "spq/alt_chain.hpp"
#include "spq/braid_checks.hpp"
#include "spq/catalog.hpp"
#include "spq/errors.hpp"
#include "spq/exact_arith.hpp"
#include "spq/exceptional.hpp"
#include "spq/flag_oracle.hpp"
#include "spq/quotient_filter.hpp"
#include "spq/rank_bounds.hpp"
#include "spq/sporadic_table.hpp"

using namespace spq;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(std::string what) {
    ok = false;
    notes.push_back("FAILED " + std::move(what));
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

void table_reproduction(Outcome& out) {
  for (const auto& [g, digits] : oracle::kPrintedSp) {
    const std::string got = to_decimal(universal_order(LieFamily::C, g, 2));
    if (got != digits) out.fail("Sp_" + std::to_string(2 * g) + "(2): " + got + " vs printed " + digits);
    if (to_decimal(sp_order(g)) != digits) out.fail("sp_order(" + std::to_string(g) + ")");
  }
  const auto& table = builtin_sporadic_table();
  for (const auto& [name, digits] : oracle::kPrinted) {
    const auto* rec = table.find(name);
    if (!rec) {
      out.fail(std::string(name) + " missing");
      continue;
    }
    if (to_decimal(rec->order) != digits) out.fail(std::string(name) + ": " + to_decimal(rec->order));
  }
  for (const auto& c : check_sporadic_table(table)) {
    if (!c.ok) out.fail(c.name + ": " + c.detail);
  }
  out.note(std::to_string(oracle::kPrintedSp.size()) + " symplectic rows, " + std::to_string(oracle::kPrinted.size()) +
           " sporadic orders");
}

void main_pipeline(Outcome& out) {
  for (unsigned g = 3; g <= 10; ++g) {
    const auto r = run_pipeline(g);
    std::size_t excluded = 0;
    for (const auto& e : r.entries) {
      if (!e.verdict.excluded()) continue;
      ++excluded;
      if (e.verdict.witness.empty()) out.fail(e.group.name() + " excluded without a witness at g=" + std::to_string(g));
    }
    for (const auto& s : r.series) {
      if (s.verdict.excluded() && s.verdict.witness.empty()) out.fail(s.series.name() + " without a witness");
    }
    std::string names;
    for (const auto& s : r.survivors) names += (names.empty() ? "" : ", ") + s;
    if (!r.theorem_holds()) {
      out.fail("g=" + std::to_string(g) + " survivors {" + names + "}");
    } else {
      out.note("g=" + std::to_string(g) + ": " + std::to_string(excluded) + " excluded, survivor " + names);
    }
  }
}

void gk_column(Outcome& out) {
  for (const auto& [name, want] : oracle::kPrintedGk) {
    const unsigned got = g_of(GroupId::sporadic(name));
    if (got != want) out.fail(std::string(name) + ": g(K)=" + std::to_string(got) + ", printed " + std::to_string(want));
  }
  out.note(std::to_string(oracle::kPrintedGk.size()) + " groups compared");
}

void exceptional_inequalities(Outcome& out) {
  const auto t = verify_exceptional_inequalities();
  for (const auto& s : t.steps) {
    if (s.informational) {
      out.note(s.label + ": " + s.lhs + " " + s.relation + " " + s.rhs);
    } else if (!s.ok) {
      out.fail(s.label + ": lhs " + s.lhs + ", rhs " + s.rhs);
    }
  }
  out.note("|3D4(2)| = " + to_decimal(order(GroupId::lie(LieFamily::D4_3, 2))));
  out.note("|2F4(2)| = " + to_decimal(order(GroupId::lie(LieFamily::F4_2, 2))));
}

void alternating_chain(Outcome& out) {
  for (unsigned g = 3; g <= 12; ++g) {
    const auto t = verify_alt_chain(g, {.exact_factorial = g <= 8});
    if (!t.ok()) out.fail("g=" + std::to_string(g) + " at step: " + t.steps[t.first_failure()].label);
  }
  out.note("exact factorial for g=3..8, surrogate chain for g=3..12");
}

void p_rank_property(Outcome& out) {
  std::size_t checked = 0;
  for (LieFamily f : kAllFamilies) {
    const unsigned hi = fixed_rank(f) ? *fixed_rank(f) : 8u;
    for (unsigned r = min_rank(f); r <= hi; ++r) {
      if (max_factor_multiplicity(f, r) != 1)
        out.fail(std::string(family_token(f)) + " rank " + std::to_string(r) + " has a squared cyclotomic factor");
      for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
        std::optional<GroupId> g;
        try {
          g = GroupId::lie(f, r, q);
        } catch (const InvalidParameters&) {
          continue;  // e.g. Suzuki groups outside q = 2^odd
        }
        for (std::uint64_t p : {3, 5, 7, 11, 13}) {
          if (q % p == 0) continue;
          ++checked;
          const auto b = p_rank_upper_bound(*g, p);
          if (b.bound > r) out.fail(g->name() + " p=" + std::to_string(p) + " bound " + std::to_string(b.bound));
        }
      }
    }
  }
  out.note(std::to_string(checked) + " (group, p) pairs");
}

void flag_oracle(Outcome& out) {
  const struct {
    std::size_t n;
    std::uint32_t q;
    std::uint64_t gl;
  } cases[] = {{3, 2, 168}, {3, 3, 11232}, {4, 2, 20160}};
  for (const auto& c : cases) {
    const auto r = flag_scan(c.n, c.q);
    std::ostringstream os;
    os << "GL_" << c.n << "(" << c.q << "): " << r.scanned << " scanned, " << r.eligible << " eligible, "
       << r.violation_count << " violations";
    if (r.scanned != c.gl) out.fail(os.str() + " (expected " + std::to_string(c.gl) + " matrices)");
    else if (!r.ok()) out.fail(os.str() + (r.violations.empty() ? "" : ", first: " + r.violations[0].what));
    else out.note(os.str());
  }
}

void matrix_identities(Outcome& out) {
  const auto tp = verify_triple_product(FiniteField::get(7, 1));
  if (tp.pairs != 36 || !tp.ok()) out.fail("triple product over GF(7): " + std::to_string(tp.failures.size()) + " failures");
  else out.note("triple product: 36 pairs hold");

  std::size_t stated = 0, corrected = 0;
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}}) {
    const auto rep = golden_braid_scan(FiniteField::get(p, k));
    const auto bad = rep.stated_counterexamples();
    stated += bad.size();
    corrected += rep.corrected_counterexamples().size();
    std::string mus;
    for (auto m : bad) mus += (mus.empty() ? "" : ",") + std::to_string(m);
    if (!bad.empty()) out.fail("GF(" + std::to_string(rep.q) + "): mu^2-mu-1 rule wrong at mu in {" + mus + "}");
  }
  out.note("counterexamples to mu^2-mu-1: " + std::to_string(stated) + "; to mu^2-mu+1: " + std::to_string(corrected));
}

void enumeration_oracle(Outcome& out) {
  const BigInt bound(1000000);
  const auto got = enumerate_simple_below(bound);
  const auto want = oracle::naive_simple_groups(bound);
  if (!got.fully_explicit()) out.fail("enumeration left series blocks");
  if (got.groups.size() != want.size())
    out.fail(std::to_string(got.groups.size()) + " groups vs oracle " + std::to_string(want.size()));
  for (std::size_t i = 0; i < std::min(got.groups.size(), want.size()); ++i) {
    if (got.groups[i].group.name() != want[i].name || got.groups[i].order != want[i].order) {
      out.fail("position " + std::to_string(i) + ": " + got.groups[i].group.name() + " vs " + want[i].name);
      break;
    }
  }
  out.note(std::to_string(got.groups.size()) + " groups");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_flag("-v,--verbose", verbose, "print details for passing criteria too");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "table reproduction", 1.0, table_reproduction},
      {2, "main theorem pipeline, g = 3..10", 30.0, main_pipeline},
      {3, "g(K) column", 1.0, gk_column},
      {4, "exceptional order inequalities", 1.0, exceptional_inequalities},
      {5, "alternating chain", 60.0, alternating_chain},
      {6, "p-rank bound property", 10.0, p_rank_property},
      {7, "flag oracle exhaustive scans", 300.0, flag_oracle},
      {8, "matrix identities and golden braid scan", 30.0, matrix_identities},
      {9, "enumeration oracle equivalence at 10^6", 10.0, enumeration_oracle},
  };

  bool all_ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
    all_ok = all_ok && out.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing << ")\n";
    if (!out.ok || verbose) {
      for (const auto& n : out.notes) std::cout << "      " << n << "\n";
    }
  }
  return all_ok ? 0 : 1;
}
