// ringlab - exact computations on finite rings.
//
// Subcommands:
//   compute    Pr(R), Pr(S,R), Pr(S), centers and commutator data for one ring
//   verify     run theorem checks over a corpus or a single ring
//   isoclinic  decide Z-isoclinism between two (subring, ring) pairs
//   subrings   list every subring of a ring with its Pr(S,R)
//
// Exit codes: 0 success / all checks hold, 1 a theorem check failed,
// 2 input or usage error, 3 cap or budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringlab/bounds.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/isoclin.hpp"
#include "ringlab/prob.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ringspec.hpp"
#include "ringlab/version.hpp"

namespace {

using namespace ringlab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct LoadedSpec {
  RingSpecDocument doc;
  std::string source_name;  // path or "<inline>"
  std::string source_text;  // what the digest covers
};

/// --ring accepts a path to a ring-spec file, inline spec text, or a bare
/// builtin expression like "zn(8)".
LoadedSpec load_spec(const std::string& value) {
  LoadedSpec out;
  std::error_code ec;
  if (std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::stringstream ss;
    ss << in.rdbuf();
    out.source_text = ss.str();
    out.source_name = value;
    out.doc = parse_ringspec(out.source_text);
    return out;
  }
  out.source_name = "<inline>";
  if (value.find('\n') != std::string::npos || value.rfind("ring ", 0) == 0 ||
      value == "ring") {
    out.source_text = value;
    out.doc = parse_ringspec(value);
    return out;
  }
  out.source_text = value;
  out.doc.ring = parse_ring_expr(value);
  out.doc.builtin_expr = value;
  out.doc.name = out.doc.ring.name;
  return out;
}

/// Subring selector against a loaded document: a name from the spec file, a
/// builtin-attached name, "zero"/"full", or "gen:<exprs>".
Subring select_subring(const RingSpecDocument& doc, const FiniteRing& ring,
                       const std::string& sel) {
  if (sel.rfind("gen:", 0) == 0) {
    std::vector<Elem> gens;
    std::stringstream ss(sel.substr(4));
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) gens.push_back(parse_element_expr(ring, part));
    return subring_closure(ring, gens);
  }
  if (const std::vector<Elem>* gens = doc.find_subring(sel))
    return subring_closure(ring, *gens);
  return named_subring(ring, sel);  // zero/full/builtin-attached, or throws
}

Json subring_json(const std::string& label, const Subring& s) {
  const FiniteRing& r = s.ring();
  const Rational a = pr_pair_count(s);
  const Rational b = pr_centralizer_sum(s);
  const Rational c = pr_coset_form(s);
  if (!(a == b && b == c))
    throw InternalMismatch("probability formulas disagree on subring " + label + ": " + a.str() +
                           ", " + b.str() + ", " + c.str());

  Json j;
  j["kind"] = "subring";
  j["name"] = label;
  j["order"] = s.size();
  if (s.size() <= 32) {
    Json els = Json::array();
    for (Elem x : s.elements) els.push_back(element_str(r, x));
    j["elements"] = std::move(els);
  }
  j["pr_sr"] = a.str();
  j["pr_formulas_agree"] = true;
  j["pr_s"] = pr(s).str();
  j["z_sr_order"] = relative_center(s).size();
  j["k_sr_order"] = static_cast<long long>(commutator_set(s).size());
  j["commutator_subgroup_order"] = commutator_subgroup(s).size();
  Json csizes = Json::array();
  for (Elem x : s.elements) csizes.push_back(centralizer(full_subring(r), x).size());
  j["centralizer_orders"] = std::move(csizes);
  return j;
}

Json ring_json(const FiniteRing& r) {
  Json j;
  j["kind"] = "ring";
  j["name"] = r.name;
  j["order"] = r.order();
  j["cyclic_orders"] = r.additive.cyclic_orders;
  j["commutative"] = r.is_commutative();
  j["center_order"] = center(r).size();
  const Subring whole = full_subring(r);
  const Rational a = pr_pair_count(whole);
  const Rational b = pr_centralizer_sum(whole);
  const Rational c = pr_coset_form(whole);
  if (!(a == b && b == c))
    throw InternalMismatch("probability formulas disagree on Pr(R): " + a.str() + ", " + b.str() +
                           ", " + c.str());
  j["pr"] = a.str();
  j["pr_formulas_agree"] = true;
  return j;
}

int cmd_compute(const std::string& ring_arg, const std::vector<std::string>& subring_sel,
                const std::string& format) {
  const LoadedSpec spec = load_spec(ring_arg);
  const FiniteRing& r = spec.doc.ring;

  Report rep;
  rep.inputs.emplace_back(spec.source_name, fnv1a_hex(spec.source_text));
  rep.results.push_back(ring_json(r));

  std::vector<std::pair<std::string, Subring>> selected;
  if (!subring_sel.empty()) {
    for (const std::string& sel : subring_sel)
      selected.emplace_back(sel, select_subring(spec.doc, r, sel));
  } else {
    for (const auto& [label, gens] : spec.doc.subrings)
      selected.emplace_back(label, subring_closure(r, gens));
    for (const auto& [label, gens] : r.named_subrings)
      selected.emplace_back(label, subring_closure(r, gens));
  }
  for (const auto& [label, s] : selected) rep.results.push_back(subring_json(label, s));

  rep.summary.emplace_back("results", static_cast<long long>(rep.results.size()));
  rep.status = "ok";
  std::cout << render_report(rep, format);
  return kExitOk;
}

int cmd_subrings(const std::string& ring_arg, long long cap, const std::string& format) {
  const LoadedSpec spec = load_spec(ring_arg);
  const FiniteRing& r = spec.doc.ring;

  Report rep;
  rep.inputs.emplace_back(spec.source_name, fnv1a_hex(spec.source_text));
  rep.results.push_back(ring_json(r));
  const std::vector<Subring> subs = enumerate_subrings(r, cap);
  long long idx = 0;
  for (const Subring& s : subs)
    rep.results.push_back(subring_json("S" + std::to_string(idx++), s));
  rep.summary.emplace_back("subrings", static_cast<long long>(subs.size()));
  rep.status = "ok";
  std::cout << render_report(rep, format);
  return kExitOk;
}

int cmd_verify(const std::string& corpus_sel, const std::string& ring_arg,
               const std::string& theorems, long long cap, const std::string& format) {
  SweepOptions opt;
  opt.subring_enum_max = cap;
  const bool explicit_theorems = theorems != "all";
  if (explicit_theorems) {
    std::stringstream ss(theorems);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      if (!is_known_theorem_id(id)) {
        std::cerr << "unknown theorem id: " << id << "\n";
        return kExitUsage;
      }
      opt.theorems.insert(id);
    }
    if (opt.theorems.empty()) {
      std::cerr << "no theorem ids selected\n";
      return kExitUsage;
    }
  }

  Report rep;
  std::vector<std::shared_ptr<const FiniteRing>> rings;
  if (!ring_arg.empty()) {
    const LoadedSpec spec = load_spec(ring_arg);
    rings.push_back(std::make_shared<const FiniteRing>(spec.doc.ring));
    rep.inputs.emplace_back(spec.source_name, fnv1a_hex(spec.source_text));
  } else if (corpus_sel.rfind("builtin<=", 0) == 0) {
    long long n = 0;
    try {
      n = std::stoll(corpus_sel.substr(9));
    } catch (const std::exception&) {
      std::cerr << "bad corpus selector: " << corpus_sel << "\n";
      return kExitUsage;
    }
    rings = builtin_corpus(n);
    rep.inputs.emplace_back(corpus_sel, fnv1a_hex(corpus_sel));
  } else {
    // explicit file list, comma separated
    std::stringstream ss(corpus_sel);
    std::string path;
    while (std::getline(ss, path, ',')) {
      if (path.empty()) continue;
      std::error_code ec;
      if (!std::filesystem::is_regular_file(path, ec)) {
        std::cerr << "corpus selector must be builtin<=N or a list of ring-spec files; '"
                  << path << "' is neither\n";
        return kExitUsage;
      }
      const LoadedSpec spec = load_spec(path);
      rings.push_back(std::make_shared<const FiniteRing>(spec.doc.ring));
      rep.inputs.emplace_back(spec.source_name, fnv1a_hex(spec.source_text));
    }
    if (rings.empty()) {
      std::cerr << "empty corpus selector\n";
      return kExitUsage;
    }
  }

  const SweepOutcome out = run_theorem_sweep(rings, opt);

  for (const auto& [id, t] : out.tally) {
    Json j;
    j["kind"] = "theorem_tally";
    j["theorem"] = id;
    j["checked"] = t.checked;
    j["passed"] = t.passed;
    j["skipped"] = t.skipped;
    rep.results.push_back(std::move(j));
  }
  if (explicit_theorems)
    for (const auto& skip : out.skips) {
      Json j;
      j["kind"] = "skip";
      j["theorem"] = skip.theorem_id;
      j["subject"] = skip.subject;
      j["reason"] = skip.reason;
      rep.results.push_back(std::move(j));
    }
  for (const auto& v : out.violations) {
    Json j;
    j["kind"] = "violation";
    j["theorem"] = v.theorem_id;
    j["subject"] = v.subject;
    j["check"] = json_of(v.check);
    rep.results.push_back(std::move(j));
  }

  rep.summary.emplace_back("rings", static_cast<long long>(rings.size()));
  rep.summary.emplace_back("checked", out.total_checked());
  rep.summary.emplace_back("passed", out.total_passed());
  rep.summary.emplace_back("skipped", out.total_skipped());
  rep.summary.emplace_back("violations", static_cast<long long>(out.violations.size()));
  rep.status = out.ok() ? "ok" : "violation";
  std::cout << render_report(rep, format);
  return out.ok() ? kExitOk : kExitViolation;
}

/// --pair syntax: "<ringspec>[:<subring>]"; without a subring the pair is
/// (R, R).
std::pair<LoadedSpec, Subring> load_pair(const std::string& value, const FiniteRing** ring_out,
                                         std::vector<std::unique_ptr<FiniteRing>>& keep) {
  std::string ring_part = value;
  std::string sub_part;
  const std::size_t colon = value.rfind(':');
  if (colon != std::string::npos && value.find('(', colon) == std::string::npos &&
      value.find('/', colon) == std::string::npos) {
    ring_part = value.substr(0, colon);
    sub_part = value.substr(colon + 1);
  }
  LoadedSpec spec = load_spec(ring_part);
  keep.push_back(std::make_unique<FiniteRing>(std::move(spec.doc.ring)));
  const FiniteRing& r = *keep.back();
  *ring_out = &r;
  Subring s = sub_part.empty() ? full_subring(r) : select_subring(spec.doc, r, sub_part);
  return {std::move(spec), std::move(s)};
}

Json invariants_json(const PairInvariants& inv) {
  Json j;
  j["quotient"] = inv.quotient_factors;
  j["sub_quotient"] = inv.sub_quotient_factors;
  j["commutator"] = inv.commutator_factors;
  j["pr"] = inv.pr_value.str();
  return j;
}

int cmd_isoclinic(const std::vector<std::string>& pair_args, long long budget,
                  const std::string& format) {
  if (pair_args.size() != 2) {
    std::cerr << "isoclinic needs exactly two --pair arguments\n";
    return kExitUsage;
  }
  std::vector<std::unique_ptr<FiniteRing>> keep;
  const FiniteRing* r1 = nullptr;
  const FiniteRing* r2 = nullptr;
  auto [spec1, s1] = load_pair(pair_args[0], &r1, keep);
  auto [spec2, s2] = load_pair(pair_args[1], &r2, keep);

  const RingPair p1 = RingPair::make(*r1, std::move(s1));
  const RingPair p2 = RingPair::make(*r2, std::move(s2));

  Report rep;
  rep.inputs.emplace_back(spec1.source_name, fnv1a_hex(spec1.source_text));
  rep.inputs.emplace_back(spec2.source_name, fnv1a_hex(spec2.source_text));

  const IsoclinismDecision d = decide_isoclinism(p1, p2, budget);

  Json j;
  j["kind"] = "isoclinism";
  j["pair1"] = r1->name + " with |S| = " + std::to_string(p1.sub.size());
  j["pair2"] = r2->name + " with |S| = " + std::to_string(p2.sub.size());
  j["invariants1"] = invariants_json(pair_invariants(p1));
  j["invariants2"] = invariants_json(pair_invariants(p2));
  switch (d.kind) {
    case IsoclinismDecision::Kind::witness: {
      j["verdict"] = "isoclinic";
      Json w;
      Json phi = Json::array();
      for (Elem c = 0; c < p1.quo.order(); ++c)
        phi.push_back(element_str(*r1, p1.quo.coset_reps[static_cast<std::size_t>(c)]) + "+Z -> " +
                      element_str(*r2, p2.quo.coset_reps[static_cast<std::size_t>(
                                           d.witness->phi[static_cast<std::size_t>(c)])]) +
                      "+Z");
      w["phi"] = std::move(phi);
      Json psi = Json::array();
      for (std::size_t i = 0; i < d.witness->psi_domain.size(); ++i)
        psi.push_back(element_str(*r1, d.witness->psi_domain[i]) + " -> " +
                      element_str(*r2, d.witness->psi_image[i]));
      w["psi"] = std::move(psi);
      w["transcript"] = d.witness->transcript;
      j["witness"] = std::move(w);
      rep.results.push_back(std::move(j));
      rep.results.push_back(json_of(verify_invariance(p1, p2, *d.witness)));
      rep.results.push_back(json_of(verify_coset_commutator_iso(p1, p2, *d.witness)));
      break;
    }
    case IsoclinismDecision::Kind::not_isoclinic:
      j["verdict"] = "not_isoclinic";
      j["reason"] = d.reason;
      rep.results.push_back(std::move(j));
      break;
    case IsoclinismDecision::Kind::undecided:
      j["verdict"] = "undecided";
      j["reason"] = d.reason;
      rep.results.push_back(std::move(j));
      break;
  }

  rep.summary.emplace_back("results", static_cast<long long>(rep.results.size()));
  rep.status = d.kind == IsoclinismDecision::Kind::undecided ? "undecided" : "ok";
  std::cout << render_report(rep, format);
  return d.kind == IsoclinismDecision::Kind::undecided ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab - exact commuting-probability and Z-isoclinism computations on finite rings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string format = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* compute = app.add_subcommand("compute", "Probabilities and invariants for one ring");
  std::string compute_ring;
  std::vector<std::string> compute_subrings;
  compute->add_option("--ring", compute_ring, "Ring-spec file, inline spec, or builtin expression")
      ->required();
  compute->add_option("--subring", compute_subrings,
                      "Subring selector: spec name, builtin name, zero, full, or gen:<exprs>");
  add_format(compute);

  auto* verify = app.add_subcommand("verify", "Run theorem checks over a corpus or one ring");
  std::string corpus = "builtin<=16";
  std::string verify_ring;
  std::string theorems = "all";
  long long cap = 32;
  verify->add_option("--corpus", corpus, "Corpus selector: builtin<=N (default builtin<=16)");
  verify->add_option("--ring", verify_ring, "Verify a single ring instead of a corpus");
  verify->add_option("--theorems", theorems, "Comma-separated theorem ids, or 'all'");
  verify->add_option("--cap", cap, "Enumerate subrings only for rings of order <= cap");
  add_format(verify);

  auto* iso = app.add_subcommand("isoclinic", "Decide Z-isoclinism between two pairs");
  std::vector<std::string> pairs;
  long long budget = kDefaultPhiBudget;
  iso->add_option("--pair", pairs, "Pair spec '<ring>[:<subring>]' (give twice)");
  iso->add_option("--budget", budget, "Candidate budget for the phi search");
  add_format(iso);

  auto* subs = app.add_subcommand("subrings", "List all subrings with their Pr(S,R)");
  std::string subs_ring;
  long long subs_cap = kDefaultRingCap;
  subs->add_option("--ring", subs_ring, "Ring-spec file, inline spec, or builtin expression")
      ->required();
  subs->add_option("--cap", subs_cap, "Enumeration cap on the ring order");
  add_format(subs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_ring, compute_subrings, format);
    if (*verify) return cmd_verify(corpus, verify_ring, theorems, cap, format);
    if (*iso) return cmd_isoclinic(pairs, budget, format);
    if (*subs) return cmd_subrings(subs_ring, subs_cap, format);
  } catch (const SpecSyntaxError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
