#include "cli.hpp"

#include "hopfz/catalog.hpp"
#include "hopfz/io.hpp"
#include "hopfz/koszul.hpp"
#include "hopfz/primitivize.hpp"
#include "hopfz/qsymm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hopfz::cli {

namespace {

using nlohmann::json;

struct Report {
  std::string command;
  std::string verdict;
  json payload = json::object();
  std::vector<std::string> human;
  int exit_code = kSuccess;
};

struct Options {
  std::string format = "human";
  std::optional<std::uint64_t> seed;
  std::optional<int> degree;
  std::string input;
  std::string preset;
  std::vector<std::string> qsymm_args;
  int n = 0;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

HopfPresentation with_truncation(const HopfPresentation& p, int degree) {
  std::map<Letter, TensorSquareElement> reduced;
  for (Letter g = 0; g < p.alphabet()->size(); ++g)
    reduced.emplace(g, p.reduced_coproduct_of(g));
  return HopfPresentation(p.alphabet(), std::move(reduced), degree);
}

HopfPresentation load_presentation(const Options& o) {
  if (!o.preset.empty() && !o.input.empty())
    throw PreconditionError("give either an input file or --preset, not both");
  if (!o.preset.empty())
    return o.degree ? catalog::preset(o.preset, *o.degree) : catalog::preset(o.preset);
  if (o.input.empty()) throw PreconditionError("an input file or --preset is required");
  HopfPresentation p = [&] {
    try {
      return io::parse_presentation(read_input(o.input));
    } catch (const ParseError& e) {
      throw ParseError(o.input + ": " + e.what());
    }
  }();
  return o.degree ? with_truncation(p, *o.degree) : p;
}

json decision_payload(const HopfPresentation& p, const LieHopfDecision& d, Report& r) {
  json out = json::object();
  if (d.is_lie_hopf()) {
    const ChangeOfBasis& change = d.change_of_basis();
    out["change_of_basis"] = json::parse(io::emit_change_of_basis(change));
    bool primitive = true;
    for (const Element& x : change.new_generators) primitive = primitive && is_primitive(p, x);
    out["new_generators_primitive"] = primitive;
    bool identity = true;
    for (Letter g = 0; g < change.alphabet->size(); ++g) {
      if (change.corrections[g].is_zero()) continue;
      identity = false;
      r.human.push_back("  " + (*change.alphabet)[g].id + " -> " +
                        change.new_generators[g].to_string());
    }
    if (identity) r.human.push_back("  change of basis: identity");
    r.human.push_back("  new generators primitive: " + std::string(primitive ? "yes" : "no"));
  } else {
    const ObstructionCertificate& cert = d.certificate();
    out["certificate"] = json::parse(io::emit_certificate(cert));
    r.human.push_back("  obstructed generator: " + cert.generator + " (degree " +
                      std::to_string(cert.degree) + ")");
    r.human.push_back("  system: " + cert.equations());
    std::string functional;
    for (const auto& x : cert.witness.functional)
      functional += (functional.empty() ? "" : ", ") + x.get_str();
    r.human.push_back("  witness: functional (" + functional + "), modulus " +
                      cert.witness.modulus.get_str() + ", residue " +
                      cert.witness.residue.get_str());
  }
  return out;
}

Report cmd_decide(const Options& o) {
  Report r;
  r.command = "decide";
  r.verdict = "";
  const HopfPresentation p = load_presentation(o);
  const LieHopfDecision d = lie_hopf_decision(p);
  r.verdict = d.is_lie_hopf() ? "is_lie_hopf" : "not_lie_hopf";
  r.exit_code = d.is_lie_hopf() ? kSuccess : kNegative;
  r.payload = decision_payload(p, d, r);
  r.payload["presentation"] = json::parse(io::emit_presentation(p));
  return r;
}

Report cmd_verify(const Options& o) {
  Report r;
  r.command = "verify";
  r.verdict = "";
  const HopfPresentation p = load_presentation(o);
  const int top = o.degree.value_or(p.truncation_degree());
  json checks = json::array();
  bool passed = true;
  for (const AxiomReport& a : verify_hopf_axioms(p, top)) {
    json entry = {{"check", a.check}, {"passed", a.passed}};
    std::string line = "  " + a.check + ": " + (a.passed ? "pass" : "FAIL");
    if (!a.passed) {
      passed = false;
      entry["failing_degree"] = a.failing_degree.value_or(0);
      entry["failing_element"] = a.failing_element;
      entry["detail"] = a.detail;
      line += " at " + a.failing_element + " (" + a.detail + ")";
    }
    checks.push_back(entry);
    r.human.push_back(line);
  }
  r.verdict = passed ? "pass" : "fail";
  r.exit_code = passed ? kSuccess : kNegative;
  r.payload = {{"degree", top}, {"checks", checks}};
  return r;
}

Report cmd_moment_angle(const Options& o) {
  Report r;
  r.command = "moment-angle";
  r.verdict = "";
  if (o.input.empty()) throw PreconditionError("a complex file is required");
  const koszul::SimplicialComplex k = [&] {
    try {
      return io::parse_complex(read_input(o.input));
    } catch (const ParseError& e) {
      throw ParseError(o.input + ": " + e.what());
    }
  }();
  std::size_t top_face = 0;
  for (const auto& f : k.maximal_faces()) top_face = std::max(top_face, f.size());
  // dim Z_K = m + dim K + 1
  const int top = o.degree.value_or(k.vertex_count() + static_cast<int>(top_face));
  koszul::CohomologyOptions opts;
  opts.scramble_seed = o.seed;
  const koszul::Cohomology h = koszul::cohomology(koszul::build_dga(k), top, opts);

  json ranks = json::array(), torsion = json::array(), classes = json::array();
  std::string rank_line = "  ranks:";
  for (const auto& d : h.degrees()) {
    ranks.push_back(d.rank);
    rank_line += " " + std::to_string(d.rank);
    for (const auto& t : d.torsion) torsion.push_back({{"degree", d.degree}, {"factor", t.get_str()}});
  }
  r.human.push_back(rank_line);
  for (const auto& c : h.classes()) {
    classes.push_back({{"label", c.label}, {"degree", c.degree},
                       {"representative", c.representative.to_string()}});
    r.human.push_back("  " + c.label + " = [" + c.representative.to_string() + "]");
  }
  r.payload = {{"max_degree", top}, {"ranks", ranks}, {"torsion", torsion}, {"classes", classes}};

  if (h.has_torsion()) {
    r.verdict = "fail";
    r.exit_code = kNegative;
    r.payload["decide"] = {{"aborted", "cohomology has torsion; dualization needs torsion-free homology"}};
    r.human.push_back("  decide: aborted, cohomology has torsion");
    return r;
  }
  const koszul::CupStructure cup = koszul::cup_structure(h);
  json products = json::array();
  const auto& cls = h.classes();
  for (const auto& [pair, coords] : cup.products) {
    if (cls[pair.first].degree == 0 || cls[pair.second].degree == 0) continue;
    std::string text;
    json terms = json::array();
    for (const auto& [kx, c] : coords) {
      terms.push_back({{"class", cls[kx].label}, {"coeff", c.get_str()}});
      const std::string mag = abs(c) == 1 ? "" : Integer(abs(c)).get_str();
      text += (text.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) + mag + cls[kx].label;
    }
    products.push_back({{"left", cls[pair.first].label}, {"right", cls[pair.second].label}, {"terms", terms}});
    r.human.push_back("  " + cls[pair.first].label + " * " + cls[pair.second].label + " = " + text);
  }
  r.payload["products"] = products;

  const HopfPresentation p = koszul::coalgebra_from_ring(h, cup);
  const LieHopfDecision d = lie_hopf_decision(p);
  r.verdict = d.is_lie_hopf() ? "is_lie_hopf" : "not_lie_hopf";
  r.exit_code = d.is_lie_hopf() ? kSuccess : kNegative;
  r.human.push_back("  decide: " + r.verdict);
  json decide = decision_payload(p, d, r);
  decide["presentation"] = json::parse(io::emit_presentation(p));
  r.payload["decide"] = decide;
  return r;
}

json composition_terms(const qsymm::QSymmElement& x) {
  json out = json::array();
  for (const auto& [c, k] : x) out.push_back({{"composition", c.parts()}, {"coeff", k.get_str()}});
  return out;
}

Report cmd_qsymm(const Options& o) {
  Report r;
  r.command = "qsymm";
  r.verdict = "pass";
  const auto& a = o.qsymm_args;
  if (a.empty()) throw PreconditionError("qsymm needs product, coproduct or pair");
  auto expect = [&](std::size_t n) {
    if (a.size() != n + 1)
      throw PreconditionError("qsymm " + a[0] + " takes " + std::to_string(n) + " argument(s)");
  };
  if (a[0] == "product") {
    expect(2);
    const auto x = qsymm::parse_composition(a[1]);
    const auto y = qsymm::parse_composition(a[2]);
    const auto prod = qsymm::overlapping_shuffle(x, y);
    r.payload = {{"operation", "product"}, {"result", qsymm::to_string(prod)},
                 {"terms", composition_terms(prod)}};
    r.human.push_back("  M" + x.to_string() + " * M" + y.to_string() + " = " + qsymm::to_string(prod));
  } else if (a[0] == "coproduct") {
    expect(1);
    const auto x = qsymm::parse_composition(a[1]);
    json splits = json::array();
    r.human.push_back("  Δ M" + x.to_string() + " =");
    for (const auto& [l, rr] : qsymm::deconcatenation(x)) {
      splits.push_back({l.parts(), rr.parts()});
      r.human.push_back("    M" + l.to_string() + " ⊗ M" + rr.to_string());
    }
    r.payload = {{"operation", "coproduct"}, {"splits", splits}};
  } else if (a[0] == "pair") {
    expect(2);
    const auto word = qsymm::parse_composition(a[1]);
    const auto x = qsymm::parse_composition(a[2]);
    const Integer v = qsymm::pairing(word.parts(), x);
    r.payload = {{"operation", "pair"}, {"value", v.get_str()}};
    r.human.push_back("  <Z" + word.to_string() + ", M" + x.to_string() + "> = " + v.get_str());
  } else {
    throw PreconditionError("unknown qsymm operation '" + a[0] + "'");
  }
  return r;
}

Report cmd_obstruction(const Options& o) {
  Report r;
  r.command = "obstruction";
  r.verdict = "pass";
  if (o.n < 1) throw PreconditionError("--n must be >= 1");
  const int top = 2 * o.n;
  const HopfPresentation binomial = catalog::preset("binomial", top);
  json entries = json::array();
  bool all_primitive = true;
  for (int n = 1; n <= o.n; ++n) {
    const auto ob = catalog::desuspension_obstruction(n, top);
    const bool primitive = is_primitive(binomial, ob.a_xi);
    all_primitive = all_primitive && primitive;
    entries.push_back({{"n", n}, {"a_xi", ob.a_xi.to_string()},
                       {"obstruction", ob.obstruction.to_string()}, {"primitive", primitive}});
    r.human.push_back("  a+xi" + std::to_string(n) + " = " + ob.a_xi.to_string());
    r.human.push_back("  w" + std::to_string(n) + " - a+xi" + std::to_string(n) + " = " +
                      ob.obstruction.to_string());
  }
  if (!all_primitive) {
    r.verdict = "fail";
    r.exit_code = kNegative;
  }
  r.payload = {{"obstructions", entries}};
  return r;
}

void print_report(const Report& r, const Options& o, double ms, std::ostream& out) {
  if (o.format == "structured") {
    json doc = {{"format", io::kReportFormat}, {"command", r.command}, {"verdict", r.verdict},
                {"payload", r.payload}, {"timing_ms", ms}, {"tool_version", kToolVersion}};
    if (o.seed) doc["seed"] = *o.seed;
    out << doc.dump(2) << "\n";
    return;
  }
  out << r.command << ": " << r.verdict << "\n";
  for (const auto& line : r.human) out << line << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Lie-Hopf decisions for graded Hopf algebras over the integers", "hopfz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--seed", o.seed, "seed recorded in the report; scrambles moment-angle elimination");
  app.set_version_flag("--version", kToolVersion);

  auto* decide = app.add_subcommand("decide", "decide whether a presentation is Lie-Hopf");
  decide->add_option("input", o.input, "presentation document, '-' for stdin");
  decide->add_option("--preset", o.preset, "named presentation");
  decide->add_option("-d,--degree", o.degree, "truncation degree");

  auto* verify = app.add_subcommand("verify", "check the Hopf axioms up to a degree");
  verify->add_option("input", o.input, "presentation document, '-' for stdin");
  verify->add_option("--preset", o.preset, "named presentation");
  verify->add_option("-d,--degree", o.degree, "check degree");

  auto* moment = app.add_subcommand("moment-angle", "cohomology and decision for a moment-angle complex");
  moment->add_option("input", o.input, "complex document")->required();
  moment->add_option("-d,--degree,--max-degree", o.degree, "cohomology degree cap");

  auto* qs = app.add_subcommand("qsymm", "quasi-symmetric operations: product A B | coproduct A | pair W A");
  qs->add_option("args", o.qsymm_args, "operation and compositions such as 2,1")->required();

  auto* obstruction = app.add_subcommand("obstruction", "desuspension obstructions a+xi_n for n <= N");
  obstruction->add_option("--n", o.n, "largest index")->required();

  auto* preset = app.add_subcommand("preset", "list or emit named presentations");
  preset->require_subcommand(1);
  auto* list = preset->add_subcommand("list", "list presets");
  auto* emit = preset->add_subcommand("emit", "print a preset as a presentation document");
  emit->add_option("name", o.preset, "preset name")->required();
  emit->add_option("-d,--degree", o.degree, "truncation degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (list->parsed()) {
      for (const auto& info : catalog::preset_list())
        out << info.name << "  (default degree " << info.default_degree << ")  " << info.description
            << "\n";
      return kSuccess;
    }
    if (emit->parsed()) {
      out << io::emit_presentation(o.degree ? catalog::preset(o.preset, *o.degree)
                                            : catalog::preset(o.preset));
      return kSuccess;
    }
    Report r;
    if (decide->parsed()) r = cmd_decide(o);
    else if (verify->parsed()) r = cmd_verify(o);
    else if (moment->parsed()) r = cmd_moment_angle(o);
    else if (qs->parsed()) r = cmd_qsymm(o);
    else r = cmd_obstruction(o);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    print_report(r, o, ms, out);
    return r.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

} // namespace hopfz::cli
