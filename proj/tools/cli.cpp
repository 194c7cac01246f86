#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cageforge/amalgam.hpp"
#include "cageforge/certify.hpp"
#include "cageforge/error.hpp"
#include "cageforge/families.hpp"
#include "cageforge/io_formats.hpp"
#include "cageforge/reductions.hpp"
#include "cageforge/semiplane.hpp"

namespace cageforge::cli {

namespace {

std::uint32_t max_q_from_env() {
  if (const char* env = std::getenv("CAGEFORGE_MAX_Q"); env && *env) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 2) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxQ;
}

std::string join(const LabelSet& s) {
  std::string out;
  for (std::uint32_t x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

LabelSet parse_csv(const std::string& text) {
  LabelSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw ConstructionError("bad label '" + item + "'");
    s.insert(static_cast<std::uint32_t>(v));
  }
  return s;
}

std::string girth_text(const Certificate& c) {
  if (!c.girth_computed) return "girth uncertified";
  return c.girth ? "girth " + std::to_string(*c.girth) : "acyclic";
}

struct BuildArgs {
  std::uint32_t q = 0;
  std::uint32_t u = 0;
  std::optional<std::string> S;
  std::optional<std::string> T;
  std::string format = "g6";
  std::optional<std::string> out_path;
  std::optional<std::string> cert_path;
  bool no_cert = false;
};

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint32_t max_q = max_q_from_env();
  std::optional<AmalgamPlan> plan;
  try {
    if (!classify(a.q)) {
      err << "q=" << a.q << " unsupported; " << supported_q_message() << "\n";
      return kInputError;
    }
    plan = plan_for(a.q, a.u, max_q);
  } catch (const PlanError& e) {
    err << e.what();
    return kPlanFailed;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (a.S && parse_csv(*a.S) != plan->spec.S) {
      err << "--S {" << *a.S << "} differs from the construction's S={" << join(plan->spec.S)
          << "}; custom pieces are not supported\n";
      return kInputError;
    }
    if (a.T && parse_csv(*a.T) != plan->spec.T) {
      err << "--T {" << *a.T << "} differs from the construction's T={" << join(plan->spec.T)
          << "}; custom pieces are not supported\n";
      return kInputError;
    }
  } catch (const std::exception& e) {
    err << "bad --S/--T list: " << e.what() << "\n";
    return kInputError;
  }

  Graph g;
  try {
    LeviOptions lo;
    lo.max_q = max_q;
    lo.check_girth = false;
    const LeviGraph base = build_levi(a.q, lo);
    const ReducedGraph reduced = reduce(base, plan->spec);
    g = amalgamate(reduced, *plan, {.verify_girth = false});
  } catch (const PlanError& e) {
    err << e.what();
    return kPlanFailed;
  }

  Claim claim;
  claim.degree = plan->degree();
  claim.order = plan->order();
  if (!a.no_cert) claim.girth = 5;
  const Certificate cert = certify(g, claim, {.compute_girth = !a.no_cert});

  if (a.out_path) {
    std::ofstream f(*a.out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << *a.out_path << "\n";
      return kInputError;
    }
    if (a.format == "g6") {
      f << to_graph6(g) << "\n";
    } else {
      const auto id = classify(a.q);
      f << write_edge_list(g, {{"q", std::to_string(a.q)},
                               {"S", join(plan->spec.S)},
                               {"T", join(plan->spec.T)},
                               {"u", std::to_string(a.u)},
                               {"construction", std::string(to_string(id->variant))}});
    }
  }
  if (a.cert_path) {
    std::ofstream f(*a.cert_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << *a.cert_path << "\n";
      return kInputError;
    }
    f << certificate_json(cert);
  }

  out << "q=" << a.q << " u=" << a.u << " → " << plan->degree() << "-regular, "
      << girth_text(cert) << ", n=" << cert.order;
  if (cert.excess) out << ", excess " << *cert.excess;
  if (a.no_cert) out << " (uncertified)";
  out << "\n";
  for (const auto& c : cert.checks) {
    if (!c.pass) err << "check " << c.name << " failed: expected " << c.expected << ", got " << c.actual << "\n";
  }
  return cert.passed() ? kOk : kExpectationFailed;
}

struct VerifyArgs {
  std::string path;
  std::optional<std::size_t> degree;
  std::optional<std::uint32_t> girth;
  std::optional<std::size_t> order;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream f(a.path, std::ios::binary);
  if (!f) {
    err << "cannot read " << a.path << "\n";
    return kInputError;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();

  Graph g;
  try {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input", 0);
    const char c = text[first];
    if (c == '#' || (c >= '0' && c <= '9')) {
      auto doc = read_edge_list(text);
      for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
      g = std::move(doc.graph);
    } else {
      g = from_graph6(std::string_view(text).substr(first));
    }
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  }

  const Certificate cert = certify(g, {a.degree, a.girth, a.order});
  out << certificate_json(cert);
  return cert.passed() ? kOk : kExpectationFailed;
}

int cmd_weights(std::uint32_t q, std::ostream& out, std::ostream& err) {
  const auto id = classify(q);
  if (!id) {
    err << "q=" << q << " unsupported; " << supported_q_message() << "\n";
    return kInputError;
  }
  const PieceSet set = pieces_for(q);
  const WeightSet pw = weight_union(weight_set(set.h1), weight_set(set.g1));
  const WeightSet lw = weight_union(weight_set(set.h2), weight_set(set.g2));
  bool disjoint = true;
  for (std::uint32_t w : pw.classes) disjoint = disjoint && !lw.classes.contains(w);

  out << "q=" << q << " family " << to_string(id->variant);
  if (id->n) out << " (n=" << id->n << ")";
  out << " S={" << join(set.spec.S) << "} T={" << join(set.spec.T) << "}\n";
  out << "P_ω=" << to_string(pw) << "; L_ω=" << to_string(lw) << "; "
      << (disjoint ? "DISJOINT" : "INTERSECTING") << "\n";
  return disjoint ? kOk : kPlanFailed;
}

int cmd_table(std::uint32_t qmax, std::ostream& out, std::ostream& err) {
  const std::uint32_t max_q = max_q_from_env();
  out << std::setw(5) << "q" << std::setw(6) << "k" << std::setw(10) << "order"
      << std::setw(10) << "moore" << std::setw(10) << "excess" << "\n";
  for (std::uint32_t q = 2; q <= qmax && q < max_q; ++q) {
    if (!classify(q)) continue;
    try {
      const AmalgamPlan plan = plan_for(q, 0, max_q);
      const std::uint64_t n0 = moore_bound(plan.degree(), 5);
      out << std::setw(5) << q << std::setw(6) << plan.degree() << std::setw(10) << plan.order()
          << std::setw(10) << n0 << std::setw(10)
          << static_cast<std::int64_t>(plan.order()) - static_cast<std::int64_t>(n0) << "\n";
    } catch (const PlanError& e) {
      err << e.what();
      return kPlanFailed;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and certify girth-5 regular graphs from elliptic semiplane Levi graphs",
               "cageforge"};
  app.require_subcommand(1, 1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Construct B*_q(S,T,u) and certify it");
  b->add_option("--q", build.q, "Prime q")->required();
  b->add_option("--u", build.u, "Number of deleted block pairs")->capture_default_str();
  b->add_option("--S", build.S, "Comma-separated S (must match the construction)");
  b->add_option("--T", build.T, "Comma-separated T (must match the construction)");
  b->add_option("--format", build.format, "Output format")
      ->check(CLI::IsMember({"g6", "edges"}))
      ->capture_default_str();
  b->add_option("--out", build.out_path, "Graph output path");
  b->add_option("--cert", build.cert_path, "Certificate JSON output path");
  b->add_flag("--no-cert", build.no_cert, "Skip the girth computation (output is uncertified)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Certify a graph6 or edge-list file");
  v->add_option("path", verify.path, "Input file")->required();
  v->add_option("--expect-degree", verify.degree, "Expected regular degree");
  v->add_option("--expect-girth", verify.girth, "Expected girth");
  v->add_option("--expect-order", verify.order, "Expected number of vertices");

  std::uint32_t weights_q = 0;
  auto* w = app.add_subcommand("weights", "Print point/line weight sets for q");
  w->add_option("--q", weights_q, "Prime q")->required();

  std::uint32_t qmax = 0;
  auto* t = app.add_subcommand("table", "Tabulate u=0 constructions for all q <= qmax");
  t->add_option("--qmax", qmax, "Largest q")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (b->parsed()) return cmd_build(build, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (w->parsed()) return cmd_weights(weights_q, out, err);
    if (t->parsed()) return cmd_table(qmax, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace cageforge::cli
