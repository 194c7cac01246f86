#include "cageforge/amalgam.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

#include "cageforge/error.hpp"

namespace cageforge {

std::string_view to_string(PieceRole role) {
  switch (role) {
    case PieceRole::H1: return "H1";
    case PieceRole::H2: return "H2";
    case PieceRole::G1: return "G1";
    case PieceRole::G2: return "G2";
  }
  return "?";
}

namespace {

std::string join(const LabelSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

std::string edge_str(LabelEdge e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

LabelEdge normalized(LabelEdge e) { return e.a < e.b ? e : LabelEdge{e.b, e.a}; }

}  // namespace

Piece::Piece(PieceRole role, std::uint32_t q, LabelSet labels, std::vector<LabelEdge> edges)
    : role_(role), q_(q), labels_(std::move(labels)) {
  for (std::uint32_t l : labels_) {
    if (l >= q) throw ConstructionError("piece label " + std::to_string(l) + " >= q");
  }
  for (LabelEdge& e : edges) {
    if (e.a == e.b) throw ConstructionError("piece loop " + edge_str(e));
    if (!labels_.contains(e.a) || !labels_.contains(e.b)) {
      throw ConstructionError(std::string(to_string(role)) + " edge " + edge_str(e) +
                              " uses a label outside " + join(labels_));
    }
    e = normalized(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Piece::has_edge(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(edges_.begin(), edges_.end(), normalized({a, b}));
}

std::size_t Piece::degree(std::uint32_t label) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](LabelEdge e) {
    return e.a == label || e.b == label;
  }));
}

LabelSet Piece::neighbors(std::uint32_t label) const {
  LabelSet out;
  for (LabelEdge e : edges_) {
    if (e.a == label) out.insert(e.b);
    if (e.b == label) out.insert(e.a);
  }
  return out;
}

Piece Piece::with_role(PieceRole role) const {
  Piece p = *this;
  p.role_ = role;
  return p;
}

Graph Piece::graph() const {
  std::map<std::uint32_t, Vertex> index;
  for (std::uint32_t l : labels_) index.emplace(l, static_cast<Vertex>(index.size()));
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (LabelEdge e : edges_) edges.push_back({index.at(e.a), index.at(e.b)});
  return Graph::from_edges(labels_.size(), edges);
}

std::uint32_t edge_weight(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  if (a >= q || b >= q) throw ConstructionError("label out of range for weight");
  if (a == b) throw ConstructionError("edge weight of a loop is undefined");
  const std::uint32_t d = (b + q - a) % q;
  return std::min(d, q - d);
}

WeightSet weight_set(const Piece& piece) {
  WeightSet w{piece.q(), {}};
  for (LabelEdge e : piece.edges()) w.classes.insert(edge_weight(e.a, e.b, piece.q()));
  return w;
}

WeightSet weight_union(const WeightSet& a, const WeightSet& b) {
  if (a.q != b.q) throw ConstructionError("weight sets over different moduli");
  WeightSet w = a;
  w.classes.insert(b.classes.begin(), b.classes.end());
  return w;
}

WeightSet canonical_weights(std::uint32_t q, std::initializer_list<std::int64_t> values) {
  WeightSet w{q, {}};
  const auto mod = static_cast<std::int64_t>(q);
  for (std::int64_t x : values) {
    const auto r = static_cast<std::uint32_t>(((x % mod) + mod) % mod);
    if (r != 0) w.classes.insert(std::min(r, q - r));
  }
  return w;
}

std::string to_string(const WeightSet& w) { return join(w.classes); }

std::vector<std::string> split_obstacles(const Piece& piece, LabelEdge e1, LabelEdge e2,
                                         std::uint32_t new_label) {
  std::vector<std::string> out;
  for (LabelEdge e : {e1, e2}) {
    if (!piece.has_edge(e.a, e.b)) out.push_back("edge " + edge_str(e) + " not in piece");
  }
  const std::uint32_t ends[4] = {e1.a, e1.b, e2.a, e2.b};
  const LabelSet distinct(std::begin(ends), std::end(ends));
  if (distinct.size() != 4) {
    out.push_back("edges " + edge_str(e1) + " and " + edge_str(e2) + " are not independent");
  }
  if (new_label >= piece.q()) {
    out.push_back("new label " + std::to_string(new_label) + " >= q");
  } else if (piece.labels().contains(new_label)) {
    out.push_back("label " + std::to_string(new_label) + " already used");
  }
  if (!out.empty()) return out;

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const LabelSet ni = piece.neighbors(ends[i]);
      const LabelSet nj = piece.neighbors(ends[j]);
      LabelSet common;
      std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(),
                            std::inserter(common, common.end()));
      if (!common.empty()) {
        out.push_back("N(" + std::to_string(ends[i]) + ") ∩ N(" + std::to_string(ends[j]) +
                      ") = " + join(common));
      }
    }
  }
  const Girth g = girth(piece.graph());
  if (g && *g < 5) out.push_back("piece girth " + std::to_string(*g) + " < 5");
  return out;
}

Piece vertex_split(const Piece& piece, LabelEdge e1, LabelEdge e2, std::uint32_t new_label,
                   PieceRole role) {
  if (auto issues = split_obstacles(piece, e1, e2, new_label); !issues.empty()) {
    std::string msg = "vertex split rejected:";
    for (const auto& s : issues) msg += " " + s + ";";
    throw ConstructionError(msg);
  }
  std::vector<LabelEdge> edges;
  const LabelEdge n1 = normalized(e1);
  const LabelEdge n2 = normalized(e2);
  for (LabelEdge e : piece.edges()) {
    if (e != n1 && e != n2) edges.push_back(e);
  }
  for (std::uint32_t x : {e1.a, e1.b, e2.a, e2.b}) edges.push_back({new_label, x});
  LabelSet labels = piece.labels();
  labels.insert(new_label);
  Piece out(role, piece.q(), std::move(labels), std::move(edges));

  const Girth g = girth(out.graph());
  if (g && *g < 5) throw std::logic_error("vertex split produced girth " + std::to_string(*g));
  return out;
}

bool PlanReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const PlanCheck& c) { return c.passed; });
}

std::string PlanReport::failures() const {
  std::string out;
  for (const PlanCheck& c : checks) {
    if (!c.passed) out += c.name + ": " + c.detail + "\n";
  }
  return out;
}

namespace {

LabelSet all_labels(std::uint32_t q) {
  LabelSet s;
  for (std::uint32_t i = 0; i < q; ++i) s.insert(i);
  return s;
}

LabelSet minus(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Every label has degree k, except those in `raised` which have degree k+1.
PlanCheck degree_check(const Piece& p, const std::string& name, std::uint32_t k,
                       const LabelSet& raised) {
  std::ostringstream bad;
  for (std::uint32_t l : p.labels()) {
    const std::size_t want = raised.contains(l) ? k + 1 : k;
    if (p.degree(l) != want) bad << " " << l << ":" << p.degree(l) << "(want " << want << ")";
  }
  const std::string detail = bad.str();
  return {name + " degrees", detail.empty(),
          detail.empty() ? "degree k+1 exactly on " + join(raised) : "offending" + detail};
}

}  // namespace

PlanReport check_plan(const AmalgamPlan& plan) {
  PlanReport r;
  const std::uint32_t q = plan.q;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("q prime", is_prime(q) && q >= 3, "q=" + std::to_string(q));
  try {
    validate(plan.spec, q);
    add("reduction spec", true, "T ⊆ S ⊆ Z_q, 0 <= u <= q-1");
  } catch (const ConstructionError& e) {
    add("reduction spec", false, e.what());
  }

  const Piece* pieces[4] = {&plan.h1, &plan.h2, &plan.g1, &plan.g2};
  const PieceRole roles[4] = {PieceRole::H1, PieceRole::H2, PieceRole::G1, PieceRole::G2};
  const LabelSet everything = all_labels(q);
  const LabelSet want_labels[4] = {minus(everything, plan.spec.S),
                                   minus(everything, plan.spec.T), everything, everything};
  const LabelSet raised[4] = {{}, minus(plan.spec.S, plan.spec.T), plan.spec.T, plan.spec.S};

  bool moduli_ok = true;
  for (int i = 0; i < 4; ++i) {
    const Piece& p = *pieces[i];
    const std::string name(to_string(roles[i]));
    if (p.q() != q) moduli_ok = false;
    add(name + " role", p.role() == roles[i], "piece tagged " + std::string(to_string(p.role())));
    add(name + " labels", p.labels() == want_labels[i],
        "have " + join(p.labels()) + ", want " + join(want_labels[i]));
    r.checks.push_back(degree_check(p, name, plan.k, raised[i]));
    const Girth g = girth(p.graph());
    add(name + " girth", !g || *g >= 5, g ? "girth " + std::to_string(*g) : "acyclic");
  }
  add("piece moduli", moduli_ok, "all pieces over Z_" + std::to_string(q));
  if (!moduli_ok) return r;

  r.point_weights = weight_union(weight_set(plan.h1), weight_set(plan.g1));
  r.line_weights = weight_union(weight_set(plan.h2), weight_set(plan.g2));
  LabelSet shared;
  std::set_intersection(r.point_weights.classes.begin(), r.point_weights.classes.end(),
                        r.line_weights.classes.begin(), r.line_weights.classes.end(),
                        std::inserter(shared, shared.end()));
  add("weights disjoint", shared.empty(),
      "P_w=" + to_string(r.point_weights) + " L_w=" + to_string(r.line_weights) +
          (shared.empty() ? "" : " shared " + join(shared)));
  return r;
}

std::optional<std::string> sharp_five_witness(const AmalgamPlan& plan) {
  const std::uint32_t q = plan.q;
  const std::uint32_t u = plan.spec.u;
  std::vector<const Piece*> used = {&plan.h1, &plan.h2};
  if (u <= q - 2) {
    used.push_back(&plan.g1);
    used.push_back(&plan.g2);
  }
  for (const Piece* p : used) {
    if (girth(p->graph()) == 5u) return std::string(to_string(p->role())) + " has a 5-circuit";
  }
  // (0,i)-(0,j)-[1,j]-(t,i)-[0,i] with j - i = -t, using blocks 1 and t.
  for (LabelEdge e : plan.h1.edges()) {
    const std::uint32_t t = edge_weight(e.a, e.b, q);
    if (u < q - t) {
      return "H1 edge " + edge_str(e) + " of weight " + std::to_string(t) + " with u < q - t";
    }
  }
  // Line-side analogue [0,i]-[0,j]-(1,j)-[t,i]-(0,i) with j - i = t; needs
  // (0,i) to survive, i.e. i not in S.
  for (LabelEdge e : plan.h2.edges()) {
    const std::uint32_t t = edge_weight(e.a, e.b, q);
    if (u >= q - t) continue;
    for (auto [i, j] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      if ((j + q - i) % q == t && !plan.spec.S.contains(i)) {
        return "H2 edge " + edge_str(e) + " of weight " + std::to_string(t) + " with u < q - t";
      }
    }
  }
  return std::nullopt;
}

Graph amalgamate(const ReducedGraph& reduced, const AmalgamPlan& plan,
                 const AmalgamOptions& options) {
  if (reduced.q() != plan.q || reduced.spec() != plan.spec) {
    throw ConstructionError("reduced graph does not match the plan's (q, S, T, u)");
  }
  PlanReport report = check_plan(plan);
  if (!report.ok()) throw PlanError(std::move(report));

  std::vector<Edge> edges = reduced.graph().edges();
  auto place = [&](const Piece& piece, VertexKind kind, std::uint32_t block) {
    for (LabelEdge e : piece.edges()) {
      const auto a = reduced.find({kind, block, e.a});
      const auto b = reduced.find({kind, block, e.b});
      if (!a || !b) {
        throw ConstructionError(std::string(to_string(piece.role())) + " edge " + edge_str(e) +
                                " has no endpoint in block " + std::to_string(block));
      }
      edges.push_back({*a, *b});
    }
  };
  place(plan.h1, VertexKind::Point, 0);
  place(plan.h2, VertexKind::Line, 0);
  for (std::uint32_t i = 1; i < reduced.surviving_blocks(); ++i) {
    place(plan.g1, VertexKind::Point, i);
    place(plan.g2, VertexKind::Line, i);
  }
  Graph g = Graph::from_edges(reduced.graph().order(), edges);

  if (g.order() != plan.order()) {
    throw std::logic_error("amalgam order " + std::to_string(g.order()) + " != " +
                           std::to_string(plan.order()));
  }
  if (g.size() != edges.size()) {
    throw std::logic_error("amalgam edge landed on an existing edge");
  }
  if (!is_regular(degree_profile(g), plan.degree())) {
    throw std::logic_error("amalgam is not " + std::to_string(plan.degree()) + "-regular");
  }
  if (options.verify_girth) {
    const Girth gg = girth(g, options.threads);
    if (!gg || *gg < 5) {
      throw std::logic_error("amalgam girth " + (gg ? std::to_string(*gg) : "acyclic") + " < 5");
    }
    if (auto why = sharp_five_witness(plan); why && *gg != 5) {
      throw std::logic_error("amalgam girth " + std::to_string(*gg) + " but " + *why);
    }
  }
  return g;
}

}  // namespace cageforge
