#include "domtk/reduction.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace domtk {

std::string to_string(ReductionTarget t) {
  switch (t) {
    case ReductionTarget::kBondage:
      return "bondage";
    case ReductionTarget::kTotalBondage:
      return "total-bondage";
    case ReductionTarget::kReinforcement:
      return "reinforcement";
  }
  return "?";
}

std::string to_string(const VertexRole& role) {
  switch (role.kind) {
    case VertexRole::Kind::kPosLiteral:
      return "u_" + std::to_string(role.index);
    case VertexRole::Kind::kNegLiteral:
      return "~u_" + std::to_string(role.index);
    case VertexRole::Kind::kApex:
      return "v_" + std::to_string(role.index);
    case VertexRole::Kind::kApexPendant:
      return "v_" + std::to_string(role.index) + "'";
    case VertexRole::Kind::kClause:
      return "c_" + std::to_string(role.index);
    case VertexRole::Kind::kSpine:
      return "s_" + std::to_string(role.index);
  }
  return "?";
}

VertexSet ReductionArtifact::gadget(int i) const {
  VertexSet s = VertexSet::of({pos_literal(i), neg_literal(i), apex(i)});
  if (target == ReductionTarget::kTotalBondage) s.set(apex_pendant(i));
  return s;
}

VertexSet ReductionArtifact::spine_vertices() const {
  VertexSet s;
  int count = target == ReductionTarget::kBondage        ? 3
              : target == ReductionTarget::kTotalBondage ? 5
                                                         : 1;
  for (int k_index = 1; k_index <= count; ++k_index) s.set(spine(k_index));
  return s;
}

namespace {

// Shared skeleton: variable blocks, clause vertices wired to their
// literals, then the target-specific spine.
ReductionArtifact build(const CnfFormula& f, ReductionTarget target) {
  ReductionArtifact art;
  art.target = target;
  art.n = f.variable_count();
  art.m = f.clause_count();
  art.k = 1;

  const bool total = target == ReductionTarget::kTotalBondage;
  std::vector<Edge> edges;
  std::vector<VertexRole> roles;

  for (int i = 1; i <= art.n; ++i) {
    int u = art.pos_literal(i), nu = art.neg_literal(i), v = art.apex(i);
    roles.push_back({VertexRole::Kind::kPosLiteral, i});
    roles.push_back({VertexRole::Kind::kNegLiteral, i});
    roles.push_back({VertexRole::Kind::kApex, i});
    edges.emplace_back(u, nu);
    edges.emplace_back(nu, v);
    edges.emplace_back(u, v);
    if (total) {
      roles.push_back({VertexRole::Kind::kApexPendant, i});
      edges.emplace_back(v, art.apex_pendant(i));
    }
  }
  for (int j = 1; j <= art.m; ++j) {
    roles.push_back({VertexRole::Kind::kClause, j});
    int c = art.clause_vertex(j);
    for (const Literal& lit : f.clauses()[static_cast<std::size_t>(j - 1)].literals)
      edges.emplace_back(c, lit.negated ? art.neg_literal(lit.variable)
                                        : art.pos_literal(lit.variable));
  }

  switch (target) {
    case ReductionTarget::kBondage: {
      for (int k_index = 1; k_index <= 3; ++k_index)
        roles.push_back({VertexRole::Kind::kSpine, k_index});
      edges.emplace_back(art.spine(1), art.spine(2));
      edges.emplace_back(art.spine(2), art.spine(3));
      for (int j = 1; j <= art.m; ++j) {
        edges.emplace_back(art.spine(1), art.clause_vertex(j));
        edges.emplace_back(art.spine(3), art.clause_vertex(j));
      }
      break;
    }
    case ReductionTarget::kTotalBondage: {
      for (int k_index = 1; k_index <= 5; ++k_index)
        roles.push_back({VertexRole::Kind::kSpine, k_index});
      edges.emplace_back(art.spine(1), art.spine(2));
      edges.emplace_back(art.spine(1), art.spine(4));
      edges.emplace_back(art.spine(2), art.spine(3));
      edges.emplace_back(art.spine(2), art.spine(4));
      edges.emplace_back(art.spine(4), art.spine(5));
      for (int j = 1; j <= art.m; ++j) {
        edges.emplace_back(art.spine(1), art.clause_vertex(j));
        edges.emplace_back(art.spine(3), art.clause_vertex(j));
      }
      break;
    }
    case ReductionTarget::kReinforcement: {
      roles.push_back({VertexRole::Kind::kSpine, 1});
      for (int j = 1; j <= art.m; ++j)
        edges.emplace_back(art.spine(1), art.clause_vertex(j));
      break;
    }
  }

  art.graph = Graph(static_cast<int>(roles.size()), std::move(edges));
  art.roles = std::move(roles);
  return art;
}

}  // namespace

ReductionArtifact build_bondage_instance(const CnfFormula& f) {
  return build(f, ReductionTarget::kBondage);
}

ReductionArtifact build_total_bondage_instance(const CnfFormula& f) {
  return build(f, ReductionTarget::kTotalBondage);
}

ReductionArtifact build_reinforcement_instance(const CnfFormula& f) {
  return build(f, ReductionTarget::kReinforcement);
}

ReductionArtifact build_instance(const CnfFormula& f, ReductionTarget target) {
  return build(f, target);
}

std::string roles_json(const ReductionArtifact& art) {
  nlohmann::ordered_json obj;
  for (int v = 0; v < art.graph.vertex_count(); ++v)
    obj[std::to_string(v)] = to_string(art.roles[static_cast<std::size_t>(v)]);
  return obj.dump(2) + "\n";
}

std::string to_dot(const ReductionArtifact& art, const VertexSet& highlight) {
  std::map<int, std::string> labels;
  for (int v = 0; v < art.graph.vertex_count(); ++v)
    labels[v] = to_string(art.roles[static_cast<std::size_t>(v)]);
  return to_dot(art.graph, labels, highlight);
}

}  // namespace domtk
