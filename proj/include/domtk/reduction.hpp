#pragma once

#include <string>
#include <vector>

#include "domtk/cnf.hpp"
#include "domtk/graph.hpp"

namespace domtk {

enum class ReductionTarget { kBondage, kTotalBondage, kReinforcement };

std::string to_string(ReductionTarget t);

// Role of a vertex inside a gadget graph. Indices are 1-based like the
// formula's variables/clauses.
struct VertexRole {
  enum class Kind {
    kPosLiteral,   // u_i
    kNegLiteral,   // ~u_i
    kApex,         // v_i
    kApexPendant,  // v_i'
    kClause,       // c_j
    kSpine,        // s_k (or the hub s, index 1)
  };

  Kind kind = Kind::kPosLiteral;
  int index = 1;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

std::string to_string(const VertexRole& role);

// A gadget graph built from a 3-SAT formula, with the vertex <-> role
// bijection and the instance threshold k (always 1).
struct ReductionArtifact {
  Graph graph;
  std::vector<VertexRole> roles;  // roles[v] for vertex v
  int n = 0;                      // variable count
  int m = 0;                      // clause count
  int k = 1;
  ReductionTarget target = ReductionTarget::kBondage;

  // Fixed ID layout: per-variable blocks first, then clause vertices, then
  // the spine/hub.
  int pos_literal(int i) const { return block() * (i - 1); }
  int neg_literal(int i) const { return block() * (i - 1) + 1; }
  int apex(int i) const { return block() * (i - 1) + 2; }
  int apex_pendant(int i) const { return block() * (i - 1) + 3; }
  int clause_vertex(int j) const { return block() * n + (j - 1); }
  int spine(int k_index) const { return block() * n + m + (k_index - 1); }

  // Vertices of the variable gadget for variable i.
  VertexSet gadget(int i) const;
  VertexSet spine_vertices() const;

 private:
  int block() const { return target == ReductionTarget::kTotalBondage ? 4 : 3; }
};

// Variable triangles, clause vertices wired to their literals, and a path
// s1-s2-s3 with s1, s3 joined to every clause vertex. 3n+m+3 vertices,
// 3n+5m+2 edges.
ReductionArtifact build_bondage_instance(const CnfFormula& f);

// Variable gadgets u_i-~u_i-v_i triangles with pendant v_i', clause
// vertices, and the 5-vertex spine H. 4n+m+5 vertices, 4n+5m+5 edges.
ReductionArtifact build_total_bondage_instance(const CnfFormula& f);

// Variable triangles, clause vertices, and a hub s joined to every clause
// vertex. 3n+m+1 vertices, 3n+4m edges.
ReductionArtifact build_reinforcement_instance(const CnfFormula& f);

ReductionArtifact build_instance(const CnfFormula& f, ReductionTarget target);

// Sidecar role map: JSON object, vertex ID -> role string.
std::string roles_json(const ReductionArtifact& art);

// DOT export with role labels; `highlight` vertices are drawn filled.
std::string to_dot(const ReductionArtifact& art,
                   const VertexSet& highlight = {});

}  // namespace domtk
