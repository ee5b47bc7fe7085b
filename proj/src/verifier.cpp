#include "domtk/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "domtk/domination.hpp"

namespace domtk {

namespace {

std::string set_str(const ReductionArtifact& art, const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out << ", ";
    first = false;
    out << to_string(art.roles[static_cast<std::size_t>(v)]);
  });
  out << "}";
  return out.str();
}

std::string edge_str(const ReductionArtifact& art, const Edge& e) {
  return to_string(art.roles[static_cast<std::size_t>(e.u)]) + "-" +
         to_string(art.roles[static_cast<std::size_t>(e.v)]);
}

struct ClaimBuilder {
  std::vector<ClaimOutcome>& claims;

  void record(const std::string& id, bool passed, const std::string& details) {
    claims.push_back({id, passed, passed ? std::string{} : details});
  }

  // Runs `check`, which returns an empty string on success and a failure
  // description otherwise. Exceptions also fail the claim.
  template <class F>
  void claim(const std::string& id, F&& check) {
    try {
      std::string details = check();
      record(id, details.empty(), details);
    } catch (const std::exception& e) {
      record(id, false, std::string("exception: ") + e.what());
    }
  }
};

VertexSet clause_vertices(const ReductionArtifact& art) {
  VertexSet s;
  for (int j = 1; j <= art.m; ++j) s.set(art.clause_vertex(j));
  return s;
}

// Structural check shared by C3.1, C5.2: each variable gadget met exactly
// once, no clause vertex selected.
std::string check_gadget_structure(const ReductionArtifact& art,
                                   const VertexSet& d) {
  for (int i = 1; i <= art.n; ++i) {
    int hits = (d & art.gadget(i)).count();
    if (hits != 1)
      return "set " + set_str(art, d) + " meets gadget T_" + std::to_string(i) +
             " in " + std::to_string(hits) + " vertices";
  }
  VertexSet cs = d & clause_vertices(art);
  if (!cs.empty())
    return "set " + set_str(art, d) + " contains clause vertex " +
           set_str(art, cs);
  return {};
}

void verify_bondage(const CnfFormula& f, bool sat, VerificationReport& report) {
  const ReductionArtifact art = build_bondage_instance(f);
  const Graph& g = art.graph;
  const int n = art.n;
  const int gamma = domination_number(g).value;
  const bool tight = gamma == n + 1;
  const std::vector<VertexSet> min_sets =
      tight ? enumerate_minimum_dominating_sets(g, false)
            : std::vector<VertexSet>{};
  const PerturbationResult b = bondage_number(g, 2);
  report.targets.push_back(
      {ReductionTarget::kBondage, gamma, to_string(b)});

  ClaimBuilder cb{report.claims};
  cb.claim("C3.1", [&]() -> std::string {
    if (gamma < n + 1)
      return "gamma = " + std::to_string(gamma) + " < n+1 = " +
             std::to_string(n + 1);
    const VertexSet s2_only = VertexSet::of({art.spine(2)});
    for (const VertexSet& d : min_sets) {
      if ((d & art.spine_vertices()) != s2_only)
        return "gamma-set " + set_str(art, d) + " meets the path in " +
               set_str(art, d & art.spine_vertices());
      if (std::string err = check_gadget_structure(art, d); !err.empty())
        return "gamma-" + err;
    }
    return {};
  });
  cb.claim("C3.2", [&]() -> std::string {
    if (tight != sat)
      return "gamma = " + std::to_string(gamma) + " but formula is " +
             (sat ? "satisfiable" : "unsatisfiable");
    if (tight) {
      Assignment t = assignment_from_gamma_set(art, min_sets.front());
      if (!evaluate(f, t))
        return "assignment read from " + set_str(art, min_sets.front()) +
               " does not satisfy the formula";
    }
    if (sat) {
      VertexSet d = gamma_set_from_assignment(art, *is_satisfiable(f));
      if (d.count() != n + 1 || !is_dominating_set(g, d))
        return "constructed set " + set_str(art, d) +
               " is not a dominating set of size n+1";
    }
    return {};
  });
  cb.claim("C3.3", [&]() -> std::string {
    for (const Edge& e : g.edges())
      if (!has_dominating_set(g.remove_edges({e}), n + 2))
        return "gamma(G - " + edge_str(art, e) + ") > n+2 = " +
               std::to_string(n + 2);
    return {};
  });
  cb.claim("C3.4", [&]() -> std::string {
    if (tight != b.is_one())
      return "gamma = " + std::to_string(gamma) + " but b = " + to_string(b);
    return {};
  });
  cb.claim("T3", [&]() -> std::string {
    if (sat != b.is_one())
      return std::string("formula ") + (sat ? "satisfiable" : "unsatisfiable") +
             " but b = " + to_string(b);
    return {};
  });
}

void verify_total_bondage(const CnfFormula& f, bool sat,
                          VerificationReport& report) {
  const ReductionArtifact art = build_total_bondage_instance(f);
  const Graph& g = art.graph;
  const int n = art.n;
  const int gamma_t = total_domination_number(g).value;
  const bool tight = gamma_t == 2 * n + 2;
  const std::vector<VertexSet> min_sets =
      enumerate_minimum_dominating_sets(g, true);
  const PerturbationResult bt = total_bondage_number(g, 2);
  report.targets.push_back(
      {ReductionTarget::kTotalBondage, gamma_t, to_string(bt)});

  ClaimBuilder cb{report.claims};
  cb.claim("C4.1", [&]() -> std::string {
    if (gamma_t < 2 * n + 2)
      return "gamma_t = " + std::to_string(gamma_t) + " < 2n+2 = " +
             std::to_string(2 * n + 2);
    const VertexSet s2s4 = VertexSet::of({art.spine(2), art.spine(4)});
    for (const VertexSet& d : min_sets) {
      if (!d.test(art.spine(4)))
        return "gamma_t-set " + set_str(art, d) + " misses s_4";
      for (int i = 1; i <= art.n; ++i)
        if (!d.test(art.apex(i)))
          return "gamma_t-set " + set_str(art, d) + " misses v_" +
                 std::to_string(i);
      if (tight) {
        if ((d & art.spine_vertices()) != s2s4)
          return "gamma_t-set " + set_str(art, d) + " meets H in " +
                 set_str(art, d & art.spine_vertices());
        for (int i = 1; i <= art.n; ++i) {
          int hits = (d & art.gadget(i)).count();
          if (hits != 2)
            return "gamma_t-set " + set_str(art, d) + " meets H_" +
                   std::to_string(i) + " in " + std::to_string(hits) +
                   " vertices";
        }
        VertexSet cs = d & clause_vertices(art);
        if (!cs.empty())
          return "gamma_t-set contains clause vertex " + set_str(art, cs);
      }
    }
    return {};
  });
  cb.claim("C4.2", [&]() -> std::string {
    if (tight != sat)
      return "gamma_t = " + std::to_string(gamma_t) + " but formula is " +
             (sat ? "satisfiable" : "unsatisfiable");
    if (tight) {
      Assignment t = assignment_from_gamma_set(art, min_sets.front());
      if (!evaluate(f, t))
        return "assignment read from " + set_str(art, min_sets.front()) +
               " does not satisfy the formula";
    }
    if (sat) {
      VertexSet d = gamma_set_from_assignment(art, *is_satisfiable(f));
      if (d.count() != 2 * n + 2 || !is_total_dominating_set(g, d))
        return "constructed set " + set_str(art, d) +
               " is not a total dominating set of size 2n+2";
    }
    return {};
  });
  cb.claim("C4.3", [&]() -> std::string {
    // Removals that isolate a vertex leave gamma_t undefined and are
    // skipped (pendant edges v_i v_i' and s_4 s_5).
    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) == 1 || g.degree(e.v) == 1) continue;
      if (!has_total_dominating_set(g.remove_edges({e}), 2 * n + 3))
        return "gamma_t(G - " + edge_str(art, e) + ") > 2n+3 = " +
               std::to_string(2 * n + 3);
    }
    return {};
  });
  cb.claim("C4.4", [&]() -> std::string {
    if (tight != bt.is_one())
      return "gamma_t = " + std::to_string(gamma_t) + " but b_t = " +
             to_string(bt);
    return {};
  });
  cb.claim("T4", [&]() -> std::string {
    if (sat != bt.is_one())
      return std::string("formula ") + (sat ? "satisfiable" : "unsatisfiable") +
             " but b_t = " + to_string(bt);
    return {};
  });
}

void verify_reinforcement(const CnfFormula& f, bool sat,
                          VerificationReport& report) {
  const ReductionArtifact art = build_reinforcement_instance(f);
  const Graph& g = art.graph;
  const int n = art.n;
  const int gamma = domination_number(g).value;
  const PerturbationResult r = reinforcement_number(g, 2);
  report.targets.push_back(
      {ReductionTarget::kReinforcement, gamma, to_string(r)});

  ClaimBuilder cb{report.claims};
  cb.claim("C5.1", [&]() -> std::string {
    if (gamma != n + 1)
      return "gamma = " + std::to_string(gamma) + " != n+1 = " +
             std::to_string(n + 1);
    return {};
  });
  cb.claim("C5.2", [&]() -> std::string {
    for (const Edge& e : g.non_edges()) {
      const Graph augmented = g.add_edges({e});
      if (domination_number(augmented).value != n) continue;
      for (const VertexSet& d :
           enumerate_minimum_dominating_sets(augmented, false))
        if (std::string err = check_gadget_structure(art, d); !err.empty())
          return "after adding " + edge_str(art, e) + ": gamma-" + err;
    }
    return {};
  });
  cb.claim("T5", [&]() -> std::string {
    if (sat != r.is_one())
      return std::string("formula ") + (sat ? "satisfiable" : "unsatisfiable") +
             " but r = " + to_string(r);
    return {};
  });
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimOutcome& c) { return c.passed; });
}

Assignment assignment_from_gamma_set(const ReductionArtifact& art,
                                     const VertexSet& d) {
  std::vector<bool> values(static_cast<std::size_t>(art.n));
  for (int i = 1; i <= art.n; ++i) {
    const VertexSet hits = d & art.gadget(i);
    bool truth;
    if (art.target == ReductionTarget::kTotalBondage) {
      if (hits.count() != 2 || !hits.test(art.apex(i)))
        throw std::invalid_argument(
            "set does not meet gadget H_" + std::to_string(i) +
            " in {v_i, other}: " + set_str(art, hits));
      if (hits.test(art.pos_literal(i)) || hits.test(art.apex_pendant(i)))
        truth = true;
      else if (hits.test(art.neg_literal(i)))
        truth = false;
      else
        throw std::invalid_argument("unexpected gadget intersection " +
                                    set_str(art, hits));
    } else {
      if (hits.count() != 1)
        throw std::invalid_argument(
            "set meets gadget T_" + std::to_string(i) + " in " +
            std::to_string(hits.count()) + " vertices");
      truth = !hits.test(art.neg_literal(i));
    }
    values[static_cast<std::size_t>(i - 1)] = truth;
  }
  return Assignment(std::move(values));
}

VertexSet gamma_set_from_assignment(const ReductionArtifact& art,
                                    const Assignment& t) {
  if (t.variable_count() != art.n)
    throw std::invalid_argument("assignment covers " +
                                std::to_string(t.variable_count()) +
                                " variables, artifact has " +
                                std::to_string(art.n));
  VertexSet d;
  for (int i = 1; i <= art.n; ++i)
    d.set(t.value(i) ? art.pos_literal(i) : art.neg_literal(i));
  switch (art.target) {
    case ReductionTarget::kBondage:
      d.set(art.spine(2));
      break;
    case ReductionTarget::kTotalBondage:
      d.set(art.spine(2));
      d.set(art.spine(4));
      for (int i = 1; i <= art.n; ++i) d.set(art.apex(i));
      break;
    case ReductionTarget::kReinforcement:
      break;  // completed by the added hub edge
  }
  return d;
}

VerificationReport verify(const CnfFormula& f,
                          const std::set<ReductionTarget>& targets) {
  if (f.variable_count() > kMaxVerifyVariables ||
      f.clause_count() > kMaxVerifyClauses)
    throw std::invalid_argument(
        "instance exceeds verification limits (n <= " +
        std::to_string(kMaxVerifyVariables) + ", m <= " +
        std::to_string(kMaxVerifyClauses) + ")");
  VerificationReport report;
  report.variable_count = f.variable_count();
  report.clause_count = f.clause_count();
  report.satisfiable = is_satisfiable(f).has_value();
  if (targets.contains(ReductionTarget::kBondage))
    verify_bondage(f, report.satisfiable, report);
  if (targets.contains(ReductionTarget::kTotalBondage))
    verify_total_bondage(f, report.satisfiable, report);
  if (targets.contains(ReductionTarget::kReinforcement))
    verify_reinforcement(f, report.satisfiable, report);
  return report;
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["formula"] = {{"n", report.variable_count},
                    {"m", report.clause_count},
                    {"satisfiable", report.satisfiable}};
  nlohmann::ordered_json targets = nlohmann::ordered_json::object();
  for (const TargetSummary& t : report.targets) {
    nlohmann::ordered_json entry;
    switch (t.target) {
      case ReductionTarget::kBondage:
        entry["gamma"] = t.domination_value;
        entry["b"] = t.perturbation;
        break;
      case ReductionTarget::kTotalBondage:
        entry["gamma_t"] = t.domination_value;
        entry["b_t"] = t.perturbation;
        break;
      case ReductionTarget::kReinforcement:
        entry["gamma"] = t.domination_value;
        entry["r"] = t.perturbation;
        break;
    }
    targets[to_string(t.target)] = entry;
  }
  doc["targets"] = targets;
  doc["claims"] = nlohmann::ordered_json::array();
  for (const ClaimOutcome& c : report.claims)
    doc["claims"].push_back(
        {{"id", c.id}, {"passed", c.passed}, {"details", c.details}});
  return doc.dump(2) + "\n";
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "formula: n=" << report.variable_count << " m=" << report.clause_count
      << " " << (report.satisfiable ? "satisfiable" : "unsatisfiable") << "\n";
  for (const TargetSummary& t : report.targets) {
    out << to_string(t.target) << ": "
        << (t.target == ReductionTarget::kTotalBondage ? "gamma_t" : "gamma")
        << "=" << t.domination_value << " perturbation=" << t.perturbation
        << "\n";
  }
  for (const ClaimOutcome& c : report.claims) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.passed) out << ": " << c.details;
    out << "\n";
  }
  return out.str();
}

}  // namespace domtk
