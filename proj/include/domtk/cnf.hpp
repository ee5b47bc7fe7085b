#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domtk {

// 3-SAT data model. Variables are 1-indexed as in DIMACS.

struct Literal {
  int variable = 1;  // >= 1
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Exactly three literals over pairwise distinct variables.
struct Clause {
  std::array<Literal, 3> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

class CnfFormula {
 public:
  // Validates clause invariants: size 3, distinct variables, indices in 1..n.
  CnfFormula(int variable_count, std::vector<Clause> clauses);

  int variable_count() const { return variable_count_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int variable_count_;
  std::vector<Clause> clauses_;
};

// Total truth mapping for variables 1..n.
class Assignment {
 public:
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  int variable_count() const { return static_cast<int>(values_.size()); }
  bool value(int variable) const {
    return values_.at(static_cast<std::size_t>(variable - 1));
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;  // values_[i] is variable i+1
};

inline bool literal_true(const Literal& lit, const Assignment& t) {
  return t.value(lit.variable) != lit.negated;
}

CnfFormula parse_dimacs(std::string_view text);
std::string serialize(const CnfFormula& f);

// True iff every clause has a literal true under t. Throws if t is not
// total on 1..n.
bool evaluate(const CnfFormula& f, const Assignment& t);

// Exhaustive satisfiability decision; returns a satisfying assignment when
// one exists.
std::optional<Assignment> is_satisfiable(const CnfFormula& f);

// Deterministic seeded generator: m clauses over 3 distinct uniform
// variables with uniform signs. Requires n >= 3.
CnfFormula random_formula(int n, int m, std::uint64_t seed);

}  // namespace domtk
