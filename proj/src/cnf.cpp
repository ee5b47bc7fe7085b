#include "domtk/cnf.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace domtk {

CnfFormula::CnfFormula(int variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  if (variable_count_ < 1)
    throw std::invalid_argument("variable count must be positive");
  if (clauses_.empty())
    throw std::invalid_argument("formula needs at least one clause");
  for (const Clause& c : clauses_) {
    for (const Literal& lit : c.literals) {
      if (lit.variable < 1 || lit.variable > variable_count_)
        throw std::invalid_argument("variable index " +
                                    std::to_string(lit.variable) +
                                    " outside 1.." + std::to_string(variable_count_));
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (c.literals[a].variable == c.literals[b].variable)
          throw std::invalid_argument(
              "variable " + std::to_string(c.literals[a].variable) +
              " appears twice in one clause");
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  int n = -1, m = -1;
  // Header: comments then "p cnf n m".
  while (in >> token) {
    if (token == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (token == "p") {
      std::string fmt;
      if (!(in >> fmt >> n >> m) || fmt != "cnf" || in.fail())
        throw std::invalid_argument("malformed DIMACS header");
      break;
    }
    throw std::invalid_argument("expected DIMACS header, got '" + token + "'");
  }
  if (n < 0) throw std::invalid_argument("missing DIMACS header");

  std::vector<Clause> clauses;
  std::vector<Literal> current;
  int lit = 0;
  while (in >> lit) {
    if (lit == 0) {
      if (current.size() != 3)
        throw std::invalid_argument("clause " + std::to_string(clauses.size() + 1) +
                                    " has " + std::to_string(current.size()) +
                                    " literals, expected 3");
      clauses.push_back(Clause{{current[0], current[1], current[2]}});
      current.clear();
    } else {
      current.push_back(Literal{lit < 0 ? -lit : lit, lit < 0});
    }
  }
  if (!in.eof()) throw std::invalid_argument("non-integer token in clause data");
  if (!current.empty())
    throw std::invalid_argument("unterminated final clause");
  if (static_cast<int>(clauses.size()) != m)
    throw std::invalid_argument("header declares " + std::to_string(m) +
                                " clauses, found " + std::to_string(clauses.size()));
  return CnfFormula(n, std::move(clauses));
}

std::string serialize(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count() << " " << f.clause_count() << "\n";
  for (const Clause& c : f.clauses()) {
    for (const Literal& lit : c.literals)
      out << (lit.negated ? -lit.variable : lit.variable) << " ";
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& t) {
  if (t.variable_count() != f.variable_count())
    throw std::invalid_argument("assignment covers " +
                                std::to_string(t.variable_count()) +
                                " variables, formula has " +
                                std::to_string(f.variable_count()));
  for (const Clause& c : f.clauses()) {
    bool sat = false;
    for (const Literal& lit : c.literals)
      if (literal_true(lit, t)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> is_satisfiable(const CnfFormula& f) {
  const int n = f.variable_count();
  if (n > 30) throw std::invalid_argument("exhaustive search limited to n <= 30");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    Assignment t(std::move(values));
    if (evaluate(f, t)) return t;
  }
  return std::nullopt;
}

CnfFormula random_formula(int n, int m, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_formula requires n >= 3");
  if (m < 1) throw std::invalid_argument("random_formula requires m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    int vars[3];
    for (int p = 0; p < 3; ++p) {
      bool fresh;
      do {
        vars[p] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        fresh = true;
        for (int q = 0; q < p; ++q)
          if (vars[q] == vars[p]) fresh = false;
      } while (!fresh);
    }
    std::sort(std::begin(vars), std::end(vars));
    Clause c;
    for (int p = 0; p < 3; ++p) c.literals[static_cast<std::size_t>(p)] =
        Literal{vars[p], (rng() & 1) != 0};
    clauses.push_back(c);
  }
  return CnfFormula(n, std::move(clauses));
}

}  // namespace domtk
