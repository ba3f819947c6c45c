#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ehrlace/polynomial.hpp"
#include "ehrlace/ratfunc.hpp"

namespace ehrlace {

// Normalized three-term rule f_j = M_j (2x+1) f_{j-1} + (1 - M_j) f_{j-2}.
// When every M_j lies in [0, 1] the line-transformed sequence is an
// orthogonal polynomial system (Favard).
struct ThreeTermRule {
  std::string name;
  std::function<Polynomial(long)> member;  // j -> f_j
  std::function<Rational(long)> coeff;     // j -> M_j, j >= 2
  long j_min = 2;
};

// The four closed-form rules: cross (M_d = 1/d), stasheff, roota, rootc.
ThreeTermRule builtin_rule(const std::string& name);

// Exact polynomial identity check for 2 <= j <= j_max.
bool verify_three_term(const ThreeTermRule& rule, long j_max);

struct FavardWindow {
  std::vector<Rational> m_values;  // M_j for j = 2..j_max
  bool all_in_unit_interval;
  Rational m2;  // reported in eighths by the CLI
};

FavardWindow favard_window(const ThreeTermRule& rule, long j_max);

struct RelationReport {
  struct Entry {
    std::string relation;
    long n;
    bool ok;
  };
  std::vector<Entry> entries;
  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok) return false;
    return true;
  }
};

// Verifies relH2n1 (n >= 1), relH2n2 (n >= 2) and recH3n (n >= 2) as exact
// polynomial identities for all admissible n <= n_max.
RelationReport verify_relation_bank(long n_max);

// One basis term of a linear relation ansatz: a series-family generator
// evaluated at (n + offset), optionally multiplied by the argument k.
struct AnsatzTerm {
  std::string name;         // unknown's name in the output map
  char family;              // '1', '2' or '3' for the K_{a,n} series
  long offset;              // generator index n + offset
  bool times_k;
};

struct RelationAnsatz {
  char target_family;
  long target_offset;
  std::vector<AnsatzTerm> basis;
  long n_min = 3;  // smallest n at which every generator is valid
};

// Built-in ansatz reproducing the recH3n discovery.
RelationAnsatz rech3n_ansatz();

// Solves target = sum coeff * basis for the unknown coefficients in the
// field of rational functions of n, by exact elimination on probe series
// coefficients, then re-verifies on twice the probe count.
// Throws NoRelation (inconsistent) or RankDeficient (underdetermined).
std::map<std::string, RationalFunction> discover_recurrence(
    const RelationAnsatz& ansatz, unsigned probe_orders = 0);

// Both forms of the H^d_j recursion bank (the F-form, the H-form with its
// quartic cofactors, the A-compression and the F base cases) for d <= d_max.
bool verify_Hdj_recursion(long d_max);

struct GLemmaReport {
  struct OddEntry { long d; Rational root_c; bool ok; };       // root of c -> G(-1/2)
  struct EvenEntry { long d; Rational ratio; bool ok; };       // a_{d-1}/a_{d-3} > d
  struct DegreeEntry { long d; bool ok; };                     // degree drop at c = -2
  std::vector<OddEntry> odd;
  std::vector<EvenEntry> even;
  std::vector<DegreeEntry> degree;
  bool all_ok() const;
};

GLemmaReport verify_G_lemmas(long d_max);

// The correct-graph count recursion for f(3, n, k) (values from the
// enumeration oracle) plus the series form of the same recursion.
bool verify_f3nk_recursion(long n_max, long k_max);

}  // namespace ehrlace
