#ifndef TILED_TYPE_NUMBER_HPP
#define TILED_TYPE_NUMBER_HPP

#include <string>
#include <vector>

#include "tiled/abelian_group.hpp"

namespace tiled {

// Class vector of a T-prime, either the class of the replacement prime q
// directly ("q_class") or the class of p itself ("p_class", multiplied by
// the local exponent d internally).
enum class ClassVectorKind { q_class, p_class };

struct TPrime {
  std::string label;
  int d = 1; // local exponent, must divide the degree; d = degree is filtered
  ClassVectorKind kind = ClassVectorKind::q_class;
  GroupElement vector; // coordinates in the class group
};

// Inputs of the global computation.  The class group (the ray class group
// modulo the ramified real places) is supplied externally; omega labels are
// metadata only.
struct GlobalProblem {
  int degree = 0;
  FinAbGroup class_group;
  std::vector<std::string> omega;
  std::vector<TPrime> t_primes;
};

struct TypeNumberReport {
  FinAbGroup cl_t_hat;
  std::int64_t type_number = 1;
  std::int64_t max_bound = 1; // #Cl/Cl^n, the maximal-order bound
  std::vector<std::string> warnings;
};

// G(Gamma) = #(Cl_T_hat / Cl_T_hat^n) with Cl_T_hat = Cl / <relations>.
// T-primes with d = degree are skipped with a warning; d not dividing the
// degree raises InvalidLocalExponent(label).
TypeNumberReport type_number(const GlobalProblem& p);

// Prime-degree case: degree must be an odd prime and every T-prime must have
// d = 1 with the class vector of the prime itself.
TypeNumberReport prime_degree_type_number(const GlobalProblem& p);

} // namespace tiled

#endif
