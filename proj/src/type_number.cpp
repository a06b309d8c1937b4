#include "tiled/type_number.hpp"

#include <string>

#include "tiled/errors.hpp"

namespace tiled {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

TypeNumberReport run(const GlobalProblem& p) {
  if (p.degree < 2)
    throw error(errc::invalid_local_exponent, "algebra degree must be >= 2");

  TypeNumberReport report;
  std::vector<GroupElement> relations;
  for (const auto& tp : p.t_primes) {
    if (tp.d == p.degree) {
      // Local exponent equal to the degree is the maximal-order case and
      // contributes nothing; accept but skip.
      report.warnings.push_back("prime '" + tp.label + "' has d = " +
                                std::to_string(tp.d) +
                                " equal to the degree; skipped");
      continue;
    }
    if (tp.d < 1 || p.degree % tp.d != 0)
      throw error(errc::invalid_local_exponent,
                  "prime '" + tp.label + "' has local exponent " +
                      std::to_string(tp.d) + " which does not divide " +
                      std::to_string(p.degree),
                  {tp.d, p.degree}, 2, tp.label);
    GroupElement vec = p.class_group.reduce(tp.vector);
    if (tp.kind == ClassVectorKind::p_class)
      for (auto& c : vec) c *= tp.d;
    relations.push_back(p.class_group.reduce(vec));
  }

  report.cl_t_hat = quotient_by(p.class_group, relations);
  report.type_number = power_quotient_size(report.cl_t_hat, p.degree);
  report.max_bound = power_quotient_size(p.class_group, p.degree);
  return report;
}

} // namespace

TypeNumberReport type_number(const GlobalProblem& p) { return run(p); }

TypeNumberReport prime_degree_type_number(const GlobalProblem& p) {
  if (!is_prime(p.degree) || p.degree < 3)
    throw error(errc::not_prime,
                "degree " + std::to_string(p.degree) + " is not an odd prime",
                {p.degree}, 1);
  for (const auto& tp : p.t_primes)
    if (tp.d != 1)
      throw error(errc::invalid_local_exponent,
                  "prime '" + tp.label +
                      "' must have local exponent 1 in the prime-degree case",
                  {tp.d, p.degree}, 2, tp.label);
  return run(p);
}

} // namespace tiled
