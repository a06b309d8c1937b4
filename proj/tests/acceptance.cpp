// Acceptance suite: prints one pass/fail line per criterion and exits with
// the number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tiled/abelian_group.hpp"
#include "tiled/errors.hpp"
#include "tiled/json_io.hpp"
#include "tiled/reflection.hpp"
#include "tiled/type_number.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace tiled;

namespace {

int failures = 0;

void criterion(int num, const std::string& desc,
               const std::function<bool(std::string&)>& body,
               double budget_ms = 0.0) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (ok && budget_ms > 0.0 && ms > budget_ms) {
    ok = false;
    detail = "time budget exceeded";
  }
  std::printf("%s %2d  %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", num,
              desc.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

ExponentMatrix make(const IntMatrix& m) {
  return ExponentMatrix::validate(int(m.size()), m);
}

ExponentMatrix zero_matrix(int n) {
  return ExponentMatrix::validate(n,
                                  IntMatrix(n, std::vector<std::int64_t>(n, 0)));
}

bool check(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

std::vector<std::vector<std::int64_t>> invariant_factor_chains(std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> chains;
  std::vector<std::vector<std::int64_t>> stack{{}};
  while (!stack.empty()) {
    auto chain = stack.back();
    stack.pop_back();
    if (!chain.empty()) chains.push_back(chain);
    std::int64_t prod = 1;
    for (auto d : chain) prod *= d;
    const std::int64_t start = chain.empty() ? 2 : chain.back();
    for (std::int64_t d = start; prod * d <= bound; ++d) {
      if (!chain.empty() && d % chain.back() != 0) continue;
      auto next = chain;
      next.push_back(d);
      stack.push_back(std::move(next));
    }
  }
  return chains;
}

} // namespace

int main() {
  const ExponentMatrix p1 =
      make({{0, 1, 1, 2}, {2, 0, 2, 2}, {2, 1, 0, 1}, {1, 1, 0, 0}});
  const ExponentMatrix chamber = make({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
  const ExponentMatrix three = make({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}});
  const ExponentMatrix triv_a = make({{0, 1, 2}, {0, 0, 1}, {0, 1, 0}});
  const ExponentMatrix triv_b = make({{0, -1, -1}, {3, 0, 1}, {2, 1, 0}});
  const ExponentMatrix triv_c = make({{0, 0, 2}, {1, 0, 2}, {0, 0, 0}});

  criterion(
      1, "4x4 example: types (1,3,3,1) and d = 2 on every route",
      [&](std::string& detail) {
        bool ok = check(vertex_types(p1).t == std::vector<int>{1, 3, 3, 1},
                        "types differ", detail);
        ok &= check(reflection_class_count(p1) == 2, "divisor search != 2",
                    detail);
        ok &= check(norm_exponent(p1) == 2, "normalizer exponent != 2", detail);
        ok &= check(oracle_reflection_class_count(p1) == 2, "oracle != 2",
                    detail);
        return ok;
      },
      1000.0);

  criterion(
      2, "chamber: one reflection class on every route",
      [&](std::string& detail) {
        bool ok = check(reflection_class_count(chamber) == 1,
                        "divisor search != 1", detail);
        ok &= check(reflection_class_count_prime(chamber) == 1,
                    "prime algorithm != 1", detail);
        ok &= check(oracle_reflection_class_count(chamber) == 1, "oracle != 1",
                    detail);
        return ok;
      },
      1000.0);

  criterion(3, "three-class example: types (0,2,2) and d = 3",
            [&](std::string& detail) {
              bool ok = check(vertex_types(three).t == std::vector<int>{0, 2, 2},
                              "types differ", detail);
              ok &= check(reflection_class_count(three) == 3,
                          "divisor search != 3", detail);
              ok &= check(norm_exponent(three) == 3,
                          "normalizer exponent != 3", detail);
              ok &= check(oracle_reflection_class_count(three) == 3,
                          "oracle != 3", detail);
              return ok;
            });

  criterion(4, "trivial-normalizer triple: tuples and equivalences",
            [&](std::string& detail) {
              const auto tup = [](const ExponentMatrix& e) {
                return structural_invariants(e).six_tuple();
              };
              bool ok = check(tup(triv_a) ==
                                  std::array<std::int64_t, 6>{0, 2, 1, 1, 0, 1},
                              "first tuple differs", detail);
              ok &= check(vertex_types(triv_a).t == std::vector<int>{0, 2, 0},
                          "first types differ", detail);
              ok &= check(tup(triv_b) ==
                              std::array<std::int64_t, 6>{1, 1, 1, 0, 0, 2},
                          "second tuple differs", detail);
              ok &= check(vertex_types(triv_b).t == std::vector<int>{2, 0, 0},
                          "second types differ", detail);
              ok &= check(tup(triv_c) ==
                              std::array<std::int64_t, 6>{0, 2, 1, 1, 0, 1},
                          "third tuple differs", detail);
              ok &= check(vertex_types(triv_c).t == std::vector<int>{1, 0, 1},
                          "third types differ", detail);
              const auto sigma = reflection_equivalent(triv_a, triv_b);
              ok &= check(sigma && sigma->cycle_string() == "(1 2 3)",
                          "witness is not (1 2 3)", detail);
              ok &= check(!reflection_equivalent(triv_a, triv_c).has_value(),
                          "unexpected equivalence", detail);
              return ok;
            });

  criterion(5, "3x3 isomorphism: witness (1 3) and explicit conjugation",
            [&](std::string& detail) {
              const ExponentMatrix ex1 = make({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}});
              const ExponentMatrix conj =
                  make({{0, 0, -1}, {2, 0, 0}, {2, 1, 0}});
              const auto sigma = are_isomorphic(ex1, conj);
              bool ok = check(sigma && sigma->cycle_string() == "(1 3)",
                              "witness is not (1 3)", detail);
              const MonomialMatrix xi(Permutation::from_cycles(3, "(1 3)"),
                                      {0, 1, 1});
              ok &= check(conjugate_by_monomial(ex1, xi) == conj,
                          "conjugation does not reproduce the matrix", detail);
              return ok;
            });

  criterion(6, "maximal orders: d = n for n = 2..6",
            [&](std::string& detail) {
              bool ok = true;
              for (int n = 2; n <= 6; ++n) {
                ok &= check(reflection_class_count(zero_matrix(n)) == n,
                            "divisor search != n at n=" + std::to_string(n),
                            detail);
                ok &= check(norm_exponent(zero_matrix(n)) == n,
                            "normalizer exponent != n at n=" + std::to_string(n),
                            detail);
              }
              return ok;
            });

  criterion(7, "global example: Cl_T_hat = (2,2), G = 4, bound 8",
            [&](std::string& detail) {
              const GlobalProblem problem = load_problem_file(
                  std::string(TILED_DATA_DIR) + "/global_quartic.json");
              const TypeNumberReport report = type_number(problem);
              bool ok = check(report.cl_t_hat == FinAbGroup({2, 2}),
                              "quotient group differs", detail);
              ok &= check(report.type_number == 4, "type number != 4", detail);
              ok &= check(report.max_bound == 8, "bound != 8", detail);
              ok &= check(report.max_bound % report.type_number == 0,
                          "type number does not divide the bound", detail);
              return ok;
            });

  criterion(
      8, "500 random orders: divisor search = oracle = normalizer gcd",
      [&](std::string& detail) {
        std::mt19937 rng(20240811);
        for (int trial = 0; trial < 500; ++trial) {
          const int n = 2 + int(rng() % 5);
          const ExponentMatrix e = testgen::random_valid_matrix(rng, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              if (e.mu(i, j) < -3 || e.mu(i, j) > 3)
                return check(false, "entry out of range", detail);
          const int d = reflection_class_count(e);
          if (!check(d == oracle_reflection_class_count(e),
                     "oracle mismatch at trial " + std::to_string(trial),
                     detail))
            return false;
          if (!check(d == norm_exponent(e),
                     "normalizer mismatch at trial " + std::to_string(trial),
                     detail))
            return false;
          if ((n == 2 || n == 3 || n == 5) &&
              !check(d == reflection_class_count_prime(e),
                     "prime algorithm mismatch at trial " +
                         std::to_string(trial),
                     detail))
            return false;
        }
        return true;
      },
      30000.0);

  criterion(9, "abelian layer vs exhaustive enumeration (orders <= 256)",
            [&](std::string& detail) {
              std::mt19937 rng(97531);

              std::uniform_int_distribution<std::int64_t> entry(-9, 9);
              for (int trial = 0; trial < 200; ++trial) {
                const size_t rows = 1 + rng() % 5;
                const size_t cols = 1 + rng() % 5;
                RelationMatrix a(rows, std::vector<std::int64_t>(cols));
                for (auto& row : a)
                  for (auto& v : row) v = entry(rng);
                if (!check(smith_normal_form(a) ==
                               testoracle::minor_gcd_divisors(a),
                           "SNF mismatch at trial " + std::to_string(trial),
                           detail))
                  return false;
              }

              const auto chains = invariant_factor_chains(256);
              const std::array<std::int64_t, 7> exps{2, 3, 4, 5, 6, 8, 12};
              for (const auto& chain : chains) {
                const FinAbGroup g(chain);
                const testoracle::SmallGroup sg(chain);
                for (std::int64_t n : exps)
                  if (!check(power_quotient_size(g, n) ==
                                 testoracle::power_index_by_enumeration(sg, {},
                                                                        n),
                             "power index mismatch", detail))
                    return false;
              }

              for (int trial = 0; trial < 200; ++trial) {
                const auto& chain = chains[rng() % chains.size()];
                const FinAbGroup g(chain);
                const testoracle::SmallGroup sg(chain);
                std::vector<GroupElement> rels;
                const int count = int(rng() % 3);
                for (int r = 0; r < count; ++r) {
                  GroupElement v(chain.size());
                  for (size_t i = 0; i < v.size(); ++i) v[i] = rng() % chain[i];
                  rels.push_back(std::move(v));
                }
                const FinAbGroup q = quotient_by(g, rels);
                if (!check(testoracle::group_order_multiset(q) ==
                               testoracle::quotient_order_multiset(sg, rels),
                           "quotient mismatch at trial " +
                               std::to_string(trial),
                           detail))
                  return false;
                const std::int64_t n = exps[rng() % exps.size()];
                if (!check(power_quotient_size(q, n) ==
                               testoracle::power_index_by_enumeration(sg, rels,
                                                                      n),
                           "quotient power mismatch at trial " +
                               std::to_string(trial),
                           detail))
                  return false;
              }
              return true;
            });

  criterion(10, "invariant identities and conjugation covariance",
            [&](std::string& detail) {
              std::mt19937 rng(86420);
              std::vector<ExponentMatrix> pool{p1, chamber, three, triv_a,
                                               triv_b, triv_c};
              for (int extra = 0; extra < 14; ++extra)
                pool.push_back(
                    testgen::random_valid_matrix(rng, 2 + int(rng() % 5)));

              for (const auto& e : pool) {
                const int n = e.size();
                const auto inv = structural_invariants(e);
                for (int i = 0; i < n; ++i)
                  for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l) {
                      if (!check(inv.at(i, j, l) >= 0, "negative invariant",
                                 detail))
                        return false;
                      if (!check(inv.at(i, j, j) == 0, "m_ijj != 0", detail))
                        return false;
                      if (!check(inv.at(i, j, i) ==
                                     inv.at(i, j, l) + inv.at(j, i, l),
                                 "m_iji decomposition fails", detail))
                        return false;
                    }

                const auto types = vertex_types(e).t;
                for (int rep = 0; rep < 100; ++rep) {
                  const auto xi = testgen::random_monomial(rng, n);
                  const auto conj = conjugate_by_monomial(e, xi);
                  const auto inv_c = structural_invariants(conj);
                  const auto types_c = vertex_types(conj).t;
                  const int txi = monomial_type(xi);
                  for (int i = 0; i < n; ++i) {
                    if (!check(types_c[i] == (txi + types[xi.sigma(i)]) % n,
                               "type covariance fails", detail))
                      return false;
                    for (int j = 0; j < n; ++j)
                      for (int l = 0; l < n; ++l)
                        if (!check(inv_c.at(i, j, l) ==
                                       inv.at(xi.sigma(i), xi.sigma(j),
                                              xi.sigma(l)),
                                   "invariant covariance fails", detail))
                          return false;
                  }
                }
              }
              return true;
            });

  if (failures == 0)
    std::printf("all 10 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
