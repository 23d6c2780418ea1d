// Acceptance gate: the fifteen criteria at their stated scales and tolerances.
// Prints one PASS/FAIL line per criterion on stdout; details of failures go to
// stderr. Exit status is 0 only when every selected criterion passes.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qharm/io.hpp"
#include "qharm/linalg.hpp"
#include "qharm/sphere.hpp"
#include "qharm/verify.hpp"

namespace {

using namespace qharm;
using verify::VerifyReport;

struct Outcome {
  bool pass = true;
  json failures = json::array();
  json notes = json::array();

  void fail(json why) {
    pass = false;
    failures.push_back(std::move(why));
  }
};

/// Runs `suite` and requires the listed checks, and every negative control of
/// the suite, to pass. Ids missing from the report count as failures.
void gate(Outcome& o, const std::string& suite, int n, int d, const std::vector<std::string>& ids) {
  const VerifyReport r = verify::run_suite(suite, n, d);
  for (const auto& id : ids) {
    const auto* c = r.find(id);
    if (!c)
      o.fail(json{{"suite", suite}, {"n", n}, {"max_degree", d}, {"check", id}, {"reason", "not in report"}});
    else if (!c->passed)
      o.fail(json{{"suite", suite}, {"n", n}, {"max_degree", d}, {"check", id}, {"counterexample", c->counterexample}});
  }
  for (const auto& c : r.checks)
    if (c.id.rfind("control.", 0) == 0 && !c.passed)
      o.fail(json{{"suite", suite}, {"n", n}, {"check", c.id}, {"reason", "negative control not detected"}});
}

void expect_poly(Outcome& o, const std::string& what, const NCPoly& got, const NCPoly& want) {
  if (!(got - want).to_order(Order::ZFirst).is_zero())
    o.fail(json{{"check", what}, {"got", got.to_string()}, {"want", want.to_string()}});
}

void expect_scalar(Outcome& o, const std::string& what, const ScalarQ& got, const ScalarQ& want) {
  if (got != want) o.fail(json{{"check", what}, {"got", got.to_string()}, {"want", want.to_string()}});
}

ScalarQ q(int k) { return ScalarQ::q_power(k); }

std::size_t laplace_kernel_dim(int n, int m, int mp) {
  const BidegreeBasis from(n, m, mp);
  if (m == 0 || mp == 0) return from.size();
  const BidegreeBasis to(n, m - 1, mp - 1);
  return kernel(operator_matrix(ops::laplace(n), from, to)).size();
}

struct Criterion {
  int number;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;

  cs.push_back({1, "Delta_q(Q^k) = q^{n-1} Q^{k-1} [k][k+n-1], n in {1,2,3}, k <= 4", 5.0, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      const NCPoly Q = q_radius(n);
      for (int k = 1; k <= 4; ++k) {
        const NCPoly lhs = ops::laplace(n).apply(pow(Q, k));
        const NCPoly rhs = (q(n - 1) * q_number(k) * q_number(k + n - 1)) * pow(Q, k - 1);
        expect_poly(o, "radius power n=" + std::to_string(n) + " k=" + std::to_string(k), lhs, rhs);
      }
    }
    return o;
  }});

  cs.push_back({2, "commutator of Delta_q with Q_hat^k on A_{m,m'}, n in {2,3}, m+m' <= 4, k <= 2", 60.0, [] {
    Outcome o;
    for (int n : {2, 3}) gate(o, "laplace", n, 4, {"laplace.commutator_with_radius", "laplace.commutator_on_bidegree"});
    return o;
  }});

  cs.push_back({3, "component relations, q-Weyl, Euler operators, both Laplacian forms; degree <= 3, n in {2,3}", 60.0,
                [] {
                  Outcome o;
                  for (int n : {2, 3}) {
                    const VerifyReport r = verify::run_suite("relations", n, 3);
                    for (const auto& c : r.checks) {
                      // R-matrix and Phi forms are proof machinery, reported by the suite but not gated here
                      const bool machinery =
                          c.id.rfind("relations.rmatrix_", 0) == 0 || c.id.rfind("relations.phi_", 0) == 0;
                      if (machinery) {
                        if (!c.passed) o.notes.push_back(json{{"n", n}, {"not_gated", c.id}});
                        continue;
                      }
                      if (!c.passed) o.fail(json{{"n", n}, {"check", c.id}, {"counterexample", c.counterexample}});
                    }
                  }
                  return o;
                }});

  cs.push_back({4, "q-shifted product identities for z_i^k w_i^k and w_i^k z_i^k, n <= 3, i <= n, k <= 3", std::nullopt,
                [] {
                  Outcome o;
                  for (int n = 1; n <= 3; ++n) gate(o, "laplace", n, 3, {"laplace.radius_product_identities"});
                  return o;
                }});

  cs.push_back({5, "kernel rank of Delta_q = dimension formula = projector rank, n in {2,3}, m+m' <= 4", 120.0, [] {
    Outcome o;
    for (int n : {2, 3}) gate(o, "harmonics", n, 4, {"harmonics.dimension"});
    const std::size_t k211 = laplace_kernel_dim(2, 1, 1), k321 = laplace_kernel_dim(3, 2, 1);
    if (k211 != 3 || dim_harmonic(2, 1, 1) != 3)
      o.fail(json{{"check", "dim H_{1,1} at n=2"}, {"kernel", k211}, {"formula", dim_harmonic(2, 1, 1)}});
    if (k321 != 15 || dim_harmonic(3, 2, 1) != 15)
      o.fail(json{{"check", "dim H_{2,1} at n=3"}, {"kernel", k321}, {"formula", dim_harmonic(3, 2, 1)}});
    return o;
  }});

  cs.push_back({6, "projector laws and gl_n equivariance, n in {2,3}, m+m' <= 4", std::nullopt, [] {
    Outcome o;
    for (int n : {2, 3})
      gate(o, "harmonics", n, 4,
           {"harmonics.projector_idempotent", "harmonics.projector_harmonic", "harmonics.projector_kills_radius",
            "harmonics.projector_gl_equivariant"});
    return o;
  }});

  cs.push_back({7, "zonal closed form and series forms equal the projection, n in {2,3}, m, m' <= 2", std::nullopt, [] {
    Outcome o;
    for (int n : {2, 3})
      gate(o, "harmonics", n, 4,
           {"harmonics.zonal_closed_form", "harmonics.zonal_radial_sum", "harmonics.zonal_series_times_constant",
            "harmonics.zonal_double_sum"});
    const NCPoly z1w1 = NCPoly::z(2, 1) * NCPoly::w(2, 1), z2w2 = NCPoly::z(2, 2) * NCPoly::w(2, 2);
    const NCPoly want = (ScalarQ(1) + q(2)).inverse() * (z2w2 - q(2) * z1w1);
    expect_poly(o, "project(z2 w2) at n=2", project(z2w2), want);
    expect_poly(o, "zonal(2,1,1)", zonal(2, 1, 1), want);
    return o;
  }});

  cs.push_back({8, "associated factor reproduces the projection, both branches agree, n=3, m+m' <= 3", std::nullopt, [] {
    Outcome o;
    gate(o, "harmonics", 3, 3, {"harmonics.assoc_factor_projection", "harmonics.assoc_factor_branches_agree"});
    return o;
  }});

  cs.push_back({9, "Xi basis: count, harmonicity, diagonal Gram matrix, norms, positivity at 7/10, n in {2,3}, m+m' <= 3",
                300.0, [] {
                  Outcome o;
                  for (int n : {2, 3}) {
                    gate(o, "harmonics", n, 3, {"harmonics.xi_basis"});
                    gate(o, "sphere", n, 3, {"sphere.xi_gram_diagonal", "sphere.xi_gram_norms", "sphere.xi_gram_positive"});
                  }
                  return o;
                }});

  cs.push_back({10, "dual pair: U_q(sl_2) relations for omega on A_{m,m'} and the ladder actions, r <= 3, n in {2,3}",
                std::nullopt, [] {
                  Outcome o;
                  for (int n : {2, 3})
                    gate(o, "dualpair", n, 3,
                         {"dualpair.omega_generators", "dualpair.sl2_relations", "dualpair.omega_commutes_with_gl",
                          "dualpair.radial_actions", "dualpair.ladder_actions"});
                  return o;
                }});

  cs.push_back({11, "monomial formula for h equals the Jackson integral, degree <= 3, n in {2,3}", std::nullopt, [] {
    Outcome o;
    for (int n : {2, 3}) gate(o, "sphere", n, 3, {"sphere.h_dual_oracle"});
    expect_scalar(o, "h(w1 z1) at n=2", h_functional(NCPoly::w(2, 1) * NCPoly::z(2, 1)), (ScalarQ(1) + q(2)).inverse());
    return o;
  }});

  cs.push_back({12, "harmonics of different bidegrees are orthogonal, m+m' <= 3, r+r' <= 3", std::nullopt, [] {
    Outcome o;
    for (int n : {2, 3}) gate(o, "sphere", n, 3, {"sphere.bidegree_orthogonality"});
    return o;
  }});

  cs.push_back({13, "split projection forms, the split Laplacian identities and the t-factor commutation rules, n=3, p in {1,2}, u <= 2", std::nullopt,
                [] {
                  Outcome o;
                  gate(o, "harmonics", 3, 3, {"harmonics.separated_laplacian"});
                  gate(o, "splitx", 3, 3,
                       {"splitx.laplace_y_plus_t", "splitx.laplace_t_two_forms", "splitx.laplace_hat_y_plus_t",
                        "splitx.laplace_y_difference", "splitx.t_space_killed_by_y_derivatives",
                        "splitx.t_space_laplace_t", "splitx.t_space_harmonic", "splitx.hat_laplace_y_past_t_factor",
                        "splitx.laplace_on_split_input", "splitx.laplace_on_split_input_lowering",
                        "splitx.projection_sum_form", "splitx.projection_hypergeometric_form",
                        "splitx.projection_little_q_jacobi_form", "splitx.projection_on_sphere",
                        "splitx.projection_u_zero"});
                  gate(o, "splitx", 2, 3, {"splitx.rank_two_example"});
                  const VerifyReport r = verify::run_suite("splitx", 3, 3);
                  for (const char* id :
                       {"splitx.laplace_y_difference_implied_sign", "splitx.hat_laplace_y_past_t_factor_reversed_exponent"})
                    if (const auto* c = r.find(id)) o.notes.push_back(json{{"corrected_form", id}, {"passed", c->passed}});
                  return o;
                }});

  cs.push_back({14, "e/f entries on the orthonormal Xi basis at q0 = 7/10 match A/B within 1e-10, or the discrepancy is localized to one bracket of B",
                std::nullopt, [] {
                  Outcome o;
                  const VerifyReport r = verify::run_suite("rep", 3, 2);
                  const auto* entries = r.find("rep.ef_entries_as_printed");
                  if (!entries) {
                    o.fail(json{{"check", "rep.ef_entries_as_printed"}, {"reason", "not in report"}});
                    return o;
                  }
                  if (entries->passed) return o;
                  const json& cex = entries->counterexample;
                  const bool localized = cex.contains("localized_to_B") && cex["localized_to_B"].get<bool>();
                  if (localized)
                    o.notes.push_back(json{{"discrepancy_report", cex}});
                  else
                    o.fail(json{{"check", "rep.ef_entries_as_printed"}, {"discrepancy_report", cex}});
                  for (const char* id : {"rep.ef_products_exact", "rep.ef_entries_rescaled", "rep.b_bracket_as_printed"})
                    if (const auto* c = r.find(id)) o.notes.push_back(json{{"related", id}, {"passed", c->passed}});
                  return o;
                }});

  cs.push_back({15, "bidegree decomposition into min(m,m')+1 blocks and invariant dimensions by exact kernels, n in {2,3}, m+m' <= 3",
                std::nullopt, [] {
                  Outcome o;
                  for (int n : {2, 3})
                    gate(o, "rep", n, 3,
                         {"rep.bidegree_decomposition", "rep.gl_n_invariants", "rep.gl_n_minus_1_invariants"});
                  return o;
                }});
  return cs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 15));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(json{{"exception", e.what()}});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds && secs > *c.limit_seconds)
      o.fail(json{{"runtime_seconds", secs}, {"limit_seconds", *c.limit_seconds}});
    all_pass = all_pass && o.pass;

    std::ostringstream line;
    line << "criterion " << std::setw(2) << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
         << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit_seconds) line << ", limit " << std::setprecision(0) << *c.limit_seconds << " s";
    line << ")";
    std::cout << line.str() << std::endl;
    if (!o.pass) std::cerr << "criterion " << c.number << " failures: " << o.failures.dump(2) << "\n";
    if (!o.notes.empty()) std::cerr << "criterion " << c.number << " notes: " << o.notes.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}
