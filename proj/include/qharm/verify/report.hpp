// Verification reports, operator fixtures and the shared comparison
// helpers used by every suite.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qharm/io.hpp"
#include "qharm/operators.hpp"

namespace qharm::verify {

struct CheckResult {
  std::string id;
  std::string anchor;  // what is being checked, in words
  json params;
  bool passed = true;
  json counterexample;  // null when the check passed
};

struct VerifyReport {
  std::string suite;
  json params;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  std::vector<const CheckResult*> failures() const {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(&c);
    return out;
  }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : checks)
      cs.push_back(json{{"id", c.id},
                        {"anchor", c.anchor},
                        {"params", c.params},
                        {"status", c.passed ? "pass" : "fail"},
                        {"counterexample", c.counterexample}});
    return json{{"suite", suite}, {"params", params}, {"checks", cs}};
  }
};

/// The operators a suite is built from. Tests swap in perturbed versions
/// to confirm that the suite notices.
struct OperatorSet {
  std::function<LinearOp(int)> laplace = [](int n) { return ops::laplace(n); };
  std::function<LinearOp(int, int)> partial = [](int n, int i) { return ops::partial(n, i); };
  std::function<LinearOp(int, int)> bar_partial = [](int n, int i) { return ops::bar_partial(n, i); };
};

inline json monomial_to_json(const Monomial& m, int n) {
  return json{{"z", exps_to_json(m.z, n)}, {"w", exps_to_json(m.w, n)},
              {"text", NCPoly::monomial(n, m).to_string()}};
}

/// All z-first monomials with m + m' <= max_degree.
inline std::vector<Monomial> monomials_up_to(int n, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int m = d; m >= 0; --m)
      for (const auto& mono : monomial_basis(n, m, d - m)) out.push_back(mono);
  return out;
}

inline std::vector<Monomial> bidegree_monomials(int n, int m, int mp) { return monomial_basis(n, m, mp); }

/// First monomial on which the two operators differ, with both sides.
inline std::optional<json> compare_ops(const LinearOp& lhs, const LinearOp& rhs, const std::vector<Monomial>& domain) {
  for (const auto& mono : domain) {
    const NCPoly x = NCPoly::monomial(lhs.n(), mono);
    const NCPoly a = lhs.apply(x).to_order(Order::ZFirst);
    const NCPoly b = rhs.apply(x).to_order(Order::ZFirst);
    if (!(a == b))
      return json{{"monomial", monomial_to_json(mono, lhs.n())}, {"lhs", a.to_string()}, {"rhs", b.to_string()}};
  }
  return std::nullopt;
}

inline std::optional<json> compare_polys(const NCPoly& a, const NCPoly& b, json context = json::object()) {
  if (a.to_order(Order::ZFirst) == b.to_order(Order::ZFirst)) return std::nullopt;
  context["lhs"] = a.to_string();
  context["rhs"] = b.to_string();
  return context;
}

inline std::optional<json> compare_scalars(const ScalarQ& a, const ScalarQ& b, json context = json::object()) {
  if (a == b) return std::nullopt;
  context["lhs"] = a.to_string();
  context["rhs"] = b.to_string();
  return context;
}

/// Sum of c_k op_k; the zero operator when empty.
inline LinearOp op_sum(int n, const std::vector<std::pair<ScalarQ, LinearOp>>& terms) {
  std::optional<LinearOp> r;
  for (const auto& [c, op] : terms) {
    if (c.is_zero()) continue;
    LinearOp t = c.is_one() ? op : c * op;
    r = r ? *r + t : t;
  }
  return r ? *r : LinearOp::zero(n);
}

/// One instance of an operator identity: parameters plus both sides.
struct Instance {
  json params;
  LinearOp lhs, rhs;
};

/// Collects checks for one suite.
class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, json params) {
    report_.suite = std::move(suite);
    report_.params = std::move(params);
  }

  void check(std::string id, std::string anchor, json params, std::optional<json> counterexample) {
    CheckResult c{std::move(id), std::move(anchor), std::move(params), !counterexample.has_value(), nullptr};
    if (counterexample) c.counterexample = std::move(*counterexample);
    report_.checks.push_back(std::move(c));
  }

  /// Every instance must agree on every monomial of the domain.
  void identities(std::string id, std::string anchor, const std::vector<Instance>& instances,
                  const std::vector<Monomial>& domain, json params = json::object()) {
    params["instances"] = instances.size();
    params["domain_size"] = domain.size();
    std::optional<json> cex;
    for (const auto& inst : instances) {
      if (auto c = compare_ops(inst.lhs, inst.rhs, domain)) {
        (*c)["instance"] = inst.params;
        cex = std::move(c);
        break;
      }
    }
    check(std::move(id), std::move(anchor), std::move(params), std::move(cex));
  }

  /// A negative control passes when the perturbation was detected.
  void control(std::string id, std::string anchor, json params, std::optional<json> detected) {
    if (detected) {
      params["detected"] = *detected;
      check(std::move(id), std::move(anchor), std::move(params), std::nullopt);
    } else {
      check(std::move(id), std::move(anchor), std::move(params),
            json{{"reason", "the perturbed fixture was not detected"}});
    }
  }

  VerifyReport finish() { return std::move(report_); }

 private:
  VerifyReport report_;
};

inline json suite_params(int n, int max_degree) { return json{{"n", n}, {"max_degree", max_degree}}; }

/// Rejects sizes outside n <= 4, max_degree <= 5 with a size estimate.
inline void feasibility_guard(const std::string& suite, int n, int max_degree) {
  if (n < 1 || max_degree < 0) throw std::invalid_argument(suite + ": need n >= 1 and max_degree >= 0");
  if (n <= 4 && max_degree <= 5) return;
  const int capped_n = std::min(n, kMaxRank);
  std::size_t monos = 0, largest = 0;
  for (int d = 0; d <= std::min(max_degree, 40); ++d)
    for (int m = 0; m <= d; ++m) {
      const std::size_t dim = bidegree_dimension(capped_n, m, d - m);
      monos += dim;
      largest = std::max(largest, dim);
    }
  throw std::invalid_argument(suite + ": n = " + std::to_string(n) + ", max_degree = " + std::to_string(max_degree) +
                              " is outside the supported range n <= 4, max_degree <= 5 (estimated " +
                              std::to_string(monos) + " monomials, largest bidegree block " + std::to_string(largest) +
                              " so exact rank computations need about " + std::to_string(largest * largest * largest) +
                              " field operations)");
}

}  // namespace qharm::verify
