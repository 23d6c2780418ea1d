// Batch verification: run one named suite at (n, max_degree).
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qharm/verify/dualpair.hpp"
#include "qharm/verify/harmonics.hpp"
#include "qharm/verify/laplace.hpp"
#include "qharm/verify/relations.hpp"
#include "qharm/verify/rep.hpp"
#include "qharm/verify/report.hpp"
#include "qharm/verify/sphere.hpp"
#include "qharm/verify/splitx.hpp"

namespace qharm::verify {

inline constexpr std::array<std::string_view, 7> kSuites = {"relations", "laplace",  "harmonics", "dualpair",
                                                            "sphere",    "rep",      "splitx"};

/// `fx` replaces Delta_q, d_i, bar_d_i in the suites that take operator
/// fixtures (relations, laplace, dualpair).
inline VerifyReport run_suite(const std::string& name, int n, int max_degree, const OperatorSet& fx = {}) {
  feasibility_guard(name, n, max_degree);
  if (name == "relations") return relations_suite(n, max_degree, fx);
  if (name == "laplace") return laplace_suite(n, max_degree, fx);
  if (name == "harmonics") return harmonics_suite(n, max_degree);
  if (name == "dualpair") return dualpair_suite(n, max_degree, fx);
  if (name == "sphere") return sphere_suite(n, max_degree);
  if (name == "rep") return rep_suite(n, max_degree);
  if (name == "splitx") return splitx_suite(n, max_degree);
  std::string known;
  for (auto s : kSuites) known += (known.empty() ? "" : ", ") + std::string(s);
  throw std::invalid_argument("unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace qharm::verify
