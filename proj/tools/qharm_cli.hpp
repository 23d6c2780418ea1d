// Command-line front end: subcommands over the library with JSON I/O.
// Exit codes: 0 success, 1 verification failure, 2 input error.
#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qharm/io.hpp"
#include "qharm/numeric.hpp"
#include "qharm/sphere.hpp"
#include "qharm/verify.hpp"

namespace qharm::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// Coefficients evaluated at q = q0 (exact rationals).
inline NCPoly eval_poly(const NCPoly& p, const mpq_class& q0) {
  NCPoly r(p.n(), p.order());
  for (const auto& [mono, c] : p.terms()) r.add_term(mono, ScalarQ(c.eval_q(q0)));
  return r;
}

/// The harmonic projection with q specialized to q0 before every step:
/// sum_k alpha_k(q0) Q^k (Delta at q0)^k p, bidegree by bidegree.
inline NCPoly project_at(const NCPoly& p_in, const mpq_class& q0) {
  const NCPoly p = eval_poly(p_in, q0).to_order(Order::ZFirst);
  const int n = p.n();
  const NCPoly Q = eval_poly(q_radius(n), q0);
  NCPoly out(n);
  for (const auto& [m, mp] : p.bidegrees()) {
    NCPoly d = p.bidegree_component(m, mp);
    out += d;
    NCPoly qk = NCPoly::constant(n, ScalarQ(1));
    for (int k = 1; k <= std::min(m, mp); ++k) {
      d = eval_poly(ops::laplace(n).apply(d), q0);
      qk = eval_poly(qk * Q, q0);
      out += ScalarQ(alpha_coeff(n, m, mp, k).eval_q(q0)) * eval_poly(qk * d, q0);
    }
  }
  return out;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline NCPoly read_poly(const std::string& path) {
  try {
    return parse_poly_json(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Output {
  std::ostream& out;
  std::string path;

  void structure(const json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }
};

struct ScalarFormat {
  std::string q0_text;
  bool decimal = false;
  int digits = 20;

  std::optional<mpq_class> q0() const {
    if (q0_text.empty()) return std::nullopt;
    try {
      const mpq_class v = parse_rational(q0_text);
      if (v <= 0 || v >= 1) throw InputError("--q0 must lie in (0, 1)");
      return v;
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--q0: ") + e.what());
    }
  }

  std::string render(const ScalarQ& x) const {
    const auto point = q0();
    if (decimal) {
      if (!point) throw InputError("--decimal needs --q0");
      return to_decimal(NumericPoint(*point).eval(x), digits);
    }
    if (!point) return x.to_string();
    try {
      return x.eval_q(*point).get_str();
    } catch (const std::exception&) {
      throw InputError("value " + x.to_string() + " is not rational at q0 = " + q0_text + "; pass --decimal");
    }
  }
};

}  // namespace detail

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-harmonic polynomials on the quantum complex sphere"};
  app.require_subcommand(1);

  int n = 2, m = 0, mp = 0, p = 1, r = 0, rp = 0, s = 0, sp = 0, max_degree = 3;
  std::size_t t_element = 0, y_element = 0;
  std::string in, in2, out_path, suite, report_path, scalar_text;
  bool orthonormal = false;
  detail::ScalarFormat fmt;

  auto add_nmm = [&](CLI::App* c) {
    c->add_option("--n", n, "rank n")->required()->check(CLI::Range(1, kMaxRank));
    c->add_option("--m", m, "z-degree m")->required()->check(CLI::NonNegativeNumber);
    c->add_option("--mprime", mp, "w-degree m'")->required()->check(CLI::NonNegativeNumber);
  };
  auto add_scalar_format = [&](CLI::App* c) {
    c->add_option("--q0", fmt.q0_text, "evaluate at the rational q0 in (0,1)");
    c->add_flag("--decimal", fmt.decimal, "decimal output (needs --q0)");
    c->add_option("--digits", fmt.digits, "significant digits of decimal output")->check(CLI::Range(1, 60));
  };

  auto* c_laplace = app.add_subcommand("laplace", "apply Delta_q to a polynomial");
  c_laplace->add_option("--in", in, "polynomial JSON")->required();
  c_laplace->add_option("--out", out_path, "output file (default stdout)");

  auto* c_project = app.add_subcommand("project", "harmonic projection of a homogeneous polynomial");
  c_project->add_option("--in", in, "polynomial JSON")->required();
  c_project->add_option("--out", out_path, "output file (default stdout)");
  c_project->add_option("--q0", fmt.q0_text, "project with q specialized to q0 (exact rationals)");

  auto* c_zonal = app.add_subcommand("zonal", "zonal polynomial in H_{m,m'}");
  add_nmm(c_zonal);
  c_zonal->add_option("--out", out_path, "output file (default stdout)");

  auto* c_basis = app.add_subcommand("basis", "Xi basis of H_{m,m'} with squared norms");
  add_nmm(c_basis);
  c_basis->add_flag("--orthonormal", orthonormal, "add the normalizing factors 1/sqrt(norm2) at --q0");
  c_basis->add_option("--q0", fmt.q0_text, "evaluation point for --orthonormal");
  c_basis->add_option("--digits", fmt.digits, "significant digits")->check(CLI::Range(1, 60));
  c_basis->add_option("--out", out_path, "output file (default stdout)");

  auto* c_dim = app.add_subcommand("dim", "dimension of H_{m,m'}");
  add_nmm(c_dim);

  auto* c_gram = app.add_subcommand("gram", "Gram matrix of the Xi basis");
  add_nmm(c_gram);
  add_scalar_format(c_gram);  // --q0 adds "q" and "gram_num"
  c_gram->add_option("--out", out_path, "output file (default stdout)");

  auto* c_inner = app.add_subcommand("inner", "scalar product <a, b> = h(a b*)");
  c_inner->add_option("--in", in, "polynomial a")->required();
  c_inner->add_option("--in2", in2, "polynomial b")->required();
  add_scalar_format(c_inner);

  auto* c_restrict = app.add_subcommand("restrict", "harmonic representative on the sphere");
  c_restrict->add_option("--in", in, "polynomial JSON")->required();
  c_restrict->add_option("--out", out_path, "output file (default stdout)");

  auto* c_split = app.add_subcommand("split-project", "projection of Q_y^u h_t h_y via the little q-Jacobi form");
  c_split->add_option("--n", n, "rank n")->required()->check(CLI::Range(2, kMaxRank));
  c_split->add_option("--p", p, "split point 1 <= p <= n-1")->required();
  c_split->add_option("--m", m, "z-degree m")->required()->check(CLI::NonNegativeNumber);
  c_split->add_option("--mprime", mp, "w-degree m'")->required()->check(CLI::NonNegativeNumber);
  c_split->add_option("--r", r, "z-degree of h_y")->check(CLI::NonNegativeNumber);
  c_split->add_option("--rprime", rp, "w-degree of h_y")->check(CLI::NonNegativeNumber);
  c_split->add_option("--s", s, "z-degree of h_t")->check(CLI::NonNegativeNumber);
  c_split->add_option("--sprime", sp, "w-degree of h_t")->check(CLI::NonNegativeNumber);
  c_split->add_option("--t-element", t_element, "index into the basis of tilde-H^(t)_{s,s'}");
  c_split->add_option("--y-element", y_element, "index into the basis of H^(y)_{r,r'}");
  c_split->add_option("--out", out_path, "output file (default stdout)");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", suite, "relations|laplace|harmonics|dualpair|sphere|rep|splitx")->required();
  c_verify->add_option("--n", n, "rank n")->required();
  c_verify->add_option("--max-degree", max_degree, "largest total degree")->required();
  c_verify->add_option("--report", report_path, "report JSON file (default stdout)");

  auto* c_eval = app.add_subcommand("eval", "substitute q = q0 in a polynomial or a scalar");
  auto* eval_in = c_eval->add_option("--in", in, "polynomial JSON");
  c_eval->add_option("--scalar", scalar_text, "scalar expression in q or v")->excludes(eval_in);
  c_eval->add_option("--q0", fmt.q0_text, "rational q0 in (0,1)")->required();
  c_eval->add_flag("--decimal", fmt.decimal, "decimal output");
  c_eval->add_option("--digits", fmt.digits, "significant digits")->check(CLI::Range(1, 60));
  c_eval->add_option("--out", out_path, "output file (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const detail::Output sink{out, out_path};
  try {
    if (c_laplace->parsed()) {
      const NCPoly x = detail::read_poly(in);
      sink.structure(poly_to_json(ops::laplace(x.n()).apply(x)));
    } else if (c_project->parsed()) {
      const NCPoly x = detail::read_poly(in);
      if (!x.is_zero() && x.bidegrees().size() != 1) throw InputError(in + ": project needs a homogeneous polynomial");
      if (auto q0 = fmt.q0()) {
        json j = poly_to_json(project_at(x, *q0));
        j["q0"] = q0->get_str();
        sink.structure(j);
      } else {
        sink.structure(poly_to_json(project(x)));
      }
    } else if (c_zonal->parsed()) {
      if (n < 2) throw InputError("zonal needs n >= 2");
      sink.structure(poly_to_json(zonal(n, m, mp)));
    } else if (c_basis->parsed()) {
      if (n < 2) throw InputError("basis needs n >= 2");
      json j = basis_to_json(n, m, mp);
      if (orthonormal) {
        const auto q0 = fmt.q0();
        if (!q0) throw InputError("--orthonormal needs --q0");
        const NumericPoint at(*q0);
        for (auto& e : j) {
          const ScalarQ norm2 = parse_scalar(e["norm2"].get<std::string>());
          e["normalizer"] = to_decimal(1 / at.sqrt_positive(norm2), fmt.digits);
        }
      }
      sink.structure(j);
    } else if (c_dim->parsed()) {
      out << dim_harmonic(n, m, mp) << "\n";
    } else if (c_gram->parsed()) {
      if (n < 2) throw InputError("gram needs n >= 2");
      std::vector<NCPoly> els;
      json labels = json::array();
      for (const auto& [l, x] : xi_basis(n, m, mp)) {
        els.push_back(x);
        labels.push_back(label_to_json(l));
      }
      const Matrix g = gram_matrix(els);
      auto rows = [&](auto render) {
        json out = json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
          json row = json::array();
          for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(render(g.at(i, k)));
          out.push_back(row);
        }
        return out;
      };
      json j{{"basis", labels}, {"gram", rows([](const ScalarQ& x) { return x.to_string(); })}};
      if (const auto q0 = fmt.q0()) {
        j["q"] = q0->get_str();
        j["gram_num"] = rows([&](const ScalarQ& x) { return fmt.render(x); });
      }
      sink.structure(j);
    } else if (c_inner->parsed()) {
      const NCPoly a = detail::read_poly(in), b = detail::read_poly(in2);
      if (a.n() != b.n()) throw InputError("inner: the two polynomials have different ranks");
      out << fmt.render(inner_product(a, b)) << "\n";
    } else if (c_restrict->parsed()) {
      sink.structure(poly_to_json(restrict_to_sphere(detail::read_poly(in))));
    } else if (c_split->parsed()) {
      const SplitSpec x{n, p, m, mp, r, rp, s, sp};
      x.validate();
      const auto ts = split_t_basis(n, p, s, sp);
      const auto ys = split_y_basis(n, p, r, rp);
      if (t_element >= ts.size())
        throw InputError("--t-element: tilde-H^(t)_{s,s'} has " + std::to_string(ts.size()) + " basis elements");
      if (y_element >= ys.size())
        throw InputError("--y-element: H^(y)_{r,r'} has " + std::to_string(ys.size()) + " basis elements");
      sink.structure(json{{"u", x.u()},
                          {"sigma", x.sigma()},
                          {"h_t", poly_to_json(ts[t_element])},
                          {"h_y", poly_to_json(ys[y_element])},
                          {"projection", poly_to_json(split_project(x, ts[t_element], ys[y_element]))}});
    } else if (c_verify->parsed()) {
      const verify::VerifyReport rep = verify::run_suite(suite, n, max_degree);
      detail::Output{out, report_path}.structure(rep.to_json());
      if (!rep.passed()) {
        err << "verification failed: " << rep.failures().size() << " of " << rep.checks.size() << " checks; report: "
            << (report_path.empty() ? "stdout" : report_path) << "\n";
        return kVerificationFailed;
      }
    } else if (c_eval->parsed()) {
      const auto q0 = fmt.q0();
      if (!scalar_text.empty()) {
        ScalarQ x;
        try {
          x = parse_scalar(scalar_text);
        } catch (const std::exception& e) {
          throw InputError(std::string("--scalar: ") + e.what());
        }
        out << fmt.render(x) << "\n";
      } else {
        if (in.empty()) throw InputError("eval needs --in or --scalar");
        const NCPoly x = detail::read_poly(in);
        json j = poly_to_json(x);
        for (auto& t : j["terms"]) t["coeff"] = fmt.render(parse_scalar(t["coeff"].get<std::string>()));
        j["q0"] = q0->get_str();
        sink.structure(j);
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace qharm::cli
