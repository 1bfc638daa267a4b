// Command-line front end: coefficient tables, measure grids, moments,
// Darboux transforms and the verification suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cheb2d/darboux.hpp"
#include "cheb2d/json_io.hpp"
#include "cheb2d/measures.hpp"
#include "cheb2d/verify.hpp"

using namespace cheb2d;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

struct Flags {
  std::string family = "chebyshev";
  double s11 = 0.0;
  double s10 = 1.0;
  int n = 3;
  int m = 2;
  int nodes = 512;
  double tol = 1e-8;
  double z0 = 0.5;
  int grid = 16;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  bool matrix = false;
  std::vector<std::string> at;
};

struct Output {
  json doc;
  std::string csv;
  int code = kExitOk;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json indexed(const Matrix& a, const char* key, int index) {
  json j = {{key, index}};
  const json body = matrix_to_json(a);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void csv_matrix(std::ostringstream& os, const std::string& table, int n, int m,
                const Matrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      os << table << ',' << n << ',' << m << ',' << i << ',' << j << ','
         << num(a(i, j)) << '\n';
}

std::vector<double> grid_points(int grid) {
  std::vector<double> xs;
  for (int g = 0; g < grid; ++g) xs.push_back(-1.0 + (2.0 * g + 1.0) / grid);
  return xs;
}

json family_json(const DeformationFamily& f) {
  json j = {{"family", f.name()}};
  if (f.tag != FamilyTag::chebyshev) j["s11"] = f.s11;
  if (f.tag == FamilyTag::two_param) j["s10"] = f.s10;
  return j;
}

Output run_coeffs(const DeformationFamily& fam, const Flags& fl) {
  const auto op = jacobi_operator(fam, fl.m);
  Output o;
  o.doc = family_json(fam);
  o.doc["m"] = fl.m;
  o.doc["n"] = fl.n;
  o.doc["tail_index"] = op.tail_index();
  std::ostringstream csv;
  csv << "table,n,m,row,col,value\n";
  json a = json::array(), b = json::array();
  for (int k = 1; k <= fl.n + 1; ++k) {
    a.push_back(indexed(op.A(k), "n", k));
    csv_matrix(csv, "A", k, fl.m, op.A(k));
  }
  for (int k = 0; k <= fl.n; ++k) {
    b.push_back(indexed(op.B(k), "n", k));
    csv_matrix(csv, "B", k, fl.m, op.B(k));
  }
  o.doc["A"] = a;
  o.doc["B"] = b;
  o.doc["y_basis"] = matrix_to_json(op.y_basis());
  json steps = json::array();
  for (int i = 1; i <= fl.n; ++i)
    for (int j = 1; j <= fl.m; ++j) {
      const auto c = lex_step_coefficients(fam, i, j);
      steps.push_back({{"n", i}, {"m", j}, {"K", matrix_to_json(c.K)},
                       {"J1", matrix_to_json(c.J1)}, {"J2", matrix_to_json(c.J2)}});
      csv_matrix(csv, "K", i, j, c.K);
      csv_matrix(csv, "J1", i, j, c.J1);
      csv_matrix(csv, "J2", i, j, c.J2);
    }
  o.doc["lex_steps"] = steps;
  json td = json::array();
  for (int k = 0; k <= fl.n; ++k) {
    const auto t = total_degree_coeffs(fam, k);
    td.push_back({{"n", k}, {"Ax", matrix_to_json(t.Ax)}, {"Ay", matrix_to_json(t.Ay)},
                  {"Bx", matrix_to_json(t.Bx)}, {"By", matrix_to_json(t.By)}});
    csv_matrix(csv, "Ax", k, -1, t.Ax);
    csv_matrix(csv, "Ay", k, -1, t.Ay);
    csv_matrix(csv, "Bx", k, -1, t.Bx);
    csv_matrix(csv, "By", k, -1, t.By);
  }
  o.doc["total_degree"] = td;
  o.csv = csv.str();
  return o;
}

Output run_measure(const DeformationFamily& fam, const Flags& fl) {
  const auto mu = measure_for_family(fam);
  const auto xs = grid_points(fl.grid);
  Output o;
  o.doc = family_json(fam);
  std::ostringstream csv;
  if (fl.matrix) {
    const auto op = jacobi_operator(fam, fl.m);
    o.doc["m"] = fl.m;
    json slices = json::array();
    csv << "x,row,col,slice,jost_weight\n";
    for (double x : xs) {
      const Matrix s = matrix_measure_slice(mu, fl.m, x, fl.nodes);
      json entry = {{"x", x}, {"slice", matrix_to_json(s)}};
      // the Jost weight lives in the y-line basis; bring it to monomials
      const Matrix cinv = op.y_basis().inverse();
      Matrix w = Matrix::Constant(s.rows(), s.cols(), std::nan(""));
      try {
        w = cinv * matrix_weight(op, x) * cinv.transpose();
        entry["jost_weight"] = matrix_to_json(w);
      } catch (const Error& e) {
        entry["jost_weight_error"] = e.what();
      }
      slices.push_back(entry);
      for (Eigen::Index i = 0; i < s.rows(); ++i)
        for (Eigen::Index j = 0; j < s.cols(); ++j)
          csv << num(x) << ',' << i << ',' << j << ',' << num(s(i, j)) << ','
              << num(w(i, j)) << '\n';
    }
    o.doc["slices"] = slices;
  } else {
    Matrix d(xs.size(), xs.size());
    csv << "x,y,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        d(i, j) = mu.ac_density(xs[i], xs[j]);
        csv << num(xs[i]) << ',' << num(xs[j]) << ',' << num(d(i, j)) << '\n';
      }
    o.doc["x"] = xs;
    o.doc["y"] = xs;
    o.doc["density"] = matrix_to_json(d);
    json lines = json::array();
    for (std::size_t l = 0; l < mu.lines.size(); ++l) {
      std::vector<double> vals;
      for (double y : xs) {
        vals.push_back(mu.line_density(l, y));
        csv << num(mu.lines[l].x0) << ',' << num(y) << ',' << num(vals.back()) << '\n';
      }
      lines.push_back({{"x0", mu.lines[l].x0}, {"y", xs}, {"density", vals}});
    }
    o.doc["lines"] = lines;
    if (fam.tag == FamilyTag::two_param)
      o.doc["line_formula_exact"] = two_param_line_formula_exact(fam.s11, fam.s10);
  }
  o.csv = csv.str();
  return o;
}

Output run_moments(const DeformationFamily& fam, const Flags& fl) {
  const Matrix h = moments(measure_for_family(fam), 2 * fl.n, 2 * fl.m, fl.nodes);
  Output o;
  o.doc = family_json(fam);
  o.doc["nodes"] = fl.nodes;
  o.doc["h"] = matrix_to_json(h);
  std::ostringstream csv;
  csv << "i,j,value\n";
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      csv << i << ',' << j << ',' << num(h(i, j)) << '\n';
  o.csv = csv.str();
  return o;
}

Output run_darboux(const DeformationFamily& fam, const Flags& fl) {
  const auto op = jacobi_operator(fam, fl.m);
  const auto cfg = DarbouxConfig::from_z0(fl.z0);
  const auto pair = factor_operators(op, cfg, fl.n);
  const auto hm = hat_measure(op, cfg);
  Output o;
  o.doc = family_json(fam);
  o.doc["m"] = fl.m;
  o.doc["z0"] = cfg.z0;
  o.doc["x0"] = cfg.x0;
  std::ostringstream csv;
  csv << "table,n,m,row,col,value\n";
  json a = json::array(), b = json::array();
  for (int k = 1; k <= fl.n + 1; ++k) {
    a.push_back(indexed(pair.hat.A[k], "n", k));
    csv_matrix(csv, "A_hat", k, fl.m, pair.hat.A[k]);
  }
  for (int k = 0; k <= fl.n; ++k) {
    b.push_back(indexed(pair.hat.B[k], "n", k));
    csv_matrix(csv, "B_hat", k, fl.m, pair.hat.B[k]);
  }
  o.doc["A_hat"] = a;
  o.doc["B_hat"] = b;
  o.doc["mass"] = matrix_to_json(hm.mass);
  o.doc["admissible"] = hm.admissible;
  csv_matrix(csv, "mass", 0, fl.m, hm.mass);

  const auto f = factorization_defects(op, cfg, std::max(fl.n, 10), 20, fl.seed);
  const double ortho = hat_orthonormality_defect(op, cfg, std::min(fl.n, 6), fl.nodes);
  json report = json::object();
  bool ok = true;
  auto add = [&](const char* key, double r, double tol) {
    report[key] = {{"residual", r}, {"tolerance", tol}, {"pass", r <= tol}};
    ok = ok && r <= tol;
  };
  add("PQ", f.pq, 1e-11);
  add("QP", f.qp, 1e-11);
  add("tail", f.tail, 1e-12);
  add("hat_orthonormality", ortho, 1e-7);
  o.doc["report"] = report;
  o.doc["pass"] = ok;
  o.code = ok ? kExitOk : kExitVerification;
  o.csv = csv.str();
  return o;
}

Output run_verify(const DeformationFamily& fam, const Flags& fl) {
  VerifyOptions vo;
  vo.n = fl.n;
  vo.m = fl.m;
  vo.nodes = fl.nodes;
  vo.tol = fl.tol;
  vo.seed = fl.seed;
  const auto rep = run_verification(fam, vo);
  Output o;
  o.doc = report_to_json(rep);
  std::ostringstream csv;
  csv << "identity,residual,tolerance,pass,skipped\n";
  for (const auto& c : rep.checks)
    csv << c.name << ',' << num(c.residual) << ',' << num(c.tolerance) << ','
        << (c.pass ? "true" : "false") << ',' << (c.skipped ? "true" : "false") << '\n';
  o.csv = csv.str();
  o.code = rep.pass() ? kExitOk : kExitVerification;
  return o;
}

std::vector<std::pair<double, double>> parse_points(const Flags& fl) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : fl.at) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--at", "expected X,Y");
    try {
      pts.emplace_back(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--at", "expected X,Y");
    }
  }
  if (pts.empty())
    for (double x : grid_points(fl.grid))
      for (double y : grid_points(fl.grid)) pts.emplace_back(x, y);
  return pts;
}

Output run_eval(const DeformationFamily& fam, const Flags& fl,
                const std::vector<std::pair<double, double>>& pts) {
  const auto op = jacobi_operator(fam, fl.m);
  Output o;
  o.doc = family_json(fam);
  o.doc["n"] = fl.n;
  o.doc["m"] = fl.m;
  json values = json::array();
  std::ostringstream csv;
  csv << "x,y,component,value\n";
  for (const auto& [x, y] : pts) {
    const auto v = eval_vector_poly(op, fl.n, x, y);
    values.push_back({{"x", x}, {"y", y},
                      {"value", std::vector<double>(v.value.data(), v.value.data() + v.value.size())}});
    for (Eigen::Index l = 0; l < v.value.size(); ++l)
      csv << num(x) << ',' << num(y) << ',' << l << ',' << num(v.value(l)) << '\n';
  }
  o.doc["points"] = values;
  o.csv = csv.str();
  return o;
}

void add_common(CLI::App* sub, Flags& fl) {
  sub->add_option("--family", fl.family, "chebyshev | one-param | two-param")
      ->check(CLI::IsMember({"chebyshev", "one-param", "two-param", "one_param", "two_param"}));
  sub->add_option("--s11", fl.s11, "coupling parameter, 0 < |s11| < 1");
  sub->add_option("--s10", fl.s10, "two-param shift, |s10| > 1/2");
  sub->add_option("--n", fl.n, "degree in x")->check(CLI::NonNegativeNumber);
  sub->add_option("--m", fl.m, "degree in y")->check(CLI::NonNegativeNumber);
  sub->add_option("--nodes", fl.nodes, "quadrature nodes per axis")->check(CLI::PositiveNumber);
  sub->add_option("--tol", fl.tol, "tolerance for quadrature-based checks")->check(CLI::PositiveNumber);
  sub->add_option("--z0", fl.z0, "Darboux parameter, 0 < |z0| < 1");
  sub->add_option("--grid", fl.grid, "grid points per axis")->check(CLI::PositiveNumber);
  sub->add_option("--seed", fl.seed, "seed for sample points");
  sub->add_option("--format", fl.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", fl.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivariate deformations of the Chebyshev polynomials"};
  app.require_subcommand(1);
  Flags fl;
  auto* coeffs = app.add_subcommand("coeffs", "recurrence, lex-step and total-degree tables");
  auto* measure = app.add_subcommand("measure", "density grid, or matrix slices with --matrix");
  auto* moments_cmd = app.add_subcommand("moments", "moment table h(i, j), i <= 2n, j <= 2m");
  auto* darboux = app.add_subcommand("darboux", "mass-point transform and its report");
  auto* verify = app.add_subcommand("verify", "identity and orthonormality suite");
  auto* eval = app.add_subcommand("eval", "vector polynomial P_{n,m} at points");
  for (auto* s : {coeffs, measure, moments_cmd, darboux, verify, eval}) add_common(s, fl);
  measure->add_flag("--matrix", fl.matrix, "emit (m+1)x(m+1) slices instead of the grid");
  eval->add_option("--at", fl.at, "evaluation point X,Y (repeatable); default is the grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  Output out;
  try {
    const auto fam = DeformationFamily::parse(fl.family, fl.s11, fl.s10);
    fam.validate();
    if (*coeffs) out = run_coeffs(fam, fl);
    else if (*measure) out = run_measure(fam, fl);
    else if (*moments_cmd) out = run_moments(fam, fl);
    else if (*darboux) out = run_darboux(fam, fl);
    else if (*verify) out = run_verify(fam, fl);
    else out = run_eval(fam, fl, parse_points(fl));
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  const std::string text = fl.format == "csv" ? out.csv : dump_json(out.doc);
  if (fl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(fl.out);
    if (!f) {
      std::cerr << "error: cannot write " << fl.out << "\n";
      return kExitValidation;
    }
    f << text;
  }
  return out.code;
}
