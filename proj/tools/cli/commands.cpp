// Copyright 2026 The kernelframe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "checks.hpp"
#include "kernelframe/kernelframe.hpp"

namespace kernelframe::cli {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::kValidation, msg); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const json& need(const json& p, const char* key) {
  if (!p.contains(key) || p.at(key).is_null()) invalid(std::string("missing required option --") + key);
  return p.at(key);
}

std::size_t count(const json& p, const char* key) {
  const json& v = need(p, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    invalid(std::string("--") + key + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

frames::VectorFamily load_family(const json& p) {
  const bool has_input = p.contains("input") && !p.at("input").is_null();
  const bool has_family = p.contains("family") && !p.at("family").is_null();
  if (has_input == has_family) invalid("give exactly one of --input and --family");
  if (has_family) return io::family_from_json(p.at("family"));
  const std::string path = p.at("input").get<std::string>();
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return io::family_from_csv(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid("'" + path + "' is not valid JSON: " + e.what());
  }
  return io::family_from_json(j);
}

rkhs::Point point_from_json(const json& j) {
  // [re, im] is a scalar point; an array of [re, im] pairs is a vector point.
  if (j.is_array() && !j.empty() && j.at(0).is_array()) return io::vector_from_json(j);
  return rkhs::scalar_point(io::complex_from_json(j));
}

std::vector<rkhs::Point> points_from_json(const json& j) {
  if (!j.is_array() || j.empty()) invalid("--points must be a non-empty array");
  std::vector<rkhs::Point> out;
  for (const auto& e : j) out.push_back(point_from_json(e));
  return out;
}

json point_to_json(const rkhs::Point& p) {
  return p.size() == 1 ? io::to_json(p(0)) : io::to_json(CVector(p));
}

// Seeded samples from the kernel's domain.
std::vector<rkhs::Point> random_points(const rkhs::Domain& d, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g;
  std::vector<rkhs::Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    switch (d.kind) {
      case rkhs::Domain::Kind::kDisk:
        out.push_back(rkhs::scalar_point(std::polar(0.99 * std::sqrt(u(gen)), 2.0 * kPi * u(gen))));
        break;
      case rkhs::Domain::Kind::kInterval:
        out.push_back(rkhs::scalar_point(d.lo + (d.hi - d.lo) * u(gen)));
        break;
      case rkhs::Domain::Kind::kRealLine:
        out.push_back(rkhs::scalar_point(4.0 * g(gen)));
        break;
      case rkhs::Domain::Kind::kComplexVector: {
        rkhs::Point p(static_cast<Eigen::Index>(d.dim));
        for (Eigen::Index k = 0; k < p.size(); ++k) p(k) = Complex{g(gen), g(gen)};
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

Output kernel_eval(const json& p, const Settings&) {
  const auto k = io::kernel_from_json(need(p, "kernel"));
  const auto y = point_from_json(need(p, "y"));
  const auto z = point_from_json(need(p, "z"));
  return {{{"kernel", io::to_json(k)}, {"value", io::to_json(k(y, z))}}};
}

Output kernel_psd(const json& p, const Settings& s) {
  const auto k = io::kernel_from_json(need(p, "kernel"));
  const bool has_points = p.contains("points") && !p.at("points").is_null();
  const bool has_random = p.contains("random") && !p.at("random").is_null();
  if (has_points == has_random) invalid("give exactly one of --points and --random");
  const auto pts = has_points ? points_from_json(p.at("points")) : random_points(k.domain(), count(p, "random"), s.seed);
  const CMatrix m = rkhs::sample_matrix(k, pts);
  json jp = json::array();
  for (const auto& pt : pts) jp.push_back(point_to_json(pt));
  Output out{{{"kernel", io::to_json(k)}, {"points", jp}, {"matrix", io::to_json(m)},
              {"report", io::to_json(rkhs::psd_check(k, pts))}}};
  out.csv = io::matrix_to_csv(m);
  return out;
}

Output frame_analyze(const json& p, const Settings& s) {
  const auto fam = load_family(p);
  const auto t = frames::frame_transforms(fam);
  const auto bounds = frames::frame_bounds(fam, s.tol);
  json result{{"family", io::to_json(fam)},
              {"frame_operator", io::to_json(t.frame_op)},
              {"bounds", io::to_json(bounds)}};
  if (bounds.is_frame) {
    result["dual"] = io::to_json(frames::canonical_dual(fam));
    result["kernel_matrix"] = io::to_json(frames::kernel_matrix(fam));
  }
  Output out{result};
  out.csv = io::matrix_to_csv(t.frame_op);
  return out;
}

Output frame_dual(const json& p, const Settings&) {
  const auto dual = frames::canonical_dual(load_family(p));
  Output out{{{"dual", io::to_json(dual)}}};
  out.csv = io::family_to_csv(dual);
  return out;
}

Output frame_gramian(const json& p, const Settings& s) {
  const auto g = frames::gramian(load_family(p), s.tol);
  Output out{{{"matrix", io::to_json(g.matrix)}, {"min_eig", g.min_eig}, {"riesz", g.riesz}}};
  out.csv = io::matrix_to_csv(g.matrix);
  return out;
}

Output blaschke_eval(const json& p, const Settings&) {
  const auto b = io::blaschke_from_json(need(p, "blaschke"));
  const json& zs = need(p, "z");
  std::vector<Complex> pts;
  if (zs.is_array() && !zs.empty() && zs.at(0).is_array()) {
    for (const auto& z : zs) pts.push_back(io::complex_from_json(z));
  } else {
    pts.push_back(io::complex_from_json(zs));
  }
  const bool deriv = p.value("derivative", false);
  json rows = json::array();
  for (const Complex& z : pts) {
    if (std::abs(z) > 1.0 + 1e-12) invalid("evaluation points must satisfy |z| <= 1");
    const auto e = blaschke::eval_product(b, z, deriv);
    json row{{"z", io::to_json(z)}, {"value", io::to_json(e.value)}};
    if (e.derivative) row["derivative"] = io::to_json(*e.derivative);
    rows.push_back(row);
  }
  return {{{"blaschke", io::to_json(b)}, {"fingerprint", b.fingerprint()}, {"values", rows}}};
}

Output blaschke_diag(const json& p, const Settings&) {
  const auto seq = io::sequence_from_json(need(p, "sequence"));
  const auto b = io::blaschke_from_json(need(p, "blaschke"));
  return {{{"label", seq.label}, {"count", seq.points.size()},
           {"report", io::to_json(blaschke::sequence_diagnostics(seq, b))}}};
}

Output blaschke_perturb(const json& p, const Settings&) {
  const auto lam = io::sequence_from_json(need(p, "lambda"));
  const auto mu = io::sequence_from_json(need(p, "mu"));
  const json& e = need(p, "eps");
  if (!e.is_number()) invalid("--eps must be a number");
  return {{{"report", io::to_json(blaschke::perturbation_transfer(lam, mu, e.get<double>()))}}};
}

Output clark(const json& p, const Settings& s) {
  const modelspace::ModelSpace m(io::blaschke_from_json(need(p, "blaschke")));
  const Complex zeta = p.contains("zeta") && !p.at("zeta").is_null() ? io::complex_from_json(p.at("zeta"))
                                                                     : Complex{1.0, 0.0};
  const auto c = modelspace::clark_basis(m, zeta);
  CMatrix u(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim()));
  json vecs = json::array();
  for (std::size_t j = 0; j < c.vectors.size(); ++j) {
    u.col(static_cast<Eigen::Index>(j)) = c.vectors[j].coeffs();
    vecs.push_back(io::to_json(c.vectors[j]));
  }
  const CMatrix gram = u.adjoint() * u;
  const double gram_dev = (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  json roots = json::array();
  for (const Complex& r : c.roots) roots.push_back(io::to_json(r));
  return {{{"blaschke", io::to_json(m.blaschke())},
           {"space", m.fingerprint()},
           {"zeta", io::to_json(zeta)},
           {"roots", roots},
           {"derivative_moduli", c.derivative_moduli},
           {"vectors", vecs},
           {"origin_is_zero", c.origin_is_zero},
           {"gram", io::to_json(gram)},
           {"gram_is_identity", gram_dev <= std::max(s.tol, 1e-8)}}};
}

Output toeplitz_build(const json& p, const Settings&) {
  const auto phi = io::symbol_from_json(need(p, "symbol"));
  const auto t = toeplitz::toeplitz_truncation(phi, count(p, "n"));
  const auto sup = phi.sup_norm();
  Output out{{{"symbol", io::to_json(phi)},
              {"n", t.n},
              {"matrix", io::to_json(t.matrix)},
              {"norm", linalg::spectral_norm(t.matrix)},
              {"sup_norm", sup.value},
              {"sup_norm_mesh", sup.mesh},
              {"sup_norm_mesh_error", sup.mesh_error}}};
  out.csv = io::matrix_to_csv(t.matrix);
  return out;
}

Output toeplitz_hilbert(const json& p, const Settings&) {
  std::vector<std::size_t> ns;
  const json& n = need(p, "n");
  if (n.is_array()) {
    for (const auto& v : n) {
      if (!v.is_number_integer() || v.get<long long>() < 1) invalid("--n entries must be positive integers");
      ns.push_back(v.get<std::size_t>());
    }
  } else {
    ns.push_back(count(p, "n"));
  }
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "n,max_eig,pi_minus_max_eig,min_eig,below_pi\n";
  for (std::size_t k : ns) {
    const auto h = toeplitz::hilbert_gramian(k);
    rows.push_back({{"n", k}, {"max_eig", h.max_eig}, {"pi_minus_max_eig", kPi - h.max_eig},
                    {"min_eig", h.min_eig}, {"below_pi", h.below_pi}});
    csv << k << "," << h.max_eig << "," << kPi - h.max_eig << "," << h.min_eig << "," << (h.below_pi ? 1 : 0) << "\n";
  }
  Output out{{{"rows", rows}}};
  out.csv = csv.str();
  return out;
}

Output toeplitz_compress(const json& p, const Settings&) {
  const modelspace::ModelSpace m(io::blaschke_from_json(need(p, "blaschke")));
  const auto phi = io::symbol_from_json(need(p, "symbol"));
  const CMatrix a = toeplitz::model_compression(m, phi);
  Output out{{{"space", m.fingerprint()}, {"symbol", io::to_json(phi)}, {"matrix", io::to_json(a)}}};
  out.csv = io::matrix_to_csv(a);
  return out;
}

Output toeplitz_frame_image(const json& p, const Settings&) {
  const auto fam = load_family(p);
  const auto phi = io::symbol_from_json(need(p, "symbol"));
  return {{{"symbol", io::to_json(phi)}, {"report", io::to_json(toeplitz::frame_image_report(fam, phi))}}};
}

Output toeplitz_clark_condition(const json& p, const Settings&) {
  const modelspace::ModelSpace m(io::blaschke_from_json(need(p, "blaschke")));
  const auto phi = io::symbol_from_json(need(p, "symbol"));
  const Complex zeta = p.contains("zeta") && !p.at("zeta").is_null() ? io::complex_from_json(p.at("zeta"))
                                                                     : Complex{1.0, 0.0};
  return {{{"symbol", io::to_json(phi)},
           {"zeta", io::to_json(zeta)},
           {"report", io::to_json(toeplitz::clark_frame_condition(m, phi, zeta))}}};
}

Output repro(const json& p, const Settings& s) {
  const std::string which = need(p, "name").get<std::string>();
  std::vector<std::string> names;
  if (which == "all") {
    names = repro::check_names();
  } else {
    names.push_back(which);
  }
  std::vector<repro::CheckResult> results;
  for (const auto& n : names) results.push_back(repro::run_check(n, s.seed));
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back(repro::to_json(r));
    if (r.pass()) ++passed;
  }
  Output out{{{"checks", checks}, {"passed", passed}, {"total", results.size()}}};
  out.table = repro::format_table(results);
  std::ostringstream csv;
  csv << "name,criterion,pass\n";
  for (const auto& r : results) csv << r.name << "," << r.criterion << "," << (r.pass() ? 1 : 0) << "\n";
  out.csv = csv.str();
  out.exit_code = passed == results.size() ? 0 : 1;
  return out;
}

}  // namespace

json parse_json_arg(const std::string& text, const std::string& what) {
  const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kValidation, what + " is not valid JSON: " + e.what());
  }
}

Output run_command(const std::string& command, const json& params, const Settings& settings) {
  using Handler = Output (*)(const json&, const Settings&);
  static const std::map<std::string, Handler> handlers = {
      {"kernel eval", kernel_eval},
      {"kernel psd", kernel_psd},
      {"frame analyze", frame_analyze},
      {"frame dual", frame_dual},
      {"frame gramian", frame_gramian},
      {"blaschke eval", blaschke_eval},
      {"blaschke diag", blaschke_diag},
      {"blaschke perturb", blaschke_perturb},
      {"clark", clark},
      {"toeplitz build", toeplitz_build},
      {"toeplitz hilbert", toeplitz_hilbert},
      {"toeplitz compress", toeplitz_compress},
      {"toeplitz frame-image", toeplitz_frame_image},
      {"toeplitz clark-condition", toeplitz_clark_condition},
      {"repro", repro},
  };
  const auto it = handlers.find(command);
  if (it == handlers.end()) invalid("unknown command '" + command + "'");
  return it->second(params, settings);
}

}  // namespace kernelframe::cli
