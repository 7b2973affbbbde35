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

#include "kernelframe/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "kernelframe/error.hpp"

namespace kernelframe::io {
namespace {

[[noreturn]] void invalid(std::string_view context, std::string_view what) {
  throw Error(ErrorCode::kValidation, std::string(context) + ": " + std::string(what));
}

double number(const json& j, std::string_view context) {
  if (!j.is_number()) invalid(context, "expected a number");
  return j.get<double>();
}

std::size_t count(const json& j, std::string_view context) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    invalid(context, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const json& array(const json& j, std::string_view context) {
  if (!j.is_array()) invalid(context, "expected an array");
  return j;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  for (auto& s : cells) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  }
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    std::ostringstream msg;
    msg << "line " << line_no << ": cannot parse '" << cell << "' as a number";
    invalid("csv", msg.str());
  }
  return v;
}

}  // namespace

void require_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                  std::string_view context) {
  if (!obj.is_object()) invalid(context, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      invalid(context, "unknown key '" + key + "'");
    }
  }
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid("complex", "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

CVector vector_from_json(const json& j) {
  array(j, "vector");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(CVector(m.row(i).transpose())));
  return out;
}

CMatrix matrix_from_json(const json& j) {
  array(j, "matrix");
  if (j.empty()) return CMatrix(0, 0);
  const std::size_t cols = array(j[0], "matrix row").size();
  CMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const CVector row = vector_from_json(j[i]);
    if (static_cast<std::size_t>(row.size()) != cols) invalid("matrix", "ragged rows");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

json to_json(const RMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(row);
  }
  return out;
}

json to_json(const hardy::AnalyticPolynomial& p) {
  json out = json::array();
  for (const Complex& a : p.coeffs()) out.push_back(to_json(a));
  return out;
}

hardy::AnalyticPolynomial polynomial_from_json(const json& j) {
  array(j, "polynomial");
  std::vector<Complex> c;
  for (const auto& a : j) c.push_back(complex_from_json(a));
  return hardy::AnalyticPolynomial(std::move(c));
}

json to_json(const blaschke::FiniteBlaschkeProduct& b) {
  json zeros = json::array();
  for (const Complex& z : b.zeros()) zeros.push_back(to_json(z));
  return {{"front", to_json(b.front())}, {"zeros", zeros}};
}

blaschke::FiniteBlaschkeProduct blaschke_from_json(const json& j) {
  require_keys(j, {"front", "zeros"}, "blaschke");
  if (!j.contains("zeros")) invalid("blaschke", "missing 'zeros'");
  std::vector<Complex> zeros;
  for (const auto& z : array(j.at("zeros"), "blaschke.zeros")) zeros.push_back(complex_from_json(z));
  const Complex front = j.contains("front") ? complex_from_json(j.at("front")) : Complex{1.0, 0.0};
  return blaschke::FiniteBlaschkeProduct(std::move(zeros), front);
}

blaschke::DiskSequence sequence_from_json(const json& j) {
  const json* pts = &j;
  std::string label;
  if (j.is_object()) {
    require_keys(j, {"label", "points"}, "sequence");
    if (!j.contains("points")) invalid("sequence", "missing 'points'");
    pts = &j.at("points");
    if (j.contains("label")) {
      if (!j.at("label").is_string()) invalid("sequence.label", "expected a string");
      label = j.at("label").get<std::string>();
    }
  }
  std::vector<Complex> points;
  for (const auto& p : array(*pts, "sequence.points")) points.push_back(complex_from_json(p));
  return blaschke::DiskSequence(std::move(points), std::move(label));
}

json to_json(const modelspace::ModelVector& v) {
  return {{"space", v.space().fingerprint()}, {"coeffs", to_json(v.coeffs())}};
}

modelspace::ModelVector model_vector_from_json(const json& j, const modelspace::ModelSpace& m) {
  require_keys(j, {"space", "coeffs"}, "model_vector");
  if (!j.contains("space") || !j.at("space").is_string()) invalid("model_vector", "missing 'space' hash");
  if (j.at("space").get<std::string>() != m.fingerprint()) {
    invalid("model_vector", "space hash " + j.at("space").get<std::string>() +
                                " does not match model space " + m.fingerprint());
  }
  if (!j.contains("coeffs")) invalid("model_vector", "missing 'coeffs'");
  return modelspace::ModelVector(m, vector_from_json(j.at("coeffs")));
}

json to_json(const frames::VectorFamily& f) {
  json vectors = json::array();
  for (std::size_t n = 0; n < f.size(); ++n) vectors.push_back(to_json(f.vector(n)));
  return {{"dim", f.dim()}, {"vectors", vectors}};
}

frames::VectorFamily family_from_json(const json& j) {
  const json* vecs = &j;
  std::optional<std::size_t> dim;
  if (j.is_object()) {
    require_keys(j, {"dim", "vectors"}, "family");
    if (!j.contains("vectors")) invalid("family", "missing 'vectors'");
    vecs = &j.at("vectors");
    if (j.contains("dim")) dim = count(j.at("dim"), "family.dim");
  }
  std::vector<CVector> vectors;
  for (const auto& v : array(*vecs, "family.vectors")) vectors.push_back(vector_from_json(v));
  if (vectors.empty()) invalid("family", "no vectors");
  return frames::VectorFamily(dim.value_or(static_cast<std::size_t>(vectors.front().size())), vectors);
}

std::string family_to_csv(const frames::VectorFamily& f) {
  std::ostringstream out;
  for (std::size_t k = 0; k < f.dim(); ++k) out << (k ? "," : "") << "re_" << k << ",im_" << k;
  out << "\n";
  for (std::size_t n = 0; n < f.size(); ++n) {
    const CVector v = f.vector(n);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      out << (k ? "," : "") << format_double(v(k).real()) << "," << format_double(v(k).imag());
    }
    out << "\n";
  }
  return out.str();
}

frames::VectorFamily family_from_csv(std::string_view text) {
  std::vector<CVector> vectors;
  std::size_t line_no = 0;
  std::size_t columns = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    const auto cells = split_csv_line(line);
    if (!header_seen) {
      header_seen = true;
      columns = cells.size();
      if (columns == 0 || columns % 2 != 0) {
        invalid("csv", "header must list interleaved re/im columns (even count)");
      }
      continue;
    }
    if (cells.size() != columns) {
      std::ostringstream msg;
      msg << "line " << line_no << " has " << cells.size() << " cells, header has " << columns;
      invalid("csv", msg.str());
    }
    CVector v(static_cast<Eigen::Index>(columns / 2));
    for (std::size_t k = 0; k < columns / 2; ++k) {
      v(static_cast<Eigen::Index>(k)) = {parse_cell(cells[2 * k], line_no),
                                         parse_cell(cells[2 * k + 1], line_no)};
    }
    vectors.push_back(std::move(v));
    if (end == text.size()) break;
  }
  if (!header_seen) invalid("csv", "missing header row");
  if (vectors.empty()) invalid("csv", "no vectors");
  return frames::VectorFamily(columns / 2, vectors);
}

std::string matrix_to_csv(const CMatrix& m) {
  std::ostringstream out;
  for (Eigen::Index k = 0; k < m.cols(); ++k) out << (k ? "," : "") << "re_" << k << ",im_" << k;
  out << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      out << (k ? "," : "") << format_double(m(i, k).real()) << "," << format_double(m(i, k).imag());
    }
    out << "\n";
  }
  return out.str();
}

json to_json(const toeplitz::SymbolCoefficients& s) {
  json out = json::object();
  for (const auto& [k, a] : s.coeffs()) out[std::to_string(k)] = to_json(a);
  return out;
}

toeplitz::SymbolCoefficients symbol_from_json(const json& j) {
  if (!j.is_object()) invalid("symbol", "expected an object {\"k\": [re, im]}");
  std::map<int, Complex> c;
  for (const auto& [key, value] : j.items()) {
    int k = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc{} || ptr != key.data() + key.size()) {
      invalid("symbol", "key '" + key + "' is not an integer index");
    }
    c[k] = complex_from_json(value);
  }
  return toeplitz::SymbolCoefficients(std::move(c));
}

json to_json(const rkhs::Domain& d) {
  using K = rkhs::Domain::Kind;
  switch (d.kind) {
    case K::kDisk: return {{"kind", "disk"}};
    case K::kInterval: return {{"kind", "interval"}, {"lo", d.lo}, {"hi", d.hi}};
    case K::kRealLine: return {{"kind", "real_line"}};
    case K::kComplexVector: return {{"kind", "vectors"}, {"dim", d.dim}};
  }
  return {};
}

rkhs::Domain domain_from_json(const json& j) {
  require_keys(j, {"kind", "lo", "hi", "dim"}, "domain");
  if (!j.contains("kind") || !j.at("kind").is_string()) invalid("domain", "missing 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disk") return rkhs::Domain::disk();
  if (kind == "real_line") return rkhs::Domain::real_line();
  if (kind == "interval") {
    if (!j.contains("lo") || !j.contains("hi")) invalid("domain", "interval needs 'lo' and 'hi'");
    return rkhs::Domain::interval(number(j.at("lo"), "domain.lo"), number(j.at("hi"), "domain.hi"));
  }
  if (kind == "vectors") {
    if (!j.contains("dim")) invalid("domain", "vectors domain needs 'dim'");
    return rkhs::Domain::vectors(count(j.at("dim"), "domain.dim"));
  }
  invalid("domain", "unknown kind '" + kind + "'");
}

json to_json(const rkhs::KernelEvaluator& k) {
  if (!k.serializable()) {
    throw Error(ErrorCode::kValidation,
                "kernel '" + k.kind() + "' wraps a custom callable and cannot be serialized");
  }
  return {{"kind", k.kind()}, {"params", k.params()}};
}

rkhs::KernelEvaluator kernel_from_json(const json& j) {
  require_keys(j, {"kind", "params"}, "kernel");
  if (!j.contains("kind") || !j.at("kind").is_string()) invalid("kernel", "missing 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const json params =
      j.contains("params") && !j.at("params").is_null() ? j.at("params") : json::object();
  if (!params.is_object()) invalid("kernel.params", "expected an object");

  if (kind == "szego") {
    require_keys(params, {}, "kernel.params(szego)");
    return rkhs::szego();
  }
  if (kind == "model") {
    require_keys(params, {"blaschke"}, "kernel.params(model)");
    if (!params.contains("blaschke")) invalid("kernel.params(model)", "missing 'blaschke'");
    return rkhs::model(blaschke_from_json(params.at("blaschke")));
  }
  if (kind == "brownian_bridge") {
    require_keys(params, {"terms"}, "kernel.params(brownian_bridge)");
    if (!params.contains("terms")) invalid("kernel.params(brownian_bridge)", "missing 'terms'");
    return rkhs::brownian_bridge(count(params.at("terms"), "kernel.params.terms"));
  }
  if (kind == "sinc") {
    require_keys(params, {"bandwidth"}, "kernel.params(sinc)");
    if (!params.contains("bandwidth")) invalid("kernel.params(sinc)", "missing 'bandwidth'");
    return rkhs::sinc(number(params.at("bandwidth"), "kernel.params.bandwidth"));
  }
  if (kind == "gram") {
    require_keys(params, {"dim"}, "kernel.params(gram)");
    if (!params.contains("dim")) invalid("kernel.params(gram)", "missing 'dim'");
    return rkhs::gram(count(params.at("dim"), "kernel.params.dim"));
  }
  if (kind == "span") {
    require_keys(params, {"blaschke", "points"}, "kernel.params(span)");
    if (!params.contains("blaschke") || !params.contains("points")) {
      invalid("kernel.params(span)", "needs 'blaschke' and 'points'");
    }
    std::vector<hardy::DiskPoint> pts;
    for (const auto& p : array(params.at("points"), "kernel.params.points")) {
      pts.emplace_back(complex_from_json(p));
    }
    const modelspace::ModelSpace m(blaschke_from_json(params.at("blaschke")));
    return rkhs::span_kernel(m, pts).evaluator();
  }
  if (kind == "pullback") {
    require_keys(params, {"inner", "map"}, "kernel.params(pullback)");
    if (!params.contains("inner") || !params.contains("map")) {
      invalid("kernel.params(pullback)", "needs 'inner' and 'map'");
    }
    const json& map = params.at("map");
    require_keys(map, {"source", "linear", "offset"}, "kernel.params.map");
    if (!map.contains("source") || !map.contains("linear") || !map.contains("offset")) {
      invalid("kernel.params.map", "needs 'source', 'linear' and 'offset'");
    }
    return rkhs::pullback_kernel(
        kernel_from_json(params.at("inner")),
        rkhs::PointMap::affine(domain_from_json(map.at("source")),
                               matrix_from_json(map.at("linear")),
                               vector_from_json(map.at("offset"))));
  }
  invalid("kernel", "unknown kind '" + kind + "'");
}

json to_json(const frames::FrameReport& r) {
  return {{"lower", r.lower},         {"upper", r.upper},         {"is_frame", r.is_frame},
          {"is_tight", r.is_tight},   {"is_parseval", r.is_parseval}, {"is_riesz", r.is_riesz}};
}

json to_json(const blaschke::SequenceReport& r) {
  return {{"blaschke_partial", r.blaschke_partial},
          {"inverse_gap_partial", r.inverse_gap_partial},
          {"bessel_bound", r.bessel_bound},
          {"sup_theta", r.sup_theta}};
}

json to_json(const blaschke::PerturbationReport& r) {
  return {{"holds", r.holds},
          {"alpha", r.alpha},
          {"per_index_ok", r.per_index_ok},
          {"hypothesis_ok", r.hypothesis_ok},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"mu_blaschke_partial", r.mu_blaschke_partial},
          {"transfer_bound", r.transfer_bound}};
}

json to_json(const modelspace::OrbitReport& r) {
  return {{"norm_sq", r.norm_sq},       {"partial", r.partial},
          {"defect", r.defect},         {"tail_bound", r.tail_bound},
          {"inconclusive", r.inconclusive}, {"consistent", r.consistent}};
}

json to_json(const rkhs::PsdReport& r) {
  return {{"psd", r.psd},
          {"min_eig", r.min_eig},
          {"max_eig", r.max_eig},
          {"max_asymmetry", r.max_asymmetry}};
}

json to_json(const toeplitz::FrameImageReport& r) {
  return {{"bounds_before", to_json(r.bounds_before)},
          {"bounds_after", to_json(r.bounds_after)},
          {"sup_norm", r.sup_norm},
          {"sigma_min", r.sigma_min},
          {"sup_norm_bound", r.sup_norm_bound},
          {"pinv_bound", r.pinv_bound},
          {"pinv_bound_holds", r.pinv_bound_holds},
          {"sup_norm_bound_holds", r.sup_norm_bound_holds}};
}

json to_json(const toeplitz::ClarkConditionReport& r) {
  json roots = json::array();
  for (const Complex& z : r.clark_roots) roots.push_back(to_json(z));
  return {{"delta", r.delta},
          {"delta_T", r.delta_t},
          {"condition_holds", r.condition_holds},
          {"literal_condition_holds", r.literal_condition_holds},
          {"observed_lower", r.observed_lower},
          {"guaranteed_lower", r.guaranteed_lower},
          {"implication_ok", r.implication_ok},
          {"clark_roots", roots}};
}

}  // namespace kernelframe::io
