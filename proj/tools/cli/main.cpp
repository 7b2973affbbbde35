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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "commands.hpp"
#include "kernelframe/kernelframe.hpp"

namespace {

using nlohmann::json;
namespace kf = kernelframe;

const char* kComplexSchema = "complex: [re, im]";
const char* kBlaschkeSchema = R"(blaschke: {"zeros": [complex, ...], "front": complex (optional, unimodular)})";
const char* kFamilySchema =
    R"(family: {"dim": int, "vectors": [[complex, ...], ...]}  or CSV with a header row and interleaved re/im columns, one vector per row)";
const char* kSymbolSchema = R"(symbol: {"k": complex, ...} with integer keys k, e.g. {"0": [1,0], "1": [0.5,0]})";
const char* kKernelSchema =
    R"(kernel: {"kind": "szego"|"model"|"span"|"brownian_bridge"|"sinc"|"gram"|"pullback", "params": {...}}
  szego: {}   model: {"blaschke": blaschke}   span: {"blaschke": blaschke, "points": [complex, ...]}
  brownian_bridge: {"terms": int}   sinc: {"bandwidth": number}   gram: {"dim": int}
  pullback: {"inner": kernel, "map": {"source": domain, "linear": [[complex]], "offset": [complex]}}
  domain: {"kind": "disk"|"interval"|"real_line"|"complex_vector", "lo": number, "hi": number, "dim": int})";
const char* kSequenceSchema = R"(sequence: [complex, ...] or {"label": string, "points": [complex, ...]})";

std::string schema(std::initializer_list<const char*> parts) {
  std::string s = "\nInput JSON schema (inline JSON, or @path to a file):\n";
  for (const char* p : parts) s += "  " + std::string(p) + "\n";
  s += "Output: {\"header\": {\"version\", \"command\", \"params\", \"settings\"}, \"result\": {...}}\n";
  return s;
}

// Collected values for one subcommand; JSON-typed options are parsed after CLI11 finishes.
struct Job {
  std::string command;
  std::map<std::string, std::string> json_opts;
  std::map<std::string, std::string> string_opts;
  std::map<std::string, long long> int_opts;
  std::map<std::string, bool> flags;
};

CLI::App* add_json(CLI::App* sub, Job& job, const std::string& name, const std::string& desc, bool required) {
  auto* opt = sub->add_option("--" + name, job.json_opts[name], desc);
  if (required) opt->required();
  return sub;
}

json collect(const Job& job, CLI::App* sub) {
  json p = json::object();
  for (const auto& [k, v] : job.json_opts) {
    if (sub->count("--" + k) > 0) p[k] = kf::cli::parse_json_arg(v, "--" + k);
  }
  for (const auto& [k, v] : job.string_opts) {
    if (!v.empty()) p[k] = v;
  }
  for (const auto& [k, v] : job.int_opts) {
    if (sub->count("--" + k) > 0) p[k] = v;
  }
  for (const auto& [k, v] : job.flags) {
    if (v) p[k] = true;
  }
  return p;
}

void fail(kf::ErrorCode code, const std::string& msg, int exit_code) {
  json err{{"error", {{"code", std::string(kf::error_code_name(code))}, {"message", msg}}},
           {"version", kf::kVersion}};
  std::cerr << err.dump() << "\n";
  std::exit(exit_code);
}

double tolerance_from_env() {
  const char* env = std::getenv("KERNELFRAME_TOL");
  if (env == nullptr) return kf::kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    fail(kf::ErrorCode::kValidation, "KERNELFRAME_TOL must be a positive number", 2);
  }
  return v;
}

std::string render_table(const json& j, int indent = 0) {
  std::string out;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
        out += pad + k + ":\n" + render_table(v, indent + 2);
      } else {
        out += pad + k + ": " + v.dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out += pad + "-\n" + render_table(v, indent + 2);
      } else {
        out += pad + v.dump() + "\n";
      }
    }
  } else {
    out += pad + j.dump() + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernelframe: frames, reproducing kernels, model spaces and Toeplitz compressions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kf::kVersion));

  std::string format = "json";
  std::string output;
  std::uint64_t seed = 20260101;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output", output, "Write the report to this path instead of stdout");
  app.add_option("--seed", seed, "Seed for randomized sampling and repro checks");
  app.footer("Environment: KERNELFRAME_TOL overrides the default tolerance 1e-10.\n"
             "Exit status: 0 success, 1 failed repro check, 2 invalid input, 3 numerical failure.");

  std::vector<std::unique_ptr<Job>> jobs;
  std::vector<std::pair<CLI::App*, Job*>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& desc) {
    jobs.push_back(std::make_unique<Job>());
    jobs.back()->command = full;
    CLI::App* sub = parent->add_subcommand(name, desc);
    leaves.emplace_back(sub, jobs.back().get());
    return std::make_pair(sub, jobs.back().get());
  };

  auto* kernel = app.add_subcommand("kernel", "Evaluate kernels and test positive semidefiniteness");
  kernel->require_subcommand(1);
  {
    auto [s, p] = leaf(kernel, "eval", "kernel eval", "Evaluate K(y, z)");
    add_json(s, *p, "kernel", "Kernel description", true);
    add_json(s, *p, "y", "First point (complex, or array of complex for vector kernels)", true);
    add_json(s, *p, "z", "Second point", true);
    s->footer(schema({kKernelSchema, kComplexSchema}));
  }
  {
    auto [s, p] = leaf(kernel, "psd", "kernel psd", "Sample a kernel matrix and check it is PSD");
    add_json(s, *p, "kernel", "Kernel description", true);
    add_json(s, *p, "points", "Array of sample points", false);
    s->add_option("--random", p->int_opts["random"], "Draw this many seeded sample points from the domain");
    s->footer(schema({kKernelSchema, "points: [complex, ...] or [[complex, ...], ...] for vector kernels"}));
  }

  auto* frame = app.add_subcommand("frame", "Finite frame analysis");
  frame->require_subcommand(1);
  for (auto [name, desc] : {std::pair{"analyze", "Frame operator, bounds, dual and kernel matrix"},
                            std::pair{"dual", "Canonical dual frame"},
                            std::pair{"gramian", "Gramian and Riesz test"}}) {
    auto [s, p] = leaf(frame, name, std::string("frame ") + name, desc);
    s->add_option("--input", p->string_opts["input"], "Family file (.json or .csv)");
    add_json(s, *p, "family", "Inline family", false);
    s->footer(schema({kFamilySchema}));
  }

  auto* bl = app.add_subcommand("blaschke", "Finite Blaschke products and disk sequences");
  bl->require_subcommand(1);
  {
    auto [s, p] = leaf(bl, "eval", "blaschke eval", "Evaluate B (and B') at points of the closed disk");
    add_json(s, *p, "blaschke", "Blaschke product", true);
    add_json(s, *p, "z", "Point or array of points", true);
    s->add_flag("--derivative", p->flags["derivative"], "Also report B'");
    s->footer(schema({kBlaschkeSchema, kComplexSchema}));
  }
  {
    auto [s, p] = leaf(bl, "diag", "blaschke diag", "Partial sums and Bessel bound for a disk sequence");
    add_json(s, *p, "sequence", "Disk sequence", true);
    add_json(s, *p, "blaschke", "Inner function theta", true);
    s->footer(schema({kSequenceSchema, kBlaschkeSchema}));
  }
  {
    auto [s, p] = leaf(bl, "perturb", "blaschke perturb", "Transfer of the inverse-gap bound to a perturbed sequence");
    add_json(s, *p, "lambda", "Reference sequence", true);
    add_json(s, *p, "mu", "Perturbed sequence (same length)", true);
    add_json(s, *p, "eps", "Pseudohyperbolic radius in (0, 1)", true);
    s->footer(schema({kSequenceSchema, "eps: number"}));
  }
  {
    auto [s, p] = leaf(&app, "clark", "clark", "Clark orthonormal basis of the model space");
    add_json(s, *p, "blaschke", "Blaschke product", true);
    add_json(s, *p, "zeta", "Unimodular parameter (default [1, 0])", false);
    s->footer(schema({kBlaschkeSchema, kComplexSchema}));
  }

  auto* tp = app.add_subcommand("toeplitz", "Toeplitz truncations and model-space compressions");
  tp->require_subcommand(1);
  {
    auto [s, p] = leaf(tp, "build", "toeplitz build", "N x N Toeplitz truncation of a symbol");
    add_json(s, *p, "symbol", "Symbol coefficients", true);
    s->add_option("--n", p->int_opts["n"], "Matrix size")->required();
    s->footer(schema({kSymbolSchema}));
  }
  {
    auto [s, p] = leaf(tp, "hilbert", "toeplitz hilbert", "Hilbert matrix spectrum rows (N, max_eig, pi - max_eig)");
    add_json(s, *p, "n", "Size, or array of sizes", true);
    s->footer(schema({"n: int or [int, ...]"}));
  }
  {
    auto [s, p] = leaf(tp, "compress", "toeplitz compress", "Matrix of the compressed multiplication on K_B");
    add_json(s, *p, "blaschke", "Blaschke product", true);
    add_json(s, *p, "symbol", "Symbol coefficients", true);
    s->footer(schema({kBlaschkeSchema, kSymbolSchema}));
  }
  {
    auto [s, p] = leaf(tp, "frame-image", "toeplitz frame-image", "Frame bounds of the image of a frame under T_phi");
    s->add_option("--input", p->string_opts["input"], "Family file (.json or .csv)");
    add_json(s, *p, "family", "Inline family", false);
    add_json(s, *p, "symbol", "Analytic symbol", true);
    s->footer(schema({kFamilySchema, kSymbolSchema}));
  }
  {
    auto [s, p] = leaf(tp, "clark-condition", "toeplitz clark-condition", "Lower bound test for phi(M*) through a Clark basis");
    add_json(s, *p, "blaschke", "Blaschke product", true);
    add_json(s, *p, "symbol", "Analytic symbol", true);
    add_json(s, *p, "zeta", "Unimodular parameter (default [1, 0])", false);
    s->footer(schema({kBlaschkeSchema, kSymbolSchema, kComplexSchema}));
  }
  {
    auto [s, p] = leaf(&app, "repro", "repro", "Run reproduction checks and print expected vs computed");
    std::string names = "all";
    for (const auto& n : kf::repro::check_names()) names += ", " + n;
    s->add_option("name", p->string_opts["name"], "Check name: " + names)->required();
    s->footer("\nOutput: {\"header\": {...}, \"result\": {\"checks\": [{\"name\", \"criterion\", \"title\", \"pass\", "
              "\"rows\": [{\"quantity\", \"expected\", \"computed\", \"tolerance\", \"pass\"}], \"details\"}], "
              "\"passed\", \"total\"}}\n");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail(kf::ErrorCode::kValidation, e.what(), 2);
  }

  const kf::cli::Settings settings{tolerance_from_env(), seed};
  for (auto [sub, job] : leaves) {
    if (!sub->parsed()) continue;
    json params;
    kf::cli::Output out;
    try {
      params = collect(*job, sub);
      out = kf::cli::run_command(job->command, params, settings);
    } catch (const kf::Error& e) {
      const bool input_error = e.code() == kf::ErrorCode::kValidation || e.code() == kf::ErrorCode::kIo ||
                                e.code() == kf::ErrorCode::kDomain;
      fail(e.code(), e.what(), input_error ? 2 : 3);
    } catch (const std::exception& e) {
      fail(kf::ErrorCode::kNumeric, e.what(), 3);
    }

    const json header{{"version", kf::kVersion},
                      {"command", job->command},
                      {"params", params},
                      {"settings", {{"tol", settings.tol}, {"seed", settings.seed}, {"format", format}}}};
    std::string text;
    if (format == "json") {
      text = json{{"header", header}, {"result", out.result}}.dump(2) + "\n";
    } else if (format == "csv") {
      if (!out.csv) fail(kf::ErrorCode::kValidation, "'" + job->command + "' has no CSV form; use --format json", 2);
      text = "# " + header.dump() + "\n" + *out.csv;
    } else {
      text = "kernelframe " + std::string(kf::kVersion) + "  " + job->command + "  " + params.dump() + "\n" +
             (out.table ? *out.table : render_table(out.result));
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) fail(kf::ErrorCode::kIo, "cannot write '" + output + "'", 2);
      f << text;
    }
    return out.exit_code;
  }
  fail(kf::ErrorCode::kValidation, "no command given", 2);
}
