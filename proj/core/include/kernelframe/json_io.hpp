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

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kernelframe/blaschke.hpp"
#include "kernelframe/frames.hpp"
#include "kernelframe/hardy.hpp"
#include "kernelframe/modelspace.hpp"
#include "kernelframe/rkhs.hpp"
#include "kernelframe/toeplitz.hpp"

// JSON and CSV wire formats. Complex scalars are always [re, im]. Readers
// reject unknown object keys and malformed shapes with Error(kValidation).

namespace kernelframe::io {

using nlohmann::json;

// Throws Error(kValidation) naming `context` if `obj` is not an object or
// carries a key outside `allowed`.
void require_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                  std::string_view context);

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const CVector& v);
CVector vector_from_json(const json& j);

// Row-major array of rows.
json to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);
json to_json(const RMatrix& m);

json to_json(const hardy::AnalyticPolynomial& p);
hardy::AnalyticPolynomial polynomial_from_json(const json& j);

// {"front": [re, im], "zeros": [[re, im], ...]}; front defaults to [1, 0].
json to_json(const blaschke::FiniteBlaschkeProduct& b);
blaschke::FiniteBlaschkeProduct blaschke_from_json(const json& j);

// Either a bare point array or {"label": ..., "points": [...]}.
blaschke::DiskSequence sequence_from_json(const json& j);

// {"space": <fingerprint>, "coeffs": [...]}. Loading into a space with a
// different fingerprint throws Error(kValidation).
json to_json(const modelspace::ModelVector& v);
modelspace::ModelVector model_vector_from_json(const json& j,
                                               const modelspace::ModelSpace& m);

// {"dim": d, "vectors": [[...], ...]} or a bare array of vectors.
json to_json(const frames::VectorFamily& f);
frames::VectorFamily family_from_json(const json& j);

// Header row, then one vector per row as interleaved re,im columns.
std::string family_to_csv(const frames::VectorFamily& f);
frames::VectorFamily family_from_csv(std::string_view text);

// Header row re_0,im_0,...; one matrix row per line.
std::string matrix_to_csv(const CMatrix& m);

// {"<k>": [re, im], ...} with integer keys.
json to_json(const toeplitz::SymbolCoefficients& s);
toeplitz::SymbolCoefficients symbol_from_json(const json& j);

// {"kind": ..., "params": {...}}. Throws Error(kValidation) for
// non-serializable evaluators (custom pullback maps).
json to_json(const rkhs::KernelEvaluator& k);
rkhs::KernelEvaluator kernel_from_json(const json& j);

json to_json(const rkhs::Domain& d);
rkhs::Domain domain_from_json(const json& j);

json to_json(const frames::FrameReport& r);
json to_json(const blaschke::SequenceReport& r);
json to_json(const blaschke::PerturbationReport& r);
json to_json(const modelspace::OrbitReport& r);
json to_json(const rkhs::PsdReport& r);
json to_json(const toeplitz::FrameImageReport& r);
json to_json(const toeplitz::ClarkConditionReport& r);

}  // namespace kernelframe::io
