// Copyright 2026 The hurwitz-radon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HR_JSON_IO_HPP
#define HR_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "hr/cartan.hpp"
#include "hr/fields.hpp"
#include "hr/matrix.hpp"
#include "hr/pencil.hpp"

namespace hr {

using Json = nlohmann::json;

/// Matrix wire format: {"rows": r, "cols": c, "entries": ["p/q", ...]},
/// entries row-major, rationals canonical.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> vector_from_json(const Json& j);

/// {"dim": N, "generators": [matrix, ...]}
Json action_to_json(const LinearAction& a);
LinearAction action_from_json(const Json& j);

/// {"dim": N, "generators": [{"re": matrix, "im": matrix}, ...]}
std::vector<std::pair<RationalMatrix, RationalMatrix>>
complex_generators_from_json(const Json& j);

Json witness_to_json(const WitnessFamily& fam);
WitnessFamily witness_from_json(const Json& j);

Json verdict_to_json(const PencilVerdict& v);

/// Bare list of square matrices: either {"matrices": [...]} or a witness
/// file (its matrices are used) or a plain JSON array of matrices.
std::vector<RationalMatrix> matrices_from_json(const Json& j);

/// FNV-1a 64-bit of a canonicalized JSON dump, as fixed-width hex. Used
/// for the inputs digest of command envelopes.
std::string json_digest(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace hr

#endif  // HR_JSON_IO_HPP
