//
// Copyright 2026 The qdpkit Authors
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
//

#pragma once

#include <string>

#include "qdpkit/classical.hpp"
#include "qdpkit/contraction.hpp"
#include "qdpkit/divergence.hpp"
#include "qdpkit/linop.hpp"

namespace qdpkit {

// JSON formats (hand-editable, row-major):
//   matrix:   {"dim": d, "re": [[...]], "im": [[...]]}   ("im" optional)
//   pair:     {"rho": <matrix>, "sigma": <matrix>}
//   dist:     {"alphabet": [...], "probs": [...]}        ("alphabet" optional)
//   kernel:   {"rows": [[...]], "in_alphabet": [...], "out_alphabet": [...]}
//   channel:  {"kraus": [<matrix>, ...]}
// Parsing failures throw ValidationError("ParseError", ...); the typed
// loaders run the full validation of the target type.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

HermitianOperator hermitian_from_json(const std::string& text);
DensityOperator density_from_json(const std::string& text);

std::string pair_to_json(const StatePair& pair);
StatePair pair_from_json(const std::string& text);

std::string dist_to_json(const ClassicalDist& p);
ClassicalDist dist_from_json(const std::string& text);

MarkovKernel kernel_from_json(const std::string& text);

std::string channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const std::string& text);

// Whole-file helpers; missing files throw ValidationError("ParseError").
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qdpkit
