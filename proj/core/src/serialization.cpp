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

#include "qdpkit/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdpkit/errors.hpp"

namespace qdpkit {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("ParseError", "malformed JSON");
  return j;
}

std::vector<std::vector<double>> real_grid(const json& j, const std::string& key, int dim,
                                           bool required) {
  if (!j.contains(key)) {
    if (required) throw ValidationError("ParseError", "missing \"" + key + "\"");
    return std::vector<std::vector<double>>(dim, std::vector<double>(dim, 0.0));
  }
  std::vector<std::vector<double>> rows;
  try {
    rows = j.at(key).get<std::vector<std::vector<double>>>();
  } catch (const json::exception&) {
    throw ValidationError("ParseError", "\"" + key + "\" must be a numeric matrix");
  }
  if (static_cast<int>(rows.size()) != dim) {
    throw ValidationError("ParseError", "\"" + key + "\" row count differs from dim");
  }
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) {
      throw ValidationError("ParseError", "\"" + key + "\" has a ragged row");
    }
  }
  return rows;
}

Matrix matrix_from(const json& j) {
  if (!j.is_object() || !j.contains("dim")) {
    throw ValidationError("ParseError", "matrix JSON needs a \"dim\" field");
  }
  int dim = 0;
  try {
    dim = j.at("dim").get<int>();
  } catch (const json::exception&) {
    throw ValidationError("ParseError", "\"dim\" must be an integer");
  }
  if (dim < 1) throw ValidationError("ParseError", "\"dim\" must be positive");
  const auto re = real_grid(j, "re", dim, true);
  const auto im = real_grid(j, "im", dim, false);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) m(i, k) = {re[i][k], im[i][k]};
  }
  return m;
}

json matrix_to(const Matrix& m) {
  const int dim = static_cast<int>(m.rows());
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < dim; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (int k = 0; k < dim; ++k) {
      re_row.push_back(m(i, k).real());
      im_row.push_back(m(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", dim}, {"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return matrix_to(m).dump(); }

Matrix matrix_from_json(const std::string& text) { return matrix_from(parse(text)); }

HermitianOperator hermitian_from_json(const std::string& text) {
  return HermitianOperator(matrix_from_json(text));
}

DensityOperator density_from_json(const std::string& text) {
  return DensityOperator(matrix_from_json(text));
}

std::string pair_to_json(const StatePair& pair) {
  json j{{"rho", matrix_to(pair.rho().matrix())}, {"sigma", matrix_to(pair.sigma().matrix())}};
  return j.dump();
}

StatePair pair_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("rho") || !j.contains("sigma")) {
    throw ValidationError("ParseError", "pair JSON needs \"rho\" and \"sigma\"");
  }
  return StatePair(DensityOperator(matrix_from(j.at("rho"))),
                   DensityOperator(matrix_from(j.at("sigma"))));
}

std::string dist_to_json(const ClassicalDist& p) {
  json j{{"alphabet", p.alphabet()}, {"probs", p.probs()}};
  return j.dump();
}

ClassicalDist dist_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("probs")) throw ValidationError("ParseError", "distribution needs \"probs\"");
  std::vector<double> probs;
  try {
    probs = j.at("probs").get<std::vector<double>>();
  } catch (const json::exception&) {
    throw ValidationError("ParseError", "\"probs\" must be a numeric array");
  }
  if (j.contains("alphabet")) {
    std::vector<std::string> labels;
    try {
      labels = j.at("alphabet").get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw ValidationError("ParseError", "\"alphabet\" must be a string array");
    }
    return ClassicalDist(std::move(labels), std::move(probs));
  }
  return ClassicalDist(std::move(probs));
}

MarkovKernel kernel_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("rows")) throw ValidationError("ParseError", "kernel needs \"rows\"");
  std::vector<std::vector<double>> rows;
  try {
    rows = j.at("rows").get<std::vector<std::vector<double>>>();
  } catch (const json::exception&) {
    throw ValidationError("ParseError", "\"rows\" must be a numeric matrix");
  }
  if (j.contains("in_alphabet") && j.contains("out_alphabet")) {
    try {
      return MarkovKernel(j.at("in_alphabet").get<std::vector<std::string>>(),
                          j.at("out_alphabet").get<std::vector<std::string>>(), std::move(rows));
    } catch (const json::exception&) {
      throw ValidationError("ParseError", "kernel alphabets must be string arrays");
    }
  }
  return MarkovKernel(std::move(rows));
}

std::string channel_to_json(const QuantumChannel& ch) {
  json arr = json::array();
  for (const Matrix& k : ch.kraus()) {
    // Kraus operators may be rectangular; serialize shape explicitly.
    json re = json::array();
    json im = json::array();
    for (int r = 0; r < k.rows(); ++r) {
      json re_row = json::array();
      json im_row = json::array();
      for (int c = 0; c < k.cols(); ++c) {
        re_row.push_back(k(r, c).real());
        im_row.push_back(k(r, c).imag());
      }
      re.push_back(std::move(re_row));
      im.push_back(std::move(im_row));
    }
    arr.push_back(json{{"rows", static_cast<int>(k.rows())},
                       {"cols", static_cast<int>(k.cols())},
                       {"re", std::move(re)},
                       {"im", std::move(im)}});
  }
  return json{{"kraus", std::move(arr)}}.dump();
}

QuantumChannel channel_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty()) {
    throw ValidationError("ParseError", "channel needs a nonempty \"kraus\" array");
  }
  std::vector<Matrix> kraus;
  for (const json& entry : j.at("kraus")) {
    if (entry.contains("rows") && entry.contains("cols")) {
      int rows = 0, cols = 0;
      try {
        rows = entry.at("rows").get<int>();
        cols = entry.at("cols").get<int>();
      } catch (const json::exception&) {
        throw ValidationError("ParseError", "Kraus shape fields must be integers");
      }
      if (rows < 1 || cols < 1) throw ValidationError("ParseError", "bad Kraus shape");
      std::vector<std::vector<double>> re, im;
      try {
        re = entry.at("re").get<std::vector<std::vector<double>>>();
        im = entry.contains("im") ? entry.at("im").get<std::vector<std::vector<double>>>()
                                  : std::vector<std::vector<double>>(
                                        rows, std::vector<double>(cols, 0.0));
      } catch (const json::exception&) {
        throw ValidationError("ParseError", "Kraus entries must be numeric matrices");
      }
      if (static_cast<int>(re.size()) != rows || static_cast<int>(im.size()) != rows) {
        throw ValidationError("ParseError", "Kraus row count mismatch");
      }
      Matrix k(rows, cols);
      for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(re[r].size()) != cols || static_cast<int>(im[r].size()) != cols) {
          throw ValidationError("ParseError", "Kraus column count mismatch");
        }
        for (int c = 0; c < cols; ++c) k(r, c) = {re[r][c], im[r][c]};
      }
      kraus.push_back(std::move(k));
    } else {
      kraus.push_back(matrix_from(entry));
    }
  }
  return QuantumChannel(std::move(kraus));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("ParseError", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("ParseError", "cannot write " + path);
  out << content;
}

}  // namespace qdpkit
