// Copyright 2026 The cyclopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLOPT_SERIALIZE_HPP
#define CYCLOPT_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "cyclopt/codes.hpp"
#include "cyclopt/distance.hpp"
#include "cyclopt/explorer.hpp"
#include "cyclopt/field.hpp"
#include "cyclopt/theorems.hpp"

namespace cyclopt {

using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);
/// {d, exact, witness, method, elapsed_ms}
Json to_json(const DistanceReport& r);
/// {p, m, pi, pi_text, n, size, primitive, order_factorization, tables}
Json field_json(const Field& f);
/// {p, m, e, s, pi, g, g_text, n, k, coset_size_e}; `d`, `optimal` and
/// `theorem_tags` are added by callers that know them.
Json code_json(const CodeSpec& code);
Json to_json(const TheoremVerdict& v);
Json to_json(const ScanRow& row);
ScanRow scan_row_from_json(const Json& j);
Json to_json(const ScanResult& r);
Json to_json(const ProbeReport& r);

/// One CSV line per scan row.
std::string scan_csv(const ScanResult& r);

}  // namespace cyclopt

#endif  // CYCLOPT_SERIALIZE_HPP
