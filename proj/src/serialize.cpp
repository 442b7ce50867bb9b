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

#include "cyclopt/serialize.hpp"

#include <sstream>

#include "cyclopt/errors.hpp"

namespace cyclopt {

namespace {

Json coeffs_json(const Poly& f) {
    Json a = Json::array();
    for (auto c : f.coeffs()) a.push_back(c);
    return a;
}

Json prediction_json(Prediction p) {
    switch (p) {
        case Prediction::kOptimal: return true;
        case Prediction::kNotOptimal: return false;
        case Prediction::kNotDetermined: break;
    }
    return nullptr;
}

Json strings_json(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

std::string join(const std::vector<std::string>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

}  // namespace

Json to_json(const Witness& w) {
    Json j;
    j["c"] = w.coeffs;
    j["x_logs"] = w.x_logs;
    return j;
}

Witness witness_from_json(const Json& j) {
    Witness w;
    w.coeffs = j.at("c").get<std::vector<std::uint32_t>>();
    w.x_logs = j.at("x_logs").get<std::vector<u64>>();
    if (w.coeffs.size() != w.x_logs.size()) throw InvalidArgument("malformed witness");
    return w;
}

Json to_json(const DistanceReport& r) {
    Json j;
    j["d"] = r.d;
    j["exact"] = r.exact;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["method"] = std::string(to_string(r.method));
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Json field_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["pi"] = to_coeff_list(f.pi());
    j["pi_text"] = to_string(f.pi());
    j["n"] = f.n();
    j["size"] = f.size();
    j["primitive"] = true;
    Json fac = Json::array();
    for (auto [q, k] : factorize(f.n())) fac.push_back(Json::array({q, k}));
    j["order_factorization"] = fac;
    j["tables"] = f.has_tables();
    return j;
}

Json code_json(const CodeSpec& code) {
    Json j;
    j["p"] = code.p();
    j["m"] = code.m();
    j["e"] = code.e;
    j["s"] = code.s;
    j["pi"] = to_coeff_list(code.field->pi());
    j["g"] = to_string(code.g);
    j["g_coeffs"] = coeffs_json(code.g);
    j["n"] = code.n;
    j["k"] = code.k;
    j["coset_size_e"] = code.coset_size_e;
    return j;
}

Json to_json(const TheoremVerdict& v) {
    Json j;
    j["theorem_id"] = std::string(to_string(v.id));
    j["tag"] = v.tag();
    j["p"] = v.p;
    j["m"] = v.m;
    Json params = Json::object();
    for (const auto& [k, val] : v.params) params[k] = val;
    j["params"] = params;
    j["applicable"] = v.applicable;
    Json hyps = Json::array();
    for (const auto& h : v.hypotheses) {
        Json e;
        e["condition"] = h.condition;
        e["passed"] = h.passed;
        e["kind"] = h.kind == CheckKind::kHypothesis ? "hypothesis" : "derived";
        e["detail"] = h.detail;
        hyps.push_back(e);
    }
    j["hypothesis_report"] = hyps;
    Json mems = Json::array();
    for (const auto& m : v.members) {
        Json e;
        e["e"] = m.e;
        e["leader"] = m.leader;
        e["coset_size"] = m.coset_size;
        e["predicted_optimal"] = prediction_json(m.predicted);
        e["detail"] = m.detail;
        mems.push_back(e);
    }
    j["members"] = mems;
    j["predicted_optimal"] = prediction_json(v.predicted);
    j["prediction"] = std::string(to_string(v.predicted));
    return j;
}

Json to_json(const ScanRow& row) {
    Json j;
    j["e_leader"] = row.e_leader;
    j["coset_size"] = row.coset_size;
    j["in_C1"] = row.in_C1;
    j["d"] = row.d;
    j["d_exact"] = row.d_exact;
    j["optimal"] = row.optimal;
    j["tags"] = strings_json(row.tags);
    j["refuted_by"] = strings_json(row.refuted_by);
    j["witness"] = row.witness ? to_json(*row.witness) : Json(nullptr);
    return j;
}

ScanRow scan_row_from_json(const Json& j) {
    ScanRow row;
    row.e_leader = j.at("e_leader").get<u64>();
    row.coset_size = j.at("coset_size").get<int>();
    row.in_C1 = j.at("in_C1").get<bool>();
    row.d = j.at("d").get<int>();
    row.d_exact = j.at("d_exact").get<bool>();
    row.optimal = j.at("optimal").get<bool>();
    row.tags = j.at("tags").get<std::vector<std::string>>();
    row.refuted_by = j.at("refuted_by").get<std::vector<std::string>>();
    if (!j.at("witness").is_null()) row.witness = witness_from_json(j.at("witness"));
    return row;
}

Json to_json(const ScanResult& r) {
    Json j;
    j["p"] = r.p;
    j["m"] = r.m;
    j["pi"] = r.pi;
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    j["rows"] = rows;
    Json tot;
    tot["rows"] = r.rows.size();
    tot["optimal"] = r.optimal_count;
    tot["tagged"] = r.tagged_count;
    j["totals"] = tot;
    return j;
}

Json to_json(const ProbeReport& r) {
    Json j;
    j["problem"] = std::string(to_string(r.id));
    j["p"] = r.p;
    j["m"] = r.m;
    j["in_statement"] = r.in_statement;
    Json inst = Json::array();
    for (const auto& i : r.instances) {
        Json e;
        e["h"] = i.h;
        e["e"] = i.e;
        e["valid"] = i.valid;
        e["coset_size"] = i.coset_size;
        e["d"] = i.d;
        e["optimal"] = i.optimal;
        e["note"] = i.note;
        inst.push_back(e);
    }
    j["instances"] = inst;
    j["all_optimal"] = r.all_optimal;
    return j;
}

std::string scan_csv(const ScanResult& r) {
    std::ostringstream os;
    os << "e_leader,coset_size,in_C1,d,d_exact,optimal,tags,refuted_by\n";
    for (const auto& row : r.rows) {
        os << row.e_leader << ',' << row.coset_size << ',' << row.in_C1 << ',' << row.d << ',' << row.d_exact << ','
           << row.optimal << ",\"" << join(row.tags, ';') << "\",\"" << join(row.refuted_by, ';') << "\"\n";
    }
    return os.str();
}

}  // namespace cyclopt
