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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "cyclopt/cyclotomy.hpp"
#include "cyclopt/errors.hpp"
#include "cyclopt/explorer.hpp"
#include "cyclopt/serialize.hpp"

using namespace cyclopt;
namespace fs = std::filesystem;

namespace {

const ScanRow* row_for(const ScanResult& r, u64 e) {
    const u64 leader = coset_leader(e, r.p, r.m);
    for (const ScanRow& row : r.rows)
        if (row.e_leader == leader) return &row;
    return nullptr;
}

fs::path temp_journal(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cyclopt_test_" + name + ".jsonl");
    fs::remove(p);
    return p;
}

std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("scan at (5, 2)") {
    const ScanResult r = scan(build_field(5, 2));
    CHECK(r.p == 5);
    CHECK(r.m == 2);
    CHECK(r.pi == field_json(*build_field(5, 2))["pi"].get<std::string>());
    for (u64 e : {23ULL, 15ULL}) {
        const ScanRow* row = row_for(r, e);
        REQUIRE(row);
        CHECK(row->optimal);
        CHECK_FALSE(row->tags.empty());
    }
    CHECK(row_for(r, 23)->e_leader == 19);
    CHECK(row_for(r, 15)->e_leader == 3);
    CHECK(r.rows.size() == scan_leaders(5, 2).size());
    u64 opt = 0, tagged = 0;
    for (const ScanRow& row : r.rows) {
        opt += row.optimal;
        tagged += !row.tags.empty();
    }
    CHECK(r.optimal_count == opt);
    CHECK(r.tagged_count == tagged);
    CHECK(r.resumed_rows == 0);
}

TEST_CASE("scan leaders partition the exponents") {
    for (auto [p, m] : {std::pair<u64, int>{5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {5, 4}}) {
        const u64 n = checked_pow(p, static_cast<unsigned>(m)) - 1;
        u64 total = coset_of(0, p, m).size() + coset_of(1, p, m).size();
        const Coset cs = coset_of(n / 2, p, m);
        if (!cs.contains(1)) total += cs.size();
        for (u64 e : scan_leaders(p, m)) {
            CHECK(e == coset_leader(e, p, m));
            CHECK_FALSE(cs.contains(e));
            CHECK_FALSE(in_C1(e, p, m));
            total += coset_size(e, p, m);
        }
        CHECK(total == n);
    }
}

TEST_CASE("scan rows are consistent") {
    for (auto [p, m] : {std::pair<u64, int>{5, 3}, {7, 2}, {11, 2}, {5, 4}}) {
        const ScanResult r = scan(build_field(p, m), {.threads = 4});
        for (const ScanRow& row : r.rows) {
            CHECK(row.optimal == (row.d == 4 && row.d_exact && row.coset_size == m));
            if (!row.tags.empty()) CHECK_MESSAGE(row.optimal, "p=", p, " m=", m, " e=", row.e_leader);
            if (!row.refuted_by.empty()) CHECK_FALSE(row.optimal);
            if (row.witness) CHECK(static_cast<int>(row.witness->weight()) == row.d);
            if (p == 5 && m == 3 && row.e_leader % 4 == 1) CHECK_FALSE(row.optimal);
        }
    }
}

TEST_CASE("scan is independent of the thread count") {
    const FieldPtr f = build_field(7, 3);
    const ScanResult a = scan(f, {.threads = 1});
    const ScanResult b = scan(f, {.threads = 6});
    CHECK(a.rows == b.rows);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("journal resume reproduces the scan") {
    const FieldPtr f = build_field(7, 3);
    const fs::path j = temp_journal("resume");
    ScanOptions opts{.threads = 3, .journal = j.string(), .checkpoint_every = 5};
    const ScanResult full = scan(f, opts);
    CHECK(full.resumed_rows == 0);
    auto lines = read_lines(j);
    REQUIRE(lines.size() == full.rows.size() + 1);

    // simulate an interrupted run: keep the header and 10 rows, then a torn line
    {
        std::ofstream out(j, std::ios::trunc);
        for (std::size_t i = 0; i < 11; ++i) out << lines[i] << '\n';
        out << lines[11].substr(0, lines[11].size() / 2);
    }
    const ScanResult resumed = scan(f, opts);
    CHECK(resumed.resumed_rows == 10);
    CHECK(resumed.rows == full.rows);
    CHECK(to_json(resumed).dump() == to_json(full).dump());

    // a fully journaled run does no work
    const ScanResult again = scan(f, opts);
    CHECK(again.resumed_rows == full.rows.size());
    CHECK(again.rows == full.rows);

    // a journal for another field is rejected
    CHECK_THROWS_AS(scan(build_field(7, 2), opts), InvalidArgument);
    fs::remove(j);
}

TEST_CASE("scan limits") {
    CHECK_THROWS_AS(scan(build_field(5, 5), {.scan_limit = 625}), LimitExceeded);
    CHECK_THROWS_AS(scan(build_field(5, 4, std::nullopt, 0)), LimitExceeded);
}

TEST_CASE("scan rows round-trip through JSON") {
    const ScanResult r = scan(build_field(5, 3));
    for (const ScanRow& row : r.rows) CHECK(scan_row_from_json(to_json(row)) == row);
    const std::string csv = scan_csv(r);
    CHECK(csv.rfind("e_leader,coset_size,in_C1,d,d_exact,optimal,tags,refuted_by\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.rows.size() + 1);
}

TEST_CASE("open problems at m = 3") {
    for (TheoremId id : {TheoremId::OP1, TheoremId::OP2}) {
        const ProbeReport rep = probe_open_problem(id, 3, 2);
        CHECK(rep.in_statement);
        CHECK(rep.all_optimal);
        CHECK_FALSE(rep.instances.empty());
        for (const ProbeInstance& in : rep.instances) {
            if (!in.valid) continue;
            CHECK(in.optimal);
            CHECK(in.d == 4);
            CHECK(in.e == theorem_exponent(id, 5, 3, in.h));
        }
    }
    for (const ProbeInstance& in : probe_open_problem(TheoremId::OP2, 3).instances) CHECK(in.h >= 1);
    CHECK(probe_open_problem(TheoremId::OP1, 3).instances.size() == 3);
    CHECK_FALSE(probe_open_problem(TheoremId::OP1, 4).in_statement);
    CHECK_FALSE(probe_open_problem(TheoremId::OP1, 2).all_optimal);
    CHECK_THROWS_AS(probe_open_problem(TheoremId::T_pm2, 3), InvalidArgument);
}
