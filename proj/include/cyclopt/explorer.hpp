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

#ifndef CYCLOPT_EXPLORER_HPP
#define CYCLOPT_EXPLORER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclopt/distance.hpp"
#include "cyclopt/field.hpp"
#include "cyclopt/theorems.hpp"

namespace cyclopt {

inline constexpr u64 kDefaultScanLimit = 3125;

struct ScanOptions {
    unsigned threads = 1;
    u64 scan_limit = kDefaultScanLimit;
    /// Resumable journal; rows already present are not recomputed.
    std::optional<std::string> journal;
    u64 checkpoint_every = 1000;
    bool tag_theorems = true;
};

struct ScanRow {
    u64 e_leader = 0;
    int coset_size = 0;
    bool in_C1 = false;
    int d = 0;
    bool d_exact = false;
    /// d = 4 exactly with |C_e| = m, i.e. parameters [n, n - 2m - 2, 4].
    bool optimal = false;
    /// Results predicting optimality for this coset.
    std::vector<std::string> tags;
    /// Two-sided results predicting non-optimality.
    std::vector<std::string> refuted_by;
    std::optional<Witness> witness;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanResult {
    u64 p = 0;
    int m = 0;
    std::string pi;  // ascending coefficient list
    std::vector<ScanRow> rows;
    u64 optimal_count = 0;
    u64 tagged_count = 0;
    u64 resumed_rows = 0;  // rows read back from the journal
};

/// Names of the results that predict optimality for the coset of e.
std::vector<std::string> theorem_tags(const Field& f, u64 e);

/// Every coset leader in [2, n - 1] outside C_1 and C_s, ascending.
std::vector<u64> scan_leaders(u64 p, int m);

/// Builds, measures and tags every code C_(1,e,s) of the field.
/// Throws LimitExceeded when p^m exceeds the scan limit.
ScanResult scan(const FieldPtr& field, const ScanOptions& opts = {});

struct ProbeInstance {
    int h = 0;
    u64 e = 0;
    bool valid = false;  // code exists: 1 <= e < n, e outside C_1 and C_s
    int coset_size = 0;
    int d = 0;
    bool optimal = false;
    std::string note;
};

struct ProbeReport {
    TheoremId id = TheoremId::OP1;
    u64 p = 5;
    int m = 0;
    /// The problems are posed for odd m; even m is probed but kept apart.
    bool in_statement = false;
    std::vector<ProbeInstance> instances;
    bool all_optimal = false;
};

/// OP1: e = 4(5^h + 1), 0 <= h <= m - 1. OP2: e = 5^h - 2, 1 <= h <= m - 1.
/// Throws InvalidArgument for other ids or m < 1.
ProbeReport probe_open_problem(TheoremId id, int m, unsigned threads = 1,
                               u64 table_limit = kDefaultTableLimit);

}  // namespace cyclopt

#endif  // CYCLOPT_EXPLORER_HPP
