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

#include "cyclopt/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "cyclopt/codes.hpp"
#include "cyclopt/cyclotomy.hpp"
#include "cyclopt/errors.hpp"
#include "cyclopt/serialize.hpp"

namespace cyclopt {

namespace {

struct TagSets {
    std::map<u64, std::vector<std::string>> optimal;
    std::map<u64, std::vector<std::string>> refuted;
};

TagSets family_tags(const Field& f) {
    TagSets t;
    for (const TheoremVerdict& v : family_verdicts(f)) {
        for (const FamilyMember& mem : v.members) {
            if (mem.predicted == Prediction::kOptimal) t.optimal[mem.leader].push_back(v.tag());
            if (mem.predicted == Prediction::kNotOptimal) t.refuted[mem.leader].push_back(v.tag());
        }
    }
    return t;
}

Json journal_header(const Field& f) {
    Json h;
    h["journal"] = "cyclopt-scan";
    h["p"] = f.p();
    h["m"] = f.m();
    h["pi"] = to_coeff_list(f.pi());
    return h;
}

class Journal {
  public:
    Journal(std::string path, const Field& f, u64 every) : path_(std::move(path)), every_(std::max<u64>(every, 1)) {
        const Json header = journal_header(f);
        std::ifstream in(path_);
        std::string line;
        if (in && std::getline(in, line) && !line.empty()) {
            Json got = Json::parse(line, nullptr, false);
            if (got.is_discarded() || got != header) {
                throw InvalidArgument("journal " + path_ + " belongs to a different (p, m, pi)");
            }
            std::streamoff good_end = in.tellg();
            bool torn = false;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                Json j = Json::parse(line, nullptr, false);
                if (j.is_discarded() || in.eof()) {  // torn final line from an interrupted run
                    torn = true;
                    break;
                }
                ScanRow row = scan_row_from_json(j);
                loaded_.emplace(row.e_leader, std::move(row));
                good_end = in.tellg();
            }
            in.close();
            // drop the fragment so appended rows start on a fresh line
            if (torn) std::filesystem::resize_file(path_, static_cast<std::uintmax_t>(good_end));
        } else {
            std::ofstream out(path_, std::ios::trunc);
            if (!out) throw InvalidArgument("cannot write journal " + path_);
            out << header.dump() << '\n';
        }
    }

    ~Journal() {
        try {
            flush();
        } catch (...) {
        }
    }

    const std::map<u64, ScanRow>& loaded() const { return loaded_; }

    void record(const ScanRow& row) {
        std::lock_guard lock(mu_);
        pending_.push_back(to_json(row).dump());
        if (pending_.size() >= every_) flush_locked();
    }

    void flush() {
        std::lock_guard lock(mu_);
        flush_locked();
    }

  private:
    void flush_locked() {
        if (pending_.empty()) return;
        std::ofstream out(path_, std::ios::app);
        for (const auto& l : pending_) out << l << '\n';
        out.flush();
        pending_.clear();
    }

    std::string path_;
    u64 every_;
    std::map<u64, ScanRow> loaded_;
    std::vector<std::string> pending_;
    std::mutex mu_;
};

ScanRow measure(const FieldPtr& field, u64 leader, const TagSets* tags) {
    const Field& f = *field;
    const CodeSpec code = construct_code(leader, field);
    const DistanceReport r = min_distance(code, 1);
    ScanRow row;
    row.e_leader = leader;
    row.coset_size = code.coset_size_e;
    row.in_C1 = false;
    row.d = r.d;
    row.d_exact = r.exact;
    row.optimal = is_optimal(code, r);
    row.witness = r.witness;
    if (tags) {
        if (auto it = tags->optimal.find(leader); it != tags->optimal.end()) row.tags = it->second;
        if (auto it = tags->refuted.find(leader); it != tags->refuted.end()) row.refuted_by = it->second;
        for (const TheoremVerdict& v : criterion_verdicts(f, leader)) {
            if (v.predicted == Prediction::kOptimal) row.tags.push_back(v.tag());
            if (v.predicted == Prediction::kNotOptimal) row.refuted_by.push_back(v.tag());
        }
    }
    return row;
}

}  // namespace

std::vector<std::string> theorem_tags(const Field& f, u64 e) {
    const u64 leader = coset_leader(e, f.p(), f.m());
    const TagSets t = family_tags(f);
    std::vector<std::string> out;
    if (auto it = t.optimal.find(leader); it != t.optimal.end()) out = it->second;
    for (const TheoremVerdict& v : criterion_verdicts(f, leader)) {
        if (v.predicted == Prediction::kOptimal) out.push_back(v.tag());
    }
    return out;
}

std::vector<u64> scan_leaders(u64 p, int m) {
    const u64 n = checked_pow(p, static_cast<unsigned>(m)) - 1;
    std::vector<u64> out;
    for (u64 e : coset_leaders(p, m)) {
        if (e < 2 || e == n / 2 || in_C1(e, p, m)) continue;
        out.push_back(e);
    }
    return out;
}

ScanResult scan(const FieldPtr& field, const ScanOptions& opts) {
    const Field& f = *field;
    if (f.size() > opts.scan_limit) {
        throw LimitExceeded("p^m = " + std::to_string(f.size()) + " exceeds the scan limit " +
                            std::to_string(opts.scan_limit));
    }
    if (!f.has_tables()) throw LimitExceeded("scan needs field tables; raise --table-limit");

    const std::vector<u64> leaders = scan_leaders(f.p(), f.m());
    std::optional<TagSets> tags;
    if (opts.tag_theorems) tags = family_tags(f);
    std::optional<Journal> journal;
    if (opts.journal) journal.emplace(*opts.journal, f, opts.checkpoint_every);

    ScanResult res;
    res.p = f.p();
    res.m = f.m();
    res.pi = to_coeff_list(f.pi());
    std::vector<std::optional<ScanRow>> rows(leaders.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < leaders.size(); ++i) {
        if (journal) {
            if (auto it = journal->loaded().find(leaders[i]); it != journal->loaded().end()) {
                rows[i] = it->second;
                ++res.resumed_rows;
                continue;
            }
        }
        todo.push_back(i);
    }

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= todo.size()) return;
            const std::size_t i = todo[t];
            try {
                rows[i] = measure(field, leaders[i], tags ? &*tags : nullptr);
                if (journal) journal->record(*rows[i]);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!failure) failure = std::current_exception();
                next.store(todo.size());
                return;
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(todo.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (journal) journal->flush();
    if (failure) std::rethrow_exception(failure);

    for (auto& r : rows) {
        res.optimal_count += r->optimal ? 1 : 0;
        res.tagged_count += r->tags.empty() ? 0 : 1;
        res.rows.push_back(std::move(*r));
    }
    return res;
}

ProbeReport probe_open_problem(TheoremId id, int m, unsigned threads, u64 table_limit) {
    if (id != TheoremId::OP1 && id != TheoremId::OP2) throw InvalidArgument("open problems are OP1 and OP2");
    if (m < 1) throw InvalidArgument("m must be positive");
    ProbeReport rep;
    rep.id = id;
    rep.m = m;
    rep.in_statement = m % 2 == 1;
    const FieldPtr field = build_field(5, m, std::nullopt, table_limit);
    const int h0 = id == TheoremId::OP1 ? 0 : 1;
    for (int h = h0; h < m; ++h) {
        ProbeInstance inst;
        inst.h = h;
        inst.e = theorem_exponent(id, 5, m, h);
        if (inst.e == 0) {
            inst.note = "e = 0 (mod n)";
        } else {
            inst.coset_size = coset_size(inst.e, 5, m);
            try {
                const CodeSpec code = construct_code(inst.e, field);
                const DistanceReport r = min_distance(code, threads);
                inst.valid = true;
                inst.d = r.d;
                inst.optimal = is_optimal(code, r);
                if (r.d == 4 && inst.coset_size < m) inst.note = "|C_e| < m: not of the optimal dimension";
            } catch (const CosetOverlap& ex) {
                inst.note = ex.what();
            }
        }
        rep.instances.push_back(std::move(inst));
    }
    rep.all_optimal = !rep.instances.empty() &&
                      std::all_of(rep.instances.begin(), rep.instances.end(), [](const ProbeInstance& i) {
                          return i.valid && i.optimal;
                      });
    return rep;
}

}  // namespace cyclopt
