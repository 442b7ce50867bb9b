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

#include "cyclopt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cyclopt/codes.hpp"
#include "cyclopt/errors.hpp"
#include "cyclopt/explorer.hpp"

namespace cyclopt {

namespace {

struct Config {
    u64 p = 0;
    int m = 0;
    u64 e = 0;
    int h = 0;
    int k = 0;
    std::string sign = "+";
    std::string pi;
    std::string format = "json";
    unsigned threads = 1;
    u64 scan_limit = kDefaultScanLimit;
    u64 table_limit = kDefaultTableLimit;
    std::string journal;
    bool expect_optimal = false;
    int brute_force = 0;
    std::string target;  // theorem id or open problem
};

unsigned default_threads() {
    if (const char* env = std::getenv("CYCLOPT_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024UL));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

FieldPtr field_of(const Config& c) {
    if (c.m < 1) throw InvalidArgument("-m must be a positive integer");
    std::optional<Poly> pi;
    if (!c.pi.empty()) pi = parse_coeff_list(PrimeModulus(c.p), c.pi);
    return build_field(c.p, c.m, pi, c.table_limit);
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << (first ? "" : ",") << csv_field(it.key());
            first = false;
        }
        os << '\n';
        first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << (first ? "" : ",") << csv_field(scalar_text(it.value()));
            first = false;
        }
        os << '\n';
        return os.str();
    }
    for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << ": " << scalar_text(it.value()) << '\n';
    return os.str();
}

std::string scan_text(const ScanResult& r) {
    std::ostringstream os;
    os << "p=" << r.p << " m=" << r.m << " pi=" << r.pi << " rows=" << r.rows.size() << " optimal=" << r.optimal_count
       << " tagged=" << r.tagged_count << '\n';
    for (const auto& row : r.rows) {
        os << row.e_leader << "\t|C_e|=" << row.coset_size << "\td=" << row.d << (row.d_exact ? "" : "+")
           << (row.optimal ? "\toptimal" : "\t-");
        for (const auto& t : row.tags) os << ' ' << t;
        os << '\n';
    }
    return os.str();
}

int sign_of(const std::string& s) {
    if (s == "+" || s == "plus" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "minus" || s == "-1") return -1;
    throw InvalidArgument("--sign must be + or -");
}

TheoremVerdict run_theorem(TheoremId id, const Config& c, bool has_e, bool has_sign) {
    const FieldPtr f = field_of(c);
    auto need_e = [&] {
        if (!has_e) throw InvalidArgument(std::string(to_string(id)) + " needs -e");
        return c.e;
    };
    switch (id) {
        case TheoremId::T_pm2: return check_T_pm2(*f);
        case TheoremId::T_s_ph1: return check_T_s_ph1(*f, c.h);
        case TheoremId::T_cong_plus:
        case TheoremId::T_cong_minus: {
            const int sign = id == TheoremId::T_cong_plus ? 1 : -1;
            if (has_sign && sign_of(c.sign) != sign) throw InvalidArgument("--sign contradicts the theorem id");
            return check_T_cong(*f, c.k, c.h, sign);
        }
        case TheoremId::T_5_half: return check_T_5_half(*f, c.h);
        case TheoremId::T_sm1: return check_T_sm1(*f);
        case TheoremId::C_sm1_p5: return check_C_sm1_p5(*f);
        case TheoremId::C_sm1_p7: return check_C_sm1_p7(*f);
        case TheoremId::P_quinary_iff: return check_P_quinary_iff(*f, need_e());
        case TheoremId::T_q_e3mod4: return check_T_q_e3mod4(*f, need_e());
        case TheoremId::T_45h3: return check_T_45h3(*f, c.h);
        case TheoremId::T_5_minus3: return check_T_5_minus3(*f);
        default: break;
    }
    throw InvalidArgument("unsupported theorem id");
}

bool quinary_only(TheoremId id) {
    switch (id) {
        case TheoremId::T_5_half:
        case TheoremId::C_sm1_p5:
        case TheoremId::P_quinary_iff:
        case TheoremId::T_q_e3mod4:
        case TheoremId::T_45h3:
        case TheoremId::T_5_minus3:
        case TheoremId::OP1:
        case TheoremId::OP2: return true;
        default: return false;
    }
}

}  // namespace

Json describe_code(const CodeSpec& code, const std::optional<DistanceReport>& report) {
    Json j = code_json(code);
    if (report) {
        j["d"] = report->d;
        j["optimal"] = is_optimal(code, *report);
    } else {
        j["d"] = nullptr;
        j["optimal"] = nullptr;
    }
    Json tags = Json::array();
    for (const auto& t : theorem_tags(*code.field, code.e)) tags.push_back(t);
    j["theorem_tags"] = tags;
    return j;
}

CliResult run_cli(const std::vector<std::string>& args) {
    Config c;
    c.threads = default_threads();
    CLI::App app{"Optimal cyclic codes C_(1,e,s): construction, distance, theorem checks", "cyclopt"};
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1);

    auto add_field = [&](CLI::App* sub, bool p_required) {
        auto* po = sub->add_option("-p", c.p, "Odd prime");
        if (p_required) po->required();
        sub->add_option("-m", c.m, "Extension degree")->required();
        sub->add_option("--pi", c.pi, "Defining polynomial, ascending coefficients, e.g. 3,4,5,0,1");
        sub->add_option("--table-limit", c.table_limit, "Largest field with exp/log tables");
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "Worker threads (default: CYCLOPT_THREADS or all cores)")
            ->check(CLI::Range(1u, 1024u));
    };

    auto* construct = app.add_subcommand("construct", "Build the code and print its descriptor");
    add_field(construct, true);
    construct->add_option("-e", c.e, "Exponent")->required();

    auto* verify = app.add_subcommand("verify", "Measure the minimum distance");
    add_field(verify, true);
    add_threads(verify);
    verify->add_option("-e", c.e, "Exponent")->required();
    verify->add_option("--brute-force", c.brute_force, "Use the support-enumeration oracle up to this weight")
        ->check(CLI::Range(1, 4));
    verify->add_flag("--expect-optimal", c.expect_optimal, "Exit 1 unless the code is optimal");

    auto* theorem = app.add_subcommand("check-theorem", "Evaluate one result's hypotheses and prediction");
    theorem->add_option("theorem", c.target, "Theorem id, e.g. T_pm2")->required();
    add_field(theorem, false);
    add_threads(theorem);
    auto* e_opt = theorem->add_option("-e", c.e, "Exponent (criteria taking e)");
    theorem->add_option("-h", c.h, "Parameter h");
    theorem->add_option("-k", c.k, "Parameter k");
    auto* sign_opt = theorem->add_option("--sign", c.sign, "Congruence sign, + or -");
    theorem->add_flag("--expect-optimal", c.expect_optimal, "Exit 1 unless optimality is predicted");

    auto* scan_cmd = app.add_subcommand("scan", "Scan every coset leader of the field");
    add_field(scan_cmd, true);
    add_threads(scan_cmd);
    scan_cmd->add_option("--scan-limit", c.scan_limit, "Largest p^m accepted");
    scan_cmd->add_option("--journal", c.journal, "Resumable journal file");

    auto* open = app.add_subcommand("open-problem", "Probe OP1 or OP2 at p = 5");
    open->add_option("problem", c.target, "OP1 or OP2")->required()->check(CLI::IsMember({"OP1", "OP2"}));
    open->add_option("-m", c.m, "Extension degree")->required();
    open->add_option("--table-limit", c.table_limit, "Largest field with exp/log tables");
    open->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    add_threads(open);
    open->add_flag("--expect-optimal", c.expect_optimal, "Exit 1 unless every instance is optimal");

    auto* info = app.add_subcommand("field-info", "Describe the field F_{p^m}");
    add_field(info, true);

    CliResult res;
    std::ostringstream out, err;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        res.exit_code = code == 0 ? kExitOk : kExitParams;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    try {
        if (construct->parsed()) {
            const CodeSpec code = construct_code(c.e, field_of(c));
            std::optional<DistanceReport> r;
            if (code.field->has_tables()) r = min_distance(code, 1);
            out << render(describe_code(code, r), c.format);
        } else if (verify->parsed()) {
            const CodeSpec code = construct_code(c.e, field_of(c));
            const DistanceReport r =
                c.brute_force > 0 ? brute_force_min_distance(code, c.brute_force) : min_distance(code, c.threads);
            Json j = describe_code(code, r);
            j["distance"] = to_json(r);
            out << render(j, c.format);
            if (c.expect_optimal && !is_optimal(code, r)) res.exit_code = kExitExpectation;
        } else if (theorem->parsed()) {
            const auto id = parse_theorem_id(c.target);
            if (!id) throw InvalidArgument("unknown theorem id " + c.target);
            if (c.p == 0) {
                if (!quinary_only(*id)) throw InvalidArgument("-p is required for " + c.target);
                c.p = 5;
            }
            if (*id == TheoremId::OP1 || *id == TheoremId::OP2) {
                if (c.p != 5) throw InvalidArgument("open problems are posed for p = 5");
                const ProbeReport rep = probe_open_problem(*id, c.m, c.threads, c.table_limit);
                out << render(to_json(rep), c.format);
                if (c.expect_optimal && !rep.all_optimal) res.exit_code = kExitExpectation;
            } else {
                const TheoremVerdict v = run_theorem(*id, c, e_opt->count() > 0, sign_opt->count() > 0);
                out << render(to_json(v), c.format);
                if (c.expect_optimal && v.predicted != Prediction::kOptimal) res.exit_code = kExitExpectation;
            }
        } else if (scan_cmd->parsed()) {
            ScanOptions opts;
            opts.threads = c.threads;
            opts.scan_limit = c.scan_limit;
            if (!c.journal.empty()) opts.journal = c.journal;
            const ScanResult r = scan(field_of(c), opts);
            if (c.format == "csv") {
                out << scan_csv(r);
            } else if (c.format == "text") {
                out << scan_text(r);
            } else {
                out << to_json(r).dump(2) << '\n';
            }
        } else if (open->parsed()) {
            const auto id = *parse_theorem_id(c.target);
            const ProbeReport rep = probe_open_problem(id, c.m, c.threads, c.table_limit);
            out << render(to_json(rep), c.format);
            if (c.expect_optimal && !rep.all_optimal) res.exit_code = kExitExpectation;
        } else if (info->parsed()) {
            out << render(field_json(*field_of(c)), c.format);
        }
    } catch (const CosetOverlap& ex) {
        err << "error: " << ex.what() << '\n';
        res.exit_code = kExitOverlap;
    } catch (const NotPrimitive& ex) {
        err << "error: " << ex.what() << '\n';
        res.exit_code = kExitPrimitivity;
    } catch (const LimitExceeded& ex) {
        err << "error: " << ex.what() << '\n';
        res.exit_code = kExitLimit;
    } catch (const InvalidArgument& ex) {
        err << "error: " << ex.what() << '\n';
        res.exit_code = kExitParams;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        res.exit_code = kExitExpectation;
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace cyclopt
