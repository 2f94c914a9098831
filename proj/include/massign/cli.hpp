#pragma once

// Command-line surface.  Subcommands: check, search, table1, ring-info,
// dickson, bounds.  TSV is the default rendering; --format json emits one
// document with the same fields in the same order.  Exit codes: 0 certified
// or success, 2 inconclusive / not found, 3 inapplicable, 1 usage or
// internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "admissibility.hpp"

namespace massign::cli {

using Record = nlohmann::ordered_json;

inline std::string tsv_value(const Record& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        return s.empty() ? "-" : s;
    }
    return v.dump();
}

inline std::string tsv_line(const Record& rec) {
    std::string line;
    bool first = true;
    for (const auto& item : rec.items()) {
        if (!first) line += '\t';
        line += tsv_value(item.value());
        first = false;
    }
    return line;
}

inline void emit_record(std::ostream& out, const Record& rec, const std::string& format) {
    if (format == "json")
        out << rec.dump() << "\n";
    else
        out << tsv_line(rec) << "\n";
}

inline void emit_records(std::ostream& out, const std::vector<Record>& recs,
                         const std::string& format) {
    if (format == "json") {
        Record arr = Record::array();
        for (const Record& r : recs) arr.push_back(r);
        out << arr.dump() << "\n";
    } else {
        for (const Record& r : recs) out << tsv_line(r) << "\n";
    }
}

inline int exit_code(Verdict v) {
    switch (v) {
        case Verdict::certified_admissible: return 0;
        case Verdict::inconclusive: return 2;
        case Verdict::inapplicable: return 3;
    }
    return 1;
}

inline Record check_record(const AdmissibilityReport& rep, bool timing) {
    Record rec;
    rec["d"] = rep.tuple.d;
    rec["l"] = rep.tuple.ell;
    rec["k"] = rep.tuple.k;
    rec["j"] = rep.tuple.j;
    rec["verdict"] = to_string(rep.verdict);
    if (rep.verdict == Verdict::inapplicable)
        rec["method"] = nullptr;
    else
        rec["method"] = to_string(rep.method);
    if (rep.witness)
        rec["witness"] = rep.witness_rendered;
    else
        rec["witness"] = nullptr;
    rec["ramos_lower"] = rep.bounds.ramos_lower;
    rec["mvz_upper"] = rep.bounds.mvz_upper;
    rec["theorem2_bound"] = rep.bounds.theorem2_bound;
    rec["note"] = rep.note;
    if (timing) rec["elapsed_ms"] = rep.elapsed_seconds * 1e3;
    return rec;
}

inline Method parse_method(const std::string& s) {
    if (s == "fast") return Method::fast;
    if (s == "oracle") return Method::oracle;
    return Method::both;
}

inline const std::vector<Tuple4>& table1_tuples() {
    static const std::vector<Tuple4> rows = {
        {8, 3, 2, 4},  {9, 3, 3, 3},   {11, 8, 2, 7},
        {17, 14, 2, 15}, {23, 11, 2, 15}, {47, 23, 2, 31},
    };
    return rows;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mass-assignment admissibility toolkit"};
    app.name("massign");
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"tsv", "json"};
    const std::vector<std::string> methods = {"fast", "oracle", "both"};

    // check
    int c_d = 0, c_l = 0, c_k = 0, c_j = 0;
    std::string c_method = "fast", c_format = "tsv";
    std::size_t c_budget = kDefaultOracleBudget;
    bool c_timing = false;
    CLI::App* cmd_check = app.add_subcommand("check", "certify one tuple (d, l, k, j)");
    cmd_check->add_option("--d", c_d, "ambient dimension")->required()->check(CLI::PositiveNumber);
    cmd_check->add_option("--l", c_l, "subspace dimension")->required()->check(CLI::PositiveNumber);
    cmd_check->add_option("--k", c_k, "hyperplanes per arrangement")->required()->check(CLI::PositiveNumber);
    cmd_check->add_option("--j", c_j, "number of mass assignments")->required()->check(CLI::PositiveNumber);
    cmd_check->add_option("--method", c_method, "membership engine")->check(CLI::IsMember(methods));
    cmd_check->add_option("--format", c_format, "output format")->check(CLI::IsMember(formats));
    cmd_check->add_option("--budget", c_budget, "oracle slice budget in matrix cells");
    cmd_check->add_flag("--timing", c_timing, "append elapsed_ms to the record");

    // search
    int s_k = 0, s_j = 0;
    long long s_dmax = 0;
    bool s_oracle = false, s_timing = false;
    std::string s_format = "tsv";
    std::size_t s_budget = kDefaultOracleBudget;
    CLI::App* cmd_search = app.add_subcommand("search", "least d <= dmax certified for (k, j)");
    cmd_search->add_option("--k", s_k, "hyperplanes per arrangement")->required()->check(CLI::PositiveNumber);
    cmd_search->add_option("--j", s_j, "number of mass assignments")->required()->check(CLI::PositiveNumber);
    cmd_search->add_option("--dmax", s_dmax, "largest dimension to try")->required()->check(CLI::PositiveNumber);
    cmd_search->add_flag("--with-oracle", s_oracle, "confirm the found d with the oracle engine");
    cmd_search->add_option("--format", s_format, "output format")->check(CLI::IsMember(formats));
    cmd_search->add_option("--budget", s_budget, "oracle slice budget in matrix cells");
    cmd_search->add_flag("--timing", s_timing, "(accepted for symmetry; no effect)");

    // table1
    std::string t_format = "tsv";
    bool t_timing = false;
    CLI::App* cmd_table1 = app.add_subcommand("table1", "certify the six reference tuples");
    cmd_table1->add_option("--format", t_format, "output format")->check(CLI::IsMember(formats));
    cmd_table1->add_flag("--timing", t_timing, "append elapsed_ms to each record");

    // ring-info
    int r_d = 0, r_l = 0;
    std::string r_format = "tsv";
    CLI::App* cmd_ring = app.add_subcommand("ring-info", "per-degree ranks and dual classes of H*(G_l(R^d))");
    cmd_ring->add_option("--d", r_d, "ambient dimension")->required()->check(CLI::PositiveNumber);
    cmd_ring->add_option("--l", r_l, "subspace dimension")->required()->check(CLI::PositiveNumber);
    cmd_ring->add_option("--format", r_format, "output format")->check(CLI::IsMember(formats));

    // dickson
    int dk_k = 0;
    std::string dk_format = "tsv";
    CLI::App* cmd_dickson = app.add_subcommand("dickson", "Delta_k and the coefficient family D_{k,i}");
    cmd_dickson->add_option("--k", dk_k, "variable count")->required()->check(CLI::PositiveNumber);
    cmd_dickson->add_option("--format", dk_format, "output format")->check(CLI::IsMember(formats));

    // bounds
    int b_k = 0, b_j = 0;
    std::string b_format = "tsv";
    CLI::App* cmd_bounds = app.add_subcommand("bounds", "classical bounds and the sufficient dimension");
    cmd_bounds->add_option("--k", b_k, "hyperplanes per arrangement")->required()->check(CLI::PositiveNumber);
    cmd_bounds->add_option("--j", b_j, "number of mass assignments")->required()->check(CLI::PositiveNumber);
    cmd_bounds->add_option("--format", b_format, "output format")->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_check)) {
            AdmissibilityReport rep = check(Tuple4{c_d, c_l, c_k, c_j}, parse_method(c_method), c_budget);
            emit_record(out, check_record(rep, c_timing), c_format);
            return exit_code(rep.verdict);
        }

        if (app.got_subcommand(cmd_search)) {
            SearchResult res = search_min_d(s_k, s_j, s_dmax);
            if (res.min_d && s_oracle && *res.min_d >= s_k + 1) {
                // Engine agreement is asserted inside check(); l = k is the
                // smallest subspace dimension the question admits.
                check(Tuple4{static_cast<int>(*res.min_d), s_k, s_k, s_j}, Method::both, s_budget);
            }
            Record rec;
            rec["k"] = res.k;
            rec["j"] = res.j;
            if (res.min_d)
                rec["min_d"] = *res.min_d;
            else
                rec["min_d"] = nullptr;
            rec["ramos_lower"] = res.bounds.ramos_lower;
            rec["theorem2_bound"] = res.bounds.theorem2_bound;
            emit_record(out, rec, s_format);
            return res.min_d ? 0 : 2;
        }

        if (app.got_subcommand(cmd_table1)) {
            std::vector<Record> recs;
            bool all_certified = true;
            for (const Tuple4& t : table1_tuples()) {
                AdmissibilityReport rep = check(t, Method::fast);
                all_certified = all_certified && rep.verdict == Verdict::certified_admissible;
                recs.push_back(check_record(rep, t_timing));
            }
            emit_records(out, recs, t_format);
            return all_certified ? 0 : 1;
        }

        if (app.got_subcommand(cmd_ring)) {
            GrassmannSpec spec{r_d, r_l};
            validate(spec);
            auto table = dual_classes(spec);
            if (r_format == "json") {
                Record rec;
                rec["d"] = r_d;
                rec["l"] = r_l;
                Record ranks = Record::array();
                for (long long deg = 0; deg <= top_degree(spec); ++deg)
                    ranks.push_back(graded_basis(spec, deg)->rank());
                rec["ranks"] = ranks;
                Record duals = Record::array();
                for (const Poly& p : table->entries) duals.push_back(to_string(p));
                rec["dual_classes"] = duals;
                out << rec.dump() << "\n";
            } else {
                for (long long deg = 0; deg <= top_degree(spec); ++deg)
                    out << deg << '\t' << graded_basis(spec, deg)->rank() << "\n";
                for (std::size_t r = 0; r < table->entries.size(); ++r)
                    out << "wb" << r << '\t' << to_string(table->entries[r]) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_dickson)) {
            auto fam = dickson_family(dk_k);
            if (dk_format == "json") {
                Record rec;
                rec["k"] = dk_k;
                rec["delta"] = to_string(fam->top);
                Record coeffs = Record::array();
                for (const Poly& p : fam->coeffs) coeffs.push_back(to_string(p));
                rec["coeffs"] = coeffs;
                out << rec.dump() << "\n";
            } else {
                out << "Delta" << dk_k << '\t' << to_string(fam->top) << "\n";
                for (std::size_t i = 0; i < fam->coeffs.size(); ++i)
                    out << "D[" << dk_k << "," << i << "]\t" << to_string(fam->coeffs[i]) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_bounds)) {
            Record rec;
            rec["k"] = b_k;
            rec["j"] = b_j;
            rec["ramos_lower"] = ramos_lower(b_j, b_k);
            rec["mvz_upper"] = mvz_upper(b_j, b_k);
            rec["theorem2_bound"] = theorem2_bound(b_k, b_j);
            emit_record(out, rec, b_format);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace massign::cli
