// Command-line front end: verifies built-in or user-supplied q-series
// identities and dumps series expansions.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qverify/catalog.hpp"
#include "qverify/eval.hpp"

namespace {

using nlohmann::json;

json report_to_json(const qv::VerificationReport& r) {
    json j;
    j["id"] = r.id;
    j["order"] = r.order_checked;
    j["pass"] = r.pass;
    if (r.first_mismatch) {
        j["mismatch"] = {{"exp", r.first_mismatch->exp},
                         {"lhs", r.first_mismatch->lhs},
                         {"rhs", r.first_mismatch->rhs}};
    } else {
        j["mismatch"] = nullptr;
    }
    j["ms"] = r.wall_ms;
    return j;
}

void print_table(const std::vector<qv::VerificationReport>& reports) {
    std::size_t idw = 8;
    for (const auto& r : reports) idw = std::max(idw, r.id.size());
    std::printf("%-*s  %6s  %-6s  %8s  %s\n", static_cast<int>(idw), "id", "order", "result",
                "ms", "detail");
    for (const auto& r : reports) {
        std::string detail;
        if (!r.error.empty()) detail = "error: " + r.error;
        else if (r.first_mismatch)
            detail = "first mismatch at q^" + std::to_string(r.first_mismatch->exp) + ": " +
                     r.first_mismatch->lhs + " != " + r.first_mismatch->rhs;
        std::printf("%-*s  %6lld  %-6s  %8lld  %s\n", static_cast<int>(idw), r.id.c_str(),
                    static_cast<long long>(r.order_checked), r.pass ? "pass" : "FAIL",
                    static_cast<long long>(r.wall_ms), detail.c_str());
    }
    std::size_t passed = 0;
    for (const auto& r : reports)
        if (r.pass) ++passed;
    std::printf("%zu/%zu passed\n", passed, reports.size());
}

void print_tsv(const std::vector<qv::VerificationReport>& reports) {
    std::printf("id\torder\tpass\tmismatch_exp\tmismatch_lhs\tmismatch_rhs\tms\n");
    for (const auto& r : reports) {
        std::printf("%s\t%lld\t%s\t%s\t%s\t%s\t%lld\n", r.id.c_str(),
                    static_cast<long long>(r.order_checked), r.pass ? "true" : "false",
                    r.first_mismatch ? std::to_string(r.first_mismatch->exp).c_str() : "",
                    r.first_mismatch ? r.first_mismatch->lhs.c_str() : "",
                    r.first_mismatch ? r.first_mismatch->rhs.c_str() : "",
                    static_cast<long long>(r.wall_ms));
    }
}

int emit_reports(const std::vector<qv::VerificationReport>& reports, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::printf("%s\n", arr.dump(2).c_str());
        for (const auto& r : reports)
            if (!r.error.empty())
                std::fprintf(stderr, "%s: evaluation error: %s\n", r.id.c_str(), r.error.c_str());
    } else if (format == "tsv") {
        print_tsv(reports);
    } else {
        print_table(reports);
    }
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int dump_series(const std::string& expr_text, std::int64_t order, const std::string& format) {
    const qv::Series s = qv::eval_expr(expr_text, order).truncated(order + 1);
    if (format == "json") {
        json j;
        j["val"] = s.val();
        if (s.is_exact()) j["prec"] = nullptr;
        else j["prec"] = s.prec();
        json rows = json::array();
        for (const auto& [e, c] : s.machine_rows())
            rows.push_back({e, c[0].get_str(), c[1].get_str(), c[2].get_str(), c[3].get_str()});
        j["coeffs"] = rows;
        std::printf("%s\n", j.dump(2).c_str());
    } else if (format == "tsv") {
        std::printf("exp\tc0\tc1\tc2\tc3\n");
        for (const auto& [e, c] : s.machine_rows())
            std::printf("%lld\t%s\t%s\t%s\t%s\n", static_cast<long long>(e),
                        c[0].get_str().c_str(), c[1].get_str().c_str(), c[2].get_str().c_str(),
                        c[3].get_str().c_str());
    } else {
        std::printf("%s\n", s.to_string().c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qverify: exact verification of q-series identities"};
    app.get_formatter()->column_width(34);

    bool all = false;
    bool list = false;
    std::vector<std::string> identity_ids;
    std::string file_path;
    std::string dump_expr;
    std::optional<std::int64_t> order;
    std::string format = "table";
    int jobs = 1;

    app.add_flag("--all", all, "verify every identity in the built-in catalog");
    app.add_option("--identity", identity_ids, "verify one catalog identity by id (repeatable)");
    app.add_option("--file", file_path, "verify identities from a file");
    app.add_option("--order", order, "truncation order q^N for the comparison");
    app.add_option("--report", format, "output format")
        ->check(CLI::IsMember({"table", "json", "tsv"}));
    app.add_flag("--list", list, "print the catalog ids and default orders");
    app.add_option("--dump", dump_expr, "evaluate an expression and print its series");
    app.add_option("--jobs", jobs, "verify entries in parallel")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::printf("%s", app.help().c_str());
        return 0;
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n%s", e.what(), app.help().c_str());
        return 2;
    }

    const int modes = static_cast<int>(all) + static_cast<int>(list) +
                      static_cast<int>(!identity_ids.empty()) +
                      static_cast<int>(!file_path.empty()) + static_cast<int>(!dump_expr.empty());
    if (modes != 1) {
        std::fprintf(stderr, "choose exactly one of --all, --identity, --file, --list, --dump\n%s",
                     app.help().c_str());
        return 2;
    }
    if (order && *order < 1) {
        std::fprintf(stderr, "--order must be >= 1\n");
        return 2;
    }

    try {
        if (list) {
            for (const auto& s : qv::builtin_catalog())
                std::printf("%s %lld\n", s.id.c_str(), static_cast<long long>(s.default_order));
            return 0;
        }
        if (!dump_expr.empty()) return dump_series(dump_expr, order.value_or(20), format);

        std::vector<qv::IdentitySpec> specs;
        if (all) {
            specs = qv::builtin_catalog();
        } else if (!identity_ids.empty()) {
            for (const auto& id : identity_ids) {
                const qv::IdentitySpec* s = qv::find_identity(id);
                if (!s) {
                    std::fprintf(stderr, "unknown identity '%s' (try --list)\n", id.c_str());
                    return 2;
                }
                specs.push_back(*s);
            }
        } else {
            std::ifstream in(file_path);
            if (!in.good()) {
                std::fprintf(stderr, "cannot open '%s'\n", file_path.c_str());
                return 2;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            for (const auto& stmt : qv::parse_identity_file(buf.str())) {
                qv::IdentitySpec s;
                s.id = stmt.name;
                s.lhs = stmt.lhs;
                s.rhs = stmt.rhs;
                s.lhs_src = qv::render(stmt.lhs);
                s.rhs_src = qv::render(stmt.rhs);
                s.default_order = stmt.order.value_or(50);
                specs.push_back(std::move(s));
            }
        }
        const auto reports = qv::verify_specs(specs, order, jobs);
        return emit_reports(reports, format);
    } catch (const qv::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 1;
    } catch (const qv::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
