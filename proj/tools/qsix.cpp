// Command-line front end: expand the implemented series families, run the
// identity suite, and list the registered identities.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsix/registry.hpp"
#include "qsix/render.hpp"

namespace {

using nlohmann::json;
using namespace qsix;

int cmd_expand(const std::string& series, std::optional<long> n, std::optional<long> order) {
    auto need_order = [&]() -> long {
        if (!order) throw CLI::ValidationError("--order is required for series " + series);
        if (*order < 0) throw CLI::ValidationError("--order must be nonnegative");
        return *order;
    };
    auto need_n = [&](long lo) -> long {
        if (!n) throw CLI::ValidationError("--n is required for series " + series);
        if (*n < lo) throw CLI::ValidationError("--n must be >= " + std::to_string(lo));
        return *n;
    };
    if (series == "S") {
        std::printf("%s\n", render_series(series_S(0, need_order())).c_str());
    } else if (series == "Sq") {
        std::printf("%s\n", render_series(series_S(1, need_order())).c_str());
    } else if (series == "calP") {
        std::printf("%s\n", render_series(euler_calP(need_order())).c_str());
    } else if (series == "P_ell") {
        std::printf("%s\n", render_series(tower_P(need_n(1), need_order())).c_str());
    } else if (series == "pentagonal") {
        std::printf("%s\n", render_series(pentagonal_product(need_order())).c_str());
    } else if (series == "f") {
        std::printf("%s\n", render(f_sum(need_n(0))).c_str());
    } else if (series == "F") {
        const long m = need_order();
        TruncSeries<Laurent> f(m);
        for (long k = 0; k <= m; ++k) f.coeff(k) = f_sum(k);
        std::printf("%s\n", render_series(f).c_str());
    } else if (series == "T") {
        std::printf("%s\n", render(cheb_T(need_n(0))).c_str());
    } else if (series == "U") {
        std::printf("%s\n", render(cheb_U(need_n(0))).c_str());
    } else if (series == "Talpha") {
        AlphaSeries t = t_alpha(need_order());
        for (long k = 0; k <= t.order(); ++k)
            std::printf("(x-1)^%ld: %s\n", k, render(t.coeff(k)).c_str());
    } else {
        throw CLI::ValidationError("unknown series: " + series);
    }
    return 0;
}

json report_to_json(const SuiteEntry& e) {
    json j;
    j["id"] = e.descriptor->id;
    j["paper_ref"] = e.descriptor->tag;
    j["order"] = e.report.order;
    j["status"] = to_string(e.report.status);
    j["expected"] = to_string(e.descriptor->expected);
    if (e.report.first_discrepancy) {
        j["first_discrepancy"] = {{"degree", e.report.first_discrepancy->degree},
                                  {"lhs", e.report.first_discrepancy->lhs},
                                  {"rhs", e.report.first_discrepancy->rhs}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    j["elapsed_ms"] = e.report.elapsed_ms;
    return j;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, std::optional<long> order,
               const std::string& format, int jobs) {
    if (!all && ids.empty())
        throw CLI::ValidationError("verify needs --all or at least one --id");
    SuiteResult result = run_identities(all ? std::vector<std::string>{} : ids, order, jobs);
    if (format == "json") {
        json doc;
        doc["suite"] = json::array();
        for (const auto& e : result.entries) doc["suite"].push_back(report_to_json(e));
        doc["summary"] = {{"pass", result.summary.pass},
                          {"fail", result.summary.fail},
                          {"error", result.summary.error}};
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        for (const auto& e : result.entries) {
            const bool matched = e.descriptor->expected == Expectation::report_only ||
                                 outcome_matches(e.descriptor->expected, e.report.status);
            std::printf("%-16s %-5s (expected %-11s) order=%-4ld %8.1f ms  %s\n",
                        e.descriptor->id.c_str(), to_string(e.report.status),
                        to_string(e.descriptor->expected), e.report.order, e.report.elapsed_ms,
                        matched ? "ok" : "UNEXPECTED");
            if (e.report.first_discrepancy)
                std::printf("    first discrepancy at degree %ld: %s vs %s\n",
                            e.report.first_discrepancy->degree,
                            e.report.first_discrepancy->lhs.c_str(),
                            e.report.first_discrepancy->rhs.c_str());
            for (const auto& note : e.report.notes) std::printf("    %s\n", note.c_str());
        }
        std::printf("summary: pass=%d fail=%d error=%d (%.1f ms)\n", result.summary.pass,
                    result.summary.fail, result.summary.error, result.wall_ms);
    }
    return (result.summary.fail == 0 && result.summary.error == 0) ? 0 : 1;
}

int cmd_list(const std::string& format) {
    if (format == "json") {
        json doc = json::array();
        for (const auto& d : identity_catalog())
            doc.push_back({{"id", d.id},
                           {"paper_ref", d.tag},
                           {"expected", to_string(d.expected)},
                           {"default_order", d.default_order},
                           {"description", d.description}});
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        std::printf("%-16s %-6s %-12s %-6s %s\n", "id", "tag", "expected", "order", "description");
        for (const auto& d : identity_catalog())
            std::printf("%-16s %-6s %-12s %-6ld %s\n", d.id.c_str(), d.tag.c_str(),
                        to_string(d.expected), d.default_order, d.description.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and Chebyshev identity engine"};
    app.require_subcommand(1);

    std::string series;
    std::optional<long> n_opt;
    std::optional<long> order_opt;
    std::vector<std::string> ids;
    bool all = false;
    std::string format = "text";
    int jobs = 1;

    CLI::App* expand = app.add_subcommand("expand", "print a series or polynomial expansion");
    expand->add_option("--series", series, "one of S, Sq, calP, P_ell, pentagonal, f, F, T, U, Talpha")
        ->required();
    expand->add_option("--n", n_opt, "index (for T, U, f, P_ell)");
    expand->add_option("--order", order_opt, "truncation order");

    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    CLI::Option* id_opt = verify->add_option("--id", ids, "identity id (repeatable)");
    verify->add_flag("--all", all, "run every registered identity")->excludes(id_opt);
    verify->add_option("--order", order_opt, "override the default order");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", jobs, "number of concurrent checks")->check(CLI::PositiveNumber);

    CLI::App* list = app.add_subcommand("list", "list registered identities");
    list->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(series, n_opt, order_opt);
        if (verify->parsed()) return cmd_verify(ids, all, order_opt, format, jobs);
        return cmd_list(format);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
