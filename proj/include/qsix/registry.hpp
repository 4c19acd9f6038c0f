#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qsix/chebyshev.hpp"
#include "qsix/pentagonal.hpp"
#include "qsix/report.hpp"

namespace qsix {

// One registered identity: a stable id, the tag of its source formula, an
// order-parameterized check, the expected outcome and a default order.
// The two sides of every check are produced by disjoint code paths; a check
// whose expected status is `fail` encodes a known misprint, and the suite
// is green exactly when that check fails.
struct IdentityDescriptor {
    std::string id;
    std::string tag;
    std::string description;
    Expectation expected;
    long default_order;
    std::function<VerificationReport(long)> check;
};

inline const std::vector<IdentityDescriptor>& identity_catalog() {
    static const std::vector<IdentityDescriptor> catalog = [] {
        std::vector<IdentityDescriptor> c;
        auto add = [&c](std::string id, std::string tag, std::string desc, Expectation exp,
                        long order, std::function<VerificationReport(long)> fn) {
            c.push_back({std::move(id), std::move(tag), std::move(desc), exp, order, std::move(fn)});
        };
        add("classic-1.6", "1.6", "6-periodic alternating binomial sums", Expectation::pass, 200,
            check_classic_16);
        add("ansatz-2.16", "2.16", "q-sums against the six-case closed form, both a-modes",
            Expectation::pass, 60, check_ansatz_216);
        add("series-2.21", "2.21", "S(x) expansion vs sparse two-block form", Expectation::pass,
            60, check_series_221);
        add("series-2.23", "2.23", "S(x,q) expansion vs sparse three-block form",
            Expectation::pass, 60, check_series_223);
        add("tower-R-2.31", "2.31", "nested R(x,y) tower, three routes and q=1 limit",
            Expectation::pass, 12, check_tower_R_231);
        add("pentagonal-3.3", "3.3", "Euler product vs pentagonal-number sum", Expectation::pass,
            100, check_pentagonal_33);
        add("jacobi-3.4", "3.4", "triple product in (Q,z) plus substitution to the Euler product",
            Expectation::pass, 12, check_jacobi_34);
        add("telescope-3.9", "3.9", "multivariate telescoping of finite products",
            Expectation::pass, 5, check_telescope_39);
        add("tower-3.11", "3.11", "tower recursion and the product anchor", Expectation::pass, 40,
            check_tower_311);
        add("tower-3.15", "3.15", "tower members vs sparse closed form", Expectation::pass, 40,
            check_tower_315);
        add("bar-3.19", "3.19", "bar equality and the x = q^l specialization harness",
            Expectation::pass, 40, check_bar_319);
        add("calP-4.10", "4.10", "calP expansion, closed form, functional equation, S-relation",
            Expectation::pass, 60, check_calP_410);
        add("funcS-4.13", "4.13", "functional-equation residual of S(x)", Expectation::pass, 60,
            check_funcS_413);
        add("rec-5.19", "5.19", "f-family recurrence and the stabilized limit series",
            Expectation::pass, 40, check_rec_519);
        add("qinv-5.15", "5.15", "q -> 1/q transformation laws", Expectation::pass, 10,
            check_qinv_515);
        add("genF-5.23", "5.23", "generating function of f_n, series form and functional equation",
            Expectation::pass, 30, check_genF_523);
        add("rec-5.25", "5.25", "floor-exponent recurrence, a = 1 family", Expectation::pass, 40,
            check_rec_525);
        add("rec-5.27", "5.27", "floor-exponent recurrence, a = q family", Expectation::pass, 40,
            check_rec_527);
        add("rec-2.13a", "2.13a", "symbolic-a functional recurrence", Expectation::pass, 40,
            check_rec_213a);
        add("errata-2.15-x5", "2.15", "printed x^5 table coefficient vs direct expansion",
            Expectation::fail, 8, check_errata_215_x5);
        add("cheb-table-6.4", "6.4", "reference table audit against the recurrence",
            Expectation::pass, 9, check_table_64);
        add("cong-6.5", "6.5", "T_p(x) = x^p mod p", Expectation::pass, 11, check_cong_65);
        add("cong-6.8a", "6.8a", "T_{p^2}(x) = T_p(x^p) mod p^2", Expectation::pass, 5,
            check_cong_68a);
        add("cong-6.8b", "6.8b", "T_{2^{n+1}}(x) = 1 mod 2^{2n+1}", Expectation::pass, 3,
            check_cong_68b);
        add("gamma-6.9", "6.9", "Gaussian-integer values vs the printed gamma-formulas",
            Expectation::report_only, 10, check_gamma_69);
        add("recur-6.10", "6.10", "recurrence family structure and values at 1/2",
            Expectation::pass, 12, check_recur_610);
        add("rel-6.11", "6.11", "U_n - U_{n-2} = 2 T_n", Expectation::pass, 12, check_rel_611);
        add("deriv-6.15", "6.15", "U_n = T'_{n+1}/(n+1), two routes", Expectation::pass, 12,
            check_deriv_615);
        add("vals-6.16", "6.16", "values and derivative values at 1", Expectation::pass, 12,
            check_vals_616);
        add("comp-6.17", "6.17", "composition semigroup T_n o T_m = T_{nm}", Expectation::pass, 6,
            check_comp_617);
        add("ode-6.19", "6.19", "second-order ODE residual, integer and formal",
            Expectation::pass, 12, check_ode_619);
        add("hyp-6.23", "6.23", "hypergeometric representation, integer and formal",
            Expectation::pass, 12, check_hyp_623);
        add("vals-6.25", "6.25", "values at 0", Expectation::pass, 12, check_vals_625);
        add("explicit-6.26", "6.26", "recurrence vs all explicit formulas", Expectation::pass, 12,
            check_explicit_626);
        add("alpha-6.34", "6.34", "three-term relation of the interpolated series",
            Expectation::pass, 8, check_alpha_634);
        add("alpha-6.35", "6.35", "U_a - U_{a-2} = 2 T_a with convention resolution",
            Expectation::pass, 8, check_alpha_635);
        add("alpha-6.37", "6.37", "three-term relation of the interpolated U series",
            Expectation::pass, 8, check_alpha_637);
        add("alpha-6.38", "6.38", "evenness of the interpolated coefficients", Expectation::pass,
            8, check_alpha_638);
        add("group-6.39a", "6.39a", "formal group law under composition", Expectation::pass, 8,
            check_group_639a);
        add("inv-6.39b", "6.39b", "inverse law at rational parameters", Expectation::pass, 6,
            check_inverse_639b);
        add("misprint-6.44", "6.44", "published square-root formula, disproved by intervals",
            Expectation::fail, 3, check_misprint_644);
        add("probe-6.32", "6.32", "coefficient-ratio trend of the interpolated series",
            Expectation::report_only, 20, check_probe_632);
        std::sort(c.begin(), c.end(),
                  [](const IdentityDescriptor& a, const IdentityDescriptor& b) { return a.id < b.id; });
        return c;
    }();
    return catalog;
}

inline const IdentityDescriptor* find_identity(const std::string& id) {
    for (const auto& d : identity_catalog())
        if (d.id == id) return &d;
    return nullptr;
}

struct Summary {
    int pass = 0;
    int fail = 0;
    int error = 0;
};

struct SuiteEntry {
    const IdentityDescriptor* descriptor;
    VerificationReport report;
};

struct SuiteResult {
    std::vector<SuiteEntry> entries;
    Summary summary;
    double wall_ms = 0.0;
};

// Whether an outcome matches its registered expectation. Report-only
// entries never reach this.
inline bool outcome_matches(Expectation expected, Status status) {
    return (expected == Expectation::pass && status == Status::pass) ||
           (expected == Expectation::fail && status == Status::fail);
}

inline VerificationReport run_one(const IdentityDescriptor& d, std::optional<long> order_override) {
    const long order = order_override.value_or(d.default_order);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    try {
        rep = d.check(order);
    } catch (const std::exception& e) {
        rep.status = Status::error;
        rep.order = order;
        rep.note(std::string("exception: ") + e.what());
    }
    rep.id = d.id;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// Runs the selected identities (all when `ids` is empty). Results are
// merged in catalog order regardless of the worker count, so two runs with
// identical arguments produce identical reports modulo elapsed time.
inline SuiteResult run_identities(const std::vector<std::string>& ids,
                                  std::optional<long> order_override = std::nullopt,
                                  int jobs = 1) {
    std::vector<const IdentityDescriptor*> selected;
    if (ids.empty()) {
        for (const auto& d : identity_catalog()) selected.push_back(&d);
    } else {
        for (const auto& id : ids) {
            const IdentityDescriptor* d = find_identity(id);
            if (!d) throw std::invalid_argument("unknown identity id: " + id);
            selected.push_back(d);
        }
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports(selected.size());
    if (jobs <= 1 || selected.size() <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            reports[i] = run_one(*selected[i], order_override);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= selected.size()) return;
                reports[i] = run_one(*selected[i], order_override);
            }
        };
        std::vector<std::thread> pool;
        const int width = std::min<int>(jobs, static_cast<int>(selected.size()));
        pool.reserve(width);
        for (int t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    SuiteResult result;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        const auto& d = *selected[i];
        const auto& rep = reports[i];
        if (d.expected != Expectation::report_only) {
            if (rep.status == Status::error) ++result.summary.error;
            else if (outcome_matches(d.expected, rep.status)) ++result.summary.pass;
            else ++result.summary.fail;
        }
        result.entries.push_back({&d, rep});
    }
    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace qsix
