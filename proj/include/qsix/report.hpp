#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qsix {

enum class Status { pass, fail, error };
enum class Expectation { pass, fail, report_only };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "error";
    }
}

inline const char* to_string(Expectation e) {
    switch (e) {
        case Expectation::pass: return "pass";
        case Expectation::fail: return "fail";
        default: return "report-only";
    }
}

struct Discrepancy {
    long degree = 0;
    std::string lhs;
    std::string rhs;
};

// Outcome record of one identity check. `order` is the truncation order or
// index bound the check ran at; only the first discrepancy is kept.
struct VerificationReport {
    std::string id;
    long order = 0;
    Status status = Status::pass;
    std::optional<Discrepancy> first_discrepancy;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;

    void fail_at(long degree, std::string lhs, std::string rhs) {
        status = Status::fail;
        if (!first_discrepancy)
            first_discrepancy = Discrepancy{degree, std::move(lhs), std::move(rhs)};
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    bool passed() const { return status == Status::pass; }
};

}  // namespace qsix
