#pragma once

#include <string>
#include <vector>

namespace nlie {

// Outcome of one mathematical check.  Checks never throw on a failed identity;
// they record the first few violating instances with both sides spelled out.
struct Failure {
    std::string where;   // which instance broke, e.g. "x=(e1,e2) y=(e1,e2,e3)"
    std::string detail;  // "lhs = ..., rhs = ..."
};

class Report {
public:
    explicit Report(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    bool ok() const { return failures_.empty(); }
    explicit operator bool() const { return ok(); }
    const std::vector<Failure>& failures() const { return failures_; }

    // Stop collecting after a handful; one witness is what callers need.
    static constexpr std::size_t kMaxFailures = 8;
    bool full() const { return failures_.size() >= kMaxFailures; }
    void fail(std::string where, std::string detail) {
        if (!full()) failures_.push_back({std::move(where), std::move(detail)});
    }

    // First witness as a single line, empty when ok.
    std::string witness() const {
        if (ok()) return "";
        return failures_[0].where + ": " + failures_[0].detail;
    }

    std::string to_string() const {
        std::string s = name_ + ": " + (ok() ? "ok" : "FAIL");
        for (const Failure& f : failures_) s += "\n  " + f.where + ": " + f.detail;
        return s;
    }

private:
    std::string name_;
    std::vector<Failure> failures_;
};

} // namespace nlie
