#ifndef LIEFOUR_REPORT_HPP
#define LIEFOUR_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace liefour {

using Json = nlohmann::ordered_json;

/// One located nonzero residual (or other check failure).
struct Failure {
    std::vector<std::string> indices;
    bool residualIsZero = false;
    std::string residual;
};

/// A computed-vs-stated discrepancy.  Findings, never failures: the ledger
/// does not affect pass/fail status.
struct LedgerEntry {
    std::string name;
    std::string computed;
    std::string stated;
    std::string comment;

    Json toJson() const {
        Json j;
        j["name"] = name;
        j["computed"] = computed;
        j["stated"] = stated;
        j["comment"] = comment;
        return j;
    }
};

/// Structured pass/fail record for one check over a sweep of subjects.
class VerificationReport {
public:
    VerificationReport() = default;
    VerificationReport(std::string check, std::string subject)
        : check_(std::move(check)), subject_(std::move(subject)) {}

    void countCase() { ++total_; }
    void addFailure(Failure f) { failures_.push_back(std::move(f)); }
    void addLedger(LedgerEntry e) { ledger_.push_back(std::move(e)); }

    const std::string& check() const { return check_; }
    const std::string& subject() const { return subject_; }
    int total() const { return total_; }
    bool passed() const { return failures_.empty(); }
    const std::vector<Failure>& failures() const { return failures_; }
    const std::vector<LedgerEntry>& ledger() const { return ledger_; }

    Json toJson() const {
        Json j;
        j["check"] = check_;
        j["subject"] = subject_;
        j["total"] = total_;
        j["passed"] = passed();
        Json fails = Json::array();
        for (const auto& f : failures_) {
            Json jf;
            jf["indices"] = f.indices;
            jf["residual-norm-is-zero"] = f.residualIsZero;
            jf["residual"] = f.residual;
            fails.push_back(jf);
        }
        j["failures"] = fails;
        if (!ledger_.empty()) {
            Json jl = Json::array();
            for (const auto& e : ledger_) jl.push_back(e.toJson());
            j["ledger"] = jl;
        }
        return j;
    }

private:
    std::string check_;
    std::string subject_;
    int total_ = 0;
    std::vector<Failure> failures_;
    std::vector<LedgerEntry> ledger_;
};

} // namespace liefour

#endif
