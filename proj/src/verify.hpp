#ifndef CONSERVA_VERIFY_HPP
#define CONSERVA_VERIFY_HPP

#include <string>
#include <vector>

namespace conserva {

enum class ClaimStatus { pass, fail, flag };

/// One verified result. `flag` marks a contradiction the run traced to a
/// suspected misprint in the source tables or printed matrices: the claim as
/// stated fails on the verbatim data, and the run names the exact cells or
/// block plus the reading under which it holds.
struct Claim {
    std::string id;
    int criterion;
    std::string paper;  // where the claimed result lives in the source material
    std::string expected;
    std::string computed;
    ClaimStatus status;
};

struct VerificationReport {
    std::vector<Claim> claims;

    std::size_t count(ClaimStatus s) const {
        std::size_t n = 0;
        for (const auto& c : claims)
            n += c.status == s ? 1 : 0;
        return n;
    }
};

/// Runs the full claim list against the built-in tables (or per-name
/// overrides from `algebra_dir`). Deterministic: fixed seeds, fixed order.
VerificationReport run_paper_verification(const std::string& algebra_dir = "");

std::string render_report_text(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);

const char* claim_status_name(ClaimStatus s);  // "pass" / "fail" / "discrepancy-flag"

} // namespace conserva

#endif
