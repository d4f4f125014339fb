// Acceptance suite: runs every published-claim criterion against the built-in
// tables at exact arithmetic and prints one line per criterion. A criterion
// is FLAGGED when its only deviations are contradictions the run traced to a
// printed-source misprint (the offending cells are named); FLAGGED does not
// fail the suite, FAIL does.
#include <cstdio>
#include <iostream>
#include <map>

#include "verify.hpp"

int main() {
    using conserva::ClaimStatus;

    const conserva::VerificationReport report = conserva::run_paper_verification();

    static const std::map<int, const char*> titles{
        {1, "half-derivation scalar theorems"},
        {2, "centroid corollaries and containment"},
        {3, "derivation lemma matrices"},
        {4, "biderivation vanishing theorems"},
        {5, "symmetric/skew decomposition identity"},
        {6, "local and 2-local theorems"},
        {7, "Kantor construction and subalgebras"},
        {8, "conservativity witnesses"},
        {9, "solver soundness properties"},
    };

    std::map<int, ClaimStatus> worst;
    for (const auto& claim : report.claims) {
        auto [it, inserted] = worst.emplace(claim.criterion, claim.status);
        if (!inserted) {
            auto rank = [](ClaimStatus s) {
                return s == ClaimStatus::fail ? 2 : s == ClaimStatus::flag ? 1 : 0;
            };
            if (rank(claim.status) > rank(it->second))
                it->second = claim.status;
        }
    }

    std::cout << "acceptance suite: published claims at exact arithmetic\n\n";
    bool any_fail = false;
    for (const auto& [criterion, title] : titles) {
        const auto it = worst.find(criterion);
        const ClaimStatus status = it == worst.end() ? ClaimStatus::fail : it->second;
        const char* word = status == ClaimStatus::pass   ? "PASS"
                           : status == ClaimStatus::flag ? "FLAGGED"
                                                         : "FAIL";
        any_fail = any_fail || status == ClaimStatus::fail || it == worst.end();
        std::printf("criterion %d  %-42s %s\n", criterion, title, word);
    }

    std::cout << "\nclaim details:\n" << conserva::render_report_text(report);
    return any_fail ? 1 : 0;
}
