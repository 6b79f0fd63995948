// One line per acceptance criterion, aggregated from the claims ledger.
#include "mubound/verify.hpp"

#include <iostream>
#include <map>

int main() {
    using namespace mubound;
    static const std::map<int, std::string> kTitles = {
        {1, "mu(17/30) <= 7/12, witness 7/10, L4, < 1 s"},
        {2, "mu(2/15 + D) = 1 - 9D/13 for D in {1e-2, 1e-3}"},
        {3, "RH: 1 - theta up to 1/2, -inf above"},
        {4, "LH: 1 - theta/2 up to 1/2, -inf above"},
        {5, "DH: <= 1 - theta/12, -inf above 1/2, region within [0, 23/24]"},
        {6, "unconditional: -inf above 17/30, finite and < 1 on [2/15 + 1e-3, 17/30]"},
        {7, "dominance over the earlier piecewise bounds on (1/2, 7/12]"},
        {8, "mode dominance, refined <= L2-only, monotone in theta, curve < 60 s"},
        {9, "sup A = 30/13, transcription checksum, jump 6/65 at 59/60"},
        {10, "sieve, psi(100), exceptional set, energy, explicit formula, sieve speed"},
    };
    std::map<int, std::pair<bool, std::string>> verdict;
    for (const auto& [k, _] : kTitles) verdict[k] = {true, ""};
    for (const auto& r : run_claims()) {
        auto& v = verdict[r.criterion];
        if (!r.pass) {
            v.first = false;
            v.second += (v.second.empty() ? "" : ", ") + r.id;
        }
    }
    int failed = 0;
    for (const auto& [k, title] : kTitles) {
        const auto& [pass, bad] = verdict[k];
        std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "  " << title;
        if (!pass) std::cout << "  (failing: " << bad << ")";
        std::cout << "\n";
        failed += !pass;
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
