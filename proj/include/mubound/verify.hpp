#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mubound {

struct VerifyConfig {
    std::string data_dir;    // holds tables.txt; default_data_dir() when empty
    std::string zeros_path;  // default_zeros_path() when empty
    unsigned threads = 1;
};

/// $MUBOUND_DATA, else the data/ directory of the source tree.
std::string default_data_dir();
/// $MUBOUND_ZEROS, else <data dir>/zeros_6000.txt.
std::string default_zeros_path();

struct ClaimResult {
    std::string id;
    int criterion = 0;
    std::string description;
    std::string quote;
    std::string expected;
    std::string computed;
    std::string tolerance;
    bool pass = false;
    double seconds = 0;
};

struct ClaimContext;

struct Claim {
    std::string id;
    int criterion;  // acceptance criterion this claim belongs to
    std::string description;
    std::string quote;  // the statement being checked
    std::string tolerance;
    std::function<void(ClaimContext&, ClaimResult&)> check;
};

const std::vector<Claim>& claims();

/// Runs every claim whose id starts with the filter, in ledger order. A claim
/// that throws is reported as failed with the error text as its result.
std::vector<ClaimResult> run_claims(const std::optional<std::string>& filter = std::nullopt,
                                    const VerifyConfig& config = {});

std::string claims_text_report(const std::vector<ClaimResult>& results);
std::string claims_json_report(const std::vector<ClaimResult>& results);
bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace mubound
