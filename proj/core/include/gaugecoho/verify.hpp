#ifndef GAUGECOHO_VERIFY_HPP
#define GAUGECOHO_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <gaugecoho/random.hpp>

namespace gaugecoho
{

enum class CheckStatus { pass, fail, flagged };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string &s);

struct CheckRecord {
    std::string name;
    nlohmann::json params;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    // Structured findings, e.g. the torsion list behind a flag. Null when unused.
    nlohmann::json data;

    friend bool operator==(const CheckRecord &, const CheckRecord &) = default;
};

struct VerifyOptions {
    std::vector<unsigned> n_values{2, 3};
    std::vector<long> k_values{0, 1};
    unsigned max_weight = 8;
    // 0 stands for Q; primes add field-independence checks.
    std::vector<std::uint64_t> moduli{0, 2, 3};
    std::uint64_t seed = default_seed;
    // Sample count of each randomized property.
    unsigned trials = 100;

    friend bool operator==(const VerifyOptions &, const VerifyOptions &) = default;
};

struct VerificationReport {
    VerifyOptions options;
    std::vector<CheckRecord> checks;
    // Only filled on request; leaving it out keeps reports byte-identical.
    std::optional<double> elapsed_seconds;

    // True iff no check failed; flagged checks do not count as failures.
    bool passed() const;
    std::size_t count(CheckStatus s) const;

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json &j);
    std::string to_text() const;

    friend bool operator==(const VerificationReport &a, const VerificationReport &b);
};

// Throws ArgumentError for empty ranges, n < 1, max_weight < 2 or a composite modulus.
VerificationReport verify_suite(const VerifyOptions &options);

} // namespace gaugecoho

#endif
