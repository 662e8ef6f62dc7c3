#ifndef KLYACHKO_REPORT_HPP
#define KLYACHKO_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace klyachko {

// How a verification suite runs: fully symbolic, or exact evaluation at
// seeded random points.
struct RunOptions {
    bool randomized = false;
    int points = 20;
    std::uint64_t seed = 0;

    static RunOptions symbolic() { return RunOptions{}; }
    static RunOptions random(int points, std::uint64_t seed) {
        return RunOptions{true, points, seed};
    }
    std::string mode_string() const;
};

struct CheckFailure {
    std::string id;
    std::string witness;
};

// Outcome of one suite run. Content is deterministic given parameters and
// seed; elapsed_ms is the only wall-clock field.
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::string mode = "symbolic";
    long checks_run = 0;
    std::vector<CheckFailure> failures;
    long elapsed_ms = 0;

    bool pass() const { return failures.empty(); }
    std::string verdict() const { return pass() ? "pass" : "fail"; }

    void add_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void record(bool ok, const std::string& id, const std::string& witness) {
        ++checks_run;
        if (!ok) failures.push_back({id, witness});
    }

    // Human-readable summary, one header line plus one line per failure.
    std::string text() const;
    // {suite, params, mode, checks_run, failures:[{id, witness}],
    //  elapsed_ms, verdict} with stable field order.
    std::string json() const;
};

}  // namespace klyachko

#endif
