#pragma once

// Replays of the worked examples: each one rebuilds its witness, runs the
// full verifiers and the lemma suites attached to the family, and records
// every check it made.

#include <string>
#include <vector>

#include "rackcert/criteria.hpp"

namespace rackcert {

struct ReplayOptions {
    int word_depth = 12;  // depth of the character word search
    int twist_length = 8; // word bound in the 𝔒^(2) twist suite
};

struct ReplayStep {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct ReplayResult {
    std::string tag;
    std::string summary;
    std::vector<ReplayStep> steps;
    std::vector<Certificate> certificates;
    bool ok = true;
    bool defect = false; // a DefectError was raised
    std::string message; // first failure
};

/// Tags in replay order.
const std::vector<std::string>& replay_tags();

/// Throws InputError for an unknown tag.
ReplayResult replay_example(const std::string& tag, const ReplayOptions& opts = {});

std::vector<ReplayResult> replay_all(const ReplayOptions& opts = {});

} // namespace rackcert
