#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arith.hpp"

namespace sqf {

struct Failure {
    std::string key;    // sortable case identifier
    std::string detail; // inputs, expected, got
    double deviation = 0.0;
};

// Accumulated result of one verification sweep. Failures are reported, not
// thrown; merging two sweeps is max/concat and independent of ordering.
struct Sweep {
    i64 cases = 0;
    double max_deviation = 0.0;
    std::vector<Failure> failures;
    std::vector<std::pair<std::string, std::string>> notes; // report-only data

    void count(double deviation = 0.0) {
        ++cases;
        if (deviation > max_deviation)
            max_deviation = deviation;
    }

    void fail(std::string key, std::string detail, double deviation) {
        failures.push_back({std::move(key), std::move(detail), deviation});
    }

    void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }

    void merge(const Sweep& other) {
        cases += other.cases;
        max_deviation = std::max(max_deviation, other.max_deviation);
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    void sort() {
        std::sort(failures.begin(), failures.end(),
                  [](const Failure& a, const Failure& b) { return a.key < b.key; });
        std::sort(notes.begin(), notes.end());
    }

    bool passed() const { return failures.empty(); }
};

} // namespace sqf
