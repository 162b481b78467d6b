#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/lr.hpp"

namespace lrc::verify {

struct Bounds {
    int max_t = 3;
    int max_n = 6;
    int max_cells = 10;
    std::uint64_t seed = 1;
    int jobs = 1;
    // Sampled words per rectangle sequence in the chi suite.
    int samples = 1000;
};

struct Result {
    std::string suite;
    long instances = 0;
    long checks = 0;
    // First failing check, in suite order; suites enumerate small instances first.
    std::optional<std::string> failure;
    bool passed() const { return !failure; }
};

// Every sequence with t_min <= t <= t_max rectangles, n <= max_n rows and
// at most max_cells cells, ordered by cell count and then lexicographically.
std::vector<RectSequence> rect_sequences(int t_min, int t_max, int max_n, int max_cells, bool dominant_only);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
Result run_suite(const std::string& name, const Bounds& bounds);

// Individual suites. The *_on variants take an explicit list of sequences.
Result running_example();
Result action_suite(const std::vector<RectSequence>& seqs, int jobs);
Result chi_suite(const std::vector<RectSequence>& seqs, int samples, std::uint64_t seed, int jobs);
Result poset_suite(const std::vector<RectSequence>& seqs, int jobs);
Result charge_suite(const std::vector<RectSequence>& seqs, int jobs);
// Sum of q^charge over LRT(lambda; R) against k_poly for the given shapes,
// or every shape when the list is empty.
Result main_suite(const std::vector<RectSequence>& seqs, int jobs, const std::vector<Partition>& shapes = {});
Result morris_suite(const std::vector<RectSequence>& seqs, int jobs);
Result kostka_suite(int max_size, int jobs);
Result two_rect_suite(int max_side);

// One line: "<suite>: PASS (<instances> instances, <checks> checks)" or the failure.
std::string summary(const Result& r);

} // namespace lrc::verify
