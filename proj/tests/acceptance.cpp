// Acceptance criteria: one PASS/FAIL line per criterion. All comparisons are
// exact (zero tolerance); each criterion also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lrc/lr.hpp"
#include "verify.hpp"

namespace {

using namespace lrc;
using verify::Result;

// Exact equality everywhere; no floating point is involved.
constexpr long kTolerance = 0;

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<std::vector<Result>()> run;
};

const RectSequence kRunning = RectSequence::parse("3x2,2x2,1x3");

std::vector<RectSequence> with_running(std::vector<RectSequence> seqs) {
    seqs.push_back(kRunning);
    return seqs;
}

} // namespace

int main() {
    const std::vector<RectSequence> main_suite = verify::rect_sequences(1, 3, 6, 10, true);

    const std::vector<Criterion> criteria = {
        {1, "running example: tau orbit, d values, c_R(S) = 6", 1.0,
         [] { return std::vector<Result>{verify::running_example()}; }},
        {2, "main theorem: sum of q^charge equals K_{lambda;R}(q)", 600.0,
         [&] {
             return std::vector<Result>{
                 verify::main_suite(main_suite, 1),
                 verify::main_suite({kRunning}, 1, lrt_shapes(kRunning)),
                 verify::charge_suite(with_running(main_suite), 1),
             };
         }},
        {3, "Kostka case: R-charge equals classical charge, K(1) equals Kostka", 60.0,
         [] { return std::vector<Result>{verify::kostka_suite(6, 1)}; }},
        {4, "poset: graded, minimal iff a columns, unique minimum, charge steps", 300.0,
         [&] { return std::vector<Result>{verify::poset_suite(with_running(main_suite), 1)}; }},
        {5, "tau action: involution, commutation, braid, A1, A4, A7", 300.0,
         [] {
             return std::vector<Result>{
                 verify::action_suite(verify::rect_sequences(3, 3, 9, 9, false), 1),
                 verify::action_suite(verify::rect_sequences(4, 4, 8, 8, false), 1),
             };
         }},
        {6, "chi: preserves W(R), chi^N = id, commutes with tau, charge delta", 300.0,
         [] {
             return std::vector<Result>{
                 verify::chi_suite(with_running(verify::rect_sequences(1, 3, 6, 8, true)), 1000, 20240611, 1)};
         }},
        {7, "two rectangles: at most one tableau, conditions, construction", 60.0,
         [] { return std::vector<Result>{verify::two_rect_suite(3)}; }},
        {8, "Morris recurrence equals K_{lambda;R}(q)", 300.0,
         [] { return std::vector<Result>{verify::morris_suite(verify::rect_sequences(1, 3, 5, 12, true), 1)}; }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::vector<Result> results = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        long instances = 0, checks = 0;
        std::string failure;
        for (const Result& r : results) {
            instances += r.instances;
            checks += r.checks;
            if (!r.passed() && failure.empty()) failure = verify::summary(r);
        }
        if (failure.empty() && secs > c.budget_seconds)
            failure = "over budget: " + std::to_string(secs) + "s > " + std::to_string(c.budget_seconds) + "s";
        bool ok = failure.empty();
        failed += !ok;
        std::printf("[%s] %d. %s (%ld instances, %ld checks, tolerance %ld, %.2fs)\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), instances, checks, kTolerance, secs);
        if (!ok) std::printf("       %s\n", failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
