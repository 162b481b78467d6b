#include <doctest.h>

#include <algorithm>

#include "lrc/cyclage.hpp"
#include "lrc/lr.hpp"
#include "lrc/poincare.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

QPolynomial poly(std::vector<std::int64_t> c) { return QPolynomial(std::move(c)); }

std::vector<RectSequence> dominant_sequences(int max_t, int max_n, int max_cells) {
    std::vector<RectSequence> out;
    std::vector<Rect> cur;
    auto rec = [&](auto& self, int n, int cells) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_t) return;
        int top = cur.empty() ? max_cells : cur.back().mu;
        for (int mu = 1; mu <= top; ++mu)
            for (int eta = 1; n + eta <= max_n && cells + mu * eta <= max_cells; ++eta) {
                cur.push_back({mu, eta});
                self(self, n + eta, cells + mu * eta);
                cur.pop_back();
            }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace

TEST_CASE("polynomial arithmetic and formatting") {
    QPolynomial a = poly({1, 0, 2, 1});
    CHECK(a.to_string() == "1 + 2q^2 + q^3");
    CHECK(QPolynomial().to_string() == "0");
    CHECK(poly({0, 1}).to_string() == "q");
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(a.at_one() == 4);
    CHECK((a - a).is_zero());
    CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
    CHECK(a.shifted(2) == poly({0, 0, 1, 0, 2, 1}));
    CHECK(poly({-1, 1}).to_string() == "-1 + q");
    CHECK_FALSE(poly({-1, 1}).nonnegative());
}

TEST_CASE("root sets") {
    CHECK(roots_of({1, 1, 1}) == RootSet{{1, 2}, {1, 3}, {2, 3}});
    CHECK(roots_of({4}).empty());
    RootSet r = roots_of({2, 2, 3});
    CHECK(r.size() == 16);
    for (auto [i, j] : r) CHECK(((i <= 2 && j >= 3) || (i >= 3 && i <= 4 && j >= 5)));
}

TEST_CASE("q-Kostant partition function") {
    RootSet all = roots_of({1, 1, 1});
    CHECK(q_kostant_partition({0, 0, 0}, all) == poly({1}));
    CHECK(q_kostant_partition({1, 0, -1}, all) == poly({0, 1, 1}));
    CHECK(q_kostant_partition({1, -1, 0}, all) == poly({0, 1}));
    CHECK(q_kostant_partition({-1, 1, 0}, all).is_zero());
    CHECK(q_kostant_partition({1, 0, 0}, all).is_zero());
    for (const std::vector<int>& eta : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {1, 2, 1}, {2, 2}, {1, 1, 1, 1}}) {
        RootSet roots = roots_of(eta);
        int n = 0;
        for (int e : eta) n += e;
        for (const Word& shifted : oracle::all_words(5, n)) {
            Weight v(shifted.begin(), shifted.end());
            for (int& x : v) x -= 3;
            CHECK(q_kostant_partition(v, roots).coeffs() == oracle::kostant(v, roots));
        }
    }
}

TEST_CASE("single rectangle") {
    CHECK(k_poly({2, 2}, RectSequence::parse("2x2")) == poly({1}));
    CHECK(k_poly({3, 1}, RectSequence::parse("2x2")).is_zero());
    CHECK(k_poly({4}, RectSequence::parse("2x2")).is_zero());
    CHECK(k_poly({2}, RectSequence::parse("2x1")) == poly({1}));
}

TEST_CASE("Kostka-Foulkes values") {
    CHECK(k_poly({2, 1}, {1, 1, 1}, {1, 1, 1}) == poly({0, 1, 1}));
    CHECK(k_poly({3}, {1, 1, 1}, {1, 1, 1}) == poly({0, 0, 0, 1}));
    CHECK(k_poly({2, 1}, {1, 1}, {2, 1}) == poly({1}));
    CHECK(k_poly({3}, {1, 1}, {2, 1}) == poly({0, 1}));
    CHECK(k_poly({2}, RectSequence::parse("1x1,1x1")) == poly({0, 1}));
    CHECK(k_poly({1, 1}, RectSequence::parse("1x1,1x1")) == poly({1}));
    for (int m = 1; m <= 6; ++m)
        for (const Partition& mu : partitions_of(m))
            for (const Partition& lambda : partitions_of(m)) {
                std::vector<int> eta(mu.length(), 1);
                QPolynomial k = k_poly(lambda, eta, mu.parts());
                CHECK(k.at_one() == static_cast<std::int64_t>(kostka_number(lambda, mu.parts())));
                CHECK(k.nonnegative());
            }
}

TEST_CASE("k_poly at q = 1 counts LR tableaux") {
    for (const RectSequence& r : dominant_sequences(3, 5, 8))
        for (const Partition& lambda : partitions_of(r.total_cells(), r.n())) {
            QPolynomial k = k_poly(lambda, r);
            CHECK(k.nonnegative());
            CHECK(k.at_one() == static_cast<std::int64_t>(enumerate_lrt(lambda, r).size()));
        }
    CHECK(k_poly({3}, RectSequence::parse("1x1,1x1")).is_zero());
}

TEST_CASE("generating function of charge") {
    for (const RectSequence& r : dominant_sequences(3, 4, 7))
        for (const Partition& lambda : partitions_of(r.total_cells(), r.n())) {
            QPolynomial sum;
            for (const Tableau& t : enumerate_lrt(lambda, r))
                sum += QPolynomial::monomial(static_cast<int>(charge_explicit(t, r).value));
            CHECK(sum == k_poly(lambda, r));
        }
}

TEST_CASE("Morris recurrence") {
    RectSequence one = RectSequence::parse("2x2");
    CHECK(morris_rhs({2, 2}, one) == poly({1}));
    CHECK(morris_rhs({3, 1}, one).is_zero());
    for (const RectSequence& r : dominant_sequences(3, 4, 8))
        for (const Partition& lambda : partitions_of(r.total_cells(), r.n())) CHECK(morris_rhs(lambda, r) == k_poly(lambda, r));
    // The running example has charge 6 at the shape of S.
    RectSequence running = RectSequence::parse("3x2,2x2,1x3");
    QPolynomial k = k_poly({6, 4, 2, 1}, running);
    CHECK(k[6] >= 1);
    CHECK(morris_rhs({6, 4, 2, 1}, running) == k);
}

TEST_CASE("alphabet bound") {
    CHECK_THROWS_AS(k_poly({9}, std::vector<int>(9, 1), Weight(9, 1)), std::length_error);
}
