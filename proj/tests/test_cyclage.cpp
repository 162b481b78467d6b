#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "lrc/cyclage.hpp"
#include "lrc/lr.hpp"
#include "lrc/poincare.hpp"
#include "lrc/rsk.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

const RectSequence kRunning = RectSequence::parse("3x2,2x2,1x3");
const Tableau kS({{1, 1, 1, 3, 3, 5}, {2, 2, 2, 4}, {4, 6}, {7}});

const std::vector<std::string> kSmallR = {
    "1x1,1x1", "2x1,1x1", "1x1,2x1", "2x2,1x1", "2x1,1x2", "2x2,2x1", "1x2,1x2,1x1",
    "2x1,1x1,1x1", "1x1,1x1,1x1,1x1", "3x1,2x2", "2x2,2x2", "2x1,2x1,1x2", "3x2,1x1",
};

int num_cols(const Tableau& t) { return t.empty() ? 0 : t.shape()[0]; }

// Follows the first cover of each node down to a minimal node.
int descend(const CocyclagePoset& poset, int k) {
    for (bool moved = true; moved;) {
        moved = false;
        for (const auto& e : poset.edges)
            if (e.upper == k) {
                k = e.lower;
                moved = true;
                break;
            }
    }
    return k;
}

// Charge drops by one across every cover, so charge - rank is the charge of
// any minimal node below.
void check_rank_against_charge(const CocyclagePoset& poset, const RectSequence& r) {
    std::vector<long> charge(poset.nodes.size());
    for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
        charge[k] = charge_explicit(poset.nodes[k], r).value;
        CHECK(charge_axiomatic(poset.nodes[k], r).value == charge[k]);
    }
    for (const auto& e : poset.edges) CHECK(charge[e.upper] == charge[e.lower] + 1);
    for (std::size_t k = 0; k < poset.nodes.size(); ++k)
        CHECK(charge[k] == poset.rank[k] + charge[descend(poset, static_cast<int>(k))]);
}

} // namespace

TEST_CASE("cocyclage cover of the running example") {
    auto covers = cocyclage_covers_down(kS, kRunning);
    // Corners east of column 3: (1,6) and (2,4).
    REQUIRE(covers.size() == 2);
    CHECK(covers[0].corner == Cell{1, 6});
    CHECK(covers[1].corner == Cell{2, 4});
    CHECK(covers[1].lower == Tableau({{1, 1, 1, 3, 3, 5}, {2, 2, 2}, {4, 4, 6}, {7}}));
    for (const Cover& c : covers) {
        CHECK(c.lower.size() == kS.size());
        CHECK(is_r_lr(row_reading_word(c.lower), kRunning));
    }
    CHECK(cocyclage_covers_down(Tableau({{1, 1, 1}, {2, 2, 2}, {3, 3}, {4, 4}, {5}, {6}, {7}}), kRunning).empty());
    CHECK_THROWS(cocyclage_covers_down(Tableau({{1, 2}}), kRunning));
}

TEST_CASE("d statistic over the orbit of S") {
    Word s = row_reading_word(kS);
    const std::vector<std::vector<int>> order = {{}, {1}, {2}, {2, 1}, {1, 2}, {1, 2, 1}};
    const std::vector<std::pair<int, int>> expected = {{3, 1}, {3, 1}, {2, 1}, {2, 1}, {2, 2}, {2, 2}};
    for (std::size_t k = 0; k < order.size(); ++k) {
        OrbitPoint pt = apply_tau_word(s, kRunning, order[k]);
        CHECK(d_statistic(1, pt.word, pt.rects) == expected[k].first);
        CHECK(d_statistic(2, pt.word, pt.rects) == expected[k].second);
    }
    CHECK(tau_orbit(s, kRunning).size() == 6);
    CHECK(charge_explicit(kS, kRunning).value == 6);
    CHECK(charge_axiomatic(kS, kRunning).value == 6);
    CHECK(d_statistic(1, parse_word("2211"), RectSequence::parse("2x1,2x1")) == 0);
}

TEST_CASE("trivial charges") {
    RectSequence one = RectSequence::parse("3x2");
    CHECK(charge_explicit(one.yamanouchi(1), one).value == 0);
    CHECK(charge_axiomatic(one.yamanouchi(1), one).value == 0);
    CHECK(charge_axiomatic(Tableau(), RectSequence()).value == 0);
    CHECK(classical_charge(key_tableau({3, 2, 1})) == 0);
    CHECK(classical_charge(parse_word("321")) == 0);
    CHECK(classical_charge(parse_word("123")) == 3);
    CHECK_THROWS(classical_charge(parse_word("22")));
}

TEST_CASE("classical charge generates Kostka-Foulkes polynomials") {
    for (int m = 1; m <= 6; ++m)
        for (const Partition& mu : partitions_of(m))
            for (const Partition& lambda : partitions_of(m, static_cast<int>(mu.length()))) {
                QPolynomial sum;
                for (const Tableau& t : column_strict_tableaux(lambda, mu.parts()))
                    sum += QPolynomial::monomial(static_cast<int>(classical_charge(t)));
                std::vector<int> eta(mu.length(), 1);
                CHECK(sum == k_poly(lambda, eta, mu.parts()));
            }
}

TEST_CASE("Kostka case: R-charge equals classical charge") {
    for (int m = 1; m <= 5; ++m)
        for (const Partition& mu : partitions_of(m)) {
            std::vector<Rect> rs;
            for (int part : mu.parts()) rs.push_back({part, 1});
            RectSequence r(rs);
            CocyclagePoset poset = build_poset(r);
            for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
                const Tableau& t = poset.nodes[k];
                long c = classical_charge(t);
                CHECK(charge_explicit(t, r).value == c);
                CHECK(charge_axiomatic(t, r).value == c);
                if (mu.parts().front() == mu.parts().back()) CHECK(poset.rank[k] == c);
            }
            check_rank_against_charge(poset, r);
        }
}

TEST_CASE("poset structure") {
    RectSequence one = RectSequence::parse("2x3");
    CocyclagePoset single = build_poset(one);
    CHECK(single.nodes.size() == 1);
    CHECK(single.edges.empty());
    CHECK(single.rank == std::vector<int>{0});

    for (const std::string& spec : kSmallR) {
        RectSequence r = RectSequence::parse(spec);
        CocyclagePoset poset = build_poset(r);
        std::set<int> has_cover;
        for (const auto& e : poset.edges) {
            CHECK(poset.rank[e.upper] == poset.rank[e.lower] + 1);
            has_cover.insert(e.upper);
        }
        for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
            const Tableau& t = poset.nodes[k];
            bool minimal = !has_cover.count(static_cast<int>(k));
            CHECK(minimal == (num_cols(t) == r.max_mu()));
            if (minimal && r[1].mu == r.max_mu()) {
                // Y_1 on top of an LR tableau for the remaining rectangles.
                for (int row = 1; row <= r[1].eta; ++row)
                    CHECK(t.rows()[row - 1] == std::vector<int>(r[1].mu, row));
                std::vector<std::vector<int>> rest(t.rows().begin() + r[1].eta, t.rows().end());
                Tableau hat = Tableau(rest).shifted(-r[1].eta);
                CHECK(is_r_lr(row_reading_word(hat), r.tail()));
            }
        }
        check_rank_against_charge(poset, r);
        std::set<int> all_mu;
        for (const Rect& x : r.rects()) all_mu.insert(x.mu);
        if (all_mu.size() == 1) {
            CHECK(poset.minimal_nodes().size() == 1);
            for (std::size_t k = 0; k < poset.nodes.size(); ++k)
                CHECK(charge_explicit(poset.nodes[k], r).value == poset.rank[k]);
        }
    }
}

TEST_CASE("running example poset") {
    CocyclagePoset poset = build_poset(kRunning, {kS.shape()});
    int k = poset.index_of(kS);
    REQUIRE(k >= 0);
    CHECK(poset.rank[k] == 4);
    CHECK(poset.minimal_nodes().size() == 2);
    CHECK(charge_explicit(poset.nodes[descend(poset, k)], kRunning).value == 2);
    check_rank_against_charge(poset, kRunning);
}

TEST_CASE("tau is an isomorphism of graded posets") {
    for (const std::string& spec : kSmallR) {
        RectSequence r = RectSequence::parse(spec);
        CocyclagePoset a = build_poset(r);
        for (int p = 1; p < r.t(); ++p) {
            RectSequence rp = r.swapped(p);
            CocyclagePoset b = build_poset(rp);
            REQUIRE(a.nodes.size() == b.nodes.size());
            std::vector<int> image(a.nodes.size());
            for (std::size_t k = 0; k < a.nodes.size(); ++k) {
                image[k] = b.index_of(tau_tableau(p, a.nodes[k], r));
                REQUIRE(image[k] >= 0);
                CHECK(b.rank[image[k]] == a.rank[k]);
            }
            std::set<std::pair<int, int>> ea, eb;
            for (const auto& e : a.edges) ea.insert({image[e.upper], image[e.lower]});
            for (const auto& e : b.edges) eb.insert({e.upper, e.lower});
            CHECK(ea == eb);
        }
    }
}

TEST_CASE("charge is a Knuth invariant and tau invariant") {
    std::mt19937 rng(8);
    for (int k = 0; k < 25; ++k) {
        Word w = oracle::random_lr_word(rng, kRunning, 20);
        long c = charge_explicit(w, kRunning).value;
        CHECK(c == charge_explicit(p_tableau(w), kRunning).value);
        CHECK(c == charge_axiomatic(p_tableau(w), kRunning).value);
        for (int p = 1; p <= 2; ++p) CHECK(charge_explicit(tau(p, w, kRunning), kRunning.swapped(p)).value == c);
        // d is preserved by the tau that exchanges the same two rectangles.
        for (int i = 1; i <= 2; ++i)
            CHECK(d_statistic(i, w, kRunning) == d_statistic(i, tau(i, w, kRunning), kRunning.swapped(i)));
    }
}

TEST_CASE("chi changes charge by 1 - |N|") {
    std::mt19937 rng(9);
    for (const std::string& spec : {"3x2,2x2,1x3", "2x1,2x1,1x2", "2x2,1x1,1x2"}) {
        RectSequence r = RectSequence::parse(spec);
        for (int k = 0; k < 20; ++k) {
            Word w = oracle::random_lr_word(rng, r, 15);
            long delta = chi_charge_delta(w, r);
            CHECK(delta == charge_explicit(w, r).value - charge_explicit(chi(w, r), r).value);
        }
    }
    // A cover word ejects a letter east of column a, so N is empty.
    Tableau u({{1, 1, 1, 3, 4, 5}, {2, 2, 2}, {4, 6}, {7}});
    Word w = row_reading_word(u);
    w.push_back(3);
    CHECK(chi_charge_delta(w, kRunning) == 1);
    RectSequence one = RectSequence::parse("2x2");
    CHECK(chi_charge_delta(parse_word("2211"), one) == 0);
}

TEST_CASE("poset export") {
    CocyclagePoset poset = build_poset(RectSequence::parse("2x1,1x1"));
    std::string dot = poset_to_dot(poset);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    auto j = nlohmann::json::parse(poset_to_json(poset));
    CHECK(j["nodes"].size() == poset.nodes.size());
    CHECK(j["edges"].size() == poset.edges.size());
    for (const auto& node : j["nodes"]) CHECK(node.contains("rank"));
}
