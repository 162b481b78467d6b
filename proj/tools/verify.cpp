#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lrc/core.hpp"
#include "lrc/crystal.hpp"
#include "lrc/cyclage.hpp"
#include "lrc/poincare.hpp"
#include "lrc/rsk.hpp"

namespace lrc::verify {

namespace {

struct Tally {
    long checks = 0;
    std::optional<std::string> failure;

    template <class Describe>
    bool expect(bool ok, Describe&& describe) {
        ++checks;
        if (!ok && !failure) failure = describe();
        return ok;
    }
};

// Runs fn(i, tally) for i < count on `jobs` threads. Counts are summed and the
// failure of the smallest index wins, so the result is schedule independent.
Result run_indexed(const std::string& name, std::size_t count, int jobs,
                   const std::function<void(std::size_t, Tally&)>& fn) {
    std::vector<Tally> tallies(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                fn(i, tallies[i]);
            } catch (const std::exception& e) {
                if (!tallies[i].failure) tallies[i].failure = std::string("exception: ") + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < std::max(1, jobs); ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Result r{name, static_cast<long>(count), 0, std::nullopt};
    for (const Tally& t : tallies) {
        r.checks += t.checks;
        if (t.failure && !r.failure) r.failure = t.failure;
    }
    return r;
}

std::string at(const RectSequence& r, const Word& w) { return "R=" + r.to_string() + " w=" + format_word(w); }

std::vector<Tableau> all_lrt(const RectSequence& r) {
    std::vector<Tableau> out;
    for (const Partition& p : lrt_shapes(r)) {
        auto ts = enumerate_lrt(p, r);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

// A random LR tableau word scrambled by random Knuth moves.
Word sample_word(const std::vector<Tableau>& pool, std::mt19937_64& rng, int moves) {
    Word w = row_reading_word(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    for (int i = 0; i < moves; ++i) {
        auto nb = knuth_neighbors(w);
        if (nb.empty()) break;
        auto it = nb.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng));
        w = *it;
    }
    return w;
}

int num_cols(const Tableau& t) { return t.empty() ? 0 : t.shape()[0]; }

QPolynomial charge_sum(const std::vector<Tableau>& ts, const RectSequence& r) {
    QPolynomial sum;
    for (const Tableau& t : ts) sum += QPolynomial::monomial(static_cast<int>(charge_explicit(t, r).value));
    return sum;
}

} // namespace

std::vector<RectSequence> rect_sequences(int t_min, int t_max, int max_n, int max_cells, bool dominant_only) {
    std::vector<RectSequence> out;
    std::vector<Rect> cur;
    std::function<void(int, int)> rec = [&](int n, int cells) {
        int t = static_cast<int>(cur.size());
        if (t >= t_min && t > 0) out.emplace_back(cur);
        if (t == t_max) return;
        int top = dominant_only && t > 0 ? cur.back().mu : max_cells;
        for (int mu = 1; mu <= top; ++mu)
            for (int eta = 1; n + eta <= max_n && cells + mu * eta <= max_cells; ++eta) {
                cur.push_back({mu, eta});
                rec(n + eta, cells + mu * eta);
                cur.pop_back();
            }
    };
    rec(0, 0);
    std::stable_sort(out.begin(), out.end(), [](const RectSequence& a, const RectSequence& b) {
        return a.total_cells() < b.total_cells();
    });
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"running", "action", "chi",    "poset",   "charge",
                                                   "main",    "morris", "kostka", "two_rect"};
    return names;
}

Result running_example() {
    const RectSequence r = RectSequence::parse("3x2,2x2,1x3");
    const Tableau s({{1, 1, 1, 3, 3, 5}, {2, 2, 2, 4}, {4, 6}, {7}});
    const Word w = row_reading_word(s);
    Tally t;
    const std::vector<std::vector<int>> order = {{}, {1}, {2}, {2, 1}, {1, 2}, {1, 2, 1}};
    const std::vector<Tableau> images = {
        s,
        Tableau({{1, 1, 3, 3, 3, 5}, {2, 2, 4, 4}, {4, 6}, {7}}),
        Tableau({{1, 1, 1, 3, 6, 6}, {2, 2, 2, 4}, {5, 7}, {7}}),
        Tableau({{1, 1, 3, 6, 6, 6}, {2, 2, 4, 7}, {5, 7}, {7}}),
        Tableau({{1, 4, 4, 4, 6, 6}, {2, 5, 5, 5}, {3, 7}, {7}}),
        Tableau({{1, 4, 4, 6, 6, 6}, {2, 5, 5, 7}, {3, 7}, {7}}),
    };
    const std::vector<std::pair<int, int>> d = {{3, 1}, {3, 1}, {2, 1}, {2, 1}, {2, 2}, {2, 2}};
    for (std::size_t k = 0; k < order.size(); ++k) {
        OrbitPoint pt = apply_tau_word(w, r, order[k]);
        std::string label = "orbit point " + std::to_string(k);
        t.expect(p_tableau(pt.word) == images[k], [&] { return label + " tableau"; });
        t.expect(d_statistic(1, pt.word, pt.rects) == d[k].first, [&] { return label + " d_1"; });
        t.expect(d_statistic(2, pt.word, pt.rects) == d[k].second, [&] { return label + " d_2"; });
        for (int p = 1; p <= 2; ++p)
            t.expect(tau(p, tau(p, pt.word, pt.rects), pt.rects.swapped(p)) == pt.word,
                     [&] { return label + " involution"; });
    }
    t.expect(apply_tau_word(w, r, {2, 1, 2}).word == apply_tau_word(w, r, {1, 2, 1}).word,
             [] { return std::string("braid relation on S"); });
    long c = charge_explicit(s, r).value;
    t.expect(c == 6, [&] { return "charge_explicit(S) = " + std::to_string(c); });
    Result res{"running", 1, t.checks, t.failure};
    return res;
}

Result action_suite(const std::vector<RectSequence>& seqs, int jobs) {
    return run_indexed("action", seqs.size(), jobs, [&](std::size_t i, Tally& t) {
        const RectSequence& r = seqs[i];
        for (const Tableau& tab : all_lrt(r)) {
            const Word w = row_reading_word(tab);
            for (int p = 1; p < r.t(); ++p) {
                const RectSequence rp = r.swapped(p);
                const Word v = tau(p, w, r);
                auto where = [&] { return at(r, w) + " p=" + std::to_string(p); };
                t.expect(is_r_lr(v, rp), [&] { return where() + ": image not LR"; });
                t.expect(tau(p, v, rp) == w, [&] { return where() + ": not an involution"; });
                TableauPair pv = rs_pair(v), pw = rs_pair(w);
                t.expect(pv.q == pw.q, [&] { return where() + ": Q changed"; });
                t.expect(pv.p == tau_tableau(p, tab, r), [&] { return where() + ": P mismatch"; });
                t.expect(pv.p.shape() == tab.shape() && row_reading_word(pv.p) == v,
                         [&] { return where() + ": image does not fit the shape"; });
                if (r[p] == r[p + 1]) t.expect(v == w, [&] { return where() + ": equal rectangles moved"; });
                int lo = r.alphabet_begin(p), hi = r.alphabet_end(p + 1);
                bool fixed = true;
                for (std::size_t k = 0; k < w.size(); ++k)
                    if ((w[k] < lo || w[k] > hi) && v[k] != w[k]) fixed = false;
                t.expect(fixed, [&] { return where() + ": letters outside the two blocks moved"; });
                for (const Word& w2 : knuth_neighbors(w))
                    t.expect(p_tableau(tau(p, w2, r)) == pv.p, [&] { return where() + ": Knuth class not preserved"; });
                for (int q = p + 2; q < r.t(); ++q)
                    t.expect(apply_tau_word(w, r, {p, q}).word == apply_tau_word(w, r, {q, p}).word,
                             [&] { return where() + " q=" + std::to_string(q) + ": far commutation"; });
                if (p + 1 < r.t())
                    t.expect(apply_tau_word(w, r, {p, p + 1, p}).word == apply_tau_word(w, r, {p + 1, p, p + 1}).word,
                             [&] { return where() + ": braid relation"; });
            }
        }
    });
}

Result chi_suite(const std::vector<RectSequence>& seqs, int samples, std::uint64_t seed, int jobs) {
    return run_indexed("chi", seqs.size(), jobs, [&](std::size_t i, Tally& t) {
        const RectSequence& r = seqs[i];
        std::seed_seq ss{seed, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(ss);
        const std::vector<Tableau> pool = all_lrt(r);
        const int len = r.total_cells();
        for (int k = 0; k < samples; ++k) {
            const Word w = sample_word(pool, rng, 2 * len);
            const Word c = chi(w, r);
            t.expect(is_r_lr(c, r), [&] { return at(r, w) + ": chi leaves W(R)"; });
            t.expect(chi_inverse(c, r) == w, [&] { return at(r, w) + ": chi_inverse"; });
            t.expect(chi_power(w, r, len) == w, [&] { return at(r, w) + ": chi^N is not the identity"; });
            for (int p = 1; p < r.t(); ++p)
                t.expect(chi(tau(p, w, r), r.swapped(p)) == tau(p, c, r),
                         [&] { return at(r, w) + ": chi does not commute with tau_" + std::to_string(p); });
            // Throws when 1 - |N| differs from the charge difference.
            chi_charge_delta(w, r);
            ++t.checks;
        }
    });
}

Result poset_suite(const std::vector<RectSequence>& seqs, int jobs) {
    return run_indexed("poset", seqs.size(), jobs, [&](std::size_t i, Tally& t) {
        const RectSequence& r = seqs[i];
        // Throws when longest and shortest descents disagree.
        CocyclagePoset poset = build_poset(r);
        ++t.checks;
        std::vector<long> charge(poset.nodes.size());
        std::vector<bool> has_cover(poset.nodes.size(), false);
        for (std::size_t k = 0; k < poset.nodes.size(); ++k) charge[k] = charge_explicit(poset.nodes[k], r).value;
        for (const auto& e : poset.edges) {
            has_cover[e.upper] = true;
            auto where = [&] { return at(r, row_reading_word(poset.nodes[e.upper])); };
            t.expect(poset.rank[e.upper] == poset.rank[e.lower] + 1, [&] { return where() + ": rank step"; });
            t.expect(charge[e.upper] == charge[e.lower] + 1, [&] { return where() + ": charge step"; });
        }
        for (std::size_t k = 0; k < poset.nodes.size(); ++k)
            t.expect(!has_cover[k] == (num_cols(poset.nodes[k]) == r.max_mu()),
                     [&] { return at(r, row_reading_word(poset.nodes[k])) + ": minimality vs column count"; });
        bool equal_mu = std::all_of(r.rects().begin(), r.rects().end(), [&](const Rect& x) { return x.mu == r[1].mu; });
        if (equal_mu)
            t.expect(poset.minimal_nodes().size() == 1, [&] { return "R=" + r.to_string() + ": minimum not unique"; });
    });
}

Result charge_suite(const std::vector<RectSequence>& seqs, int jobs) {
    return run_indexed("charge", seqs.size(), jobs, [&](std::size_t i, Tally& t) {
        const RectSequence& r = seqs[i];
        for (const Tableau& tab : all_lrt(r)) {
            const Word w = row_reading_word(tab);
            const long c = charge_explicit(w, r).value;
            t.expect(charge_axiomatic(tab, r).value == c, [&] { return at(r, w) + ": explicit vs axiomatic"; });
            for (const Word& w2 : knuth_neighbors(w))
                t.expect(charge_explicit(w2, r).value == c, [&] { return at(r, w2) + ": not Knuth invariant"; });
            for (int p = 1; p < r.t(); ++p)
                t.expect(charge_explicit(tau_tableau(p, tab, r), r.swapped(p)).value == c,
                         [&] { return at(r, w) + ": tau_" + std::to_string(p) + " changes charge"; });
            for (const Cover& cv : cocyclage_covers_down(tab, r))
                t.expect(charge_explicit(cv.lower, r).value + 1 == c, [&] { return at(r, w) + ": cover step"; });
            if (num_cols(tab) == r.max_mu() && r[1].mu == r.max_mu()) {
                std::vector<std::vector<int>> rest(tab.rows().begin() + r[1].eta, tab.rows().end());
                Tableau hat = Tableau(rest).shifted(-r[1].eta);
                t.expect(charge_explicit(hat, r.tail()).value == c, [&] { return at(r, w) + ": top rectangle strip"; });
            }
        }
    });
}

Result main_suite(const std::vector<RectSequence>& seqs, int jobs, const std::vector<Partition>& shapes) {
    return run_indexed("main", seqs.size(), jobs, [&](std::size_t i, Tally& t) {
        const RectSequence& r = seqs[i];
        std::vector<Partition> lambdas = shapes.empty() ? partitions_of(r.total_cells(), r.n()) : shapes;
        for (const Partition& lambda : lambdas) {
            QPolynomial lhs = charge_sum(enumerate_lrt(lambda, r), r);
            QPolynomial rhs = k_poly(lambda, r);
            t.expect(lhs == rhs, [&] {
                std::ostringstream os;
                os << "R=" << r.to_string() << " lambda=" << format_word(lambda.parts()) << ": charge sum "
                   << lhs.to_string() << " vs K " << rhs.to_string();
                return os.str();
            });
        }
    });
}

Result morris_suite(const std::vector<RectSequence>& seqs, int jobs) {
    return run_indexed("morris", seqs.size(), jobs, [&](std::size_t i, Tally& t) {
        const RectSequence& r = seqs[i];
        for (const Partition& lambda : partitions_of(r.total_cells(), r.n())) {
            QPolynomial lhs = k_poly(lambda, r);
            QPolynomial rhs = morris_rhs(lambda, r);
            t.expect(lhs == rhs, [&] {
                return "R=" + r.to_string() + " lambda=" + format_word(lambda.parts()) + ": K " + lhs.to_string() +
                       " vs recurrence " + rhs.to_string();
            });
        }
    });
}

Result kostka_suite(int max_size, int jobs) {
    std::vector<Partition> mus;
    for (int m = 1; m <= max_size; ++m)
        for (const Partition& mu : partitions_of(m)) mus.push_back(mu);
    return run_indexed("kostka", mus.size(), jobs, [&](std::size_t i, Tally& t) {
        const Partition& mu = mus[i];
        std::vector<Rect> rs;
        for (int part : mu.parts()) rs.push_back({part, 1});
        const RectSequence r(rs);
        const std::vector<int> eta(mu.length(), 1);
        for (const Partition& lambda : partitions_of(mu.size())) {
            auto tabs = column_strict_tableaux(lambda, mu.parts());
            for (const Tableau& tab : tabs)
                t.expect(charge_explicit(tab, r).value == classical_charge(tab),
                         [&] { return at(r, row_reading_word(tab)) + ": R-charge vs classical charge"; });
            t.expect(k_poly(lambda, eta, mu.parts()).at_one() == static_cast<std::int64_t>(tabs.size()), [&] {
                return "mu=" + format_word(mu.parts()) + " lambda=" + format_word(lambda.parts()) + ": K(1) vs Kostka";
            });
        }
    });
}

Result two_rect_suite(int max_side) {
    Tally t;
    long instances = 0;
    // Shape (7,6,5,2,1) for widths 3, 5 and heights 2, 3, in both orders.
    {
        const Partition lambda{7, 6, 5, 2, 1};
        t.expect(two_rect_tableau(lambda, {3, 2}, {5, 3}) ==
                     Tableau({{1, 1, 1, 3, 3, 3, 3}, {2, 2, 2, 4, 4, 4}, {3, 4, 5, 5, 5}, {4, 5}, {5}}),
                 [] { return std::string("example tableau"); });
        t.expect(two_rect_tableau(lambda, {5, 3}, {3, 2}) ==
                     Tableau({{1, 1, 1, 1, 1, 4, 4}, {2, 2, 2, 2, 2, 5}, {3, 3, 3, 3, 3}, {4, 5}, {5}}),
                 [] { return std::string("swapped example tableau"); });
    }
    for (int m1 = 1; m1 <= max_side; ++m1)
        for (int e1 = 1; e1 <= max_side; ++e1)
            for (int m2 = 1; m2 <= max_side; ++m2)
                for (int e2 = 1; e2 <= max_side; ++e2) {
                    ++instances;
                    const Rect r1{m1, e1}, r2{m2, e2};
                    const RectSequence r({r1, r2});
                    for (const Partition& lambda : partitions_of(r.total_cells(), e1 + e2, m1 + m2)) {
                        auto where = [&] { return "R=" + r.to_string() + " lambda=" + format_word(lambda.parts()); };
                        auto lrt = enumerate_lrt(lambda, r);
                        t.expect(lrt.size() <= 1, [&] { return where() + ": more than one tableau"; });
                        t.expect(two_rect_nonempty(lambda, r1, r2) == !lrt.empty(),
                                 [&] { return where() + ": nonemptiness conditions"; });
                        auto built = two_rect_tableau(lambda, r1, r2);
                        t.expect(built.has_value() == !lrt.empty() && (!built || *built == lrt[0]),
                                 [&] { return where() + ": construction"; });
                    }
                }
    return Result{"two_rect", instances, t.checks, t.failure};
}

Result run_suite(const std::string& name, const Bounds& b) {
    const bool poincare = name == "main" || name == "morris";
    if (poincare && b.max_n > kMaxAlphabet) throw std::length_error("max-n exceeds the supported alphabet size");
    if (name == "running") return running_example();
    if (name == "action") return action_suite(rect_sequences(2, b.max_t, b.max_n, b.max_cells, false), b.jobs);
    if (name == "chi") return chi_suite(rect_sequences(1, b.max_t, b.max_n, b.max_cells, true), b.samples, b.seed, b.jobs);
    if (name == "poset") return poset_suite(rect_sequences(1, b.max_t, b.max_n, b.max_cells, true), b.jobs);
    if (name == "charge") return charge_suite(rect_sequences(1, b.max_t, b.max_n, b.max_cells, false), b.jobs);
    if (name == "main") return main_suite(rect_sequences(1, b.max_t, b.max_n, b.max_cells, true), b.jobs);
    if (name == "morris") return morris_suite(rect_sequences(1, b.max_t, b.max_n, b.max_cells, true), b.jobs);
    if (name == "kostka") return kostka_suite(std::min(b.max_cells, b.max_n), b.jobs);
    if (name == "two_rect") return two_rect_suite(3);
    throw std::invalid_argument("unknown suite: " + name);
}

std::string summary(const Result& r) {
    std::ostringstream os;
    os << r.suite << ": ";
    if (r.passed())
        os << "PASS (" << r.instances << " instances, " << r.checks << " checks)";
    else
        os << "FAIL " << *r.failure;
    return os.str();
}

} // namespace lrc::verify
