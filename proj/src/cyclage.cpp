#include "lrc/cyclage.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lrc/rsk.hpp"

namespace lrc {

namespace {

std::vector<Cover> covers_unchecked(const Tableau& t, const RectSequence& r) {
    std::vector<Cover> out;
    int a = r.max_mu();
    for (Cell s : t.corners()) {
        if (s.col <= a) continue;
        auto [u, x] = reverse_row_insert(t, s);
        Word w = row_reading_word(u);
        w.push_back(x);
        out.push_back({s, p_tableau(chi(w, r))});
    }
    return out;
}

void require_lr(const Word& w, const RectSequence& r) {
    if (!is_r_lr(w, r)) throw std::invalid_argument("word is not R-LR");
}

} // namespace

std::vector<Cover> cocyclage_covers_down(const Tableau& t, const RectSequence& r) {
    require_lr(row_reading_word(t), r);
    return covers_unchecked(t, r);
}

int CocyclagePoset::index_of(const Tableau& t) const {
    auto it = std::find(nodes.begin(), nodes.end(), t);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

std::vector<int> CocyclagePoset::minimal_nodes() const {
    std::vector<char> has_lower(nodes.size(), 0);
    for (const Edge& e : edges) has_lower[e.upper] = 1;
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!has_lower[i]) out.push_back(static_cast<int>(i));
    return out;
}

CocyclagePoset build_poset(const RectSequence& r, std::vector<Partition> shapes) {
    if (shapes.empty()) shapes = lrt_shapes(r);
    CocyclagePoset poset;
    poset.rects = r;
    std::map<Tableau, int> index;
    std::deque<int> queue;
    auto add = [&](const Tableau& t) {
        auto [it, fresh] = index.emplace(t, static_cast<int>(poset.nodes.size()));
        if (fresh) {
            poset.nodes.push_back(t);
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (const Partition& p : shapes)
        for (const Tableau& t : enumerate_lrt(p, r)) add(t);
    // Lower covers can change the shape; close the node set downward.
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Cover& c : covers_unchecked(poset.nodes[u], r)) {
            int v = add(c.lower);
            poset.edges.push_back({u, v, c.corner});
        }
    }
    const std::size_t m = poset.nodes.size();
    std::vector<std::vector<int>> lower(m);
    for (const auto& e : poset.edges) lower[e.upper].push_back(e.lower);
    std::vector<int> longest(m, -1), shortest(m, -1);
    std::function<void(int)> visit = [&](int u) {
        if (longest[u] >= 0) return;
        if (lower[u].empty()) {
            longest[u] = shortest[u] = 0;
            return;
        }
        int lo = 1 << 30, hi = 0;
        for (int v : lower[u]) {
            visit(v);
            lo = std::min(lo, shortest[v] + 1);
            hi = std::max(hi, longest[v] + 1);
        }
        longest[u] = hi;
        shortest[u] = lo;
    };
    for (std::size_t u = 0; u < m; ++u) {
        visit(static_cast<int>(u));
        if (longest[u] != shortest[u])
            throw std::logic_error("cocyclage poset is not graded at " + format_word(row_reading_word(poset.nodes[u])));
    }
    poset.rank = std::move(longest);
    return poset;
}

int d_statistic(int i, const Word& w, const RectSequence& r) {
    if (i < 1 || i >= r.t()) throw std::out_of_range("d statistic index out of range");
    Word sub = restrict_word(w, r.alphabet_begin(i), r.alphabet_end(i + 1));
    Partition sh = p_tableau(sub).shape();
    int a = std::max(r[i].mu, r[i + 1].mu);
    int d = 0;
    for (int part : sh.parts()) d += std::max(0, part - a);
    return d;
}

std::vector<OrbitPoint> tau_orbit(const Word& w, const RectSequence& r) {
    std::vector<OrbitPoint> out;
    if (r.t() == 0) {
        out.push_back({Permutation::identity(0), r, w});
        return out;
    }
    std::map<Permutation, int> seen;
    out.push_back({Permutation::identity(r.t()), r, w});
    seen.emplace(out.back().sigma, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int p = 1; p < r.t(); ++p) {
            Permutation sigma = Permutation::from_reduced_word(r.t(), {p}) * out[k].sigma;
            if (seen.count(sigma)) continue;
            OrbitPoint next{sigma, out[k].rects.swapped(p), tau(p, out[k].word, out[k].rects)};
            seen.emplace(sigma, static_cast<int>(out.size()));
            out.push_back(std::move(next));
        }
    }
    return out;
}

OrbitPoint apply_tau_word(const Word& w, const RectSequence& r, const std::vector<int>& word) {
    OrbitPoint pt{Permutation::identity(r.t()), r, w};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int p = *it;
        pt.word = tau(p, pt.word, pt.rects);
        pt.rects = pt.rects.swapped(p);
        pt.sigma = Permutation::from_reduced_word(r.t(), {p}) * pt.sigma;
    }
    return pt;
}

namespace {

long charge_explicit_unchecked(const Word& w, const RectSequence& r) {
    const int t = r.t();
    if (t < 2) return 0;
    long total = 0;
    long orbit_size = 0;
    for (const OrbitPoint& pt : tau_orbit(w, r)) {
        ++orbit_size;
        for (int i = 1; i < t; ++i) total += static_cast<long>(t - i) * d_statistic(i, pt.word, pt.rects);
    }
    if (total % orbit_size != 0) throw std::logic_error("charge average is not an integer");
    return total / orbit_size;
}

} // namespace

ChargeValue charge_explicit(const Word& w, const RectSequence& r) {
    require_lr(w, r);
    return {charge_explicit_unchecked(w, r), ChargeValue::Source::explicit_formula};
}

ChargeValue charge_explicit(const Tableau& t, const RectSequence& r) {
    return charge_explicit(row_reading_word(t), r);
}

namespace {

long charge_axiomatic_rec(const Tableau& t, const RectSequence& r) {
    if (r.empty()) return 0;
    auto covers = covers_unchecked(t, r);
    if (!covers.empty()) return 1 + charge_axiomatic_rec(covers.front().lower, r);
    for (int p = 1; p < r.t(); ++p) {
        const Rect& x = r[p];
        const Rect& y = r[p + 1];
        if (x.mu < y.mu || (x.mu == y.mu && x.eta < y.eta))
            return charge_axiomatic_rec(tau_tableau(p, t, r), r.swapped(p));
    }
    // R is sorted, hence dominant with mu_1 = a, and t is minimal.
    const int top = r[1].eta;
    if (t.num_rows() < top) throw std::logic_error("minimal tableau lacks the top rectangle");
    std::vector<std::vector<int>> head(t.rows().begin(), t.rows().begin() + top);
    if (Tableau(head) != r.yamanouchi(1)) throw std::logic_error("minimal tableau does not start with Y_1");
    std::vector<std::vector<int>> rest(t.rows().begin() + top, t.rows().end());
    return charge_axiomatic_rec(Tableau(std::move(rest)).shifted(-top), r.tail());
}

} // namespace

ChargeValue charge_axiomatic(const Tableau& t, const RectSequence& r) {
    require_lr(row_reading_word(t), r);
    return {charge_axiomatic_rec(t, r), ChargeValue::Source::axiomatic};
}

long classical_charge(const Word& w) {
    Weight c = content(w);
    if (!is_partition(c)) throw std::invalid_argument("classical charge needs partition content");
    const int len = static_cast<int>(w.size());
    std::vector<char> used(w.size(), 0);
    int left = len;
    long charge = 0;
    while (left > 0) {
        int k = 0;
        for (int x = 0; x < len; ++x)
            if (!used[x]) k = std::max(k, w[x]);
        // Standard subword: find 1 scanning leftwards from the right end,
        // then each next letter continuing leftwards cyclically.
        int pos = len;
        int index = 0;
        for (int letter = 1; letter <= k; ++letter) {
            int p = pos - 1;
            bool wrapped = false;
            for (;;) {
                if (p < 0) {
                    p = len - 1;
                    wrapped = true;
                }
                if (!used[p] && w[p] == letter) break;
                --p;
            }
            if (letter > 1 && wrapped) ++index;
            charge += index;
            used[p] = 1;
            --left;
            pos = p;
        }
    }
    return charge;
}

long classical_charge(const Tableau& t) { return classical_charge(row_reading_word(t)); }

long chi_charge_delta(const Word& w, const RectSequence& r) {
    require_lr(w, r);
    if (w.empty()) throw std::invalid_argument("chi needs a nonempty word");
    long hits = 0;
    std::vector<int> prefix;
    for (int i = 1; i <= r.t(); ++i) {
        OrbitPoint pt = apply_tau_word(w, r, prefix);
        if (pt.rects.block_of(pt.word.back()) == 1) ++hits;
        prefix.push_back(i);
    }
    long delta = 1 - hits;
    long direct = charge_explicit_unchecked(w, r) - charge_explicit_unchecked(chi(w, r), r);
    if (delta != direct) throw std::logic_error("chi charge identity fails for " + format_word(w));
    return delta;
}

std::string poset_to_dot(const CocyclagePoset& poset) {
    std::ostringstream os;
    os << "digraph cocyclage {\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << format_word(row_reading_word(poset.nodes[i])) << "\\nrank "
           << poset.rank[i] << "\"];\n";
    for (const auto& e : poset.edges)
        os << "  n" << e.upper << " -> n" << e.lower << " [label=\"(" << e.corner.row << "," << e.corner.col
           << ")\"];\n";
    os << "}\n";
    return os.str();
}

std::string poset_to_json(const CocyclagePoset& poset) {
    nlohmann::json j;
    j["rects"] = poset.rects.to_string();
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        j["nodes"].push_back({{"word", format_word(row_reading_word(poset.nodes[i]))},
                              {"shape", poset.nodes[i].shape().parts()},
                              {"rank", poset.rank[i]}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : poset.edges) j["edges"].push_back({e.upper, e.lower});
    return j.dump(2);
}

} // namespace lrc
