#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/lr.hpp"

namespace lrc {

struct Cover {
    Cell corner;
    Tableau lower;
};

// Tableaux T' <_R T obtained by ejecting each corner of T east of column
// max mu_i, ordered by corner.
std::vector<Cover> cocyclage_covers_down(const Tableau& t, const RectSequence& r);

struct CocyclagePoset {
    RectSequence rects;
    std::vector<Tableau> nodes;
    // (upper, lower, corner) as node indices.
    struct Edge {
        int upper;
        int lower;
        Cell corner;
    };
    std::vector<Edge> edges;
    std::vector<int> rank;

    int index_of(const Tableau& t) const;
    std::vector<int> minimal_nodes() const;
};

// Nodes are LRT(lambda; R) over the given shapes (all shapes when empty).
// Throws std::logic_error when the longest and shortest descents to a minimal
// node disagree anywhere.
CocyclagePoset build_poset(const RectSequence& r, std::vector<Partition> shapes = {});

// Cells of shape(P(w restricted to A_i ∪ A_{i+1})) right of column max(mu_i, mu_{i+1}).
int d_statistic(int i, const Word& w, const RectSequence& r);

// One element of the S_t orbit of (w, R) under the tau action.
struct OrbitPoint {
    Permutation sigma;
    RectSequence rects;
    Word word;
};
// All t! points, reached by breadth-first search over tau_1 .. tau_{t-1}.
std::vector<OrbitPoint> tau_orbit(const Word& w, const RectSequence& r);
// tau_{word[0]} tau_{word[1]} ... applied to (w, R), rightmost first.
OrbitPoint apply_tau_word(const Word& w, const RectSequence& r, const std::vector<int>& word);

struct ChargeValue {
    enum class Source { explicit_formula, axiomatic };
    long value = 0;
    Source source = Source::explicit_formula;
};

// The S_t average of sum_i (t-i) d_{i, sigma R}(sigma w).
ChargeValue charge_explicit(const Word& w, const RectSequence& r);
ChargeValue charge_explicit(const Tableau& t, const RectSequence& r);
// Descends covers, sorts R by tau moves at minimal tableaux, and strips the
// top rectangle when R is sorted.
ChargeValue charge_axiomatic(const Tableau& t, const RectSequence& r);

// Lascoux-Schutzenberger charge of the reading word, by standard subwords.
long classical_charge(const Word& w);
long classical_charge(const Tableau& t);

// 1 - |N| for the set N of indices i with the last letter of
// (tau_1 ... tau_{i-1}) w in the first alphabet of (tau_1 ... tau_{i-1}) R.
long chi_charge_delta(const Word& w, const RectSequence& r);

std::string poset_to_dot(const CocyclagePoset& poset);
std::string poset_to_json(const CocyclagePoset& poset);

} // namespace lrc
