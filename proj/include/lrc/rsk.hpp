#pragma once

#include <set>
#include <utility>
#include <vector>

#include "lrc/core.hpp"

namespace lrc {

struct TableauPair {
    Tableau p;
    Tableau q;
    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

struct Insertion {
    Tableau tableau;
    Cell cell;
};

// Schensted row insertion into a tableau of normal shape.
Insertion row_insert(const Tableau& t, int x);
// Inverse bumping from the corner s; row_insert of the result gives back (t, s).
std::pair<Tableau, int> reverse_row_insert(const Tableau& t, Cell s);
// Column insertion: column_insert(P(v), x) = P(x v).
Insertion column_insert(const Tableau& t, int x);
std::pair<Tableau, int> reverse_column_insert(const Tableau& t, Cell s);

Tableau p_tableau(const Word& w);
// Q is standard: letter i marks the cell created by the i-th insertion.
TableauPair rs_pair(const Word& w);
Word inverse_rs(const TableauPair& pq);

// words[i-1] is the weakly increasing word u^i. P = P(u^n ... u^1) and Q is
// column-strict with shape(Q|[i]) = shape(P(u^i ... u^1)).
TableauPair column_rsk(const std::vector<Word>& words);
// Inverse of column_rsk; returns n words where n is the largest letter of Q
// unless a larger n is requested.
std::vector<Word> inverse_column_rsk(const TableauPair& pq, int n = 0);

// All words one elementary Knuth move away from w.
std::set<Word> knuth_neighbors(const Word& w);
// Knuth class of w by breadth-first search over knuth_neighbors.
std::set<Word> knuth_class(const Word& w);

// i-th letter is n+1-w_{N+1-i}.
Word word_sharp(const Word& w, int n);
// shape((T^ev)|[i]) = shape(P(T|[n+1-i, n])) for every i.
Tableau evacuation(const Tableau& t, int n);

// pr_k on a standard tableau with N cells, 0 <= k <= N.
Tableau promotion(const Tableau& q, int k);

// Second row length of P(vu); both words weakly increasing.
int two_row_overlap(const Word& v, const Word& u);

// Two-row skew tableau with first row u and second row v in the placement of
// maximum overlap; inner holds the offset of the first row.
Tableau two_row_layout(const Word& u, const Word& v);
// Slides the two-row tableau (first row u, second row v) by jeu de taquin
// until its first row has first_row_length cells. Returns the new (first, second)
// rows. Throws if that length is not reachable.
std::pair<Word, Word> two_row_slide(const Word& u, const Word& v, int first_row_length);

} // namespace lrc
