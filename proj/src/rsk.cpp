#include "lrc/rsk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace lrc {

namespace {

using Rows = std::vector<std::vector<int>>;

Rows rows_of(const Tableau& t) {
    if (!t.is_normal()) throw std::invalid_argument("expected a tableau of normal shape");
    return t.rows();
}

bool is_corner(const Rows& rows, Cell s) {
    if (s.row < 1 || s.row > static_cast<int>(rows.size())) return false;
    int len = static_cast<int>(rows[s.row - 1].size());
    int below = s.row < static_cast<int>(rows.size()) ? static_cast<int>(rows[s.row].size()) : 0;
    return len > 0 && s.col == len && below < len;
}

int column_height(const Rows& rows, int col) {
    int h = 0;
    while (h < static_cast<int>(rows.size()) && static_cast<int>(rows[h].size()) >= col) ++h;
    return h;
}

} // namespace

Insertion row_insert(const Tableau& t, int x) {
    Rows rows = rows_of(t);
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            Cell c{static_cast<int>(r) + 1, static_cast<int>(row.size())};
            return {Tableau(std::move(rows)), c};
        }
        std::swap(*it, x);
    }
}

std::pair<Tableau, int> reverse_row_insert(const Tableau& t, Cell s) {
    Rows rows = rows_of(t);
    if (!is_corner(rows, s)) throw std::invalid_argument("reverse row insertion needs a corner cell");
    int y = rows[s.row - 1].back();
    rows[s.row - 1].pop_back();
    for (int r = s.row - 2; r >= 0; --r) {
        auto& row = rows[r];
        // The largest entry strictly smaller than y was bumped by y.
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it;
        std::swap(*it, y);
    }
    return {Tableau(std::move(rows)), y};
}

Insertion column_insert(const Tableau& t, int x) {
    Rows rows = rows_of(t);
    for (int col = 1;; ++col) {
        int h = column_height(rows, col);
        int r = 0;
        while (r < h && rows[r][col - 1] < x) ++r;
        if (r == h) {
            if (h == static_cast<int>(rows.size())) rows.emplace_back();
            rows[h].push_back(x);
            return {Tableau(std::move(rows)), Cell{h + 1, col}};
        }
        std::swap(rows[r][col - 1], x);
    }
}

std::pair<Tableau, int> reverse_column_insert(const Tableau& t, Cell s) {
    Rows rows = rows_of(t);
    if (!is_corner(rows, s)) throw std::invalid_argument("reverse column insertion needs a corner cell");
    int y = rows[s.row - 1].back();
    rows[s.row - 1].pop_back();
    for (int col = s.col - 1; col >= 1; --col) {
        int h = column_height(rows, col);
        // The bottommost entry not exceeding y was the one that displaced y.
        int r = h - 1;
        while (rows[r][col - 1] > y) --r;
        std::swap(rows[r][col - 1], y);
    }
    return {Tableau(std::move(rows)), y};
}

Tableau p_tableau(const Word& w) {
    Tableau t;
    for (int x : w) t = row_insert(t, x).tableau;
    return t;
}

TableauPair rs_pair(const Word& w) {
    Tableau p;
    Rows q;
    int step = 0;
    for (int x : w) {
        auto ins = row_insert(p, x);
        p = std::move(ins.tableau);
        if (ins.cell.row > static_cast<int>(q.size())) q.emplace_back();
        q[ins.cell.row - 1].push_back(++step);
    }
    return {p, Tableau(std::move(q))};
}

Word inverse_rs(const TableauPair& pq) {
    if (pq.p.shape() != pq.q.shape()) throw std::invalid_argument("P and Q shapes differ");
    Tableau p = pq.p;
    Rows q = rows_of(pq.q);
    int n = pq.q.size();
    Word w(n);
    for (int k = n; k >= 1; --k) {
        int r = 0;
        while (q[r].empty() || q[r].back() != k) {
            if (++r == static_cast<int>(q.size())) throw std::invalid_argument("Q is not standard");
        }
        Cell s{r + 1, static_cast<int>(q[r].size())};
        auto [u, x] = reverse_row_insert(p, s);
        p = std::move(u);
        q[r].pop_back();
        w[k - 1] = x;
    }
    return w;
}

TableauPair column_rsk(const std::vector<Word>& words) {
    Tableau p;
    Rows q;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& u = words[i];
        if (!std::is_sorted(u.begin(), u.end())) throw std::invalid_argument("column RSK needs weakly increasing words");
        for (auto it = u.rbegin(); it != u.rend(); ++it) {
            auto ins = column_insert(p, *it);
            p = std::move(ins.tableau);
            if (ins.cell.row > static_cast<int>(q.size())) q.emplace_back();
            q[ins.cell.row - 1].push_back(static_cast<int>(i) + 1);
        }
    }
    return {p, Tableau(std::move(q))};
}

std::vector<Word> inverse_column_rsk(const TableauPair& pq, int n) {
    if (pq.p.shape() != pq.q.shape()) throw std::invalid_argument("P and Q shapes differ");
    n = std::max(n, pq.q.max_letter());
    Tableau p = pq.p;
    Tableau q = pq.q;
    std::vector<Word> words(n);
    for (int i = n; i >= 1; --i) {
        // The cells labelled i form a horizontal strip; the rightmost one was
        // created last, by the first letter of u^i.
        for (;;) {
            Cell last{0, 0};
            for (Cell c : q.corners())
                if (q.at(c) == i && c.col > last.col) last = c;
            if (last.row == 0) break;
            auto [u, x] = reverse_column_insert(p, last);
            p = std::move(u);
            Rows qr = q.rows();
            qr[last.row - 1].pop_back();
            q = Tableau(std::move(qr));
            words[i - 1].push_back(x);
        }
    }
    if (!p.empty()) throw std::invalid_argument("Q has letters outside [n]");
    return words;
}

std::set<Word> knuth_neighbors(const Word& w) {
    std::set<Word> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        int a = w[i], b = w[i + 1], c = w[i + 2];
        // y x z <-> y z x with x < y <= z
        if ((b < a && a <= c) || (c < a && a <= b)) {
            Word v = w;
            std::swap(v[i + 1], v[i + 2]);
            out.insert(std::move(v));
        }
        // x z y <-> z x y with x <= y < z
        if ((a <= c && c < b) || (b <= c && c < a)) {
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.insert(std::move(v));
        }
    }
    return out;
}

std::set<Word> knuth_class(const Word& w) {
    std::set<Word> seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        for (const Word& v : knuth_neighbors(cur))
            if (seen.insert(v).second) queue.push_back(v);
    }
    return seen;
}

Word word_sharp(const Word& w, int n) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = n + 1 - x;
    return out;
}

Tableau evacuation(const Tableau& t, int n) {
    Rows rows = rows_of(t);
    Partition prev;
    for (int i = 1; i <= n; ++i) {
        Partition cur = p_tableau(row_reading_word(t.restrict_letters(n + 1 - i, n))).shape();
        for (std::size_t r = 0; r < cur.length(); ++r)
            for (int c = prev[r]; c < cur[r]; ++c) rows[r][c] = i;
        prev = cur;
    }
    return Tableau(std::move(rows));
}

Tableau promotion(const Tableau& q, int k) {
    Rows grid = rows_of(q);
    const int n = q.size();
    if (k < 0 || k > n) throw std::invalid_argument("promotion index out of range");
    // Cells with label > k are live until they are overtaken by the sliding
    // holes; vacated cells receive their final label and are frozen.
    std::vector<std::vector<char>> frozen(grid.size());
    for (std::size_t r = 0; r < grid.size(); ++r) frozen[r].assign(grid[r].size(), 0);
    std::map<int, Cell> where;
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            where[grid[r][c]] = {static_cast<int>(r), static_cast<int>(c)};
    auto live = [&](int r, int c) {
        return r < static_cast<int>(grid.size()) && c < static_cast<int>(grid[r].size()) && !frozen[r][c] &&
               grid[r][c] > k;
    };
    for (int j = k; j >= 1; --j) {
        auto [r, c] = where.at(j);
        for (;;) {
            bool right = live(r, c + 1);
            bool down = live(r + 1, c);
            if (!right && !down) break;
            if (right && (!down || grid[r][c + 1] < grid[r + 1][c])) {
                grid[r][c] = grid[r][c + 1];
                ++c;
            } else {
                grid[r][c] = grid[r + 1][c];
                ++r;
            }
        }
        grid[r][c] = j + n - k;
        frozen[r][c] = 1;
    }
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            if (!frozen[r][c]) grid[r][c] -= k;
    return Tableau(std::move(grid));
}

int two_row_overlap(const Word& v, const Word& u) {
    Word vu = v;
    vu.insert(vu.end(), u.begin(), u.end());
    Tableau p = p_tableau(vu);
    if (p.num_rows() > 2) throw std::invalid_argument("overlap needs weakly increasing words");
    return p.num_rows() == 2 ? static_cast<int>(p.rows()[1].size()) : 0;
}

Tableau two_row_layout(const Word& u, const Word& v) {
    int k = two_row_overlap(v, u);
    int offset = static_cast<int>(v.size()) - k;
    Tableau t({u, v}, {offset, 0});
    if (!t.is_column_strict()) throw std::logic_error("two-row layout is not column-strict");
    return t;
}

namespace {

// Absolute columns: first row occupies (off, off + |u|], second row (0, |v|].
struct TwoRow {
    std::map<int, int> top;
    std::map<int, int> bottom;

    TwoRow(const Word& u, const Word& v, int off) {
        for (std::size_t i = 0; i < u.size(); ++i) top[off + 1 + static_cast<int>(i)] = u[i];
        for (std::size_t i = 0; i < v.size(); ++i) bottom[1 + static_cast<int>(i)] = v[i];
    }

    static Word values(const std::map<int, int>& m) {
        Word w;
        for (auto [c, x] : m) w.push_back(x);
        return w;
    }
};

// One forward slide into the inner corner just left of the first row.
std::pair<Word, Word> slide_in(const Word& u, const Word& v) {
    Tableau lay = two_row_layout(u, v);
    int off = lay.inner()[0];
    if (off < 1) throw std::invalid_argument("no inner corner to slide into");
    TwoRow g(u, v, off);
    int row = 1, col = off;
    for (;;) {
        auto& cur = row == 1 ? g.top : g.bottom;
        auto right = cur.find(col + 1);
        auto down = row == 1 ? g.bottom.find(col) : g.bottom.end();
        bool has_r = right != cur.end();
        bool has_d = down != g.bottom.end();
        if (!has_r && !has_d) break;
        if (has_d && (!has_r || down->second <= right->second)) {
            g.top[col] = down->second;
            g.bottom.erase(down);
            row = 2;
        } else {
            cur[col] = right->second;
            cur.erase(right);
            ++col;
        }
    }
    return {TwoRow::values(g.top), TwoRow::values(g.bottom)};
}

// One reverse slide from the outer cell just right of the second row.
std::pair<Word, Word> slide_out(const Word& u, const Word& v) {
    Tableau lay = two_row_layout(u, v);
    int off = lay.inner()[0];
    int end1 = off + static_cast<int>(u.size());
    int end2 = static_cast<int>(v.size());
    if (end2 + 1 > end1) throw std::invalid_argument("no outer corner in the second row");
    TwoRow g(u, v, off);
    int row = 2, col = end2 + 1;
    for (;;) {
        auto& cur = row == 1 ? g.top : g.bottom;
        auto left = cur.find(col - 1);
        auto up = row == 2 ? g.top.find(col) : g.top.end();
        bool has_l = left != cur.end();
        bool has_u = up != g.top.end();
        if (!has_l && !has_u) {
            if (row == 2) throw std::logic_error("reverse slide left the maximal-overlap layout");
            break;
        }
        if (has_u && (!has_l || up->second >= left->second)) {
            g.bottom[col] = up->second;
            g.top.erase(up);
            row = 1;
        } else {
            cur[col] = left->second;
            cur.erase(left);
            --col;
        }
    }
    return {TwoRow::values(g.top), TwoRow::values(g.bottom)};
}

} // namespace

std::pair<Word, Word> two_row_slide(const Word& u, const Word& v, int first_row_length) {
    int k = two_row_overlap(v, u);
    int total = static_cast<int>(u.size() + v.size());
    if (first_row_length < k || first_row_length > total - k)
        throw std::invalid_argument("first row length not reachable by two-row slides");
    Word a = u, b = v;
    while (static_cast<int>(a.size()) < first_row_length) std::tie(a, b) = slide_in(a, b);
    while (static_cast<int>(a.size()) > first_row_length) std::tie(a, b) = slide_out(a, b);
    return {a, b};
}

} // namespace lrc
