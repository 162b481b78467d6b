#include "lrc/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrc {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i)
        if (other[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

Weight Partition::padded(std::size_t n) const {
    Weight w(n, 0);
    for (std::size_t i = 0; i < n && i < parts_.size(); ++i) w[i] = parts_[i];
    return w;
}

bool is_partition(const Weight& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) return false;
        if (i > 0 && w[i] > w[i - 1]) return false;
    }
    return true;
}

Partition sort_to_partition(const Weight& w) {
    Weight s = w;
    std::sort(s.begin(), s.end(), std::greater<>());
    return Partition(std::move(s));
}

namespace {

void partitions_rec(int m, int max_len, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (m == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(m - p, max_len - 1, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int m, int max_len, int max_part) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> cur;
    partitions_rec(m, max_len, max_part, cur, out);
    return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows, std::vector<int> inner)
    : rows_(std::move(rows)), inner_(std::move(inner)) {
    inner_.resize(rows_.size(), 0);
    for (int v : inner_)
        if (v < 0) throw std::invalid_argument("negative inner offset");
    normalize();
}

void Tableau::normalize() {
    while (!rows_.empty() && rows_.back().empty()) {
        rows_.pop_back();
        inner_.pop_back();
    }
}

int Tableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

bool Tableau::is_normal() const {
    return std::all_of(inner_.begin(), inner_.end(), [](int v) { return v == 0; });
}

Partition Tableau::shape() const {
    std::vector<int> p(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) p[i] = inner_[i] + static_cast<int>(rows_[i].size());
    return Partition(std::move(p));
}

Partition Tableau::inner_shape() const { return Partition(inner_); }

bool Tableau::has_cell(int row, int col) const {
    if (row < 1 || row > num_rows()) return false;
    int off = inner_[row - 1];
    return col > off && col <= off + static_cast<int>(rows_[row - 1].size());
}

int Tableau::at(int row, int col) const {
    if (!has_cell(row, col)) throw std::out_of_range("tableau cell out of range");
    return rows_[row - 1][col - inner_[row - 1] - 1];
}

bool Tableau::is_column_strict() const {
    for (int r = 1; r <= num_rows(); ++r) {
        const auto& row = rows_[r - 1];
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j] < row[j - 1]) return false;
        int off = inner_[r - 1];
        for (std::size_t j = 0; j < row.size(); ++j) {
            int c = off + static_cast<int>(j) + 1;
            if (has_cell(r - 1, c) && at(r - 1, c) >= row[j]) return false;
        }
    }
    return true;
}

int Tableau::max_letter() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int x : r) m = std::max(m, x);
    return m;
}

std::vector<Cell> Tableau::corners() const {
    std::vector<Cell> out;
    Partition sh = shape();
    for (std::size_t i = 0; i < sh.length(); ++i) {
        if (rows_[i].empty()) continue;
        if (sh[i + 1] < sh[i]) out.push_back({static_cast<int>(i) + 1, sh[i]});
    }
    return out;
}

Tableau Tableau::restrict_letters(int lo, int hi) const {
    std::vector<std::vector<int>> rows;
    std::vector<int> inner;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int off = inner_[i];
        std::vector<int> keep;
        for (int x : rows_[i]) {
            if (x < lo) ++off;
            else if (x <= hi) keep.push_back(x);
        }
        rows.push_back(std::move(keep));
        inner.push_back(off);
    }
    return Tableau(std::move(rows), std::move(inner));
}

Tableau Tableau::shifted(int delta) const {
    auto rows = rows_;
    for (auto& r : rows)
        for (int& x : r) x += delta;
    return Tableau(std::move(rows), inner_);
}

Weight content(const Word& w, int n) {
    int m = n;
    if (m < 0) m = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    Weight c(m, 0);
    for (int x : w) {
        if (x < 1 || x > m) throw std::out_of_range("letter outside the alphabet");
        ++c[x - 1];
    }
    return c;
}

Weight content(const Tableau& t, int n) { return content(row_reading_word(t), n); }

Word row_reading_word(const Tableau& t) {
    Word w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

Word column_reading_word(const Tableau& t) {
    Word w;
    int width = t.shape()[0];
    for (int c = 1; c <= width; ++c)
        for (int r = t.num_rows(); r >= 1; --r)
            if (t.has_cell(r, c)) w.push_back(t.at(r, c));
    return w;
}

bool is_mu_lattice(const Word& w, const Partition& mu) {
    int m = static_cast<int>(mu.length());
    for (int x : w) m = std::max(m, x);
    std::vector<int> c = mu.padded(m + 1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int x = *it;
        ++c[x - 1];
        if (x >= 2 && c[x - 1] > c[x - 2]) return false;
    }
    return true;
}

bool is_lattice(const Word& w) { return is_mu_lattice(w, Partition{}); }

Tableau key_tableau(const Weight& alpha) {
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("key tableau needs a nonnegative weight");
    int width = alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= width; ++j) {
        int r = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] < j) continue;
            if (static_cast<int>(rows.size()) <= r) rows.emplace_back();
            rows[r++].push_back(static_cast<int>(i) + 1);
        }
    }
    return Tableau(std::move(rows));
}

namespace {

struct ColumnStrictFiller {
    const Partition& shape;
    const Weight& alpha;
    const std::function<void(const Tableau&)>& visit;
    Partition conj;
    std::vector<std::vector<int>> grid;
    std::vector<int> remaining;
    int n;

    void fill(int col, int row) {
        if (col > static_cast<int>(conj.length())) {
            visit(Tableau(grid));
            return;
        }
        if (row > conj[col - 1]) {
            fill(col + 1, 1);
            return;
        }
        int lo = 1;
        if (row > 1) lo = std::max(lo, grid[row - 2][col - 1] + 1);
        if (col > 1) lo = std::max(lo, grid[row - 1][col - 2]);
        // Room for the strictly larger letters below in this column.
        int hi = n - (conj[col - 1] - row);
        for (int x = lo; x <= hi; ++x) {
            if (remaining[x - 1] == 0) continue;
            --remaining[x - 1];
            grid[row - 1][col - 1] = x;
            fill(col, row + 1);
            ++remaining[x - 1];
        }
    }
};

} // namespace

void for_each_column_strict(const Partition& shape, const Weight& alpha,
                            const std::function<void(const Tableau&)>& visit) {
    int total = 0;
    for (int a : alpha) {
        if (a < 0) return;
        total += a;
    }
    if (total != shape.size()) return;
    ColumnStrictFiller f{shape, alpha, visit, shape.conjugate(), {}, alpha, static_cast<int>(alpha.size())};
    for (std::size_t i = 0; i < shape.length(); ++i) f.grid.emplace_back(shape[i], 0);
    f.fill(1, 1);
}

std::vector<Tableau> column_strict_tableaux(const Partition& shape, const Weight& alpha) {
    std::vector<Tableau> out;
    for_each_column_strict(shape, alpha, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::uint64_t kostka_number(const Partition& lambda, const Weight& alpha) {
    std::uint64_t count = 0;
    for_each_column_strict(lambda, alpha, [&](const Tableau&) { ++count; });
    return count;
}

std::string format_word(const Word& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i > 0) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

Word parse_word(std::string_view s) {
    Word w;
    bool separated = s.find_first_of(" ,\t") != std::string_view::npos;
    if (!separated) {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad letter in word");
            w.push_back(ch - '0');
        }
        return w;
    }
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        w.push_back(std::stoi(tok));
        tok.clear();
    };
    for (char ch : s) {
        if (ch == ' ' || ch == ',' || ch == '\t') flush();
        else if (ch >= '0' && ch <= '9') tok += ch;
        else throw std::invalid_argument("bad letter in word");
    }
    flush();
    return w;
}

std::string to_text(const Tableau& t) {
    std::ostringstream os;
    for (int r = 0; r < t.num_rows(); ++r) {
        bool first = true;
        for (int j = 0; j < t.inner()[r]; ++j) {
            os << (first ? "" : " ") << '.';
            first = false;
        }
        for (int x : t.rows()[r]) {
            os << (first ? "" : " ") << x;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

Tableau tableau_from_text(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> inner;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> row;
        int off = 0;
        while (ls >> tok) {
            if (tok == ".") {
                if (!row.empty()) throw std::invalid_argument("inner cell after a letter");
                ++off;
            } else {
                row.push_back(std::stoi(tok));
            }
        }
        rows.push_back(std::move(row));
        inner.push_back(off);
    }
    return Tableau(std::move(rows), std::move(inner));
}

} // namespace lrc
