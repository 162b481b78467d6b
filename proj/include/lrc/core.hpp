#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// Letters are 1-based: a word over [n] uses letters 1..n.
using Word = std::vector<int>;
// A weight is an integer vector whose entries are never reordered.
using Weight = std::vector<int>;

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // Zero past the last part.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& other) const;
    Partition conjugate() const;
    // Parts padded with zeros (or truncated when shorter) to length n.
    Weight padded(std::size_t n) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

bool is_partition(const Weight& w);
// Sorts the entries into weakly decreasing order; entries must be nonnegative.
Partition sort_to_partition(const Weight& w);
// Partitions of m with at most max_len parts, each at most max_part, in
// reverse lexicographic order.
std::vector<Partition> partitions_of(int m, int max_len = 1 << 20, int max_part = 1 << 20);

// 1-based (row, column) position.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A filling of the skew shape outer/inner. Row r holds the letters of the
// cells (r, inner[r]+1) .. (r, inner[r]+rows[r].size()). Trailing rows
// without cells are dropped.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows, std::vector<int> inner = {});
    Tableau(std::initializer_list<std::vector<int>> rows) : Tableau(std::vector<std::vector<int>>(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& inner() const { return inner_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int size() const;
    bool empty() const { return rows_.empty(); }
    bool is_normal() const;

    Partition shape() const;
    Partition inner_shape() const;
    bool has_cell(int row, int col) const;
    int at(int row, int col) const;
    int at(Cell c) const { return at(c.row, c.col); }

    bool is_column_strict() const;
    int max_letter() const;
    // Outer corners of the shape, ordered by row.
    std::vector<Cell> corners() const;
    // Cells holding letters in [lo, hi]; the cells with smaller letters
    // become part of the inner shape.
    Tableau restrict_letters(int lo, int hi) const;
    Tableau shifted(int delta) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    void normalize();

    std::vector<std::vector<int>> rows_;
    std::vector<int> inner_;
};

// Entry i-1 is the multiplicity of letter i; the result has length n, or
// the largest letter when n is negative.
Weight content(const Word& w, int n = -1);
Weight content(const Tableau& t, int n = -1);

// Rows bottom to top, each left to right.
Word row_reading_word(const Tableau& t);
// Columns left to right, each bottom to top.
Word column_reading_word(const Tableau& t);

bool is_mu_lattice(const Word& w, const Partition& mu);
bool is_lattice(const Word& w);

// Column j holds exactly the letters i with alpha_i >= j.
Tableau key_tableau(const Weight& alpha);

// Visits every column-strict tableau of the given normal shape and content.
void for_each_column_strict(const Partition& shape, const Weight& alpha,
                            const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> column_strict_tableaux(const Partition& shape, const Weight& alpha);
std::uint64_t kostka_number(const Partition& lambda, const Weight& alpha);

// Word formatting: concatenated digits when every letter is below 10,
// otherwise space separated.
std::string format_word(const Word& w);
// Accepts "7442632512131" or whitespace/comma separated letters.
Word parse_word(std::string_view s);

// One row per line, space-separated letters, '.' for inner cells.
std::string to_text(const Tableau& t);
Tableau tableau_from_text(std::string_view text);

} // namespace lrc
