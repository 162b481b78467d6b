#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/crystal.hpp"

namespace lrc {

// A rectangle with eta rows and mu columns.
struct Rect {
    int mu = 0;
    int eta = 0;
    int cells() const { return mu * eta; }
    friend bool operator==(const Rect&, const Rect&) = default;
    friend auto operator<=>(const Rect&, const Rect&) = default;
};

// The rectangle i (1-based) owns the alphabet A_i, the i-th block of
// eta_i consecutive letters of [n].
class RectSequence {
public:
    RectSequence() = default;
    explicit RectSequence(std::vector<Rect> rects);
    // "3x2,2x2,1x3": columns x rows, comma separated.
    static RectSequence parse(std::string_view spec);

    const std::vector<Rect>& rects() const { return rects_; }
    const Rect& operator[](int i) const { return rects_.at(i - 1); }
    int t() const { return static_cast<int>(rects_.size()); }
    int n() const;
    int total_cells() const;
    int max_mu() const;
    bool empty() const { return rects_.empty(); }
    // First and last letters of A_i.
    int alphabet_begin(int i) const;
    int alphabet_end(int i) const;
    // Block of the letter x.
    int block_of(int x) const;
    std::vector<int> etas() const;
    // gamma(R) = (mu_1^eta_1, mu_2^eta_2, ...).
    Weight gamma() const;
    bool is_dominant() const;
    // Y_i: row j is mu_i copies of the j-th letter of A_i.
    Tableau yamanouchi(int i) const;
    // R with rectangles p and p+1 exchanged.
    RectSequence swapped(int p) const;
    // (R_2, ..., R_t).
    RectSequence tail() const;
    // Rectangle i of the result is R_{sigma^{-1}(i)}.
    RectSequence permuted(const Permutation& sigma) const;
    std::string to_string() const;

    friend bool operator==(const RectSequence&, const RectSequence&) = default;
    friend auto operator<=>(const RectSequence&, const RectSequence&) = default;

private:
    std::vector<Rect> rects_;
};

// Subword of letters in [lo, hi].
Word restrict_word(const Word& w, int lo, int hi);

bool is_r_lr(const Word& w, const RectSequence& r);

// LRT(lambda; R), ordered lexicographically by reading word.
std::vector<Tableau> enumerate_lrt(const Partition& lambda, const RectSequence& r);
// Every partition shape with a nonempty LRT(lambda; R).
std::vector<Partition> lrt_shapes(const RectSequence& r);

struct TwoRectRegions {
    int a = 0;        // max mu
    int a_prime = 0;  // min mu
    int l = 0;        // max eta
    int l_prime = 0;  // min eta
    bool in_ne(int row, int col) const { return row <= l_prime && col > a; }
    bool in_sw(int row, int col) const { return row > l && col <= a_prime; }
};

TwoRectRegions two_rect_regions(const Rect& r1, const Rect& r2);
// Checks the containment and complementarity conditions on lambda.
bool two_rect_nonempty(const Partition& lambda, const Rect& r1, const Rect& r2);
// The unique tableau of LRT(lambda; (R1, R2)) built from Y_1, key(alpha)
// east of column mu_1 and key(beta) west of it, or nothing.
std::optional<Tableau> two_rect_tableau(const Partition& lambda, const Rect& r1, const Rect& r2);

// tau_p on W(R); the result lies in W(R with p and p+1 swapped).
Word tau(int p, const Word& w, const RectSequence& r);
Tableau tau_tableau(int p, const Tableau& t, const RectSequence& r);

// chi_R(u x) = (w0 x)(w0 u) with w0 the longest element stabilizing each A_i.
Word chi(const Word& w, const RectSequence& r);
Word chi_inverse(const Word& w, const RectSequence& r);
Word chi_power(const Word& w, const RectSequence& r, int k);

} // namespace lrc
