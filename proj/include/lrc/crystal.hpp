#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lrc/core.hpp"

namespace lrc {

// One-line notation over [m]: images()[i-1] is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int m);
    // Product s_{word[0]} s_{word[1]} ... of adjacent transpositions in S_m.
    static Permutation from_reduced_word(int m, const std::vector<int>& word);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    int length() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    Permutation inverse() const;
    // (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    // A reduced word r with this == s_{r[0]} s_{r[1]} ..., from bubble sorting.
    std::vector<int> reduced_word() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// All permutations of S_m in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int m);

struct ParenMatching {
    // Index pairs (position of r+1, position of r), 0-based.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    // Unpaired positions, increasing; all unpaired r precede all unpaired r+1.
    std::vector<std::size_t> unpaired_r;
    std::vector<std::size_t> unpaired_r1;
    std::size_t a() const { return unpaired_r.size(); }
    std::size_t b() const { return unpaired_r1.size(); }
};

// r acts as a right parenthesis and r+1 as a left parenthesis.
ParenMatching match_parens(const Word& w, int r);

std::optional<Word> e_op(const Word& w, int r);
std::optional<Word> f_op(const Word& w, int r);
Word s_op(const Word& w, int r);

// sigma acts through s_op along a reduced word, rightmost factor first, so
// content(sigma w)_{sigma(i)} = content(w)_i.
Word apply_permutation(const Word& w, const Permutation& sigma);
// Same action computed along a caller-supplied word in the generators.
Word apply_reduced_word(const Word& w, const std::vector<int>& word);

// Product of the reversals of consecutive blocks of the given sizes.
Permutation longest_young_element(const std::vector<int>& block_sizes);

} // namespace lrc
