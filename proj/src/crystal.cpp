#include "lrc/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_reduced_word(int m, const std::vector<int>& word) {
    Permutation p = identity(m);
    for (int r : word) {
        if (r < 1 || r >= m) throw std::invalid_argument("generator index out of range");
        // Right multiplication by s_r swaps positions r and r+1.
        std::swap(p.images_[r - 1], p.images_[r]);
    }
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> v(a.degree());
    for (int i = 1; i <= a.degree(); ++i) v[i - 1] = a(b(i));
    return Permutation(std::move(v));
}

std::vector<int> Permutation::reduced_word() const {
    // Bubble sort the one-line notation to the identity; each swap at
    // positions (r, r+1) peels off a right factor s_r.
    std::vector<int> v = images_;
    std::vector<int> peeled;
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                peeled.push_back(static_cast<int>(i) + 1);
                swapped = true;
            }
        }
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

ParenMatching match_parens(const Word& w, int r) {
    ParenMatching m;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == r + 1) {
            open.push_back(i);
        } else if (w[i] == r) {
            if (open.empty()) {
                m.unpaired_r.push_back(i);
            } else {
                m.pairs.emplace_back(open.back(), i);
                open.pop_back();
            }
        }
    }
    m.unpaired_r1 = std::move(open);
    return m;
}

namespace {

// Rewrites the unpaired subword as r^k (r+1)^(a+b-k).
Word rewrite_unpaired(const Word& w, int r, const ParenMatching& m, std::size_t k) {
    std::vector<std::size_t> pos = m.unpaired_r;
    pos.insert(pos.end(), m.unpaired_r1.begin(), m.unpaired_r1.end());
    Word out = w;
    for (std::size_t i = 0; i < pos.size(); ++i) out[pos[i]] = i < k ? r : r + 1;
    return out;
}

} // namespace

std::optional<Word> e_op(const Word& w, int r) {
    ParenMatching m = match_parens(w, r);
    if (m.b() == 0) return std::nullopt;
    return rewrite_unpaired(w, r, m, m.a() + 1);
}

std::optional<Word> f_op(const Word& w, int r) {
    ParenMatching m = match_parens(w, r);
    if (m.a() == 0) return std::nullopt;
    return rewrite_unpaired(w, r, m, m.a() - 1);
}

Word s_op(const Word& w, int r) {
    ParenMatching m = match_parens(w, r);
    return rewrite_unpaired(w, r, m, m.b());
}

Word apply_reduced_word(const Word& w, const std::vector<int>& word) {
    Word out = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = s_op(out, *it);
    return out;
}

Word apply_permutation(const Word& w, const Permutation& sigma) {
    return apply_reduced_word(w, sigma.reduced_word());
}

Permutation longest_young_element(const std::vector<int>& block_sizes) {
    std::vector<int> v;
    int start = 0;
    for (int sz : block_sizes) {
        if (sz < 0) throw std::invalid_argument("negative block size");
        for (int j = sz; j >= 1; --j) v.push_back(start + j);
        start += sz;
    }
    return Permutation(std::move(v));
}

} // namespace lrc
