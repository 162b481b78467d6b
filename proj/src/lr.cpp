#include "lrc/lr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lrc/rsk.hpp"

namespace lrc {

RectSequence::RectSequence(std::vector<Rect> rects) : rects_(std::move(rects)) {
    for (const Rect& r : rects_)
        if (r.mu < 1 || r.eta < 1) throw std::invalid_argument("rectangles need at least one row and column");
}

RectSequence RectSequence::parse(std::string_view spec) {
    std::vector<Rect> rects;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        std::string item(spec.substr(pos, comma - pos));
        std::size_t x = item.find('x');
        if (x == std::string::npos) throw std::invalid_argument("rectangle spec must look like MUxETA: " + item);
        std::size_t used_mu = 0, used_eta = 0;
        int mu = std::stoi(item.substr(0, x), &used_mu);
        int eta = std::stoi(item.substr(x + 1), &used_eta);
        if (used_mu != x || used_eta != item.size() - x - 1)
            throw std::invalid_argument("rectangle spec must look like MUxETA: " + item);
        rects.push_back({mu, eta});
        pos = comma + 1;
    }
    return RectSequence(std::move(rects));
}

int RectSequence::n() const {
    int s = 0;
    for (const Rect& r : rects_) s += r.eta;
    return s;
}

int RectSequence::total_cells() const {
    int s = 0;
    for (const Rect& r : rects_) s += r.cells();
    return s;
}

int RectSequence::max_mu() const {
    int a = 0;
    for (const Rect& r : rects_) a = std::max(a, r.mu);
    return a;
}

int RectSequence::alphabet_begin(int i) const {
    int s = 1;
    for (int j = 1; j < i; ++j) s += (*this)[j].eta;
    return s;
}

int RectSequence::alphabet_end(int i) const { return alphabet_begin(i) + (*this)[i].eta - 1; }

int RectSequence::block_of(int x) const {
    int end = 0;
    for (int i = 1; i <= t(); ++i) {
        end += (*this)[i].eta;
        if (x <= end) return i;
    }
    throw std::out_of_range("letter outside the alphabet of R");
}

std::vector<int> RectSequence::etas() const {
    std::vector<int> e;
    for (const Rect& r : rects_) e.push_back(r.eta);
    return e;
}

Weight RectSequence::gamma() const {
    Weight g;
    for (const Rect& r : rects_) g.insert(g.end(), r.eta, r.mu);
    return g;
}

bool RectSequence::is_dominant() const {
    for (std::size_t i = 1; i < rects_.size(); ++i)
        if (rects_[i].mu > rects_[i - 1].mu) return false;
    return true;
}

Tableau RectSequence::yamanouchi(int i) const {
    const Rect& r = (*this)[i];
    int first = alphabet_begin(i);
    std::vector<std::vector<int>> rows;
    for (int j = 0; j < r.eta; ++j) rows.emplace_back(r.mu, first + j);
    return Tableau(std::move(rows));
}

RectSequence RectSequence::swapped(int p) const {
    if (p < 1 || p >= t()) throw std::out_of_range("tau index out of range");
    auto rects = rects_;
    std::swap(rects[p - 1], rects[p]);
    return RectSequence(std::move(rects));
}

RectSequence RectSequence::tail() const {
    if (rects_.empty()) throw std::logic_error("tail of an empty rectangle sequence");
    return RectSequence(std::vector<Rect>(rects_.begin() + 1, rects_.end()));
}

RectSequence RectSequence::permuted(const Permutation& sigma) const {
    if (sigma.degree() != t()) throw std::invalid_argument("permutation degree differs from t");
    std::vector<Rect> rects(rects_.size());
    for (int j = 1; j <= t(); ++j) rects[sigma(j) - 1] = rects_[j - 1];
    return RectSequence(std::move(rects));
}

std::string RectSequence::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rects_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rects_[i].mu) + "x" + std::to_string(rects_[i].eta);
    }
    return s;
}

Word restrict_word(const Word& w, int lo, int hi) {
    Word out;
    for (int x : w)
        if (x >= lo && x <= hi) out.push_back(x);
    return out;
}

bool is_r_lr(const Word& w, const RectSequence& r) {
    for (int x : w)
        if (x < 1 || x > r.n()) return false;
    for (int i = 1; i <= r.t(); ++i) {
        Word sub = restrict_word(w, r.alphabet_begin(i), r.alphabet_end(i));
        if (p_tableau(sub) != r.yamanouchi(i)) return false;
    }
    return true;
}

namespace {

// Fills rows top to bottom, each right to left, so the filled cells always
// form a final segment of the reading word. Content gamma(R) plus the
// in-block lattice condition characterises R-LR reading words.
struct LrtFiller {
    const Partition& lambda;
    Weight gamma;
    std::vector<char> block_start;
    std::vector<std::vector<int>> grid;
    std::vector<int> count;
    std::vector<Tableau>& out;

    void fill(int row, int col) {
        if (row > static_cast<int>(lambda.length())) {
            out.emplace_back(grid);
            return;
        }
        if (col < 1) {
            fill(row + 1, row < static_cast<int>(lambda.length()) ? lambda[row] : 0);
            return;
        }
        int lo = row > 1 ? grid[row - 2][col - 1] + 1 : 1;
        int hi = col < lambda[row - 1] ? grid[row - 1][col] : static_cast<int>(gamma.size());
        for (int x = lo; x <= hi; ++x) {
            if (count[x - 1] == gamma[x - 1]) continue;
            if (!block_start[x - 1] && count[x - 1] + 1 > count[x - 2]) continue;
            ++count[x - 1];
            grid[row - 1][col - 1] = x;
            fill(row, col - 1);
            --count[x - 1];
        }
    }
};

} // namespace

std::vector<Tableau> enumerate_lrt(const Partition& lambda, const RectSequence& r) {
    std::vector<Tableau> out;
    if (lambda.size() != r.total_cells() || static_cast<int>(lambda.length()) > r.n()) return out;
    if (lambda.empty()) {
        out.emplace_back();
        return out;
    }
    std::vector<char> starts(r.n(), 0);
    for (int i = 1; i <= r.t(); ++i) starts[r.alphabet_begin(i) - 1] = 1;
    LrtFiller f{lambda, r.gamma(), starts, {}, std::vector<int>(r.n(), 0), out};
    for (std::size_t i = 0; i < lambda.length(); ++i) f.grid.emplace_back(lambda[i], 0);
    f.fill(1, lambda[0]);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return row_reading_word(a) < row_reading_word(b);
    });
    return out;
}

std::vector<Partition> lrt_shapes(const RectSequence& r) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(r.total_cells(), r.n()))
        if (!enumerate_lrt(p, r).empty()) out.push_back(p);
    return out;
}

TwoRectRegions two_rect_regions(const Rect& r1, const Rect& r2) {
    return {std::max(r1.mu, r2.mu), std::min(r1.mu, r2.mu), std::max(r1.eta, r2.eta), std::min(r1.eta, r2.eta)};
}

bool two_rect_nonempty(const Partition& lambda, const Rect& r1, const Rect& r2) {
    TwoRectRegions g = two_rect_regions(r1, r2);
    auto in_rect = [](const Rect& q, int row, int col) { return row <= q.eta && col <= q.mu; };
    for (int row = 1; row <= g.l; ++row) {
        int need = std::max(row <= r1.eta ? r1.mu : 0, row <= r2.eta ? r2.mu : 0);
        if (lambda[row - 1] < need) return false;
    }
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        int row = static_cast<int>(i) + 1;
        for (int col = 1; col <= lambda[i]; ++col)
            if (!in_rect(r1, row, col) && !in_rect(r2, row, col) && !g.in_ne(row, col) && !g.in_sw(row, col))
                return false;
    }
    // Row r of the NE part and row l'+1-r of the SW part fill a row of the
    // l' x a' rectangle R_1 ∩ R_2 exactly.
    for (int row = 1; row <= g.l_prime; ++row) {
        int ne = std::max(0, lambda[row - 1] - g.a);
        int sw = lambda[g.l + g.l_prime - row];
        if (ne + sw != g.a_prime) return false;
    }
    return static_cast<int>(lambda.length()) <= g.l + g.l_prime;
}

std::optional<Tableau> two_rect_tableau(const Partition& lambda, const Rect& r1, const Rect& r2) {
    if (!two_rect_nonempty(lambda, r1, r2)) return std::nullopt;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < lambda.length(); ++i) rows.emplace_back(lambda[i], 0);
    for (int row = 1; row <= r1.eta; ++row)
        for (int col = 1; col <= r1.mu; ++col) rows[row - 1][col - 1] = row;
    // East part: key(alpha) with alpha = lambda_e, a partition, so row r
    // holds the r-th letter of A_2.
    Weight alpha(r2.eta, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        int width = lambda[i] - r1.mu;
        if (width <= 0) continue;
        if (static_cast<int>(i) >= r2.eta) throw std::logic_error("east part taller than R_2");
        alpha[i] = width;
        for (int col = r1.mu + 1; col <= lambda[i]; ++col) rows[i][col - 1] = r1.eta + static_cast<int>(i) + 1;
    }
    Weight beta(r2.eta);
    for (int i = 0; i < r2.eta; ++i) beta[i] = r2.mu - alpha[i];
    Tableau west = key_tableau(beta);
    for (int s = 1; s <= west.num_rows(); ++s) {
        int row = r1.eta + s;
        const auto& wr = west.rows()[s - 1];
        if (row > static_cast<int>(lambda.length()) || std::min(lambda[row - 1], r1.mu) != static_cast<int>(wr.size()))
            throw std::logic_error("west part does not match key(beta)");
        for (std::size_t j = 0; j < wr.size(); ++j) rows[row - 1][j] = r1.eta + wr[j];
    }
    Tableau t(std::move(rows));
    if (!t.is_column_strict()) throw std::logic_error("two-rectangle construction is not column-strict");
    return t;
}

namespace {

Word tau_two(const Word& w, const Rect& r1, const Rect& r2) {
    TableauPair pq = rs_pair(w);
    auto own = two_rect_tableau(pq.p.shape(), r1, r2);
    if (!own || *own != pq.p) throw std::invalid_argument("word is not LR for the rectangle pair");
    auto swapped = two_rect_tableau(pq.p.shape(), r2, r1);
    if (!swapped) throw std::logic_error("swapped rectangle pair has no LR tableau of the same shape");
    return inverse_rs({*swapped, pq.q});
}

} // namespace

Word tau(int p, const Word& w, const RectSequence& r) {
    if (p < 1 || p >= r.t()) throw std::out_of_range("tau index out of range");
    int lo = r.alphabet_begin(p);
    int hi = r.alphabet_end(p + 1);
    std::vector<std::size_t> pos;
    Word sub;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= lo && w[i] <= hi) {
            pos.push_back(i);
            sub.push_back(w[i] - lo + 1);
        }
    }
    Word image = tau_two(sub, r[p], r[p + 1]);
    Word out = w;
    for (std::size_t k = 0; k < pos.size(); ++k) out[pos[k]] = image[k] + lo - 1;
    return out;
}

Tableau tau_tableau(int p, const Tableau& t, const RectSequence& r) {
    return p_tableau(tau(p, row_reading_word(t), r));
}

Word chi(const Word& w, const RectSequence& r) {
    if (w.empty()) throw std::invalid_argument("chi needs a nonempty word");
    Permutation w0 = longest_young_element(r.etas());
    Word u(w.begin(), w.end() - 1);
    Word out{w0(w.back())};
    Word tail = apply_permutation(u, w0);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Word chi_inverse(const Word& w, const RectSequence& r) {
    if (w.empty()) throw std::invalid_argument("chi needs a nonempty word");
    Permutation w0 = longest_young_element(r.etas());
    Word out = apply_permutation(Word(w.begin() + 1, w.end()), w0);
    out.push_back(w0(w.front()));
    return out;
}

Word chi_power(const Word& w, const RectSequence& r, int k) {
    Word out = w;
    for (int i = 0; i < k; ++i) out = chi(out, r);
    for (int i = 0; i > k; --i) out = chi_inverse(out, r);
    return out;
}

} // namespace lrc
