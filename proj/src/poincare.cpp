#include "lrc/poincare.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lrc {

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial QPolynomial::monomial(int degree, std::int64_t c) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPolynomial::at_one() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0}); }

bool QPolynomial::nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) { return *this += o.scaled(-1); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::scaled(std::int64_t c) const {
    auto v = coeffs_;
    for (auto& x : v) x *= c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::shifted(int degree) const {
    if (is_zero()) return {};
    if (degree < 0) throw std::invalid_argument("negative shift");
    std::vector<std::int64_t> v(degree, 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        std::int64_t c = coeffs_[d];
        if (c == 0) continue;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (d == 0) {
            s += std::to_string(mag);
            continue;
        }
        if (mag != 1) s += std::to_string(mag);
        s += "q";
        if (d > 1) s += "^" + std::to_string(d);
    }
    return s;
}

RootSet roots_of(const std::vector<int>& eta) {
    RootSet roots;
    int n = std::accumulate(eta.begin(), eta.end(), 0);
    int boundary = 0;
    int block_start = 1;
    for (std::size_t r = 0; r + 1 < eta.size(); ++r) {
        boundary += eta[r];
        for (int i = block_start; i <= boundary; ++i)
            for (int j = boundary + 1; j <= n; ++j) roots.emplace_back(i, j);
        block_start = boundary + 1;
    }
    return roots;
}

KostantPartition::KostantPartition(RootSet roots, int n) : roots_(std::move(roots)), n_(n), targets_(n + 1) {
    for (auto [i, j] : roots_) {
        if (i < 1 || j > n || i >= j) throw std::invalid_argument("root outside the positive system of [n]");
        targets_[i].push_back(j);
    }
}

QPolynomial KostantPartition::operator()(const Weight& v) {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("weight length differs from n");
    if (std::accumulate(v.begin(), v.end(), 0) != 0) return {};
    Weight residual = v;
    return solve(1, residual);
}

// Coordinate i sends its whole residual out along the roots (i, j); the
// amount sent to j is added to the residual of j.
QPolynomial KostantPartition::solve(int i, Weight& residual) {
    if (i > n_) return QPolynomial::monomial(0);
    const int out = residual[i - 1];
    if (out < 0) return {};
    const auto& targets = targets_[i];
    if (targets.empty()) {
        if (out != 0) return {};
        return solve(i + 1, residual);
    }
    std::pair<int, Weight> key{i, Weight(residual.begin() + (i - 1), residual.end())};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    QPolynomial total;
    std::function<void(std::size_t, int)> spread = [&](std::size_t k, int left) {
        if (k + 1 == targets.size()) {
            residual[targets[k] - 1] += left;
            total += solve(i + 1, residual);
            residual[targets[k] - 1] -= left;
            return;
        }
        for (int m = 0; m <= left; ++m) {
            residual[targets[k] - 1] += m;
            spread(k + 1, left - m);
            residual[targets[k] - 1] -= m;
        }
    };
    spread(0, out);
    total = total.shifted(out);
    memo_.emplace(std::move(key), total);
    return total;
}

QPolynomial q_kostant_partition(const Weight& v, const RootSet& roots) {
    KostantPartition kp(roots, static_cast<int>(v.size()));
    return kp(v);
}

QPolynomial k_poly(const Partition& lambda, const std::vector<int>& eta, const Weight& gamma) {
    const int n = std::accumulate(eta.begin(), eta.end(), 0);
    if (n > kMaxAlphabet) throw std::length_error("alphabet size exceeds the supported bound");
    if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("gamma length differs from n");
    if (static_cast<int>(lambda.length()) > n) return {};
    if (lambda.size() != std::accumulate(gamma.begin(), gamma.end(), 0)) return {};
    KostantPartition kp(roots_of(eta), n);
    Weight shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = lambda[i] + (n - 1 - i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    QPolynomial total;
    do {
        Weight v(n);
        for (int i = 0; i < n; ++i) v[i] = shifted[perm[i]] - (n - 1 - i) - gamma[i];
        QPolynomial term = kp(v);
        if (term.is_zero()) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        if (inversions % 2) total -= term;
        else total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

QPolynomial k_poly(const Partition& lambda, const RectSequence& r) { return k_poly(lambda, r.etas(), r.gamma()); }

QPolynomial morris_rhs(const Partition& lambda, const RectSequence& r) {
    if (r.empty()) throw std::invalid_argument("Morris recurrence needs at least one rectangle");
    const int n = r.n();
    if (n > kMaxAlphabet) throw std::length_error("alphabet size exceeds the supported bound");
    if (static_cast<int>(lambda.length()) > n) return {};
    const int m = r[1].eta;
    const int top = r[1].cells();
    const RectSequence rest = r.tail();
    const int rest_cells = rest.total_cells();

    std::vector<std::pair<Partition, QPolynomial>> inner;
    for (const Partition& nu : partitions_of(rest_cells, n - m)) {
        QPolynomial k = k_poly(nu, rest);
        if (!k.is_zero()) inner.emplace_back(nu, std::move(k));
    }
    std::map<std::pair<Partition, Partition>, std::uint64_t> kostka_cache;

    Weight shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = lambda[i] + (n - 1 - i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    QPolynomial total;
    do {
        // xi = w^{-1}(lambda + rho) - rho; alpha is its first m parts.
        Weight c(n);
        int alpha_size = 0;
        bool negative = false;
        for (int i = 0; i < n; ++i) {
            int xi = shifted[perm[i]] - (n - 1 - i);
            if (i < m) {
                alpha_size += xi;
                xi -= r[1].mu;
            }
            c[i] = xi;
            negative = negative || xi < 0;
        }
        if (negative) continue;
        // Kostka numbers are symmetric in the content, so cache on its sort.
        Partition sorted = sort_to_partition(c);
        QPolynomial sum;
        for (const auto& [nu, k] : inner) {
            auto key = std::make_pair(nu, sorted);
            auto it = kostka_cache.find(key);
            if (it == kostka_cache.end()) it = kostka_cache.emplace(key, kostka_number(nu, sorted.padded(n))).first;
            if (it->second) sum += k.scaled(static_cast<std::int64_t>(it->second));
        }
        if (sum.is_zero()) continue;
        int exponent = alpha_size - top;
        if (exponent < 0) throw std::logic_error("negative q-exponent with a nonvanishing Kostka sum");
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        QPolynomial term = sum.shifted(exponent);
        if (inversions % 2) total -= term;
        else total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace lrc
