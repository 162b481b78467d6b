#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/lr.hpp"

namespace lrc {

class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<std::int64_t> coeffs);
    static QPolynomial monomial(int degree, std::int64_t c = 1);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t operator[](std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : 0; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t at_one() const;
    bool nonnegative() const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial scaled(std::int64_t c) const;
    QPolynomial shifted(int degree) const;

    // "1 + 2q^2 + q^3"; the zero polynomial prints as "0".
    std::string to_string() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void normalize();
    std::vector<std::int64_t> coeffs_;
};

// Pairs (i, j), i < j, with i <= eta_1 + ... + eta_r < j for some r < t.
using RootSet = std::vector<std::pair<int, int>>;
RootSet roots_of(const std::vector<int>& eta);

// Generating function of the nonnegative integer solutions m of
// sum m_ij (e_i - e_j) = v, graded by sum m_ij. Memoizes across calls.
class KostantPartition {
public:
    explicit KostantPartition(RootSet roots, int n);
    QPolynomial operator()(const Weight& v);

private:
    QPolynomial solve(int i, Weight& residual);

    RootSet roots_;
    int n_;
    std::vector<std::vector<int>> targets_;
    std::map<std::pair<int, Weight>, QPolynomial> memo_;
};

QPolynomial q_kostant_partition(const Weight& v, const RootSet& roots);

// Largest n accepted by k_poly and morris_rhs.
inline constexpr int kMaxAlphabet = 8;

// sum over w in S_n of sign(w) P_q(w(lambda + rho) - rho - gamma).
QPolynomial k_poly(const Partition& lambda, const std::vector<int>& eta, const Weight& gamma);
QPolynomial k_poly(const Partition& lambda, const RectSequence& r);

// Right side of the generalized Morris recurrence, built from Kostka numbers
// and k_poly for R with its first rectangle removed.
QPolynomial morris_rhs(const Partition& lambda, const RectSequence& r);

} // namespace lrc
