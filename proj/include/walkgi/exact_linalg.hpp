#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "walkgi/error.hpp"
#include "walkgi/graph.hpp"

namespace walkgi {

using BigInt = mpz_class;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// The all-ones matrix J.
    static IntMatrix all_ones(std::size_t n) {
        IntMatrix m(n);
        for (auto& e : m.entries_) e = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        IntMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    BigInt& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }

    const std::vector<BigInt>& entries() const noexcept { return entries_; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        a.require_same(b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
        return a;
    }

    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        a.require_same(b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
        return a;
    }

    friend IntMatrix operator*(const BigInt& s, IntMatrix a) {
        for (auto& e : a.entries_) e *= s;
        return a;
    }

    /// Exact product. Zero entries of the left factor are skipped and unit
    /// entries become additions, which makes products with 0/1 adjacency
    /// matrices cost O(n * nnz) additions.
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        a.require_same(b);
        const std::size_t n = a.n_;
        IntMatrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            BigInt* out = &c.entries_[i * n];
            for (std::size_t l = 0; l < n; ++l) {
                const BigInt& f = a(i, l);
                if (f == 0) continue;
                const BigInt* in = &b.entries_[l * n];
                if (f == 1) {
                    for (std::size_t j = 0; j < n; ++j) out[j] += in[j];
                } else {
                    for (std::size_t j = 0; j < n; ++j) mpz_addmul(out[j].get_mpz_t(), f.get_mpz_t(), in[j].get_mpz_t());
                }
            }
        }
        return c;
    }

private:
    void require_same(const IntMatrix& other) const {
        if (n_ != other.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.order());
    for (auto [i, j] : g.edges()) {
        a(i, j) = 1;
        a(j, i) = 1;
    }
    return a;
}

/// A^k by iterated multiplication; entry (i,j) counts walks of length k.
inline IntMatrix mat_pow(const IntMatrix& a, unsigned k) {
    if (k == 0) throw std::invalid_argument("mat_pow exponent must be at least 1");
    IntMatrix p = a;
    for (unsigned e = 1; e < k; ++e) p = a * p;
    return p;
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// In each column the nonzero candidate of smallest magnitude is taken as
/// pivot; every division by the previous pivot is exact.
inline BigInt determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r) {
            if (m(r, k) == 0) continue;
            if (pivot == n || mpz_cmpabs(m(r, k).get_mpz_t(), m(pivot, k).get_mpz_t()) < 0) pivot = r;
        }
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            sign = -sign;
        }
        const BigInt& p = m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                BigInt& e = m(r, c);
                e *= p;
                mpz_submul(e.get_mpz_t(), m(r, k).get_mpz_t(), m(k, c).get_mpz_t());
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            m(r, k) = 0;
        }
        prev = p;
    }
    BigInt det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

namespace detail {

/// Incremental exact rank over the rationals for integer vectors.
///
/// Basis vectors are kept in echelon form with primitive (content 1)
/// entries, so elimination stays fraction-free and coefficient growth is
/// bounded by the content division.
class RationalSpan {
public:
    explicit RationalSpan(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const noexcept { return basis_.size(); }

    /// Adds v to the span; returns false if v was already in it.
    bool insert(std::vector<BigInt> v) {
        BigInt g;
        BigInt fa;
        BigInt fb;
        for (const auto& [pivot, b] : basis_) {
            if (v[pivot] == 0) continue;
            mpz_gcd(g.get_mpz_t(), v[pivot].get_mpz_t(), b[pivot].get_mpz_t());
            mpz_divexact(fa.get_mpz_t(), b[pivot].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(fb.get_mpz_t(), v[pivot].get_mpz_t(), g.get_mpz_t());
            for (std::size_t i = 0; i < dim_; ++i) {
                v[i] *= fa;
                mpz_submul(v[i].get_mpz_t(), fb.get_mpz_t(), b[i].get_mpz_t());
            }
            make_primitive(v);
        }
        std::size_t lead = 0;
        while (lead < dim_ && v[lead] == 0) ++lead;
        if (lead == dim_) return false;
        basis_.emplace_back(lead, std::move(v));
        return true;
    }

private:
    static void make_primitive(std::vector<BigInt>& v) {
        BigInt g = 0;
        for (const auto& e : v) {
            if (e != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    }

    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<BigInt>>> basis_;
};

/// Upper triangle (diagonal included) of a symmetric matrix as a vector.
inline std::vector<BigInt> upper_triangle(const IntMatrix& m) {
    std::vector<BigInt> v;
    v.reserve(m.size() * (m.size() + 1) / 2);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) v.push_back(m(i, j));
    }
    return v;
}

/// Powers A^1..A^m where m is the degree of the minimal polynomial of the
/// symmetric matrix A.
inline std::vector<IntMatrix> minimal_polynomial_powers(const IntMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("distinct eigenvalue count needs a symmetric matrix");
    const std::size_t n = a.size();
    RationalSpan span(n * (n + 1) / 2);
    span.insert(upper_triangle(IntMatrix::identity(n)));
    std::vector<IntMatrix> powers;
    IntMatrix p = a;
    while (span.insert(upper_triangle(p))) {
        powers.push_back(p);
        p = a * p;
    }
    // Keep the first dependent power so the result is A^1..A^m.
    powers.push_back(std::move(p));
    return powers;
}

}  // namespace detail

/// Degree of the minimal polynomial of a symmetric integer matrix, i.e.
/// its number of distinct eigenvalues. Exact: the least k for which
/// I, A, ..., A^k are linearly dependent over the rationals.
inline std::size_t distinct_eigenvalue_count(const IntMatrix& a) {
    return detail::minimal_polynomial_powers(a).size();
}

}  // namespace walkgi
