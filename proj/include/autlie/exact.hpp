#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace autlie {

// Exact scalars. Int is an arbitrary-precision integer, Rat a rational kept
// in lowest terms with positive denominator. No floating point is used
// anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

Int pow_int(const Int &base, unsigned long exp);
std::string rat_to_string(const Rat &q);
Rat rat_from_string(const std::string &s);

// ---------------------------------------------------------------------------
// Elementary number theory (int64 domain; all inputs here are desk-scale).

std::vector<long> divisors(long n);
int moebius(long n);
long euler_phi(long n);

// Ramanujan sum c_d(i) = sum of e^{2*pi*I*i*j/d} over j coprime to d,
// evaluated in integer arithmetic as sum(e*mu(d/e) : e | gcd(d,i)).
long ramanujan_sum(long d, long i);

// ---------------------------------------------------------------------------
// Dense exact-rational matrices and Gaussian elimination.

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat &at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat &at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    static RationalMatrix identity(int n);
    RationalMatrix transposed() const;

    bool operator==(const RationalMatrix &other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> entries_;
};

struct RrefResult {
    int rank = 0;
    std::vector<int> pivot_cols;
    RationalMatrix rref;
};

// Row-reduced echelon form with first-nonzero pivot selection; deterministic.
RrefResult rank_and_basis(const RationalMatrix &m);

// Incremental span: rows are reduced against the pivots found so far.
// add() returns true when the row enlarges the span. contains() tests
// membership without modifying the span.
class SpanBuilder {
public:
    explicit SpanBuilder(int dim) : dim_(dim) {}

    bool add(std::vector<Rat> row);
    bool contains(std::vector<Rat> row) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    // Reduces row against the stored basis; returns pivot column or -1.
    int reduce(std::vector<Rat> &row) const;

    int dim_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivots_;
};

} // namespace autlie
