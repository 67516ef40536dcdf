#include "autlie/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace autlie {

Int pow_int(const Int &base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string rat_to_string(const Rat &q) {
    return q.get_str();
}

Rat rat_from_string(const std::string &s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::vector<long> divisors(long n) {
    if (n < 1)
        throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(long n) {
    if (n < 1)
        throw std::invalid_argument("moebius: n must be positive");
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            ++primes;
        }
    }
    if (n > 1)
        ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

long euler_phi(long n) {
    if (n < 1)
        throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

long ramanujan_sum(long d, long i) {
    if (d < 1)
        throw std::invalid_argument("ramanujan_sum: d must be positive");
    i %= d;
    if (i < 0)
        i += d;
    long g = (i == 0) ? d : std::gcd(d, i);
    long sum = 0;
    for (long e : divisors(g))
        sum += e * moebius(d / e);
    return sum;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rat(0)) {}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RrefResult rank_and_basis(const RationalMatrix &m) {
    RrefResult res;
    res.rref = m;
    RationalMatrix &a = res.rref;
    int pivot_row = 0;
    for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        int sel = -1;
        for (int row = pivot_row; row < a.rows(); ++row) {
            if (a.at(row, col) != 0) {
                sel = row;
                break;
            }
        }
        if (sel < 0)
            continue;
        if (sel != pivot_row)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(sel, j), a.at(pivot_row, j));
        Rat inv = a.at(pivot_row, col);
        for (int j = col; j < a.cols(); ++j)
            a.at(pivot_row, j) /= inv;
        for (int row = 0; row < a.rows(); ++row) {
            if (row == pivot_row || a.at(row, col) == 0)
                continue;
            Rat factor = a.at(row, col);
            for (int j = col; j < a.cols(); ++j)
                a.at(row, j) -= factor * a.at(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

int SpanBuilder::reduce(std::vector<Rat> &row) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat &c = row[pivots_[k]];
        if (c != 0) {
            Rat factor = c;
            const std::vector<Rat> &basis = rows_[k];
            for (int j = pivots_[k]; j < dim_; ++j)
                if (basis[j] != 0)
                    row[j] -= factor * basis[j];
        }
    }
    for (int j = 0; j < dim_; ++j)
        if (row[j] != 0)
            return j;
    return -1;
}

bool SpanBuilder::add(std::vector<Rat> row) {
    if (static_cast<int>(row.size()) != dim_)
        throw std::invalid_argument("SpanBuilder: dimension mismatch");
    int pivot = reduce(row);
    if (pivot < 0)
        return false;
    Rat inv = row[pivot];
    for (int j = pivot; j < dim_; ++j)
        row[j] /= inv;
    // Keep the basis in full RREF: clear the new pivot column everywhere so
    // reduce() stays a single sweep regardless of order.
    for (size_t k = 0; k < rows_.size(); ++k) {
        Rat factor = rows_[k][pivot];
        if (factor != 0)
            for (int j = pivot; j < dim_; ++j)
                if (row[j] != 0)
                    rows_[k][j] -= factor * row[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool SpanBuilder::contains(std::vector<Rat> row) const {
    if (static_cast<int>(row.size()) != dim_)
        throw std::invalid_argument("SpanBuilder: dimension mismatch");
    return reduce(row) < 0;
}

} // namespace autlie
