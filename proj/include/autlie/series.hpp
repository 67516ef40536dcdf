#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "autlie/exact.hpp"

namespace autlie {

// A word X_{i_1}...X_{i_n} in the series variables; indices are 1-based.
struct Monomial {
    std::vector<uint8_t> letters;

    int degree() const { return static_cast<int>(letters.size()); }
    Monomial rotated() const; // X_{i_1}...X_{i_n} -> X_{i_2}...X_{i_n}X_{i_1}

    // Length-then-lexicographic order, so map iteration is deterministic and
    // sorted by degree.
    std::strong_ordering operator<=>(const Monomial &other) const {
        if (letters.size() != other.letters.size())
            return letters.size() <=> other.letters.size();
        return letters <=> other.letters;
    }
    bool operator==(const Monomial &other) const = default;
};

// Element of Z<<X_1,...,X_r>> truncated at total degree N, with exact
// rational coefficients (integral for everything coming from group rings).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int rank, int trunc);

    static TruncatedSeries constant(int rank, int trunc, const Rat &c);
    static TruncatedSeries variable(int rank, int trunc, int i);

    int rank() const { return rank_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Monomial, Rat> &coeffs() const { return coeffs_; }

    Rat coeff(const Monomial &m) const;
    Rat constant_term() const { return coeff(Monomial{}); }
    void set_coeff(const Monomial &m, const Rat &c);
    void add_coeff(const Monomial &m, const Rat &c);

    // Smallest degree with a nonzero term, or -1 for the zero series.
    int lowest_degree() const;
    bool is_homogeneous(int n) const;
    bool is_integral() const;

    TruncatedSeries operator-() const;
    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    bool operator==(const TruncatedSeries &other) const = default;

    std::string to_text() const;

private:
    int rank_ = 0;
    int trunc_ = 0;
    std::map<Monomial, Rat> coeffs_;
};

TruncatedSeries scalar_mul(const Rat &c, const TruncatedSeries &a);

// Inverse of a series with constant term +-1, up to the truncation degree.
TruncatedSeries invert_unit(const TruncatedSeries &a);

// The homogeneous degree-n part; n must be within the truncation.
TruncatedSeries graded_part(const TruncatedSeries &a, int n);

// Evaluate a at X_i = images[i-1]; every image must have zero constant term
// and matching rank/truncation.
TruncatedSeries substitute(const TruncatedSeries &a, const std::vector<TruncatedSeries> &images);

// Keep the terms ending in X_j and strip that last letter. On Magnus images
// of group-ring elements this computes the Fox derivative d/dx_j, by the
// fundamental relation u - u^o = sum_j (d_j u)(x_j - 1).
TruncatedSeries right_partial(const TruncatedSeries &a, int j);

// Cyclic machinery on a homogeneous component R_n.
TruncatedSeries cyclic_rotate(const TruncatedSeries &a);
TruncatedSeries cyclic_symmetrize(const TruncatedSeries &a, int n);
bool is_cyclically_balanced(const TruncatedSeries &a, int n);

// ab - ba, the ring commutator.
TruncatedSeries ring_commutator(const TruncatedSeries &a, const TruncatedSeries &b);

std::string series_to_json(const TruncatedSeries &a);

} // namespace autlie
