#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autlie/series.hpp"

namespace autlie {

// A freely reduced word in x_1^{+-1},...,x_r^{+-1}. Letters are stored as
// signed indices: +i for x_i, -i for x_i^{-1}.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(int rank) : rank_(rank) {}
    GroupWord(int rank, std::vector<int16_t> letters);

    static GroupWord generator(int rank, int i, int exponent = 1);

    int rank() const { return rank_; }
    const std::vector<int16_t> &letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }

    GroupWord inverse() const;
    GroupWord pow(int k) const;

    std::strong_ordering operator<=>(const GroupWord &other) const {
        if (letters_.size() != other.letters_.size())
            return letters_.size() <=> other.letters_.size();
        return letters_ <=> other.letters_;
    }
    bool operator==(const GroupWord &other) const { return letters_ == other.letters_; }

    std::string to_string() const;

private:
    int rank_ = 0;
    std::vector<int16_t> letters_;
};

GroupWord operator*(const GroupWord &u, const GroupWord &v);

// [u,v] = u^{-1} v^{-1} u v.
GroupWord commutator(const GroupWord &u, const GroupWord &v);

// Left-normed iterated commutator [[u_1,...,u_{k-1}],u_k].
GroupWord left_normed(const std::vector<GroupWord> &us);

// Word grammar shared with the CLI: generators `x1`..`xr`, `^-1` (or any
// integer power), `*` or juxtaposition for products, `[u,v,...]` for
// left-normed commutators, parentheses for grouping.
GroupWord parse_word(const std::string &text, int rank);

// Finite Z-linear combination of reduced words.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(int rank) : rank_(rank) {}
    static GroupRingElement from_word(const GroupWord &w, const Int &c = 1);

    int rank() const { return rank_; }
    const std::map<GroupWord, Int> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const GroupWord &w, const Int &c);

    Int augmentation() const;

    GroupRingElement operator-() const;
    GroupRingElement &operator+=(const GroupRingElement &other);
    GroupRingElement &operator-=(const GroupRingElement &other);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b);
    bool operator==(const GroupRingElement &other) const { return terms_ == other.terms_; }

    std::string to_string() const;

private:
    int rank_ = 0;
    std::map<GroupWord, Int> terms_;
};

// Magnus embedding tau: x_i -> 1 + X_i, truncated at degree N.
TruncatedSeries magnus(const GroupWord &w, int trunc);
TruncatedSeries magnus_ring(const GroupRingElement &e, int trunc);

// Smallest n <= N with tau(w) - 1 of lowest degree n; nullopt means the word
// lies beyond the probe depth (in particular the identity never reports a
// degree).
std::optional<int> lcs_degree(const GroupWord &w, int trunc);

} // namespace autlie
