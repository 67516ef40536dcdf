#include "autlie/freegroup.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include <fmt/format.h>

namespace autlie {

static void check_letter(int rank, int16_t l) {
    int idx = std::abs(l);
    if (idx < 1 || idx > rank)
        throw std::invalid_argument("group word: letter index out of range");
}

GroupWord::GroupWord(int rank, std::vector<int16_t> letters) : rank_(rank) {
    letters_.reserve(letters.size());
    for (int16_t l : letters) {
        check_letter(rank_, l);
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

GroupWord GroupWord::generator(int rank, int i, int exponent) {
    if (i < 1 || i > rank)
        throw std::invalid_argument("group word: generator index out of range");
    GroupWord w(rank);
    int16_t l = static_cast<int16_t>(exponent >= 0 ? i : -i);
    w.letters_.assign(static_cast<size_t>(std::abs(exponent)), l);
    return w;
}

GroupWord GroupWord::inverse() const {
    GroupWord w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(static_cast<int16_t>(-*it));
    return w;
}

GroupWord GroupWord::pow(int k) const {
    GroupWord base = k >= 0 ? *this : inverse();
    GroupWord result(rank_);
    for (int t = 0; t < std::abs(k); ++t)
        result = result * base;
    return result;
}

GroupWord operator*(const GroupWord &u, const GroupWord &v) {
    if (u.rank() != v.rank())
        throw std::invalid_argument("group word: rank mismatch");
    std::vector<int16_t> cat = u.letters();
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    return GroupWord(u.rank(), std::move(cat));
}

GroupWord commutator(const GroupWord &u, const GroupWord &v) {
    return u.inverse() * v.inverse() * u * v;
}

GroupWord left_normed(const std::vector<GroupWord> &us) {
    if (us.empty())
        throw std::invalid_argument("left_normed: empty commutator");
    GroupWord acc = us.front();
    for (size_t k = 1; k < us.size(); ++k)
        acc = commutator(acc, us[k]);
    return acc;
}

std::string GroupWord::to_string() const {
    if (letters_.empty())
        return "1";
    std::string out;
    size_t k = 0;
    while (k < letters_.size()) {
        size_t run = k;
        while (run < letters_.size() && letters_[run] == letters_[k])
            ++run;
        int count = static_cast<int>(run - k);
        int idx = std::abs(letters_[k]);
        int exp = letters_[k] > 0 ? count : -count;
        if (!out.empty())
            out += "*";
        out += exp == 1 ? fmt::format("x{}", idx) : fmt::format("x{}^{}", idx, exp);
        k = run;
    }
    return out;
}

// --- word grammar ----------------------------------------------------------

namespace {

class WordParser {
public:
    WordParser(const std::string &text, int rank) : text_(text), rank_(rank) {}

    GroupWord parse() {
        GroupWord w = parse_product();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing input");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw std::invalid_argument(
            fmt::format("word parse error at position {}: {}", pos_, msg));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    int parse_int() {
        skip_space();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            fail("expected integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    GroupWord parse_product() {
        GroupWord w = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                w = w * parse_factor();
            } else if (c == 'x' || c == '[' || c == '(') {
                w = w * parse_factor(); // juxtaposition
            } else {
                return w;
            }
        }
    }

    GroupWord parse_factor() {
        GroupWord w = parse_atom();
        while (eat('^'))
            w = w.pow(parse_int());
        return w;
    }

    GroupWord parse_atom() {
        skip_space();
        if (eat('(')) {
            GroupWord w = parse_product();
            if (!eat(')'))
                fail("expected ')'");
            return w;
        }
        if (eat('[')) {
            std::vector<GroupWord> parts;
            parts.push_back(parse_product());
            while (eat(','))
                parts.push_back(parse_product());
            if (!eat(']'))
                fail("expected ']'");
            if (parts.size() < 2)
                fail("commutator needs at least two entries");
            return left_normed(parts);
        }
        if (peek() == 'x') {
            ++pos_;
            int idx = parse_int();
            if (idx < 1 || idx > rank_)
                fail(fmt::format("generator x{} out of range (rank {})", idx, rank_));
            return GroupWord::generator(rank_, idx);
        }
        fail("expected generator, '[' or '('");
    }

    const std::string &text_;
    int rank_;
    size_t pos_ = 0;
};

} // namespace

GroupWord parse_word(const std::string &text, int rank) {
    return WordParser(text, rank).parse();
}

// --- group ring -------------------------------------------------------------

GroupRingElement GroupRingElement::from_word(const GroupWord &w, const Int &c) {
    GroupRingElement e(w.rank());
    e.add_term(w, c);
    return e;
}

void GroupRingElement::add_term(const GroupWord &w, const Int &c) {
    if (c == 0)
        return;
    if (rank_ == 0)
        rank_ = w.rank();
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Int GroupRingElement::augmentation() const {
    Int sum = 0;
    for (const auto &[w, c] : terms_)
        sum += c;
    return sum;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(rank_);
    for (const auto &[w, c] : terms_)
        r.terms_[w] = -c;
    return r;
}

GroupRingElement &GroupRingElement::operator+=(const GroupRingElement &other) {
    for (const auto &[w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

GroupRingElement &GroupRingElement::operator-=(const GroupRingElement &other) {
    for (const auto &[w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
    GroupRingElement r(a.rank() ? a.rank() : b.rank());
    for (const auto &[wa, ca] : a.terms())
        for (const auto &[wb, cb] : b.terms())
            r.add_term(wa * wb, ca * cb);
    return r;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &[w, c] : terms_) {
        Int abs = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (abs != 1)
            out += abs.get_str() + "*";
        out += w.to_string();
    }
    return out;
}

// --- Magnus embedding --------------------------------------------------------

TruncatedSeries magnus(const GroupWord &w, int trunc) {
    if (trunc < 1)
        throw std::invalid_argument("magnus: truncation must be >= 1");
    int rank = w.rank() > 0 ? w.rank() : 1;
    TruncatedSeries result = TruncatedSeries::constant(rank, trunc, 1);
    // Per-generator images 1 + X_i and their inverses, built once.
    std::vector<TruncatedSeries> pos(rank), neg(rank);
    std::vector<bool> have(rank, false);
    for (int16_t l : w.letters()) {
        int i = std::abs(l);
        if (!have[i - 1]) {
            pos[i - 1] = TruncatedSeries::constant(rank, trunc, 1) +
                         TruncatedSeries::variable(rank, trunc, i);
            neg[i - 1] = invert_unit(pos[i - 1]);
            have[i - 1] = true;
        }
        result = result * (l > 0 ? pos[i - 1] : neg[i - 1]);
    }
    return result;
}

TruncatedSeries magnus_ring(const GroupRingElement &e, int trunc) {
    int rank = e.rank() > 0 ? e.rank() : 1;
    TruncatedSeries result(rank, trunc);
    for (const auto &[w, c] : e.terms())
        result += scalar_mul(Rat(c), magnus(w, trunc));
    return result;
}

std::optional<int> lcs_degree(const GroupWord &w, int trunc) {
    if (w.is_identity())
        return std::nullopt;
    TruncatedSeries t = magnus(w, trunc);
    t.add_coeff(Monomial{}, -1);
    int low = t.lowest_degree();
    if (low < 0)
        return std::nullopt;
    return low;
}

} // namespace autlie
