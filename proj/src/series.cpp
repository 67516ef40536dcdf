#include "autlie/series.hpp"

#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace autlie {

Monomial Monomial::rotated() const {
    if (letters.size() < 2)
        return *this;
    Monomial m;
    m.letters.reserve(letters.size());
    m.letters.insert(m.letters.end(), letters.begin() + 1, letters.end());
    m.letters.push_back(letters.front());
    return m;
}

TruncatedSeries::TruncatedSeries(int rank, int trunc) : rank_(rank), trunc_(trunc) {
    if (rank < 1)
        throw std::invalid_argument("series: rank must be >= 1");
    if (trunc < 0)
        throw std::invalid_argument("series: truncation must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(int rank, int trunc, const Rat &c) {
    TruncatedSeries s(rank, trunc);
    s.set_coeff(Monomial{}, c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(int rank, int trunc, int i) {
    if (i < 1 || i > rank)
        throw std::invalid_argument("series: variable index out of range");
    if (trunc < 1)
        throw std::invalid_argument("series: truncation too small for a variable");
    TruncatedSeries s(rank, trunc);
    s.set_coeff(Monomial{{static_cast<uint8_t>(i)}}, 1);
    return s;
}

Rat TruncatedSeries::coeff(const Monomial &m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::set_coeff(const Monomial &m, const Rat &c) {
    if (m.degree() > trunc_)
        throw std::invalid_argument("series: monomial beyond truncation");
    for (uint8_t l : m.letters)
        if (l < 1 || l > rank_)
            throw std::invalid_argument("series: monomial letter out of range");
    if (c == 0)
        coeffs_.erase(m);
    else
        coeffs_[m] = c;
}

void TruncatedSeries::add_coeff(const Monomial &m, const Rat &c) {
    if (c == 0)
        return;
    if (m.degree() > trunc_)
        return; // silently truncated; arithmetic below relies on this
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

int TruncatedSeries::lowest_degree() const {
    if (coeffs_.empty())
        return -1;
    return coeffs_.begin()->first.degree();
}

bool TruncatedSeries::is_homogeneous(int n) const {
    for (const auto &[m, c] : coeffs_)
        if (m.degree() != n)
            return false;
    return true;
}

bool TruncatedSeries::is_integral() const {
    for (const auto &[m, c] : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

static void require_compatible(const TruncatedSeries &a, const TruncatedSeries &b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("series: rank mismatch");
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("series: truncation mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(rank_, trunc_);
    for (const auto &[m, c] : coeffs_)
        r.coeffs_[m] = -c;
    return r;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other) {
    require_compatible(*this, other);
    for (const auto &[m, c] : other.coeffs_)
        add_coeff(m, c);
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other) {
    require_compatible(*this, other);
    for (const auto &[m, c] : other.coeffs_)
        add_coeff(m, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
    require_compatible(a, b);
    TruncatedSeries r(a.rank(), a.trunc());
    for (const auto &[ma, ca] : a.coeffs()) {
        int remaining = a.trunc() - ma.degree();
        for (const auto &[mb, cb] : b.coeffs()) {
            if (mb.degree() > remaining)
                break; // map is sorted by degree first
            Monomial m;
            m.letters.reserve(ma.letters.size() + mb.letters.size());
            m.letters = ma.letters;
            m.letters.insert(m.letters.end(), mb.letters.begin(), mb.letters.end());
            r.add_coeff(m, ca * cb);
        }
    }
    return r;
}

TruncatedSeries scalar_mul(const Rat &c, const TruncatedSeries &a) {
    TruncatedSeries r(a.rank(), a.trunc());
    if (c == 0)
        return r;
    for (const auto &[m, q] : a.coeffs())
        r.set_coeff(m, c * q);
    return r;
}

TruncatedSeries invert_unit(const TruncatedSeries &a) {
    Rat c0 = a.constant_term();
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("invert_unit: constant term must be +-1");
    // a = c0(1 + u) with u in the augmentation ideal; invert geometrically.
    TruncatedSeries u = scalar_mul(Rat(1) / c0, a);
    u.add_coeff(Monomial{}, -1);
    TruncatedSeries result = TruncatedSeries::constant(a.rank(), a.trunc(), Rat(1) / c0);
    TruncatedSeries power = TruncatedSeries::constant(a.rank(), a.trunc(), 1);
    for (int k = 1; k <= a.trunc(); ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        result += scalar_mul((k % 2 == 0 ? Rat(1) : Rat(-1)) / c0, power);
    }
    return result;
}

TruncatedSeries graded_part(const TruncatedSeries &a, int n) {
    if (n < 0 || n > a.trunc())
        throw std::invalid_argument("graded_part: degree outside truncation");
    TruncatedSeries r(a.rank(), a.trunc());
    for (const auto &[m, c] : a.coeffs())
        if (m.degree() == n)
            r.set_coeff(m, c);
    return r;
}

TruncatedSeries substitute(const TruncatedSeries &a, const std::vector<TruncatedSeries> &images) {
    if (static_cast<int>(images.size()) != a.rank())
        throw std::invalid_argument("substitute: need one image per variable");
    for (const TruncatedSeries &img : images) {
        require_compatible(a, img);
        if (img.constant_term() != 0)
            throw std::invalid_argument("substitute: images must have zero constant term");
    }
    TruncatedSeries r(a.rank(), a.trunc());
    // Walk monomials in sorted order and share prefix products.
    std::vector<TruncatedSeries> products; // products[k] = image of first k letters
    products.push_back(TruncatedSeries::constant(a.rank(), a.trunc(), 1));
    std::vector<uint8_t> current;
    for (const auto &[m, c] : a.coeffs()) {
        size_t common = 0;
        while (common < current.size() && common < m.letters.size() &&
               current[common] == m.letters[common])
            ++common;
        current.assign(m.letters.begin(), m.letters.end());
        products.resize(common + 1);
        for (size_t k = common; k < current.size(); ++k)
            products.push_back(products.back() * images[current[k] - 1]);
        r += scalar_mul(c, products.back());
    }
    return r;
}

TruncatedSeries right_partial(const TruncatedSeries &a, int j) {
    if (j < 1 || j > a.rank())
        throw std::invalid_argument("right_partial: index out of range");
    TruncatedSeries r(a.rank(), a.trunc());
    for (const auto &[m, c] : a.coeffs()) {
        if (m.letters.empty() || m.letters.back() != j)
            continue;
        Monomial head;
        head.letters.assign(m.letters.begin(), m.letters.end() - 1);
        r.add_coeff(head, c);
    }
    return r;
}

TruncatedSeries cyclic_rotate(const TruncatedSeries &a) {
    TruncatedSeries r(a.rank(), a.trunc());
    for (const auto &[m, c] : a.coeffs())
        r.add_coeff(m.rotated(), c);
    return r;
}

TruncatedSeries cyclic_symmetrize(const TruncatedSeries &a, int n) {
    if (!a.is_homogeneous(n))
        throw std::invalid_argument("cyclic_symmetrize: input must be homogeneous");
    TruncatedSeries sum = a;
    TruncatedSeries rot = a;
    for (int k = 1; k < n; ++k) {
        rot = cyclic_rotate(rot);
        sum += rot;
    }
    return sum;
}

bool is_cyclically_balanced(const TruncatedSeries &a, int n) {
    return cyclic_symmetrize(a, n).is_zero();
}

TruncatedSeries ring_commutator(const TruncatedSeries &a, const TruncatedSeries &b) {
    return a * b - b * a;
}

std::string TruncatedSeries::to_text() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (const auto &[m, c] : coeffs_) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (size_t k = 0; k < m.letters.size(); ++k) {
            if (k > 0)
                mono += "*";
            mono += fmt::format("X{}", static_cast<int>(m.letters[k]));
        }
        if (mono.empty())
            out += rat_to_string(abs);
        else if (abs == 1)
            out += mono;
        else
            out += rat_to_string(abs) + "*" + mono;
    }
    return out;
}

std::string series_to_json(const TruncatedSeries &a) {
    std::string out = "[";
    bool first = true;
    for (const auto &[m, c] : a.coeffs()) {
        if (!first)
            out += ",";
        first = false;
        out += "{\"word\":[";
        for (size_t k = 0; k < m.letters.size(); ++k) {
            if (k > 0)
                out += ",";
            out += std::to_string(static_cast<int>(m.letters[k]));
        }
        out += fmt::format("],\"coeff\":\"{}\"}}", rat_to_string(c));
    }
    return out + "]";
}

} // namespace autlie
