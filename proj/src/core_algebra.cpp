#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

#include "jacquet/half_int.hpp"
#include "jacquet/matrix.hpp"
#include "jacquet/rational.hpp"

namespace jacquet {

namespace {

std::int64_t parse_int64(std::string_view text) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("HalfInt overflow");
    return r;
}

}  // namespace

// ---- HalfInt ----

HalfInt HalfInt::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        std::int64_t v = parse_int64(text);
        std::int64_t t;
        if (__builtin_mul_overflow(v, 2, &t)) throw std::overflow_error("HalfInt overflow");
        return from_twice(t);
    }
    std::int64_t num = parse_int64(trim(text.substr(0, slash)));
    std::int64_t den = parse_int64(trim(text.substr(slash + 1)));
    if (den == 1) return parse(text.substr(0, slash));
    if (den != 2) throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    return from_twice(num);
}

std::int64_t HalfInt::to_integer() const {
    if (!is_integer()) throw std::domain_error("HalfInt " + str() + " is not an integer");
    return twice_ / 2;
}

Rational HalfInt::to_rational() const {
    Rational q(static_cast<long>(twice_), 2L);
    q.canonicalize();
    return q;
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::operator-() const {
    if (twice_ == INT64_MIN) throw std::overflow_error("HalfInt overflow");
    return from_twice(-twice_);
}

HalfInt& HalfInt::operator+=(HalfInt o) {
    twice_ = checked_add(twice_, o.twice_);
    return *this;
}

HalfInt& HalfInt::operator-=(HalfInt o) {
    std::int64_t r;
    if (__builtin_sub_overflow(twice_, o.twice_, &r)) throw std::overflow_error("HalfInt overflow");
    twice_ = r;
    return *this;
}

HalfInt midpoint(HalfInt a, HalfInt b) {
    std::int64_t s = checked_add(a.twice(), b.twice());
    if (s % 2 != 0) throw std::domain_error("midpoint of " + a.str() + " and " + b.str() + " is not a half-integer");
    return HalfInt::from_twice(s / 2);
}

// ---- Rational ----

Rational make_rational(long n, long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0) throw std::domain_error("zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---- matrices ----

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    RationalMatrix c(n, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!is_zero(b[k][j])) c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

RationalMatrix invert_triangular(const RationalMatrix& m, const std::vector<std::size_t>& order_in) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    }
    std::vector<std::size_t> order = order_in;
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
    }
    if (order.size() != n) throw std::invalid_argument("order is not a permutation of the rows");
    std::vector<bool> seen(n, false);
    for (std::size_t o : order) {
        if (o >= n || seen[o]) throw std::invalid_argument("order is not a permutation of the rows");
        seen[o] = true;
    }

    auto a = [&](std::size_t i, std::size_t j) -> const Rational& { return m[order[i]][order[j]]; };
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(a(i, i))) throw SingularMatrix("zero diagonal entry at position " + std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!is_zero(a(i, j))) throw NotTriangular("matrix is not lower triangular in the given order");
        }
    }

    RationalMatrix b(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        b[j][j] = 1 / a(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = 0;
            for (std::size_t k = j; k < i; ++k) {
                if (!is_zero(a(i, k)) && !is_zero(b[k][j])) s += a(i, k) * b[k][j];
            }
            b[i][j] = -s / a(i, i);
        }
    }

    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[order[i]][order[j]] = b[i][j];
    }
    return inv;
}

}  // namespace jacquet
