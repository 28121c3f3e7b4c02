#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "jacquet/rational.hpp"

namespace jacquet {

// Finitely supported map L -> Q. Zero coefficients are never stored, so two sums
// are equal exactly when their maps are equal.
template <class L>
class FormalSum {
public:
    using map_type = std::map<L, Rational>;
    using const_iterator = typename map_type::const_iterator;

    FormalSum() = default;
    FormalSum(std::initializer_list<std::pair<L, Rational>> terms) {
        for (const auto& [label, c] : terms) add(label, c);
    }

    static FormalSum single(const L& label, const Rational& c = Rational(1)) {
        FormalSum s;
        s.add(label, c);
        return s;
    }

    void add(const L& label, const Rational& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }
    void add(L&& label, const Rational& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(label);
        if (it == terms_.end()) {
            terms_.emplace(std::move(label), c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    // this += c * other
    void add_scaled(const FormalSum& other, const Rational& c) {
        if (is_zero(c)) return;
        for (const auto& [label, d] : other.terms_) add(label, Rational(c * d));
    }

    Rational coeff(const L& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    FormalSum& operator+=(const FormalSum& o) {
        add_scaled(o, Rational(1));
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        add_scaled(o, Rational(-1));
        return *this;
    }
    FormalSum& operator*=(const Rational& c) {
        if (is_zero(c)) {
            terms_.clear();
        } else {
            for (auto& [label, d] : terms_) d *= c;
        }
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator-(FormalSum a) { return a *= Rational(-1); }
    friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

template <class L>
FormalSum<L> sum_add(const FormalSum<L>& a, const FormalSum<L>& b) {
    return a + b;
}

template <class L>
FormalSum<L> sum_scale(const Rational& c, const FormalSum<L>& a) {
    return c * a;
}

}  // namespace jacquet
