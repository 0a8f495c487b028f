#pragma once

#include <map>
#include <utility>

#include "curvedop/rational.hpp"

namespace curvedop {

// Finite rational linear combination over a totally ordered key space.
// Zero coefficients are never stored, so equality is map equality and
// iteration order is the key order (deterministic printing downstream).
template <typename K>
class FormalSum {
public:
    using Terms = std::map<K, Rational>;

    FormalSum() = default;
    explicit FormalSum(const K& key, Rational coeff = Rational(1)) { add(key, coeff); }

    void add(const K& key, const Rational& coeff) {
        if (is_zero(coeff))
            return;
        auto [it, inserted] = terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero(it->second))
                terms_.erase(it);
        }
    }

    void add(const FormalSum& other, const Rational& scale = Rational(1)) {
        if (is_zero(scale))
            return;
        for (const auto& [k, c] : other.terms_)
            add(k, c * scale);
    }

    FormalSum& operator+=(const FormalSum& other) {
        add(other);
        return *this;
    }

    FormalSum& operator-=(const FormalSum& other) {
        add(other, Rational(-1));
        return *this;
    }

    FormalSum& operator*=(const Rational& scale) {
        if (is_zero(scale)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= scale;
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const Rational& s) { return a *= s; }
    friend FormalSum operator*(const Rational& s, FormalSum a) { return a *= s; }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    bool operator==(const FormalSum& other) const { return terms_ == other.terms_; }
    bool operator!=(const FormalSum& other) const { return !(*this == other); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    Terms terms_;
};

}  // namespace curvedop
