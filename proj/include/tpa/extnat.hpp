#pragma once

#include <cassert>
#include <ostream>
#include <string>

namespace tpa {

/// Extended natural number: a value in {0, 1, 2, ...} ∪ {infinity}.
///
/// Carries the total order Fin(k) < infinity and absorbing addition
/// (x + infinity = infinity). Used for path-length suprema and
/// projective dimensions.
class ExtNat {
public:
    constexpr ExtNat() = default;

    constexpr ExtNat(long long v) : v_(v) { assert(v >= 0); }

    static constexpr ExtNat infinity() {
        ExtNat x;
        x.v_ = -1;
        return x;
    }

    constexpr bool is_finite() const { return v_ >= 0; }

    /// Finite value; must not be called on infinity.
    constexpr long long value() const {
        assert(is_finite());
        return v_;
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) = default;

    friend constexpr bool operator<(ExtNat a, ExtNat b) {
        if (!b.is_finite())
            return a.is_finite();
        return a.is_finite() && a.v_ < b.v_;
    }

    friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return !(b < a); }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return !(a < b); }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (!a.is_finite() || !b.is_finite())
            return infinity();
        return ExtNat(a.v_ + b.v_);
    }

    /// "∞" or the decimal value.
    std::string str() const {
        return is_finite() ? std::to_string(v_) : "∞";
    }

    friend std::ostream& operator<<(std::ostream& os, ExtNat x) {
        return os << x.str();
    }

private:
    long long v_ = 0;
};

}  // namespace tpa
