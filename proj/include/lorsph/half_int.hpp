// Exact half-integer weights, stored as doubled integers.
#pragma once

#include <compare>
#include <cstdlib>
#include <optional>
#include <string>

#include "lorsph/errors.hpp"

namespace lorsph {

/// Half-integer index (weights l, m, n, ...). The value is `twice/2`;
/// arithmetic stays exact and parity is testable without float compares.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt whole(int n) { return from_twice(2 * n); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return twice_ / 2.0; }

    /// Integer value; the index must not be an odd half.
    constexpr int as_int() const {
        if (!is_integer())
            throw IndexError("half-integer used where an integer is required");
        return twice_ / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Accepts "p/q" with q in {1,2}, the doubled form "d<t>", or a plain integer.
    static std::optional<HalfInt> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        std::size_t off = 0;
        bool doubled = false;
        if (s[0] == 'd') {
            doubled = true;
            off = 1;
        }
        auto is_int = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/', off);
        if (slash == std::string::npos) {
            std::string body = s.substr(off);
            if (!is_int(body)) return std::nullopt;
            int v = std::atoi(body.c_str());
            return doubled ? from_twice(v) : whole(v);
        }
        if (doubled) return std::nullopt;
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        int p = std::atoi(num.c_str()), q = std::atoi(den.c_str());
        if (q == 1) return whole(p);
        if (q == 2) return from_twice(p);
        return std::nullopt;
    }

private:
    int twice_ = 0;
};

/// Difference of two weights in the same parity class, as an int.
inline int integer_diff(HalfInt a, HalfInt b) { return (a - b).as_int(); }

}  // namespace lorsph
