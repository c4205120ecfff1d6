#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace troprank {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Numerator and denominator are 64-bit; every operation is carried out in
/// 128-bit intermediates and reduced, and a result that no longer fits throws
/// std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design of the numeric tower
    Rational(std::int64_t numerator, std::int64_t denominator);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

    [[nodiscard]] Rational half() const { return *this / Rational(2); }
    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q" or "p"; parse() accepts the same plus terminating decimals ("-1.25").
    [[nodiscard]] std::string to_string() const;
    /// Decimal expansion when the denominator has only factors 2 and 5, else "p/q".
    [[nodiscard]] std::string to_decimal_string() const;
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace troprank

template <>
struct std::hash<troprank::Rational> {
    std::size_t operator()(const troprank::Rational& r) const noexcept
    {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
