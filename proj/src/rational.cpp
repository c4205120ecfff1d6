#include "troprank/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace troprank {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(i128 numerator, i128 denominator)
{
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const i128 g = gcd128(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (!fits(numerator) || !fits(denominator)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

Rational Rational::operator-() const
{
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    if (den_ == 1 && o.den_ == 1) {
        const i128 s = static_cast<i128>(num_) + o.num_;
        if (!fits(s)) throw std::overflow_error("rational overflow");
        num_ = static_cast<std::int64_t>(s);
        return *this;
    }
    *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o)
{
    *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept
{
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string() const
{
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return to_string();

    const int digits = std::max(twos, fives);
    i128 scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    i128 scaled = static_cast<i128>(num_) * (scale / den_);
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    const i128 whole = scaled / scale;
    i128 frac = scaled % scale;
    std::string frac_digits(static_cast<std::size_t>(digits), '0');
    for (int k = digits - 1; k >= 0; --k) {
        frac_digits[static_cast<std::size_t>(k)] = static_cast<char>('0' + static_cast<int>(frac % 10));
        frac /= 10;
    }
    return (negative ? "-" : "") + std::to_string(static_cast<std::int64_t>(whole)) + "." + frac_digits;
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto n = parse_int(text.substr(0, slash), text);
        const auto d = parse_int(text.substr(slash + 1), text);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return {n, d};
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.size() > 17 || frac_part.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        const bool negative = !int_part.empty() && int_part.front() == '-';
        std::string_view digits = int_part;
        if (negative || (!digits.empty() && digits.front() == '+')) digits.remove_prefix(1);
        const std::int64_t whole = digits.empty() ? 0 : parse_int(digits, text);
        const std::int64_t frac = parse_int(frac_part, text);
        std::int64_t scale = 1;
        for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
        Rational magnitude = Rational(whole) + Rational(frac, scale);
        return negative ? -magnitude : magnitude;
    }
    return {parse_int(text, text)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace troprank
