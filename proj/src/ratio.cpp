#include "gbp/ratio.hpp"

#include "gbp/error.hpp"

namespace gbp {

Ratio::Ratio(BigInt count, BigInt total)
    : raw_count_(std::move(count)), raw_total_(std::move(total)) {
  if (raw_total_ <= 0 || raw_count_ < 0 || raw_count_ > raw_total_) {
    throw Error(ErrorCode::PreconditionViolated,
                "ratio needs 0 <= count <= total with total > 0");
  }
  BigInt g = boost::multiprecision::gcd(raw_count_, raw_total_);
  if (g == 0) g = 1;
  num_ = raw_count_ / g;
  den_ = raw_total_ / g;
}

Ratio Ratio::complement() const { return Ratio(raw_total_ - raw_count_, raw_total_); }

std::string Ratio::str() const { return num_.str() + "/" + den_.str(); }

std::string Ratio::detailed() const {
  return str() + " (" + raw_count_.str() + " of " + raw_total_.str() + ")";
}

Ratio Ratio::parse(std::string_view text) {
  auto digits = [&](std::string_view part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError, "not a rational number: '" + std::string(text) + "'");
    }
    return BigInt(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(digits(text), 1);
  BigInt den = digits(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  return Ratio(digits(text.substr(0, slash)), std::move(den));
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace gbp
