#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace gbp {

using BigInt = boost::multiprecision::cpp_int;

// Exact proportion count/total, kept both reduced and raw.
class Ratio {
 public:
  Ratio() : Ratio(0, 1) {}
  // Throws PreconditionViolated unless 0 <= count <= total and total > 0.
  Ratio(BigInt count, BigInt total);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  const BigInt& raw_count() const noexcept { return raw_count_; }
  const BigInt& raw_total() const noexcept { return raw_total_; }

  // 1 - r, over the same raw total.
  Ratio complement() const;

  // "num/den"
  std::string str() const;
  // "num/den (count of total)"
  std::string detailed() const;

  // Accepts "a/b" or "a"; throws SyntaxError.
  static Ratio parse(std::string_view text);

  // Value equality; raw totals are not compared.
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  BigInt num_, den_;
  BigInt raw_count_, raw_total_;
};

inline Ratio half() { return Ratio(1, 2); }

BigInt factorial(unsigned n);

}  // namespace gbp
