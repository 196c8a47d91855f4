#ifndef QMV_RATIONAL_HPP
#define QMV_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace qmv {

/// Exact extended non-negative rational: p/q with q > 0, or a distinguished
/// infinity. All arithmetic is exact; construction from doubles is deliberately
/// not provided.
class Rat {
public:
  Rat() : num_(0), den_(1), inf_(false) {}
  Rat(std::int64_t n);                 // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d); // normalized, d != 0

  static Rat inf();
  static Rat parse(const std::string& s); // "p/q", "3", "inf"

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && num_ == 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }

  // Real order: inf is the greatest element.
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this == o || *this < o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  Rat operator+(const Rat& o) const; // inf absorbs
  /// Truncated difference: returns 0 when o >= *this (in the real order);
  /// inf - x = inf for finite x, inf - inf = 0.
  Rat minus(const Rat& o) const;

  Rat half() const;                   // inf stays inf
  static Rat mid(const Rat& a, const Rat& b); // both finite
  static Rat min(const Rat& a, const Rat& b);
  static Rat max(const Rat& a, const Rat& b);

  Rat ceil() const; // integer round up; inf stays inf
  bool is_integer() const { return inf_ || den_ == 1; }

  std::string str() const;

private:
  std::int64_t num_, den_;
  bool inf_;
  void normalize();
};

} // namespace qmv

#endif
