#include "qmv/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "qmv/errors.hpp"

namespace qmv {

Rat::Rat(std::int64_t n) : num_(n), den_(1), inf_(false) {
  if (n < 0) throw std::invalid_argument("Rat: negative value");
}

Rat::Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d), inf_(false) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  if ((n < 0) != (d < 0) && n != 0) throw std::invalid_argument("Rat: negative value");
  normalize();
}

void Rat::normalize() {
  if (inf_) { num_ = 0; den_ = 1; return; }
  if (den_ < 0) { num_ = -num_; den_ = -den_; }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) { num_ /= g; den_ /= g; }
}

Rat Rat::inf() {
  Rat r;
  r.inf_ = true;
  return r;
}

Rat Rat::parse(const std::string& s) {
  if (s == "inf") return inf();
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

bool Rat::operator==(const Rat& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return num_ == o.num_ && den_ == o.den_;
}

bool Rat::operator<(const Rat& o) const {
  if (inf_) return false;
  if (o.inf_) return true;
  return num_ * o.den_ < o.num_ * den_;
}

Rat Rat::operator+(const Rat& o) const {
  if (inf_ || o.inf_) return inf();
  return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::minus(const Rat& o) const {
  if (o >= *this) return Rat(0);
  if (inf_) return inf();
  return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::half() const {
  if (inf_) return inf();
  return Rat(num_, den_ * 2);
}

Rat Rat::mid(const Rat& a, const Rat& b) {
  if (a.is_inf() || b.is_inf()) throw std::invalid_argument("Rat::mid: infinite endpoint");
  return (a + b).half();
}

Rat Rat::min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat Rat::max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat Rat::ceil() const {
  if (inf_) return inf();
  return Rat((num_ + den_ - 1) / den_);
}

std::string Rat::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace qmv
