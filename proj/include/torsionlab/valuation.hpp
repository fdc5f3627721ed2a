#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace torsionlab {

// A 2-adic valuation: a nonnegative integer or Infinity. Infinity is reserved
// for the zero element and compares greater than every finite value.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(long v) {
    if (v < 0) throw std::invalid_argument("Valuation: negative value");
    return Valuation(false, v);
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  long value() const {
    if (inf_) throw std::logic_error("Valuation: value() of Infinity");
    return v_;
  }

  // Infinity absorbs addition.
  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinity();
    return finite(v_ + o.v_);
  }
  Valuation operator+(long k) const {
    if (inf_) return infinity();
    return finite(v_ + k);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }
  friend bool operator==(const Valuation& a, long b) { return !a.inf_ && a.v_ == b; }
  friend bool operator>=(const Valuation& a, long b) { return a.inf_ || a.v_ >= b; }
  friend bool operator<(const Valuation& a, long b) { return !a.inf_ && a.v_ < b; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  Valuation(bool inf, long v) : inf_(inf), v_(v) {}
  bool inf_;
  long v_;
};

}  // namespace torsionlab
