#pragma once

#include <array>
#include <optional>
#include <string>

#include "kacq/ratfunc.hpp"

namespace kacq {

// Values indexed by extension degree n = 1..kVolumeDepth. An entry is
// undefined when it came from an Adams image beyond the stored depth.
class VolumeSequence {
 public:
  static constexpr int kDepth = 4;

  VolumeSequence() { v_.fill(Rat(0)); }
  explicit VolumeSequence(const Rat& c) { v_.fill(c); }
  // entries[n-1] for n = 1..k; the rest undefined
  static VolumeSequence partial(const std::vector<Rat>& entries);
  // n -> f(q0^n)
  static VolumeSequence from_rf(const RationalFunction& f, const Rat& q0);

  bool defined(int n) const { return v_[static_cast<size_t>(n - 1)].has_value(); }
  const Rat& at(int n) const;
  bool is_zero() const;

  VolumeSequence operator-() const;
  friend VolumeSequence operator+(const VolumeSequence& a, const VolumeSequence& b);
  friend VolumeSequence operator-(const VolumeSequence& a, const VolumeSequence& b) { return a + (-b); }
  friend VolumeSequence operator*(const VolumeSequence& a, const VolumeSequence& b);
  VolumeSequence scaled(const Rat& c) const;
  VolumeSequence adams(long m) const;
  friend bool operator==(const VolumeSequence& a, const VolumeSequence& b) { return a.v_ == b.v_; }
  std::string str() const;

 private:
  std::array<std::optional<Rat>, kDepth> v_;
};

}  // namespace kacq
