#include "kacq/volume.hpp"

#include "kacq/errors.hpp"

namespace kacq {

VolumeSequence VolumeSequence::partial(const std::vector<Rat>& entries) {
  if (entries.size() > static_cast<size_t>(kDepth)) throw Error(ErrorKind::InvalidArgument, "volume sequence too long");
  VolumeSequence s;
  for (size_t i = 0; i < s.v_.size(); ++i) {
    if (i < entries.size())
      s.v_[i] = entries[i];
    else
      s.v_[i].reset();
  }
  return s;
}

VolumeSequence VolumeSequence::from_rf(const RationalFunction& f, const Rat& q0) {
  VolumeSequence s;
  Rat qn = q0;
  for (auto& e : s.v_) {
    e = rf_eval(f, qn);
    qn *= q0;
  }
  return s;
}

const Rat& VolumeSequence::at(int n) const {
  if (n < 1 || n > kDepth || !defined(n))
    throw Error(ErrorKind::InvalidArgument, "volume entry " + std::to_string(n) + " undefined");
  return *v_[static_cast<size_t>(n - 1)];
}

bool VolumeSequence::is_zero() const {
  for (const auto& e : v_)
    if (!e || *e != 0) return false;
  return true;
}

VolumeSequence VolumeSequence::operator-() const {
  VolumeSequence r = *this;
  for (auto& e : r.v_)
    if (e) e = -*e;
  return r;
}

VolumeSequence operator+(const VolumeSequence& a, const VolumeSequence& b) {
  VolumeSequence r;
  for (size_t i = 0; i < r.v_.size(); ++i) {
    if (a.v_[i] && b.v_[i])
      r.v_[i] = *a.v_[i] + *b.v_[i];
    else
      r.v_[i].reset();
  }
  return r;
}

VolumeSequence operator*(const VolumeSequence& a, const VolumeSequence& b) {
  VolumeSequence r;
  for (size_t i = 0; i < r.v_.size(); ++i) {
    if (a.v_[i] && b.v_[i])
      r.v_[i] = *a.v_[i] * *b.v_[i];
    else
      r.v_[i].reset();
  }
  return r;
}

VolumeSequence VolumeSequence::scaled(const Rat& c) const {
  VolumeSequence r = *this;
  for (auto& e : r.v_)
    if (e) e = *e * c;
  return r;
}

VolumeSequence VolumeSequence::adams(long m) const {
  VolumeSequence r;
  for (long n = 1; n <= kDepth; ++n) {
    long src = n * m;
    if (src <= kDepth)
      r.v_[static_cast<size_t>(n - 1)] = v_[static_cast<size_t>(src - 1)];
    else
      r.v_[static_cast<size_t>(n - 1)].reset();
  }
  return r;
}

std::string VolumeSequence::str() const {
  std::string s = "[";
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ", ";
    s += v_[i] ? v_[i]->get_str() : "?";
  }
  return s + "]";
}

}  // namespace kacq
