#include "rog/rational.hpp"

#include <cstdio>

namespace rog {

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Peel digits from the absolute value; negate digit-wise to survive INT128_MIN.
  unsigned __int128 u = neg ? (~static_cast<unsigned __int128>(v) + 1) : static_cast<unsigned __int128>(v);
  char buf[64];
  int pos = 64;
  while (u) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s(buf + pos, buf + 64);
  return neg ? "-" + s : s;
}

namespace {

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const int128 g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

std::string Rational::to_decimal() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12Lg", static_cast<long double>(num_) / static_cast<long double>(den_));
  return buf;
}

}  // namespace rog
