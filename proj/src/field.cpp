#include "zarcons/field.hpp"

#include <cctype>
#include <string>

#include "zarcons/error.hpp"

namespace zarcons {

long inverse_mod(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) fail(ErrorKind::InvalidInput, "element not invertible modulo " + std::to_string(m));
  return t < 0 ? t + m : t;
}

Field Field::prime(long p) {
  if (p < 2 || p >= (1L << 31) || !is_prime(Int(p)))
    fail(ErrorKind::InvalidInput, "field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view tag) {
  if (tag == "Q") return rationals();
  if (tag.size() >= 2 && (tag[0] == 'F' || tag[0] == 'f')) {
    std::string digits;
    for (char ch : tag.substr(1)) {
      if (std::isdigit(static_cast<unsigned char>(ch))) digits.push_back(ch);
      else if (ch != '_' && ch != '<' && ch != '>' && ch != 'p' && ch != ':') digits = "x";
    }
    if (!digits.empty() && digits.find('x') == std::string::npos && digits.size() < 11)
      return prime(std::stol(digits));
  }
  fail(ErrorKind::InvalidInput, "unknown field tag: " + std::string(tag));
}

Rat Field::normalize(const Rat& a) const {
  if (p_ == 0) return a;
  Int P(p_);
  Int n = mod_floor(a.num(), P);
  if (a.is_integer()) return Rat(n);
  Int d = mod_floor(a.den(), P);
  if (d == 0) fail(ErrorKind::InvalidInput, "denominator divisible by the characteristic: " + a.to_string());
  long inv = inverse_mod(d.get_si(), p_);
  return Rat(mod_floor(n * inv, P));
}

Rat Field::inv(const Rat& a) const {
  if (a.is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  if (p_ == 0) return a.inverse();
  return Rat(inverse_mod(normalize(a).num().get_si(), p_));
}

std::string Field::format(const Rat& a) const {
  if (p_ == 0) return a.to_string();
  long r = normalize(a).num().get_si();
  if (p_ > 2 && r > p_ / 2) r -= p_;
  return std::to_string(r);
}

std::string Field::tag() const { return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_); }

}  // namespace zarcons
