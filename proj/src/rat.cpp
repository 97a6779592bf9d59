#include "zarcons/rat.hpp"

#include <ostream>

#include "zarcons/error.hpp"

namespace zarcons {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnsupportedFactorization: return "UnsupportedFactorization";
    case ErrorKind::UnsupportedAmbient: return "UnsupportedAmbient";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConjugateInputs: return "ConjugateInputs";
  }
  return "Unknown";
}

long Valuation::value() const {
  if (infinite_) fail(ErrorKind::InvalidInput, "value() of an infinite valuation");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

Valuation operator-(const Valuation& a, const Valuation& b) {
  if (b.infinite_) fail(ErrorKind::InvalidInput, "subtracting an infinite valuation");
  if (a.infinite_) return a;
  return Valuation(a.value_ - b.value_);
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Rat::Rat(const Int& n, const Int& d) {
  if (d == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) fail(ErrorKind::InvalidInput, "not a rational: " + text);
  if (q.get_den() == 0) fail(ErrorKind::InvalidInput, "zero denominator: " + text);
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const { return Rat(1) / *this; }

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

void require_prime(const Int& p, const char* what) {
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, std::string(what) + " = " + p.get_str() + " is not prime");
}

long multiplicity_of(const Int& p, const Int& n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "multiplicity in zero");
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation padic_val(const Rat& q, const Int& p) {
  require_prime(p);
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(multiplicity_of(p, q.num()) - multiplicity_of(p, q.den()));
}

Int mod_floor(const Int& n, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  Int m = abs(n);
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return false;
    }
    if (d > 1000000) fail(ErrorKind::Unsupported, "squarefree test beyond trial bound: " + n.get_str());
  }
  return true;
}

std::vector<Int> prime_divisors(const Int& n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "prime divisors of zero");
  std::vector<Int> out;
  Int m = abs(n);
  const long bound = 1000000;
  for (long d = 2; d <= bound && Int(d) * d <= m; ++d) {
    if (m % d == 0) {
      out.emplace_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) {
    if (!is_prime(m)) fail(ErrorKind::Unsupported, "integer too hard to factor: " + n.get_str());
    out.push_back(m);
  }
  return out;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace zarcons
