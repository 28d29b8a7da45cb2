#include "shv/scalar.hpp"

#include <stdexcept>

namespace shv {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed scalar: '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar: '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Scalar::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw std::range_error("scalar " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  q_ /= o.q_;
  return *this;
}

Scalar binomial(long m, long j) {
  if (j < 0) return Scalar(0);
  Scalar r(1);
  for (long t = 0; t < j; ++t) r = r * Scalar(m - t) / Scalar(t + 1);
  return r;
}

Scalar factorial(long n) {
  Scalar r(1);
  for (long t = 2; t <= n; ++t) r *= Scalar(t);
  return r;
}

}  // namespace shv
