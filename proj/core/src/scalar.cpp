#include "ocha/scalar.hpp"

#include "ocha/graded.hpp"

namespace ocha {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw AlgebraError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw AlgebraError("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw AlgebraError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw AlgebraError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw AlgebraError("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace ocha
