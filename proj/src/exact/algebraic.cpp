#include "starcomp/exact/algebraic.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

bool is_perfect_square(const BigInt& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto to_mpz = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return BigInt(part, 10);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("not an exact number: '" + s + "'");
    return Rational(to_mpz(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("not an exact fraction: '" + s + "'");
  }
  BigInt d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(to_mpz(num), d);
  q.canonicalize();
  return q;
}

}  // namespace

QuadraticField::QuadraticField(BigInt c0, BigInt c1, bool positive_root)
    : c0_(std::move(c0)), c1_(std::move(c1)), positive_(positive_root) {
  BigInt d = discriminant();
  if (d <= 0 || is_perfect_square(d)) {
    throw FieldError("x^2 + " + c1_.get_str() + "x + " + c0_.get_str() +
                     " does not define a real quadratic field");
  }
}

std::string QuadraticField::to_string() const {
  return "root(" + c0_.get_str() + "," + c1_.get_str() + "):" + (positive_ ? "pos" : "neg");
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, Rational x, Rational y)
    : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
  if (!field_ && sgn(y_) != 0) throw FieldError("irrational part without a field");
}

AlgebraicNumber AlgebraicNumber::quadratic_root(const BigInt& c0, const BigInt& c1, bool positive) {
  BigInt d = c1 * c1 - 4 * c0;
  if (d < 0) throw FieldError("x^2 + " + c1.get_str() + "x + " + c0.get_str() + " has no real root");
  if (is_perfect_square(d)) {
    BigInt r = isqrt(d);
    Rational root(BigInt(-c1 + (positive ? r : BigInt(-r))), 2);
    root.canonicalize();
    return AlgebraicNumber(root);
  }
  auto field = std::make_shared<const QuadraticField>(c0, c1, positive);
  return AlgebraicNumber(field, Rational(0), Rational(1));
}

AlgebraicNumber AlgebraicNumber::parse(std::string_view text) {
  static const std::regex root_re(R"(^\s*root\(\s*([-+]?\d+)\s*,\s*([-+]?\d+)\s*\)\s*:\s*(pos|neg)\s*$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, root_re)) {
    std::string c0 = m[1].str();
    std::string c1 = m[2].str();
    if (c0[0] == '+') c0.erase(0, 1);
    if (c1[0] == '+') c1.erase(0, 1);
    return quadratic_root(BigInt(c0, 10), BigInt(c1, 10), m[3].str() == "pos");
  }
  if (s.find("root") != std::string::npos) {
    throw std::invalid_argument("malformed quadratic root syntax: '" + s + "' (expected root(c0,c1):pos|neg)");
  }
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty number");
  return AlgebraicNumber(parse_rational(std::string_view(s).substr(first, last - first + 1)));
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return x_;
}

std::optional<BigInt> AlgebraicNumber::as_integer() const {
  if (!is_integer()) return std::nullopt;
  return BigInt(x_.get_num());
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return sgn(x_);
  // x + y*theta = alpha + beta*sqrt(D), theta = (-c1 +/- sqrt(D)) / 2.
  Rational alpha = x_ - y_ * Rational(field_->c1()) / 2;
  Rational beta = y_ / 2;
  if (!field_->positive_root()) beta = -beta;
  int sa = sgn(alpha);
  int sb = sgn(beta);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = alpha * alpha;
  Rational rhs = beta * beta * Rational(field_->discriminant());
  return lhs > rhs ? sa : sb;
}

AlgebraicNumber AlgebraicNumber::conjugate() const {
  if (is_rational()) return *this;
  // theta' = -c1 - theta
  return AlgebraicNumber(field_, x_ - Rational(field_->c1()) * y_, -y_);
}

Rational AlgebraicNumber::norm() const {
  if (!field_) return x_ * x_;
  return x_ * x_ - Rational(field_->c1()) * x_ * y_ + Rational(field_->c0()) * y_ * y_;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) {
    Rational inv = 1 / x_;
    return AlgebraicNumber(field_, inv, Rational(0));
  }
  AlgebraicNumber c = conjugate();
  Rational n = norm();
  return AlgebraicNumber(field_, c.x_ / n, c.y_ / n);
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return x_.get_str();
  std::ostringstream out;
  std::string theta = field_->to_string();
  if (sgn(x_) != 0) out << x_.get_str() << (sgn(y_) > 0 ? "+" : "-");
  else if (sgn(y_) < 0) out << "-";
  Rational ay = abs(y_);
  if (ay != 1) out << ay.get_str() << "*";
  out << theta;
  return out.str();
}

FieldPtr AlgebraicNumber::merge(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (*a.field_ == *b.field_) return a.field_;
  if (a.is_rational()) return b.field_;
  if (b.is_rational()) return a.field_;
  throw FieldError("operands belong to different quadratic fields: " + a.field_->to_string() + " vs " +
                   b.field_->to_string());
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  field_ = merge(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  field_ = merge(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  field_ = merge(*this, o);
  if (is_rational() && o.is_rational()) {
    x_ *= o.x_;
    return *this;
  }
  // theta^2 = -c1*theta - c0
  Rational yy = y_ * o.y_;
  Rational nx = x_ * o.x_ - Rational(field_->c0()) * yy;
  Rational ny = x_ * o.y_ + y_ * o.x_ - Rational(field_->c1()) * yy;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) { return *this *= o.inverse(); }

AlgebraicNumber AlgebraicNumber::operator-() const { return AlgebraicNumber(field_, -x_, -y_); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  if (a.is_rational()) return true;
  return *a.field_ == *b.field_;
}

std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

AlgebraicNumber pow(const AlgebraicNumber& base, unsigned exponent) {
  AlgebraicNumber result(1L);
  AlgebraicNumber b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace starcomp
