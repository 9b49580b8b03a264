#include "desing/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <sstream>

#include "desing/errors.hpp"

namespace desing {

Scalar Scalar::numeric(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParameterError("non-finite parameter");
  Scalar s;
  s.exact_.reset();
  s.value_ = z;
  return s;
}

const Rational& Scalar::exact() const {
  if (!exact_) throw ParameterError("parameter is not exact; use the numeric evaluators");
  return *exact_;
}

std::string Scalar::to_string() const {
  if (exact_) return exact_->get_str();
  std::ostringstream os;
  os.precision(17);
  os << value_.real() << (value_.imag() < 0 ? "" : "+") << value_.imag() << "i";
  return os.str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return a.value_ == b.value_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ + *b.exact_));
  return Scalar::numeric(a.value_ + b.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ - *b.exact_));
  return Scalar::numeric(a.value_ - b.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ * *b.exact_));
  return Scalar::numeric(a.value_ * b.value_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw ParameterError("division by zero parameter");
  if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ / *b.exact_));
  return Scalar::numeric(a.value_ / b.value_);
}

Scalar Scalar::operator-() const { return exact_ ? Scalar(Rational(-*exact_)) : Scalar::numeric(-value_); }

Twist Twist::root(int order, long power) {
  if (order < 1) throw ParameterError("root of unity order must be positive");
  long p = ((power % order) + order) % order;
  long g = std::gcd(p, static_cast<long>(order));
  Twist t;
  if (p == 0) {
    t.order_ = 1;
    t.power_ = 0;
  } else {
    t.order_ = static_cast<int>(order / g);
    t.power_ = p / g;
  }
  double angle = 2.0 * M_PI * static_cast<double>(t.power_) / t.order_;
  t.value_ = t.order_ == 1 ? Complex(1, 0) : t.order_ == 2 ? Complex(-1, 0) : std::polar(1.0, angle);
  return t;
}

Twist Twist::numeric(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParameterError("non-finite twist");
  if (std::abs(z) > 1.0 + 1e-15) throw ParameterError("twist must satisfy |xi| <= 1");
  if (z == Complex(1, 0)) return root(1, 0);
  if (z == Complex(-1, 0)) return root(2, 1);
  Twist t;
  t.order_ = 0;
  t.power_ = 0;
  t.value_ = z;
  return t;
}

bool Twist::is_one() const { return order_ == 1; }
bool Twist::is_minus_one() const { return order_ == 2; }

Complex Twist::value() const { return value_; }

CyclotomicNumber Twist::exact() const {
  if (!is_root_of_unity()) throw ParameterError("twist is not a root of unity");
  return CyclotomicNumber::root_of_unity(order_, power_);
}

std::string Twist::to_string() const {
  if (order_ == 1) return "1";
  if (order_ == 2) return "-1";
  if (order_ == 4) return power_ == 1 ? "i" : "-i";
  if (order_ > 0) return "e(" + std::to_string(power_) + "/" + std::to_string(order_) + ")";
  std::ostringstream os;
  os.precision(17);
  os << value_.real() << (value_.imag() < 0 ? "" : "+") << value_.imag() << "i";
  return os.str();
}

bool operator==(const Twist& a, const Twist& b) {
  if (a.order_ > 0 || b.order_ > 0) return a.order_ == b.order_ && a.power_ == b.power_;
  return a.value_ == b.value_;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  auto fail = [&] { return ParameterError("not a complex number: " + text); };
  if (s.empty()) throw fail();
  const char* p = s.c_str();
  const char* end = p + s.size();
  // optional leading sign-only imaginary unit: "i", "-i", "+i"
  auto read_number = [&](const char*& q, double& out) {
    char* stop = nullptr;
    out = std::strtod(q, &stop);
    if (stop == q) return false;
    q = stop;
    return true;
  };
  double first = 0.0;
  const char* q = p;
  if (!read_number(q, first)) {
    // "i", "+i", "-i"
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    throw fail();
  }
  if (q == end) return {first, 0.0};
  if (*q == 'i' && q + 1 == end) return {0.0, first};
  if (*q != '+' && *q != '-') throw fail();
  double sign = *q == '-' ? -1.0 : 1.0;
  ++q;
  double im = 1.0;
  if (*q != 'i') {
    if (*q == '+' || *q == '-' || !read_number(q, im)) throw fail();
  }
  if (q + 1 != end || *q != 'i') throw fail();
  return {first, sign * im};
}

Scalar parse_scalar(const std::string& text) {
  static const std::regex rational(R"(\s*[+-]?\d+(\s*/\s*\d+)?\s*)");
  if (std::regex_match(text, rational)) return Scalar(parse_rational(text));
  return Scalar::numeric(parse_complex(text));
}

Twist parse_twist(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s == "1") return Twist::one();
  if (s == "-1") return Twist::root(2, 1);
  if (s == "i") return Twist::root(4, 1);
  if (s == "-i") return Twist::root(4, 3);
  static const std::regex root(R"(e\((-?\d+)/(\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, root)) return Twist::root(std::stoi(m[2].str()), std::stol(m[1].str()));
  return Twist::numeric(parse_complex(s));
}

}  // namespace desing
