#include "stardmp/exact/scalar.hpp"

#include <cctype>

#include "stardmp/core/errors.hpp"

namespace stardmp::exact {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw DomainError("malformed rational '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

void Rational::add_product(const Rational& a, const Rational& b, int sign) {
  thread_local mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  if (sign > 0)
    q_ += t;
  else
    q_ -= t;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_;
  re.add_product(im_, o.im_, -1);
  Rational im = re_ * o.im_;
  im.add_product(im_, o.re_);
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b, int sign) {
  if (!a.re_.is_zero()) {
    if (!b.re_.is_zero()) re_.add_product(a.re_, b.re_, sign);
    if (!b.im_.is_zero()) im_.add_product(a.re_, b.im_, sign);
  }
  if (!a.im_.is_zero()) {
    if (!b.im_.is_zero()) re_.add_product(a.im_, b.im_, -sign);
    if (!b.re_.is_zero()) im_.add_product(a.im_, b.re_, sign);
  }
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw DomainError("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty scalar");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
  const std::string body = s.substr(0, s.size() - 1);
  // The split is the last sign that is not leading and not part of "p/-q".
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  const std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  try {
    return {re_text.empty() ? Rational(0) : Rational::parse(re_text), Rational::parse(im_text)};
  } catch (const DomainError&) {
    throw DomainError("malformed complex scalar '" + std::string(text) + "'");
  }
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im;
  if (im_ == Rational(1))
    im = "i";
  else if (im_ == Rational(-1))
    im = "-i";
  else
    im = im_.to_string() + " i";
  if (re_.is_zero()) return im;
  return re_.to_string() + (im.front() == '-' ? "" : "+") + im;
}

}  // namespace stardmp::exact
