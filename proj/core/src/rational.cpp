#include "hetcache/rational.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hetcache {

namespace {

std::string strip(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = strip(s.substr(0, slash));
    std::string den = strip(s.substr(slash + 1));
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational: '" + s + "'");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
      throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal: '" + s + "'");
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole = whole.substr(1);
    if (!whole.empty() && whole[0] == '+') whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (whole.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal: '" + s + "'");
    mpz_class num(whole + frac, 10);
    mpz_class den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed integer: '" + s + "'");
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_rational_list(std::span<const Rational> values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_rational(values[i]);
  }
  return out;
}

std::string to_decimal_string(const Rational& q, int frac_digits) {
  bool negative = q < 0;
  Rational a = negative ? Rational(-q) : q;
  mpz_class scale(1);
  for (int i = 0; i < frac_digits; ++i) scale *= 10;
  // round(a * scale), halves up
  mpz_class num = a.get_num() * scale * 2 + a.get_den();
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), mpz_class(a.get_den() * 2).get_mpz_t());
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string fs = frac.get_str();
  if ((int)fs.size() < frac_digits) fs.insert(0, frac_digits - fs.size(), '0');
  std::string out = whole.get_str();
  if (frac_digits > 0) out += "." + fs;
  return negative && scaled != 0 ? "-" + out : out;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  unsigned e = exponent;
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

std::int64_t round_half_up(const Rational& q) {
  // floor(q + 1/2)
  mpz_class num = q.get_num() * 2 + q.get_den();
  mpz_class den = q.get_den() * 2;
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!r.fits_slong_p()) throw std::overflow_error("rounded rational out of range");
  return static_cast<std::int64_t>(r.get_si());
}

}  // namespace hetcache
