#include "multistat/rational.hpp"

#include <cctype>

#include "multistat/error.hpp"

namespace multistat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConstantPair: return "ConstantPair";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::ZeroPoly: return "ZeroPoly";
    case ErrorCode::NoNonnegativeBasis: return "NoNonnegativeBasis";
    case ErrorCode::CaseSplitRequired: return "CaseSplitRequired";
    case ErrorCode::StuckNoLinearPivot: return "StuckNoLinearPivot";
    case ErrorCode::DenominatorStraddlesZero: return "DenominatorStraddlesZero";
    case ErrorCode::ResultantVanishes: return "ResultantVanishes";
    case ErrorCode::NotBivariate: return "NotBivariate";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::SpecializationCollapse: return "SpecializationCollapse";
    case ErrorCode::LawsNotSolvable: return "LawsNotSolvable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::SyntaxError, "malformed number '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad_number(whole);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(whole);
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) bad_number(text);
    result = Rational(num, den);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      Integer magnitude = parse_integer(exp, text);
      if (!magnitude.fits_slong_p() || abs(magnitude) > 100000) bad_number(text);
      exponent = magnitude.get_si();
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = s.substr(0, dot);
      std::string_view frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) bad_number(text);
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(s);
    }
    Integer mantissa = parse_integer(digits, text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) {
      result = Rational(mantissa * scale);
    } else {
      result = Rational(mantissa, scale);
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  Rational a = abs(q);
  // Find e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(a.get_num().get_str().size()) -
           static_cast<long>(a.get_den().get_str().size());
  auto pow10 = [](long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p) : Rational(Integer(1), p);
  };
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;
  // Scale so that exactly `digits` digits sit before the point, then round.
  Rational scaled = a * pow10(digits - 1 - e);
  Integer rounded = floor(scaled + Rational(1, 2));
  if (rounded.get_str().size() > static_cast<size_t>(digits)) {  // 9.99 -> 10.0
    ++e;
    scaled = a * pow10(digits - 1 - e);
    rounded = floor(scaled + Rational(1, 2));
  }
  std::string mant = rounded.get_str();
  std::string out;
  long point = e + 1;  // digits before the decimal point
  if (point <= 0) {
    out = "0." + std::string(static_cast<size_t>(-point), '0') + mant;
  } else if (point >= static_cast<long>(mant.size())) {
    out = mant + std::string(static_cast<size_t>(point - static_cast<long>(mant.size())), '0');
  } else {
    out = mant.substr(0, static_cast<size_t>(point)) + "." + mant.substr(static_cast<size_t>(point));
  }
  return sign(q) < 0 ? "-" + out : out;
}

std::string to_exact_decimal(const Rational& q) {
  Integer den = q.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return to_string(q);
  unsigned places = twos > fives ? twos : fives;
  if (places == 0) return q.get_num().get_str();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Rational scaled_q = q * Rational(scale);
  Integer scaled = scaled_q.get_num();
  bool negative = scaled < 0;
  std::string digits = Integer(abs(scaled)).get_str();
  if (digits.size() <= places) digits = std::string(places + 1 - digits.size(), '0') + digits;
  std::string out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
  return negative ? "-" + out : out;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }
int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Rational pow(const Rational& q, unsigned e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
  Rational r(n, d);  // already canonical: powers of coprime numbers stay coprime
  return r;
}

Integer pow(const Integer& z, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "simplest_between needs lo < hi");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_between(-hi, -lo);
  // 0 <= lo < hi
  Integer candidate = floor(lo) + 1;
  if (Rational(candidate) < hi) return Rational(candidate);
  // No integer strictly inside: lo and hi share the integer part fl.
  Integer fl = floor(lo);
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = hi - Rational(fl);
  // 1/x maps (lo_frac, hi_frac) onto (1/hi_frac, 1/lo_frac).
  Rational inv;
  if (lo_frac == 0) {
    inv = Rational(floor(1 / hi_frac) + 1);
  } else {
    inv = simplest_between(1 / hi_frac, 1 / lo_frac);
  }
  return Rational(fl) + 1 / inv;
}

Rational round_down(const Rational& q, unsigned bits) {
  Integer scale = pow(Integer(2), bits);
  Rational scaled = q * Rational(scale);
  Rational r(floor(scaled), scale);
  r.canonicalize();
  return r;
}

Rational round_up(const Rational& q, unsigned bits) {
  Integer scale = pow(Integer(2), bits);
  Rational scaled = q * Rational(scale);
  Rational r(ceil(scaled), scale);
  r.canonicalize();
  return r;
}

}  // namespace multistat
