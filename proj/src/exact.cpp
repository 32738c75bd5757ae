// Implementation of the exact arithmetic helpers. The decimal renderer works
// entirely in integer arithmetic so that report columns never depend on
// binary floating-point rounding.

#include "exact.hpp"

#include <stdexcept>

namespace shc {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_round_half_up(const Rat& r) {
  return rat_floor(r + Rat(1, 2));
}

std::string rat_to_string(const Rat& r) {
  if (rat_is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  size_t start = 0;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = (s[0] == '-');
    start = 1;
  }
  size_t slash = s.find('/', start);
  std::string num_part = s.substr(start, slash == std::string::npos ? std::string::npos
                                                                    : slash - start);
  if (!all_digits(s, start, start + num_part.size()))
    throw std::invalid_argument("malformed rational: '" + s + "'");
  Int num(num_part, 10);
  Int den(1);
  if (slash != std::string::npos) {
    std::string den_part = s.substr(slash + 1);
    if (!all_digits(den_part, 0, den_part.size()))
      throw std::invalid_argument("malformed rational: '" + s + "'");
    den = Int(den_part, 10);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  if (neg) num = -num;
  return make_rat(num, den);
}

namespace {

// floor(num/den + 1/2) for positive num, den.
Int div_round_half_up(const Int& num, const Int& den) {
  Int q;
  Int two_num_plus_den = 2 * num + den;
  Int two_den = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), two_num_plus_den.get_mpz_t(), two_den.get_mpz_t());
  return q;
}

// Fixed-point string from `significant` leading digits and the exponent of
// the most significant one; handles the rounding carry and trims zeros.
std::string compose_decimal(Int digits, long e, int significant, bool neg) {
  if (digits == pow10(static_cast<unsigned long>(significant))) {
    // Rounding carried all the way through (e.g. 999.96 -> 1000).
    digits = pow10(static_cast<unsigned long>(significant - 1));
    ++e;
  }
  std::string ds = digits.get_str();

  std::string out;
  if (e >= significant - 1) {
    out = ds + std::string(static_cast<size_t>(e - (significant - 1)), '0');
  } else if (e >= 0) {
    out = ds.substr(0, static_cast<size_t>(e + 1)) + "." +
          ds.substr(static_cast<size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + ds;
  }
  if (out.find('.') != std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') --last;
    out.erase(last + 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace

std::string rat_to_decimal(const Rat& r, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (r == 0) return "0";
  bool neg = r < 0;
  Int p = abs(r.get_num());
  Int q = r.get_den();

  // Exponent e with 10^e <= p/q < 10^(e+1).
  auto at_least_pow10 = [&](long m) {
    if (m >= 0) return cmp(p, q * pow10(static_cast<unsigned long>(m))) >= 0;
    return cmp(p * pow10(static_cast<unsigned long>(-m)), q) >= 0;
  };
  long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  // Integer carrying the leading `significant` digits, half-up rounded.
  long shift = significant - 1 - e;
  Int num = p;
  Int den = q;
  if (shift >= 0)
    num *= pow10(static_cast<unsigned long>(shift));
  else
    den *= pow10(static_cast<unsigned long>(-shift));
  Int digits = div_round_half_up(num, den);
  return compose_decimal(digits, e, significant, neg);
}

std::string rat_sqrt_to_decimal(const Rat& r, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (r < 0) throw std::invalid_argument("square root of a negative value");
  if (r == 0) return "0";
  const Int& p = r.get_num();
  const Int& q = r.get_den();

  // Exponent e with 10^e <= sqrt(p/q) < 10^(e+1), i.e. q*10^(2e) <= p.
  auto at_least_pow10 = [&](long m) {
    if (m >= 0) return cmp(p, q * pow10(static_cast<unsigned long>(2 * m))) >= 0;
    return cmp(p * pow10(static_cast<unsigned long>(-2 * m)), q) >= 0;
  };
  long e = (static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
            static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10))) /
           2;
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  // Leading digits: floor(sqrt(r) * 10^shift), then an exact half-up test.
  const long shift = significant - 1 - e;
  Int num = p;
  Int den = q;
  if (shift >= 0)
    num *= pow10(static_cast<unsigned long>(2 * shift));
  else
    den *= pow10(static_cast<unsigned long>(-2 * shift));
  Int scaled;  // floor(num/den); floor of its sqrt equals floor(sqrt(num/den))
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int digits;
  mpz_sqrt(digits.get_mpz_t(), scaled.get_mpz_t());
  // Round up iff num/den >= (digits + 1/2)^2.
  const Int twice = 2 * digits + 1;
  if (4 * num >= den * twice * twice) ++digits;
  return compose_decimal(digits, e, significant, false);
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rat_pow(const Rat& r, unsigned long e) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
  return make_rat(num, den);
}

long int_to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::invalid_argument("integer out of machine range");
  return v.get_si();
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int pow10(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace shc
