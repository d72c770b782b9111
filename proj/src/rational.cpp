#include "circlesep/rational.hpp"

#include <cctype>

#include "circlesep/error.hpp"

namespace circlesep {

namespace {

bool is_canonical_natural(std::string_view digits) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return digits.size() == 1 || digits.front() != '0';
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  if (!is_canonical_natural(num)) {
    throw Error(ErrorCode::Parse, "malformed rational '" + original + "'");
  }
  if (negative && num == "0") {
    throw Error(ErrorCode::Parse, "negative zero '" + original + "'");
  }
  mpz_class p(std::string(num), 10);
  if (negative) p = -p;
  if (slash == std::string_view::npos) return Rational(p);

  if (!is_canonical_natural(den)) {
    throw Error(ErrorCode::Parse, "malformed denominator '" + original + "'");
  }
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::Parse, "zero denominator '" + original + "'");
  if (q == 1) throw Error(ErrorCode::Parse, "non-canonical denominator 1 '" + original + "'");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::Parse, "non-reduced rational '" + original + "'");
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace circlesep
