#pragma once

#include <vector>

#include "circlesep/rational.hpp"

namespace circlesep {

/// Dense univariate polynomial over the rationals, coefficients lowest degree
/// first, with no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// a + b t
  static Polynomial linear(const Rational& a, const Rational& b);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn((*this)(t)); }

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'): same roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... for a nonzero polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;

 private:
  int variations(const Rational& t) const;

  std::vector<Polynomial> chain_;
};

/// Open interval (lo, hi) with lo < hi.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Disjoint isolating intervals, in increasing order, one per distinct real
/// root of p in the open interval (a, b). Endpoints are never roots of p.
/// Requires p nonzero with p(a) != 0 and p(b) != 0.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// A point strictly inside (lo, hi), near the midpoint, at which none of the
/// given polynomials vanish.
Rational split_point(const Rational& lo, const Rational& hi, const std::vector<const Polynomial*>& avoid);

}  // namespace circlesep
