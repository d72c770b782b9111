#include "circlesep/polynomial.hpp"

#include <algorithm>

#include "circlesep/error.hpp"

namespace circlesep {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> c(a.coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InternalInconsistency, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(std::max(0, a.degree() - b.degree() + 1));
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const Rational q = rem[i] / b.leading();
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  const Rational lead = x.leading();
  std::vector<Rational> c = x.coeffs();
  for (auto& v : c) v /= lead;
  return Polynomial(std::move(c));
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  return divmod(p, gcd(p, p.derivative())).quotient;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InternalInconsistency, "Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    chain_.push_back(-divmod(chain_[chain_.size() - 2], chain_.back()).remainder);
  }
  chain_.pop_back();
}

int SturmSequence::variations(const Rational& t) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

Rational split_point(const Rational& lo, const Rational& hi, const std::vector<const Polynomial*>& avoid) {
  const Rational width = hi - lo;
  // Fractions 1/2, 1/3, 2/3, 1/4, 3/4, ... of the interval, nearest the middle first.
  for (long den = 2;; ++den) {
    for (long step = 0; step < den; ++step) {
      const long num = den / 2 + ((step % 2 == 0) ? step / 2 : -(step + 1) / 2);
      if (num <= 0 || num >= den) continue;
      const Rational t = lo + width * make_rational(num, den);
      const bool clear = std::none_of(avoid.begin(), avoid.end(), [&](const Polynomial* p) { return p->sign_at(t) == 0; });
      if (clear) return t;
    }
  }
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorCode::InternalInconsistency, "isolating roots of the zero polynomial");
  const Polynomial sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  std::vector<RootInterval> out;
  std::vector<RootInterval> pending{{a, b}};
  while (!pending.empty()) {
    RootInterval cur = pending.back();
    pending.pop_back();
    const int roots = sturm.count_roots(cur.lo, cur.hi);
    if (roots == 0) continue;
    if (roots == 1) {
      out.push_back(cur);
      continue;
    }
    const Rational mid = split_point(cur.lo, cur.hi, {&sf});
    pending.push_back({mid, cur.hi});
    pending.push_back({cur.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace circlesep
