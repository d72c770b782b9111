#include "circlesep/separability_oracle.hpp"

#include <algorithm>
#include <string>

#include "circlesep/error.hpp"

namespace circlesep {

namespace {

struct Row {
  StrictRow a;
  DotSet origin;
};

bool is_zero(const StrictRow& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

// Scale so the first nonzero coefficient has magnitude one.
void normalize(StrictRow& a) {
  for (const auto& x : a) {
    if (x != 0) {
      const Rational scale = abs(x);
      for (auto& y : a) y /= scale;
      return;
    }
  }
}

bool row_less(const Row& l, const Row& r) {
  for (int i = 0; i < 4; ++i) {
    if (l.a[i] != r.a[i]) return l.a[i] < r.a[i];
  }
  return l.origin < r.origin;
}

}  // namespace

bool strictly_feasible(std::vector<StrictRow> input) {
  if (input.size() > static_cast<std::size_t>(kMaxDots)) {
    throw Error(ErrorCode::UnsupportedSize, "too many rows for origin tracking");
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (is_zero(input[i])) return false;
    normalize(input[i]);
    rows.push_back({input[i], bit(static_cast<int>(i))});
  }

  for (int var = 0; var < 4; ++var) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      const int s = sgn(r.a[var]);
      if (s > 0) {
        pos.push_back(std::move(r));
      } else if (s < 0) {
        neg.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    const int eliminated = var + 1;
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const DotSet origin = p.origin | q.origin;
        if (popcount(origin) > eliminated + 1) continue;
        // p.a[var] > 0 > q.a[var]; the combination cancels var.
        StrictRow c;
        const Rational lp = -q.a[var];
        const Rational lq = p.a[var];
        for (int i = 0; i < 4; ++i) c[i] = lp * p.a[i] + lq * q.a[i];
        if (is_zero(c)) return false;
        normalize(c);
        next.push_back({std::move(c), origin});
      }
    }
    std::sort(next.begin(), next.end(), row_less);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Row& l, const Row& r) { return l.a == r.a && l.origin == r.origin; }),
               next.end());
    rows = std::move(next);
  }
  // Every surviving row has all coefficients eliminated, i.e. reads 0 > 0.
  return rows.empty();
}

bool oracle_separable(const DotConfig& config, DotSet subset) {
  const int n = config.size();
  if (subset == 0 || (subset & ~full_set(n)) != 0 || subset == full_set(n)) {
    throw Error(ErrorCode::IndexOutOfRange, "oracle_separable needs 0 < |subset| < n within the configuration");
  }
  std::vector<StrictRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& d = config.dot(i);
    if (contains(subset, i)) {
      rows.push_back({d.x(), d.y(), d.z(), Rational(-1)});
    } else {
      rows.push_back({Rational(-d.x()), Rational(-d.y()), Rational(-d.z()), Rational(1)});
    }
  }
  return strictly_feasible(std::move(rows));
}

}  // namespace circlesep
