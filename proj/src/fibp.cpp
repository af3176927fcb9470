#include "fibsteg/fibp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fibsteg {

namespace {

void require_order(int p) {
  if (p < 1) throw std::invalid_argument("order p must be >= 1, got " + std::to_string(p));
}

double pow_by_multiplication(double x, unsigned e) {
  double r = 1.0;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

PSequence generate_sequence(int p, std::size_t n_max) {
  require_order(p);
  PSequence seq;
  seq.p = p;
  seq.terms.reserve(n_max + 1);
  const auto order = static_cast<std::size_t>(p);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n <= order) {
      seq.terms.emplace_back(1);
    } else {
      seq.terms.push_back(seq.terms[n - 1] + seq.terms[n - order - 1]);
    }
  }
  return seq;
}

int characteristic_sign(int p, const Dyadic& x) {
  const Dyadic xp = x.pow(static_cast<unsigned>(p));
  return (xp * x - xp - Dyadic(BigInt(1))).sign();
}

AlphaRoot find_alpha(int p, double tolerance) {
  require_order(p);
  if (!(tolerance >= kMinTolerance) || !(tolerance <= 1.0)) {
    throw std::invalid_argument("tolerance must lie in [2^-52, 1]");
  }
  // P(1) = -1 and P(2) = 2^p - 1 > 0.
  double lo = 1.0;
  double hi = 2.0;
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int s = characteristic_sign(p, Dyadic::from_double(mid));
    if (s < 0) {
      lo = mid;
    } else if (s > 0) {
      hi = mid;
    } else {
      lo = hi = mid;
    }
  }
  AlphaRoot root;
  root.p = p;
  root.bracket_lo = lo;
  root.bracket_hi = hi;
  root.value = lo + (hi - lo) / 2;
  root.tolerance = tolerance;
  return root;
}

double newton_polish(int p, double x0, int max_iter) {
  require_order(p);
  double x = x0;
  for (int i = 0; i < max_iter; ++i) {
    const double xpm1 = pow_by_multiplication(x, static_cast<unsigned>(p - 1));
    const double xp = xpm1 * x;
    const double f = xp * x - xp - 1.0;
    const double df = (p + 1) * xp - p * xpm1;
    const double next = x - f / df;
    if (next == x) break;
    x = next;
  }
  return x;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Violated:
      return "violated";
    case Verdict::Undecided:
      return "undecided";
  }
  return "?";
}

Verdict alpha_pow_less(const AlphaRoot& root, unsigned e, const BigInt& value) {
  const Dyadic v(value);
  if (root.hi().pow(e) < v) return Verdict::Holds;
  if (root.lo().pow(e) >= v) return Verdict::Violated;
  return Verdict::Undecided;
}

Verdict alpha_pow_greater(const AlphaRoot& root, unsigned e, const BigInt& value) {
  const Dyadic v(value);
  if (root.lo().pow(e) > v) return Verdict::Holds;
  if (root.hi().pow(e) <= v) return Verdict::Violated;
  return Verdict::Undecided;
}

double alpha_pow(const AlphaRoot& root, unsigned e) { return pow_by_multiplication(root.value, e); }

RatioSequence ratio_sequence(int p, std::size_t n_max) {
  require_order(p);
  if (n_max < 1) throw std::invalid_argument("ratio_sequence needs n_max >= 1");
  const PSequence seq = generate_sequence(p, n_max);
  RatioSequence out;
  out.p = p;
  out.betas.reserve(n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    out.betas.push_back(ratio_to_double(seq.terms[n + 1], seq.terms[n]));
  }
  return out;
}

RatioCheck check_ratios(const PSequence& seq) {
  RatioCheck check;
  const auto order = static_cast<std::size_t>(seq.p);
  const std::size_t count = seq.size() > 0 ? seq.size() - 1 : 0;  // number of betas
  if (count <= order) return check;

  check.leading_ones = true;
  for (std::size_t n = 0; n < order; ++n) {
    if (seq.terms[n + 1] != seq.terms[n]) check.leading_ones = false;
  }
  check.first_two = seq.terms[order + 1] == 2 * seq.terms[order];
  check.bounded = true;
  for (std::size_t n = order + 1; n < count; ++n) {
    const BigInt& cur = seq.terms[n];
    const BigInt& next = seq.terms[n + 1];
    if (!(next > cur && next < 2 * cur)) check.bounded = false;
  }
  return check;
}

InterleavingCheck check_interleaving(const PSequence& seq) {
  InterleavingCheck check;
  check.even_increasing = true;
  check.odd_decreasing = true;
  const std::size_t count = seq.size() > 0 ? seq.size() - 1 : 0;
  // beta_{n+2} vs beta_n: F(n+3)/F(n+2) vs F(n+1)/F(n), cross-multiplied.
  for (std::size_t n = 0; n + 2 < count; ++n) {
    const BigInt lhs = seq.terms[n + 3] * seq.terms[n];
    const BigInt rhs = seq.terms[n + 1] * seq.terms[n + 2];
    if (n % 2 == 0) {
      if (!(lhs > rhs)) check.even_increasing = false;
    } else {
      if (!(lhs < rhs)) check.odd_decreasing = false;
    }
    ++check.pairs_checked;
  }
  if (check.pairs_checked < 2) {
    check.even_increasing = false;
    check.odd_decreasing = false;
  }
  return check;
}

std::optional<std::size_t> first_converged(const RatioSequence& ratios, double alpha, double eps) {
  for (std::size_t n = 0; n < ratios.betas.size(); ++n) {
    if (std::fabs(ratios.betas[n] - alpha) < eps) return n;
  }
  return std::nullopt;
}

std::vector<Lemma3Record> check_lemma3(int k_max, double tolerance) {
  if (k_max < 2) throw std::invalid_argument("check_lemma3 needs k_max >= 2");
  std::vector<AlphaRoot> roots;
  for (int k = 1; k <= k_max + 1; ++k) roots.push_back(find_alpha(k, tolerance));

  const Dyadic one(BigInt(1));
  const Dyadic two(BigInt(2));
  std::vector<Lemma3Record> out;
  for (int k = 1; k <= k_max; ++k) {
    const AlphaRoot& cur = roots[k - 1];
    const AlphaRoot& next = roots[k];
    Lemma3Record r;
    r.k = k;
    r.alpha_k = cur.value;
    r.alpha_next = next.value;
    r.decreasing = cur.lo() > next.hi();
    r.approaches_one = (next.hi() - one) < (cur.lo() - one) && (k == 1 || cur.hi() < roots[0].lo());
    r.midpoint = two * next.lo() > one + cur.hi();
    r.power_below = cur.hi().pow(k) < Dyadic(BigInt(k + 1));
    r.power_above = cur.lo().pow(k + 1) > two;
    out.push_back(r);
  }
  return out;
}

Lemma4Report check_lemma4(int k_max, int p_max, double tolerance) {
  if (k_max < 2) throw std::invalid_argument("check_lemma4 needs k_max >= 2");
  if (p_max < 1) throw std::invalid_argument("check_lemma4 needs p_max >= 1");
  Lemma4Report rep;
  rep.k_max = k_max;
  rep.p_max = p_max;

  std::vector<AlphaRoot> roots;
  for (int k = 1; k <= std::max(k_max, p_max); ++k) roots.push_back(find_alpha(k, tolerance));

  // (k+1)^(1/k) < k^(1/(k-1))  <=>  (k+1)^(k-1) < k^k. At k = 2 this is 3^(1/2) < 2.
  rep.radical_chain = true;
  for (int k = 1; k <= k_max; ++k) {
    rep.radicals.push_back(std::pow(static_cast<double>(k + 1), 1.0 / k));
    if (k < 2) continue;
    const BigInt lhs = boost::multiprecision::pow(BigInt(k + 1), static_cast<unsigned>(k - 1));
    const BigInt rhs = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(k));
    if (!(lhs < rhs)) {
      rep.radical_chain = false;
      rep.failures.push_back("radical chain at k=" + std::to_string(k));
    }
  }

  rep.alpha_below_radical = true;
  for (int k = 1; k <= k_max; ++k) {
    if (!(roots[k - 1].hi().pow(k) < Dyadic(BigInt(k + 1)))) {
      rep.alpha_below_radical = false;
      rep.failures.push_back("alpha_k < (k+1)^(1/k) at k=" + std::to_string(k));
    }
  }

  rep.descending_powers = true;
  rep.ascending_powers = true;
  for (int p = 1; p <= p_max; ++p) {
    const AlphaRoot& root = roots[p - 1];
    for (int j = 1; j <= p; ++j) {
      if (!(root.hi().pow(j) < Dyadic(BigInt(j + 1)))) {
        rep.descending_powers = false;
        rep.failures.push_back("alpha_p^j < j+1 at p=" + std::to_string(p) + " j=" + std::to_string(j));
      }
    }
    for (int j = 2; j <= p + 1; ++j) {
      if (!(root.lo().pow(p + j) > Dyadic(BigInt(j)))) {
        rep.ascending_powers = false;
        rep.failures.push_back("alpha_p^(p+j) > j at p=" + std::to_string(p) + " j=" + std::to_string(j));
      }
    }
  }
  return rep;
}

BoundReport verify_bounds(int p, int n_max, double tolerance) {
  require_order(p);
  if (n_max <= p) throw std::invalid_argument("verify_bounds needs n_max > p");
  BoundReport rep;
  rep.p = p;
  rep.n_min = p + 1;
  rep.n_max = n_max;
  rep.root = find_alpha(p, tolerance);
  const PSequence seq = generate_sequence(p, static_cast<std::size_t>(n_max));

  for (int n = p + 1; n <= n_max; ++n) {
    BoundRow row;
    row.n = n;
    row.value = seq.terms[n];
    const auto below = static_cast<unsigned>(n - p);
    row.lower = alpha_pow(rep.root, below);
    row.upper = alpha_pow(rep.root, static_cast<unsigned>(n));
    row.loose_upper = BigInt(1) << below;
    row.lower_verdict = alpha_pow_less(rep.root, below, row.value);
    row.upper_verdict = alpha_pow_greater(rep.root, static_cast<unsigned>(n), row.value);
    row.loose_verdict = row.value < row.loose_upper ? Verdict::Holds : Verdict::Violated;

    const bool violated = row.lower_verdict == Verdict::Violated ||
                          row.upper_verdict == Verdict::Violated ||
                          row.loose_verdict == Verdict::Violated;
    if (violated) {
      rep.violations.push_back(n);
    } else if (!row.ok()) {
      rep.undecided.push_back(n);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace fibsteg
