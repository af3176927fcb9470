#pragma once

// Fibonacci-p sequences, the characteristic root alpha_p, and numeric checks
// of the ratio, root, and growth-bound properties of those sequences.
//
// Everything here is a pure function of its arguments. Results are immutable
// values and may be shared across threads.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibsteg/bigint.hpp"
#include "fibsteg/dyadic.hpp"

namespace fibsteg {

inline constexpr double kDefaultTolerance = 1e-12;

/// Smallest accepted root tolerance: adjacent doubles in (1,2) are 2^-52 apart.
inline constexpr double kMinTolerance = 0x1p-52;

/// F_p(0..n_max) where F_p(0..p) = 1 and F_p(n) = F_p(n-1) + F_p(n-p-1).
struct PSequence {
  int p = 1;
  std::vector<BigInt> terms;

  const BigInt& operator[](std::size_t n) const { return terms.at(n); }
  std::size_t size() const { return terms.size(); }
};

/// Throws std::invalid_argument for p < 1.
PSequence generate_sequence(int p, std::size_t n_max);

/// The positive root of x^(p+1) - x^p - 1 with a certified bracket:
/// P(bracket_lo) < 0 < P(bracket_hi) holds exactly, not just in floating point.
struct AlphaRoot {
  int p = 1;
  double value = 0.0;
  double bracket_lo = 1.0;
  double bracket_hi = 2.0;
  double tolerance = kDefaultTolerance;

  Dyadic lo() const { return Dyadic::from_double(bracket_lo); }
  Dyadic hi() const { return Dyadic::from_double(bracket_hi); }
};

/// Exact sign of x^(p+1) - x^p - 1.
int characteristic_sign(int p, const Dyadic& x);

/// Bisection on [1, 2] with an exact sign test at every midpoint.
/// Throws std::invalid_argument for p < 1 or tolerance outside [kMinTolerance, 1].
AlphaRoot find_alpha(int p, double tolerance = kDefaultTolerance);

/// Newton iteration on P(x) from x0, stopping at a fixed point or after
/// max_iter steps.
double newton_polish(int p, double x0, int max_iter = 50);

enum class Verdict { Holds, Violated, Undecided };

const char* to_string(Verdict v);

/// Certified comparisons of alpha_p^e against an exact integer, using the
/// root's bracket: alpha^e lies in [lo^e, hi^e].
Verdict alpha_pow_less(const AlphaRoot& root, unsigned e, const BigInt& value);
Verdict alpha_pow_greater(const AlphaRoot& root, unsigned e, const BigInt& value);

/// alpha^e by repeated multiplication (no libm), for display.
double alpha_pow(const AlphaRoot& root, unsigned e);

// ---------------------------------------------------------------------------
// Ratios of consecutive terms

struct RatioSequence {
  int p = 1;
  std::vector<double> betas;  // betas[n] = F_p(n+1) / F_p(n)
};

/// Returns beta_0..beta_{n_max-1}. Requires n_max >= 1.
RatioSequence ratio_sequence(int p, std::size_t n_max);

/// Exact checks over a generated sequence (cross-multiplied, no rounding).
struct RatioCheck {
  bool leading_ones = false;  // beta_0..beta_{p-1} == 1
  bool first_two = false;     // beta_p == 2
  bool bounded = false;       // 1 < beta_n < 2 for n > p
  bool passed() const { return leading_ones && first_two && bounded; }
};
RatioCheck check_ratios(const PSequence& seq);

/// For p = 1: beta_{2n} strictly increasing and beta_{2n+1} strictly
/// decreasing over the whole sequence.
struct InterleavingCheck {
  bool even_increasing = false;
  bool odd_decreasing = false;
  std::size_t pairs_checked = 0;
  bool passed() const { return even_increasing && odd_decreasing; }
};
InterleavingCheck check_interleaving(const PSequence& seq);

/// First n < limit with |beta_n - alpha_p| < eps, if any.
std::optional<std::size_t> first_converged(const RatioSequence& ratios, double alpha, double eps);

// ---------------------------------------------------------------------------
// Root properties

struct Lemma3Record {
  int k = 1;
  double alpha_k = 0.0;
  double alpha_next = 0.0;
  bool decreasing = false;      // alpha_k > alpha_{k+1}
  bool approaches_one = false;  // alpha_{k+1}-1 < alpha_k-1 and alpha_k-1 < alpha_1-1 (k>1)
  bool midpoint = false;        // alpha_{k+1} > (1 + alpha_k) / 2
  bool power_below = false;     // alpha_k^k < k + 1
  bool power_above = false;     // alpha_k^(k+1) > 2

  bool passed() const {
    return decreasing && approaches_one && midpoint && power_below && power_above;
  }
};

/// One record per k in 1..k_max. Requires k_max >= 2.
std::vector<Lemma3Record> check_lemma3(int k_max, double tolerance = kDefaultTolerance);

struct Lemma4Report {
  int k_max = 0;
  int p_max = 0;
  bool radical_chain = false;        // (k+1)^(1/k) < k^(1/(k-1)) for 2 <= k <= k_max, and 3^(1/2) < 2
  bool alpha_below_radical = false;  // alpha_k < (k+1)^(1/k) for 1 <= k <= k_max
  bool descending_powers = false;    // alpha_p^j < j+1 for 1 <= j <= p <= p_max
  bool ascending_powers = false;     // alpha_p^(p+j) > j for 2 <= j <= p+1, p <= p_max
  std::vector<double> radicals;      // radicals[k-1] = (k+1)^(1/k), k = 1..k_max
  std::vector<std::string> failures;

  bool passed() const {
    return radical_chain && alpha_below_radical && descending_powers && ascending_powers;
  }
};

/// Requires k_max >= 2 and p_max >= 1.
Lemma4Report check_lemma4(int k_max, int p_max, double tolerance = kDefaultTolerance);
inline Lemma4Report check_lemma4(int k_max) { return check_lemma4(k_max, k_max); }

// ---------------------------------------------------------------------------
// Growth bounds alpha^(n-p) < F_p(n) < alpha^n and F_p(n) < 2^(n-p)

struct BoundRow {
  int n = 0;
  double lower = 0.0;  // alpha^(n-p)
  BigInt value;        // F_p(n)
  double upper = 0.0;  // alpha^n
  BigInt loose_upper;  // 2^(n-p)
  Verdict lower_verdict = Verdict::Undecided;
  Verdict upper_verdict = Verdict::Undecided;
  Verdict loose_verdict = Verdict::Undecided;

  bool ok() const {
    return lower_verdict == Verdict::Holds && upper_verdict == Verdict::Holds &&
           loose_verdict == Verdict::Holds;
  }
};

struct BoundReport {
  int p = 1;
  int n_min = 2;  // p + 1
  int n_max = 2;
  AlphaRoot root;
  std::vector<BoundRow> rows;
  std::vector<int> violations;  // n with a violated bound
  std::vector<int> undecided;   // n where the bracket was too wide to decide

  bool passed() const { return violations.empty() && undecided.empty(); }
};

/// Checks every p < n <= n_max. Requires n_max > p.
BoundReport verify_bounds(int p, int n_max, double tolerance = kDefaultTolerance);

}  // namespace fibsteg
