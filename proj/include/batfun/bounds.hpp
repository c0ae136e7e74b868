#pragma once

#include <string>
#include <utility>
#include <vector>

#include "batfun/analysis.hpp"
#include "batfun/bateman.hpp"
#include "batfun/enclosure.hpp"

namespace batfun {

struct Violation {
  int n;
  Rational t;
  std::string lhs, rhs;
};

struct BoundReport {
  std::string id;
  int n_lo = 0, n_hi = 0;
  std::string sampling;
  Enclosure worst_margin;  // min over samples of rhs - lhs
  bool margin_set = false;
  std::vector<Violation> violations;
  long samples = 0;
  bool pass() const { return violations.empty(); }
};

enum class SampleMode { Grid, CriticalPoints };

/// Certified sweep of one inequality from the catalog over its validity
/// domain intersected with [n_lo, n_hi].  Grid mode samples t at
/// `per_unit` points per unit (dyadic by default so grid points are exact
/// doubles), truncated at t = 4n for the F-family and t = 8 for the
/// H-family, with the zero/critical-point neighborhoods injected as extra
/// exact sample sites.  Borderline grid comparisons are retried through
/// the exact rational/MPFR path before anything is reported as a
/// violation.
///
/// Ids: B6 B16 B17 B18 B26 B28 B32 B34 B39 B46 B0N B44 BH1 BH2 BH3 BH4.
BoundReport verify_bound(BatemanTable& table, const std::string& id, int n_lo,
                         int n_hi, SampleMode mode = SampleMode::Grid,
                         int per_unit = 256);

std::vector<std::string> bound_catalog_ids();

/// (E(n), e(n)):
///   E(n) = sqrt(2*2^{1/8} n^{-1/8}
///               + sqrt(3/2 + 8 sqrt(2(n-1))) n^{1/8}
///                 / (2^{1/8} sqrt(2n - 3/2 - 8 sqrt(2(n-1)))))
///   e(n) = 2 - 3/(2n) - 8 sqrt(2(n-1))/n
/// Throws when the radicand of E is not certified positive (small n).
std::pair<Enclosure, Enclosure> envelopes(long n, int prec = 128);

Enclosure envelope_e_of(const Rational& x, int prec = 128);  // e(x), real x >= 2

struct ThresholdReport {
  Enclosure n0;                        // root of e(x) = e/sqrt(2)
  std::pair<long, long> e_crossing;    // (last n with E > 2/e, first with E < 2/e)
};

ThresholdReport solve_thresholds(int prec = 192);

struct ScanRecord {
  int n;
  Enclosure t_star;
  Enclosure max_abs;   // |F_n(T_n*)|; for the fast path an upper bound sqrt(2) n / T_n*
  Enclosure margin;    // 2/e - max_abs
  std::string method;  // "fast_path" | "full"
  bool pass;
};

/// Certifies max_t |F_n(t)| <= 2/e for n = 1..N (equality recognized at
/// n = 1).  With use_fast_path, n with T_n*/n >= e/sqrt(2) are certified
/// through |F_n(T_n*)| <= sqrt(2) n/T_n* <= 2/e without evaluating F_n.
std::vector<ScanRecord> krzyz_scan(int N, bool use_fast_path);
ScanRecord krzyz_scan_one(BatemanTable& table, int n, bool use_fast_path);

/// F_n^2 at the lowest critical point above the zero_index-th positive
/// zero t_n stays below 1/p + 2 p sqrt((2n - t_n)/t_n).
BoundReport lemma1_check(BatemanTable& table, int n, int zero_index,
                         const Rational& p);

/// Constant ladder C_0 = 1, C_{k+1} = 2 C_k 2^k, plus the grid check
/// |H_n(t)| t^k <= C_k for k <= k_max, n <= n_max, t in (0, t_max].
struct Theorem6Report {
  std::vector<Rational> constants;
  BoundReport grid;
};
Theorem6Report theorem6_check(BatemanTable& table, int k_max, int n_max,
                              const Rational& t_max, int per_unit = 256);

/// H_n(2) for n = 1..n_max (data for the monotonicity conjecture; nothing
/// is asserted).
std::vector<Enclosure> h2_probe(BatemanTable& table, int n_max, int prec = 128);

}  // namespace batfun
