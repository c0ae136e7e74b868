#include "batfun/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace batfun {

namespace {

using ZPoly = std::vector<Integer>;  // index = power, leading nonzero

int variations(const ZPoly& a) {
  int v = 0, last = 0;
  for (const auto& c : a) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Taylor shift by 1: a(x) -> a(x+1), in place.
void shift1(ZPoly& a) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = n - 1; i-- > 0;)
    for (std::size_t j = i; j + 1 < n; ++j) a[j] += a[j + 1];
}

// Number of roots of the node polynomial in the open unit interval:
// sign variations of (1+x)^d q(1/(1+x)) (exact when 0 or 1).
int unit_interval_count(const ZPoly& q) {
  ZPoly r(q.rbegin(), q.rend());
  shift1(r);
  return variations(r);
}

// Removes the largest common power of two (keeps coefficients small
// across the x -> x/2 rescalings).
void strip_twos(ZPoly& a) {
  mp_bitcnt_t min_tz = ~mp_bitcnt_t(0);
  for (const auto& c : a) {
    if (sgn(c) == 0) continue;
    min_tz = std::min(min_tz, mpz_scan1(c.get_mpz_t(), 0));
  }
  if (min_tz == 0 || min_tz == ~mp_bitcnt_t(0)) return;
  for (auto& c : a)
    mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), min_tz);
}

// q(x) ~ p(a + w x); children cover (a, a+w/2) and (a+w/2, a+w).
struct Node {
  ZPoly q;
  Rational a, w;
};

// Left-half transform: q(x/2) * 2^d.
ZPoly left_half(const ZPoly& q) {
  ZPoly l(q);
  const std::size_t d = l.size() - 1;
  for (std::size_t i = 0; i < l.size(); ++i)
    mpz_mul_2exp(l[i].get_mpz_t(), l[i].get_mpz_t(), d - i);
  strip_twos(l);
  return l;
}

struct IsolationSink {
  std::vector<Enclosure>* out;
  bool rightmost_only = false;
};

// Depth-first isolation over (a, a+w); returns true when rightmost_only
// mode has found its root (prunes the rest).
bool isolate_node(Node node, std::vector<Enclosure>& out, bool rightmost_first) {
  int cnt = unit_interval_count(node.q);
  if (cnt == 0) return false;
  if (cnt == 1) {
    out.emplace_back(node.a, node.a + node.w);
    return true;
  }
  Rational mid = node.a + node.w / 2;
  ZPoly l = left_half(node.q);
  ZPoly r(l);
  shift1(r);
  bool mid_root = sgn(r[0]) == 0;
  Node left{std::move(l), node.a, node.w / 2};
  Node right{std::move(r), mid, node.w / 2};
  if (rightmost_first) {
    if (isolate_node(std::move(right), out, true)) return true;
    if (mid_root) {
      out.emplace_back(Enclosure(mid));
      return true;
    }
    return isolate_node(std::move(left), out, true);
  }
  bool found_left = isolate_node(std::move(left), out, false);
  if (mid_root) out.emplace_back(Enclosure(mid));
  bool found_right = isolate_node(std::move(right), out, false);
  return found_left || mid_root || found_right;
}

Rational cauchy_bound_pow2(const ZPoly& p) {
  // Power of two B strictly above the Fujiwara root bound
  // 2 max_i (|a_i|/|a_d|)^{1/(d-i)}.  Far tighter than the classic
  // 1 + max|a_i/a_d| when the leading coefficient is small relative to the
  // middle ones (as for the polynomials here), which keeps the bisection
  // depth and the pre-scaling coefficient growth proportional to the
  // actual root magnitudes.
  const Integer& lead = p.back();
  const long lead_bits = static_cast<long>(mpz_sizeinbase(lead.get_mpz_t(), 2));
  const long d = static_cast<long>(p.size()) - 1;
  long max_exp = 1;
  for (long i = 0; i < d; ++i) {
    if (sgn(p[i]) == 0) continue;
    // |a_i|/|a_d| < 2^(bits(a_i) - bits(a_d) + 1).
    long diff = static_cast<long>(mpz_sizeinbase(p[i].get_mpz_t(), 2)) -
                lead_bits + 1;
    long k = d - i;
    long e = (diff > 0 ? (diff + k - 1) / k : 0) + 2;
    max_exp = std::max(max_exp, e);
  }
  Rational b(1);
  mpz_mul_2exp(b.get_num_mpz_t(), b.get_num_mpz_t(), max_exp);
  return b;
}

// Isolates the positive real roots of the integer polynomial (ascending,
// or descending-first search when rightmost_only).
std::vector<Enclosure> isolate_positive(const ZPoly& p, bool rightmost_only) {
  std::vector<Enclosure> out;
  if (p.size() <= 1) return out;
  Rational b = cauchy_bound_pow2(p);
  // q(x) = p(B x): coeff_i * B^i.
  ZPoly q(p);
  Integer pw(1);
  const Integer bnum = b.get_num();
  for (std::size_t i = 1; i < q.size(); ++i) {
    pw *= bnum;
    q[i] *= pw;
  }
  strip_twos(q);
  isolate_node(Node{std::move(q), Rational(0), b}, out, rightmost_only);
  return out;
}

ZPoly mirror(const ZPoly& p) {
  ZPoly m(p);
  for (std::size_t i = 1; i < m.size(); i += 2) m[i] = -m[i];
  return m;
}

int effective_sign_right(const RatPoly& p, const Rational& t) {
  // Sign of p just to the right of t (t may itself be a root).
  RatPoly d = p;
  while (!d.is_zero()) {
    int s = sign(d.eval(t));
    if (s != 0) return s;
    d = d.derivative();
  }
  return 0;
}

}  // namespace

int sign_at(const RatPoly& p, const Rational& t) { return sign(p.eval(t)); }

int descartes_variations(const RatPoly& p) {
  int v = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void refine_root(const RatPoly& p, Enclosure& e, const Rational& width) {
  if (e.is_point()) return;
  int sa = effective_sign_right(p, e.lo);
  while (e.width() > width) {
    Rational m = e.mid();
    int sm = sign_at(p, m);
    if (sm == 0) {
      e = Enclosure(m);
      return;
    }
    if (sm == sa)
      e.lo = m;
    else
      e.hi = m;
  }
}

std::vector<Enclosure> isolate_real_roots(
    const RatPoly& p, std::optional<std::pair<Rational, Rational>> domain,
    bool assume_squarefree) {
  if (p.is_zero())
    throw std::invalid_argument("isolate_real_roots: zero polynomial");
  RatPoly sf = assume_squarefree ? p : squarefree_part(p);
  // Factor out the root at the origin.
  std::size_t torder = 0;
  while (torder < sf.coeffs().size() && sgn(sf.coeff(torder)) == 0) ++torder;
  RatPoly core = sf.shift_down(torder);
  ZPoly ip;
  {
    auto v = core.primitive_integer_coeffs();
    ip.assign(v.begin(), v.end());
  }
  std::vector<Enclosure> roots;
  // Negative roots, mirrored back.
  for (auto& e : isolate_positive(mirror(ip), false))
    roots.emplace_back(-e.hi, -e.lo);
  std::reverse(roots.begin(), roots.end());
  if (torder > 0) roots.emplace_back(Enclosure(Rational(0)));
  for (auto& e : isolate_positive(ip, false)) roots.push_back(std::move(e));
  std::sort(roots.begin(), roots.end(),
            [](const Enclosure& x, const Enclosure& y) { return x.lo < y.lo; });

  if (!domain) return roots;
  const Rational& dlo = domain->first;
  const Rational& dhi = domain->second;
  std::vector<Enclosure> kept;
  for (auto& e : roots) {
    Enclosure c = e;
    if (c.is_point()) {
      if (c.lo >= dlo && c.lo <= dhi) kept.push_back(std::move(c));
      continue;
    }
    if (c.hi <= dlo || c.lo >= dhi) continue;
    // Clip a straddling enclosure by locating the root against the edge.
    auto clip = [&](const Rational& edge, bool lower_edge) -> bool {
      int s = sign_at(sf, edge);
      if (s == 0) {
        c = Enclosure(edge);
        return true;
      }
      int sa = effective_sign_right(sf, c.lo);
      bool root_left_of_edge = (s != sa);
      if (lower_edge) {
        if (root_left_of_edge) return false;  // root < dlo, outside
        c.lo = edge;
      } else {
        if (!root_left_of_edge) return false;  // root > dhi, outside
        c.hi = edge;
      }
      return true;
    };
    if (c.lo < dlo && !clip(dlo, true)) continue;
    if (!c.is_point() && c.hi > dhi && !clip(dhi, false)) continue;
    kept.push_back(std::move(c));
  }
  return kept;
}

std::optional<Enclosure> largest_real_root(const RatPoly& p, bool assume_squarefree) {
  if (p.is_zero())
    throw std::invalid_argument("largest_real_root: zero polynomial");
  if (p.degree() == 0) return std::nullopt;
  RatPoly sf = assume_squarefree ? p : squarefree_part(p);
  std::size_t torder = 0;
  while (torder < sf.coeffs().size() && sgn(sf.coeff(torder)) == 0) ++torder;
  RatPoly core = sf.shift_down(torder);
  ZPoly ip;
  if (core.degree() >= 1) {
    auto v = core.primitive_integer_coeffs();
    ip.assign(v.begin(), v.end());
  }
  if (!ip.empty()) {
    std::vector<Enclosure> hit;
    isolate_node(
        [&] {
          Rational b = cauchy_bound_pow2(ip);
          ZPoly q(ip);
          Integer pw(1);
          for (std::size_t i = 1; i < q.size(); ++i) {
            pw *= b.get_num();
            q[i] *= pw;
          }
          strip_twos(q);
          return Node{std::move(q), Rational(0), b};
        }(),
        hit, /*rightmost_first=*/true);
    if (!hit.empty()) return hit.front();
  }
  if (torder > 0) return Enclosure(Rational(0));
  if (!ip.empty()) {
    // Largest root is negative: smallest positive root of p(-t).
    auto all = isolate_positive(mirror(ip), false);
    std::optional<Enclosure> best;
    for (auto& e : all) {
      Enclosure m(-e.hi, -e.lo);
      if (!best || m.lo > best->lo) best = m;
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace batfun
