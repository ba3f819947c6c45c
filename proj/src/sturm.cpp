#include "ehrlace/sturm.hpp"

#include <algorithm>
#include <functional>

#include "ehrlace/errors.hpp"

namespace ehrlace {

namespace {

using ZPoly = std::vector<BigInt>;  // low-to-high, trimmed

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators and strips content. Multiplies by a positive scalar
// only, so every coefficient keeps its sign.
ZPoly to_primitive(const Polynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
  ZPoly z(p.coeffs().size());
  BigInt content = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    z[i] = num(p.coeff(i)) * (l / den(p.coeff(i)));
    content = boost::multiprecision::gcd(content, z[i]);
  }
  if (content > 1)
    for (auto& c : z) c /= content;
  return z;
}

ZPoly zderivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

void strip_content(ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// Sign-faithful pseudo-remainder: returns a positive multiple of rem(a, b).
ZPoly signed_prem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const BigInt& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  unsigned steps = 0;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    BigInt lr = r.back();
    size_t shift = r.size() - b.size();
    for (auto& c : r) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
    ztrim(r);
    ++steps;
  }
  if (lb < 0 && (steps % 2) == 1)
    for (auto& c : r) c = -c;
  return r;
}

// Simplest rational (smallest denominator) strictly between lo and hi,
// found by walking the continued-fraction expansion of the interval.
Rational simplest_in(const Rational& lo, const Rational& hi) {
  BigInt fl = floor_div(num(lo), den(lo));
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  Rational a = lo - Rational(fl), b = hi - Rational(fl);
  if (a == 0) {
    BigInt k = floor_div(den(b), num(b)) + 1;
    return Rational(fl) + Rational(1) / Rational(k);
  }
  return Rational(fl) + Rational(1) / simplest_in(Rational(1) / b, Rational(1) / a);
}

int sign_at_infinity(const ZPoly& p, int dir) {
  if (p.empty()) return 0;
  int s = p.back() > 0 ? 1 : -1;
  if (dir < 0 && ((p.size() - 1) % 2) == 1) s = -s;
  return s;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("Sturm chain of zero polynomial");
  // Sturm counts distinct roots; start from the squarefree part so the
  // chain stays valid even at roots of gcd(p, p').
  Polynomial sf = p.is_constant() ? p.monic() : squarefree_part(p);
  chain_.push_back(to_primitive(sf));
  if (chain_[0].size() <= 1) return;
  chain_.push_back(zderivative(chain_[0]));
  strip_content(chain_.back());
  while (chain_.back().size() > 1) {
    ZPoly r = signed_prem(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    strip_content(r);
    chain_.push_back(std::move(r));
  }
}

long SturmChain::variations_at(const Rational& x) const {
  const BigInt a = num(x), b = den(x);
  long var = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    // sign of p(a/b) == sign of sum c_i a^i b^(n-i)
    BigInt v = 0;
    BigInt bp = 1;
    std::vector<BigInt> bpow(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      bpow[i] = bp;
      bp *= b;
    }
    for (size_t i = p.size(); i-- > 0;) v = v * a + p[i] * bpow[p.size() - 1 - i];
    int s = v.sign();
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

long SturmChain::variations_at_infinity(int dir) const {
  long var = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    int s = sign_at_infinity(p, dir);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

long SturmChain::count(const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi) const {
  long vlo = lo ? variations_at(*lo) : variations_at_infinity(-1);
  long vhi = hi ? variations_at(*hi) : variations_at_infinity(+1);
  return vlo - vhi;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree part of zero polynomial");
  if (p.is_constant()) return p.monic();
  Polynomial g = Polynomial::gcd(p, p.derivative());
  return p.exact_div(g).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree decomposition of zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  // Yun's algorithm.
  Polynomial a = p.monic();
  Polynomial da = a.derivative();
  Polynomial g = Polynomial::gcd(a, da);
  Polynomial b = a.exact_div(g);
  Polynomial c = da.exact_div(g);
  Polynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Polynomial f = Polynomial::gcd(b, d);
    if (f.degree() > 0) out.push_back({f, i});
    b = b.exact_div(f);
    c = d.exact_div(f);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool all_roots_real(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("all_roots_real of zero polynomial");
  if (p.is_constant()) return true;
  for (const auto& f : squarefree_decomposition(p)) {
    if (SturmChain(f.p).count_all() != f.p.degree()) return false;
  }
  return true;
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero() || p.is_constant())
    throw DegenerateInput("Cauchy bound needs degree >= 1");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i))));
  return 1 + m / Rational(abs(p.leading()));
}

std::vector<Interval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("cannot isolate roots of zero polynomial");
  std::vector<Interval> out;
  if (p.is_constant()) return out;
  Polynomial sf = squarefree_part(p);
  if (sf.degree() == 0) return out;
  SturmChain chain(sf);
  // Round the root bound up to a power of two so every bisection midpoint
  // is a dyadic rational; integer roots then land on midpoints exactly and
  // come back as point intervals.
  Rational bound(2);
  while (bound < cauchy_bound(sf)) bound *= 2;

  std::function<void(const Rational&, const Rational&, long)> rec =
      [&](const Rational& lo, const Rational& hi, long n) {
        if (n == 0) return;
        if (n == 1) {
          // Prefer an exact point interval when the single root is rational
          // and sits at hi.
          if (sf(hi) == 0) {
            out.push_back({hi, hi});
            return;
          }
          Rational a = lo;
          if (sf(a) == 0) {
            // lo belongs to the neighboring interval; nudge right so the
            // closed interval holds exactly one root.
            Rational d = (hi - a) / 2;
            while (chain.count(a, a + d) != 0) d /= 2;
            a += d;
          }
          // Pin rational roots: for a tight isolating interval the root,
          // if rational, is the simplest rational inside it.
          Rational s = simplest_in(a, hi);
          if (sf(s) == 0) {
            out.push_back({s, s});
            return;
          }
          out.push_back({a, hi});
          return;
        }
        Rational mid = (lo + hi) / 2;
        if (sf(mid) == 0) {
          Rational d = (hi - lo) / 4;
          while (chain.count(mid - d, mid + d) != 1) d /= 2;
          rec(lo, mid - d, chain.count(lo, mid - d));
          out.push_back({mid, mid});
          rec(mid + d, hi, chain.count(mid + d, hi));
          return;
        }
        long nl = chain.count(lo, mid);
        rec(lo, mid, nl);
        rec(mid, hi, n - nl);
      };
  rec(-bound, bound, chain.count(-bound, bound));
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Interval refine_interval(const Polynomial& sf, Interval iv, const Rational& width) {
  if (iv.is_point()) return iv;
  SturmChain chain(sf);
  while (iv.width() > width) {
    Rational mid = iv.mid();
    if (sf(mid) == 0) return {mid, mid};
    if (chain.count(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

}  // namespace ehrlace
