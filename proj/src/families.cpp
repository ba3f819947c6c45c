#include "ehrlace/families.hpp"

#include <map>
#include <sstream>

#include "ehrlace/errors.hpp"

namespace ehrlace {

namespace {

// C(x + a, d) as a polynomial in x.
Polynomial binomial_poly(const Rational& a, unsigned d) {
  Polynomial p(Rational(1));
  for (unsigned u = 0; u < d; ++u)
    p *= Polynomial({a - static_cast<long>(u), Rational(1)});
  return p / Rational(factorial(d));
}

Polynomial one_plus_t_pow(unsigned e) {
  return Polynomial({Rational(1), Rational(1)}).pow(e);
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("bad family parameter token: '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

long get_long(const std::map<std::string, std::string>& kv, const std::string& key,
              const std::string& spec) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw UsageError("family spec '" + spec + "' is missing parameter '" + key + "'");
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + it->second + "' in family spec '" + spec + "'");
  }
}

}  // namespace

std::string FamilyId::str() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::Cross: os << "cross:d=" << p1; break;
    case Tag::Stasheff: os << "stasheff:d=" << p1; break;
    case Tag::RootA: os << "roota:d=" << p1; break;
    case Tag::RootB: os << "rootb:d=" << p1; break;
    case Tag::RootC: os << "rootc:d=" << p1; break;
    case Tag::RootD: os << "rootd:d=" << p1; break;
    case Tag::DualA: os << "duala:d=" << p1; break;
    case Tag::Cube: os << "cube:d=" << p1; break;
    case Tag::SimplexP: os << "simplexp:d=" << p1; break;
    case Tag::DualSimplexP: os << "dualsimplexp:d=" << p1; break;
    case Tag::K1n: os << "k1n:n=" << p1; break;
    case Tag::K2n: os << "k2n:n=" << p1; break;
    case Tag::K3n: os << "k3n:n=" << p1; break;
    case Tag::Bipartite2: os << "bip2:m=" << p1 << ",n=" << p2; break;
    case Tag::Hdj: os << "hdj:d=" << p1 << ",j=" << p2; break;
    case Tag::Fdj: os << "fdj:d=" << p1 << ",j=" << p2; break;
    case Tag::Adk: os << "adk:d=" << p1 << ",k=" << p2; break;
    case Tag::Bdk: os << "bdk:d=" << p1 << ",k=" << p2; break;
    case Tag::Gdc: os << "g:d=" << p1 << ",c=" << to_string(c); break;
  }
  return os.str();
}

FamilyId parse_family(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  auto kv = parse_kv(colon == std::string::npos ? "" : spec.substr(colon + 1));
  using Tag = FamilyId::Tag;
  FamilyId id{Tag::Cross};
  static const std::map<std::string, Tag> single_d = {
      {"cross", Tag::Cross},         {"stasheff", Tag::Stasheff},
      {"roota", Tag::RootA},         {"rootb", Tag::RootB},
      {"rootc", Tag::RootC},         {"rootd", Tag::RootD},
      {"duala", Tag::DualA},         {"cube", Tag::Cube},
      {"simplexp", Tag::SimplexP},   {"dualsimplexp", Tag::DualSimplexP},
  };
  if (auto it = single_d.find(name); it != single_d.end()) {
    id.tag = it->second;
    id.p1 = get_long(kv, "d", spec);
  } else if (name == "k1n" || name == "k2n" || name == "k3n") {
    id.tag = name == "k1n" ? Tag::K1n : name == "k2n" ? Tag::K2n : Tag::K3n;
    id.p1 = get_long(kv, "n", spec);
  } else if (name == "bip2") {
    id.tag = Tag::Bipartite2;
    id.p1 = get_long(kv, "m", spec);
    id.p2 = get_long(kv, "n", spec);
  } else if (name == "hdj" || name == "fdj") {
    id.tag = name == "hdj" ? Tag::Hdj : Tag::Fdj;
    id.p1 = get_long(kv, "d", spec);
    id.p2 = get_long(kv, "j", spec);
  } else if (name == "adk" || name == "bdk") {
    id.tag = name == "adk" ? Tag::Adk : Tag::Bdk;
    id.p1 = get_long(kv, "d", spec);
    id.p2 = get_long(kv, "k", spec);
  } else if (name == "g" || name == "gdc") {
    id.tag = Tag::Gdc;
    id.p1 = get_long(kv, "d", spec);
    auto it = kv.find("c");
    if (it == kv.end())
      throw UsageError("family spec '" + spec + "' is missing parameter 'c'");
    id.c = parse_rational(it->second);
  } else {
    throw UsageError("unknown family '" + name + "'");
  }
  return id;
}

Polynomial hdj_polynomial(long d, long j) {
  if (d < 1 || j < 0 || j >= d)
    throw ParamError("hdj needs 0 <= j < d, got d=" + std::to_string(d) +
                     " j=" + std::to_string(j));
  Polynomial h;
  for (long i = 0; i <= j; ++i)
    h += binomial_poly(Rational(d - 1 - i), static_cast<unsigned>(d - 1)) *
         Rational(binomial(j, static_cast<unsigned>(i)));
  return h;
}

Polynomial build_F(long d, long j) {
  Polynomial h = hdj_polynomial(d, j);
  Polynomial divisor(Rational(1));
  for (long m = 1; m <= d - 1 - j; ++m)
    divisor *= Polynomial({Rational(m), Rational(1)});
  Polynomial htilde;
  try {
    htilde = h.exact_div(divisor);
  } catch (const DivisionError&) {
    throw InternalError("H^d_j is not divisible by (x+1)...(x+d-1-j) for d=" +
                        std::to_string(d) + " j=" + std::to_string(j));
  }
  return htilde.shifted(-Rational(d - j, 2));
}

Polynomial build_A(long d, long k) {
  if (k < 0 || 2 * k > d - 1)
    throw ParamError("adk needs 0 <= 2k <= d-1");
  Polynomial f = build_F(d, 2 * k);
  std::vector<Rational> a(static_cast<size_t>(k) + 1, Rational(0));
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % 2 == 1 && f.coeff(i) != 0)
      throw InternalError("F^d_{2k} has an odd-degree term");
    if (i % 2 == 0) a[i / 2] = f.coeff(i);
  }
  return Polynomial(std::move(a));
}

Polynomial build_B(long d, long k) {
  if (k < 0 || 2 * k + 1 > d - 1)
    throw ParamError("bdk needs 0 <= 2k+1 <= d-1");
  Polynomial f = build_F(d, 2 * k + 1);
  std::vector<Rational> b(static_cast<size_t>(k) + 1, Rational(0));
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % 2 == 0 && f.coeff(i) != 0)
      throw InternalError("F^d_{2k+1} has an even-degree term");
    if (i % 2 == 1) b[i / 2] = f.coeff(i);
  }
  return Polynomial(std::move(b));
}

Polynomial gdc_polynomial(long d, const Rational& c) {
  if (d < 3) throw ParamError("g needs d >= 3");
  return hdj_polynomial(d, d - 1) +
         hdj_polynomial(d, d - 3).shifted(Rational(-1)) * (c - 2);
}

EhrhartData family_series(const FamilyId& id) {
  using Tag = FamilyId::Tag;
  const long d = id.p1, n = id.p1;
  EhrhartData e;
  switch (id.tag) {
    case Tag::Cross:
      if (d < 0) throw ParamError("cross needs d >= 0");
      e.delta = one_plus_t_pow(static_cast<unsigned>(d)).coeffs();
      e.dim = static_cast<int>(d);
      return e;
    case Tag::K1n:
      if (n < 0) throw ParamError("k1n needs n >= 0");
      e.delta = one_plus_t_pow(static_cast<unsigned>(n)).coeffs();
      e.dim = static_cast<int>(n);
      return e;
    case Tag::K2n: {
      if (n < 1) throw ParamError("k2n needs n >= 1");
      Polynomial quad({Rational(1), Rational(2 * n), Rational(1)});
      e.delta = (one_plus_t_pow(static_cast<unsigned>(n - 1)) * quad).coeffs();
      e.dim = static_cast<int>(n) + 1;
      return e;
    }
    case Tag::K3n: {
      if (n < 2) throw ParamError("k3n needs n >= 2");
      Polynomial quart({Rational(1), Rational(4 * n), Rational(3 * n * n - n + 4),
                        Rational(4 * n), Rational(1)});
      e.delta = (one_plus_t_pow(static_cast<unsigned>(n - 2)) * quart).coeffs();
      e.dim = static_cast<int>(n) + 2;
      return e;
    }
    case Tag::Bipartite2: {
      const long m = id.p1, nn = id.p2;
      if (m < 1 || nn < m)
        throw ParamError("bip2 needs 1 <= m <= n");
      Polynomial quad({Rational(1), Rational(2 * m), Rational(1)});
      e.delta = (one_plus_t_pow(static_cast<unsigned>(nn - 1)) * quad).coeffs();
      e.dim = static_cast<int>(nn) + 1;
      return e;
    }
    case Tag::RootB: {
      if (d < 1) throw ParamError("rootb needs d >= 1");
      std::vector<Rational> v(static_cast<size_t>(d) + 1, Rational(0));
      for (long k = 0; k <= d; ++k)
        v[k] = Rational(binomial(2 * d + 1, static_cast<unsigned>(2 * k)));
      Polynomial corr =
          Polynomial({Rational(0), Rational(2 * d)}) *
          one_plus_t_pow(static_cast<unsigned>(d - 1));
      e.delta = (Polynomial(std::move(v)) - corr).coeffs();
      e.dim = static_cast<int>(d);
      return e;
    }
    case Tag::RootD: {
      if (d < 2) throw ParamError("rootd needs d >= 2");
      std::vector<Rational> v(static_cast<size_t>(d) + 1, Rational(0));
      for (long k = 0; k <= d; ++k)
        v[k] = Rational(binomial(2 * d, static_cast<unsigned>(2 * k)));
      Polynomial corr =
          Polynomial({Rational(0), Rational(2 * d)}) *
          one_plus_t_pow(static_cast<unsigned>(d - 2));
      e.delta = (Polynomial(std::move(v)) - corr).coeffs();
      e.dim = static_cast<int>(d);
      return e;
    }
    case Tag::SimplexP: {
      // Paper-literal numerator t + t^2 + ... + t^d (constant term zero).
      if (d < 1) throw ParamError("simplexp needs d >= 1");
      std::vector<Rational> v(static_cast<size_t>(d) + 1, Rational(1));
      v[0] = 0;
      e.delta = std::move(v);
      e.dim = static_cast<int>(d);
      return e;
    }
    default:
      return polynomial_to_delta(family_polynomial(id));
  }
}

Polynomial family_polynomial(const FamilyId& id) {
  using Tag = FamilyId::Tag;
  const long d = id.p1;
  switch (id.tag) {
    case Tag::Cross: {
      if (d < 0) throw ParamError("cross needs d >= 0");
      Polynomial h;
      for (long k = 0; k <= d; ++k)
        h += binomial_poly(Rational(d - k), static_cast<unsigned>(d)) *
             Rational(binomial(d, static_cast<unsigned>(k)));
      return h;
    }
    case Tag::Stasheff: {
      if (d < 0) throw ParamError("stasheff needs d >= 0");
      Polynomial h;
      for (long k = 0; k <= d; ++k) {
        Rational w(binomial(d + 1, static_cast<unsigned>(k + 1)) *
                       binomial(d + 1, static_cast<unsigned>(k)),
                   BigInt(d + 1));
        h += binomial_poly(Rational(d - k), static_cast<unsigned>(d)) * w;
      }
      return h;
    }
    case Tag::RootA: {
      if (d < 0) throw ParamError("roota needs d >= 0");
      Polynomial h;
      for (long k = 0; k <= d; ++k) {
        BigInt b = binomial(d, static_cast<unsigned>(k));
        h += binomial_poly(Rational(d - k), static_cast<unsigned>(d)) * Rational(b * b);
      }
      return h;
    }
    case Tag::RootC: {
      if (d < 0) throw ParamError("rootc needs d >= 0");
      Polynomial h;
      for (long k = 0; k <= d; ++k)
        h += binomial_poly(Rational(d - k), static_cast<unsigned>(d)) *
             Rational(binomial(2 * d, static_cast<unsigned>(2 * k)));
      return h;
    }
    case Tag::DualA: {
      if (d < 0) throw ParamError("duala needs d >= 0");
      std::vector<Rational> v(static_cast<size_t>(d) + 1);
      for (long i = 0; i <= d; ++i)
        v[i] = Rational(binomial(d + 1, static_cast<unsigned>(i)));
      return Polynomial(std::move(v));
    }
    case Tag::Cube: {
      if (d < 0) throw ParamError("cube needs d >= 0");
      return Polynomial({Rational(1), Rational(2)}).pow(static_cast<unsigned>(d));
    }
    case Tag::DualSimplexP: {
      if (d < 0) throw ParamError("dualsimplexp needs d >= 0");
      // C((d+1)x + d, d)
      Polynomial arg({Rational(d), Rational(d + 1)});
      Polynomial h(Rational(1));
      for (long u = 0; u < d; ++u) h *= arg - Polynomial(Rational(u));
      return h / Rational(factorial(static_cast<unsigned>(d)));
    }
    case Tag::Hdj:
      return hdj_polynomial(id.p1, id.p2);
    case Tag::Fdj:
      return build_F(id.p1, id.p2);
    case Tag::Adk:
      return build_A(id.p1, id.p2);
    case Tag::Bdk:
      return build_B(id.p1, id.p2);
    case Tag::Gdc:
      return gdc_polynomial(id.p1, id.c);
    default:
      return delta_to_polynomial(family_series(id));
  }
}

Rational hypergeometric_sum(const std::vector<Rational>& upper,
                            const std::vector<Rational>& lower,
                            const Rational& arg, unsigned terms) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned k = 0; k < terms; ++k) {
    sum += term;
    Rational next = term * arg / Rational(static_cast<long>(k) + 1);
    bool zero = false;
    for (const auto& a : upper) {
      Rational f = a + static_cast<long>(k);
      if (f == 0) zero = true;
      next *= f;
    }
    if (zero || next == 0) return sum;
    for (const auto& b : lower) {
      Rational f = b + static_cast<long>(k);
      if (f == 0)
        throw PoleError("lower parameter " + to_string(b) +
                        " hit a pole before termination");
      next /= f;
    }
    term = next;
  }
  if (term != 0)
    throw ParamError("hypergeometric series did not terminate within " +
                     std::to_string(terms) + " terms");
  return sum;
}

}  // namespace ehrlace
