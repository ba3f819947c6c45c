#include "ehrlace/latticecount.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ehrlace/errors.hpp"
#include "ehrlace/families.hpp"

namespace ehrlace {

namespace {

long parse_long(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "' in " + ctx);
  }
}

}  // namespace

GraphSpec GraphSpec::path(int num_edges) {
  if (num_edges < 0) throw ParamError("tree:d needs d >= 0");
  GraphSpec g;
  g.num_vertices = num_edges + 1;
  for (int i = 0; i < num_edges; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

GraphSpec GraphSpec::cycle(int n) {
  if (n < 3) throw ParamError("cycle:n needs n >= 3");
  GraphSpec g;
  g.num_vertices = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

GraphSpec GraphSpec::complete(int n) {
  if (n < 1) throw ParamError("complete:n needs n >= 1");
  GraphSpec g;
  g.num_vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

GraphSpec GraphSpec::complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw ParamError("kab:a,b needs a, b >= 1");
  GraphSpec g;
  g.num_vertices = a + b;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
  g.bipartition = {a, b};
  return g;
}

GraphSpec GraphSpec::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("graph spec '" + spec + "' is not name:params");
  std::string name = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (name == "tree") return path(static_cast<int>(parse_long(arg, spec)));
  if (name == "cycle") return cycle(static_cast<int>(parse_long(arg, spec)));
  if (name == "complete") return complete(static_cast<int>(parse_long(arg, spec)));
  if (name == "kab") {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw UsageError("kab needs two sizes: kab:a,b");
    return complete_bipartite(static_cast<int>(parse_long(arg.substr(0, comma), spec)),
                              static_cast<int>(parse_long(arg.substr(comma + 1), spec)));
  }
  throw UsageError("unknown graph builtin '" + name + "'");
}

GraphSpec GraphSpec::from_text(const std::string& text) {
  std::istringstream in(text);
  GraphSpec g;
  long n, m;
  if (!(in >> n >> m)) throw UsageError("graph file must start with 'n m'");
  g.num_vertices = static_cast<int>(n);
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v)) throw UsageError("graph file truncated in edge list");
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string word;
  if (in >> word) {
    if (word != "bipartition") throw UsageError("unexpected trailing token '" + word + "'");
    long a, b;
    if (!(in >> a >> b)) throw UsageError("bipartition line needs two sizes");
    g.bipartition = {static_cast<int>(a), static_cast<int>(b)};
  }
  g.validate();
  return g;
}

void GraphSpec::validate() const {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw ParamError("edge endpoint out of range");
    if (u == v) throw ParamError("loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw ParamError("duplicate edge");
  }
  if (bipartition) {
    auto [a, b] = *bipartition;
    if (a + b != num_vertices) throw ParamError("bipartition sizes must sum to |V|");
    for (auto [u, v] : edges)
      if ((u < a) == (v < a)) throw ParamError("edge does not cross the bipartition");
  }
}

int GraphSpec::num_components() const {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  int c = 0;
  for (int i = 0; i < num_vertices; ++i)
    if (find(i) == i) ++c;
  return c;
}

uint64_t default_point_budget() {
  if (const char* env = std::getenv("EHRLACE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

namespace {

using Point = std::vector<int16_t>;

std::string encode(const Point& p) {
  return std::string(reinterpret_cast<const char*>(p.data()),
                     p.size() * sizeof(int16_t));
}

}  // namespace

std::vector<uint64_t> count_dilates_upto(const GraphSpec& g, long s_max,
                                         uint64_t budget) {
  if (s_max < 0) throw ParamError("dilation factor must be >= 0");
  g.validate();
  const int n = g.num_vertices;
  std::vector<Point> generators;
  for (auto [u, v] : g.edges) {
    Point p(n, 0), q(n, 0);
    p[u] = 1;
    p[v] = -1;
    q[u] = -1;
    q[v] = 1;
    generators.push_back(p);
    generators.push_back(q);
  }
  std::unordered_set<std::string> seen;
  std::vector<Point> frontier;
  Point origin(n, 0);
  seen.insert(encode(origin));
  frontier.push_back(origin);
  std::vector<uint64_t> counts{1};
  for (long s = 1; s <= s_max; ++s) {
    std::vector<Point> next;
    for (const auto& p : frontier) {
      for (const auto& gen : generators) {
        Point q(n);
        for (int i = 0; i < n; ++i) q[i] = static_cast<int16_t>(p[i] + gen[i]);
        if (seen.insert(encode(q)).second) {
          if (seen.size() > budget)
            throw OverBudget("dilate DP exceeded point budget of " +
                             std::to_string(budget));
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
    counts.push_back(seen.size());
  }
  return counts;
}

uint64_t count_dilate(const GraphSpec& g, long s, uint64_t budget) {
  return count_dilates_upto(g, s, budget).back();
}

Polynomial ehrhart_interpolate(const GraphSpec& g, uint64_t budget) {
  g.validate();
  const int degree = g.num_vertices - g.num_components();
  auto counts = count_dilates_upto(g, degree + 1, budget);
  // Newton forward differences over s = 0..degree.
  std::vector<Rational> diff(counts.begin(), counts.end() - 1);
  Polynomial h;
  Polynomial rising(Rational(1));
  BigInt fact = 1;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) {
      rising *= Polynomial({Rational(-(j - 1)), Rational(1)});
      fact *= j;
    }
    h += rising * (diff[0] / Rational(fact));
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  if (h.degree() != degree || h(Rational(degree + 1)) != Rational(BigInt(counts.back())))
    throw InterpolationMismatch(
        "interpolated polynomial fails the cross-check at s = degree + 1");
  return h;
}

namespace {

// Aggregated support counts for correct (a,b)-digraph enumeration:
// counts[s][t3][t2] = number of valid supports of size s whose w_3 / w_2
// vertices have the given types (index 3 = untyped bucket for b < 3).
struct SupportTable {
  std::vector<std::array<std::array<BigInt, 3>, 3>> typed;  // [s][t3][t2]
  std::vector<BigInt> total;                                // [s]
};

int type_index(VertexType t) {
  switch (t) {
    case VertexType::In: return 0;
    case VertexType::Out: return 1;
    case VertexType::Zero: return 2;
  }
  return 2;
}

const SupportTable& support_table(int a, int b) {
  static std::map<std::pair<int, int>, SupportTable> cache;
  auto key = std::make_pair(a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int E = 2 * a * b;
  if (E > 24)
    throw OverBudget("correct-graph enumeration over " + std::to_string(E) +
                     " arcs is over budget");
  // Arc e < a*b: v_i -> w_j with i = e / b, j = e % b (0-indexed).
  // Arc e >= a*b: w_j -> v_i with i = (e - a*b) / b, j = (e - a*b) % b.
  auto vw = [&](int i, int j) { return i * b + j; };
  auto wv = [&](int i, int j) { return a * b + i * b + j; };
  std::vector<uint32_t> conflict(E, 0);
  auto forbid = [&](int e1, int e2) {
    conflict[e1] |= 1u << e2;
    conflict[e2] |= 1u << e1;
  };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      // (1): the 2-cycle v_i <-> w_j.
      forbid(vw(i, j), wv(i, j));
      // (2): v_i -> w_j -> v_i' transit through w_j, j >= 2 (1-indexed).
      if (j >= 1)
        for (int i2 = 0; i2 < a; ++i2)
          if (i2 != i) forbid(vw(i, j), wv(i2, j));
    }
  // (3): w_j -> v_i -> w_j' ... transit through v with 1-indexed v index >= 2.
  for (int i = 1; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int j2 = 0; j2 < b; ++j2)
        if (j2 != j) forbid(wv(i, j), vw(i, j2));
  // (4)/(5): inversions among same-direction arcs.
  for (int i = 0; i < a; ++i)
    for (int i2 = 0; i2 < i; ++i2)
      for (int j = 0; j < b; ++j)
        for (int j2 = j + 1; j2 < b; ++j2) {
          forbid(vw(i, j), vw(i2, j2));
          forbid(wv(i, j), wv(i2, j2));
        }

  SupportTable table;
  table.typed.resize(E + 1);
  table.total.assign(E + 1, BigInt(0));
  const uint32_t limit = 1u << E;
  for (uint32_t s = 0; s < limit; ++s) {
    bool ok = true;
    for (uint32_t rest = s; rest && ok;) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      if (s & conflict[e]) ok = false;
    }
    if (!ok) continue;
    int size = std::popcount(s);
    table.total[size] += 1;
    if (b >= 3) {
      auto vertex_type = [&](int j) {
        bool in = false, out = false;
        for (int i = 0; i < a; ++i) {
          if (s & (1u << vw(i, j))) in = true;
          if (s & (1u << wv(i, j))) out = true;
        }
        if (in && out)
          throw InternalError("mixed vertex type outside w_1 in a valid support");
        return in ? VertexType::In : out ? VertexType::Out : VertexType::Zero;
      };
      table.typed[size][type_index(vertex_type(2))][type_index(vertex_type(1))] += 1;
    }
  }
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

BigInt count_correct_graphs(const CorrectGraphQuery& q) {
  if (q.a < 1 || q.b < 1 || q.k < 0)
    throw ParamError("correct-graph query needs a, b >= 1 and k >= 0");
  if (q.typed && q.b < 3)
    throw ParamError("typed correct-graph query needs b >= 3");
  const SupportTable& table = support_table(q.a, q.b);
  if (q.k == 0) {
    if (!q.typed) return 1;
    auto [t3, t2] = *q.typed;
    return (t3 == VertexType::Zero && t2 == VertexType::Zero) ? 1 : 0;
  }
  BigInt sum = 0;
  for (size_t s = 1; s < table.total.size() && static_cast<long>(s) <= q.k; ++s) {
    const BigInt& supports =
        q.typed ? table.typed[s][type_index(q.typed->first)][type_index(q.typed->second)]
                : table.total[s];
    if (supports == 0) continue;
    sum += supports * binomial(q.k - 1, static_cast<unsigned>(s - 1));
  }
  return sum;
}

BigInt correct_graph_count(int a, int b, long k) {
  return count_correct_graphs({a, b, k, std::nullopt});
}

bool verify_corollary_counts(int a, int b, long k_max) {
  int lo = std::min(a, b), hi = std::max(a, b);
  if (lo > 3) throw ParamError("no closed form available for parts both > 3");
  FamilyId id{FamilyId::Tag::K1n};
  if (lo == 1) {
    id = {FamilyId::Tag::K1n, hi};
  } else if (lo == 2) {
    id = {FamilyId::Tag::K2n, hi};
  } else {
    if (hi < 2) throw ParamError("k3n closed form needs n >= 2");
    id = {FamilyId::Tag::K3n, hi};
  }
  Polynomial h = family_polynomial(id);
  BigInt cumulative = 0;
  for (long k = 0; k <= k_max; ++k) {
    cumulative += correct_graph_count(a, b, k);
    Rational expected = h(Rational(k));
    if (Rational(cumulative) != expected) return false;
  }
  return true;
}

}  // namespace ehrlace
