#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Exact rational with 64-bit numerator and positive denominator, always reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw InputError("rational with zero denominator");
    normalize();
  }

  /// Accepts "12", "-3.25", "7/4".
  static Rational parse(const std::string& text) {
    auto fail = [&]() -> Rational { throw InputError("malformed rational '" + text + "'"); };
    if (text.empty()) return fail();
    if (auto slash = text.find('/'); slash != std::string::npos) {
      return Rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_integer(text, text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto decimals = text.size() - dot - 1;
    if (decimals == 0 || decimals > 15) return fail();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < decimals; ++i) den *= 10;
    if (digits == "-" || digits == "+" || digits.empty()) return fail();
    return Rational(parse_integer(digits, text), den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator/(const Rational& a, std::int64_t k) {
    return from_wide(static_cast<__int128>(a.num_), static_cast<__int128>(a.den_) * k);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static std::int64_t parse_integer(const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("malformed rational '" + whole + "'");
    }
    if (used != s.size()) throw InputError("malformed rational '" + whole + "'");
    return value;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct Interval {
  Rational left;
  Rational right;
};

/// One closed interval per vertex; endpoints must be pairwise distinct and every interval
/// must have positive length.
struct IntervalRepresentation {
  std::vector<Interval> intervals;

  int size() const { return static_cast<int>(intervals.size()); }

  /// Throws InputError for zero-length/reversed intervals or coincident endpoints.
  void check_endpoints() const {
    std::vector<std::pair<Rational, int>> points;
    for (int v = 0; v < size(); ++v) {
      if (!(intervals[v].left < intervals[v].right)) {
        throw InputError("interval of vertex " + std::to_string(v) + " must satisfy l < r");
      }
      points.emplace_back(intervals[v].left, v);
      points.emplace_back(intervals[v].right, v);
    }
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i].first == points[i - 1].first) {
        throw InputError("coincident endpoint " + points[i].first.to_string() + " (vertices " +
                         std::to_string(points[i - 1].second) + ", " + std::to_string(points[i].second) +
                         "); perturb endpoints by rank to make them distinct");
      }
    }
  }

  bool intersects(Vertex u, Vertex v) const {
    return !(intervals[u].right < intervals[v].left || intervals[v].right < intervals[u].left);
  }

  Graph intersection_graph() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v = u + 1; v < size(); ++v)
        if (intersects(u, v)) edges.emplace_back(u, v);
    return Graph(size(), std::move(edges));
  }

  IntervalRepresentation restricted_to(const VertexSet& keep) const {
    IntervalRepresentation out;
    for (Vertex v : keep) out.intervals.push_back(intervals.at(v));
    return out;
  }
};

/// True iff rep has valid distinct endpoints and its intersection graph is exactly g.
inline bool validate_representation(const Graph& g, const IntervalRepresentation& rep) {
  if (rep.size() != g.vertex_count()) return false;
  try {
    rep.check_endpoints();
  } catch (const InputError&) {
    return false;
  }
  return rep.intersection_graph() == g;
}

/// Distinct endpoints x_0 < … < x_l, sample points y_i = (x_i + x_{i+1})/2 and the slices
/// V_i = {v : y_i ∈ I_v}. Indices are 0-based.
struct SliceSequence {
  std::vector<Rational> endpoints;
  std::vector<Rational> samples;
  std::vector<VertexSet> slices;

  int length() const { return static_cast<int>(slices.size()); }

  /// Vertex set of G[a,b] = V_a ∪ … ∪ V_b.
  VertexSet range_vertices(int a, int b) const {
    std::vector<Vertex> out;
    for (int i = a; i <= b; ++i) out.insert(out.end(), slices.at(i).begin(), slices.at(i).end());
    return VertexSet(std::move(out));
  }
};

inline SliceSequence slice_sequence(const IntervalRepresentation& rep) {
  rep.check_endpoints();
  SliceSequence sl;
  for (const auto& iv : rep.intervals) {
    sl.endpoints.push_back(iv.left);
    sl.endpoints.push_back(iv.right);
  }
  std::sort(sl.endpoints.begin(), sl.endpoints.end());
  for (std::size_t i = 0; i + 1 < sl.endpoints.size(); ++i) {
    const Rational y = (sl.endpoints[i] + sl.endpoints[i + 1]) / 2;
    sl.samples.push_back(y);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < rep.size(); ++v)
      if (rep.intervals[v].left < y && y < rep.intervals[v].right) members.push_back(v);
    sl.slices.emplace_back(std::move(members));
  }
  return sl;
}

/// Indices i whose sample point is a cut-point: some interval lies strictly left of y_i and
/// some strictly right. Each such V_i is a cut-set.
inline std::vector<int> cut_point_slices(const IntervalRepresentation& rep, const SliceSequence& sl) {
  std::vector<int> out;
  for (int i = 0; i < sl.length(); ++i) {
    const Rational& y = sl.samples[i];
    bool left = false, right = false;
    for (const auto& iv : rep.intervals) {
      left = left || iv.right < y;
      right = right || y < iv.left;
    }
    if (left && right) out.push_back(i);
  }
  return out;
}

/// Cut-point slices that are inclusion-minimal among all cut-point slices; their distinct
/// vertex sets are exactly the minimal cut-sets of the (connected) graph.
inline std::vector<int> minimal_cutset_slices(const IntervalRepresentation& rep, const SliceSequence& sl) {
  const auto cuts = cut_point_slices(rep, sl);
  std::vector<int> out;
  for (int i : cuts) {
    bool minimal = true;
    for (int j : cuts) {
      if (sl.slices[j] != sl.slices[i] && sl.slices[j].is_subset_of(sl.slices[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

/// Minimum dominating set of G[a,b] drawn from G[a,b]: repeatedly take the undominated vertex
/// with the smallest right endpoint and add its closed neighbour reaching furthest right.
inline VertexSet domination_greedy_interval(const IntervalRepresentation& rep, const SliceSequence& sl, int a, int b) {
  if (a < 0 || b >= sl.length() || a > b) throw InputError("domination_greedy_interval: bad slice range");
  const VertexSet members = sl.range_vertices(a, b);
  std::vector<Vertex> by_right(members.begin(), members.end());
  std::sort(by_right.begin(), by_right.end(),
            [&](Vertex u, Vertex v) { return rep.intervals[u].right < rep.intervals[v].right; });
  std::vector<char> dominated(rep.size(), 0);
  std::vector<Vertex> chosen;
  for (Vertex u : by_right) {
    if (dominated[u]) continue;
    Vertex best = u;
    for (Vertex w : members)
      if (rep.intersects(u, w) && rep.intervals[best].right < rep.intervals[w].right) best = w;
    chosen.push_back(best);
    for (Vertex w : members)
      if (rep.intersects(best, w)) dominated[w] = 1;
  }
  return VertexSet(std::move(chosen));
}

/// Wideness data for one interval subgraph G[a,b].
struct WideCertificate {
  int a = 0;
  int b = 0;
  int wideness = 0;
  int connectivity = 0;
  int domination = 0;
  VertexSet vertices;
  VertexSet dominating_set;
  /// Smallest cut slice of G[a,b] (empty when G[a,b] is complete).
  VertexSet smallest_cut;
};

/// Largest M such that G[a,b] is M-wide: max(1, min(κ, γ)) with κ from the subgraph's own
/// cut-point slices (|H|−1 when complete) and γ from the greedy.
inline WideCertificate interval_subgraph_wideness(const IntervalRepresentation& rep, const SliceSequence& sl, int a, int b) {
  WideCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.vertices = sl.range_vertices(a, b);
  const auto sub_rep = rep.restricted_to(cert.vertices);
  const auto sub_sl = slice_sequence(sub_rep);
  const auto cuts = cut_point_slices(sub_rep, sub_sl);
  if (cuts.empty()) {
    cert.connectivity = static_cast<int>(cert.vertices.size()) - 1;
  } else {
    int best = cuts.front();
    for (int i : cuts)
      if (sub_sl.slices[i].size() < sub_sl.slices[best].size()) best = i;
    cert.connectivity = static_cast<int>(sub_sl.slices[best].size());
    std::vector<Vertex> cut;
    for (Vertex local : sub_sl.slices[best]) cut.push_back(cert.vertices[local]);
    cert.smallest_cut = VertexSet(std::move(cut));
  }
  cert.dominating_set = domination_greedy_interval(rep, sl, a, b);
  cert.domination = static_cast<int>(cert.dominating_set.size());
  cert.wideness = std::max(1, std::min(cert.connectivity, cert.domination));
  return cert;
}

inline void require_connected_representation(const Graph& g, const IntervalRepresentation& rep, const char* who) {
  if (!validate_representation(g, rep)) throw InputError(std::string(who) + ": representation does not match the graph");
  if (!is_connected(g)) throw InputError(std::string(who) + ": graph must be connected");
}

struct WResult {
  int w = 0;
  WideCertificate certificate;
};

/// w(G): the largest wideness over all interval subgraphs G[a,b]. Ties resolve to the
/// lexicographically largest (M, a, b).
inline WResult compute_w(const Graph& g, const IntervalRepresentation& rep) {
  require_connected_representation(g, rep, "compute_w");
  const auto sl = slice_sequence(rep);
  WResult out;
  bool first = true;
  for (int a = 0; a < sl.length(); ++a) {
    for (int b = a; b < sl.length(); ++b) {
      auto cert = interval_subgraph_wideness(rep, sl, a, b);
      if (first || cert.wideness >= out.w) {
        out.w = cert.wideness;
        out.certificate = std::move(cert);
        first = false;
      }
    }
  }
  return out;
}

struct ApproximationResult {
  int lower = 0;
  int upper = 0;
  WideCertificate certificate;
};

/// (w, 3w): w(G) ≤ c∞(G) ≤ 3·w(G) for connected interval graphs.
inline ApproximationResult three_approx_cop_number(const Graph& g, const IntervalRepresentation& rep) {
  auto w = compute_w(g, rep);
  return {w.w, 3 * w.w, std::move(w.certificate)};
}

/// w(G) ≤ √(5n) + 3.
inline bool sqrt_bound_check(const Graph& g, const IntervalRepresentation& rep) {
  const auto w = compute_w(g, rep).w;
  return static_cast<double>(w) <= std::sqrt(5.0 * g.vertex_count()) + 3.0;
}

}  // namespace copsrobber
