#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/errors.hpp"
#include "powergraph/graphs.hpp"
#include "powergraph/groups.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/transforms.hpp"

namespace powergraph {

namespace detail {

inline std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

inline bool divides(std::int64_t a, std::int64_t b) { return a != 0 && b % a == 0; }

// Positive divisors of |v|, ascending.
inline std::vector<std::int64_t> positive_divisors(std::int64_t v) {
  v = abs64(v);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d != v / d) out.push_back(v / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All pairs (n, u) with u^n = y, complete for the cases in which the
// enumeration below is finite.  For rational subgroups the prime p may get
// a wider exponent range than the membership caps alone would give; the
// caller passes the cutoff via p_cap.
inline std::vector<std::pair<std::int64_t, Element>> root_candidates(const GroupHandle& g,
                                                                     const Element& y,
                                                                     std::int64_t p = 0,
                                                                     int p_cap = 0) {
  std::vector<std::pair<std::int64_t, Element>> out;
  switch (g.family()) {
    case Family::IntegersZ: {
      std::int64_t b = std::get<std::int64_t>(y);
      for (std::int64_t d : positive_divisors(b))
        for (std::int64_t n : {d, -d}) out.emplace_back(n, Element(b / n));
      break;
    }
    case Family::RationalSubgroup: {
      const Rational& q = std::get<Rational>(y);
      const HeightFunction& h = g.heights();
      // Prime support of admissible n: primes of the numerator plus primes
      // with positive height; default height 0 keeps this finite.
      std::map<std::int64_t, int> caps;
      for (std::int64_t r : prime_factors(q.num())) {
        HeightFunction::Height hr = h.height(r);
        int vy = valuation(q.num(), r);
        caps[r] = hr ? vy + *hr : vy;  // infinite-height primes widened below
      }
      for (std::int64_t r : prime_factors(q.den())) {
        HeightFunction::Height hr = h.height(r);
        if (!hr) continue;
        caps[r] = *hr - valuation(q.den(), r);
      }
      for (const auto& [r, hr] : h.exceptions()) {
        if (caps.count(r)) continue;
        if (hr && *hr >= 1) caps[r] = *hr;
      }
      if (p != 0) {
        int extra = caps.count(p) ? caps[p] : 0;
        caps[p] = std::max(extra, p_cap);
      }
      std::vector<std::pair<std::int64_t, int>> caplist(caps.begin(), caps.end());
      std::vector<std::int64_t> ns{1};
      for (const auto& [r, cap] : caplist) {
        std::vector<std::int64_t> next;
        for (std::int64_t base : ns) {
          std::int64_t v = base;
          for (int e = 0; e <= cap; ++e) {
            next.push_back(v);
            if (e < cap) {
              if (v > (std::int64_t)1 << 40) throw PreconditionFailed("divisor enumeration overflow");
              v *= r;
            }
          }
        }
        ns = std::move(next);
      }
      std::sort(ns.begin(), ns.end());
      ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
      for (std::int64_t n : ns)
        for (std::int64_t s : {n, -n}) {
          Rational u = q / Rational(s);
          if (g.contains(u)) out.emplace_back(s, Element(u));
        }
      break;
    }
    case Family::HeisenbergZ: {
      const HTriple& t = std::get<HTriple>(y);
      std::int64_t d = (t.a == 0 && t.b == 0) ? abs64(t.c) : std::gcd(abs64(t.a), abs64(t.b));
      for (std::int64_t dv : positive_divisors(d))
        for (std::int64_t n : {dv, -dv}) {
          if (t.a % n != 0 || t.b % n != 0) continue;
          std::int64_t alpha = t.a / n, beta = t.b / n;
          std::int64_t rest = t.c - n * (n - 1) / 2 * alpha * beta;
          if (rest % n != 0) continue;
          Element u = HTriple{alpha, beta, rest / n};
          if (g.power(u, n) == Element(t)) out.emplace_back(n, u);
        }
      break;
    }
    default:
      throw UnsupportedFamily("root enumeration is provided for the infinite families");
  }
  return out;
}

}  // namespace detail

// Is S(x,y), the set of closed neighbors of y that are not closed neighbors
// of x, finite?  Decided symbolically.  For an arc x -> y (y = x^q) the set
// consists of the roots of y along exponents incomparable with q under
// divisibility; in all other positions the set is infinite.
inline bool s_set_is_finite(const GroupHandle& g, const Element& x, const Element& y) {
  if (g.family() == Family::FiniteCayley)
    throw UnsupportedFamily("s-set finiteness is provided for the infinite families");
  if (x == g.identity() || y == g.identity())
    throw PreconditionFailed("s-set finiteness expects nonidentity elements");
  if (y == x || y == g.inverse(x))
    throw PreconditionFailed("s-set finiteness expects y outside {x, x^{-1}}");

  ExponentSet forward = g.solve_power_of(y, x);  // y = x^q
  if (!forward.has_nonzero()) return false;
  switch (g.family()) {
    case Family::IntegersZ:
    case Family::HeisenbergZ:
      return true;
    case Family::RationalSubgroup: {
      const HeightFunction& h = g.heights();
      if (!h.default_height() || *h.default_height() != 0) return false;
      std::vector<std::int64_t> inf = h.infinite_exception_primes();
      if (inf.empty()) return true;
      if (inf.size() > 1) return false;
      // One inverted prime p: finite exactly when the exponent is a signed
      // power of p, so that the p-power ladder stays comparable with it.
      std::int64_t q = *forward.unique();
      std::int64_t p = inf.front();
      q = detail::abs64(q);
      while (q % p == 0) q /= p;
      return q == 1;
    }
    default:
      return false;
  }
}

// S(x,y) relative to a window bundle: the window slice, the symbolic
// finiteness verdict, and the full set when finite.
struct SSetDescriptor {
  Element x, y;
  std::vector<int> window_slice;
  bool finite = false;
  std::vector<Element> exact_set;
  std::string note;
};

inline SSetDescriptor s_set(const PowerGraphBundle& b, const Element& x, const Element& y) {
  if (b.variant != Variant::Zpm)
    throw PreconditionFailed("s-sets live in the nonzero-exponent graph");
  SSetDescriptor out;
  out.x = x;
  out.y = y;

  const GroupHandle& g = b.group;
  auto in_closed = [&](const Element& u, const Element& c) {
    return u == c || directed_adjacent(g, u, c, Variant::Zpm) ||
           directed_adjacent(g, c, u, Variant::Zpm);
  };
  for (std::size_t v = 0; v < b.carrier.size(); ++v)
    if (in_closed(b.carrier[v], y) && !in_closed(b.carrier[v], x)) out.window_slice.push_back((int)v);

  out.finite = s_set_is_finite(g, x, y);
  if (!out.finite) {
    out.note = "infinite; closed neighbors of y incomparable with x grow with every window";
    return out;
  }

  std::int64_t q = *g.solve_power_of(y, x).unique();
  std::int64_t p = 0;
  int p_cap = 0;
  if (g.family() == Family::RationalSubgroup) {
    std::vector<std::int64_t> inf = g.heights().infinite_exception_primes();
    if (!inf.empty()) {
      p = inf.front();
      p_cap = valuation(q, p);
    }
  }
  for (const auto& [n, u] : detail::root_candidates(g, y, p, p_cap)) {
    if (detail::divides(q, n) || detail::divides(n, q)) continue;
    out.exact_set.push_back(u);
  }
  std::sort(out.exact_set.begin(), out.exact_set.end());
  out.exact_set.erase(std::unique(out.exact_set.begin(), out.exact_set.end()), out.exact_set.end());

  // The window slice must be exactly the part of the exact set that the
  // carrier can see.
  std::vector<Element> visible;
  for (const Element& u : out.exact_set)
    if (b.carries(u)) visible.push_back(u);
  std::vector<Element> sliced;
  for (int v : out.window_slice) sliced.push_back(b.element(v));
  std::sort(visible.begin(), visible.end());
  std::sort(sliced.begin(), sliced.end());
  if (visible != sliced)
    throw HypothesisViolated("window slice disagrees with the enumerated finite s-set");
  return out;
}

enum class GrowthVerdict { Finite, Infinite, Inconclusive };

struct GrowthProbe {
  std::array<std::size_t, 4> sizes{};
  GrowthVerdict verdict = GrowthVerdict::Inconclusive;
};

inline WindowSpec scale_window(const WindowSpec& w, std::int64_t k) {
  WindowSpec out = w;
  out.bound *= k;
  out.max_num *= k;
  out.max_den *= k;
  return out;
}

// Window-growth oracle for s-set finiteness: slice sizes at the base window
// and three doublings.  Strict growth at every doubling reads as infinite;
// stabilization from some doubling on reads as finite.
inline GrowthProbe s_set_growth_probe(const GroupHandle& g, const Element& x, const Element& y,
                                      const WindowSpec& base) {
  GrowthProbe probe;
  auto in_closed = [&](const Element& u, const Element& c) {
    return u == c || directed_adjacent(g, u, c, Variant::Zpm) ||
           directed_adjacent(g, c, u, Variant::Zpm);
  };
  for (int i = 0; i < 4; ++i) {
    WindowSpec w = scale_window(base, (std::int64_t)1 << i);
    std::size_t count = 0;
    for (const Element& u : g.window_carrier(w))
      if (in_closed(u, y) && !in_closed(u, x)) ++count;
    probe.sizes[i] = count;
  }
  bool strict = probe.sizes[0] < probe.sizes[1] && probe.sizes[1] < probe.sizes[2] &&
                probe.sizes[2] < probe.sizes[3];
  bool stabilized = false;
  for (int i = 0; i < 3 && !stabilized; ++i) {
    bool flat = true;
    for (int j = i; j < 3; ++j) flat &= probe.sizes[j] == probe.sizes[j + 1];
    stabilized = flat;
  }
  if (strict)
    probe.verdict = GrowthVerdict::Infinite;
  else if (stabilized)
    probe.verdict = GrowthVerdict::Finite;
  return probe;
}

enum class Orientation { XtoY, YtoX };

// Does every nonidentity element of g sit inside a unique maximal cyclic
// subgroup?  True for the integers and the Heisenberg group, where roots
// are unique and divisor chains terminate; a rational subgroup qualifies
// exactly when it is itself cyclic, since an infinite or unbounded height
// lets cyclic overgroups ascend forever.
inline bool unique_maximal_cyclic_hypothesis(const GroupHandle& g) {
  switch (g.family()) {
    case Family::IntegersZ:
    case Family::HeisenbergZ:
      return true;
    case Family::RationalSubgroup:
      return g.heights().is_cyclic();
    default:
      throw UnsupportedFamily("orientation recovery is provided for the infinite families");
  }
}

// Recovers the arc direction between two adjacent vertices from s-set
// finiteness alone: the finite side points away from x.
inline Orientation recover_orientation(const GroupHandle& g, const Element& x, const Element& y) {
  if (!unique_maximal_cyclic_hypothesis(g))
    throw HypothesisViolated("group has no unique maximal cyclic subgroups; s-set finiteness cannot orient edges");
  if (x == g.identity() || y == g.identity())
    throw PreconditionFailed("orientation recovery expects nonidentity elements");
  bool adj = directed_adjacent(g, x, y, Variant::Zpm) || directed_adjacent(g, y, x, Variant::Zpm);
  if (!adj) throw NotAdjacent("elements are not adjacent in the nonzero-exponent graph");
  if (y == g.inverse(x))
    throw HypothesisViolated("inverse pairs carry arcs both ways; no orientation to recover");
  bool fxy = s_set_is_finite(g, x, y);
  bool fyx = s_set_is_finite(g, y, x);
  if (fxy && !fyx) return Orientation::XtoY;
  if (fyx && !fxy) return Orientation::YtoX;
  throw HypothesisViolated("s-set finiteness does not separate the pair");
}

// Window slices of the predecessor and successor sets of z, with the
// inverse excluded, together with the complement-component fact that makes
// the successor slice recognizable.
struct NeighborSplit {
  int z = -1;
  std::vector<int> in;   // predecessors of z, without z^{-1}
  std::vector<int> out;  // successors of z, without z^{-1}
  std::vector<int> mixed;
  bool out_is_complement_component = false;
};

inline NeighborSplit neighbor_split(const PowerGraphBundle& b, const Element& z) {
  if (b.variant != Variant::Zpm)
    throw PreconditionFailed("neighbor splits live in the nonzero-exponent graph");
  if (z == b.group.identity()) throw PreconditionFailed("neighbor split expects a nonidentity element");
  NeighborSplit out;
  out.z = b.index_of(z);
  int zi = out.z;
  int z_inv = b.index_of(b.group.inverse(z));
  for (int v : b.digraph.in_neighbors(zi))
    if (v != z_inv) out.in.push_back(v);
  for (int v : b.digraph.out_neighbors(zi))
    if (v != z_inv) out.out.push_back(v);
  std::vector<int> m;
  std::set_union(out.in.begin(), out.in.end(), out.out.begin(), out.out.end(), std::back_inserter(m));
  out.mixed = m;

  if (!out.out.empty()) {
    SimpleGraph mgraph = complement(induced(b.graph, out.mixed));
    auto comps = connected_components(mgraph);
    std::vector<std::string> out_labels;
    for (int v : out.out) out_labels.push_back(b.graph.label(v));
    std::sort(out_labels.begin(), out_labels.end());
    for (const auto& comp : comps) {
      std::vector<std::string> labels;
      for (int v : comp) labels.push_back(mgraph.label(v));
      std::sort(labels.begin(), labels.end());
      if (labels == out_labels) {
        out.out_is_complement_component = true;
        break;
      }
    }
  }
  return out;
}

// The reciprocal map x |-> a^2/x on the rationals (0 fixed).
inline Rational phi_a(const Rational& a, const Rational& x) {
  if (a.is_zero()) throw PreconditionFailed("phi_a needs a nonzero parameter");
  if (x.is_zero()) return Rational(0);
  return (a * a) / x;
}

// Smallest superset of a window carrier closed under phi_a; the closure of
// an inversion-closed set is again inversion-closed since the map commutes
// with negation.
inline std::vector<Element> phi_a_closed_carrier(const GroupHandle& g, const Rational& a,
                                                 const WindowSpec& base) {
  if (g.family() != Family::RationalSubgroup)
    throw UnsupportedFamily("phi_a closures are provided for rational subgroups");
  std::vector<Element> carrier = g.window_carrier(base);
  std::map<Element, bool> seen;
  for (const Element& x : carrier) seen.emplace(x, true);
  // Seed a and -a so the closure stays inversion-closed.
  for (const Rational& s : {a, -a}) {
    if (seen.count(Element(s))) continue;
    if (!g.contains(Element(s))) throw ElementNotInGroup("phi_a parameter outside subgroup");
    carrier.push_back(Element(s));
    seen.emplace(Element(s), true);
  }
  std::size_t base_size = carrier.size();
  for (std::size_t i = 0; i < base_size; ++i) {
    const Rational& x = std::get<Rational>(carrier[i]);
    if (x.is_zero()) continue;
    Rational img = phi_a(a, x);
    if (!g.contains(Element(img)))
      throw ElementNotInGroup("phi_a image " + img.str() + " leaves the subgroup");
    if (seen.emplace(Element(img), true).second) carrier.push_back(Element(img));
  }
  return carrier;
}

// Window verification of phi_a on a closed carrier: adjacency preserved,
// every arc reversed, involution, and the predecessor slice of a carried
// onto the successor slice of a.
struct PhiAReport {
  bool involution = false;
  bool adjacency_preserved = false;
  bool arcs_reversed = false;
  bool in_slice_maps_onto_out_slice = false;
  bool all() const {
    return involution && adjacency_preserved && arcs_reversed && in_slice_maps_onto_out_slice;
  }
};

inline PhiAReport verify_phi_a(const PowerGraphBundle& b, const Rational& a) {
  if (b.group.family() != Family::RationalSubgroup)
    throw UnsupportedFamily("phi_a verification is provided for rational subgroups");
  if (b.variant != Variant::Zpm)
    throw PreconditionFailed("phi_a verification works on the nonzero-exponent graph");
  int n = (int)b.carrier.size();
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) {
    Rational x = std::get<Rational>(b.element(v));
    img[v] = b.index_of(Element(phi_a(a, x)));  // UnknownVertex if not closed
  }
  PhiAReport rep;
  rep.involution = true;
  for (int v = 0; v < n; ++v) rep.involution &= img[img[v]] == v;

  rep.adjacency_preserved = true;
  for (int u = 0; u < n && rep.adjacency_preserved; ++u)
    for (int v = u + 1; v < n; ++v)
      if (b.graph.adjacent(u, v) != b.graph.adjacent(img[u], img[v])) {
        rep.adjacency_preserved = false;
        break;
      }

  rep.arcs_reversed = true;
  for (const auto& [u, v] : b.digraph.arcs())
    rep.arcs_reversed &= b.digraph.has_arc(img[v], img[u]);

  NeighborSplit split = neighbor_split(b, Element(a));
  std::vector<int> in_image;
  for (int v : split.in) in_image.push_back(img[v]);
  std::sort(in_image.begin(), in_image.end());
  rep.in_slice_maps_onto_out_slice = in_image == split.out;
  return rep;
}

// Divisibility preorder on the out- or in-neighbor classes of the base
// element 1 in a rational subgroup.  Out classes are {n,-n}; in classes are
// {1/n,-1/n} for the n present in the subgroup.  Minimal classes sit at the
// primes; a minimal class starts an infinite ascending chain exactly when
// the corresponding prime ladder stays in the subgroup.
struct NeighborPreorder {
  enum class Side { Out, In };

  // All primes, or all primes outside `primes`, or exactly `primes`.
  struct PrimeSet {
    bool cofinite = false;
    std::vector<std::int64_t> primes;
    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  };

  Side side = Side::Out;
  std::vector<std::int64_t> class_reps;  // n with {±n} (out) or {±1/n} (in) a class, n <= slice bound
  PrimeSet minimal_classes;
  bool chains_all_infinite = false;
  std::optional<std::int64_t> failing_prime;

  // Class {±m} (out) or {±1/m} (in) precedes class {±n} resp. {±1/n}:
  // multiplication by n/m moves within the group on both sides, so the
  // order is divisibility of representatives either way.
  static bool precedes(std::int64_t m, std::int64_t n) { return n % m == 0; }
};

inline NeighborPreorder neighbor_preorder(const GroupHandle& g, NeighborPreorder::Side side,
                                          std::int64_t slice_bound = 16) {
  if (g.family() != Family::RationalSubgroup)
    throw UnsupportedFamily("neighbor preorders are provided for rational subgroups");
  const HeightFunction& h = g.heights();
  NeighborPreorder out;
  out.side = side;

  if (side == NeighborPreorder::Side::Out) {
    for (std::int64_t n = 2; n <= slice_bound; ++n) out.class_reps.push_back(n);
    out.minimal_classes.cofinite = true;  // every prime
    out.chains_all_infinite = true;       // p, p^2, p^3, ... are all multiples of 1
    return out;
  }

  for (std::int64_t n = 2; n <= slice_bound; ++n)
    if (h.contains(Rational(1, n))) out.class_reps.push_back(n);

  // Minimal classes: primes p with 1/p in the subgroup.
  HeightFunction::Height dh = h.default_height();
  if (!dh || *dh >= 1) {
    out.minimal_classes.cofinite = true;
    for (const auto& [p, hp] : h.exceptions())
      if (hp && *hp == 0) out.minimal_classes.primes.push_back(p);
  } else {
    for (const auto& [p, hp] : h.exceptions())
      if (!hp || *hp >= 1) out.minimal_classes.primes.push_back(p);
  }

  // Chains: the ladder 1/p, 1/p^2, ... stays in the subgroup iff h(p) = inf.
  out.chains_all_infinite = true;
  if (out.minimal_classes.cofinite) {
    if (dh) {
      // Finite default height: almost every minimal prime has a finite
      // ladder.  Find the smallest.
      for (std::int64_t p = 2; out.chains_all_infinite; ++p) {
        if (!is_prime(p)) continue;
        HeightFunction::Height hp = h.height(p);
        if (hp && *hp >= 1) {
          out.chains_all_infinite = false;
          out.failing_prime = p;
        }
        if (!h.exceptions().count(p)) {
          // Default applies from here on; heights repeat.
          if (*dh >= 1) {
            out.chains_all_infinite = false;
            out.failing_prime = out.failing_prime ? std::min(*out.failing_prime, p) : p;
          }
          break;
        }
      }
    } else {
      for (const auto& [p, hp] : h.exceptions())
        if (hp && *hp >= 1 && out.chains_all_infinite) {
          out.chains_all_infinite = false;
          out.failing_prime = p;
        }
    }
  } else {
    for (std::int64_t p : out.minimal_classes.primes) {
      HeightFunction::Height hp = h.height(p);
      if (hp && out.chains_all_infinite) {
        out.chains_all_infinite = false;
        out.failing_prime = p;
      }
    }
  }
  return out;
}

// The in- and out-preorders at 1 have the same shape exactly for the full
// group of rationals: minimal classes at every prime, all of them opening
// infinite ascending chains.
inline bool is_rationals_by_neighbor_symmetry(const GroupHandle& g, std::int64_t slice_bound = 16) {
  NeighborPreorder o = neighbor_preorder(g, NeighborPreorder::Side::Out, slice_bound);
  NeighborPreorder i = neighbor_preorder(g, NeighborPreorder::Side::In, slice_bound);
  if (o.class_reps != i.class_reps) return false;
  if (!(o.minimal_classes == i.minimal_classes)) return false;
  return o.chains_all_infinite && i.chains_all_infinite;
}

// Transfer of a nonzero-exponent graph isomorphism to the directed graphs,
// component by component: every one-way arc inside the component must map
// to an arc the same way (isomorphism) or every one to a reversed arc
// (anti-isomorphism).  Inverse pairs carry arcs both ways and are neutral.
struct TransferReport {
  enum class Verdict { Iso, AntiIso };
  std::optional<Verdict> verdict;
  std::size_t preserved = 0;
  std::size_t reversed = 0;
  bool io_slices_match = false;
  std::optional<std::pair<std::string, std::string>> offending;
  bool clean() const { return verdict.has_value(); }
};

inline TransferReport check_directed_transfer(const PowerGraphBundle& g_pm,
                                              const PowerGraphBundle& h_pm,
                                              const std::vector<int>& phi,
                                              const std::vector<int>& component) {
  if (g_pm.variant != Variant::Zpm || h_pm.variant != Variant::Zpm)
    throw PreconditionFailed("directed transfer works on nonzero-exponent bundles");
  if (!g_pm.group.torsion_free() || !nilpotency_class_at_most_2(g_pm.group))
    throw PreconditionFailed("directed transfer expects a torsion-free group of nilpotency class at most 2");
  if (!is_isomorphism(g_pm.graph, h_pm.graph, phi))
    throw NotAnIsomorphism("map is not an isomorphism of the nonzero-exponent graphs");

  TransferReport rep;
  auto inverse_index = [](const PowerGraphBundle& b, int v) {
    return b.index_of(b.group.inverse(b.element(v)));
  };
  for (int u : component)
    for (int v : component) {
      if (u == v) continue;
      if (!g_pm.digraph.has_arc(u, v)) continue;
      if (g_pm.digraph.has_arc(v, u)) continue;  // inverse pair, neutral
      bool fwd = h_pm.digraph.has_arc(phi[u], phi[v]);
      bool bwd = h_pm.digraph.has_arc(phi[v], phi[u]);
      if (fwd == bwd) {
        rep.offending = {g_pm.graph.label(u), g_pm.graph.label(v)};
        return rep;
      }
      if (fwd)
        ++rep.preserved;
      else
        ++rep.reversed;
    }
  if (rep.preserved > 0 && rep.reversed > 0) {
    rep.offending = {g_pm.graph.label(component.front()), g_pm.graph.label(component.back())};
    return rep;
  }
  rep.verdict = rep.reversed > 0 ? TransferReport::Verdict::AntiIso : TransferReport::Verdict::Iso;

  // Window-exact side condition: the image of each vertex's in/out slice is
  // the in/out (or out/in, for anti-isomorphisms) slice of the image.
  rep.io_slices_match = true;
  for (int z : component) {
    std::vector<int> in_g, out_g;
    int z_inv = inverse_index(g_pm, z);
    for (int v : g_pm.digraph.in_neighbors(z))
      if (v != z_inv) in_g.push_back(phi[v]);
    for (int v : g_pm.digraph.out_neighbors(z))
      if (v != z_inv) out_g.push_back(phi[v]);
    std::sort(in_g.begin(), in_g.end());
    std::sort(out_g.begin(), out_g.end());

    int w = phi[z];
    std::vector<int> in_h, out_h;
    int w_inv = inverse_index(h_pm, w);
    for (int v : h_pm.digraph.in_neighbors(w))
      if (v != w_inv) in_h.push_back(v);
    for (int v : h_pm.digraph.out_neighbors(w))
      if (v != w_inv) out_h.push_back(v);
    std::sort(in_h.begin(), in_h.end());
    std::sort(out_h.begin(), out_h.end());

    bool ok = rep.verdict == TransferReport::Verdict::Iso ? (in_g == in_h && out_g == out_h)
                                                          : (in_g == out_h && out_g == in_h);
    if (!ok) {
      rep.io_slices_match = false;
      rep.offending = {g_pm.graph.label(z), h_pm.graph.label(w)};
      return rep;
    }
  }
  return rep;
}

// Bounded check that a window component is locally cyclic: every pair of
// its elements is generated by a common element found within the bound.
inline bool locally_cyclic_component_check(const PowerGraphBundle& b,
                                           const std::vector<int>& component, std::int64_t bound) {
  for (std::size_t i = 0; i < component.size(); ++i)
    for (std::size_t j = i + 1; j < component.size(); ++j) {
      const Element& x = b.element(component[i]);
      const Element& y = b.element(component[j]);
      if (x == b.group.identity() || y == b.group.identity()) continue;
      if (!local_cyclicity_witness(b.group, x, y, bound)) return false;
    }
  return true;
}

}  // namespace powergraph
