#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "powergraph/errors.hpp"
#include "powergraph/rational.hpp"

namespace powergraph {

// Solution set {n in Z : x^n = y} of a power equation.  For the families
// handled here it is always empty, a single integer, all of Z, or a full
// residue class modulo the order of x.
class ExponentSet {
 public:
  enum class Kind { Empty, All, Single, Residue };

  static ExponentSet empty_set() { return ExponentSet(Kind::Empty, 0, 0); }
  static ExponentSet all_integers() { return ExponentSet(Kind::All, 0, 0); }
  static ExponentSet single(std::int64_t n) { return ExponentSet(Kind::Single, n, 0); }

  // {rep + k*modulus : k in Z}, modulus >= 1.
  static ExponentSet residue(std::int64_t rep, std::int64_t modulus) {
    if (modulus < 1) throw PreconditionFailed("residue class needs modulus >= 1");
    rep %= modulus;
    if (rep < 0) rep += modulus;
    return ExponentSet(Kind::Residue, rep, modulus);
  }

  Kind kind() const { return kind_; }
  bool empty() const { return kind_ == Kind::Empty; }

  bool contains(std::int64_t n) const {
    switch (kind_) {
      case Kind::Empty: return false;
      case Kind::All: return true;
      case Kind::Single: return n == value_;
      case Kind::Residue: {
        std::int64_t r = (n - value_) % modulus_;
        return r == 0;
      }
    }
    return false;
  }

  // Is there a solution n != 0?
  bool has_nonzero() const {
    switch (kind_) {
      case Kind::Empty: return false;
      case Kind::All: return true;
      case Kind::Single: return value_ != 0;
      case Kind::Residue: return true;
    }
    return false;
  }

  // Is there a solution n >= 1?  (Residue classes are unbounded above.)
  bool has_positive() const {
    switch (kind_) {
      case Kind::Empty: return false;
      case Kind::All: return true;
      case Kind::Single: return value_ >= 1;
      case Kind::Residue: return true;
    }
    return false;
  }

  // Defined for Single; the unique solution.
  std::optional<std::int64_t> unique() const {
    if (kind_ == Kind::Single) return value_;
    return std::nullopt;
  }

  std::int64_t residue_rep() const { return value_; }
  std::int64_t residue_modulus() const { return modulus_; }

 private:
  ExponentSet(Kind k, std::int64_t v, std::int64_t m) : kind_(k), value_(v), modulus_(m) {}
  Kind kind_;
  std::int64_t value_;
  std::int64_t modulus_;
};

// Height function describing a subgroup of (Q, +) containing 1: a rational
// q belongs to the subgroup iff v_p(q) >= -h(p) for every prime p.  Heights
// live in {0, 1, 2, ...} u {inf}; nullopt encodes inf.  A default height
// applies to every prime not listed among the exceptions.
class HeightFunction {
 public:
  using Height = std::optional<int>;  // nullopt = infinity

  HeightFunction() : default_height_(Height{0}) {}

  HeightFunction(Height default_height, std::map<std::int64_t, Height> exceptions)
      : default_height_(default_height), exceptions_(std::move(exceptions)) {
    for (const auto& [p, h] : exceptions_) {
      if (!is_prime(p)) throw PreconditionFailed("height exception key " + std::to_string(p) + " is not prime");
      if (h && *h < 0) throw PreconditionFailed("negative height for prime " + std::to_string(p));
    }
    if (default_height_ && *default_height_ < 0) throw PreconditionFailed("negative default height");
  }

  static HeightFunction integers() { return HeightFunction(Height{0}, {}); }
  static HeightFunction all_of_q() { return HeightFunction(std::nullopt, {}); }

  // Z[1/p]: inverting a single prime.
  static HeightFunction inverted_prime(std::int64_t p) {
    return HeightFunction(Height{0}, {{p, std::nullopt}});
  }

  Height height(std::int64_t p) const {
    auto it = exceptions_.find(p);
    if (it != exceptions_.end()) return it->second;
    return default_height_;
  }

  Height default_height() const { return default_height_; }
  const std::map<std::int64_t, Height>& exceptions() const { return exceptions_; }

  bool contains(const Rational& q) const {
    if (q.is_zero()) return true;
    std::int64_t d = q.den();
    for (std::int64_t p : prime_factors(d)) {
      Height h = height(p);
      if (!h) continue;
      if (valuation(d, p) > *h) return false;
    }
    return true;
  }

  bool is_all_of_q() const {
    if (default_height_) return false;
    for (const auto& [p, h] : exceptions_)
      if (h) return false;
    return true;
  }

  // The subgroup is cyclic iff only finitely many primes get a nonzero
  // height and all heights are finite; the generator is then 1/q with
  // q the product of p^h(p).
  bool is_cyclic() const {
    if (!default_height_ || *default_height_ != 0) return false;
    for (const auto& [p, h] : exceptions_)
      if (!h) return false;
    return true;
  }

  std::optional<Rational> cyclic_generator() const {
    if (!is_cyclic()) return std::nullopt;
    std::int64_t q = 1;
    for (const auto& [p, h] : exceptions_) {
      for (int i = 0; i < *h; ++i) {
        if (q > (std::int64_t)1 << 40) throw PreconditionFailed("cyclic generator denominator too large");
        q *= p;
      }
    }
    return Rational(1, q);
  }

  // Smallest prime with finite height; nullopt when every height is inf.
  std::optional<std::int64_t> smallest_finite_height_prime() const {
    if (is_all_of_q()) return std::nullopt;
    if (default_height_) {
      // Some prime outside the exception list has finite height; scan from 2.
      for (std::int64_t p = 2;; ++p) {
        if (!is_prime(p)) continue;
        if (height(p)) return p;
      }
    }
    for (const auto& [p, h] : exceptions_)
      if (h) return p;
    return std::nullopt;  // unreachable given !is_all_of_q()
  }

  // Primes with infinite height.  Only meaningful as a list when the default
  // height is finite (else cofinitely many primes qualify).
  std::vector<std::int64_t> infinite_exception_primes() const {
    std::vector<std::int64_t> out;
    for (const auto& [p, h] : exceptions_)
      if (!h) out.push_back(p);
    return out;
  }

  bool default_is_infinite() const { return !default_height_.has_value(); }

  std::string str() const {
    std::string s = "default=";
    s += default_height_ ? std::to_string(*default_height_) : "inf";
    for (const auto& [p, h] : exceptions_) {
      s += "," + std::to_string(p) + "=";
      s += h ? std::to_string(*h) : "inf";
    }
    return s;
  }

 private:
  Height default_height_;
  std::map<std::int64_t, Height> exceptions_;
};

// Element of a finite group given by a multiplication table: an index.
struct CayleyElem {
  int index = 0;
  friend auto operator<=>(const CayleyElem&, const CayleyElem&) = default;
};

// Element of the discrete Heisenberg group: integer triple with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
struct HTriple {
  std::int64_t a = 0, b = 0, c = 0;
  friend auto operator<=>(const HTriple&, const HTriple&) = default;
};

using Element = std::variant<CayleyElem, std::int64_t, Rational, HTriple>;

enum class Family { FiniteCayley, IntegersZ, RationalSubgroup, HeisenbergZ };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::FiniteCayley: return "finite_cayley";
    case Family::IntegersZ: return "integers";
    case Family::RationalSubgroup: return "rational_subgroup";
    case Family::HeisenbergZ: return "heisenberg";
  }
  return "?";
}

// Finite window over a group's carrier.  Interpretation depends on family:
// |k| <= bound for integers, max coordinate magnitude for Heisenberg triples
// (intersected with inversion-closure), numerator/denominator bounds for
// rational subgroups.  Finite Cayley groups ignore the window and use the
// whole carrier.
struct WindowSpec {
  std::int64_t bound = 0;
  std::int64_t max_num = 0;
  std::int64_t max_den = 0;

  static WindowSpec integers(std::int64_t n) {
    WindowSpec w;
    w.bound = n;
    return w;
  }
  static WindowSpec heisenberg(std::int64_t b) {
    WindowSpec w;
    w.bound = b;
    return w;
  }
  static WindowSpec rationals(std::int64_t num, std::int64_t den) {
    WindowSpec w;
    w.max_num = num;
    w.max_den = den;
    return w;
  }
  static WindowSpec full() { return WindowSpec{}; }

  std::string str() const {
    if (max_num > 0) return std::to_string(max_num) + "/" + std::to_string(max_den);
    return std::to_string(bound);
  }
};

// Handle to one group from the four supported families.  Elements are passed
// by value; every operation validates membership and throws
// ElementNotInGroup on foreign elements.
class GroupHandle {
 public:
  static GroupHandle finite_cayley(std::vector<std::vector<int>> table) {
    GroupHandle g;
    g.family_ = Family::FiniteCayley;
    g.table_ = std::move(table);
    g.validate_table();
    g.name_ = "finite_cayley_" + std::to_string(g.table_.size());
    return g;
  }

  static GroupHandle integers() {
    GroupHandle g;
    g.family_ = Family::IntegersZ;
    g.name_ = "integers";
    return g;
  }

  static GroupHandle rational_subgroup(HeightFunction h) {
    GroupHandle g;
    g.family_ = Family::RationalSubgroup;
    g.heights_ = std::move(h);
    g.name_ = "rational_subgroup";
    return g;
  }

  static GroupHandle heisenberg() {
    GroupHandle g;
    g.family_ = Family::HeisenbergZ;
    g.name_ = "heisenberg";
    return g;
  }

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // No nonidentity element of finite order.
  bool torsion_free() const {
    if (family_ == Family::FiniteCayley) return table_.size() <= 1;
    return true;
  }

  Element identity() const {
    switch (family_) {
      case Family::FiniteCayley: return CayleyElem{identity_idx_};
      case Family::IntegersZ: return (std::int64_t)0;
      case Family::RationalSubgroup: return Rational(0);
      case Family::HeisenbergZ: return HTriple{0, 0, 0};
    }
    return (std::int64_t)0;
  }

  bool contains(const Element& x) const {
    switch (family_) {
      case Family::FiniteCayley: {
        auto* e = std::get_if<CayleyElem>(&x);
        return e && e->index >= 0 && e->index < (int)table_.size();
      }
      case Family::IntegersZ: return std::holds_alternative<std::int64_t>(x);
      case Family::RationalSubgroup: {
        auto* q = std::get_if<Rational>(&x);
        return q && heights_.contains(*q);
      }
      case Family::HeisenbergZ: return std::holds_alternative<HTriple>(x);
    }
    return false;
  }

  Element mul(const Element& x, const Element& y) const {
    require(x);
    require(y);
    switch (family_) {
      case Family::FiniteCayley:
        return CayleyElem{table_[std::get<CayleyElem>(x).index][std::get<CayleyElem>(y).index]};
      case Family::IntegersZ: return std::get<std::int64_t>(x) + std::get<std::int64_t>(y);
      case Family::RationalSubgroup: return std::get<Rational>(x) + std::get<Rational>(y);
      case Family::HeisenbergZ: {
        const HTriple& u = std::get<HTriple>(x);
        const HTriple& v = std::get<HTriple>(y);
        return HTriple{u.a + v.a, u.b + v.b, u.c + v.c + u.a * v.b};
      }
    }
    return identity();
  }

  Element inverse(const Element& x) const {
    require(x);
    switch (family_) {
      case Family::FiniteCayley: {
        int i = std::get<CayleyElem>(x).index;
        return CayleyElem{inverse_idx_[i]};
      }
      case Family::IntegersZ: return -std::get<std::int64_t>(x);
      case Family::RationalSubgroup: return -std::get<Rational>(x);
      case Family::HeisenbergZ: {
        const HTriple& u = std::get<HTriple>(x);
        return HTriple{-u.a, -u.b, u.a * u.b - u.c};
      }
    }
    return identity();
  }

  // x^n for any integer n, via closed forms.
  Element power(const Element& x, std::int64_t n) const {
    require(x);
    switch (family_) {
      case Family::FiniteCayley: {
        int i = std::get<CayleyElem>(x).index;
        std::int64_t d = cyclic_order(i);
        std::int64_t r = n % d;
        if (r < 0) r += d;
        int acc = identity_idx_;
        for (std::int64_t k = 0; k < r; ++k) acc = table_[acc][i];
        return CayleyElem{acc};
      }
      case Family::IntegersZ: return n * std::get<std::int64_t>(x);
      case Family::RationalSubgroup: return Rational(n) * std::get<Rational>(x);
      case Family::HeisenbergZ: {
        // (a,b,c)^n = (na, nb, nc + C(n,2) ab), valid for all n in Z.
        const HTriple& u = std::get<HTriple>(x);
        std::int64_t binom = n * (n - 1) / 2;
        return HTriple{n * u.a, n * u.b, n * u.c + binom * u.a * u.b};
      }
    }
    return identity();
  }

  std::optional<std::int64_t> element_order(const Element& x) const {
    require(x);
    if (family_ == Family::FiniteCayley) return cyclic_order(std::get<CayleyElem>(x).index);
    return x == identity() ? std::optional<std::int64_t>(1) : std::nullopt;
  }

  // The full solution set {n in Z : x^n = y}.
  ExponentSet solve_power_of(const Element& y, const Element& x) const {
    require(x);
    require(y);
    switch (family_) {
      case Family::FiniteCayley: {
        int xi = std::get<CayleyElem>(x).index;
        int yi = std::get<CayleyElem>(y).index;
        int acc = identity_idx_;
        std::int64_t k = 0;
        std::int64_t hit = -1;
        do {
          if (acc == yi) hit = k;
          acc = table_[acc][xi];
          ++k;
        } while (acc != identity_idx_);
        // k is now ord(x); powers x^0..x^{ord-1} are pairwise distinct.
        if (hit < 0) return ExponentSet::empty_set();
        return ExponentSet::residue(hit, k);
      }
      case Family::IntegersZ: {
        std::int64_t a = std::get<std::int64_t>(x);
        std::int64_t b = std::get<std::int64_t>(y);
        if (a == 0) return b == 0 ? ExponentSet::all_integers() : ExponentSet::empty_set();
        if (b % a != 0) return ExponentSet::empty_set();
        return ExponentSet::single(b / a);
      }
      case Family::RationalSubgroup: {
        const Rational& a = std::get<Rational>(x);
        const Rational& b = std::get<Rational>(y);
        if (a.is_zero()) return b.is_zero() ? ExponentSet::all_integers() : ExponentSet::empty_set();
        auto n = Rational::integer_ratio(b, a);
        if (!n) return ExponentSet::empty_set();
        return ExponentSet::single(*n);
      }
      case Family::HeisenbergZ: {
        const HTriple& u = std::get<HTriple>(x);
        const HTriple& v = std::get<HTriple>(y);
        if (u == HTriple{0, 0, 0})
          return v == HTriple{0, 0, 0} ? ExponentSet::all_integers() : ExponentSet::empty_set();
        std::int64_t n;
        if (u.a != 0) {
          if (v.a % u.a != 0) return ExponentSet::empty_set();
          n = v.a / u.a;
        } else if (u.b != 0) {
          if (v.b % u.b != 0) return ExponentSet::empty_set();
          n = v.b / u.b;
        } else {
          if (v.c % u.c != 0) return ExponentSet::empty_set();
          n = v.c / u.c;
        }
        if (power(x, n) == Element(v)) return ExponentSet::single(n);
        return ExponentSet::empty_set();
      }
    }
    return ExponentSet::empty_set();
  }

  std::string format(const Element& x) const {
    switch (family_) {
      case Family::FiniteCayley: return std::to_string(std::get<CayleyElem>(x).index);
      case Family::IntegersZ: return std::to_string(std::get<std::int64_t>(x));
      case Family::RationalSubgroup: return std::get<Rational>(x).str();
      case Family::HeisenbergZ: {
        const HTriple& u = std::get<HTriple>(x);
        return "(" + std::to_string(u.a) + "," + std::to_string(u.b) + "," + std::to_string(u.c) + ")";
      }
    }
    return "?";
  }

  // Deterministic list of window elements.  Always contains the identity
  // (first), and is closed under inversion.
  std::vector<Element> window_carrier(const WindowSpec& w) const {
    std::vector<Element> out;
    switch (family_) {
      case Family::FiniteCayley:
        for (int i = 0; i < (int)table_.size(); ++i) out.push_back(CayleyElem{i});
        break;
      case Family::IntegersZ: {
        if (w.bound < 0) throw PreconditionFailed("integer window bound must be >= 0");
        out.push_back((std::int64_t)0);
        for (std::int64_t k = 1; k <= w.bound; ++k) {
          out.push_back(k);
          out.push_back(-k);
        }
        break;
      }
      case Family::RationalSubgroup: {
        if (w.max_num < 0 || w.max_den < 1)
          throw PreconditionFailed("rational window needs max_num >= 0 and max_den >= 1");
        out.push_back(Rational(0));
        for (std::int64_t d = 1; d <= w.max_den; ++d) {
          for (std::int64_t n = 1; n <= w.max_num; ++n) {
            if (std::gcd(n, d) != 1) continue;
            Rational q(n, d);
            if (!heights_.contains(q)) continue;
            out.push_back(q);
            out.push_back(-q);
          }
        }
        break;
      }
      case Family::HeisenbergZ: {
        if (w.bound < 0) throw PreconditionFailed("heisenberg window bound must be >= 0");
        std::int64_t b = w.bound;
        out.push_back(HTriple{0, 0, 0});
        for (std::int64_t a = -b; a <= b; ++a)
          for (std::int64_t bb = -b; bb <= b; ++bb)
            for (std::int64_t c = -b; c <= b; ++c) {
              HTriple t{a, bb, c};
              if (t == HTriple{0, 0, 0}) continue;
              // Keep the carrier inversion-closed: (a,b,c)^{-1} = (-a,-b,ab-c)
              // must land in the same coordinate box.
              std::int64_t ic = a * bb - c;
              if (ic < -b || ic > b) continue;
              out.push_back(t);
            }
        break;
      }
    }
    return out;
  }

  int cayley_order() const {
    require_family(Family::FiniteCayley, "cayley_order");
    return (int)table_.size();
  }

  int cayley_identity() const {
    require_family(Family::FiniteCayley, "cayley_identity");
    return identity_idx_;
  }

  const std::vector<std::vector<int>>& cayley_table() const {
    require_family(Family::FiniteCayley, "cayley_table");
    return table_;
  }

  const HeightFunction& heights() const {
    require_family(Family::RationalSubgroup, "heights");
    return heights_;
  }

 private:
  GroupHandle() = default;

  void require(const Element& x) const {
    if (!contains(x)) throw ElementNotInGroup("element does not belong to group " + name_);
  }

  void require_family(Family f, const char* op) const {
    if (family_ != f)
      throw UnsupportedFamily(std::string(op) + " requires family " + family_name(f) +
                              ", group is " + family_name(family_));
  }

  std::int64_t cyclic_order(int i) const {
    std::int64_t d = 1;
    int cur = i;
    while (cur != identity_idx_) {
      cur = table_[cur][i];
      ++d;
    }
    return d;
  }

  void validate_table() {
    std::size_t n = table_.size();
    if (n == 0) throw NotAGroup("empty multiplication table");
    for (const auto& row : table_) {
      if (row.size() != n) throw NotAGroup("multiplication table is not square");
      for (int v : row)
        if (v < 0 || (std::size_t)v >= n) throw NotAGroup("table entry out of range");
    }
    // Latin square: rows and columns are permutations.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> seen_row(n, false), seen_col(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen_row[table_[i][j]]) throw NotAGroup("row " + std::to_string(i) + " repeats an entry");
        seen_row[table_[i][j]] = true;
        if (seen_col[table_[j][i]]) throw NotAGroup("column " + std::to_string(i) + " repeats an entry");
        seen_col[table_[j][i]] = true;
      }
    }
    // Two-sided identity.
    identity_idx_ = -1;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = table_[e][j] == (int)j && table_[j][e] == (int)j;
      if (ok) {
        identity_idx_ = (int)e;
        break;
      }
    }
    if (identity_idx_ < 0) throw NotAGroup("no two-sided identity");
    // Two-sided inverses.
    inverse_idx_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i][j] == identity_idx_ && table_[j][i] == identity_idx_) {
          inverse_idx_[i] = (int)j;
          break;
        }
      }
      if (inverse_idx_[i] < 0) throw NotAGroup("element " + std::to_string(i) + " has no two-sided inverse");
    }
    // Associativity.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw NotAGroup("multiplication is not associative");
  }

  Family family_ = Family::IntegersZ;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_idx_;
  int identity_idx_ = 0;
  HeightFunction heights_;
};

// Does every commutator lie in the center?  Infinite families are checked
// over a coordinate box of the given bound; the finite family exhaustively.
inline bool nilpotency_class_at_most_2(const GroupHandle& g, std::int64_t window_bound = 2) {
  auto commutes_with_all = [&](const Element& c, const std::vector<Element>& elems) {
    for (const Element& k : elems)
      if (g.mul(c, k) != g.mul(k, c)) return false;
    return true;
  };
  std::vector<Element> elems;
  switch (g.family()) {
    case Family::FiniteCayley:
      elems = g.window_carrier(WindowSpec::full());
      break;
    case Family::IntegersZ:
      elems = g.window_carrier(WindowSpec::integers(window_bound));
      break;
    case Family::RationalSubgroup:
      elems = g.window_carrier(WindowSpec::rationals(window_bound, window_bound));
      break;
    case Family::HeisenbergZ: {
      std::int64_t b = window_bound;
      for (std::int64_t a = -b; a <= b; ++a)
        for (std::int64_t bb = -b; bb <= b; ++bb)
          for (std::int64_t c = -b; c <= b; ++c) elems.push_back(HTriple{a, bb, c});
      break;
    }
  }
  std::set<std::string> seen;
  for (const Element& x : elems)
    for (const Element& y : elems) {
      Element c = g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
      std::string key = g.format(c);
      if (!seen.insert(key).second) continue;
      if (!commutes_with_all(c, elems)) return false;
    }
  return true;
}

// Bounded search for z with x, y both powers of z.  Candidates are drawn
// from a deterministic family-specific enumeration; returns the first hit.
inline std::optional<Element> local_cyclicity_witness(const GroupHandle& g, const Element& x,
                                                      const Element& y, std::int64_t bound) {
  if (x == g.identity() || y == g.identity())
    throw PreconditionFailed("local cyclicity witness requires nonidentity arguments");
  auto generates_both = [&](const Element& z) {
    if (z == g.identity()) return false;
    return !g.solve_power_of(x, z).empty() && !g.solve_power_of(y, z).empty();
  };
  switch (g.family()) {
    case Family::FiniteCayley: {
      for (const Element& z : g.window_carrier(WindowSpec::full()))
        if (generates_both(z)) return z;
      return std::nullopt;
    }
    case Family::IntegersZ: {
      for (std::int64_t k = 1; k <= bound; ++k)
        for (std::int64_t s : {k, -k})
          if (generates_both((std::int64_t)s)) return Element((std::int64_t)s);
      return std::nullopt;
    }
    case Family::RationalSubgroup: {
      // Any common root of x sits at x/n for some n; membership filters the
      // candidates down to the subgroup.
      const Rational& a = std::get<Rational>(x);
      for (std::int64_t n = 1; n <= bound; ++n)
        for (std::int64_t s : {n, -n}) {
          Rational z = a / Rational(s);
          if (!g.contains(z)) continue;
          if (generates_both(z)) return Element(z);
        }
      return std::nullopt;
    }
    case Family::HeisenbergZ: {
      for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
          for (std::int64_t c = -bound; c <= bound; ++c) {
            Element z = HTriple{a, b, c};
            if (generates_both(z)) return z;
          }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct RationalClassification {
  bool is_q = false;
  // Smallest prime with finite height when is_q is false.
  std::optional<std::int64_t> witness_prime;
};

// A subgroup of Q containing 1 is all of Q iff every prime has infinite
// height; otherwise the smallest finite-height prime witnesses properness.
inline RationalClassification classify_rational_subgroup(const HeightFunction& h) {
  RationalClassification out;
  out.is_q = h.is_all_of_q();
  if (!out.is_q) out.witness_prime = h.smallest_finite_height_prime();
  return out;
}

inline RationalClassification classify_rational_subgroup(const GroupHandle& g) {
  return classify_rational_subgroup(g.heights());
}

}  // namespace powergraph
