#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plesken/error.hpp"

namespace plesken {

/// Finite group as a validated multiplication table. Element a*b is
/// table[a][b]; identity and inverses are derived during construction.
class FiniteGroup {
public:
  static constexpr std::size_t full_assoc_limit = 64;

  /// Builds a group from a raw table, validating the Latin-square property,
  /// the existence of an identity, associativity (full check for order <=
  /// full_assoc_limit, 10 n^2 sampled triples above) and inverses.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                std::string name = "group") {
    FiniteGroup g;
    g.name_ = std::move(name);
    const std::size_t n = table.size();
    if (n == 0) throw validation_error("group table is empty");
    g.n_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n)
        throw validation_error("row " + std::to_string(a) + ": expected " + std::to_string(n) +
                               " entries, got " + std::to_string(table[a].size()));
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n)
          throw validation_error("row " + std::to_string(a) + ": entry " +
                                 std::to_string(table[a][b]) + " out of range");
        g.table_[a * n + b] = table[a][b];
      }
    }

    // Latin square: rows and columns are permutations.
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> seen(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t v = g.mul(a, b);
        if (seen[v])
          throw validation_error("row " + std::to_string(a) + ": value " + std::to_string(v) +
                                 " repeats (Latin square violation)");
        seen[v] = true;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<bool> seen(n, false);
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t v = g.mul(a, b);
        if (seen[v])
          throw validation_error("column " + std::to_string(b) + ": value " + std::to_string(v) +
                                 " repeats (Latin square violation)");
        seen[v] = true;
      }
    }

    // Identity: two-sided.
    g.identity_ = n;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
      if (ok) {
        g.identity_ = e;
        break;
      }
    }
    if (g.identity_ == n) throw validation_error("no identity element in table");

    // Associativity.
    const auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        throw validation_error("associativity fails at triple (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
    };
    if (n <= full_assoc_limit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
      std::mt19937_64 rng(0xC0FFEE);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t t = 0; t < 10 * n * n; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }

    // Inverses (existence follows from the Latin rows; verify both sides).
    g.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t inv = n;
      for (std::size_t b = 0; b < n; ++b) {
        if (g.mul(a, b) == g.identity_) {
          inv = b;
          break;
        }
      }
      if (inv == n || g.mul(inv, a) != g.identity_)
        throw validation_error("element " + std::to_string(a) + " has no two-sided inverse");
      g.inverse_[a] = inv;
    }
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// #{g : g^2 = identity}, identity included.
  std::size_t involution_count() const {
    std::size_t count = 0;
    for (std::size_t a = 0; a < n_; ++a)
      if (mul(a, a) == identity_) ++count;
    return count;
  }

  // ---- builtin families ----

  static FiniteGroup cyclic(std::size_t n) {
    require(n >= 1, "cyclic: order must be >= 1");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t), "cyclic" + std::to_string(n));
  }

  /// Order 2n: indices [0, n) are rotations r^a, [n, 2n) reflections s r^a.
  static FiniteGroup dihedral(std::size_t n) {
    require(n >= 1, "dihedral: parameter must be >= 1");
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    const auto rot = [&](std::size_t a) { return a % n; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = rot(a + b);                 // r^a r^b
        t[a][n + b] = n + rot(b + n - a);     // r^a (s r^b) = s r^(b-a)
        t[n + a][b] = n + rot(a + b);         // (s r^a) r^b
        t[n + a][n + b] = rot(b + n - a);     // (s r^a)(s r^b) = r^(b-a)
      }
    }
    return from_table(std::move(t), "dihedral" + std::to_string(n));
  }

  static FiniteGroup symmetric(std::size_t n) {
    require(n >= 1 && n <= 5, "symmetric: parameter must be in [1, 5]");
    std::vector<std::size_t> base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = i;
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p = base;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

    const std::size_t order = perms.size();
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    std::vector<std::size_t> comp(n);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        for (std::size_t x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
        t[a][b] = index.at(comp);
      }
    return from_table(std::move(t), "symmetric" + std::to_string(n));
  }

  /// Elements in order: 1, -1, i, -i, j, -j, k, -k.
  static FiniteGroup quaternion8() {
    // axis products for {1, i, j, k}: value (sign, axis)
    static constexpr int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        const int ax = static_cast<int>(a / 2), bx = static_cast<int>(b / 2);
        int s = sign[ax][bx];
        if (a % 2) s = -s;
        if (b % 2) s = -s;
        t[a][b] = 2 * static_cast<std::size_t>(axis[ax][bx]) + (s < 0 ? 1 : 0);
      }
    return from_table(std::move(t), "quaternion8");
  }

  /// Heisenberg group of order p^3: triples (a, b, c) standing for the
  /// unitriangular matrix with (1,2) entry a, (1,3) entry b, (2,3) entry c;
  /// index = (a p + b) p + c.
  static FiniteGroup heisenberg(std::size_t p) {
    require(is_prime(p) && p <= 7, "heisenberg: parameter must be a prime <= 7");
    const std::size_t order = p * p * p;
    const auto idx = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * p + b) * p + c; };
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t c = 0; c < p; ++c)
          for (std::size_t a2 = 0; a2 < p; ++a2)
            for (std::size_t b2 = 0; b2 < p; ++b2)
              for (std::size_t c2 = 0; c2 < p; ++c2)
                t[idx(a, b, c)][idx(a2, b2, c2)] =
                    idx((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
    return from_table(std::move(t), "heisenberg" + std::to_string(p));
  }

  /// (Z_p)^k with component-wise addition; index = base-p digits.
  static FiniteGroup elementary_abelian(std::size_t p, std::size_t k) {
    require(is_prime(p), "elementary-abelian: p must be prime");
    require(k >= 1, "elementary-abelian: k must be >= 1");
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      require(order <= 100000 / p, "elementary-abelian: order too large");
      order *= p;
    }
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        std::size_t x = a, y = b, pow = 1, sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
          sum += ((x % p + y % p) % p) * pow;
          x /= p;
          y /= p;
          pow *= p;
        }
        t[a][b] = sum;
      }
    return from_table(std::move(t),
                      "elementary-abelian" + std::to_string(p) + "_" + std::to_string(k));
  }

  /// Dispatch on "family" or "family:p" or "family:p,k" descriptors, e.g.
  /// "cyclic:6", "heisenberg:3", "elementary-abelian:3,2", "quaternion8".
  static FiniteGroup builtin(std::string_view spec) {
    std::string family(spec);
    std::vector<std::size_t> params;
    if (const auto colon = family.find(':'); colon != std::string::npos) {
      std::string args = family.substr(colon + 1);
      family.resize(colon);
      std::replace(args.begin(), args.end(), ',', ' ');
      std::istringstream is(args);
      long v = 0;
      while (is >> v) {
        if (v < 0) throw validation_error("builtin: negative parameter");
        params.push_back(static_cast<std::size_t>(v));
      }
      if (!is.eof()) throw parse_error("builtin: malformed parameter list '" + args + "'");
    }
    const auto arity = [&](std::size_t k) {
      if (params.size() != k)
        throw validation_error("builtin " + family + ": expected " + std::to_string(k) +
                               " parameter(s)");
    };
    if (family == "cyclic") {
      arity(1);
      return cyclic(params[0]);
    }
    if (family == "dihedral") {
      arity(1);
      return dihedral(params[0]);
    }
    if (family == "symmetric") {
      arity(1);
      return symmetric(params[0]);
    }
    if (family == "quaternion8") {
      arity(0);
      return quaternion8();
    }
    if (family == "heisenberg") {
      arity(1);
      return heisenberg(params[0]);
    }
    if (family == "elementary-abelian") {
      arity(2);
      return elementary_abelian(params[0], params[1]);
    }
    throw validation_error("unknown builtin family '" + family + "'");
  }

  static bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  static void require(bool ok, const char* message) {
    if (!ok) throw validation_error(message);
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> table_; // row-major n x n
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::string name_;
};

// ---- "cayley v1" file format ----
//
//   cayley 1
//   <n>
//   <n rows of n space-separated entries>

inline std::string render_cayley(const FiniteGroup& g) {
  std::ostringstream os;
  os << "cayley 1\n" << g.order() << "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (b) os << ' ';
      os << g.mul(a, b);
    }
    os << '\n';
  }
  return os.str();
}

inline FiniteGroup parse_cayley(const std::string& text, std::string name = "group") {
  std::istringstream is(text);
  std::string word;
  int version = -1;
  if (!(is >> word >> version) || word != "cayley" || version != 1)
    throw parse_error("cayley: expected header 'cayley 1'");
  long long n = 0;
  if (!(is >> n) || n <= 0) throw parse_error("cayley: invalid order");
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(n),
                                              std::vector<std::size_t>(static_cast<std::size_t>(n)));
  for (std::size_t a = 0; a < static_cast<std::size_t>(n); ++a)
    for (std::size_t b = 0; b < static_cast<std::size_t>(n); ++b) {
      long long v = 0;
      if (!(is >> v)) throw parse_error("cayley: table row " + std::to_string(a) + " is truncated");
      if (v < 0 || v >= n)
        throw parse_error("cayley: row " + std::to_string(a) + ": entry " + std::to_string(v) +
                          " out of range");
      table[a][b] = static_cast<std::size_t>(v);
    }
  std::string trailing;
  if (is >> trailing) throw parse_error("cayley: unexpected trailing token '" + trailing + "'");
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

} // namespace plesken
