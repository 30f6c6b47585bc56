#pragma once

#include <cstddef>
#include <vector>

#include "plesken/group.hpp"
#include "plesken/rational.hpp"

namespace plesken {

/// Element of the rational group algebra: one coefficient per group
/// element. Multiplication is convolution through the group table. Holds a
/// non-owning pointer to the group; keep the group alive for the lifetime
/// of the element.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(const FiniteGroup& group)
      : group_(&group), coeff_(group.order()) {}

  const FiniteGroup& group() const { return *group_; }

  Rat& operator[](std::size_t g) { return coeff_[g]; }
  const Rat& operator[](std::size_t g) const { return coeff_[g]; }

  bool operator==(const GroupAlgebraElement&) const = default;

  bool is_zero() const {
    for (const Rat& x : coeff_)
      if (x != 0) return false;
    return true;
  }

  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const {
    GroupAlgebraElement r(*group_);
    for (std::size_t g = 0; g < coeff_.size(); ++g) r.coeff_[g] = coeff_[g] + other.coeff_[g];
    return r;
  }

  GroupAlgebraElement operator-(const GroupAlgebraElement& other) const {
    GroupAlgebraElement r(*group_);
    for (std::size_t g = 0; g < coeff_.size(); ++g) r.coeff_[g] = coeff_[g] - other.coeff_[g];
    return r;
  }

  friend GroupAlgebraElement operator*(const Rat& c, const GroupAlgebraElement& x) {
    GroupAlgebraElement r(*x.group_);
    for (std::size_t g = 0; g < x.coeff_.size(); ++g) r.coeff_[g] = c * x.coeff_[g];
    return r;
  }

  /// Convolution product through the group table.
  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const {
    GroupAlgebraElement r(*group_);
    for (std::size_t a = 0; a < coeff_.size(); ++a) {
      if (coeff_[a] == 0) continue;
      for (std::size_t b = 0; b < coeff_.size(); ++b) {
        if (other.coeff_[b] == 0) continue;
        r.coeff_[group_->mul(a, b)] += coeff_[a] * other.coeff_[b];
      }
    }
    return r;
  }

private:
  const FiniteGroup* group_;
  std::vector<Rat> coeff_;
};

/// The element g - g^{-1}; zero exactly when g is an involution or the
/// identity.
inline GroupAlgebraElement hat(std::size_t g, const FiniteGroup& group) {
  GroupAlgebraElement x(group);
  const std::size_t ginv = group.inv(g);
  if (g == ginv) return x;
  x[g] = 1;
  x[ginv] = -1;
  return x;
}

/// Lie bracket x y - y x in the group algebra.
inline GroupAlgebraElement bracket(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  return x * y - y * x;
}

} // namespace plesken
