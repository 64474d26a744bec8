#ifndef STONEWORK_MONOID_CATALOG_HPP_
#define STONEWORK_MONOID_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "stonework/inverse_monoid.hpp"

namespace stonework {

  /// A partial injection of {0, ..., k-1}; image[x] == -1 means x is
  /// outside the domain.
  struct PartialBijection {
    std::vector<int> image;

    std::size_t rank() const;
    /// (s * t)(x) = s(t(x))
    PartialBijection compose(PartialBijection const& t) const;
    PartialBijection inverse() const;
    /// Printed with 1-based points, e.g. "{1->2, 2->1}".
    std::string label() const;

    friend bool operator==(PartialBijection const&, PartialBijection const&) = default;
    friend auto operator<=>(PartialBijection const&, PartialBijection const&) = default;
  };

  /// All partial bijections of a k-set in the element order used by
  /// symmetric_inverse_monoid: by rank, then lexicographically by image
  /// with undefined points last, so {1->1} < {1->2} < {2->1} < {2->2}.
  std::vector<PartialBijection> partial_bijections(std::size_t points);

  /// I(X) for |X| = points. Throws BoundExceeded above max_points.
  InverseMonoid symmetric_inverse_monoid(std::size_t points, std::size_t max_points = 5);

  /// The boolean algebra of subsets of an atoms-element set, as an inverse
  /// monoid in which every element is idempotent. Element i is the subset
  /// with bitmask i.
  InverseMonoid boolean_algebra(std::size_t atoms);

  /// The cyclic group Z/order with a zero adjoined. Element 0 is the zero,
  /// element 1 + i is g^i.
  InverseMonoid group_with_zero(std::size_t order);

  /// Componentwise product; the zero is (0, 0). Element (a, b) has index
  /// a * T.size() + b.
  InverseMonoid direct_product(InverseMonoid const& S, InverseMonoid const& T);

  /// Clifford boolean monoid over the 4-element boolean algebra with Z/2
  /// above each atom: (Z/2 with zero) x (Z/2 with zero).
  InverseMonoid clifford_example();

  /// Negative fixture: the 5-element semilattice 0 < g < e, f < 1 with
  /// e f = g. Its idempotents form a distributive lattice in which g has
  /// no complement, so BM1 fails.
  InverseMonoid non_boolean_semilattice();

  /// Negative fixture: the Brandt monoid B2 with an identity adjoined.
  /// E(S) is boolean but the orthogonal pair s, s^-1 has no join (BM3).
  InverseMonoid brandt_monoid();

}  // namespace stonework

#endif  // STONEWORK_MONOID_CATALOG_HPP_
