#ifndef STONEWORK_MORPHISM_HPP_
#define STONEWORK_MORPHISM_HPP_

#include <string>
#include <vector>

#include "stonework/element_set.hpp"
#include "stonework/inverse_monoid.hpp"

namespace stonework {

  /// An element map between two finite inverse monoids. Both monoids must
  /// outlive the morphism.
  struct MonoidMorphism {
    InverseMonoid const* source = nullptr;
    InverseMonoid const* target = nullptr;
    std::vector<Element> map;

    Element operator()(Element s) const { return map[s]; }
  };

  MonoidMorphism identity_morphism(InverseMonoid const& S);
  /// The composite "first f, then g".
  MonoidMorphism compose_morphisms(MonoidMorphism const& f, MonoidMorphism const& g);

  /// theta^-1(A) as a subset of the source.
  ElementSet preimage(MonoidMorphism const& theta, ElementSet const& A);

  struct MorphismReport {
    bool ok = false;
    /// "homomorphism", "M1", "M2" or "M3".
    std::string          failed;
    std::vector<Element> witness;
    std::string          detail;
  };

  /// Semigroup homomorphism, then M1 (boolean algebra map on idempotents),
  /// then M2 (binary meets preserved), then M3 (preimages of ultrafilters
  /// are ultrafilters). Stops at the first failure. For an M3 failure the
  /// witness is the least member of the offending target ultrafilter.
  MorphismReport validate_morphism(MonoidMorphism const& theta);

  /// Only the homomorphism, M1 and M2 stages.
  MorphismReport validate_weak_morphism(MonoidMorphism const& theta);

}  // namespace stonework

#endif  // STONEWORK_MORPHISM_HPP_
