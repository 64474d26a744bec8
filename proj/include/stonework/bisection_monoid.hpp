#ifndef STONEWORK_BISECTION_MONOID_HPP_
#define STONEWORK_BISECTION_MONOID_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "stonework/element_set.hpp"
#include "stonework/filter.hpp"
#include "stonework/groupoid.hpp"
#include "stonework/inverse_monoid.hpp"
#include "stonework/morphism.hpp"

namespace stonework {

  struct BisectionLimits {
    std::size_t max_arrows = 16;
    std::size_t max_size   = 4096;
  };

  /// A(G): every bisection of a finite groupoid (all of them are compact
  /// open in the discrete topology) as a boolean inverse monoid. Element i
  /// of monoid() is bisections()[i]; bisections are sorted by bitset value,
  /// so the empty bisection is element 0.
  class BisectionMonoid {
   public:
    explicit BisectionMonoid(FiniteGroupoid G, BisectionLimits const& limits = {});

    FiniteGroupoid const&          groupoid() const noexcept { return groupoid_; }
    InverseMonoid const&           monoid() const noexcept { return *monoid_; }
    std::vector<ElementSet> const& bisections() const noexcept { return bisections_; }
    std::size_t                    size() const noexcept { return bisections_.size(); }

    std::optional<Element> index_of(ElementSet const& bisection) const;

   private:
    FiniteGroupoid                       groupoid_;
    std::vector<ElementSet>              bisections_;
    std::map<ElementSet, Element>        index_;
    std::shared_ptr<InverseMonoid const> monoid_;
  };

  /// F_g = {A in A(G) : g in A}.
  Filter ultrafilter_of_point(BisectionMonoid const& AG, Arrow g);

  /// B(f) = f^-1 : A(H) -> A(G) for a covering functor f : G -> H whose
  /// source and target are the groupoids of AG and AH. Throws
  /// PreconditionError when f is not a covering functor.
  MonoidMorphism pullback_bisections(CoveringFunctor const& f, BisectionMonoid const& AG,
                                     BisectionMonoid const& AH);

}  // namespace stonework

#endif  // STONEWORK_BISECTION_MONOID_HPP_
