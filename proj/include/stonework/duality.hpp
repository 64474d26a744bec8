#ifndef STONEWORK_DUALITY_HPP_
#define STONEWORK_DUALITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonework/bisection_monoid.hpp"
#include "stonework/filter.hpp"
#include "stonework/groupoid.hpp"
#include "stonework/inverse_monoid.hpp"
#include "stonework/laws.hpp"
#include "stonework/morphism.hpp"

namespace stonework {

  /// G(theta) : G(T) -> G(S), A |-> theta^-1(A). Source and target are the
  /// groupoids of GT and GS. Throws PreconditionError when theta fails
  /// M1-M3 or does not match the two groupoids.
  CoveringFunctor functor_G_on_morphism(MonoidMorphism const& theta, UltrafilterGroupoid const& GS,
                                        UltrafilterGroupoid const& GT);

  /// K_s: the arrows of G(S) whose ultrafilter contains s.
  ElementSet basic_open(Element s, UltrafilterGroupoid const& GS);

  /// The K_s laws over every element and pair of S, including that the
  /// K_s are exactly the bisections of G(S) and the finite form of the
  /// multiplication-preimage identity.
  LawReport verify_K_laws(UltrafilterGroupoid const& GS);

  /// First pair of members of A sharing a domain or a range.
  struct BisectionViolation {
    Arrow       first  = 0;
    Arrow       second = 0;
    std::string shared;  // "domain" or "range"
  };
  std::optional<BisectionViolation> bisection_violation(FiniteGroupoid const& G,
                                                        ElementSet const&     A);

  /// Outcome of probing whether K_s u K_t is a bisection.
  struct UnionProbe {
    bool                              join_exists = false;
    std::optional<BisectionViolation> violation;
    bool consistent() const noexcept { return join_exists == !violation.has_value(); }
  };
  UnionProbe probe_union(UltrafilterGroupoid const& GS, Element s, Element t);

  /// Explicit canonical maps between an object and its double dual.
  struct IsoCertificate {
    std::string                direction;  // "monoid" or "groupoid"
    std::size_t                source_size = 0;
    std::size_t                target_size = 0;
    std::vector<std::uint32_t> forward;
    std::vector<std::uint32_t> backward;
    LawReport                  laws;
    std::vector<std::string>   notes;
    double                     elapsed_ms = 0;
    bool ok() const noexcept { return source_size == target_size && laws.ok(); }
  };

  /// S -> A(G(S)), s |-> K_s.
  IsoCertificate round_trip_monoid(InverseMonoid const& S, BisectionLimits const& limits = {});
  /// G -> G(A(G)), g |-> F_g.
  IsoCertificate round_trip_groupoid(FiniteGroupoid const& G, BisectionLimits const& limits = {});

  struct CliffordReport {
    bool                   is_clifford = false;
    std::optional<Element> witness;  // some s with s^-1 s != s s^-1
    /// Laws checked on G(S); empty when S is not Clifford.
    LawReport laws;
    bool ok() const noexcept { return is_clifford && laws.ok(); }
  };
  CliffordReport clifford_check(InverseMonoid const& S);

  struct PullbackReport {
    /// Preimages of idempotent target ultrafilters are idempotent
    /// ultrafilters.
    bool idempotent_ok = true;
    /// Least members of non-idempotent target ultrafilters whose preimage
    /// is not an ultrafilter, split by whether the preimage is empty.
    std::vector<Element> empty_preimage;
    std::vector<Element> non_ultra_preimage;
    std::vector<Element> idempotent_failures;
  };
  /// theta must satisfy M1 and M2; throws PreconditionError otherwise.
  PullbackReport weak_morphism_pullback(MonoidMorphism const& theta);

  /// G(I(X)) against the pair groupoid X x X under {j -> i}^ |-> (i, j).
  /// The monoid must be symmetric_inverse_monoid(points).
  LawReport check_pair_groupoid_iso(InverseMonoid const& IX, std::size_t points);

  /// K_theta(s) = G(theta)^-1(K_s) for every s.
  LawResult check_naturality(MonoidMorphism const& theta, UltrafilterGroupoid const& GS,
                             UltrafilterGroupoid const& GT);

}  // namespace stonework

#endif  // STONEWORK_DUALITY_HPP_
