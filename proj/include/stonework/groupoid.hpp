#ifndef STONEWORK_GROUPOID_HPP_
#define STONEWORK_GROUPOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stonework/element_set.hpp"

namespace stonework {

  using Arrow = std::uint32_t;

  struct GroupoidTable {
    std::size_t              size = 0;
    std::vector<Arrow>       dom;
    std::vector<Arrow>       ran;
    std::vector<Arrow>       inv;
    std::vector<std::int32_t> compose;  // row-major, -1 where undefined
    std::vector<std::string> labels;
  };

  /// A finite groupoid with the discrete topology. Arrows are the dense
  /// indices 0..size()-1; identities are the arrows e with d(e) = e.
  ///
  /// Finite discrete groupoids are boolean groupoids without further
  /// checks: they are hausdorff and etale, G0 is finite hence compact, and
  /// the singleton bisections form a basis of compact open bisections.
  class FiniteGroupoid {
   public:
    FiniteGroupoid() = default;
    /// Throws InvalidInput on any groupoid-axiom violation.
    explicit FiniteGroupoid(GroupoidTable table);

    std::size_t size() const noexcept { return size_; }
    Arrow dom(Arrow g) const noexcept { return dom_[g]; }
    Arrow ran(Arrow g) const noexcept { return ran_[g]; }
    Arrow inv(Arrow g) const noexcept { return inv_[g]; }
    std::optional<Arrow> compose(Arrow g, Arrow h) const noexcept {
      auto v = compose_[g * size_ + h];
      return v < 0 ? std::nullopt : std::optional<Arrow>(static_cast<Arrow>(v));
    }
    bool is_identity(Arrow g) const noexcept { return dom_[g] == g; }
    ElementSet const& identities() const noexcept { return identities_; }
    std::string const& label(Arrow g) const { return labels_[g]; }
    std::vector<std::string> const& labels() const noexcept { return labels_; }

    GroupoidTable table() const;

   private:
    std::size_t               size_ = 0;
    std::vector<Arrow>        dom_, ran_, inv_;
    std::vector<std::int32_t> compose_;
    std::vector<std::string>  labels_;
    ElementSet                identities_;
  };

  /// X x X with (i, j)(j, k) = (i, k); arrow (i, j) has index
  /// (i - 1) * points + (j - 1), d(i, j) = (j, j) and r(i, j) = (i, i).
  FiniteGroupoid pair_groupoid(std::size_t points);
  /// Z/order as a one-object groupoid; arrow i is g^i.
  FiniteGroupoid cyclic_group(std::size_t order);
  /// `points` identities and nothing else.
  FiniteGroupoid discrete_groupoid(std::size_t points);
  /// Arrows of G first, then arrows of H shifted by |G|.
  FiniteGroupoid disjoint_union(FiniteGroupoid const& G, FiniteGroupoid const& H);

  /// Definitional test: no two members share a domain or a range.
  bool is_bisection(FiniteGroupoid const& G, ElementSet const& A);
  /// Equivalent test through A^-1 A and A A^-1 being sets of identities.
  bool is_bisection_by_products(FiniteGroupoid const& G, ElementSet const& A);

  /// AB = {ab : a in A, b in B, ab defined}.
  ElementSet set_product(FiniteGroupoid const& G, ElementSet const& A, ElementSet const& B);
  ElementSet set_inverse(FiniteGroupoid const& G, ElementSet const& A);

  /// A subset of a groupoid that satisfies the bisection condition. The
  /// carrier must outlive the bisection.
  class Bisection {
   public:
    /// Throws InvalidInput if `members` is not a bisection of G.
    Bisection(FiniteGroupoid const& G, ElementSet members);

    FiniteGroupoid const& carrier() const noexcept { return *carrier_; }
    ElementSet const&     members() const noexcept { return members_; }

    friend bool operator==(Bisection const& a, Bisection const& b) {
      return a.carrier_ == b.carrier_ && a.members_ == b.members_;
    }

   private:
    FiniteGroupoid const* carrier_;
    ElementSet            members_;
  };

  /// Product of bisections. The result is re-validated as a bisection.
  Bisection bisection_product(Bisection const& A, Bisection const& B);

  /// All bisections in increasing bitset order, obtained by filtering every
  /// subset of G. Exponential; meant as the reference for small groupoids.
  std::vector<ElementSet> bisections_by_subsets(FiniteGroupoid const& G,
                                                std::size_t max_arrows = 16);
  /// All bisections in increasing bitset order, built as partial injections
  /// of G0 together with a choice of arrow for each mapped identity.
  std::vector<ElementSet> bisections_by_injections(FiniteGroupoid const& G,
                                                   std::size_t max_arrows = 16);

  /// A map of arrows between two finite groupoids. Both groupoids must
  /// outlive the functor.
  struct CoveringFunctor {
    FiniteGroupoid const* source = nullptr;
    FiniteGroupoid const* target = nullptr;
    std::vector<Arrow>    arrow_map;

    /// Image of each identity of the source, indexed by source arrow
    /// (entries for non-identities are unspecified).
    std::vector<Arrow> object_map() const;
  };

  struct CoveringReport {
    bool ok = false;
    /// "functor", "star-injectivity", "star-surjectivity" or "lifting".
    std::string        property;
    std::vector<Arrow> witness;
    std::string        detail;
  };

  /// Functor laws only: identities, d, r and composition are preserved.
  CoveringReport check_functor(CoveringFunctor const& f);

  /// Functor laws, then star injectivity and star surjectivity, then the
  /// factorisation-lifting property as an independent cross-check. The
  /// first failure in index order is reported.
  CoveringReport check_covering(CoveringFunctor const& f);

  /// The composite "first f, then g".
  CoveringFunctor compose_functors(CoveringFunctor const& f, CoveringFunctor const& g);

  /// Graphviz rendering: arrows as edges d(g) -> r(g), identities
  /// double-circled.
  std::string to_dot(FiniteGroupoid const& G, std::string const& name = "G");

}  // namespace stonework

#endif  // STONEWORK_GROUPOID_HPP_
