#ifndef STONEWORK_FILTER_HPP_
#define STONEWORK_FILTER_HPP_

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "stonework/element_set.hpp"
#include "stonework/groupoid.hpp"
#include "stonework/inverse_monoid.hpp"

namespace stonework {

  /// Upward closure A^ = {s : a <= s for some a in A}.
  ElementSet upward_closure(InverseMonoid const& S, ElementSet const& A);

  /// Non-empty, upwardly closed and a filter base.
  bool is_filter(InverseMonoid const& S, ElementSet const& A);

  /// A filter of a finite inverse monoid. Membership is an explicit bitset;
  /// the carrier must outlive the filter.
  class Filter {
   public:
    /// Throws InvalidInput if `members` is not a filter.
    Filter(InverseMonoid const& S, ElementSet members);

    Filter(Filter const& other);
    Filter& operator=(Filter const& other);

    InverseMonoid const& carrier() const noexcept { return *carrier_; }
    ElementSet const&    members() const noexcept { return members_; }
    bool contains(Element s) const noexcept { return members_.contains(s); }

    bool is_proper() const noexcept { return proper_; }
    /// Contains an idempotent.
    bool is_idempotent() const noexcept { return idempotent_; }
    /// Maximal among proper filters. Computed on first use.
    bool is_ultra() const;

    /// Least member. Every filter of a finite monoid has one, so F = min^.
    Element minimum() const noexcept { return minimum_; }

    friend bool operator==(Filter const& a, Filter const& b) noexcept {
      return a.carrier_ == b.carrier_ && a.members_ == b.members_;
    }

   private:
    Filter(InverseMonoid const& S, ElementSet members, Element minimum);
    friend Filter principal_filter(InverseMonoid const&, Element);
    friend std::vector<Filter> all_filters(InverseMonoid const&);
    friend Filter              filter_inverse(Filter const&);

    InverseMonoid const*     carrier_;
    ElementSet               members_;
    bool                     proper_     = false;
    bool                     idempotent_ = false;
    Element                  minimum_    = 0;
    mutable std::atomic<int> ultra_{-1};
  };

  /// s^ for s != 0. Throws PreconditionError on the zero.
  Filter principal_filter(InverseMonoid const& S, Element s);

  /// Every filter of S, in the order of their least members. In a finite
  /// monoid every filter has a least element, so these are the s^ for all
  /// s, including the improper filter 0^ = S.
  std::vector<Filter> all_filters(InverseMonoid const& S);

  /// The criterion "s meets every member of F non-trivially implies s in F".
  /// Improper filters are never ultra.
  bool is_ultrafilter(Filter const& F);

  /// Direct maximality: no proper filter strictly contains F, scanning the
  /// complete list of filters.
  bool is_maximal_proper_filter(Filter const& F);

  /// F^-1 = {s^-1 : s in F}.
  Filter filter_inverse(Filter const& F);

  /// A . B = (AB)^.
  Filter filter_product(Filter const& A, Filter const& B);

  /// Plain set product AB with no closure.
  ElementSet set_product(InverseMonoid const& S, ElementSet const& A, ElementSet const& B);
  ElementSet set_inverse(InverseMonoid const& S, ElementSet const& A);

  /// "s v t in A implies s in A or t in A" over every existing join.
  bool prime_property_check(Filter const& A);

  /// All ultrafilters of a boolean inverse monoid, ordered by least member.
  /// They are generated as a^ for atoms a and checked against a maximality
  /// scan over all proper filters (exhaustively when |S| <= scan_bound,
  /// on a deterministic sample otherwise). Throws PreconditionError if S is
  /// not boolean.
  std::vector<Filter> enumerate_ultrafilters(InverseMonoid const& S,
                                             std::size_t scan_bound = 64);

  /// The groupoid G(S) of ultrafilters under the filter product. Arrow i of
  /// groupoid() is ultrafilters()[i]; d(A) = A^-1 . A and r(A) = A . A^-1.
  /// The monoid must outlive this object.
  class UltrafilterGroupoid {
   public:
    /// Throws PreconditionError when S is not a boolean inverse monoid.
    explicit UltrafilterGroupoid(InverseMonoid const& S);
    // keeps a pointer to S
    explicit UltrafilterGroupoid(InverseMonoid&&) = delete;

    InverseMonoid const&       monoid() const noexcept { return *monoid_; }
    std::vector<Filter> const& ultrafilters() const noexcept { return ultrafilters_; }
    FiniteGroupoid const&      groupoid() const noexcept { return groupoid_; }
    std::size_t                size() const noexcept { return ultrafilters_.size(); }

    std::optional<Arrow> index_of(ElementSet const& members) const;

   private:
    InverseMonoid const* monoid_;
    std::vector<Filter>  ultrafilters_;
    FiniteGroupoid       groupoid_;
  };

}  // namespace stonework

#endif  // STONEWORK_FILTER_HPP_
