#ifndef STONEWORK_INVERSE_MONOID_HPP_
#define STONEWORK_INVERSE_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stonework/element_set.hpp"

namespace stonework {

  using Element = std::uint32_t;

  /// Limits applied when an InverseMonoid is constructed from a table.
  struct MonoidLimits {
    /// Largest accepted number of elements.
    std::size_t max_size = 4096;
    /// Associativity is checked on every triple up to this size.
    std::size_t exhaustive_associativity = 256;
    /// Number of random triples checked above the exhaustive bound.
    std::size_t sampled_triples = 1000000;
    std::uint64_t seed = 0x5eed;
  };

  /// Raw data of a finite monoid with zero: a dense multiplication table.
  struct MonoidTable {
    std::size_t              size = 0;
    Element                  zero = 0;
    Element                  one  = 0;
    std::vector<Element>     inv;
    std::vector<Element>     mul;  // row-major, mul[a * size + b] = ab
    std::vector<std::string> labels;
  };

  struct OrderData {
    /// leq[t] is the down-set of t: every s with s <= t.
    std::vector<ElementSet> leq;
    ElementSet              idempotents;
    ElementSet              atoms;

    bool holds(Element s, Element t) const { return leq[t].contains(s); }
  };

  enum class BooleanAxiom { BM1, BM2, BM3 };

  std::string_view to_string(BooleanAxiom axiom) noexcept;

  struct BooleanCertificate {
    struct Violation {
      BooleanAxiom         axiom;
      std::vector<Element> elements;
      std::string          detail;
    };

    bool                     is_boolean = false;
    std::optional<Violation> witness;
  };

  /// A finite inverse monoid with zero, given by its full multiplication
  /// table. Elements are the dense indices 0..size()-1.
  ///
  /// The constructor verifies every inverse monoid axiom and precomputes the
  /// natural partial order, so all accessors are O(1) or a bitset operation.
  /// Instances are immutable.
  class InverseMonoid {
   public:
    InverseMonoid() = default;

    /// Throws InvalidInput if the table is not an inverse monoid with zero
    /// and BoundExceeded if it is larger than limits.max_size.
    explicit InverseMonoid(MonoidTable table, MonoidLimits const& limits = {});

    std::size_t size() const noexcept { return size_; }
    Element     zero() const noexcept { return zero_; }
    Element     one() const noexcept { return one_; }

    Element mul(Element a, Element b) const noexcept { return mul_[a * size_ + b]; }
    Element inv(Element a) const noexcept { return inv_[a]; }
    /// d(s) = s^-1 s
    Element dom(Element s) const noexcept { return mul(inv(s), s); }
    /// r(s) = s s^-1
    Element ran(Element s) const noexcept { return mul(s, inv(s)); }

    bool is_idempotent(Element s) const noexcept { return mul(s, s) == s; }
    ElementSet const&           idempotents() const noexcept { return order_.idempotents; }
    std::vector<Element> const& idempotent_list() const noexcept { return idempotent_list_; }

    bool leq(Element s, Element t) const noexcept { return order_.leq[t].contains(s); }
    ElementSet const& down_set(Element t) const noexcept { return order_.leq[t]; }
    ElementSet const& up_set(Element s) const noexcept { return up_[s]; }
    ElementSet const& atoms() const noexcept { return order_.atoms; }
    OrderData const&  order() const noexcept { return order_; }

    std::string const& label(Element s) const { return labels_[s]; }
    std::vector<std::string> const& labels() const noexcept { return labels_; }
    /// Element whose label is `name`, if any.
    std::optional<Element> find_label(std::string_view name) const;

    MonoidTable table() const;

    friend bool operator==(InverseMonoid const& a, InverseMonoid const& b) {
      return a.size_ == b.size_ && a.zero_ == b.zero_ && a.one_ == b.one_
             && a.mul_ == b.mul_ && a.inv_ == b.inv_;
    }

   private:
    std::size_t              size_ = 0;
    Element                  zero_ = 0;
    Element                  one_  = 0;
    std::vector<Element>     mul_;
    std::vector<Element>     inv_;
    std::vector<std::string> labels_;
    OrderData                order_;
    std::vector<ElementSet>  up_;
    std::vector<Element>     idempotent_list_;
  };

  /// d(s) = s^-1 s.
  inline Element dom(InverseMonoid const& S, Element s) { return S.dom(s); }

  /// The natural partial order recomputed from its definition: s <= t iff
  /// s = te for some idempotent e.
  OrderData natural_order(InverseMonoid const& S);

  bool compatible(InverseMonoid const& S, Element s, Element t);
  bool orthogonal(InverseMonoid const& S, Element s, Element t);

  /// Greatest lower bound in the natural partial order; nullopt if absent.
  std::optional<Element> meet(InverseMonoid const& S, Element s, Element t);
  /// Least upper bound in the natural partial order; nullopt if absent.
  std::optional<Element> join(InverseMonoid const& S, Element s, Element t);

  /// Complement of an idempotent inside the semilattice E(S), if it exists.
  std::optional<Element> idempotent_complement(InverseMonoid const& S, Element e);

  /// t \ s for s <= t, computed as t (d(t) and d(s)') in E(S).
  /// Throws PreconditionError if s is not below t or d(s) has no complement.
  Element relative_complement(InverseMonoid const& S, Element s, Element t);

  /// The compatible join assembled from three pairwise orthogonal pieces,
  /// (s and t) v (s \ s and t) v (t \ s and t). nullopt when s and t are not
  /// compatible or a piece is missing (non-boolean input).
  std::optional<Element> join_by_decomposition(InverseMonoid const& S, Element s, Element t);

  /// Decides BM1-BM3. On failure the witness is the first violation in
  /// index-ascending scan order.
  BooleanCertificate check_boolean(InverseMonoid const& S);

}  // namespace stonework

#endif  // STONEWORK_INVERSE_MONOID_HPP_
