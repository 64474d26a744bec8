#ifndef STONEWORK_POLYCYCLIC_HPP_
#define STONEWORK_POLYCYCLIC_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stonework::poly {

  /// Letters are 0-based internally and printed 1-based as a1 .. an.
  using Letter = std::uint8_t;
  using Word   = std::vector<Letter>;

  constexpr std::size_t min_arity = 2;
  constexpr std::size_t max_arity = 6;

  bool is_prefix(Word const& p, Word const& w);
  bool prefix_comparable(Word const& a, Word const& b);
  Word concat(Word const& a, Word const& b);
  /// w with its first k letters removed.
  Word drop(Word const& w, std::size_t k);

  /// "a1a2"; the empty word prints as "e".
  std::string format_word(Word const& w);
  /// Accepts "e" or "" for the empty word. Throws InvalidInput on a letter
  /// outside 1..arity.
  Word parse_word(std::string_view text, std::size_t arity);

  /// xy^-1 in P_n, or zero.
  struct PolyElement {
    bool zero = false;
    Word x;
    Word y;

    static PolyElement make_zero() { return PolyElement{true, {}, {}}; }
    static PolyElement one() { return PolyElement{false, {}, {}}; }
    static PolyElement pair(Word x, Word y) { return PolyElement{false, std::move(x), std::move(y)}; }

    PolyElement inverse() const { return zero ? *this : pair(y, x); }
    bool is_idempotent() const { return zero || x == y; }

    friend bool operator==(PolyElement const&, PolyElement const&) = default;
    friend auto operator<=>(PolyElement const&, PolyElement const&) = default;
  };

  PolyElement poly_mul(PolyElement const& a, PolyElement const& b);
  /// Natural partial order: a = b e for an idempotent e.
  bool poly_leq(PolyElement const& a, PolyElement const& b);

  /// "0", "1", "a1", "a2*", "a1.a2*".
  std::string format_poly(PolyElement const& a);
  PolyElement parse_poly(std::string_view text, std::size_t arity);

  /// An element of C_n: a finite set of cones U_{x,y} that is a bisection,
  /// kept as the unique set of maximal cones in lexicographic order. The
  /// empty set is the zero and {(e, e)} the identity.
  class CnElement {
   public:
    using Cone = std::pair<Word, Word>;

    explicit CnElement(std::size_t arity);
    /// Validates the arity, the letters and the bisection condition, then
    /// canonicalises. Throws InvalidInput otherwise.
    CnElement(std::size_t arity, std::vector<Cone> cones);

    static CnElement zero(std::size_t arity) { return CnElement(arity); }
    static CnElement one(std::size_t arity) { return CnElement(arity, {Cone{}}); }

    std::size_t              arity() const noexcept { return arity_; }
    std::vector<Cone> const& cones() const noexcept { return cones_; }
    bool                     is_zero() const noexcept { return cones_.empty(); }
    /// Longest word in either coordinate.
    std::size_t max_length() const noexcept;

    CnElement inverse() const;

    friend bool operator==(CnElement const&, CnElement const&) = default;

   private:
    struct Trusted {};
    CnElement(std::size_t arity, std::vector<Cone> cones, Trusted);
    friend CnElement canonicalize(std::size_t arity, std::vector<CnElement::Cone> cones);

    std::size_t       arity_;
    std::vector<Cone> cones_;
  };

  /// Merges complete sibling families {(x ai, y ai)} into (x, y) until none
  /// is left, then sorts. The cones must already be pairwise disjoint with
  /// prefix-incomparable coordinates.
  CnElement canonicalize(std::size_t arity, std::vector<CnElement::Cone> cones);

  /// The finite set of cones is a bisection: after dropping cones contained
  /// in another, both coordinates are pairwise prefix-incomparable.
  bool cones_form_bisection(std::vector<CnElement::Cone> const& cones);

  /// U_{x,y} is contained in U_{x',y'}.
  bool cone_contains(CnElement::Cone const& outer, CnElement::Cone const& inner);

  CnElement psi(PolyElement const& a, std::size_t arity);
  CnElement cn_mul(CnElement const& A, CnElement const& B);

  /// Join in C_n when the union is a bisection; nullopt means Incompatible.
  std::optional<CnElement> cn_join(CnElement const& A, CnElement const& B);

  /// Pairwise prefix-incomparable, and every long enough word has a member
  /// as a prefix.
  bool is_maximal_prefix_code(std::vector<Word> const& code, std::size_t arity);
  /// Membership of the unit group V_{n,1}.
  bool is_unit(CnElement const& A);

  /// "{a1/a1a1, a2a1/a1a2, a2a2/a2}"; zero is "{}".
  std::string format_cn(CnElement const& A);
  CnElement   parse_cn(std::string_view text, std::size_t arity);

  /// Arrows of the bisection truncated to source words of length `depth`:
  /// source yw |-> target xw for every cone (x, y) and every w with
  /// |yw| = depth. Throws PreconditionError when depth < max_length().
  std::map<Word, Word> finite_depth_oracle(CnElement const& A, std::size_t depth);

  /// u v^w with v primitive and the preperiod u as short as possible.
  class EventuallyPeriodicWord {
   public:
    /// Throws InvalidInput when v is empty.
    EventuallyPeriodicWord(Word u, Word v);

    Word const& preperiod() const noexcept { return u_; }
    Word const& period() const noexcept { return v_; }

    Letter at(std::size_t i) const;
    Word   prefix(std::size_t length) const;
    EventuallyPeriodicWord drop(std::size_t k) const;
    EventuallyPeriodicWord prepend(Word const& p) const;

    friend bool operator==(EventuallyPeriodicWord const&, EventuallyPeriodicWord const&) = default;
    friend auto operator<=>(EventuallyPeriodicWord const&, EventuallyPeriodicWord const&) = default;

   private:
    Word u_;
    Word v_;
  };

  /// "a2(a1)^w"; an empty preperiod prints as "(a1)^w".
  std::string            format_infinite(EventuallyPeriodicWord const& w);
  EventuallyPeriodicWord parse_infinite(std::string_view text, std::size_t arity);

  /// The arrow (x w, |x| - |y|, y w) of the Cuntz groupoid. Stored with the
  /// common trailing letters of x and y pushed into w, which makes the
  /// representation unique.
  class CuntzArrow {
   public:
    CuntzArrow(Word x, Word y, EventuallyPeriodicWord w);
    /// Checks k = |x| - |y|. Throws InvalidInput otherwise.
    CuntzArrow(Word x, std::int64_t k, Word y, EventuallyPeriodicWord w);

    static CuntzArrow identity(EventuallyPeriodicWord const& z) { return CuntzArrow({}, {}, z); }

    Word const&                   x() const noexcept { return x_; }
    Word const&                   y() const noexcept { return y_; }
    EventuallyPeriodicWord const& tail() const noexcept { return w_; }
    std::int64_t                  k() const noexcept {
      return static_cast<std::int64_t>(x_.size()) - static_cast<std::int64_t>(y_.size());
    }
    EventuallyPeriodicWord target() const { return w_.prepend(x_); }
    EventuallyPeriodicWord source() const { return w_.prepend(y_); }

    CuntzArrow inverse() const { return CuntzArrow(y_, x_, w_); }
    bool       is_identity() const { return x_.empty() && y_.empty(); }

    friend bool operator==(CuntzArrow const&, CuntzArrow const&) = default;

   private:
    Word                   x_;
    Word                   y_;
    EventuallyPeriodicWord w_;
  };

  std::string format_arrow(CuntzArrow const& g);

  /// gh, defined when the source of g equals the target of h.
  std::optional<CuntzArrow> cuntz_compose(CuntzArrow const& g, CuntzArrow const& h);

  /// The ultrafilter (xy^-1 H_z)^ with H_z = {pp^-1 : p prefix of z} as an
  /// arrow. Throws PreconditionError unless y is a prefix of z.
  CuntzArrow ultrafilter_to_arrow(PolyElement const& rep, EventuallyPeriodicWord const& z);

  struct UltrafilterPoint {
    PolyElement            rep;
    EventuallyPeriodicWord z;
    friend bool operator==(UltrafilterPoint const&, UltrafilterPoint const&) = default;
  };
  /// Shortest representative together with the source word.
  UltrafilterPoint arrow_to_ultrafilter(CuntzArrow const& g);

  /// a in the ultrafilter of g, i.e. g lies in U_{p,q}. Zero is never a
  /// member.
  bool ultrafilter_contains(CuntzArrow const& g, PolyElement const& a);

  /// Random generation with a caller-owned engine.
  Word       random_word(std::mt19937_64& rng, std::size_t arity, std::size_t max_length);
  /// A maximal prefix code grown from {e} by splitting `splits` leaves.
  std::vector<Word> random_maximal_code(std::mt19937_64& rng, std::size_t arity,
                                        std::size_t splits);
  /// A random element of C_n: part of a random pairing of two maximal codes.
  CnElement  random_cn(std::mt19937_64& rng, std::size_t arity, std::size_t splits);
  /// A random unit: a full pairing of two maximal codes of equal size.
  CnElement  random_unit(std::mt19937_64& rng, std::size_t arity, std::size_t splits);
  EventuallyPeriodicWord random_infinite(std::mt19937_64& rng, std::size_t arity,
                                         std::size_t max_preperiod, std::size_t max_period);

}  // namespace stonework::poly

#endif  // STONEWORK_POLYCYCLIC_HPP_
