#ifndef STONEWORK_ELEMENT_SET_HPP_
#define STONEWORK_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace stonework {

  /// Fixed-universe bitset over the indices 0..universe-1.
  ///
  /// Used for filters, bisections and down/up sets. Ordering compares the
  /// sets as unsigned integers (bit i has weight 2^i), which gives the
  /// "by member bitset value" ordering used when enumerating bisections.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<std::size_t> members)
        : ElementSet(universe) {
      for (auto m : members) {
        insert(m);
      }
    }

    static ElementSet full(std::size_t universe) {
      ElementSet s(universe);
      for (std::size_t i = 0; i < universe; ++i) {
        s.insert(i);
      }
      return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::size_t i) const noexcept {
      return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
    }
    void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }
    bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    /// Smallest member, or universe() when empty.
    std::size_t first() const noexcept { return next(0); }
    /// Smallest member >= from, or universe() when there is none.
    std::size_t next(std::size_t from) const noexcept {
      if (from >= universe_) {
        return universe_;
      }
      std::size_t wi = from >> 6;
      std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
      while (true) {
        if (w != 0) {
          std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
          return i < universe_ ? i : universe_;
        }
        if (++wi >= words_.size()) {
          return universe_;
        }
        w = words_[wi];
      }
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t i = first(); i < universe_; i = next(i + 1)) {
        f(i);
      }
    }

    std::vector<std::size_t> to_vector() const {
      std::vector<std::size_t> out;
      for_each([&](std::size_t i) { out.push_back(i); });
      return out;
    }

    bool is_subset_of(ElementSet const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
          return false;
        }
      }
      return true;
    }
    bool intersects(ElementSet const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    ElementSet& operator&=(ElementSet const& o) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= o.words_[i];
      }
      return *this;
    }
    ElementSet& operator|=(ElementSet const& o) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= o.words_[i];
      }
      return *this;
    }
    ElementSet& operator-=(ElementSet const& o) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~o.words_[i];
      }
      return *this;
    }
    friend ElementSet operator&(ElementSet a, ElementSet const& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, ElementSet const& b) { return a |= b; }
    friend ElementSet operator-(ElementSet a, ElementSet const& b) { return a -= b; }

    friend bool operator==(ElementSet const& a, ElementSet const& b) noexcept {
      return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(ElementSet const& a,
                                            ElementSet const& b) noexcept {
      if (auto c = a.universe_ <=> b.universe_; c != 0) {
        return c;
      }
      for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
      std::size_t h = universe_;
      for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

   private:
    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept { return s.hash(); }
  };

}  // namespace stonework

#endif  // STONEWORK_ELEMENT_SET_HPP_
