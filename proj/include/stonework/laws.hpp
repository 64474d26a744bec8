#ifndef STONEWORK_LAWS_HPP_
#define STONEWORK_LAWS_HPP_

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "stonework/inverse_monoid.hpp"

namespace stonework {

  /// Outcome of checking one law over all of its instances.
  struct LawResult {
    std::string              name;
    std::size_t              instances = 0;
    std::size_t              failures  = 0;
    std::vector<std::string> witnesses;  // first few failures only

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
      ++instances;
      if (!ok) {
        ++failures;
        if (witnesses.size() < 5) {
          witnesses.push_back(describe());
        }
      }
    }
    bool ok() const noexcept { return failures == 0; }
  };

  struct LawReport {
    std::deque<LawResult> laws;  // deque: add() references stay valid

    LawResult& add(std::string name) {
      laws.push_back(LawResult{std::move(name), 0, 0, {}});
      return laws.back();
    }
    void append(LawReport const& other) {
      laws.insert(laws.end(), other.laws.begin(), other.laws.end());
    }
    LawResult const* find(std::string const& name) const {
      for (auto const& l : laws) {
        if (l.name == name) {
          return &l;
        }
      }
      return nullptr;
    }
    std::size_t failures() const noexcept {
      std::size_t f = 0;
      for (auto const& l : laws) {
        f += l.failures;
      }
      return f;
    }
    bool ok() const noexcept { return failures() == 0; }
  };

  /// Inverse-monoid axioms of the order: the natural partial order against
  /// its definition and the s = t d(s) formula, plus the order, meet, join
  /// and relative-complement identities. Laws that need a boolean inverse monoid
  /// report a single failed instance when S is not boolean.
  LawReport check_order_laws(InverseMonoid const& S);

  /// Filter, ultrafilter and coset identities, the inverse semigroup L(S) of all
  /// filters, and the three characterisations of ultrafilters through
  /// F^-1 . F. Requires a boolean inverse monoid.
  LawReport check_filter_laws(InverseMonoid const& S);

}  // namespace stonework

#endif  // STONEWORK_LAWS_HPP_
