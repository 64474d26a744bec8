#include "stonework/filter.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "stonework/errors.hpp"

namespace stonework {

  ElementSet upward_closure(InverseMonoid const& S, ElementSet const& A) {
    ElementSet out(S.size());
    A.for_each([&](std::size_t a) { out |= S.up_set(static_cast<Element>(a)); });
    return out;
  }

  bool is_filter(InverseMonoid const& S, ElementSet const& A) {
    if (A.universe() != S.size() || A.empty()) {
      return false;
    }
    if (!(upward_closure(S, A) == A)) {
      return false;
    }
    auto const members = A.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto lower = S.down_set(static_cast<Element>(members[i]))
                     & S.down_set(static_cast<Element>(members[j]));
        if (!lower.intersects(A)) {
          return false;
        }
      }
    }
    return true;
  }

  Filter::Filter(InverseMonoid const& S, ElementSet members, Element minimum)
      : carrier_(&S),
        members_(std::move(members)),
        proper_(!members_.contains(S.zero())),
        idempotent_(members_.intersects(S.idempotents())),
        minimum_(minimum) {}

  Filter::Filter(InverseMonoid const& S, ElementSet members) : carrier_(&S) {
    if (!is_filter(S, members)) {
      throw InvalidInput("subset is not a filter");
    }
    members_    = std::move(members);
    proper_     = !members_.contains(S.zero());
    idempotent_ = members_.intersects(S.idempotents());
    bool found  = false;
    members_.for_each([&](std::size_t m) {
      if (!found && members_.is_subset_of(S.up_set(static_cast<Element>(m)))) {
        minimum_ = static_cast<Element>(m);
        found    = true;
      }
    });
    if (!found) {
      throw InvalidInput("filter without a least member");
    }
  }

  Filter::Filter(Filter const& other)
      : carrier_(other.carrier_),
        members_(other.members_),
        proper_(other.proper_),
        idempotent_(other.idempotent_),
        minimum_(other.minimum_),
        ultra_(other.ultra_.load(std::memory_order_relaxed)) {}

  Filter& Filter::operator=(Filter const& other) {
    carrier_    = other.carrier_;
    members_    = other.members_;
    proper_     = other.proper_;
    idempotent_ = other.idempotent_;
    minimum_    = other.minimum_;
    ultra_.store(other.ultra_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
  }

  bool Filter::is_ultra() const {
    int cached = ultra_.load(std::memory_order_relaxed);
    if (cached < 0) {
      cached = is_ultrafilter(*this) ? 1 : 0;
      ultra_.store(cached, std::memory_order_relaxed);
    }
    return cached == 1;
  }

  Filter principal_filter(InverseMonoid const& S, Element s) {
    if (s == S.zero()) {
      throw PreconditionError("the principal filter of 0 is not proper");
    }
    return Filter(S, S.up_set(s), s);
  }

  std::vector<Filter> all_filters(InverseMonoid const& S) {
    std::vector<Filter> out;
    out.reserve(S.size());
    for (Element s = 0; s < S.size(); ++s) {
      out.push_back(Filter(S, S.up_set(s), s));
    }
    return out;
  }

  bool is_ultrafilter(Filter const& F) {
    if (!F.is_proper()) {
      return false;
    }
    auto const& S = F.carrier();
    for (Element s = 0; s < S.size(); ++s) {
      if (F.contains(s)) {
        continue;
      }
      bool meets_all = true;
      F.members().for_each([&](std::size_t a) {
        auto m = meet(S, s, static_cast<Element>(a));
        if (m && *m == S.zero()) {
          meets_all = false;
        }
      });
      if (meets_all) {
        return false;
      }
    }
    return true;
  }

  bool is_maximal_proper_filter(Filter const& F) {
    if (!F.is_proper()) {
      return false;
    }
    for (auto const& G : all_filters(F.carrier())) {
      if (G.is_proper() && F.members().is_subset_of(G.members()) && !(G == F)) {
        return false;
      }
    }
    return true;
  }

  ElementSet set_product(InverseMonoid const& S, ElementSet const& A, ElementSet const& B) {
    ElementSet out(S.size());
    A.for_each([&](std::size_t a) {
      B.for_each([&](std::size_t b) {
        out.insert(S.mul(static_cast<Element>(a), static_cast<Element>(b)));
      });
    });
    return out;
  }

  ElementSet set_inverse(InverseMonoid const& S, ElementSet const& A) {
    ElementSet out(S.size());
    A.for_each([&](std::size_t a) { out.insert(S.inv(static_cast<Element>(a))); });
    return out;
  }

  Filter filter_inverse(Filter const& F) {
    auto const& S = F.carrier();
    return Filter(S, set_inverse(S, F.members()), S.inv(F.minimum()));
  }

  Filter filter_product(Filter const& A, Filter const& B) {
    if (&A.carrier() != &B.carrier()) {
      throw PreconditionError("filters over different monoids");
    }
    auto const& S = A.carrier();
    // (AB)^ = (ab)^ for the least members a, b; recomputed from the full
    // set product so the result does not depend on that shortcut.
    ElementSet closure = upward_closure(S, set_product(S, A.members(), B.members()));
    return Filter(S, std::move(closure));
  }

  bool prime_property_check(Filter const& A) {
    auto const& S = A.carrier();
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = s + 1; t < S.size(); ++t) {
        auto j = join(S, s, t);
        if (j && A.contains(*j) && !A.contains(s) && !A.contains(t)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Filter> enumerate_ultrafilters(InverseMonoid const& S, std::size_t scan_bound) {
    if (!check_boolean(S).is_boolean) {
      throw PreconditionError("ultrafilter enumeration needs a boolean inverse monoid");
    }
    std::vector<Filter> out;
    S.atoms().for_each([&](std::size_t a) {
      out.push_back(principal_filter(S, static_cast<Element>(a)));
    });
    for (auto const& F : out) {
      if (!is_ultrafilter(F)) {
        throw Error("atom filter " + S.label(F.minimum()) + " fails the ultrafilter criterion");
      }
    }

    // Every ultrafilter is some proper s^; check that exactly the atom
    // filters are maximal.
    std::vector<Element> scan;
    if (S.size() <= scan_bound) {
      for (Element s = 0; s < S.size(); ++s) {
        scan.push_back(s);
      }
    } else {
      std::mt19937_64                        rng(0xf117e5);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(S.size() - 1));
      for (std::size_t i = 0; i < scan_bound; ++i) {
        scan.push_back(pick(rng));
      }
    }
    for (auto s : scan) {
      if (s == S.zero()) {
        continue;
      }
      auto F = principal_filter(S, s);
      if (is_maximal_proper_filter(F) != S.atoms().contains(s)) {
        throw Error("maximality scan disagrees with the atom filters at " + S.label(s));
      }
    }

    std::sort(out.begin(), out.end(), [](Filter const& a, Filter const& b) {
      auto ma = a.members().first(), mb = b.members().first();
      return ma != mb ? ma < mb : a.members() < b.members();
    });
    return out;
  }

  UltrafilterGroupoid::UltrafilterGroupoid(InverseMonoid const& S)
      : monoid_(&S), ultrafilters_(enumerate_ultrafilters(S)) {
    auto const                    m = ultrafilters_.size();
    std::map<ElementSet, Arrow>   index;
    for (std::size_t i = 0; i < m; ++i) {
      index.emplace(ultrafilters_[i].members(), static_cast<Arrow>(i));
    }
    auto lookup = [&](Filter const& F, char const* what) {
      auto it = index.find(F.members());
      if (it == index.end()) {
        throw Error(std::string(what) + " of ultrafilters is not an ultrafilter");
      }
      return it->second;
    };

    GroupoidTable t;
    t.size = m;
    t.compose.assign(m * m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      auto const& A   = ultrafilters_[i];
      auto        Ainv = filter_inverse(A);
      t.inv.push_back(lookup(Ainv, "inverse"));
      t.dom.push_back(lookup(filter_product(Ainv, A), "domain"));
      t.ran.push_back(lookup(filter_product(A, Ainv), "range"));
      t.labels.push_back(S.label(A.minimum()) + "^");
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (t.dom[i] == t.ran[j]) {
          t.compose[i * m + j] = static_cast<std::int32_t>(
              lookup(filter_product(ultrafilters_[i], ultrafilters_[j]), "composite"));
        }
      }
    }
    groupoid_ = FiniteGroupoid(std::move(t));
  }

  std::optional<Arrow> UltrafilterGroupoid::index_of(ElementSet const& members) const {
    for (std::size_t i = 0; i < ultrafilters_.size(); ++i) {
      if (ultrafilters_[i].members() == members) {
        return static_cast<Arrow>(i);
      }
    }
    return std::nullopt;
  }

}  // namespace stonework
