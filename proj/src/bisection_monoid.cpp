#include "stonework/bisection_monoid.hpp"

#include "stonework/errors.hpp"

namespace stonework {

  namespace {
    std::string bisection_label(FiniteGroupoid const& G, ElementSet const& A) {
      std::string out = "{";
      A.for_each([&](std::size_t g) {
        out += (out.size() > 1 ? "," : "") + G.label(static_cast<Arrow>(g));
      });
      return out + "}";
    }
  }  // namespace

  BisectionMonoid::BisectionMonoid(FiniteGroupoid G, BisectionLimits const& limits)
      : groupoid_(std::move(G)),
        bisections_(bisections_by_injections(groupoid_, limits.max_arrows)) {
    auto const n = bisections_.size();
    if (n > limits.max_size) {
      throw BoundExceeded("A(G) would have " + std::to_string(n) + " elements, above "
                          + std::to_string(limits.max_size));
    }
    for (std::size_t i = 0; i < n; ++i) {
      index_.emplace(bisections_[i], static_cast<Element>(i));
    }
    MonoidTable t;
    t.size = n;
    t.zero = index_.at(ElementSet(groupoid_.size()));
    t.one  = index_.at(groupoid_.identities());
    t.mul.resize(n * n);
    t.inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      t.labels.push_back(bisection_label(groupoid_, bisections_[a]));
      auto inv = set_inverse(groupoid_, bisections_[a]);
      t.inv[a] = index_.at(inv);
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = set_product(groupoid_, bisections_[a], bisections_[b]);
        auto it = index_.find(ab);
        if (it == index_.end()) {
          throw Error("product of bisections is not a bisection");
        }
        t.mul[a * n + b] = it->second;
      }
    }
    MonoidLimits ml;
    ml.max_size = limits.max_size;
    monoid_     = std::make_shared<InverseMonoid const>(std::move(t), ml);
  }

  std::optional<Element> BisectionMonoid::index_of(ElementSet const& bisection) const {
    auto it = index_.find(bisection);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Filter ultrafilter_of_point(BisectionMonoid const& AG, Arrow g) {
    ElementSet members(AG.size());
    for (std::size_t i = 0; i < AG.size(); ++i) {
      if (AG.bisections()[i].contains(g)) {
        members.insert(i);
      }
    }
    return Filter(AG.monoid(), std::move(members));
  }

  MonoidMorphism pullback_bisections(CoveringFunctor const& f, BisectionMonoid const& AG,
                                     BisectionMonoid const& AH) {
    auto report = check_covering(f);
    if (!report.ok) {
      throw PreconditionError("not a covering functor (" + report.property + ")");
    }
    auto const& G = AG.groupoid();
    auto const& H = AH.groupoid();
    if (f.source->size() != G.size() || f.target->size() != H.size()) {
      throw PreconditionError("functor does not match the bisection monoids");
    }
    MonoidMorphism out{&AH.monoid(), &AG.monoid(), {}};
    for (auto const& B : AH.bisections()) {
      ElementSet pre(G.size());
      for (Arrow g = 0; g < G.size(); ++g) {
        if (B.contains(f.arrow_map[g])) {
          pre.insert(g);
        }
      }
      auto idx = AG.index_of(pre);
      if (!idx) {
        throw Error("preimage of a bisection is not a bisection");
      }
      out.map.push_back(*idx);
    }
    return out;
  }

}  // namespace stonework
