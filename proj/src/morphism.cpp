#include "stonework/morphism.hpp"

#include "stonework/errors.hpp"
#include "stonework/filter.hpp"

namespace stonework {

  MonoidMorphism identity_morphism(InverseMonoid const& S) {
    MonoidMorphism out{&S, &S, {}};
    for (Element s = 0; s < S.size(); ++s) {
      out.map.push_back(s);
    }
    return out;
  }

  MonoidMorphism compose_morphisms(MonoidMorphism const& f, MonoidMorphism const& g) {
    if (f.target != g.source) {
      throw PreconditionError("morphisms are not composable");
    }
    MonoidMorphism out{f.source, g.target, {}};
    for (auto v : f.map) {
      out.map.push_back(g.map[v]);
    }
    return out;
  }

  ElementSet preimage(MonoidMorphism const& theta, ElementSet const& A) {
    ElementSet out(theta.source->size());
    for (Element s = 0; s < theta.source->size(); ++s) {
      if (A.contains(theta.map[s])) {
        out.insert(s);
      }
    }
    return out;
  }

  namespace {
    MorphismReport failed(std::string stage, std::vector<Element> witness, std::string detail) {
      return MorphismReport{false, std::move(stage), std::move(witness), std::move(detail)};
    }
  }  // namespace

  MorphismReport validate_weak_morphism(MonoidMorphism const& theta) {
    auto const& S = *theta.source;
    auto const& T = *theta.target;
    if (theta.map.size() != S.size()) {
      return failed("homomorphism", {}, "element map has the wrong length");
    }
    for (auto v : theta.map) {
      if (v >= T.size()) {
        return failed("homomorphism", {}, "image out of range");
      }
    }
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (theta(S.mul(s, t)) != T.mul(theta(s), theta(t))) {
          return failed("homomorphism", {s, t}, "theta(st) != theta(s) theta(t)");
        }
      }
    }

    if (theta(S.zero()) != T.zero() || theta(S.one()) != T.one()) {
      return failed("M1", {S.zero(), S.one()}, "0 or 1 not preserved");
    }
    for (auto e : S.idempotent_list()) {
      for (auto f : S.idempotent_list()) {
        auto j = join(S, e, f);
        if (!j) {
          continue;
        }
        auto tj = join(T, theta(e), theta(f));
        if (!tj || *tj != theta(*j)) {
          return failed("M1", {e, f}, "join of idempotents not preserved");
        }
      }
      auto c = idempotent_complement(S, e);
      if (c) {
        auto tc = idempotent_complement(T, theta(e));
        if (!tc || *tc != theta(*c)) {
          return failed("M1", {e}, "complement not preserved");
        }
      }
    }

    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = s + 1; t < S.size(); ++t) {
        auto m = meet(S, s, t);
        if (!m) {
          continue;
        }
        auto tm = meet(T, theta(s), theta(t));
        if (!tm || *tm != theta(*m)) {
          return failed("M2", {s, t}, "meet not preserved");
        }
      }
    }
    return MorphismReport{true, {}, {}, {}};
  }

  MorphismReport validate_morphism(MonoidMorphism const& theta) {
    if (auto r = validate_weak_morphism(theta); !r.ok) {
      return r;
    }
    auto const& S = *theta.source;
    auto const& T = *theta.target;
    for (auto const& U : enumerate_ultrafilters(T)) {
      auto pre = preimage(theta, U.members());
      if (!is_filter(S, pre)) {
        return failed("M3", {U.minimum()},
                      "preimage of " + T.label(U.minimum()) + "^ is not a filter");
      }
      if (!is_ultrafilter(Filter(S, pre))) {
        return failed("M3", {U.minimum()},
                      "preimage of " + T.label(U.minimum()) + "^ is not an ultrafilter");
      }
    }
    return MorphismReport{true, {}, {}, {}};
  }

}  // namespace stonework
