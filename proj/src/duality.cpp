#include "stonework/duality.hpp"

#include <chrono>
#include <map>
#include <set>

#include "stonework/errors.hpp"
#include "stonework/monoid_catalog.hpp"

namespace stonework {

  namespace {

    using Clock = std::chrono::steady_clock;

    double ms_since(Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    std::string pair_text(InverseMonoid const& S, Element s, Element t) {
      return "(" + S.label(s) + ", " + S.label(t) + ")";
    }

    // Both maps bijective and mutually inverse.
    void check_bijection(LawReport& report, std::vector<std::uint32_t>& forward,
                         std::vector<std::uint32_t>& backward, std::size_t target_size) {
      auto& law = report.add("iso.bijective");
      backward.assign(target_size, static_cast<std::uint32_t>(-1));
      for (std::uint32_t x = 0; x < forward.size(); ++x) {
        bool fresh = forward[x] < target_size && backward[forward[x]] == static_cast<std::uint32_t>(-1);
        law.check(fresh, [&] { return "collision at " + std::to_string(x); });
        if (fresh) {
          backward[forward[x]] = x;
        }
      }
      for (std::uint32_t y = 0; y < target_size; ++y) {
        law.check(backward[y] != static_cast<std::uint32_t>(-1),
                  [&] { return "not hit: " + std::to_string(y); });
      }
    }

  }  // namespace

  ElementSet basic_open(Element s, UltrafilterGroupoid const& GS) {
    ElementSet out(GS.size());
    for (std::size_t i = 0; i < GS.size(); ++i) {
      if (GS.ultrafilters()[i].contains(s)) {
        out.insert(i);
      }
    }
    return out;
  }

  CoveringFunctor functor_G_on_morphism(MonoidMorphism const& theta, UltrafilterGroupoid const& GS,
                                        UltrafilterGroupoid const& GT) {
    if (theta.source != &GS.monoid() || theta.target != &GT.monoid()) {
      throw PreconditionError("morphism does not match the ultrafilter groupoids");
    }
    auto report = validate_morphism(theta);
    if (!report.ok) {
      throw PreconditionError("not a morphism of boolean inverse monoids (" + report.failed
                              + "): " + report.detail);
    }
    CoveringFunctor f{&GT.groupoid(), &GS.groupoid(), {}};
    for (auto const& A : GT.ultrafilters()) {
      auto idx = GS.index_of(preimage(theta, A.members()));
      if (!idx) {
        throw Error("preimage of an ultrafilter is missing from G(S)");
      }
      f.arrow_map.push_back(*idx);
    }
    if (auto c = check_covering(f); !c.ok) {
      throw Error("G(theta) is not a covering functor (" + c.property + ")");
    }
    return f;
  }

  std::optional<BisectionViolation> bisection_violation(FiniteGroupoid const& G,
                                                        ElementSet const&     A) {
    std::optional<BisectionViolation> found;
    auto const members = A.to_vector();
    for (std::size_t i = 0; i < members.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto g = static_cast<Arrow>(members[i]);
        auto h = static_cast<Arrow>(members[j]);
        if (G.dom(g) == G.dom(h)) {
          found = BisectionViolation{g, h, "domain"};
          break;
        }
        if (G.ran(g) == G.ran(h)) {
          found = BisectionViolation{g, h, "range"};
          break;
        }
      }
    }
    return found;
  }

  UnionProbe probe_union(UltrafilterGroupoid const& GS, Element s, Element t) {
    UnionProbe probe;
    probe.join_exists = join(GS.monoid(), s, t).has_value();
    probe.violation   = bisection_violation(GS.groupoid(), basic_open(s, GS) | basic_open(t, GS));
    return probe;
  }

  LawReport verify_K_laws(UltrafilterGroupoid const& GS) {
    auto const& S = GS.monoid();
    auto const& G = GS.groupoid();
    auto const  n = S.size();
    LawReport   report;

    std::vector<ElementSet> K;
    K.reserve(n);
    for (Element s = 0; s < n; ++s) {
      K.push_back(basic_open(s, GS));
    }

    auto& bis = report.add("basic-open.bisection");
    auto& inv = report.add("basic-open.inverse");
    for (Element s = 0; s < n; ++s) {
      bis.check(is_bisection(G, K[s]), [&] { return S.label(s); });
      inv.check(set_inverse(G, K[s]) == K[S.inv(s)], [&] { return S.label(s); });
    }

    auto& mt   = report.add("basic-open.meet");
    auto& prod = report.add("basic-open.product");
    auto& ord  = report.add("basic-open.order");
    auto& inj  = report.add("basic-open.injective");
    auto& jn   = report.add("basic-open.join");
    auto& ub   = report.add("basic-open.union-bisection-iff-join");
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        auto describe = [&] { return pair_text(S, s, t); };
        auto m        = meet(S, s, t);
        mt.check(m.has_value() && (K[s] & K[t]) == K[*m], describe);
        prod.check(set_product(G, K[s], K[t]) == K[S.mul(s, t)], describe);
        ord.check(K[s].is_subset_of(K[t]) == S.leq(s, t), describe);
        inj.check((K[s] == K[t]) == (s == t), describe);
        auto j = join(S, s, t);
        if (j) {
          jn.check((K[s] | K[t]) == K[*j], describe);
        }
        ub.check(is_bisection(G, K[s] | K[t]) == j.has_value(), describe);
      }
    }

    {
      auto&                law = report.add("basic-open.every-bisection");
      std::set<ElementSet> opens(K.begin(), K.end());
      auto                 all = bisections_by_injections(G, G.size());
      law.check(all.size() == n, [&] {
        return std::to_string(all.size()) + " bisections for " + std::to_string(n) + " elements";
      });
      for (auto const& B : all) {
        law.check(opens.count(B) == 1, [&] {
          std::string out = "{";
          B.for_each([&](std::size_t g) { out += (out.size() > 1 ? ", " : "") + G.label(g); });
          return out + "} is no K_s";
        });
      }
    }
    {
      // Composable pairs (A, B) with AB in K_a, against the union of
      // K_b x K_c over 0 != bc <= a.
      auto& law = report.add("basic-open.multiplication-preimage");
      for (Element a = 0; a < n; ++a) {
        std::set<std::pair<Arrow, Arrow>> lhs, rhs;
        for (Arrow x = 0; x < G.size(); ++x) {
          for (Arrow y = 0; y < G.size(); ++y) {
            auto xy = G.compose(x, y);
            if (xy && K[a].contains(*xy)) {
              lhs.emplace(x, y);
            }
          }
        }
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            auto bc = S.mul(b, c);
            if (bc == S.zero() || !S.leq(bc, a)) {
              continue;
            }
            K[b].for_each([&](std::size_t x) {
              K[c].for_each([&](std::size_t y) {
                if (G.compose(static_cast<Arrow>(x), static_cast<Arrow>(y))) {
                  rhs.emplace(static_cast<Arrow>(x), static_cast<Arrow>(y));
                }
              });
            });
          }
        }
        law.check(lhs == rhs, [&] { return S.label(a); });
      }
    }
    return report;
  }

  IsoCertificate round_trip_monoid(InverseMonoid const& S, BisectionLimits const& limits) {
    auto           start = Clock::now();
    IsoCertificate cert;
    cert.direction   = "monoid";
    cert.source_size = S.size();

    UltrafilterGroupoid GS(S);
    if (GS.size() > limits.max_arrows) {
      throw BoundExceeded("G(S) has " + std::to_string(GS.size()) + " arrows, above the A(G) bound of "
                          + std::to_string(limits.max_arrows));
    }
    BisectionMonoid AG(GS.groupoid(), limits);
    auto const&     T = AG.monoid();
    cert.target_size  = T.size();
    cert.laws.add("iso.cardinality").check(S.size() == T.size(), [&] {
      return std::to_string(S.size()) + " vs " + std::to_string(T.size());
    });

    auto& found = cert.laws.add("iso.image-is-bisection");
    for (Element s = 0; s < S.size(); ++s) {
      auto idx = AG.index_of(basic_open(s, GS));
      found.check(idx.has_value(), [&] { return S.label(s); });
      cert.forward.push_back(idx.value_or(static_cast<Element>(-1)));
    }
    if (!found.ok()) {
      cert.elapsed_ms = ms_since(start);
      return cert;
    }
    check_bijection(cert.laws, cert.forward, cert.backward, T.size());

    auto  f    = [&](Element s) { return cert.forward[s]; };
    auto& mul  = cert.laws.add("iso.multiplicative");
    auto& ord  = cert.laws.add("iso.order");
    auto& mt   = cert.laws.add("iso.meet");
    auto& inv  = cert.laws.add("iso.inverse");
    auto& ends = cert.laws.add("iso.zero-and-one");
    ends.check(f(S.zero()) == T.zero() && f(S.one()) == T.one(),
               [] { return std::string("0 or 1"); });
    for (Element s = 0; s < S.size(); ++s) {
      inv.check(f(S.inv(s)) == T.inv(f(s)), [&] { return S.label(s); });
      for (Element t = 0; t < S.size(); ++t) {
        auto describe = [&] { return pair_text(S, s, t); };
        mul.check(f(S.mul(s, t)) == T.mul(f(s), f(t)), describe);
        ord.check(S.leq(s, t) == T.leq(f(s), f(t)), describe);
        auto m  = meet(S, s, t);
        auto tm = meet(T, f(s), f(t));
        mt.check(m && tm && f(*m) == *tm, describe);
      }
    }
    cert.laws.append(verify_K_laws(GS));
    cert.notes = {"finite discrete topology: every K_s is clopen and compact",
                  "unit space of G(S) is the finite discrete Stone space of E(S)",
                  "A(G(S)) is all bisections of G(S)"};
    cert.elapsed_ms = ms_since(start);
    return cert;
  }

  IsoCertificate round_trip_groupoid(FiniteGroupoid const& G, BisectionLimits const& limits) {
    auto           start = Clock::now();
    IsoCertificate cert;
    cert.direction   = "groupoid";
    cert.source_size = G.size();
    if (G.size() > limits.max_arrows) {
      throw BoundExceeded("groupoid has " + std::to_string(G.size())
                          + " arrows, above the A(G) bound of " + std::to_string(limits.max_arrows));
    }
    BisectionMonoid     AG(G, limits);
    UltrafilterGroupoid GA(AG.monoid());
    auto const&         H = GA.groupoid();
    cert.target_size      = H.size();
    cert.laws.add("iso.cardinality").check(G.size() == H.size(), [&] {
      return std::to_string(G.size()) + " vs " + std::to_string(H.size());
    });

    auto& found = cert.laws.add("iso.point-filter-is-ultrafilter");
    for (Arrow g = 0; g < G.size(); ++g) {
      auto Fg  = ultrafilter_of_point(AG, g);
      auto idx = GA.index_of(Fg.members());
      found.check(idx.has_value() && is_ultrafilter(Fg), [&] { return G.label(g); });
      cert.forward.push_back(idx.value_or(static_cast<Arrow>(-1)));
    }
    if (!found.ok()) {
      cert.elapsed_ms = ms_since(start);
      return cert;
    }
    check_bijection(cert.laws, cert.forward, cert.backward, H.size());

    auto  f   = [&](Arrow g) { return cert.forward[g]; };
    auto& str = cert.laws.add("iso.domain-range-inverse");
    auto& cmp = cert.laws.add("iso.composition");
    for (Arrow g = 0; g < G.size(); ++g) {
      str.check(f(G.dom(g)) == H.dom(f(g)) && f(G.ran(g)) == H.ran(f(g))
                    && f(G.inv(g)) == H.inv(f(g)),
                [&] { return G.label(g); });
      for (Arrow h = 0; h < G.size(); ++h) {
        auto gh  = G.compose(g, h);
        auto fgh = H.compose(f(g), f(h));
        cmp.check(gh.has_value() == fgh.has_value() && (!gh || f(*gh) == *fgh),
                  [&] { return "(" + G.label(g) + ", " + G.label(h) + ")"; });
      }
    }
    // {F_g : g in U} = K_U, so the map is a homeomorphism.
    auto& opens = cert.laws.add("iso.bisections-to-basic-opens");
    for (Element u = 0; u < AG.size(); ++u) {
      ElementSet image(H.size());
      AG.bisections()[u].for_each([&](std::size_t g) { image.insert(f(static_cast<Arrow>(g))); });
      opens.check(image == basic_open(u, GA), [&] { return AG.monoid().label(u); });
    }
    cert.notes = {"finite discrete topology: the arrow bijection is a homeomorphism",
                  "finite groupoids are hausdorff and etale with compact unit space"};
    cert.elapsed_ms = ms_since(start);
    return cert;
  }

  CliffordReport clifford_check(InverseMonoid const& S) {
    CliffordReport report;
    report.is_clifford = true;
    for (Element s = 0; s < S.size(); ++s) {
      if (S.dom(s) != S.ran(s)) {
        report.is_clifford = false;
        report.witness     = s;
        return report;
      }
    }
    UltrafilterGroupoid GS(S);
    auto&               prod = report.laws.add("clifford.inverse-products-agree");
    auto&               dr   = report.laws.add("clifford.domain-equals-range");
    for (Arrow a = 0; a < GS.size(); ++a) {
      auto const& A = GS.ultrafilters()[a];
      prod.check(filter_product(filter_inverse(A), A) == filter_product(A, filter_inverse(A)),
                 [&] { return GS.groupoid().label(a); });
      dr.check(GS.groupoid().dom(a) == GS.groupoid().ran(a),
               [&] { return GS.groupoid().label(a); });
    }
    return report;
  }

  PullbackReport weak_morphism_pullback(MonoidMorphism const& theta) {
    if (auto r = validate_weak_morphism(theta); !r.ok) {
      throw PreconditionError("map fails " + r.failed + ": " + r.detail);
    }
    auto const&    S = *theta.source;
    auto const&    T = *theta.target;
    PullbackReport report;
    for (auto const& U : enumerate_ultrafilters(T)) {
      auto pre   = preimage(theta, U.members());
      bool ultra = is_filter(S, pre) && is_ultrafilter(Filter(S, pre));
      if (U.is_idempotent()) {
        if (!ultra || !Filter(S, pre).is_idempotent()) {
          report.idempotent_ok = false;
          report.idempotent_failures.push_back(U.minimum());
        }
      } else if (!ultra) {
        (pre.empty() ? report.empty_preimage : report.non_ultra_preimage).push_back(U.minimum());
      }
    }
    return report;
  }

  LawReport check_pair_groupoid_iso(InverseMonoid const& IX, std::size_t points) {
    LawReport report;
    auto      maps = partial_bijections(points);
    auto&     set  = report.add("pair-iso.carrier");
    set.check(maps.size() == IX.size(), [] { return std::string("monoid is not I(X)"); });
    if (!set.ok()) {
      return report;
    }
    UltrafilterGroupoid GS(IX);
    auto const&         G = GS.groupoid();
    auto const          P = pair_groupoid(points);

    std::vector<Arrow> forward;
    auto&              atom = report.add("pair-iso.ultrafilter-is-single-mapping");
    for (auto const& U : GS.ultrafilters()) {
      auto const& a = maps[U.minimum()];
      atom.check(a.rank() == 1, [&] { return a.label(); });
      for (std::size_t j = 0; j < points; ++j) {
        if (a.image[j] >= 0) {
          forward.push_back(static_cast<Arrow>(a.image[j] * points + j));
        }
      }
    }
    if (!atom.ok()) {
      return report;
    }
    std::vector<std::uint32_t> fw(forward.begin(), forward.end()), bw;
    check_bijection(report, fw, bw, P.size());
    report.add("pair-iso.cardinality").check(G.size() == points * points, [&] {
      return std::to_string(G.size()) + " arrows";
    });
    auto& str = report.add("pair-iso.domain-range-inverse");
    auto& cmp = report.add("pair-iso.composition");
    for (Arrow g = 0; g < G.size(); ++g) {
      str.check(forward[G.dom(g)] == P.dom(forward[g]) && forward[G.ran(g)] == P.ran(forward[g])
                    && forward[G.inv(g)] == P.inv(forward[g]),
                [&] { return G.label(g); });
      for (Arrow h = 0; h < G.size(); ++h) {
        auto gh = G.compose(g, h);
        auto ph = P.compose(forward[g], forward[h]);
        cmp.check(gh.has_value() == ph.has_value() && (!gh || forward[*gh] == *ph),
                  [&] { return G.label(g) + " " + G.label(h); });
      }
    }
    return report;
  }

  LawResult check_naturality(MonoidMorphism const& theta, UltrafilterGroupoid const& GS,
                             UltrafilterGroupoid const& GT) {
    auto      f = functor_G_on_morphism(theta, GS, GT);
    LawResult law{"duality.naturality", 0, 0, {}};
    for (Element s = 0; s < GS.monoid().size(); ++s) {
      auto       Ks = basic_open(s, GS);
      ElementSet pulled(GT.size());
      for (Arrow a = 0; a < GT.size(); ++a) {
        if (Ks.contains(f.arrow_map[a])) {
          pulled.insert(a);
        }
      }
      law.check(pulled == basic_open(theta(s), GT), [&] { return GS.monoid().label(s); });
    }
    return law;
  }

}  // namespace stonework
