#include "stonework/laws.hpp"

#include <map>

#include "stonework/filter.hpp"

namespace stonework {

  namespace {

    std::string pair_text(InverseMonoid const& S, Element s, Element t) {
      return "(" + S.label(s) + ", " + S.label(t) + ")";
    }

    std::string set_text(InverseMonoid const& S, ElementSet const& A) {
      std::string out = "{";
      A.for_each([&](std::size_t a) {
        out += (out.size() > 1 ? "; " : "") + S.label(static_cast<Element>(a));
      });
      return out + "}";
    }

    bool is_inverse_subsemigroup(InverseMonoid const& S, ElementSet const& A) {
      return set_product(S, A, A).is_subset_of(A) && set_inverse(S, A).is_subset_of(A);
    }

  }  // namespace

  LawReport check_order_laws(InverseMonoid const& S) {
    LawReport  report;
    auto const n = S.size();

    {
      auto& law = report.add("order.matches-definition");
      auto  def = natural_order(S);
      for (Element t = 0; t < n; ++t) {
        law.check(def.leq[t] == S.down_set(t), [&] { return "down-set of " + S.label(t); });
      }
      law.check(def.atoms == S.atoms(), [] { return std::string("atoms"); });
      law.check(def.idempotents == S.idempotents(), [] { return std::string("idempotents"); });
    }
    {
      auto& law = report.add("order.below-iff-restriction");
      for (Element x = 0; x < n; ++x) {
        for (Element s = 0; s < n; ++s) {
          law.check(S.leq(x, s) == (x == S.mul(s, S.dom(x))),
                    [&] { return pair_text(S, x, s); });
        }
      }
    }
    {
      auto& law = report.add("order.partial-order");
      for (Element s = 0; s < n; ++s) {
        law.check(S.leq(s, s) && S.leq(S.zero(), s), [&] { return S.label(s); });
        for (Element t = 0; t < n; ++t) {
          if (s != t) {
            law.check(!(S.leq(s, t) && S.leq(t, s)), [&] { return pair_text(S, s, t); });
          }
          if (S.leq(s, t)) {
            law.check(S.up_set(t).is_subset_of(S.up_set(s)), [&] { return pair_text(S, s, t); });
          }
        }
      }
    }

    if (!check_boolean(S).is_boolean) {
      auto& law = report.add("boolean-precondition");
      law.check(false, [] { return std::string("S is not a boolean inverse monoid"); });
      return report;
    }

    {
      auto& law = report.add("meet.compatible-iff-domains-meet");
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          auto m   = meet(S, s, t);
          bool rhs = m && S.dom(*m) == S.mul(S.dom(s), S.dom(t))
                     && S.ran(*m) == S.mul(S.ran(s), S.ran(t));
          law.check(compatible(S, s, t) == rhs, [&] { return pair_text(S, s, t); });
        }
      }
    }
    {
      auto& law = report.add("join.domains-join");
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          auto j = join(S, s, t);
          if (!j) {
            continue;
          }
          law.check(join(S, S.dom(s), S.dom(t)) == S.dom(*j)
                        && join(S, S.ran(s), S.ran(t)) == S.ran(*j),
                    [&] { return pair_text(S, s, t); });
        }
      }
    }
    {
      auto& law = report.add("meet.distributes-over-products");
      for (Element s = 0; s < n; ++s) {
        for (Element t = s + 1; t < n; ++t) {
          auto m = meet(S, s, t);
          if (!m) {
            continue;
          }
          for (Element u = 0; u < n; ++u) {
            auto left  = meet(S, S.mul(u, s), S.mul(u, t));
            auto right = meet(S, S.mul(s, u), S.mul(t, u));
            law.check(left == S.mul(u, *m) && right == S.mul(*m, u), [&] {
              return pair_text(S, s, t) + " with u = " + S.label(u);
            });
          }
        }
      }
    }
    {
      auto& law = report.add("downset.isomorphic-to-domain-downset");
      for (Element s = 0; s < n; ++s) {
        auto const      below = S.down_set(s).to_vector();
        ElementSet      image(n);
        bool            ok = true;
        for (auto x : below) {
          image.insert(S.dom(static_cast<Element>(x)));
          for (auto y : below) {
            ok = ok
                 && S.leq(static_cast<Element>(x), static_cast<Element>(y))
                        == S.leq(S.dom(static_cast<Element>(x)), S.dom(static_cast<Element>(y)));
          }
        }
        ok = ok && image == S.down_set(S.dom(s)) && image.count() == below.size();
        law.check(ok, [&] { return S.label(s); });
      }
    }
    {
      auto& law = report.add("complement.unique-relative-complement");
      for (Element t = 0; t < n; ++t) {
        S.down_set(t).for_each([&](std::size_t si) {
          auto s = static_cast<Element>(si);
          auto r = relative_complement(S, s, t);
          bool ok = S.leq(r, t) && orthogonal(S, s, r) && join(S, s, r) == t;
          S.down_set(t).for_each([&](std::size_t xi) {
            auto x = static_cast<Element>(xi);
            if (x != r && orthogonal(S, s, x) && join(S, s, x) == t) {
              ok = false;
            }
          });
          law.check(ok, [&] { return pair_text(S, s, t); });
        });
      }
    }
    {
      auto& law = report.add("complement.separating-element");
      for (Element s = 0; s < n; ++s) {
        if (s == S.zero()) {
          continue;
        }
        for (Element t = 0; t < n; ++t) {
          if (S.leq(s, t)) {
            continue;
          }
          auto m       = *meet(S, s, t);
          auto witness = relative_complement(S, m, s);
          law.check(witness != S.zero() && S.leq(witness, s) && meet(S, witness, t) == S.zero(),
                    [&] { return pair_text(S, s, t); });
        }
      }
    }
    {
      auto& law = report.add("join.compatible-join-by-decomposition");
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          if (!compatible(S, s, t)) {
            continue;
          }
          auto j = join(S, s, t);
          law.check(j.has_value() && j == join_by_decomposition(S, s, t),
                    [&] { return pair_text(S, s, t); });
        }
      }
    }
    return report;
  }

  LawReport check_filter_laws(InverseMonoid const& S) {
    LawReport report;
    if (!check_boolean(S).is_boolean) {
      auto& law = report.add("boolean-precondition");
      law.check(false, [] { return std::string("S is not a boolean inverse monoid"); });
      return report;
    }
    auto const n       = S.size();
    auto const filters = all_filters(S);
    auto const ultra   = enumerate_ultrafilters(S);
    std::map<ElementSet, std::size_t> filter_index;
    for (std::size_t i = 0; i < filters.size(); ++i) {
      filter_index.emplace(filters[i].members(), i);
    }
    std::vector<Filter> domains;
    domains.reserve(filters.size());
    for (auto const& F : filters) {
      domains.push_back(filter_product(filter_inverse(F), F));
    }

    {
      auto& law = report.add("ultrafilter.criterion-matches-maximality");
      for (auto const& F : filters) {
        if (F.is_proper()) {
          law.check(is_ultrafilter(F) == is_maximal_proper_filter(F),
                    [&] { return set_text(S, F.members()); });
        }
      }
    }
    {
      auto& law = report.add("ultrafilter.every-nonzero-covered");
      for (Element s = 0; s < n; ++s) {
        if (s == S.zero()) {
          continue;
        }
        bool covered = false;
        for (auto const& U : ultra) {
          covered = covered || U.contains(s);
        }
        law.check(covered, [&] { return S.label(s); });
      }
    }
    {
      auto& law = report.add("ultrafilter.intersection-is-principal");
      for (Element a = 0; a < n; ++a) {
        if (a == S.zero()) {
          continue;
        }
        ElementSet meet_all = ElementSet::full(n);
        for (auto const& U : ultra) {
          if (U.contains(a)) {
            meet_all &= U.members();
          }
        }
        law.check(meet_all == S.up_set(a), [&] { return S.label(a); });
      }
    }
    {
      auto& law = report.add("filter.is-coset");
      for (auto const& F : filters) {
        auto const& A   = F.members();
        auto        FFF = set_product(S, set_product(S, A, set_inverse(S, A)), A);
        law.check(FFF == A, [&] { return set_text(S, A); });
      }
    }
    {
      auto& law = report.add("filter.product-is-least-filter");
      for (auto const& A : filters) {
        for (auto const& B : filters) {
          auto AB      = set_product(S, A.members(), B.members());
          auto closure = upward_closure(S, AB);
          bool ok      = is_filter(S, closure) && filter_product(A, B).members() == closure;
          for (auto const& C : filters) {
            if (AB.is_subset_of(C.members()) && !closure.is_subset_of(C.members())) {
              ok = false;
            }
          }
          law.check(ok, [&] {
            return set_text(S, A.members()) + " . " + set_text(S, B.members());
          });
        }
      }
    }
    {
      auto& law = report.add("filter.domain-is-inverse-submonoid");
      for (std::size_t i = 0; i < filters.size(); ++i) {
        auto const& F = filters[i];
        auto const& H = domains[i].members();
        bool        ok = H.contains(S.one()) && is_inverse_subsemigroup(S, H);
        F.members().for_each([&](std::size_t a) {
          ElementSet single(n, {a});
          ok = ok && upward_closure(S, set_product(S, single, H)) == F.members();
        });
        law.check(ok, [&] { return set_text(S, F.members()); });
      }
    }
    {
      auto& law = report.add("filter.idempotent-iff-subsemigroup");
      for (auto const& F : filters) {
        law.check(F.is_idempotent() == is_inverse_subsemigroup(S, F.members()),
                  [&] { return set_text(S, F.members()); });
      }
    }
    {
      auto& law = report.add("coset.equal-iff-quotient-in-domain");
      for (auto const& Hf : filters) {
        if (!Hf.is_idempotent()) {
          continue;
        }
        auto const& H = Hf.members();
        for (Element a = 0; a < n; ++a) {
          if (!H.contains(S.dom(a))) {
            continue;
          }
          auto aH = upward_closure(S, set_product(S, ElementSet(n, {a}), H));
          for (Element b = 0; b < n; ++b) {
            if (!H.contains(S.dom(b))) {
              continue;
            }
            auto bH = upward_closure(S, set_product(S, ElementSet(n, {b}), H));
            law.check((aH == bH) == H.contains(S.mul(S.inv(a), b)),
                      [&] { return pair_text(S, a, b) + " over " + set_text(S, H); });
          }
        }
      }
    }
    {
      auto& law = report.add("filter.determined-by-domain");
      for (std::size_t i = 0; i < filters.size(); ++i) {
        for (std::size_t j = 0; j < filters.size(); ++j) {
          auto const& A = filters[i].members();
          auto const& B = filters[j].members();
          if (A.intersects(B) && domains[i] == domains[j]) {
            law.check(A == B, [&] { return set_text(S, A) + " vs " + set_text(S, B); });
          }
        }
      }
    }
    {
      auto& law = report.add("ultrafilter.prime");
      for (auto const& U : ultra) {
        law.check(prime_property_check(U), [&] { return set_text(S, U.members()); });
      }
    }
    {
      // L(S): every filter, under (AB)^ and inversion.
      auto&       law   = report.add("filters.form-inverse-semigroup");
      auto const  m     = filters.size();
      std::vector<std::size_t> prod(m * m), inv(m);
      bool        closed = true;
      for (std::size_t i = 0; i < m; ++i) {
        inv[i] = filter_index.at(filter_inverse(filters[i]).members());
        for (std::size_t j = 0; j < m; ++j) {
          auto it = filter_index.find(filter_product(filters[i], filters[j]).members());
          if (it == filter_index.end()) {
            closed = false;
            continue;
          }
          prod[i * m + j] = it->second;
        }
      }
      law.check(closed, [] { return std::string("product leaves L(S)"); });
      if (closed) {
        for (std::size_t a = 0; a < m; ++a) {
          law.check(prod[prod[a * m + inv[a]] * m + a] == a
                        && prod[prod[inv[a] * m + a] * m + inv[a]] == inv[a],
                    [&] { return "inverse law at " + set_text(S, filters[a].members()); });
          for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t c = 0; c < m; ++c) {
              law.check(prod[prod[a * m + b] * m + c] == prod[a * m + prod[b * m + c]], [&] {
                return "associativity at " + set_text(S, filters[a].members());
              });
            }
          }
        }
        std::vector<std::size_t> idem;
        for (std::size_t a = 0; a < m; ++a) {
          bool is_idem = prod[a * m + a] == a;
          law.check(is_idem == filters[a].is_idempotent(), [&] {
            return "idempotent filters at " + set_text(S, filters[a].members());
          });
          if (is_idem) {
            idem.push_back(a);
          }
        }
        for (auto e : idem) {
          for (auto f : idem) {
            law.check(prod[e * m + f] == prod[f * m + e],
                      [] { return std::string("idempotent filters commute"); });
          }
        }
        auto& order = report.add("filters.order-is-reverse-inclusion");
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            bool below = false;
            for (auto e : idem) {
              below = below || prod[b * m + e] == a;
            }
            order.check(below == filters[b].members().is_subset_of(filters[a].members()), [&] {
              return set_text(S, filters[a].members()) + " vs " + set_text(S, filters[b].members());
            });
          }
        }
      }
    }
    {
      auto& law = report.add("ultrafilter.characterisations");
      // Ultrafilters of the semilattice E(S): the maximal proper e^ cut to E.
      std::vector<ElementSet> e_filters;
      for (auto e : S.idempotent_list()) {
        if (e != S.zero()) {
          e_filters.push_back(S.up_set(e) & S.idempotents());
        }
      }
      auto is_e_ultra = [&](ElementSet const& F) {
        if (F.contains(S.zero())) {
          return false;
        }
        for (auto const& G : e_filters) {
          if (F.is_subset_of(G) && !(F == G)) {
            return false;
          }
        }
        return true;
      };
      for (std::size_t i = 0; i < filters.size(); ++i) {
        auto const& F = filters[i];
        if (!F.is_proper()) {
          continue;
        }
        bool f_ultra = is_ultrafilter(F);
        bool h_ultra = domains[i].is_idempotent() && is_ultrafilter(domains[i]);
        bool e_ultra = is_e_ultra(domains[i].members() & S.idempotents());
        law.check(f_ultra == h_ultra && h_ultra == e_ultra,
                  [&] { return set_text(S, F.members()); });
      }
    }
    {
      auto&               law = report.add("ultrafilter.explicit-product");
      UltrafilterGroupoid GS(S);
      auto const&         G = GS.groupoid();
      for (Arrow i = 0; i < G.size(); ++i) {
        for (Arrow j = 0; j < G.size(); ++j) {
          auto ij = G.compose(i, j);
          if (!ij) {
            continue;
          }
          auto const& A  = GS.ultrafilters()[i];
          auto const& B  = GS.ultrafilters()[j];
          auto const& AB = GS.ultrafilters()[*ij].members();
          auto        dB = filter_product(filter_inverse(B), B).members();
          bool        ok = filter_product(A, B).members() == AB;
          A.members().for_each([&](std::size_t a) {
            B.members().for_each([&](std::size_t b) {
              auto ab = S.mul(static_cast<Element>(a), static_cast<Element>(b));
              ok      = ok && upward_closure(S, set_product(S, ElementSet(n, {ab}), dB)) == AB;
            });
          });
          law.check(ok, [&] {
            return set_text(S, A.members()) + " . " + set_text(S, B.members());
          });
        }
      }
    }
    return report;
  }

}  // namespace stonework
