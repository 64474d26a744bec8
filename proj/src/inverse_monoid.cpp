#include "stonework/inverse_monoid.hpp"

#include <random>
#include <sstream>

#include "stonework/errors.hpp"

namespace stonework {

  namespace {

    [[noreturn]] void fail(std::string const& what) {
      throw InvalidInput("not an inverse monoid with zero: " + what);
    }

    std::string triple(Element a, Element b, Element c) {
      std::ostringstream os;
      os << "(" << a << ", " << b << ", " << c << ")";
      return os.str();
    }

    // Greatest element of `candidates` under the order whose down-sets are
    // `below`, if it exists.
    std::optional<Element> greatest(ElementSet const&              candidates,
                                    std::vector<ElementSet> const& below) {
      std::optional<Element> best;
      std::size_t            best_count = 0;
      candidates.for_each([&](std::size_t i) {
        auto c = below[i].count();
        if (!best || c > best_count) {
          best       = static_cast<Element>(i);
          best_count = c;
        }
      });
      if (best && candidates.is_subset_of(below[*best])) {
        return best;
      }
      return std::nullopt;
    }

  }  // namespace

  std::string_view to_string(BooleanAxiom axiom) noexcept {
    switch (axiom) {
      case BooleanAxiom::BM1:
        return "BM1";
      case BooleanAxiom::BM2:
        return "BM2";
      case BooleanAxiom::BM3:
        return "BM3";
    }
    return "?";
  }

  InverseMonoid::InverseMonoid(MonoidTable table, MonoidLimits const& limits)
      : size_(table.size),
        zero_(table.zero),
        one_(table.one),
        mul_(std::move(table.mul)),
        inv_(std::move(table.inv)),
        labels_(std::move(table.labels)) {
    std::size_t const n = size_;
    if (n == 0) {
      fail("empty carrier");
    }
    if (n > limits.max_size) {
      throw BoundExceeded("monoid has " + std::to_string(n)
                          + " elements, above the configured bound of "
                          + std::to_string(limits.max_size));
    }
    if (mul_.size() != n * n) {
      fail("multiplication table must have size*size entries");
    }
    if (inv_.size() != n) {
      fail("inverse table must have size entries");
    }
    if (zero_ >= n || one_ >= n) {
      fail("zero/one index out of range");
    }
    for (auto v : mul_) {
      if (v >= n) {
        fail("multiplication entry out of range");
      }
    }
    for (auto v : inv_) {
      if (v >= n) {
        fail("inverse entry out of range");
      }
    }
    if (labels_.empty()) {
      labels_.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels_.push_back(std::to_string(i));
      }
    } else if (labels_.size() != n) {
      fail("labels must have size entries");
    }

    for (Element s = 0; s < n; ++s) {
      if (mul(zero_, s) != zero_ || mul(s, zero_) != zero_) {
        fail("zero is not absorbing at " + std::to_string(s));
      }
      if (mul(one_, s) != s || mul(s, one_) != s) {
        fail("one is not an identity at " + std::to_string(s));
      }
    }

    if (n <= limits.exhaustive_associativity) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          Element ab = mul(a, b);
          for (Element c = 0; c < n; ++c) {
            if (mul(ab, c) != mul(a, mul(b, c))) {
              fail("associativity fails at " + triple(a, b, c));
            }
          }
        }
      }
    } else {
      std::mt19937_64                        rng(limits.seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      for (std::size_t i = 0; i < limits.sampled_triples; ++i) {
        Element a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          fail("associativity fails at " + triple(a, b, c));
        }
      }
    }

    for (Element s = 0; s < n; ++s) {
      Element t = inv(s);
      if (inv(t) != s) {
        fail("inv is not an involution at " + std::to_string(s));
      }
      if (mul(mul(s, t), s) != s || mul(mul(t, s), t) != t) {
        fail("s s^-1 s = s fails at " + std::to_string(s));
      }
    }

    order_.idempotents = ElementSet(n);
    for (Element s = 0; s < n; ++s) {
      if (is_idempotent(s)) {
        order_.idempotents.insert(s);
        idempotent_list_.push_back(s);
      }
    }
    for (auto e : idempotent_list_) {
      for (auto f : idempotent_list_) {
        if (mul(e, f) != mul(f, e)) {
          fail("idempotents " + std::to_string(e) + " and " + std::to_string(f)
               + " do not commute");
        }
      }
    }

    order_.leq.assign(n, ElementSet(n));
    up_.assign(n, ElementSet(n));
    for (Element t = 0; t < n; ++t) {
      for (auto e : idempotent_list_) {
        Element s = mul(t, e);
        order_.leq[t].insert(s);
        up_[s].insert(t);
      }
    }
    order_.atoms = ElementSet(n);
    for (Element s = 0; s < n; ++s) {
      if (s != zero_ && order_.leq[s].count() == 2) {
        order_.atoms.insert(s);
      }
    }
  }

  std::optional<Element> InverseMonoid::find_label(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == name) {
        return static_cast<Element>(i);
      }
    }
    return std::nullopt;
  }

  MonoidTable InverseMonoid::table() const {
    return MonoidTable{size_, zero_, one_, inv_, mul_, labels_};
  }

  OrderData natural_order(InverseMonoid const& S) {
    auto const n = S.size();
    OrderData  out;
    out.idempotents = ElementSet(n);
    for (Element e = 0; e < n; ++e) {
      if (S.mul(e, e) == e) {
        out.idempotents.insert(e);
      }
    }
    out.leq.assign(n, ElementSet(n));
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        bool below = false;
        out.idempotents.for_each([&](std::size_t e) {
          below = below || S.mul(t, static_cast<Element>(e)) == s;
        });
        if (below) {
          out.leq[t].insert(s);
        }
      }
    }
    out.atoms = ElementSet(n);
    for (Element s = 0; s < n; ++s) {
      if (s == S.zero()) {
        continue;
      }
      bool minimal = true;
      for (Element x = 0; x < n; ++x) {
        if (x != s && x != S.zero() && out.leq[s].contains(x)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.atoms.insert(s);
      }
    }
    return out;
  }

  bool compatible(InverseMonoid const& S, Element s, Element t) {
    return S.is_idempotent(S.mul(S.inv(s), t)) && S.is_idempotent(S.mul(s, S.inv(t)));
  }

  bool orthogonal(InverseMonoid const& S, Element s, Element t) {
    return S.mul(S.inv(s), t) == S.zero() && S.mul(s, S.inv(t)) == S.zero();
  }

  std::optional<Element> meet(InverseMonoid const& S, Element s, Element t) {
    if (s == t) {
      return s;
    }
    return greatest(S.down_set(s) & S.down_set(t), S.order().leq);
  }

  std::optional<Element> join(InverseMonoid const& S, Element s, Element t) {
    if (s == t) {
      return s;
    }
    ElementSet             uppers = S.up_set(s) & S.up_set(t);
    std::optional<Element> best;
    std::size_t            best_count = 0;
    uppers.for_each([&](std::size_t i) {
      auto c = S.up_set(static_cast<Element>(i)).count();
      if (!best || c > best_count) {
        best       = static_cast<Element>(i);
        best_count = c;
      }
    });
    if (best && uppers.is_subset_of(S.up_set(*best))) {
      return best;
    }
    return std::nullopt;
  }

  namespace {
    // Join of two idempotents computed inside E(S) only.
    std::optional<Element> idempotent_join(InverseMonoid const& S, Element e, Element f) {
      ElementSet uppers = S.up_set(e) & S.up_set(f) & S.idempotents();
      std::optional<Element> best;
      uppers.for_each([&](std::size_t i) {
        if (!best && uppers.is_subset_of(S.up_set(static_cast<Element>(i)))) {
          best = static_cast<Element>(i);
        }
      });
      return best;
    }
  }  // namespace

  std::optional<Element> idempotent_complement(InverseMonoid const& S, Element e) {
    for (auto c : S.idempotent_list()) {
      if (S.mul(e, c) != S.zero()) {
        continue;
      }
      if (auto j = idempotent_join(S, e, c); j && *j == S.one()) {
        return c;
      }
    }
    return std::nullopt;
  }

  Element relative_complement(InverseMonoid const& S, Element s, Element t) {
    if (!S.leq(s, t)) {
      throw PreconditionError("relative complement t \\ s needs s <= t (s = "
                              + S.label(s) + ", t = " + S.label(t) + ")");
    }
    auto c = idempotent_complement(S, S.dom(s));
    if (!c) {
      throw PreconditionError("E(S) is not boolean: d(" + S.label(s)
                              + ") has no complement");
    }
    return S.mul(t, S.mul(S.dom(t), *c));
  }

  std::optional<Element> join_by_decomposition(InverseMonoid const& S, Element s, Element t) {
    if (!compatible(S, s, t)) {
      return std::nullopt;
    }
    auto m = meet(S, s, t);
    if (!m) {
      return std::nullopt;
    }
    if (!idempotent_complement(S, S.dom(*m))) {
      return std::nullopt;
    }
    Element left  = relative_complement(S, *m, s);
    Element right = relative_complement(S, *m, t);
    if (!orthogonal(S, *m, left) || !orthogonal(S, *m, right)
        || !orthogonal(S, left, right)) {
      return std::nullopt;
    }
    auto first = join(S, *m, left);
    if (!first || !orthogonal(S, *first, right)) {
      return std::nullopt;
    }
    return join(S, *first, right);
  }

  BooleanCertificate check_boolean(InverseMonoid const& S) {
    using Violation = BooleanCertificate::Violation;
    auto failed     = [](BooleanAxiom a, std::vector<Element> els, std::string detail) {
      return BooleanCertificate{false, Violation{a, std::move(els), std::move(detail)}};
    };

    auto const& E = S.idempotent_list();
    auto const  m = E.size();

    // BM1: (E(S), <=) is a complemented distributive lattice.
    std::vector<std::optional<Element>> joins(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        Element e = E[i], f = E[j];
        auto    glb = greatest(S.down_set(e) & S.down_set(f) & S.idempotents(), S.order().leq);
        if (!glb || *glb != S.mul(e, f)) {
          return failed(BooleanAxiom::BM1, {e, f}, "no meet in E(S)");
        }
        auto lub = idempotent_join(S, e, f);
        if (!lub) {
          return failed(BooleanAxiom::BM1, {e, f}, "no join in E(S)");
        }
        joins[i * m + j] = joins[j * m + i] = lub;
      }
    }
    std::vector<std::size_t> pos(S.size(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      pos[E[i]] = i;
    }
    auto join_e = [&](Element e, Element f) { return *joins[pos[e] * m + pos[f]]; };
    for (auto e : E) {
      for (auto f : E) {
        for (auto g : E) {
          Element lhs = S.mul(e, join_e(f, g));
          Element rhs = join_e(S.mul(e, f), S.mul(e, g));
          if (lhs != rhs) {
            return failed(BooleanAxiom::BM1, {e, f, g}, "E(S) is not distributive");
          }
        }
      }
    }
    for (auto e : E) {
      bool found = false;
      for (auto c : E) {
        if (S.mul(e, c) == S.zero() && join_e(e, c) == S.one()) {
          found = true;
          break;
        }
      }
      if (!found) {
        return failed(BooleanAxiom::BM1, {e}, "idempotent has no complement in E(S)");
      }
    }

    // BM2: all binary meets.
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = s + 1; t < S.size(); ++t) {
        if (!meet(S, s, t)) {
          return failed(BooleanAxiom::BM2, {s, t}, "meet does not exist");
        }
      }
    }

    // BM3: joins of orthogonal pairs.
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = s + 1; t < S.size(); ++t) {
        if (orthogonal(S, s, t) && !join(S, s, t)) {
          return failed(BooleanAxiom::BM3, {s, t}, "orthogonal join does not exist");
        }
      }
    }
    return BooleanCertificate{true, std::nullopt};
  }

}  // namespace stonework
