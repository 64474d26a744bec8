#include "stonework/groupoid.hpp"

#include <algorithm>
#include <sstream>

#include "stonework/errors.hpp"

namespace stonework {

  namespace {
    [[noreturn]] void fail(std::string const& what) {
      throw InvalidInput("not a groupoid: " + what);
    }
    std::string arrow_name(Arrow g) { return std::to_string(g); }
  }  // namespace

  FiniteGroupoid::FiniteGroupoid(GroupoidTable table)
      : size_(table.size),
        dom_(std::move(table.dom)),
        ran_(std::move(table.ran)),
        inv_(std::move(table.inv)),
        compose_(std::move(table.compose)),
        labels_(std::move(table.labels)) {
    auto const n = size_;
    if (dom_.size() != n || ran_.size() != n || inv_.size() != n) {
      fail("d, r and inv must have one entry per arrow");
    }
    if (compose_.size() != n * n) {
      fail("compose table must have size*size entries");
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (dom_[g] >= n || ran_[g] >= n || inv_[g] >= n) {
        fail("arrow index out of range at " + arrow_name(g));
      }
    }
    for (auto v : compose_) {
      if (v < -1 || v >= static_cast<std::int64_t>(n)) {
        fail("compose entry out of range");
      }
    }
    if (labels_.empty()) {
      for (std::size_t g = 0; g < n; ++g) {
        labels_.push_back(std::to_string(g));
      }
    } else if (labels_.size() != n) {
      fail("labels must have one entry per arrow");
    }

    identities_ = ElementSet(n);
    for (Arrow g = 0; g < n; ++g) {
      Arrow e = dom_[g], f = ran_[g];
      if (dom_[e] != e || ran_[e] != e || dom_[f] != f || ran_[f] != f) {
        fail("d or r of arrow " + arrow_name(g) + " is not an identity");
      }
      if (dom_[g] == g) {
        if (ran_[g] != g) {
          fail("identity " + arrow_name(g) + " has d != r");
        }
        identities_.insert(g);
      }
    }
    for (Arrow g = 0; g < n; ++g) {
      for (Arrow h = 0; h < n; ++h) {
        auto gh = compose(g, h);
        if (gh.has_value() != (dom_[g] == ran_[h])) {
          fail("composite of " + arrow_name(g) + " and " + arrow_name(h)
               + " must exist exactly when d(g) = r(h)");
        }
        if (gh && (dom_[*gh] != dom_[h] || ran_[*gh] != ran_[g])) {
          fail("d/r of composite " + arrow_name(g) + "*" + arrow_name(h));
        }
      }
    }
    for (Arrow g = 0; g < n; ++g) {
      for (Arrow h = 0; h < n; ++h) {
        auto gh = compose(g, h);
        if (!gh) {
          continue;
        }
        for (Arrow k = 0; k < n; ++k) {
          auto hk = compose(h, k);
          if (!hk) {
            continue;
          }
          if (compose(*gh, k) != compose(g, *hk)) {
            fail("associativity fails at (" + arrow_name(g) + ", " + arrow_name(h) + ", "
                 + arrow_name(k) + ")");
          }
        }
      }
    }
    for (Arrow g = 0; g < n; ++g) {
      if (inv_[inv_[g]] != g) {
        fail("inv is not an involution at " + arrow_name(g));
      }
      if (compose(g, inv_[g]) != ran_[g] || compose(inv_[g], g) != dom_[g]) {
        fail("g g^-1 = r(g) or g^-1 g = d(g) fails at " + arrow_name(g));
      }
      if (compose(ran_[g], g) != g || compose(g, dom_[g]) != g) {
        fail("identities do not act neutrally on " + arrow_name(g));
      }
    }
  }

  GroupoidTable FiniteGroupoid::table() const {
    return GroupoidTable{size_, dom_, ran_, inv_, compose_, labels_};
  }

  FiniteGroupoid pair_groupoid(std::size_t points) {
    if (points == 0) {
      throw PreconditionError("pair groupoid needs at least one point");
    }
    auto const    n = points * points;
    GroupoidTable t;
    t.size = n;
    t.compose.assign(n * n, -1);
    auto idx = [points](std::size_t i, std::size_t j) {
      return static_cast<Arrow>(i * points + j);
    };
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = 0; j < points; ++j) {
        t.dom.push_back(idx(j, j));
        t.ran.push_back(idx(i, i));
        t.inv.push_back(idx(j, i));
        t.labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        for (std::size_t k = 0; k < points; ++k) {
          t.compose[idx(i, j) * n + idx(j, k)] = static_cast<std::int32_t>(idx(i, k));
        }
      }
    }
    return FiniteGroupoid(std::move(t));
  }

  FiniteGroupoid cyclic_group(std::size_t order) {
    if (order == 0) {
      throw PreconditionError("group order must be positive");
    }
    GroupoidTable t;
    t.size = order;
    t.compose.resize(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      t.dom.push_back(0);
      t.ran.push_back(0);
      t.inv.push_back(static_cast<Arrow>((order - i) % order));
      t.labels.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
      for (std::size_t j = 0; j < order; ++j) {
        t.compose[i * order + j] = static_cast<std::int32_t>((i + j) % order);
      }
    }
    return FiniteGroupoid(std::move(t));
  }

  FiniteGroupoid discrete_groupoid(std::size_t points) {
    GroupoidTable t;
    t.size = points;
    t.compose.assign(points * points, -1);
    for (std::size_t i = 0; i < points; ++i) {
      t.dom.push_back(static_cast<Arrow>(i));
      t.ran.push_back(static_cast<Arrow>(i));
      t.inv.push_back(static_cast<Arrow>(i));
      t.labels.push_back("x" + std::to_string(i + 1));
      t.compose[i * points + i] = static_cast<std::int32_t>(i);
    }
    return FiniteGroupoid(std::move(t));
  }

  FiniteGroupoid disjoint_union(FiniteGroupoid const& G, FiniteGroupoid const& H) {
    auto const    a = G.size(), b = H.size(), n = a + b;
    GroupoidTable t;
    t.size = n;
    t.compose.assign(n * n, -1);
    for (Arrow g = 0; g < a; ++g) {
      t.dom.push_back(G.dom(g));
      t.ran.push_back(G.ran(g));
      t.inv.push_back(G.inv(g));
      t.labels.push_back("L" + G.label(g));
      for (Arrow h = 0; h < a; ++h) {
        if (auto gh = G.compose(g, h)) {
          t.compose[g * n + h] = static_cast<std::int32_t>(*gh);
        }
      }
    }
    for (Arrow g = 0; g < b; ++g) {
      t.dom.push_back(static_cast<Arrow>(a + H.dom(g)));
      t.ran.push_back(static_cast<Arrow>(a + H.ran(g)));
      t.inv.push_back(static_cast<Arrow>(a + H.inv(g)));
      t.labels.push_back("R" + H.label(g));
      for (Arrow h = 0; h < b; ++h) {
        if (auto gh = H.compose(g, h)) {
          t.compose[(a + g) * n + a + h] = static_cast<std::int32_t>(a + *gh);
        }
      }
    }
    return FiniteGroupoid(std::move(t));
  }

  bool is_bisection(FiniteGroupoid const& G, ElementSet const& A) {
    ElementSet doms(G.size()), rans(G.size());
    bool       ok = true;
    A.for_each([&](std::size_t a) {
      auto g = static_cast<Arrow>(a);
      if (doms.contains(G.dom(g)) || rans.contains(G.ran(g))) {
        ok = false;
      }
      doms.insert(G.dom(g));
      rans.insert(G.ran(g));
    });
    return ok;
  }

  bool is_bisection_by_products(FiniteGroupoid const& G, ElementSet const& A) {
    auto inv = set_inverse(G, A);
    return set_product(G, inv, A).is_subset_of(G.identities())
           && set_product(G, A, inv).is_subset_of(G.identities());
  }

  ElementSet set_product(FiniteGroupoid const& G, ElementSet const& A, ElementSet const& B) {
    ElementSet out(G.size());
    A.for_each([&](std::size_t a) {
      B.for_each([&](std::size_t b) {
        if (auto ab = G.compose(static_cast<Arrow>(a), static_cast<Arrow>(b))) {
          out.insert(*ab);
        }
      });
    });
    return out;
  }

  ElementSet set_inverse(FiniteGroupoid const& G, ElementSet const& A) {
    ElementSet out(G.size());
    A.for_each([&](std::size_t a) { out.insert(G.inv(static_cast<Arrow>(a))); });
    return out;
  }

  Bisection::Bisection(FiniteGroupoid const& G, ElementSet members)
      : carrier_(&G), members_(std::move(members)) {
    if (members_.universe() != G.size()) {
      throw InvalidInput("bisection universe does not match the groupoid");
    }
    if (!is_bisection(G, members_)) {
      throw InvalidInput("subset is not a bisection");
    }
  }

  Bisection bisection_product(Bisection const& A, Bisection const& B) {
    if (&A.carrier() != &B.carrier()) {
      throw PreconditionError("bisections over different groupoids");
    }
    return Bisection(A.carrier(), set_product(A.carrier(), A.members(), B.members()));
  }

  std::vector<ElementSet> bisections_by_subsets(FiniteGroupoid const& G,
                                                std::size_t           max_arrows) {
    if (G.size() > max_arrows || G.size() > 24) {
      throw BoundExceeded("subset enumeration of bisections is capped at "
                          + std::to_string(std::min<std::size_t>(max_arrows, 24)) + " arrows");
    }
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << G.size()); ++mask) {
      ElementSet A(G.size());
      for (std::size_t i = 0; i < G.size(); ++i) {
        if ((mask >> i) & 1U) {
          A.insert(i);
        }
      }
      if (is_bisection(G, A)) {
        out.push_back(std::move(A));
      }
    }
    return out;
  }

  std::vector<ElementSet> bisections_by_injections(FiniteGroupoid const& G,
                                                   std::size_t           max_arrows) {
    if (G.size() > max_arrows) {
      throw BoundExceeded("bisection enumeration is capped at " + std::to_string(max_arrows)
                          + " arrows; build the dual from the monoid side instead");
    }
    auto const                      objects = G.identities().to_vector();
    std::vector<std::vector<Arrow>> star(G.size());
    for (Arrow g = 0; g < G.size(); ++g) {
      star[G.dom(g)].push_back(g);
    }
    std::vector<ElementSet> out;
    ElementSet              current(G.size());
    ElementSet              used_ranges(G.size());
    auto                    rec = [&](auto&& self, std::size_t i) -> void {
      if (i == objects.size()) {
        out.push_back(current);
        return;
      }
      self(self, i + 1);
      for (auto g : star[objects[i]]) {
        if (used_ranges.contains(G.ran(g))) {
          continue;
        }
        used_ranges.insert(G.ran(g));
        current.insert(g);
        self(self, i + 1);
        current.erase(g);
        used_ranges.erase(G.ran(g));
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Arrow> CoveringFunctor::object_map() const {
    std::vector<Arrow> out(source->size(), 0);
    source->identities().for_each([&](std::size_t e) { out[e] = arrow_map[e]; });
    return out;
  }

  namespace {
    CoveringReport failed(std::string property, std::vector<Arrow> witness, std::string detail) {
      return CoveringReport{false, std::move(property), std::move(witness), std::move(detail)};
    }
  }  // namespace

  CoveringReport check_functor(CoveringFunctor const& f) {
    auto const& G = *f.source;
    auto const& H = *f.target;
    if (f.arrow_map.size() != G.size()) {
      return failed("functor", {}, "arrow map has the wrong length");
    }
    for (Arrow g = 0; g < G.size(); ++g) {
      if (f.arrow_map[g] >= H.size()) {
        return failed("functor", {g}, "image out of range");
      }
    }
    for (Arrow g = 0; g < G.size(); ++g) {
      Arrow fg = f.arrow_map[g];
      if (G.is_identity(g) && !H.is_identity(fg)) {
        return failed("functor", {g}, "identity not mapped to an identity");
      }
      if (f.arrow_map[G.dom(g)] != H.dom(fg) || f.arrow_map[G.ran(g)] != H.ran(fg)) {
        return failed("functor", {g}, "d or r not preserved");
      }
    }
    for (Arrow g = 0; g < G.size(); ++g) {
      for (Arrow h = 0; h < G.size(); ++h) {
        if (auto gh = G.compose(g, h)) {
          if (H.compose(f.arrow_map[g], f.arrow_map[h]) != f.arrow_map[*gh]) {
            return failed("functor", {g, h}, "composition not preserved");
          }
        }
      }
    }
    return CoveringReport{true, {}, {}, {}};
  }

  CoveringReport check_covering(CoveringFunctor const& f) {
    if (auto r = check_functor(f); !r.ok) {
      return r;
    }
    auto const& G = *f.source;
    auto const& H = *f.target;
    for (Arrow g = 0; g < G.size(); ++g) {
      for (Arrow h = g + 1; h < G.size(); ++h) {
        if (G.dom(g) == G.dom(h) && f.arrow_map[g] == f.arrow_map[h]) {
          return failed("star-injectivity", {g, h},
                        "arrows " + G.label(g) + " and " + G.label(h)
                            + " share a domain and an image");
        }
      }
    }
    for (Arrow e = 0; e < G.size(); ++e) {
      if (!G.is_identity(e)) {
        continue;
      }
      for (Arrow k = 0; k < H.size(); ++k) {
        if (H.dom(k) != f.arrow_map[e]) {
          continue;
        }
        bool hit = false;
        for (Arrow g = 0; g < G.size() && !hit; ++g) {
          hit = G.dom(g) == e && f.arrow_map[g] == k;
        }
        if (!hit) {
          return failed("star-surjectivity", {e, k},
                        "arrow " + H.label(k) + " of the target star has no preimage");
        }
      }
    }
    // If f(x) = ab then x = uv with f(u) = a and f(v) = b.
    for (Arrow x = 0; x < G.size(); ++x) {
      for (Arrow a = 0; a < H.size(); ++a) {
        for (Arrow b = 0; b < H.size(); ++b) {
          if (H.compose(a, b) != f.arrow_map[x]) {
            continue;
          }
          bool lifted = false;
          for (Arrow u = 0; u < G.size() && !lifted; ++u) {
            if (f.arrow_map[u] != a) {
              continue;
            }
            for (Arrow v = 0; v < G.size() && !lifted; ++v) {
              lifted = f.arrow_map[v] == b && G.compose(u, v) == x;
            }
          }
          if (!lifted) {
            return failed("lifting", {x, a, b}, "factorisation does not lift");
          }
        }
      }
    }
    return CoveringReport{true, {}, {}, {}};
  }

  CoveringFunctor compose_functors(CoveringFunctor const& f, CoveringFunctor const& g) {
    if (f.target != g.source) {
      throw PreconditionError("functors are not composable");
    }
    CoveringFunctor out{f.source, g.target, {}};
    out.arrow_map.reserve(f.arrow_map.size());
    for (auto a : f.arrow_map) {
      out.arrow_map.push_back(g.arrow_map[a]);
    }
    return out;
  }

  std::string to_dot(FiniteGroupoid const& G, std::string const& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    G.identities().for_each([&](std::size_t e) {
      os << "  n" << e << " [shape=doublecircle, label=\"" << G.label(static_cast<Arrow>(e))
         << "\"];\n";
    });
    for (Arrow g = 0; g < G.size(); ++g) {
      if (G.is_identity(g)) {
        continue;
      }
      os << "  n" << G.dom(g) << " -> n" << G.ran(g) << " [label=\"" << G.label(g) << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace stonework
