#include "stonework/monoid_catalog.hpp"

#include <algorithm>
#include <map>

#include "stonework/errors.hpp"

namespace stonework {

  std::size_t PartialBijection::rank() const {
    return static_cast<std::size_t>(std::count_if(
        image.begin(), image.end(), [](int y) { return y >= 0; }));
  }

  PartialBijection PartialBijection::compose(PartialBijection const& t) const {
    PartialBijection out{std::vector<int>(image.size(), -1)};
    for (std::size_t x = 0; x < image.size(); ++x) {
      int y = t.image[x];
      if (y >= 0) {
        out.image[x] = image[static_cast<std::size_t>(y)];
      }
    }
    return out;
  }

  PartialBijection PartialBijection::inverse() const {
    PartialBijection out{std::vector<int>(image.size(), -1)};
    for (std::size_t x = 0; x < image.size(); ++x) {
      if (image[x] >= 0) {
        out.image[static_cast<std::size_t>(image[x])] = static_cast<int>(x);
      }
    }
    return out;
  }

  std::string PartialBijection::label() const {
    std::string out = "{";
    bool        first = true;
    for (std::size_t x = 0; x < image.size(); ++x) {
      if (image[x] < 0) {
        continue;
      }
      if (!first) {
        out += ", ";
      }
      first = false;
      out += std::to_string(x + 1) + "->" + std::to_string(image[x] + 1);
    }
    return out + "}";
  }

  std::vector<PartialBijection> partial_bijections(std::size_t points) {
    std::vector<PartialBijection> out;
    std::vector<int>              image(points, -1);
    std::vector<bool>             used(points, false);
    auto                          rec = [&](auto&& self, std::size_t x) -> void {
      if (x == points) {
        out.push_back(PartialBijection{image});
        return;
      }
      image[x] = -1;
      self(self, x + 1);
      for (std::size_t y = 0; y < points; ++y) {
        if (!used[y]) {
          used[y]  = true;
          image[x] = static_cast<int>(y);
          self(self, x + 1);
          used[y]  = false;
          image[x] = -1;
        }
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [points](auto const& a, auto const& b) {
      auto ra = a.rank(), rb = b.rank();
      if (ra != rb) {
        return ra < rb;
      }
      // undefined points sort after every image
      auto key = [points](int v) { return v < 0 ? static_cast<int>(points) : v; };
      return std::lexicographical_compare(a.image.begin(), a.image.end(), b.image.begin(),
                                          b.image.end(),
                                          [&](int u, int v) { return key(u) < key(v); });
    });
    return out;
  }

  InverseMonoid symmetric_inverse_monoid(std::size_t points, std::size_t max_points) {
    if (points == 0 || points > max_points) {
      throw BoundExceeded("symmetric inverse monoid needs 1 <= |X| <= "
                          + std::to_string(max_points) + ", got "
                          + std::to_string(points));
    }
    auto const maps = partial_bijections(points);
    std::map<PartialBijection, Element> index;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      index.emplace(maps[i], static_cast<Element>(i));
    }
    auto const  n = maps.size();
    MonoidTable t;
    t.size = n;
    t.mul.resize(n * n);
    t.inv.resize(n);
    t.labels.reserve(n);
    PartialBijection identity{std::vector<int>(points)};
    for (std::size_t x = 0; x < points; ++x) {
      identity.image[x] = static_cast<int>(x);
    }
    t.zero = index.at(PartialBijection{std::vector<int>(points, -1)});
    t.one  = index.at(identity);
    for (std::size_t a = 0; a < n; ++a) {
      t.labels.push_back(maps[a].label());
      t.inv[a] = index.at(maps[a].inverse());
      for (std::size_t b = 0; b < n; ++b) {
        t.mul[a * n + b] = index.at(maps[a].compose(maps[b]));
      }
    }
    return InverseMonoid(std::move(t));
  }

  InverseMonoid boolean_algebra(std::size_t atoms) {
    if (atoms > 12) {
      throw BoundExceeded("boolean algebra with more than 12 atoms");
    }
    std::size_t const n = std::size_t{1} << atoms;
    MonoidTable       t;
    t.size = n;
    t.zero = 0;
    t.one  = static_cast<Element>(n - 1);
    t.mul.resize(n * n);
    t.inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      t.inv[a] = static_cast<Element>(a);
      for (std::size_t b = 0; b < n; ++b) {
        t.mul[a * n + b] = static_cast<Element>(a & b);
      }
      std::string label = "{";
      for (std::size_t i = 0; i < atoms; ++i) {
        if ((a >> i) & 1U) {
          label += (label.size() > 1 ? "," : "") + std::to_string(i + 1);
        }
      }
      t.labels.push_back(label + "}");
    }
    return InverseMonoid(std::move(t));
  }

  InverseMonoid group_with_zero(std::size_t order) {
    if (order == 0) {
      throw PreconditionError("group order must be positive");
    }
    std::size_t const n = order + 1;
    MonoidTable       t;
    t.size = n;
    t.zero = 0;
    t.one  = 1;
    t.mul.assign(n * n, 0);
    t.inv.resize(n);
    t.labels.push_back("0");
    t.inv[0] = 0;
    for (std::size_t i = 0; i < order; ++i) {
      t.labels.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
      t.inv[1 + i] = static_cast<Element>(1 + (order - i) % order);
      for (std::size_t j = 0; j < order; ++j) {
        t.mul[(1 + i) * n + (1 + j)] = static_cast<Element>(1 + (i + j) % order);
      }
    }
    return InverseMonoid(std::move(t));
  }

  InverseMonoid direct_product(InverseMonoid const& S, InverseMonoid const& T) {
    auto const  ns = S.size(), nt = T.size(), n = ns * nt;
    MonoidTable t;
    t.size = n;
    t.zero = static_cast<Element>(S.zero() * nt + T.zero());
    t.one  = static_cast<Element>(S.one() * nt + T.one());
    t.mul.resize(n * n);
    t.inv.resize(n);
    for (Element a = 0; a < ns; ++a) {
      for (Element b = 0; b < nt; ++b) {
        auto const i = a * nt + b;
        t.inv[i]     = static_cast<Element>(S.inv(a) * nt + T.inv(b));
        t.labels.push_back("(" + S.label(a) + "," + T.label(b) + ")");
        for (Element c = 0; c < ns; ++c) {
          for (Element d = 0; d < nt; ++d) {
            t.mul[i * n + c * nt + d] = static_cast<Element>(S.mul(a, c) * nt + T.mul(b, d));
          }
        }
      }
    }
    return InverseMonoid(std::move(t));
  }

  InverseMonoid clifford_example() {
    return direct_product(group_with_zero(2), group_with_zero(2));
  }

  InverseMonoid non_boolean_semilattice() {
    // 0 < g < e, f < 1 and e f = g.
    enum : Element { Z = 0, G = 1, E = 2, F = 3, I = 4 };
    std::vector<std::vector<Element>> const rows = {
        {Z, Z, Z, Z, Z}, {Z, G, G, G, G}, {Z, G, E, G, E}, {Z, G, G, F, F}, {Z, G, E, F, I}};
    MonoidTable t;
    t.size   = 5;
    t.zero   = Z;
    t.one    = I;
    t.inv    = {Z, G, E, F, I};
    t.labels = {"0", "g", "e", "f", "1"};
    for (auto const& r : rows) {
      t.mul.insert(t.mul.end(), r.begin(), r.end());
    }
    return InverseMonoid(std::move(t));
  }

  InverseMonoid brandt_monoid() {
    // Matrix units of a 2x2 Brandt semigroup: e = e11, f = e22, s = e21,
    // s^-1 = e12, plus an adjoined identity.
    enum : Element { Z = 0, E = 1, F = 2, S = 3, T = 4, I = 5 };
    std::vector<std::vector<Element>> const rows = {
        {Z, Z, Z, Z, Z, Z},  // 0
        {Z, E, Z, Z, T, E},  // e11
        {Z, Z, F, S, Z, F},  // e22
        {Z, S, Z, Z, F, S},  // e21
        {Z, Z, T, E, Z, T},  // e12
        {Z, E, F, S, T, I},  // 1
    };
    MonoidTable t;
    t.size   = 6;
    t.zero   = Z;
    t.one    = I;
    t.inv    = {Z, E, F, T, S, I};
    t.labels = {"0", "e", "f", "s", "s^-1", "1"};
    for (auto const& r : rows) {
      t.mul.insert(t.mul.end(), r.begin(), r.end());
    }
    return InverseMonoid(std::move(t));
  }

}  // namespace stonework
