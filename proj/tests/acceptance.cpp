// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stonework/duality.hpp"
#include "stonework/errors.hpp"
#include "stonework/laws.hpp"
#include "stonework/monoid_catalog.hpp"
#include "stonework/polycyclic.hpp"

using namespace stonework;
using namespace stonework::poly;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  struct Tally {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::string first;

    void expect(bool ok, std::string const& what) {
      ++checks;
      if (!ok && failed++ == 0) {
        first = what;
      }
    }
    Outcome outcome(std::string summary) const {
      std::ostringstream os;
      os << summary << "; " << checks << " checks, " << failed << " failed";
      if (failed) {
        os << ", first: " << first;
      }
      return {failed == 0, os.str()};
    }
  };

  struct NamedMonoid {
    std::string   name;
    InverseMonoid S;
  };

  std::vector<NamedMonoid> corpus_monoids() {
    std::vector<NamedMonoid> out;
    for (std::size_t k = 1; k <= 3; ++k) {
      out.push_back({"ix" + std::to_string(k), symmetric_inverse_monoid(k)});
    }
    for (std::size_t a = 1; a <= 4; ++a) {
      out.push_back({"bool-algebra-" + std::to_string(1u << a), boolean_algebra(a)});
    }
    out.push_back({"gz2", group_with_zero(2)});
    out.push_back({"gz3", group_with_zero(3)});
    out.push_back({"clifford", clifford_example()});
    return out;
  }

  // ------------------------------------------------------------------ 1
  Outcome round_trips() {
    auto  start = std::chrono::steady_clock::now();
    Tally t;
    for (auto const& [name, S] : corpus_monoids()) {
      auto cert = round_trip_monoid(S);
      t.expect(cert.ok(), name + " round trip");
      t.expect(cert.target_size == S.size(), name + " |A(G(S))| = |S|");
    }
    std::vector<std::pair<std::string, FiniteGroupoid>> groupoids;
    for (std::size_t k = 1; k <= 3; ++k) {
      groupoids.emplace_back("pair" + std::to_string(k), pair_groupoid(k));
    }
    groupoids.emplace_back("z2", cyclic_group(2));
    groupoids.emplace_back("z2+z3", disjoint_union(cyclic_group(2), cyclic_group(3)));
    for (auto const& [name, G] : groupoids) {
      auto cert = round_trip_groupoid(G);
      t.expect(cert.ok(), name + " round trip");
      t.expect(cert.target_size == G.size(), name + " |G(A(G))| = |G|");
    }
    auto I3 = round_trip_monoid(symmetric_inverse_monoid(3));
    t.expect(I3.source_size == 34 && I3.target_size == 34, "I(3) 34 = 34");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(secs < 10.0, "runtime under 10 s");
    std::ostringstream os;
    os << "10 monoids, 5 groupoids, I(3) " << I3.source_size << " = " << I3.target_size << ", "
       << secs << " s";
    return t.outcome(os.str());
  }

  // ------------------------------------------------------------------ 2
  Outcome pair_groupoids() {
    Tally t;
    for (std::size_t k : {2u, 3u}) {
      auto report = check_pair_groupoid_iso(symmetric_inverse_monoid(k), k);
      t.expect(report.ok(), "G(I(" + std::to_string(k) + ")) vs X x X");
    }
    return t.outcome("G(I(X)) = X x X for |X| = 2, 3");
  }

  // ------------------------------------------------------------------ 3
  Outcome law_suite() {
    Tally       t;
    std::size_t instances = 0, laws = 0;
    for (auto const& [name, S] : corpus_monoids()) {
      if (S.size() > 64) {
        continue;
      }
      UltrafilterGroupoid GS(S);
      LawReport           report = check_order_laws(S);
      report.append(check_filter_laws(S));
      report.append(verify_K_laws(GS));
      for (auto const& law : report.laws) {
        ++laws;
        instances += law.instances;
        t.expect(law.ok(), name + " " + law.name);
        t.expect(law.instances > 0, name + " " + law.name + " ran no instances");
      }
    }
    std::ostringstream os;
    os << laws << " law runs, " << instances << " instances";
    return t.outcome(os.str());
  }

  // ------------------------------------------------------------------ 4
  Outcome clifford() {
    Tally               t;
    auto const          S      = clifford_example();
    auto                report = clifford_check(S);
    t.expect(report.ok(), "clifford_check");
    UltrafilterGroupoid GS(S);
    for (auto const& U : GS.ultrafilters()) {
      t.expect(filter_product(filter_inverse(U), U) == filter_product(U, filter_inverse(U)),
               "A^-1 A = A A^-1");
    }
    auto const& G = GS.groupoid();
    for (Arrow g = 0; g < G.size(); ++g) {
      t.expect(G.dom(g) == G.ran(g), "d = r on " + G.label(g));
    }
    return t.outcome(std::to_string(GS.size()) + " ultrafilters");
  }

  // ------------------------------------------------------------------ 5
  Outcome polycyclic_identities() {
    Tally t;
    for (std::size_t n : {2u, 3u}) {
      auto acc = CnElement::zero(n);
      for (Letter i = 0; i < n; ++i) {
        auto next = cn_join(acc, psi(PolyElement::pair({i}, {i}), n));
        t.expect(next.has_value(), "join of a_i a_i^-1 exists");
        if (next) {
          acc = *next;
        }
      }
      t.expect(acc == CnElement::one(n), "join of a_i a_i^-1 = 1 in C_" + std::to_string(n));
    }

    // psi(ab) = psi(a) psi(b) over all of P_2 with |x|, |y| <= 3
    std::vector<PolyElement> P{PolyElement::make_zero()};
    auto words = oracle::words_up_to(2, 3);
    for (auto const& x : words) {
      for (auto const& y : words) {
        P.push_back(PolyElement::pair(x, y));
      }
    }
    std::vector<CnElement> images;
    for (auto const& a : P) {
      images.push_back(psi(a, 2));
    }
    std::size_t psi_checks = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
      for (std::size_t j = 0; j < P.size(); ++j) {
        ++psi_checks;
        t.expect(psi(poly_mul(P[i], P[j]), 2) == cn_mul(images[i], images[j]),
                 format_poly(P[i]) + " " + format_poly(P[j]));
      }
    }

    // random operands against truncated actions
    std::mt19937_64 rng(0x5eed);
    std::size_t     joins = 0;
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = i % 2 == 0 ? 2 : 3;
      auto        A = random_cn(rng, n, 3);
      auto        B = random_cn(rng, n, 3);
      auto        D = A.max_length() + B.max_length() + 1;
      auto        a = oracle::act_union(A.cones(), n, A.max_length());
      auto        b = oracle::act_union(B.cones(), n, D);
      t.expect(a && b, "operands are bisections");
      if (!a || !b) {
        continue;
      }
      t.expect(finite_depth_oracle(cn_mul(A, B), D) == oracle::compose(*a, A.max_length(), *b),
               "cn_mul " + format_cn(A) + " " + format_cn(B));
      auto cones = A.cones();
      cones.insert(cones.end(), B.cones().begin(), B.cones().end());
      auto U = oracle::act_union(cones, n, D);
      auto J = cn_join(A, B);
      t.expect(U.has_value() == J.has_value(), "cn_join compatibility " + format_cn(A) + " "
                                                   + format_cn(B));
      if (U && J) {
        ++joins;
        t.expect(finite_depth_oracle(*J, D) == *U, "cn_join " + format_cn(A) + " " + format_cn(B));
      }
    }
    std::ostringstream os;
    os << psi_checks << " psi pairs, 1000 random pairs (" << joins << " compatible)";
    return t.outcome(os.str());
  }

  // ------------------------------------------------------------------ 6
  Outcome thompson() {
    Tally           t;
    std::mt19937_64 rng(0x7e57);
    auto const      one = CnElement::one(2);
    for (int i = 0; i < 500; ++i) {
      auto u  = random_unit(rng, 2, 1 + i % 5);
      auto v  = random_unit(rng, 2, 1 + (i / 5) % 5);
      auto uv = cn_mul(u, v);
      t.expect(is_unit(uv), "product is a unit");
      t.expect(cn_mul(uv, uv.inverse()) == one && cn_mul(uv.inverse(), uv) == one,
               "product is invertible");
      t.expect(is_unit(u.inverse()), "inverse is a unit");
    }
    std::size_t units = 0;
    for (int i = 0; i < 1000; ++i) {
      auto A = i % 2 == 0 ? random_unit(rng, 2, 1 + i % 4) : random_cn(rng, 2, 1 + i % 4);
      bool by_definition = cn_mul(A, A.inverse()) == one && cn_mul(A.inverse(), A) == one;
      units += by_definition;
      t.expect(is_unit(A) == by_definition, "is_unit " + format_cn(A));
    }
    return t.outcome("500 unit pairs, 1000 elements (" + std::to_string(units) + " units)");
  }

  // ------------------------------------------------------------------ 7
  Outcome cuntz_bijection() {
    Tally           t;
    std::mt19937_64 rng(0xc0de);
    std::uniform_int_distribution<std::size_t> length(0, 4);
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = i % 2 == 0 ? 2 : 3;
      auto        z = random_infinite(rng, n, 4, 3);
      auto        y = z.prefix(length(rng));
      auto        x = random_word(rng, n, 4);
      // canonical input: the shortest representative
      auto point = arrow_to_ultrafilter(ultrafilter_to_arrow(PolyElement::pair(x, y), z));
      auto g     = ultrafilter_to_arrow(point.rep, point.z);
      t.expect(arrow_to_ultrafilter(g) == point, "ultrafilter -> arrow -> ultrafilter");
      t.expect(ultrafilter_to_arrow(arrow_to_ultrafilter(g).rep, arrow_to_ultrafilter(g).z) == g,
               "arrow -> ultrafilter -> arrow");
    }
    for (int i = 0; i < 200; ++i) {
      std::size_t n = i % 2 == 0 ? 2 : 3;
      auto        z = random_infinite(rng, n, 4, 3);
      auto        y = z.prefix(length(rng));
      auto        x = random_word(rng, n, 4);
      auto        p = z.drop(y.size()).prefix(1 + length(rng));
      auto        a = ultrafilter_to_arrow(PolyElement::pair(x, y), z);
      auto        b = ultrafilter_to_arrow(PolyElement::pair(concat(x, p), concat(y, p)), z);
      t.expect(a == b, "representatives " + format_word(x) + "/" + format_word(y) + " and "
                           + format_word(concat(x, p)) + "/" + format_word(concat(y, p)));
      // membership does not depend on the representative either
      for (auto const& q : oracle::words_up_to(n, 2)) {
        auto probe = PolyElement::pair(concat(x, q), y);
        t.expect(ultrafilter_contains(a, probe) == ultrafilter_contains(b, probe), "membership");
      }
    }
    return t.outcome("1000 round trips, 200 representative pairs");
  }

  // ------------------------------------------------------------------ 8
  Outcome negative_controls() {
    Tally t;

    auto const bad  = non_boolean_semilattice();
    auto       cert = check_boolean(bad);
    bool bm1 = !cert.is_boolean && cert.witness && cert.witness->axiom == BooleanAxiom::BM1
               && cert.witness->elements.size() == 1 && bad.label(cert.witness->elements[0]) == "g";
    t.expect(bm1, "non-boolean E(S) gives BM1 witness [g]");

    auto            G = pair_groupoid(2);
    auto            H = discrete_groupoid(1);
    CoveringFunctor f{&G, &H, std::vector<Arrow>(G.size(), 0)};
    auto            cover = check_covering(f);
    t.expect(!cover.ok && cover.property == "star-injectivity"
                 && cover.witness == std::vector<Arrow>{0, 2},
             "projection gives star-injectivity witness (1,1), (2,1)");

    auto const          I2 = symmetric_inverse_monoid(2);
    UltrafilterGroupoid GS(I2);
    auto probe = probe_union(GS, *I2.find_label("{1->1}"), *I2.find_label("{1->2}"));
    bool shares = probe.violation && probe.violation->shared == "domain"
                  && GS.groupoid().dom(probe.violation->first)
                         == GS.groupoid().dom(probe.violation->second);
    t.expect(!probe.join_exists && shares, "K_s u K_t with incompatible s, t is not a bisection");

    return t.outcome("BM1 / star-injectivity / incompatible union");
  }

}  // namespace

int main() {
  struct Criterion {
    int                      number;
    char const*              title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "duality round trips", round_trips},
      {2, "G(I(X)) is the pair groupoid", pair_groupoids},
      {3, "order, filter and basic-open laws", law_suite},
      {4, "Clifford monoids have d = r", clifford},
      {5, "polycyclic identities and oracle agreement", polycyclic_identities},
      {6, "unit group of C_2", thompson},
      {7, "ultrafilters of P_n as Cuntz arrows", cuntz_bijection},
      {8, "negative controls", negative_controls},
  };
  bool all = true;
  for (auto const& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d: %s - %s (%s)\n", c.number, o.pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str());
  }
  return all ? 0 : 1;
}
