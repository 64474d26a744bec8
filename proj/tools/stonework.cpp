// stonework: build, check and dualize finite boolean inverse monoids,
// finite groupoids and C_n elements kept in a plain JSON store.
//
// Exit codes: 0 success, 1 law failure, 2 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "stonework/bisection_monoid.hpp"
#include "stonework/duality.hpp"
#include "stonework/errors.hpp"
#include "stonework/laws.hpp"
#include "stonework/monoid_catalog.hpp"
#include "stonework/serialization.hpp"

using namespace stonework;

namespace {

  constexpr int exit_ok      = 0;
  constexpr int exit_failure = 1;
  constexpr int exit_input   = 2;

  struct Config {
    std::string   store  = "stonework-store";
    std::uint64_t seed   = 0x5eed;
    std::size_t   max_size = 4096;
    std::string   format = "text";

    MonoidLimits monoid_limits() const {
      MonoidLimits l;
      l.max_size = max_size;
      l.seed     = seed;
      return l;
    }
    BisectionLimits bisection_limits() const {
      BisectionLimits l;
      l.max_size = max_size;
      return l;
    }
  };

  struct BuildParams {
    std::size_t size = 2, points = 2, atoms = 2, order = 2, n = 2;
    std::string expr = "{e/e}";
    std::string name;
  };

  // Result of one command: a JSON report plus a text rendering.
  struct Outcome {
    Json        report;
    std::string text;
    std::string dot;
    bool        ok = true;
  };

  int emit(Config const& cfg, Outcome const& out) {
    if (cfg.format == "json") {
      std::cout << out.report.dump(2) << "\n";
    } else if (cfg.format == "dot") {
      if (out.dot.empty()) {
        std::cerr << "error: no graph to draw for this command; use --format json or text\n";
        return exit_input;
      }
      std::cout << out.dot;
    } else {
      std::cout << out.text;
    }
    return out.ok ? exit_ok : exit_failure;
  }

  std::string law_lines(LawReport const& report) {
    std::string out;
    for (auto const& l : report.laws) {
      out += "  " + l.name + ": " + std::to_string(l.instances) + " instances, "
             + std::to_string(l.failures) + " failures\n";
      for (auto const& w : l.witnesses) {
        out += "    witness: " + w + "\n";
      }
    }
    return out;
  }

  std::string boolean_line(BooleanCertificate const& cert, InverseMonoid const& S) {
    std::string out = std::string("boolean = ") + (cert.is_boolean ? "true" : "false");
    if (cert.witness) {
      out += ", " + std::string(to_string(cert.witness->axiom)) + " witness [";
      for (std::size_t i = 0; i < cert.witness->elements.size(); ++i) {
        out += (i ? ", " : "") + S.label(cert.witness->elements[i]);
      }
      out += "]: " + cert.witness->detail;
    }
    return out;
  }

  // ------------------------------------------------------------- build

  CorpusEntry make_entry(std::string const& generator, BuildParams const& p) {
    auto named = [&](std::string fallback) { return p.name.empty() ? fallback : p.name; };
    auto monoid = [&](std::string name, InverseMonoid const& S) {
      return CorpusEntry{named(std::move(name)), "monoid", to_json(S)};
    };
    auto groupoid = [&](std::string name, FiniteGroupoid const& G) {
      return CorpusEntry{named(std::move(name)), "groupoid", to_json(G)};
    };
    auto const k = [](std::size_t v) { return std::to_string(v); };

    if (generator == "ix") return monoid("ix" + k(p.size), symmetric_inverse_monoid(p.size));
    if (generator == "bool-algebra") {
      auto S = boolean_algebra(p.atoms);
      return monoid("bool-algebra-" + k(S.size()), S);
    }
    if (generator == "group-zero") return monoid("gz" + k(p.order), group_with_zero(p.order));
    if (generator == "clifford") return monoid("clifford", clifford_example());
    if (generator == "bad-monoid") return monoid("bad-monoid", non_boolean_semilattice());
    if (generator == "brandt") return monoid("brandt", brandt_monoid());
    if (generator == "pair-groupoid") return groupoid("pair" + k(p.points), pair_groupoid(p.points));
    if (generator == "group") return groupoid("z" + k(p.order), cyclic_group(p.order));
    if (generator == "discrete") return groupoid("discrete" + k(p.points), discrete_groupoid(p.points));
    if (generator == "projection") {
      // X x X onto the one-arrow groupoid: a functor that is not a covering.
      auto            G = pair_groupoid(p.points);
      auto            H = discrete_groupoid(1);
      CoveringFunctor f{&G, &H, std::vector<Arrow>(G.size(), 0)};
      return CorpusEntry{named("projection" + k(p.points)), "functor", to_json(f)};
    }
    if (generator == "bool-embedding") {
      // Subsets of X as partial identities of I(X): M1 and M2 hold, M3 fails.
      auto S    = boolean_algebra(p.points);
      auto T    = symmetric_inverse_monoid(p.points);
      auto maps = partial_bijections(p.points);
      MonoidMorphism theta{&S, &T, {}};
      for (std::size_t mask = 0; mask < S.size(); ++mask) {
        PartialBijection id{std::vector<int>(p.points, -1)};
        for (std::size_t x = 0; x < p.points; ++x) {
          if (mask >> x & 1u) {
            id.image[x] = static_cast<int>(x);
          }
        }
        auto it = std::find(maps.begin(), maps.end(), id);
        theta.map.push_back(static_cast<Element>(it - maps.begin()));
      }
      return CorpusEntry{named("bool-embedding" + k(p.points)), "morphism", to_json(theta)};
    }
    if (generator == "cn-element") {
      return CorpusEntry{named("cn-element"), "cn-element", to_json(poly::parse_cn(p.expr, p.n))};
    }
    throw InvalidInput("unknown generator '" + generator + "'");
  }

  Outcome describe_entry(CorpusEntry const& entry, Config const& cfg) {
    Outcome out;
    out.report = Json{{"name", entry.name}, {"kind", entry.kind}};
    if (entry.kind == "monoid") {
      auto S    = monoid_from_json(entry.payload, cfg.monoid_limits());
      auto cert = check_boolean(S);
      out.report["elements"]    = S.size();
      out.report["idempotents"] = S.idempotents().count();
      out.report["certificate"] = to_json(cert, S);
      out.text = entry.name + ": monoid, " + std::to_string(S.size()) + " elements, "
                 + boolean_line(cert, S) + "\n";
    } else if (entry.kind == "groupoid") {
      auto G = groupoid_from_json(entry.payload);
      out.report["arrows"]     = G.size();
      out.report["identities"] = G.identities().count();
      out.text = entry.name + ": groupoid, " + std::to_string(G.size()) + " arrows, "
                 + std::to_string(G.identities().count()) + " identities\n";
      out.dot = to_dot(G, entry.name);
    } else if (entry.kind == "morphism") {
      auto m = morphism_from_json(entry.payload, cfg.monoid_limits());
      out.report["source_size"] = m.source->size();
      out.report["target_size"] = m.target->size();
      out.text = entry.name + ": morphism, " + std::to_string(m.source->size()) + " -> "
                 + std::to_string(m.target->size()) + " elements\n";
    } else if (entry.kind == "functor") {
      auto f = functor_from_json(entry.payload);
      out.report["source_arrows"] = f.source->size();
      out.report["target_arrows"] = f.target->size();
      out.text = entry.name + ": functor, " + std::to_string(f.source->size()) + " -> "
                 + std::to_string(f.target->size()) + " arrows\n";
    } else {
      auto A = cn_from_json(entry.payload);
      out.report["canonical"] = poly::format_cn(A);
      out.report["unit"]      = poly::is_unit(A);
      out.text = entry.name + ": C_" + std::to_string(A.arity()) + " element "
                 + poly::format_cn(A) + ", unit = " + (poly::is_unit(A) ? "true" : "false") + "\n";
    }
    return out;
  }

  // ------------------------------------------------------------- check

  void add_laws(Outcome& out, std::string const& title, LawReport const& report) {
    out.report["laws"][title] = to_json(report);
    out.text += title + ": " + (report.ok() ? "ok" : "FAILED") + "\n" + law_lines(report);
    out.ok = out.ok && report.ok();
  }

  Outcome check_monoid(InverseMonoid const& S, std::string const& set, Config const& cfg) {
    Outcome out;
    auto    cert          = check_boolean(S);
    out.report["boolean"] = to_json(cert, S);
    out.text              = boolean_line(cert, S) + "\n";
    if (set == "bm") {
      out.ok = cert.is_boolean;
      return out;
    }
    if (!cert.is_boolean) {
      // every other law set needs a boolean inverse monoid
      out.ok = false;
      return out;
    }
    bool all = set == "all";
    if (all || set == "order") add_laws(out, "order", check_order_laws(S));
    if (all || set == "filters") add_laws(out, "filters", check_filter_laws(S));
    if (all || set == "basic-opens" || set == "lemma2.21") {
      UltrafilterGroupoid GS(S);
      add_laws(out, "basic-opens", verify_K_laws(GS));
    }
    if (all || set == "clifford") {
      auto c                     = clifford_check(S);
      out.report["clifford"]     = c.is_clifford;
      if (c.witness) {
        out.report["clifford_witness"] = S.label(*c.witness);
        out.text += "clifford = false, witness " + S.label(*c.witness) + "\n";
      } else {
        out.text += "clifford = true\n";
        add_laws(out, "clifford", c.laws);
      }
    }
    if (all || set == "round-trip") {
      auto iso                 = round_trip_monoid(S, cfg.bisection_limits());
      out.report["round_trip"] = to_json(iso);
      out.text += "round trip: " + std::to_string(iso.source_size) + " -> "
                  + std::to_string(iso.target_size) + (iso.ok() ? ", ok\n" : ", FAILED\n");
      out.ok = out.ok && iso.ok();
    }
    return out;
  }

  Outcome check_groupoid(FiniteGroupoid const& G, std::string const& set, Config const& cfg) {
    Outcome out;
    bool    all = set == "all";
    if (all || set == "bisections") {
      LawReport report;
      auto      subsets    = bisections_by_subsets(G);
      auto      injections = bisections_by_injections(G);
      report.add("bisection.enumerations-agree").check(subsets == injections, [&] {
        return std::to_string(subsets.size()) + " vs " + std::to_string(injections.size());
      });
      auto& law = report.add("bisection.product-form-agrees");
      for (auto const& B : subsets) {
        law.check(is_bisection_by_products(G, B), [] { return std::string("bisection"); });
      }
      out.report["bisections"] = subsets.size();
      add_laws(out, "bisections", report);
    }
    if (all || set == "round-trip") {
      auto iso                 = round_trip_groupoid(G, cfg.bisection_limits());
      out.report["round_trip"] = to_json(iso);
      out.text += "round trip: " + std::to_string(iso.source_size) + " -> "
                  + std::to_string(iso.target_size) + (iso.ok() ? ", ok\n" : ", FAILED\n");
      out.ok = out.ok && iso.ok();
    }
    return out;
  }

  Outcome check_morphism(MonoidMorphism const& theta, std::string const& set) {
    Outcome out;
    bool    all = set == "all";
    if (all || set == "morphism") {
      auto r                  = validate_morphism(theta);
      out.report["morphism"]  = Json{{"ok", r.ok}, {"failed", r.failed}, {"detail", r.detail}};
      out.text += r.ok ? std::string("morphism: M1-M3 hold\n")
                       : "morphism: fails " + r.failed + ": " + r.detail + "\n";
      out.ok = r.ok;
    }
    if (all || set == "pullback") {
      auto        p = weak_morphism_pullback(theta);
      auto const& T = *theta.target;
      auto        labels = [&](std::vector<Element> const& v) {
        std::vector<std::string> out;
        for (auto e : v) {
          out.push_back(T.label(e) + "^");
        }
        return out;
      };
      out.report["pullback"] = Json{{"idempotent_ok", p.idempotent_ok},
                                    {"empty_preimage", labels(p.empty_preimage)},
                                    {"non_ultra_preimage", labels(p.non_ultra_preimage)}};
      out.text += std::string("idempotent ultrafilters pull back to idempotent ultrafilters: ")
                  + (p.idempotent_ok ? "yes" : "NO") + "\n";
      for (auto const& l : labels(p.empty_preimage)) {
        out.text += "  empty preimage: " + l + "\n";
      }
      for (auto const& l : labels(p.non_ultra_preimage)) {
        out.text += "  preimage not an ultrafilter: " + l + "\n";
      }
      if (set == "pullback") {
        out.ok = p.idempotent_ok;
      }
    }
    return out;
  }

  Outcome check_functor_entry(CoveringFunctor const& f, std::string const& set) {
    Outcome out;
    auto    r = set == "functor" ? check_functor(f) : check_covering(f);
    std::vector<std::string> witness;
    for (auto g : r.witness) {
      witness.push_back(f.source->label(g));
    }
    out.report["covering"] = Json{{"ok", r.ok},
                                  {"property", r.property},
                                  {"witness", r.witness},
                                  {"witness_labels", witness},
                                  {"detail", r.detail}};
    out.text = r.ok ? std::string("covering functor: ok\n")
                    : "fails " + r.property + ", witness " + Json(witness).dump() + ": "
                          + r.detail + "\n";
    out.ok = r.ok;
    return out;
  }

  Outcome check_cn(poly::CnElement const& A) {
    Outcome out;
    LawReport report;
    auto      one = poly::CnElement::one(A.arity());
    bool      unit = poly::is_unit(A);
    bool      definitional =
        poly::cn_mul(A, A.inverse()) == one && poly::cn_mul(A.inverse(), A) == one;
    report.add("unit.codes-match-definition").check(unit == definitional, [&] {
      return poly::format_cn(A);
    });
    report.add("canonical.idempotent").check(
        poly::canonicalize(A.arity(), A.cones()) == A, [&] { return poly::format_cn(A); });
    out.report["canonical"] = poly::format_cn(A);
    out.report["unit"]      = unit;
    out.text = poly::format_cn(A) + ", unit = " + (unit ? "true" : "false") + "\n";
    add_laws(out, "cn", report);
    return out;
  }

  Outcome run_check(CorpusEntry const& entry, std::string const& set, Config const& cfg) {
    static std::map<std::string, std::vector<std::string>> const sets{
        {"monoid", {"all", "bm", "order", "filters", "basic-opens", "lemma2.21", "clifford", "round-trip"}},
        {"groupoid", {"all", "bisections", "round-trip"}},
        {"morphism", {"all", "morphism", "pullback"}},
        {"functor", {"all", "covering", "functor"}},
        {"cn-element", {"all"}}};
    auto const& allowed = sets.at(entry.kind);
    if (std::find(allowed.begin(), allowed.end(), set) == allowed.end()) {
      throw InvalidInput("law set '" + set + "' does not apply to a " + entry.kind);
    }
    Outcome out;
    if (entry.kind == "monoid") {
      out = check_monoid(monoid_from_json(entry.payload, cfg.monoid_limits()), set, cfg);
    } else if (entry.kind == "groupoid") {
      out = check_groupoid(groupoid_from_json(entry.payload), set, cfg);
    } else if (entry.kind == "morphism") {
      auto m = morphism_from_json(entry.payload, cfg.monoid_limits());
      out    = check_morphism(m.morphism, set);
    } else if (entry.kind == "functor") {
      auto f = functor_from_json(entry.payload);
      out    = check_functor_entry(f.functor, set);
    } else {
      out = check_cn(cn_from_json(entry.payload));
    }
    std::size_t failures = 0;
    if (out.report.contains("laws")) {
      for (auto const& [title, laws] : out.report["laws"].items()) {
        for (auto const& l : laws) {
          failures += l["failures"].get<std::size_t>();
        }
      }
    }
    out.report["entry"]    = entry.name;
    out.report["kind"]     = entry.kind;
    out.report["law_set"]  = set;
    out.report["failures"] = failures;
    out.report["ok"]       = out.ok;
    out.text = entry.name + " [" + set + "]\n" + out.text + (out.ok ? "PASS\n" : "FAIL\n");
    return out;
  }

  // ----------------------------------------------------------- dualize

  Outcome run_dualize(CorpusEntry const& entry, bool round_trip, CorpusStore const& store,
                      Config const& cfg) {
    Outcome     out;
    CorpusEntry dual;
    dual.name = entry.name + "-dual";
    std::optional<IsoCertificate> iso;

    if (entry.kind == "monoid") {
      auto S = monoid_from_json(entry.payload, cfg.monoid_limits());
      if (auto c = check_boolean(S); !c.is_boolean) {
        throw PreconditionError("not a boolean inverse monoid: " + boolean_line(c, S));
      }
      UltrafilterGroupoid GS(S);
      dual.kind    = "groupoid";
      dual.payload = to_json(GS.groupoid());
      dual.payload["ultrafilter_groupoid"] = to_json(GS);
      out.dot      = to_dot(GS.groupoid(), dual.name);
      out.text = "G(" + entry.name + "): " + std::to_string(GS.size()) + " arrows, "
                 + std::to_string(GS.groupoid().identities().count()) + " identities\n";
      if (round_trip) {
        iso = round_trip_monoid(S, cfg.bisection_limits());
      }
    } else if (entry.kind == "groupoid") {
      auto            G = groupoid_from_json(entry.payload);
      BisectionMonoid AG(G, cfg.bisection_limits());
      dual.kind    = "monoid";
      dual.payload = to_json(AG.monoid());
      out.text     = "A(" + entry.name + "): " + std::to_string(AG.size()) + " bisections\n";
      if (round_trip) {
        iso = round_trip_groupoid(G, cfg.bisection_limits());
      }
    } else if (entry.kind == "morphism") {
      auto                m = morphism_from_json(entry.payload, cfg.monoid_limits());
      UltrafilterGroupoid GS(*m.source), GT(*m.target);
      auto                f = functor_G_on_morphism(m.morphism, GS, GT);
      dual.kind    = "functor";
      dual.payload = to_json(f);
      out.text     = "G(theta): " + std::to_string(GT.size()) + " -> "
                 + std::to_string(GS.size()) + " arrows, covering\n";
    } else if (entry.kind == "functor") {
      auto            f = functor_from_json(entry.payload);
      BisectionMonoid AG(*f.source, cfg.bisection_limits()), AH(*f.target, cfg.bisection_limits());
      // re-point the functor at the copies held by the bisection monoids
      CoveringFunctor g{&AG.groupoid(), &AH.groupoid(), f.functor.arrow_map};
      auto            theta = pullback_bisections(g, AG, AH);
      dual.kind    = "morphism";
      dual.payload = to_json(theta);
      out.text     = "A(f): " + std::to_string(AH.size()) + " -> " + std::to_string(AG.size())
                 + " elements\n";
    } else {
      throw InvalidInput("a " + entry.kind + " has no dual here");
    }

    store.save(dual);
    out.report = Json{{"entry", entry.name}, {"dual", Json{{"name", dual.name}, {"kind", dual.kind}}}};
    out.text += "wrote " + store.path_of(dual.name).string() + "\n";
    if (iso) {
      out.report["certificate"] = to_json(*iso);
      out.text += "round trip: " + std::to_string(iso->source_size) + " -> "
                  + std::to_string(iso->target_size) + " in "
                  + std::to_string(iso->elapsed_ms) + " ms, " + (iso->ok() ? "ok" : "FAILED")
                  + "\n" + law_lines(iso->laws);
      out.ok = iso->ok();
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Stone duality for boolean inverse monoids, plus C_n arithmetic"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--store", cfg.store, "Directory of the JSON corpus")
      ->envname("STONEWORK_STORE");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->envname("STONEWORK_SEED");
  app.add_option("--max-size", cfg.max_size, "Largest monoid or bisection monoid")
      ->envname("STONEWORK_MAX_SIZE");
  app.add_option("--format", cfg.format, "Output format")
      ->envname("STONEWORK_FORMAT")
      ->check(CLI::IsMember({"json", "dot", "text"}));

  BuildParams params;
  std::string generator;
  auto*       build = app.add_subcommand("build", "Build a named example into the store");
  build->add_option("generator", generator,
                    "ix, bool-algebra, group-zero, clifford, bad-monoid, brandt, pair-groupoid, "
                    "group, discrete, projection, bool-embedding, cn-element")
      ->required();
  build->add_option("--size", params.size, "|X| for ix");
  build->add_option("--points", params.points, "Points for pair-groupoid, discrete, projection, bool-embedding");
  build->add_option("--atoms", params.atoms, "Atoms for bool-algebra");
  build->add_option("--order", params.order, "Group order for group-zero and group");
  build->add_option("--n", params.n, "Alphabet size for cn-element");
  build->add_option("--expr", params.expr, "C_n element such as {a1/a1a1, a2a1/a1a2, a2a2/a2}");
  build->add_option("--name", params.name, "Store the entry under this name");

  std::string entry_name;
  std::string law_set = "all";
  auto*       check   = app.add_subcommand("check", "Run a law set against a stored entry");
  check->add_option("entry", entry_name, "Entry name")->required();
  check->add_option("--laws", law_set,
                    "all, bm, order, filters, basic-opens (alias lemma2.21), clifford, round-trip, "
                    "bisections, morphism, pullback, covering, functor");

  bool  round_trip = false;
  auto* dualize    = app.add_subcommand("dualize", "Write the dual object of an entry");
  dualize->add_option("entry", entry_name, "Entry name")->required();
  dualize->add_flag("--round-trip", round_trip, "Also certify the double dual isomorphism");

  auto* list = app.add_subcommand("list", "List the stored entries");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }

  CorpusStore store(cfg.store);
  try {
    Outcome out;
    if (build->parsed()) {
      auto entry = make_entry(generator, params);
      store.save(entry);
      out = describe_entry(entry, cfg);
      out.text += "wrote " + store.path_of(entry.name).string() + "\n";
    } else if (check->parsed()) {
      out = run_check(store.load(entry_name), law_set, cfg);
    } else if (dualize->parsed()) {
      out = run_dualize(store.load(entry_name), round_trip, store, cfg);
    } else if (list->parsed()) {
      out.report = Json::array();
      for (auto const& name : store.names()) {
        auto entry = store.load(name);
        out.report.push_back(Json{{"name", name}, {"kind", entry.kind}});
        out.text += name + " (" + entry.kind + ")\n";
      }
    }
    return emit(cfg, out);
  } catch (BoundExceeded const& e) {
    std::cerr << "error: " << e.what()
              << "\n  raise --max-size, or dualize from the monoid side where A(G) is not built\n";
    return exit_input;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
