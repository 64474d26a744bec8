#include "stonework/serialization.hpp"

#include <algorithm>
#include <fstream>

#include "stonework/errors.hpp"

namespace stonework {

  namespace {

    // nlohmann type errors become InvalidInput.
    template <typename F>
    auto guarded(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (nlohmann::json::exception const& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
      }
    }

    std::vector<std::string> labels_or_default(Json const& j, std::size_t n) {
      if (j.contains("labels")) {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        if (labels.size() != n) {
          throw InvalidInput("label count does not match the size");
        }
        return labels;
      }
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
      return labels;
    }

  }  // namespace

  Json to_json(InverseMonoid const& S) {
    auto t   = S.table();
    Json mul = Json::array();
    for (std::size_t a = 0; a < t.size; ++a) {
      mul.push_back(std::vector<Element>(t.mul.begin() + static_cast<std::ptrdiff_t>(a * t.size),
                                         t.mul.begin() + static_cast<std::ptrdiff_t>((a + 1) * t.size)));
    }
    return Json{{"n", t.size}, {"zero", t.zero}, {"one", t.one},
                {"inv", t.inv}, {"mul", mul},    {"labels", t.labels}};
  }

  InverseMonoid monoid_from_json(Json const& j, MonoidLimits const& limits) {
    auto table = guarded("monoid", [&] {
      MonoidTable t;
      t.size   = j.at("n").get<std::size_t>();
      t.zero   = j.at("zero").get<Element>();
      t.one    = j.at("one").get<Element>();
      t.inv    = j.at("inv").get<std::vector<Element>>();
      for (auto const& row : j.at("mul").get<std::vector<std::vector<Element>>>()) {
        if (row.size() != t.size) {
          throw InvalidInput("mul row has the wrong length");
        }
        t.mul.insert(t.mul.end(), row.begin(), row.end());
      }
      t.labels = labels_or_default(j, t.size);
      return t;
    });
    return InverseMonoid(std::move(table), limits);
  }

  Json to_json(FiniteGroupoid const& G) {
    auto t = G.table();
    Json compose = Json::array();
    for (std::size_t g = 0; g < t.size; ++g) {
      compose.push_back(std::vector<std::int32_t>(
          t.compose.begin() + static_cast<std::ptrdiff_t>(g * t.size),
          t.compose.begin() + static_cast<std::ptrdiff_t>((g + 1) * t.size)));
    }
    std::vector<std::size_t> identities;
    G.identities().for_each([&](std::size_t e) { identities.push_back(e); });
    return Json{{"m", t.size},  {"identities", identities}, {"d", t.dom}, {"r", t.ran},
                {"inv", t.inv}, {"compose", compose},       {"labels", t.labels}};
  }

  FiniteGroupoid groupoid_from_json(Json const& j) {
    auto [table, identities] = guarded("groupoid", [&] {
      GroupoidTable t;
      t.size = j.at("m").get<std::size_t>();
      t.dom  = j.at("d").get<std::vector<Arrow>>();
      t.ran  = j.at("r").get<std::vector<Arrow>>();
      t.inv  = j.at("inv").get<std::vector<Arrow>>();
      auto rows = j.at("compose").get<std::vector<std::vector<std::int32_t>>>();
      if (rows.size() != t.size) {
        throw InvalidInput("compose matrix has the wrong number of rows");
      }
      for (auto const& row : rows) {
        if (row.size() != t.size) {
          throw InvalidInput("compose matrix has a short row");
        }
        t.compose.insert(t.compose.end(), row.begin(), row.end());
      }
      t.labels = labels_or_default(j, t.size);
      std::vector<std::size_t> ids;
      if (j.contains("identities")) {
        ids = j.at("identities").get<std::vector<std::size_t>>();
      }
      return std::pair{t, ids};
    });
    FiniteGroupoid G(std::move(table));
    if (!identities.empty() || j.contains("identities")) {
      std::vector<std::size_t> actual;
      G.identities().for_each([&](std::size_t e) { actual.push_back(e); });
      std::sort(identities.begin(), identities.end());
      if (identities != actual) {
        throw InvalidInput("listed identities do not match d(g) = g");
      }
    }
    return G;
  }

  Json to_json(UltrafilterGroupoid const& GS) {
    auto const& G            = GS.groupoid();
    Json        ultrafilters = Json::array();
    for (auto const& U : GS.ultrafilters()) {
      ultrafilters.push_back(U.members().to_vector());
    }
    std::vector<Arrow> d, r;
    Json               triples = Json::array();
    for (Arrow a = 0; a < G.size(); ++a) {
      d.push_back(G.dom(a));
      r.push_back(G.ran(a));
      for (Arrow b = 0; b < G.size(); ++b) {
        if (auto c = G.compose(a, b)) {
          triples.push_back({a, b, *c});
        }
      }
    }
    return Json{{"ultrafilters", ultrafilters}, {"d", d}, {"r", r}, {"compose", triples}};
  }

  Json to_json(MonoidMorphism const& theta) {
    return Json{{"source", to_json(*theta.source)},
                {"target", to_json(*theta.target)},
                {"map", theta.map}};
  }

  OwnedMorphism morphism_from_json(Json const& j, MonoidLimits const& limits) {
    OwnedMorphism out;
    out.source = std::make_shared<InverseMonoid const>(
        monoid_from_json(guarded("morphism", [&] { return j.at("source"); }), limits));
    out.target = std::make_shared<InverseMonoid const>(
        monoid_from_json(guarded("morphism", [&] { return j.at("target"); }), limits));
    auto map = guarded("morphism", [&] { return j.at("map").get<std::vector<Element>>(); });
    if (map.size() != out.source->size()) {
      throw InvalidInput("morphism map has the wrong length");
    }
    for (auto v : map) {
      if (v >= out.target->size()) {
        throw InvalidInput("morphism image out of range");
      }
    }
    out.morphism = MonoidMorphism{out.source.get(), out.target.get(), std::move(map)};
    return out;
  }

  Json to_json(CoveringFunctor const& f) {
    return Json{{"source", to_json(*f.source)},
                {"target", to_json(*f.target)},
                {"map", f.arrow_map}};
  }

  OwnedFunctor functor_from_json(Json const& j) {
    OwnedFunctor out;
    out.source = std::make_shared<FiniteGroupoid const>(
        groupoid_from_json(guarded("functor", [&] { return j.at("source"); })));
    out.target = std::make_shared<FiniteGroupoid const>(
        groupoid_from_json(guarded("functor", [&] { return j.at("target"); })));
    auto map = guarded("functor", [&] { return j.at("map").get<std::vector<Arrow>>(); });
    if (map.size() != out.source->size()) {
      throw InvalidInput("functor map has the wrong length");
    }
    for (auto v : map) {
      if (v >= out.target->size()) {
        throw InvalidInput("functor image out of range");
      }
    }
    out.functor = CoveringFunctor{out.source.get(), out.target.get(), std::move(map)};
    return out;
  }

  Json to_json(poly::CnElement const& A) {
    return Json{{"n", A.arity()}, {"expr", poly::format_cn(A)}};
  }

  poly::CnElement cn_from_json(Json const& j) {
    auto [n, expr] = guarded("cn-element", [&] {
      return std::pair{j.at("n").get<std::size_t>(), j.at("expr").get<std::string>()};
    });
    return poly::parse_cn(expr, n);
  }

  Json to_json(LawReport const& report) {
    Json laws = Json::array();
    for (auto const& l : report.laws) {
      laws.push_back(Json{{"law", l.name},
                          {"instances", l.instances},
                          {"failures", l.failures},
                          {"witnesses", l.witnesses}});
    }
    return laws;
  }

  Json to_json(IsoCertificate const& cert) {
    return Json{{"direction", cert.direction},   {"source_size", cert.source_size},
                {"target_size", cert.target_size}, {"forward", cert.forward},
                {"backward", cert.backward},     {"checked_laws", to_json(cert.laws)},
                {"notes", cert.notes},           {"elapsed_ms", cert.elapsed_ms},
                {"ok", cert.ok()}};
  }

  Json to_json(BooleanCertificate const& cert, InverseMonoid const& S) {
    Json out{{"boolean", cert.is_boolean}};
    if (cert.witness) {
      std::vector<std::string> elements;
      for (auto e : cert.witness->elements) {
        elements.push_back(S.label(e));
      }
      out["witness"] = Json{{"axiom", std::string(to_string(cert.witness->axiom))},
                            {"elements", elements},
                            {"detail", cert.witness->detail}};
    }
    return out;
  }

  Json to_json(CorpusEntry const& entry) {
    return Json{{"name", entry.name}, {"kind", entry.kind}, {"payload", entry.payload}};
  }

  CorpusEntry entry_from_json(Json const& j) {
    auto entry = guarded("corpus entry", [&] {
      return CorpusEntry{j.at("name").get<std::string>(), j.at("kind").get<std::string>(),
                         j.at("payload")};
    });
    if (entry.kind == "monoid") {
      monoid_from_json(entry.payload);
    } else if (entry.kind == "groupoid") {
      groupoid_from_json(entry.payload);
    } else if (entry.kind == "morphism") {
      morphism_from_json(entry.payload);
    } else if (entry.kind == "functor") {
      functor_from_json(entry.payload);
    } else if (entry.kind == "cn-element") {
      cn_from_json(entry.payload);
    } else {
      throw InvalidInput("unknown entry kind '" + entry.kind + "'");
    }
    return entry;
  }

  std::filesystem::path CorpusStore::path_of(std::string const& name) const {
    if (name.empty() || name.find('/') != std::string::npos || name.front() == '.') {
      throw InvalidInput("bad entry name '" + name + "'");
    }
    return dir_ / (name + ".json");
  }

  void CorpusStore::save(CorpusEntry const& entry) const {
    entry_from_json(to_json(entry));  // never write what load() would reject
    std::filesystem::create_directories(dir_);
    std::ofstream out(path_of(entry.name));
    if (!out) {
      throw Error("cannot write " + path_of(entry.name).string());
    }
    out << to_json(entry).dump(1) << "\n";
  }

  CorpusEntry CorpusStore::load(std::string const& name) const {
    auto          path = path_of(name);
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("no entry '" + name + "' in " + dir_.string());
    }
    Json j;
    try {
      j = Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(path.string() + ": " + e.what());
    }
    auto entry = entry_from_json(j);
    if (entry.name != name) {
      throw InvalidInput(path.string() + " holds entry '" + entry.name + "'");
    }
    return entry;
  }

  bool CorpusStore::contains(std::string const& name) const {
    return std::filesystem::exists(path_of(name));
  }

  std::vector<std::string> CorpusStore::names() const {
    std::vector<std::string> out;
    if (!std::filesystem::exists(dir_)) {
      return out;
    }
    for (auto const& f : std::filesystem::directory_iterator(dir_)) {
      if (f.path().extension() == ".json") {
        out.push_back(f.path().stem().string());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace stonework
