#ifndef STONEWORK_SERIALIZATION_HPP_
#define STONEWORK_SERIALIZATION_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "stonework/duality.hpp"
#include "stonework/filter.hpp"
#include "stonework/groupoid.hpp"
#include "stonework/inverse_monoid.hpp"
#include "stonework/laws.hpp"
#include "stonework/morphism.hpp"
#include "stonework/polycyclic.hpp"

namespace stonework {

  using Json = nlohmann::json;

  /// {"n", "zero", "one", "inv", "mul", "labels"}; mul is a list of rows.
  Json          to_json(InverseMonoid const& S);
  /// Re-runs every structural check of the constructor. Throws InvalidInput
  /// on malformed JSON.
  InverseMonoid monoid_from_json(Json const& j, MonoidLimits const& limits = {});

  /// {"m", "identities", "d", "r", "inv", "compose", "labels"}; compose is
  /// an m x m matrix with -1 where undefined.
  Json           to_json(FiniteGroupoid const& G);
  FiniteGroupoid groupoid_from_json(Json const& j);

  /// G(S) export: {"ultrafilters": member indices, "d", "r", "compose":
  /// [[i, j, k], ...]} listing every defined composite.
  Json to_json(UltrafilterGroupoid const& GS);

  /// Morphisms and functors carry full copies of their source and target.
  struct OwnedMorphism {
    std::shared_ptr<InverseMonoid const> source;
    std::shared_ptr<InverseMonoid const> target;
    MonoidMorphism                       morphism;
  };
  struct OwnedFunctor {
    std::shared_ptr<FiniteGroupoid const> source;
    std::shared_ptr<FiniteGroupoid const> target;
    CoveringFunctor                       functor;
  };
  Json          to_json(MonoidMorphism const& theta);
  OwnedMorphism morphism_from_json(Json const& j, MonoidLimits const& limits = {});
  Json          to_json(CoveringFunctor const& f);
  OwnedFunctor  functor_from_json(Json const& j);

  /// {"n", "expr"}.
  Json            to_json(poly::CnElement const& A);
  poly::CnElement cn_from_json(Json const& j);

  Json to_json(LawReport const& report);
  Json to_json(IsoCertificate const& cert);
  Json to_json(BooleanCertificate const& cert, InverseMonoid const& S);

  /// A named object of the plain-file store.
  struct CorpusEntry {
    std::string name;
    std::string kind;  // monoid, groupoid, morphism, functor, cn-element
    Json        payload;
  };
  Json        to_json(CorpusEntry const& entry);
  /// Checks the envelope and re-verifies the payload for its kind.
  CorpusEntry entry_from_json(Json const& j);

  /// One JSON file per entry, `<dir>/<name>.json`.
  class CorpusStore {
   public:
    explicit CorpusStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::filesystem::path const& dir() const noexcept { return dir_; }
    std::filesystem::path        path_of(std::string const& name) const;

    void        save(CorpusEntry const& entry) const;
    /// Throws InvalidInput when missing or malformed.
    CorpusEntry load(std::string const& name) const;
    bool        contains(std::string const& name) const;
    std::vector<std::string> names() const;

   private:
    std::filesystem::path dir_;
  };

}  // namespace stonework

#endif  // STONEWORK_SERIALIZATION_HPP_
