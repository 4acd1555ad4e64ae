#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqzeta/burnside.hpp"
#include "eqzeta/gcomplex.hpp"
#include "eqzeta/gperm.hpp"
#include "eqzeta/lefschetz.hpp"
#include "eqzeta/zeta_engine.hpp"
#include "eqzeta/zg_ring.hpp"

namespace eqzeta::io {

using json = nlohmann::json;

/// A parsed JSON document with its kind tag. `base` is the directory that
/// relative group paths are resolved against.
struct Document {
  std::string kind;
  json body;
  std::filesystem::path base;
};

/// Parses UTF-8 JSON text; syntax errors report line and column.
[[nodiscard]] Document parse_document(const std::string& text,
                                      const std::filesystem::path& base = ".");
[[nodiscard]] Document read_document(const std::filesystem::path& path);

/// A group together with the inline description it was built from.
struct LoadedGroup {
  GroupRef ref;
  json spec;
};

/// `node` is either an inline group description or a path to a group
/// document. `where` is the field path used in diagnostics.
[[nodiscard]] LoadedGroup load_group(const json& node, const std::filesystem::path& base,
                                     const GroupLimits& limits, const std::string& where);
/// Builds a group from an inline description ({type, ...}).
[[nodiscard]] FiniteGroup build_group(const json& spec, const GroupLimits& limits,
                                      const std::string& where = "");

[[nodiscard]] GPermutation gperm_from(const Document& doc, const GroupRef& group);
[[nodiscard]] std::vector<StratumRecord> strata_from(const Document& doc, const GroupRef& group);
[[nodiscard]] LefschetzTable lefschetz_from(const Document& doc, const GroupRef& group);
[[nodiscard]] ZGRingElement expr_from(const Document& doc, const GroupRef& group);

struct ComplexData {
  GComplex complex;
  std::optional<GCellularMap> sigma;
};
[[nodiscard]] ComplexData complex_from(const Document& doc, const GroupRef& group);

/// Group of any document kind that carries one.
[[nodiscard]] LoadedGroup group_of(const Document& doc, const GroupLimits& limits);

/// Zeta function described by a gperm, expr, strata, lefschetz or complex
/// (with sigma) document.
[[nodiscard]] ZGRingElement zeta_of(const Document& doc, const GroupRef& group);

// Rendering. Classes are named "G" (the whole group), "e" or "1" (trivial;
// Burnside and ZxG renderings respectively) and "H<id>" otherwise.

[[nodiscard]] std::string class_name(const GroupContext& group, int class_id, bool zg);
[[nodiscard]] std::string render(const BurnsideElement& x);
[[nodiscard]] std::string render(const ZGRingElement& x);
[[nodiscard]] std::string render(const ClassicalZeta& z);
[[nodiscard]] std::string render(const LefschetzTable& table);

/// Inverses of render; throw ValidationError on malformed text.
[[nodiscard]] BurnsideElement parse_burnside(const GroupRef& group, const std::string& text);
[[nodiscard]] ZGRingElement parse_zg(const GroupRef& group, const std::string& text);
[[nodiscard]] ClassicalZeta parse_classical(const std::string& text);

// Structured output mirroring the input documents.

[[nodiscard]] json coefficient_json(const BigInt& k);
[[nodiscard]] json to_json(const BurnsideElement& x);
[[nodiscard]] json to_json(const ZGRingElement& x);
[[nodiscard]] json to_json(const ClassicalZeta& z);
[[nodiscard]] json to_json(const LefschetzTable& table, const json& group_spec);

}  // namespace eqzeta::io
