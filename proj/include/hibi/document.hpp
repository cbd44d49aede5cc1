#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

using PairList = std::vector<std::pair<std::string, std::string>>;

/// JSON-shaped poset input. Either the poset fields are given directly or a
/// distributive lattice block is given; in the latter case parsing fills the
/// poset fields from the join-irreducibles.
struct PosetDocument {
  struct LatticeBlock {
    std::vector<std::string> elements;
    PairList order;
  };

  std::string name;
  std::vector<std::string> elements;
  PairList covers;
  std::string bottom;
  std::optional<LatticeBlock> lattice;
};

/// Throws ParseError (with line/column) on malformed JSON and
/// ValidationError on structurally wrong or inconsistent content.
PosetDocument parse_poset_document(std::string_view text);

/// Canonical pretty form; parse(serialize(d)) serializes identically.
std::string serialize_document(const PosetDocument& doc);

Poset to_poset(const PosetDocument& doc);
PosetDocument document_from_poset(const std::string& name, const Poset& p);

/// Built-in corpus name, or a path to a document file.
PosetDocument load_document(const std::string& name_or_path);

}  // namespace hibi
