#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hibi/document.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Built-in fixtures: P1, P2, P3, chain1..chain4, antichain2, antichain3 and
/// the upward-pure-filter family upf1..upf3.
const std::vector<PosetDocument>& builtin_corpus();

std::optional<PosetDocument> corpus_document(const std::string& name);

/// Throws ValidationError for unknown names.
Poset corpus_poset(const std::string& name);

/// Names of the upf family (every principal filter above the bottom is pure).
std::vector<std::string> upward_pure_names();

}  // namespace hibi
