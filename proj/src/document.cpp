#include "hibi/document.hpp"

#include <fstream>
#include <sstream>

#include "hibi/birkhoff.hpp"
#include "hibi/corpus.hpp"
#include "hibi/error.hpp"
#include "json.hpp"

namespace hibi {

namespace {

using Json = nlohmann::ordered_json;

void line_column(std::string_view text, std::size_t offset, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of ids");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

PairList pair_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of pairs");
  PairList out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw ValidationError(at + ": malformed pair, expected [lower, upper]");
    out.emplace_back(require_string(j[i][0], at + "[0]"), require_string(j[i][1], at + "[1]"));
  }
  return out;
}

Json pairs_json(const PairList& ps) {
  Json a = Json::array();
  for (const auto& [lo, hi] : ps) a.push_back(Json::array({lo, hi}));
  return a;
}

}  // namespace

PosetDocument parse_poset_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 0, column = 0;
    line_column(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    std::string msg = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at ..." prefix.
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("syntax error: " + msg, line, column);
  }
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "elements" && key != "covers" && key != "bottom" && key != "lattice")
      throw ValidationError("unknown field '" + key + "'");

  PosetDocument d;
  if (!j.contains("name")) throw ValidationError("missing field 'name'");
  d.name = require_string(j["name"], "name");
  if (j.contains("lattice")) {
    if (j.contains("elements") || j.contains("covers") || j.contains("bottom"))
      throw ValidationError("give either a lattice block or poset fields, not both");
    const Json& l = j["lattice"];
    if (!l.is_object() || !l.contains("elements") || !l.contains("order"))
      throw ValidationError("lattice: expected {\"elements\": [...], \"order\": [...]}");
    PosetDocument::LatticeBlock block{string_list(l["elements"], "lattice.elements"),
                                      pair_list(l["order"], "lattice.order")};
    const Poset p = join_irreducibles(FiniteLattice::build(block.elements, block.order));
    d.elements = p.names();
    d.covers.clear();
    for (const auto& [lo, hi] : p.covers_in_p()) d.covers.emplace_back(p.name(lo), p.name(hi));
    d.bottom = p.name(p.bottom());
    d.lattice = std::move(block);
    return d;
  }
  for (const char* f : {"elements", "covers", "bottom"})
    if (!j.contains(f)) throw ValidationError(std::string("missing field '") + f + "'");
  d.elements = string_list(j["elements"], "elements");
  d.covers = pair_list(j["covers"], "covers");
  d.bottom = require_string(j["bottom"], "bottom");
  to_poset(d);  // validate eagerly
  return d;
}

std::string serialize_document(const PosetDocument& doc) {
  Json j;
  j["name"] = doc.name;
  if (doc.lattice) {
    j["lattice"]["elements"] = doc.lattice->elements;
    j["lattice"]["order"] = pairs_json(doc.lattice->order);
  } else {
    j["elements"] = doc.elements;
    j["covers"] = pairs_json(doc.covers);
    j["bottom"] = doc.bottom;
  }
  return j.dump(2) + "\n";
}

Poset to_poset(const PosetDocument& doc) { return Poset::build(doc.elements, doc.covers, doc.bottom); }

PosetDocument document_from_poset(const std::string& name, const Poset& p) {
  PosetDocument d;
  d.name = name;
  d.elements = p.names();
  for (const auto& [lo, hi] : p.covers_in_p()) d.covers.emplace_back(p.name(lo), p.name(hi));
  d.bottom = p.name(p.bottom());
  return d;
}

PosetDocument load_document(const std::string& name_or_path) {
  if (auto d = corpus_document(name_or_path)) return *d;
  std::ifstream in(name_or_path);
  if (!in) throw ValidationError("'" + name_or_path + "' is neither a corpus name nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poset_document(ss.str());
}

}  // namespace hibi
