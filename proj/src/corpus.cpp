#include "hibi/corpus.hpp"

#include "hibi/error.hpp"

namespace hibi {

namespace {

PosetDocument make(std::string name, std::vector<std::string> elements, PairList covers) {
  PosetDocument d;
  d.name = std::move(name);
  d.bottom = elements.front();
  d.elements = std::move(elements);
  d.covers = std::move(covers);
  return d;
}

PosetDocument chain(int k) {
  std::vector<std::string> el{"x0"};
  PairList cv;
  for (int i = 1; i <= k; ++i) {
    el.push_back("a" + std::to_string(i));
    cv.emplace_back(el[i - 1], el[i]);
  }
  return make("chain" + std::to_string(k), el, cv);
}

PosetDocument antichain(int w) {
  std::vector<std::string> el{"x0"};
  PairList cv;
  for (int i = 0; i < w; ++i) {
    el.push_back(std::string(1, static_cast<char>('a' + i)));
    cv.emplace_back("x0", el.back());
  }
  return make("antichain" + std::to_string(w), el, cv);
}

std::vector<PosetDocument> build_all() {
  std::vector<PosetDocument> all;
  all.push_back(make("P1", {"x0", "w", "x", "z", "y", "v"},
                     {{"x0", "w"}, {"x0", "x"}, {"x", "z"}, {"w", "y"}, {"z", "y"}, {"x", "v"}}));
  all.push_back(make("P2", {"x0", "w1", "y0", "z1", "x1", "y1", "z2", "x2", "w2"},
                     {{"x0", "w1"},
                      {"x0", "x1"},
                      {"x0", "x2"},
                      {"w1", "y0"},
                      {"x1", "z1"},
                      {"z1", "y0"},
                      {"x1", "y1"},
                      {"x2", "z2"},
                      {"z2", "y1"},
                      {"x2", "w2"}}));
  all.push_back(make("P3", {"x0", "w1", "y0", "z1", "x1", "z2", "y1", "z3", "x2", "w2"},
                     {{"x0", "w1"},
                      {"x0", "x1"},
                      {"x0", "x2"},
                      {"w1", "y0"},
                      {"x1", "z1"},
                      {"z1", "y0"},
                      {"x1", "z2"},
                      {"z2", "y1"},
                      {"x2", "z3"},
                      {"z3", "y1"},
                      {"x2", "w2"}}));
  for (int k = 1; k <= 4; ++k) all.push_back(chain(k));
  all.push_back(antichain(2));
  all.push_back(antichain(3));
  all.push_back(make("upf1", {"x0", "a", "b", "c"}, {{"x0", "a"}, {"a", "b"}, {"x0", "c"}}));
  all.push_back(make("upf2", {"x0", "a", "b", "c", "d", "e"},
                     {{"x0", "a"}, {"a", "b"}, {"b", "c"}, {"x0", "d"}, {"d", "e"}}));
  all.push_back(make("upf3", {"x0", "a", "b", "c", "d"}, {{"x0", "a"}, {"a", "b"}, {"a", "c"}, {"x0", "d"}}));
  return all;
}

}  // namespace

const std::vector<PosetDocument>& builtin_corpus() {
  static const std::vector<PosetDocument> all = build_all();
  return all;
}

std::optional<PosetDocument> corpus_document(const std::string& name) {
  for (const auto& d : builtin_corpus())
    if (d.name == name) return d;
  return std::nullopt;
}

Poset corpus_poset(const std::string& name) {
  auto d = corpus_document(name);
  if (!d) throw ValidationError("unknown corpus poset '" + name + "'");
  return to_poset(*d);
}

std::vector<std::string> upward_pure_names() { return {"upf1", "upf2", "upf3"}; }

}  // namespace hibi
