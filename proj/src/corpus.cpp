#include "incgrade/corpus.hpp"

#include <algorithm>

#include "incgrade/errors.hpp"

#ifndef INCGRADE_CORPUS_DIR
#define INCGRADE_CORPUS_DIR "data/corpus"
#endif

namespace incgrade {

namespace {

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Pair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i + 1 < n) covers.emplace_back(i, i + 1);
  }
  return poset_from_covers(labels, covers);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return poset_from_covers(labels, {});
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "c1", "c2", "c3", "c4", "antichain1", "antichain2", "antichain3", "antichain4", "example", "diamond", "c2_plus_c3",
  };
  return names;
}

bool is_corpus_name(std::string_view name) {
  const auto& names = corpus_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Poset corpus_poset(std::string_view name) {
  if (name.size() == 2 && name[0] == 'c' && name[1] >= '1' && name[1] <= '4') return chain(name[1] - '0');
  if (name.size() == 10 && name.substr(0, 9) == "antichain" && name[9] >= '1' && name[9] <= '4')
    return antichain(name[9] - '0');
  if (name == "example") {
    const std::vector<Pair> covers = {{0, 3}, {1, 2}, {1, 3}};
    return poset_from_covers({"p1", "p2", "p3", "p4"}, covers);
  }
  if (name == "diamond") {
    const std::vector<Pair> covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    return poset_from_covers({"bot", "a", "b", "top"}, covers);
  }
  if (name == "c2_plus_c3") {
    const std::vector<Pair> covers = {{0, 1}, {2, 3}, {3, 4}};
    return poset_from_covers({"x1", "x2", "y1", "y2", "y3"}, covers);
  }
  throw InputError("unknown corpus poset '" + std::string(name) + "'");
}

std::string corpus_directory() { return INCGRADE_CORPUS_DIR; }

}  // namespace incgrade
