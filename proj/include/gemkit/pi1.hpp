#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// A word over generators: letter +k is g_{k-1}, letter -k its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;       // one per bicolored cycle
  std::vector<Word> tree_relators;  // single generators killed along a maximal tree
  // "a", "b", "ab" or empty, set when singular colors are supplied.
  std::string case_tag;

  std::vector<Word> all_relators() const;
};

// Generators are the components of the residue on all colors except i and j;
// every {i,j}-cycle v0 -i- v1 -j- v2 ... (v0 least, color i first) gives the
// relator prod over even t of x_{comp(v_t)} x_{comp(v_{t+1})}^{-1}; tree
// relators come from the least-index spanning forest of the graph whose
// vertices are the components missing i or missing j and whose edges are the
// generators.
GroupPresentation presentation(const ColoredGraph& g, Color i, Color j,
                               std::optional<ColorSet> singular = std::nullopt);

Word free_reduce(const Word& w);
// Cyclically reduced, then the least rotation of the word or its inverse.
Word canonical_relator(const Word& w);

struct TietzeOptions {
  int max_passes = 200;
  std::size_t max_relator_length = 4096;
};

GroupPresentation tietze_simplify(const GroupPresentation& pres, const TietzeOptions& options = {});

struct Abelianization {
  int free_rank = 0;
  std::vector<std::int64_t> divisors;  // invariant factors > 1, each dividing the next

  friend bool operator==(const Abelianization&, const Abelianization&) = default;
  std::string to_string() const;
};

// Smith normal form of the exponent-sum matrix.
Abelianization abelianization_rank(const GroupPresentation& pres);

struct RankBounds {
  int lower = 0;
  int upper = 0;
};

RankBounds rank_bounds(const GroupPresentation& pres);

// Stable text: header line, then one relator per line as signed indices.
std::string format_presentation(const GroupPresentation& pres);
std::string format_word(const Word& w);

}  // namespace gemkit
