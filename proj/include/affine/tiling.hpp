#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "affine/formula.hpp"
#include "affine/structure.hpp"

namespace affine::tiles {

/// Wang tile: four colors read clockwise from the top.
struct TileType {
  long top = 0, right = 0, bottom = 0, left = 0;
  bool operator==(const TileType&) const = default;
};

bool lex_less(const TileType& s, const TileType& t);

/// Canonical numbering: a graded-lexicographic bijection between color
/// 4-tuples and positive integers (sorted by color sum, ties broken
/// lexicographically). tile_unindex inverts it.
long tile_index(const TileType& t);
TileType tile_unindex(long i);

/// Unary predicate symbol naming the tile in generated formulas: "P<index>".
std::string pred_name(const TileType& t);

struct TileSet {
  std::vector<TileType> tiles;  // distinct, in construction order
  explicit TileSet(std::vector<TileType> ts);
  const TileType* by_index(long idx) const;  // nullptr if no tile has it
};

/// Cell -> tile assignment; cells are addressed by the "i,j" element ids
/// used by build_grid/build_torus.
using Labelling = std::map<std::string, TileType>;

std::string cell_id(int i, int j);

/// m x n rectangle with H/V successor relations, no wraparound.
fo::FiniteStructure build_grid(int m, int n);
/// m x n torus: H((i,j),(i+1 mod m, j)), V((i,j),(i, j+1 mod n)).
fo::FiniteStructure build_torus(int m, int n);

/// H-neighbors must match right=left, V-neighbors top=bottom, and every
/// label must be drawn from S. Throws if L misses a universe element.
bool is_valid_tiling(const fo::FiniteStructure& M, const TileSet& S,
                     const Labelling& L);

/// M plus one unary table per tile of S holding the cells L labels with it.
fo::FiniteStructure expand_with_labels(const fo::FiniteStructure& M,
                                       const TileSet& S, const Labelling& L);

fo::Vocabulary tiling_vocabulary(const TileSet& S, bool with_R = false);

/// phi_S: every point carries exactly one tile predicate, and H/V edges
/// respect the color-matching constraints.
fo::FormulaPtr tiling_sentence(const TileSet& S);

/// phi_(t,S): tiling conditions plus recurrence: every R-connected point has
/// an R-later point labelled t. Throws if t is not in S.
fo::FormulaPtr recurrent_sentence(const TileType& t, const TileSet& S);

/// Smallest torus (row-major order on (m,k)) within the bounds that S tiles,
/// with the lexicographically least valid labelling (cells row-major, tiles
/// by canonical index); nullopt if none.
std::optional<std::tuple<int, int, Labelling>> solve_torus(const TileSet& S,
                                                          int maxM, int maxK);

}  // namespace affine::tiles
