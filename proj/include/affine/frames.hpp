#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affine/geom.hpp"
#include "affine/structure.hpp"
#include "affine/tiling.hpp"

namespace affine::frames {

/// Finite Cartesian frame in the rational plane: a finite marked point set P
/// containing the three constants. The x-axis runs p0 -> px, the y-axis
/// p0 -> py; cell labels are encoded as point counts on cell diagonals of
/// the intersection grid.
struct FiniteCartesianFrame {
  std::vector<geom::Point> P;
  geom::Point p0, px, py;
};

/// Empty iff f is a well-formed frame (constants in P and non-collinear,
/// both axes have interior points, all cross-lines of interior axis points
/// intersect) whose every cell-diagonal point count is the canonical index
/// of some tile in S. Violations are human-readable strings.
std::vector<std::string> validate_frame(const FiniteCartesianFrame& f,
                                        const tiles::TileSet& S);

/// Builds the canonical integer-lattice frame encoding L: p0=(0,0), x-axis
/// interior points (1,0)..(m,0), px=(m+1,0), y-axis analogous; each cell
/// (i,j) carries tile_index(L(i,j)) points on its open diagonal. A
/// deterministic collision-avoidance loop re-places a cell's points with
/// shifted parameters if a placement ever coincides with another universe
/// point (it cannot for this layout, but the guard is cheap).
FiniteCartesianFrame synthesize_frame(int m, int k, const tiles::Labelling& L,
                                      const tiles::TileSet& S);

/// Reads the frame back geometrically: sorts the axes, computes the
/// intersection grid exactly, decodes each cell's diagonal count through
/// tile_unindex. Returns the m x k torus (canonical cell ids) plus the
/// decoded labelling. Throws on an invalid frame or a count that is not the
/// index of a tile in S.
std::pair<fo::FiniteStructure, tiles::Labelling> extract_torus(
    const FiniteCartesianFrame& f, const tiles::TileSet& S);

/// The finite {B,P,p0,px,py}-structure on which the frame formulas can be
/// decided: universe = P plus all intersection grid points (deduplicated),
/// B an intrinsic betweenness callback, P the marked set, constants bound.
/// Sound because every existential witness of the frame/scheme formulas is
/// an axis point or an intersection point, and every universal clause only
/// constrains such points (enforced by the dual-path agreement tests rather
/// than trusted). Element ids are "x,y" coordinate strings.
fo::FiniteStructure relevant_closure(const FiniteCartesianFrame& f);

/// Id of the closure element at p.
std::string closure_id(const geom::Point& p);

/// Direct enumerations of the sequence definitions over M's universe as the
/// ambient space, for a subset Q of element indices. B must be available as
/// a ternary relation on M.
struct SequenceChecks {
  bool is_sequence = false;
  bool is_discretely_spaced = false;
  std::set<int> zero_points;
  bool is_discretely_infinite = false;
  bool is_omega_like = false;
  /// zero-point -> successor relation induced by that zero.
  std::map<int, std::set<std::pair<int, int>>> successor_pairs;
};
SequenceChecks sequence_checks(const fo::FiniteStructure& M,
                               const std::set<int>& Q);

}  // namespace affine::frames
