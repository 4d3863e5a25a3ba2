#pragma once

#include "affine/formula.hpp"
#include "affine/interp.hpp"
#include "affine/structure.hpp"
#include "affine/tiling.hpp"

namespace affine::gen {

/// Which named construct a generated sentence instantiates.
enum class Construct {
  Collinear,
  Parallel,
  BasisK,
  FlatK,
  OpenTriangleK,
  Sepr,
  Finiteness,
  Omega,
  FrameInf,
  FrameFin,
  SchemeGrid,
  SchemeTorus,
  SchemeRecurrence,
  PsiS,
  GammaS,
};

struct GeneratedSentence {
  fo::FormulaPtr formula;
  fo::Vocabulary vocabulary;
  Construct provenance;
};

/// {B/3}; with_P adds the unary predicate P.
fo::Vocabulary betweenness_vocabulary(bool with_P = false);
/// {B/3, P/1} plus constants p0, px, py.
fo::Vocabulary frame_vocabulary();

enum class GeomKind { Collinear, Parallel, Basis, Flat, OpenTriangle };

/// Geometric definability formulas over {B}:
///   Collinear           free vars x, y, z            (k ignored)
///   Parallel            free vars x, y, t, k         (k ignored)
///   Basis, k >= 0       free vars x0..xk
///   Flat, k >= 0        free vars x0..xk, z
///   OpenTriangle, k >= 1  free vars x0..xk, z
/// Basis/Flat are built by their simultaneous recursion, OpenTriangle by its
/// own recursion on k.
fo::FormulaPtr geometry_formula(GeomKind kind, int k = 0);

/// sepr(x): x sits properly inside an n-dimensional triangle whose interior
/// contains no other point of P. Over {B, P}, free var x; n >= 1.
fo::FormulaPtr sepr_formula(int n);

/// "P is finite" in dimension n: P is closed (every complement point is
/// separated), consists of isolated points, and is bounded by a triangle.
GeneratedSentence finiteness_sentence(int n);

/// "P is an omega-like sequence": collinear, discretely spaced, discretely
/// infinite with a base point, has a zero-point, and every properly-interior
/// point of the line has adjacent neighbours in P.
GeneratedSentence omega_sentence();

/// Frame-validity sentences over {B, P, p0, px, py}.
/// Infinite flavour: non-collinear constants, each axis minus its endpoint is
/// an omega-like sequence (relativized omega sentence) with the endpoint
/// characterized order-theoretically, p0 the zero of both axes, all
/// cross-lines intersect, and every cell diagonal carries a point count drawn
/// from the tile indices of S.
GeneratedSentence frame_sentence_infinite(const tiles::TileSet& S);
/// Finite flavour: constants in P and non-collinear, both axes have interior
/// points, cross-lines of interior axis points intersect, and the same
/// diagonal point-count condition.
GeneratedSentence frame_sentence_finite(const tiles::TileSet& S);

/// Interpretation schemes carving labelled grids/tori out of frames.
/// Grid: dom = intersection-or-axis points, H/V = aligned adjacency,
/// P_t = "exactly tile_index(t) points of P on the diagonal".
fo::InterpretationScheme scheme_grid(const tiles::TileSet& S);
/// Torus: the grid formulas restricted to cells with both successors, plus
/// wraparound rows/columns.
fo::InterpretationScheme scheme_torus(const tiles::TileSet& S);
/// Recurrence: the grid scheme extended with R = column-0 ordering.
fo::InterpretationScheme scheme_recurrence(const tiles::TileSet& S);

/// psi_S := frame_sentence_infinite(S) & translate(scheme_grid(S), phi_S).
GeneratedSentence reduction_sentence_grid(const tiles::TileSet& S);
/// gamma_S := frame_sentence_finite(S) & translate(scheme_torus(S), phi_S).
GeneratedSentence reduction_sentence_torus(const tiles::TileSet& S);

/// Weak set quantifiers replaced by strong ones guarded by the dimension-n
/// finiteness sentence (with P renamed to the bound set variable). The
/// vocabulary must contain the ternary betweenness relation B.
fo::FormulaPtr weak_to_strong(const fo::FormulaPtr& f, int n,
                              const fo::Vocabulary& vocab);

}  // namespace affine::gen
