#pragma once

#include <string>

#include "affine/formula.hpp"
#include "affine/frames.hpp"
#include "affine/interp.hpp"
#include "affine/structure.hpp"
#include "affine/tiling.hpp"

namespace affine::io {

/// Reads the whole file; throws std::runtime_error on failure.
std::string read_file(const std::string& path);

/// Writes text to a sibling temp file and renames it into place, so readers
/// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& text);

// Every format carries a version marker: a "format" field in the JSON
// object formats, a "# affine-... 1" header line in the text formats. The
// from_text functions throw std::runtime_error on a missing/wrong marker or
// malformed content. All to_text output is deterministic.

/// Structure files: {"format", "universe", "relations", "constants",
/// optional "sets"}, relations as lists of element-id tuples. Intrinsic
/// relations are materialized into explicit tables on write.
std::string structure_to_text(const fo::FiniteStructure& M);
fo::FiniteStructure structure_from_text(const std::string& text);

/// Tile-set files: {"format", "tiles": [[top,right,bottom,left], ...]}.
std::string tiles_to_text(const tiles::TileSet& S);
tiles::TileSet tiles_from_text(const std::string& text);

/// Labelling files: {"format", "cells": {"i,j": position}} where position
/// indexes the tile list of the accompanying tile-set file.
std::string labelling_to_text(const tiles::Labelling& L, const tiles::TileSet& S);
tiles::Labelling labelling_from_text(const std::string& text,
                                     const tiles::TileSet& S);

/// Frame files: {"format", "dim", "points": {id: ["num/den", ...]}, "P",
/// "p0", "px", "py"}; point ids are their coordinate strings, P keeps order.
std::string frame_to_text(const frames::FiniteCartesianFrame& f);
frames::FiniteCartesianFrame frame_from_text(const std::string& text);

/// Formula files: the header line then one formula in the canonical grammar.
std::string formula_to_text(const fo::FormulaPtr& f);
fo::FormulaPtr formula_from_text(const std::string& text);

/// Scheme files: the header line then named slots,
///   @dom <var>        followed by the domain formula,
///   @rel <name> <params...>  followed by that relation's defining formula.
/// Source/target vocabularies are reconstructed from the slots: source
/// relations from the @rel headers, target relations from the atoms of the
/// formulas, target constants from their leftover free identifiers.
std::string scheme_to_text(const fo::InterpretationScheme& s);
fo::InterpretationScheme scheme_from_text(const std::string& text);

}  // namespace affine::io
