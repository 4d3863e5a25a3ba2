#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affine/tiling.hpp"

namespace affine::verify {

/// Outcome of one property suite: how many cases ran and a description of
/// every case that failed (empty means the property held throughout).
struct Report {
  int cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// extract_torus(synthesize_frame(m,k,L,S)) == (torus(m,k), L) for every
/// m,k <= max_mk and per_size random labellings per size (valid or not).
Report roundtrip(const tiles::TileSet& S, int max_mk, int per_size,
                 std::uint64_t seed);

/// induced_structure(scheme_torus(S), relevant_closure(f)) matches the
/// geometric extractor through the canonical cell map, for synthesized
/// frames with m,k <= max_mk.
Report dualpath(const tiles::TileSet& S, int max_mk, int per_size,
                std::uint64_t seed);

/// C |= translate(scheme, phi) iff induced_structure(scheme, C) |= phi, for
/// random (scheme, sentence of quantifier/connective depth <= max_depth,
/// structure with |universe| <= 6) instances.
Report lemma1(int instances, int max_depth, std::uint64_t seed);

}  // namespace affine::verify
