#include "affine/verify.hpp"

#include <random>

#include "affine/defgen.hpp"
#include "affine/eval.hpp"
#include "affine/frames.hpp"
#include "affine/interp.hpp"
#include "affine/parser.hpp"

namespace affine::verify {

namespace {

tiles::Labelling random_labelling(std::mt19937_64& rng, int m, int k,
                                  const tiles::TileSet& S) {
  tiles::Labelling L;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i)
      L[tiles::cell_id(i, j)] = S.tiles[rng() % S.tiles.size()];
  return L;
}

std::string case_name(int m, int k, int it) {
  return std::to_string(m) + "x" + std::to_string(k) + " labelling #" +
         std::to_string(it);
}

geom::Point synth_grid_point(int m, int k, int i, int j) {
  return *geom::line_intersection(
      geom::Point({Rat(i), 0}), geom::Point({0, Rat(k + 1)}),
      geom::Point({0, Rat(j)}), geom::Point({Rat(m + 1), 0}));
}

}  // namespace

Report roundtrip(const tiles::TileSet& S, int max_mk, int per_size,
                 std::uint64_t seed) {
  Report r;
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= max_mk; ++m)
    for (int k = 1; k <= max_mk; ++k)
      for (int it = 0; it < per_size; ++it) {
        ++r.cases;
        tiles::Labelling L = random_labelling(rng, m, k, S);
        try {
          auto [torus, L2] =
              frames::extract_torus(frames::synthesize_frame(m, k, L, S), S);
          fo::FiniteStructure want = tiles::build_torus(m, k);
          if (L2 != L || torus.universe != want.universe ||
              torus.relations != want.relations)
            r.failures.push_back(case_name(m, k, it) + ": mismatch");
        } catch (const std::exception& e) {
          r.failures.push_back(case_name(m, k, it) + ": " + e.what());
        }
      }
  return r;
}

Report dualpath(const tiles::TileSet& S, int max_mk, int per_size,
                std::uint64_t seed) {
  Report r;
  std::mt19937_64 rng(seed);
  fo::InterpretationScheme scheme = gen::scheme_torus(S);
  for (int m = 1; m <= max_mk; ++m)
    for (int k = 1; k <= max_mk; ++k)
      for (int it = 0; it < per_size; ++it) {
        ++r.cases;
        std::string name = case_name(m, k, it);
        tiles::Labelling L = random_labelling(rng, m, k, S);
        try {
          frames::FiniteCartesianFrame f = frames::synthesize_frame(m, k, L, S);
          fo::FiniteStructure D =
              fo::induced_structure(scheme, frames::relevant_closure(f));
          auto [torus, L2] = frames::extract_torus(f, S);
          fo::FiniteStructure expected = tiles::expand_with_labels(torus, S, L2);

          std::map<std::string, std::string> cell_of;
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j)
              cell_of[frames::closure_id(synth_grid_point(m, k, i, j))] =
                  tiles::cell_id(i, j);
          if (D.universe.size() != static_cast<std::size_t>(m * k)) {
            r.failures.push_back(name + ": wrong domain size");
            continue;
          }
          bool bad = false;
          for (const auto& id : D.universe)
            if (!cell_of.count(id)) bad = true;
          if (bad) {
            r.failures.push_back(name + ": non-grid element in domain");
            continue;
          }
          for (const auto& [rel, tuples] : D.relations) {
            std::set<std::vector<int>> mapped;
            for (const auto& t : tuples) {
              std::vector<int> u;
              for (int e : t)
                u.push_back(expected.element(cell_of.at(D.universe[e])));
              mapped.insert(u);
            }
            if (mapped != expected.relations.at(rel))
              r.failures.push_back(name + ": relation " + rel + " differs");
          }
        } catch (const std::exception& e) {
          r.failures.push_back(name + ": " + e.what());
        }
      }
  return r;
}

namespace {

fo::FiniteStructure random_target(std::mt19937_64& rng) {
  fo::FiniteStructure C;
  int n = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < n; ++i) C.add_element("u" + std::to_string(i));
  C.relations["Ed"];
  C.relations["U"];
  for (int i = 0; i < n; ++i) {
    if (rng() % 5 < 2) C.relations["U"].insert({i});
    for (int j = 0; j < n; ++j)
      if (rng() % 5 < 2) C.relations["Ed"].insert({i, j});
  }
  return C;
}

fo::FormulaPtr random_sentence(std::mt19937_64& rng, int depth,
                               std::vector<std::string> scope) {
  using namespace fo;
  auto var = [&] { return scope[rng() % scope.size()]; };
  int kind = scope.empty()          ? 6 + static_cast<int>(rng() % 2)
             : depth <= 0           ? static_cast<int>(rng() % 2)
                                    : static_cast<int>(rng() % 8);
  switch (kind) {
    case 0:
      return scope.size() >= 2 && rng() % 2 ? app("R", {var(), var()})
                                            : app("P", {var()});
    case 1:
      return eq(var(), var());
    case 2:
      return mk_not(random_sentence(rng, depth - 1, scope));
    case 3:
      return mk_and(random_sentence(rng, depth - 1, scope),
                    random_sentence(rng, depth - 1, scope));
    case 4:
      return mk_or(random_sentence(rng, depth - 1, scope),
                   random_sentence(rng, depth - 1, scope));
    case 5:
      return mk_implies(random_sentence(rng, depth - 1, scope),
                        random_sentence(rng, depth - 1, scope));
    default: {
      std::string v = "v" + std::to_string(scope.size());
      scope.push_back(v);
      FormulaPtr body = random_sentence(rng, depth - 1, scope);
      return rng() % 2 ? exists(v, std::move(body)) : forall(v, std::move(body));
    }
  }
}

fo::InterpretationScheme random_scheme(std::mt19937_64& rng) {
  fo::InterpretationScheme s;
  s.source.relations["R"] = 2;
  s.source.relations["P"] = 1;
  s.target.relations["Ed"] = 2;
  s.target.relations["U"] = 1;
  s.dom_var = "x";
  const char* doms[] = {"x = x", "U(x)", "~U(x)", "E y. Ed(x,y)",
                        "U(x) | (E y. Ed(y,x))"};
  s.dom = fo::parse(doms[rng() % 5]);
  const char* bins[] = {"Ed(x,y)", "Ed(y,x)", "U(x) & U(y)", "x = y",
                        "E z. (Ed(x,z) & Ed(z,y))", "Ed(x,y) | Ed(y,x)"};
  s.rels["R"] = {{"x", "y"}, fo::parse(bins[rng() % 6])};
  const char* uns[] = {"U(x)", "~U(x)", "Ed(x,x)", "E y. Ed(x,y)"};
  s.rels["P"] = {{"x"}, fo::parse(uns[rng() % 4])};
  return s;
}

}  // namespace

Report lemma1(int instances, int max_depth, std::uint64_t seed) {
  Report r;
  std::mt19937_64 rng(seed);
  for (int it = 0; it < instances; ++it) {
    ++r.cases;
    fo::InterpretationScheme scheme = random_scheme(rng);
    fo::FiniteStructure C = random_target(rng);
    fo::FormulaPtr phi =
        random_sentence(rng, 1 + static_cast<int>(rng() % max_depth), {});
    if (!fo::check_equivalence(scheme, phi, C))
      r.failures.push_back("instance #" + std::to_string(it) + ": " +
                           fo::print(phi));
  }
  return r;
}

}  // namespace affine::verify
