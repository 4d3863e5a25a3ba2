#include "affine/tiling.hpp"

#include <algorithm>
#include <stdexcept>

namespace affine::tiles {

using fo::FiniteStructure;
using fo::FormulaPtr;

bool lex_less(const TileType& s, const TileType& t) {
  return std::tie(s.top, s.right, s.bottom, s.left) <
         std::tie(t.top, t.right, t.bottom, t.left);
}

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// number of j-tuples of naturals summing to r
long comps(long r, long j) { return binom(r + j - 1, j - 1); }

}  // namespace

long tile_index(const TileType& t) {
  if (t.top < 0 || t.right < 0 || t.bottom < 0 || t.left < 0)
    throw std::invalid_argument("tile_index: negative color");
  const long a = t.top, b = t.right, c = t.bottom, d = t.left;
  const long s = a + b + c + d;
  long idx = binom(s + 3, 4);  // all tuples with a smaller sum
  for (long a2 = 0; a2 < a; ++a2) idx += comps(s - a2, 3);
  for (long b2 = 0; b2 < b; ++b2) idx += comps(s - a - b2, 2);
  idx += c;
  (void)d;
  return idx + 1;
}

TileType tile_unindex(long i) {
  if (i < 1) throw std::invalid_argument("tile_unindex: index must be >= 1");
  long s = 0;
  while (binom(s + 4, 4) < i) ++s;
  long rank = i - binom(s + 3, 4) - 1;
  TileType t;
  long rem = s;
  t.top = 0;
  while (rank >= comps(rem, 3)) rank -= comps(rem, 3), ++t.top, --rem;
  t.right = 0;
  while (rank >= comps(rem, 2)) rank -= comps(rem, 2), ++t.right, --rem;
  t.bottom = rank;
  t.left = rem - t.bottom;
  return t;
}

std::string pred_name(const TileType& t) {
  return "P" + std::to_string(tile_index(t));
}

TileSet::TileSet(std::vector<TileType> ts) : tiles(std::move(ts)) {
  if (tiles.empty()) throw std::invalid_argument("TileSet: empty tile set");
  for (std::size_t i = 0; i < tiles.size(); ++i)
    for (std::size_t j = i + 1; j < tiles.size(); ++j)
      if (tiles[i] == tiles[j])
        throw std::invalid_argument("TileSet: duplicate tile");
}

const TileType* TileSet::by_index(long idx) const {
  for (const auto& t : tiles)
    if (tile_index(t) == idx) return &t;
  return nullptr;
}

std::string cell_id(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

namespace {

FiniteStructure build_cells(int m, int n, bool wrap) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid/torus: sizes must be >= 1");
  FiniteStructure M;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) M.add_element(cell_id(i, j));
  M.relations["H"];
  M.relations["V"];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      if (i + 1 < m || wrap)
        M.add_tuple("H", {cell_id(i, j), cell_id((i + 1) % m, j)});
      if (j + 1 < n || wrap)
        M.add_tuple("V", {cell_id(i, j), cell_id(i, (j + 1) % n)});
    }
  return M;
}

}  // namespace

FiniteStructure build_grid(int m, int n) { return build_cells(m, n, false); }
FiniteStructure build_torus(int m, int n) { return build_cells(m, n, true); }

namespace {

const TileType& label_at(const Labelling& L, const std::string& id) {
  auto it = L.find(id);
  if (it == L.end())
    throw std::invalid_argument("tiling: partial labelling (no tile for '" + id + "')");
  return it->second;
}

}  // namespace

bool is_valid_tiling(const FiniteStructure& M, const TileSet& S, const Labelling& L) {
  for (const auto& id : M.universe) {
    const TileType& t = label_at(L, id);
    if (std::find(S.tiles.begin(), S.tiles.end(), t) == S.tiles.end())
      return false;  // label outside the tile set
  }
  auto table = [&M](const char* name) -> const std::set<std::vector<int>>& {
    static const std::set<std::vector<int>> empty;
    auto it = M.relations.find(name);
    return it == M.relations.end() ? empty : it->second;
  };
  for (const auto& e : table("H"))
    if (L.at(M.universe[e[0]]).right != L.at(M.universe[e[1]]).left) return false;
  for (const auto& e : table("V"))
    if (L.at(M.universe[e[0]]).top != L.at(M.universe[e[1]]).bottom) return false;
  return true;
}

FiniteStructure expand_with_labels(const FiniteStructure& M, const TileSet& S,
                                   const Labelling& L) {
  FiniteStructure out = M;
  for (const auto& t : S.tiles) out.relations[pred_name(t)];
  for (const auto& id : M.universe) {
    const TileType& t = label_at(L, id);
    out.add_tuple(pred_name(t), {id});
  }
  return out;
}

fo::Vocabulary tiling_vocabulary(const TileSet& S, bool with_R) {
  fo::Vocabulary v;
  v.relations["H"] = 2;
  v.relations["V"] = 2;
  if (with_R) v.relations["R"] = 2;
  for (const auto& t : S.tiles) v.relations[pred_name(t)] = 1;
  return v;
}

namespace {

using fo::app;
using fo::eq;
using fo::exists;
using fo::forall;
using fo::mk_and;
using fo::mk_implies;
using fo::mk_not;
using fo::mk_or;

// empty disjunctions are rendered as this contradiction
FormulaPtr falsum(const std::string& var) { return mk_not(eq(var, var)); }

FormulaPtr exactly_one(const TileSet& S, const std::string& x) {
  std::vector<FormulaPtr> cases;
  for (const auto& t : S.tiles) {
    std::vector<FormulaPtr> conj{app(pred_name(t), {x})};
    for (const auto& s : S.tiles)
      if (!(s == t)) conj.push_back(mk_not(app(pred_name(s), {x})));
    cases.push_back(mk_and(std::move(conj)));
  }
  return mk_or(std::move(cases));
}

FormulaPtr matching(const TileSet& S, const std::string& rel,
                    bool (*edge_ok)(const TileType&, const TileType&)) {
  std::vector<FormulaPtr> pairs;
  for (const auto& t : S.tiles)
    for (const auto& s : S.tiles)
      if (edge_ok(t, s))
        pairs.push_back(mk_and(app(pred_name(t), {"x"}), app(pred_name(s), {"y"})));
  FormulaPtr rhs = pairs.empty() ? falsum("x") : mk_or(std::move(pairs));
  return forall("x", forall("y", mk_implies(app(rel, {"x", "y"}), std::move(rhs))));
}

}  // namespace

FormulaPtr tiling_sentence(const TileSet& S) {
  FormulaPtr one = forall("x", exactly_one(S, "x"));
  FormulaPtr h = matching(S, "H", [](const TileType& t, const TileType& s) {
    return t.right == s.left;
  });
  FormulaPtr v = matching(S, "V", [](const TileType& t, const TileType& s) {
    return t.top == s.bottom;
  });
  return mk_and({std::move(one), std::move(h), std::move(v)});
}

FormulaPtr recurrent_sentence(const TileType& t, const TileSet& S) {
  if (std::find(S.tiles.begin(), S.tiles.end(), t) == S.tiles.end())
    throw std::invalid_argument("recurrent_sentence: tile not in the set");
  FormulaPtr connected =
      exists("y", mk_or(app("R", {"x", "y"}), app("R", {"y", "x"})));
  FormulaPtr later = exists("z", mk_and(app("R", {"x", "z"}), app(pred_name(t), {"z"})));
  FormulaPtr rec = forall("x", mk_implies(std::move(connected), std::move(later)));
  return mk_and(tiling_sentence(S), std::move(rec));
}

std::optional<std::tuple<int, int, Labelling>> solve_torus(const TileSet& S,
                                                          int maxM, int maxK) {
  if (maxM < 1 || maxK < 1)
    throw std::invalid_argument("solve_torus: bounds must be >= 1");
  std::vector<TileType> order = S.tiles;
  std::sort(order.begin(), order.end(), [](const TileType& a, const TileType& b) {
    return tile_index(a) < tile_index(b);
  });
  for (int m = 1; m <= maxM; ++m)
    for (int k = 1; k <= maxK; ++k) {
      // cells row-major: (0,0),(1,0),..,(m-1,0),(0,1),..
      std::vector<std::pair<int, int>> cells;
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i) cells.emplace_back(i, j);
      std::vector<int> choice(cells.size(), -1);
      auto tile_of = [&](int i, int j) -> const TileType* {
        int pos = j * m + i;
        return choice[pos] < 0 ? nullptr : &order[choice[pos]];
      };
      auto consistent = [&](std::size_t p) {
        auto [i, j] = cells[p];
        const TileType& t = order[choice[p]];
        // four neighbors with wraparound, checked when already assigned
        if (const TileType* r = tile_of((i + 1) % m, j))
          if (t.right != r->left) return false;
        if (const TileType* l = tile_of((i + m - 1) % m, j))
          if (l->right != t.left) return false;
        if (const TileType* u = tile_of(i, (j + 1) % k))
          if (t.top != u->bottom) return false;
        if (const TileType* d = tile_of(i, (j + k - 1) % k))
          if (d->top != t.bottom) return false;
        return true;
      };
      std::size_t p = 0;
      while (true) {
        if (p == cells.size()) {
          Labelling L;
          for (std::size_t q = 0; q < cells.size(); ++q)
            L[cell_id(cells[q].first, cells[q].second)] = order[choice[q]];
          return std::make_tuple(m, k, std::move(L));
        }
        bool advanced = false;
        for (int c = choice[p] + 1; c < static_cast<int>(order.size()); ++c) {
          choice[p] = c;
          if (consistent(p)) {
            advanced = true;
            break;
          }
        }
        if (advanced) {
          if (++p < cells.size()) choice[p] = -1;
        } else {
          choice[p] = -1;
          if (p == 0) break;
          --p;
        }
      }
    }
  return std::nullopt;
}

}  // namespace affine::tiles
