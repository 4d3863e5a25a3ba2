// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. All randomness is seeded, so runs are reproducible.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "affine/defgen.hpp"
#include "affine/eval.hpp"
#include "affine/frames.hpp"
#include "affine/geom.hpp"
#include "affine/interp.hpp"
#include "affine/parser.hpp"
#include "affine/tiling.hpp"
#include "affine/verify.hpp"

using namespace affine;
using geom::Point;

namespace {

int g_failed = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  std::ostringstream line;
  line << (ok ? "[PASS]" : "[FAIL]") << " " << number << " " << name;
  if (!detail.empty()) line << " (" << detail << ")";
  line.precision(1);
  line << std::fixed << " [" << secs.count() << "s]";
  std::cout << line.str() << std::endl;
  if (!ok) ++g_failed;
}

tiles::TileSet random_tile_set(std::mt19937_64& rng, int max_size,
                               long max_color) {
  std::vector<tiles::TileType> ts;
  int want = 1 + static_cast<int>(rng() % max_size);
  while (static_cast<int>(ts.size()) < want) {
    auto c = [&] { return static_cast<long>(rng() % (max_color + 1)); };
    tiles::TileType t{c(), c(), c(), c()};
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  return tiles::TileSet(ts);
}

tiles::Labelling random_labelling(std::mt19937_64& rng, int m, int k,
                                  const tiles::TileSet& S) {
  tiles::Labelling L;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i)
      L[tiles::cell_id(i, j)] = S.tiles[rng() % S.tiles.size()];
  return L;
}

// ---- independent geometry oracles (deliberately reimplemented here) ----

Rat rand_rat(std::mt19937_64& rng) {
  long n = static_cast<long>(rng() % 21) - 10;
  long d = 1 + static_cast<long>(rng() % 6);
  return Rat(n, d);
}

Point rand_pt(std::mt19937_64& rng, std::size_t dim) {
  std::vector<Rat> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(rand_rat(rng));
  return Point(std::move(c));
}

// fraction-free (Bareiss-style cross-multiplication) integer rank
std::size_t oracle_rank(const std::vector<std::vector<Rat>>& rows_in) {
  if (rows_in.empty()) return 0;
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& r : rows_in) {
    mpz_class den = 1;
    for (const auto& x : r) den = den / gcd(den, x.den()) * x.den();
    std::vector<mpz_class> out;
    for (const auto& x : r) out.push_back(x.num() * (den / x.den()));
    rows.push_back(std::move(out));
  }
  std::size_t cols = rows[0].size(), rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      mpz_class p = rows[rank][col], q = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        rows[r][c] = rows[r][c] * p - rows[rank][c] * q;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> diff_vectors(const std::vector<Point>& pts) {
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i)
    rows.push_back(geom::sub(pts[0], pts[i]));
  return rows;
}

// plain Gaussian elimination; nullopt if inconsistent or underdetermined
std::optional<std::vector<Rat>> oracle_solve(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b) {
  const std::size_t n = A.size(), m = n ? A[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && A[piv][col] == Rat(0)) ++piv;
    if (piv == n) continue;
    std::swap(A[row], A[piv]);
    std::swap(b[row], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || A[r][col] == Rat(0)) continue;
      Rat q = A[r][col] / A[row][col];
      for (std::size_t c = 0; c < m; ++c) A[r][c] -= A[row][c] * q;
      b[r] -= b[row] * q;
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (b[r] != Rat(0)) return std::nullopt;  // inconsistent
  if (pivot_col.size() < m) return std::nullopt;  // underdetermined
  std::vector<Rat> x(m);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = b[r] / A[r][pivot_col[r]];
  return x;
}

// all barycentric coordinates of z w.r.t. a proper simplex are positive
bool oracle_in_open_simplex(const std::vector<Point>& v, const Point& z) {
  const std::size_t dim = z.dim(), k = v.size();
  std::vector<std::vector<Rat>> A(dim + 1, std::vector<Rat>(k));
  std::vector<Rat> b(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) A[i][j] = v[j][i];
    b[i] = z[i];
  }
  for (std::size_t j = 0; j < k; ++j) A[dim][j] = 1;
  b[dim] = 1;
  auto lambda = oracle_solve(std::move(A), std::move(b));
  if (!lambda) return false;
  for (const auto& l : *lambda)
    if (l.sign() <= 0) return false;
  return true;
}

// t = s + lambda (u - s) for some rational lambda in [0,1]
bool oracle_between(const Point& s, const Point& t, const Point& u) {
  std::vector<Rat> d = geom::sub(s, u), w = geom::sub(s, t);
  std::size_t nz = 0;
  while (nz < d.size() && d[nz] == Rat(0)) ++nz;
  if (nz == d.size()) return t == s;  // degenerate segment
  Rat lambda = w[nz] / d[nz];
  for (std::size_t i = 0; i < d.size(); ++i)
    if (w[i] != d[i] * lambda) return false;
  return lambda.sign() >= 0 && lambda <= Rat(1);
}

bool oracle_collinear(const Point& a, const Point& b, const Point& p) {
  std::vector<Rat> d1 = geom::sub(a, b), d2 = geom::sub(a, p);
  for (std::size_t i = 0; i < d1.size(); ++i)
    for (std::size_t j = i + 1; j < d1.size(); ++j)
      if (d1[i] * d2[j] != d1[j] * d2[i]) return false;
  return true;
}

// ---- independent periodic-tiling brute force ----

// smallest torus in the solver's (m,k) row-major order that S tiles, by
// exhaustive labelling enumeration with the matching rules written out
std::optional<std::pair<int, int>> brute_force_torus(const tiles::TileSet& S,
                                                     int maxM, int maxK) {
  for (int m = 1; m <= maxM; ++m)
    for (int k = 1; k <= maxK; ++k) {
      const int cells = m * k, n = static_cast<int>(S.tiles.size());
      std::vector<int> a(cells, 0);
      while (true) {
        auto at = [&](int i, int j) { return S.tiles[a[j * m + i]]; };
        bool ok = true;
        for (int j = 0; j < k && ok; ++j)
          for (int i = 0; i < m && ok; ++i)
            ok = at(i, j).right == at((i + 1) % m, j).left &&
                 at(i, j).top == at(i, (j + 1) % k).bottom;
        if (ok) return std::make_pair(m, k);
        int d = 0;
        while (d < cells && ++a[d] == n) a[d++] = 0;
        if (d == cells) break;
      }
    }
  return std::nullopt;
}

bool gamma_agrees(const tiles::TileSet& S, int m, int k,
                  const tiles::Labelling& L, std::string& detail) {
  bool valid = tiles::is_valid_tiling(tiles::build_torus(m, k), S, L);
  bool gamma = fo::eval(
      frames::relevant_closure(frames::synthesize_frame(m, k, L, S)),
      gen::reduction_sentence_torus(S).formula);
  if (valid != gamma) {
    detail = "gamma/validator disagree on a " + std::to_string(m) + "x" +
             std::to_string(k) + " labelling";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "round-trip, m,k <= 4, 100 labellings per size", [](std::string& d) {
    std::mt19937_64 rng(101);
    int cases = 0, failures = 0;
    for (int set = 0; set < 10; ++set) {
      tiles::TileSet S = random_tile_set(rng, 3, 2);
      verify::Report r = verify::roundtrip(S, 4, 10, rng());
      cases += r.cases;
      failures += static_cast<int>(r.failures.size());
      if (!r.ok()) d = r.failures.front();
    }
    if (d.empty()) d = std::to_string(cases) + " cases";
    return failures == 0 && cases == 1600;
  });

  criterion(2, "dual-path agreement, m,k <= 3", [](std::string& d) {
    std::mt19937_64 rng(102);
    int cases = 0, failures = 0;
    for (int set = 0; set < 10; ++set) {
      tiles::TileSet S = random_tile_set(rng, 3, 2);
      verify::Report r = verify::dualpath(S, 3, 10, rng());
      cases += r.cases;
      failures += static_cast<int>(r.failures.size());
      if (!r.ok()) d = r.failures.front();
    }
    if (d.empty()) d = std::to_string(cases) + " frames";
    return failures == 0 && cases == 900;
  });

  criterion(3, "interpretation lemma on 200 random instances", [](std::string& d) {
    verify::Report r = verify::lemma1(200, 3, 103);
    if (!r.ok()) d = r.failures.front();
    return r.ok() && r.cases == 200;
  });

  criterion(4, "reduction soundness + solver vs brute force", [](std::string& d) {
    using TT = tiles::TileType;
    std::vector<tiles::TileSet> curated = {
        tiles::TileSet({TT{0, 0, 0, 0}}),          // uniform
        tiles::TileSet({TT{0, 1, 0, 2}}),          // horizontal mismatch
        tiles::TileSet({TT{0, 1, 0, 2}, TT{0, 2, 0, 1}}),  // minimal period 2
        tiles::TileSet({TT{1, 0, 2, 0}, TT{2, 0, 1, 0}}),  // vertical period 2
        tiles::TileSet({TT{2, 2, 2, 2}}),
        tiles::TileSet({TT{1, 0, 2, 0}}),          // vertical mismatch
        tiles::TileSet({TT{0, 0, 0, 0}, TT{0, 1, 0, 2}}),
        tiles::TileSet({TT{0, 1, 0, 1}}),
        tiles::TileSet({TT{1, 1, 1, 1}}),
        tiles::TileSet({TT{0, 1, 0, 2}, TT{0, 2, 0, 2}}),
        tiles::TileSet({TT{0, 1, 2, 3}, TT{0, 3, 2, 1}, TT{2, 1, 0, 3},
                        TT{2, 3, 0, 1}}),
    };
    std::mt19937_64 rng(104);
    for (const auto& S : curated) {
      auto sol = tiles::solve_torus(S, 3, 3);
      auto brute = brute_force_torus(S, 3, 3);
      if (sol.has_value() != brute.has_value()) {
        d = "solver and brute force disagree on existence";
        return false;
      }
      if (sol) {
        auto [m, k, L] = *sol;
        if (std::make_pair(m, k) != *brute) {
          d = "solver did not find the minimal torus";
          return false;
        }
        if (!tiles::is_valid_tiling(tiles::build_torus(m, k), S, L)) {
          d = "solver returned an invalid labelling";
          return false;
        }
        if (!gamma_agrees(S, m, k, L, d)) return false;
      }
      for (int it = 0; it < 3; ++it) {
        int m = 1 + static_cast<int>(rng() % 2), k = 1 + static_cast<int>(rng() % 2);
        if (!gamma_agrees(S, m, k, random_labelling(rng, m, k, S), d))
          return false;
      }
    }
    // exhaustive solver-vs-brute-force sweep: every tile set with colors in
    // {0,1} and |S| <= 2, checked on all tori up to 2x2
    std::vector<TT> all;
    for (long t = 0; t < 2; ++t)
      for (long r = 0; r < 2; ++r)
        for (long b = 0; b < 2; ++b)
          for (long l = 0; l < 2; ++l) all.push_back(TT{t, r, b, l});
    int swept = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        tiles::TileSet S(i == j ? std::vector<TT>{all[i]}
                                : std::vector<TT>{all[i], all[j]});
        auto sol = tiles::solve_torus(S, 2, 2);
        auto brute = brute_force_torus(S, 2, 2);
        if (sol.has_value() != brute.has_value() ||
            (sol && std::make_pair(std::get<0>(*sol), std::get<1>(*sol)) != *brute)) {
          d = "exhaustive sweep disagreement";
          return false;
        }
        ++swept;
      }
    d = "11 curated sets, " + std::to_string(swept) + " exhaustive sets";
    return true;
  });

  criterion(5, "tiling sentence matches validator on 500 structures", [](std::string& d) {
    std::mt19937_64 rng(105);
    for (int it = 0; it < 500; ++it) {
      tiles::TileSet S = random_tile_set(rng, 3, 2);
      int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
      fo::FiniteStructure M =
          rng() % 2 ? tiles::build_grid(m, n) : tiles::build_torus(m, n);
      tiles::Labelling L = random_labelling(rng, m, n, S);
      bool valid = tiles::is_valid_tiling(M, S, L);
      bool sentence =
          fo::eval(tiles::expand_with_labels(M, S, L), tiles::tiling_sentence(S));
      if (valid != sentence) {
        d = "disagreement at instance #" + std::to_string(it);
        return false;
      }
    }
    return true;
  });

  criterion(6, "geometry oracles, 1000 instances each", [](std::string& d) {
    std::mt19937_64 rng(106);
    for (int it = 0; it < 1000; ++it) {  // is_basis vs fraction-free rank
      std::size_t dim = 2 + rng() % 3;
      std::size_t count = 1 + rng() % (dim + 1);
      std::vector<Point> pts;
      for (std::size_t i = 0; i < count; ++i) pts.push_back(rand_pt(rng, dim));
      if (it % 3 == 0 && count >= 2)  // force an affine dependency
        pts.back() = pts[0];
      if (geom::is_basis(pts) != (oracle_rank(diff_vectors(pts)) == count - 1)) {
        d = "is_basis instance #" + std::to_string(it);
        return false;
      }
    }
    for (int it = 0; it < 1000;) {  // open simplex vs barycentric positivity
      std::size_t k = 1 + rng() % 3;
      std::size_t dim = std::max<std::size_t>(k, 2 + rng() % 2);
      std::vector<Point> v;
      for (std::size_t i = 0; i <= k; ++i) v.push_back(rand_pt(rng, dim));
      if (oracle_rank(diff_vectors(v)) != k) continue;  // keep simplices proper
      Point z = rand_pt(rng, dim);
      if (it % 2 == 0) {  // affine combination, strictly interior half the time
        std::vector<Rat> w;
        Rat total(0);
        for (std::size_t i = 0; i <= k; ++i) {
          w.push_back(Rat(1 + static_cast<long>(rng() % 5)));
          total += w.back();
        }
        if (it % 4 == 0 && total != Rat(2) * w[0]) {
          total -= Rat(2) * w[0];  // push z outside: one weight goes negative
          w[0] = -w[0];
        }
        std::vector<Rat> c(dim, Rat(0));
        for (std::size_t i = 0; i <= k; ++i)
          for (std::size_t j = 0; j < dim; ++j) c[j] += v[i][j] * (w[i] / total);
        z = Point(std::move(c));
      }
      geom::Simplex s{v};
      if (geom::in_open_triangle(s, z) != oracle_in_open_simplex(v, z)) {
        d = "open-simplex instance #" + std::to_string(it);
        return false;
      }
      ++it;
    }
    for (int it = 0; it < 1000; ++it) {  // between vs parametric recomputation
      std::size_t dim = 2 + rng() % 2;
      Point s = rand_pt(rng, dim), u = rand_pt(rng, dim), t = rand_pt(rng, dim);
      if (it % 3 == 0) {  // on the segment or its extension
        Rat lam(static_cast<long>(rng() % 9) - 2, 4);
        std::vector<Rat> c;
        for (std::size_t i = 0; i < dim; ++i)
          c.push_back(s[i] + (u[i] - s[i]) * lam);
        t = Point(std::move(c));
      }
      if (it % 7 == 0) u = s;
      if (geom::between(s, t, u) != oracle_between(s, t, u)) {
        d = "between instance #" + std::to_string(it);
        return false;
      }
    }
    for (int it = 0; it < 1000;) {  // intersections lie on both lines
      std::size_t dim = 2 + rng() % 2;
      Point p = rand_pt(rng, dim), d1 = rand_pt(rng, dim), d2 = rand_pt(rng, dim);
      auto shift = [&](const Point& base, const Point& dir, long f) {
        std::vector<Rat> c;
        for (std::size_t i = 0; i < dim; ++i) c.push_back(base[i] + dir[i] * Rat(f));
        return Point(std::move(c));
      };
      Point a = shift(p, d1, -1), b = shift(p, d1, 2);
      Point cc = shift(p, d2, 1), dd = shift(p, d2, -3);
      if (a == b || cc == dd) continue;
      auto x = geom::line_intersection(a, b, cc, dd);
      if (oracle_rank({geom::sub(a, b), geom::sub(cc, dd)}) < 2) {
        ++it;
        continue;  // parallel by construction; nothing to land on
      }
      if (!x || !oracle_collinear(a, b, *x) || !oracle_collinear(cc, dd, *x)) {
        d = "line-intersection instance #" + std::to_string(it);
        return false;
      }
      ++it;
    }
    return true;
  });

  criterion(7, "corruption sensitivity, 20 randomized corruptions", [](std::string& d) {
    using TT = tiles::TileType;
    std::vector<TT> self_matching = {TT{0, 0, 0, 0}, TT{1, 0, 1, 0},
                                     TT{0, 1, 0, 1}, TT{1, 1, 1, 1}};
    std::mt19937_64 rng(107);
    for (int it = 0; it < 20; ++it) {
      tiles::TileSet S({self_matching[rng() % self_matching.size()]});
      long N = tiles::tile_index(S.tiles[0]);
      int m = 2 + static_cast<int>(rng() % 2), k = 2 + static_cast<int>(rng() % 2);
      tiles::Labelling L = random_labelling(rng, m, k, S);
      frames::FiniteCartesianFrame f = frames::synthesize_frame(m, k, L, S);
      fo::FormulaPtr gamma = gen::reduction_sentence_torus(S).formula;
      if (!validate_frame(f, S).empty() ||
          !fo::eval(frames::relevant_closure(f), gamma)) {
        d = "uncorrupted frame rejected at #" + std::to_string(it);
        return false;
      }
      int i = static_cast<int>(rng() % m), j = static_cast<int>(rng() % k);
      Point u = *geom::line_intersection(Point({Rat(i), 0}), f.py,
                                         Point({0, Rat(j)}), f.px);
      Point v = *geom::line_intersection(Point({Rat(i + 1), 0}), f.py,
                                         Point({0, Rat(j + 1)}), f.px);
      switch (it % 3) {
        case 0: {  // delete a non-extremal interior axis point (dropping the
                   // last one would just leave a valid smaller frame)
          Point axis = rng() % 2
                           ? Point({Rat(1 + static_cast<long>(rng() % (m - 1))), 0})
                           : Point({0, Rat(1 + static_cast<long>(rng() % (k - 1)))});
          f.P.erase(std::find(f.P.begin(), f.P.end(), axis));
          break;
        }
        case 1: {  // add one stray point on a cell diagonal
          Rat lam(1, 2 * (N + 1));
          f.P.push_back(Point({u[0] + (v[0] - u[0]) * lam,
                               u[1] + (v[1] - u[1]) * lam}));
          break;
        }
        default: {  // drop one label point from a cell diagonal
          auto on_diag = [&](const Point& p) {
            return geom::strictly_between(u, p, v);
          };
          f.P.erase(std::find_if(f.P.begin(), f.P.end(), on_diag));
          break;
        }
      }
      if (validate_frame(f, S).empty()) {
        d = "corruption #" + std::to_string(it) + " not caught by validate";
        return false;
      }
      if (fo::eval(frames::relevant_closure(f), gamma)) {
        d = "corruption #" + std::to_string(it) + " not caught by gamma";
        return false;
      }
    }
    return true;
  });

  criterion(8, "generator outputs parse, reprint, and type-check", [](std::string& d) {
    auto healthy = [&](const fo::FormulaPtr& f, const fo::Vocabulary& vocab,
                       const std::string& what) {
      fo::FormulaPtr back = fo::parse(fo::print(f), vocab);  // arity-checked
      if (!fo::equal(back, f) || fo::print(back) != fo::print(f)) {
        d = what + " does not round-trip";
        return false;
      }
      return true;
    };
    fo::Vocabulary bP = gen::betweenness_vocabulary(true);
    for (int k = 0; k <= 5; ++k) {
      if (!healthy(gen::geometry_formula(gen::GeomKind::Basis, k),
                   gen::betweenness_vocabulary(), "basis_" + std::to_string(k)))
        return false;
      if (!healthy(gen::geometry_formula(gen::GeomKind::Flat, k),
                   gen::betweenness_vocabulary(), "flat_" + std::to_string(k)))
        return false;
      if (k >= 1 &&
          !healthy(gen::geometry_formula(gen::GeomKind::OpenTriangle, k),
                   gen::betweenness_vocabulary(), "opentriangle"))
        return false;
    }
    if (!healthy(gen::geometry_formula(gen::GeomKind::Collinear),
                 gen::betweenness_vocabulary(), "collinear") ||
        !healthy(gen::geometry_formula(gen::GeomKind::Parallel),
                 gen::betweenness_vocabulary(), "parallel"))
      return false;
    for (int n = 1; n <= 3; ++n) {
      if (!healthy(gen::sepr_formula(n), bP, "sepr")) return false;
      auto fin = gen::finiteness_sentence(n);
      if (!healthy(fin.formula, fin.vocabulary, "finiteness")) return false;
      if (!fo::free_vars(fin.formula, fin.vocabulary).empty()) {
        d = "finiteness sentence not closed";
        return false;
      }
    }
    auto om = gen::omega_sentence();
    if (!healthy(om.formula, om.vocabulary, "omega")) return false;

    for (int sz = 1; sz <= 4; ++sz) {
      std::vector<tiles::TileType> ts;
      for (int i = 0; i < sz; ++i) ts.push_back(tiles::tile_unindex(i + 1));
      tiles::TileSet S(ts);
      if (!healthy(tiles::tiling_sentence(S), tiles::tiling_vocabulary(S),
                   "tiling sentence") ||
          !healthy(tiles::recurrent_sentence(S.tiles[0], S),
                   tiles::tiling_vocabulary(S, true), "recurrent sentence"))
        return false;
      for (const gen::GeneratedSentence& g :
           {gen::frame_sentence_infinite(S), gen::frame_sentence_finite(S),
            gen::reduction_sentence_grid(S), gen::reduction_sentence_torus(S)}) {
        if (!healthy(g.formula, g.vocabulary, "frame/reduction sentence"))
          return false;
        if (!fo::free_vars(g.formula, g.vocabulary).empty()) {
          d = "frame/reduction sentence not closed";
          return false;
        }
      }
      for (const fo::InterpretationScheme& sch :
           {gen::scheme_grid(S), gen::scheme_torus(S), gen::scheme_recurrence(S)}) {
        if (sch.rels.size() != sch.source.relations.size()) {
          d = "scheme relation count mismatch";
          return false;
        }
        if (!healthy(sch.dom, sch.target, "scheme dom")) return false;
        for (const auto& [name, def] : sch.rels)
          if (!healthy(def.formula, sch.target, "scheme " + name)) return false;
      }
    }
    return true;
  });

  std::cout << (g_failed ? "FAILED" : "OK") << " (" << (8 - g_failed)
            << "/8 criteria)" << std::endl;
  return g_failed ? 1 : 0;
}
