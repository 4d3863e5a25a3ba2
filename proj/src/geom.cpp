#include "affine/geom.hpp"

#include <stdexcept>

namespace affine::geom {

namespace {

void check_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim() || a.dim() == 0)
    throw std::invalid_argument("geom: dimension mismatch");
}

bool dependent(const std::vector<Rat>& v, const std::vector<Rat>& w) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  return true;
}

}  // namespace

std::vector<Rat> sub(const Point& a, const Point& b) {
  check_dim(a, b);
  std::vector<Rat> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = b[i] - a[i];
  return r;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool between(const Point& s, const Point& t, const Point& u) {
  check_dim(s, t);
  check_dim(s, u);
  if (s == u) return t == s;
  auto v = sub(s, t), w = sub(s, u);
  if (!dependent(v, w)) return false;
  Rat vw = dot(v, w);
  return Rat(0) <= vw && vw <= dot(w, w);
}

bool strictly_between(const Point& s, const Point& t, const Point& u) {
  return between(s, t, u) && s != t && t != u;
}

bool collinear3(const Point& s, const Point& t, const Point& u) {
  return between(s, t, u) || between(s, u, t) || between(t, s, u);
}

bool parallel(const Point& x, const Point& y, const Point& t, const Point& k) {
  check_dim(x, y);
  check_dim(t, k);
  check_dim(x, t);
  if (x == y || t == k) return false;
  return dependent(sub(x, y), sub(t, k));
}

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<int> pivot_col(rows, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == Rat(0)) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == Rat(0)) continue;
      Rat f = A[i][c] / A[r][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != Rat(0)) return std::nullopt;  // inconsistent
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < r; ++i) {
    int c = pivot_col[i];
    x[c] = b[i] / A[i][c];
  }
  return x;
}

std::size_t rank(std::vector<std::vector<Rat>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == Rat(0)) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (rows[i][c] == Rat(0)) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool is_basis(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("is_basis: empty point list");
  const std::size_t k = points.size() - 1;
  if (k == 0) return true;
  const std::size_t n = points[0].dim();
  if (k > n) return false;
  std::vector<std::vector<Rat>> vs;
  vs.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) vs.push_back(sub(points[0], points[i]));
  return rank(std::move(vs)) == k;
}

namespace {

// Coefficients b with z - x0 = sum_i b_i (x_i - x0); nullopt if z is outside
// the affine span.
std::optional<std::vector<Rat>> span_coords(std::span<const Point> points,
                                            const Point& z) {
  const std::size_t k = points.size() - 1;
  const std::size_t n = points[0].dim();
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(k));
  for (std::size_t i = 1; i <= k; ++i) {
    auto v = sub(points[0], points[i]);
    for (std::size_t row = 0; row < n; ++row) A[row][i - 1] = v[row];
  }
  return solve_linear(std::move(A), sub(points[0], z));
}

}  // namespace

bool in_flat(std::span<const Point> points, const Point& z) {
  if (!is_basis(points)) throw std::invalid_argument("in_flat: not a basis");
  if (points.size() == 1) return points[0] == z;
  return span_coords(points, z).has_value();
}

bool in_open_triangle(const Simplex& s, const Point& z) {
  std::span<const Point> pts(s.vertices);
  if (!is_basis(pts)) throw std::invalid_argument("in_open_triangle: not a basis");
  const std::size_t k = pts.size() - 1;
  if (k == 0) return pts[0] == z;
  if (k == 1) return strictly_between(pts[0], z, pts[1]);
  auto b = span_coords(pts, z);
  if (!b) return false;
  const Rat& bk = (*b)[k - 1];
  if (!(Rat(0) < bk && bk < Rat(1))) return false;
  // Cast z from the apex x_k onto the opposite facet.
  Rat lambda = Rat(1) / (Rat(1) - bk);
  const Point& apex = pts[k];
  std::vector<Rat> yc(apex.dim());
  for (std::size_t i = 0; i < apex.dim(); ++i)
    yc[i] = apex[i] + lambda * (z[i] - apex[i]);
  Point y(std::move(yc));
  if (!strictly_between(y, z, apex)) return false;
  Simplex facet{std::vector<Point>(s.vertices.begin(), s.vertices.end() - 1)};
  return in_open_triangle(facet, y);
}

namespace {

Rat linf(const Point& a, const Point& b) {
  Rat m(0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Rat d = (a[i] - b[i]).abs();
    if (d > m) m = d;
  }
  return m;
}

// Axis-aligned right simplex: v0 = base, v_i = base + side * e_i.
Simplex corner_simplex(const Point& base, const Rat& side) {
  Simplex s;
  s.vertices.push_back(base);
  for (std::size_t i = 0; i < base.dim(); ++i) {
    Point v = base;
    v[i] = v[i] + side;
    s.vertices.push_back(v);
  }
  return s;
}

}  // namespace

std::optional<Simplex> sepr_witness(const std::vector<Point>& P, const Point& x) {
  const long n = static_cast<long>(x.dim());
  Rat delta(1);
  bool any = false;
  Rat dmin(0);
  for (const auto& p : P) {
    if (p == x) continue;
    Rat d = linf(x, p);
    if (!any || d < dmin) dmin = d;
    any = true;
  }
  if (any) delta = dmin / Rat(2 * (n + 2));
  // x sits at barycentric weight 1/(n+1) from each face: strictly inside.
  Point base = x;
  for (std::size_t i = 0; i < x.dim(); ++i) base[i] = base[i] - delta;
  return corner_simplex(base, delta * Rat(n + 1));
}

Simplex bounding_simplex(const std::vector<Point>& P) {
  if (P.empty()) throw std::invalid_argument("bounding_simplex: empty set");
  const long n = static_cast<long>(P[0].dim());
  Rat m(0);
  for (const auto& p : P)
    for (std::size_t i = 0; i < p.dim(); ++i) {
      Rat a = p[i].abs();
      if (a > m) m = a;
    }
  Rat big = m + Rat(1);
  Point base(std::vector<Rat>(P[0].dim(), -big));
  return corner_simplex(base, Rat(2 * n) * big + Rat(1));
}

std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d) {
  check_dim(a, b);
  check_dim(c, d);
  check_dim(a, c);
  if (a == b || c == d)
    throw std::invalid_argument("line_intersection: degenerate line");
  auto e = sub(a, b), f = sub(c, d), g = sub(a, c);
  if (dependent(e, f)) return std::nullopt;  // parallel or identical
  const std::size_t n = a.dim();
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(2));
  for (std::size_t i = 0; i < n; ++i) {
    A[i][0] = e[i];
    A[i][1] = -f[i];
  }
  auto sol = solve_linear(std::move(A), std::move(g));
  if (!sol) return std::nullopt;  // skew
  std::vector<Rat> pc(n);
  for (std::size_t i = 0; i < n; ++i) pc[i] = a[i] + (*sol)[0] * e[i];
  return Point(std::move(pc));
}

}  // namespace affine::geom
