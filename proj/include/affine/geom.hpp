#pragma once

#include <optional>
#include <span>
#include <vector>

#include "affine/rat.hpp"

namespace affine::geom {

/// A point of Q^n. All points participating in one computation must share a
/// dimension; operations throw std::invalid_argument otherwise.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rat> coords) : c_(std::move(coords)) {}
  Point(std::initializer_list<Rat> coords) : c_(coords) {}

  std::size_t dim() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool operator==(const Point& o) const { return c_ == o.c_; }
  bool operator!=(const Point& o) const { return c_ != o.c_; }

 private:
  std::vector<Rat> c_;
};

/// Difference vector b - a (componentwise).
std::vector<Rat> sub(const Point& a, const Point& b);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// A k-simplex given by its k+1 vertices. Proper iff the vertices form an
/// affine basis (see is_basis).
struct Simplex {
  std::vector<Point> vertices;
  std::size_t order() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Betweenness: t lies on the closed segment [s,u]. Computed algebraically
/// (vanishing 2x2 minors plus a dot-product interval), equivalent to the
/// metric definition d(s,u) = d(s,t) + d(t,u).
bool between(const Point& s, const Point& t, const Point& u);

/// between with t distinct from both endpoints.
bool strictly_between(const Point& s, const Point& t, const Point& u);

/// The three points lie on one line; invariant under argument permutation.
bool collinear3(const Point& s, const Point& t, const Point& u);

/// Lines xy and tk have linearly dependent directions. Coincident lines
/// count as parallel.
bool parallel(const Point& x, const Point& y, const Point& t, const Point& k);

/// The unique common point of the two distinct, non-parallel, coplanar lines
/// ab and cd; nullopt when parallel, skew, or identical.
std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d);

/// The vectors x_i - x_0 are linearly independent (k = points.size()-1;
/// k = 0 is always a basis, k > n never is).
bool is_basis(std::span<const Point> points);
inline bool is_basis(const std::vector<Point>& p) { return is_basis(std::span<const Point>(p)); }

/// z lies in the affine span of the given affine basis.
bool in_flat(std::span<const Point> points, const Point& z);
inline bool in_flat(const std::vector<Point>& p, const Point& z) {
  return in_flat(std::span<const Point>(p), z);
}

/// z is strictly inside the open k-simplex. Follows the recursive
/// strict-betweenness construction: find the cast point y on the facet and
/// recurse, rather than solving for barycentric coordinates in one pass.
bool in_open_triangle(const Simplex& s, const Point& z);

/// A proper n-simplex whose open interior contains x and excludes every
/// other point of P. Always succeeds for finite P.
std::optional<Simplex> sepr_witness(const std::vector<Point>& P, const Point& x);

/// A proper n-simplex whose open interior contains every point of P.
Simplex bounding_simplex(const std::vector<Point>& P);

/// Exact rank of a list of rational vectors (plain Gaussian elimination).
std::size_t rank(std::vector<std::vector<Rat>> rows);

/// Solves A x = b exactly. Returns one solution if consistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b);

}  // namespace affine::geom
