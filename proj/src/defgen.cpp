#include "affine/defgen.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affine::gen {

using fo::app;
using fo::eq;
using fo::exists;
using fo::forall;
using fo::FormulaPtr;
using fo::mk_and;
using fo::mk_implies;
using fo::mk_not;
using fo::mk_or;
using fo::substitute;
using fo::Vocabulary;

namespace {

using Subst = std::vector<std::pair<std::string, std::string>>;

FormulaPtr bet(const std::string& a, const std::string& b, const std::string& c) {
  return app("B", {a, b, c});
}

FormulaPtr neq(const std::string& a, const std::string& b) {
  return mk_not(eq(a, b));
}

// strict betweenness: b between a and c and distinct from both
FormulaPtr sbet(const std::string& a, const std::string& b, const std::string& c) {
  return mk_and({bet(a, b, c), neq(a, b), neq(b, c)});
}

FormulaPtr coll(const std::string& x, const std::string& y, const std::string& z) {
  return mk_or({bet(x, y, z), bet(x, z, y), bet(y, x, z)});
}

std::string xv(int i) { return "x" + std::to_string(i); }
std::string yv(int i) { return "y" + std::to_string(i); }

FormulaPtr parallel_formula() {
  // lines xy and tk are parallel: either both t and k lie on line xy, or the
  // lines share no point and a parallelogram-style witness pair exists
  FormulaPtr same_line = mk_and(coll("x", "y", "t"), coll("x", "y", "k"));
  FormulaPtr no_common =
      mk_not(exists("z", mk_and(coll("x", "y", "z"), coll("t", "k", "z"))));
  FormulaPtr witness = exists(
      "z1", exists("z2", mk_and({neq("x", "z1"), coll("x", "y", "z1"),
                                 coll("x", "t", "z2"), coll("z1", "z2", "k")})));
  return mk_and({neq("x", "y"), neq("t", "k"),
                 mk_or(same_line, mk_and(no_common, witness))});
}

// basis_k(x0..xk) and flat_k(x0..xk,z), built bottom-up by their
// simultaneous recursion
std::pair<FormulaPtr, FormulaPtr> basis_flat(int k) {
  FormulaPtr par = parallel_formula();
  FormulaPtr basis = eq(xv(0), xv(0));
  FormulaPtr flat = eq(xv(0), "z");
  for (int i = 1; i <= k; ++i) {
    basis = mk_and(basis, mk_not(substitute(flat, Subst{{"z", xv(i)}})));
    std::vector<FormulaPtr> chain{eq(yv(0), xv(0)), eq(yv(i), "z")};
    for (int j = 0; j <= i - 1; ++j)
      chain.push_back(mk_or(
          eq(yv(j), yv(j + 1)),
          substitute(par, Subst{{"x", xv(0)}, {"y", xv(j + 1)}, {"t", yv(j)},
                                {"k", yv(j + 1)}})));
    FormulaPtr body = mk_and(std::move(chain));
    for (int j = i; j >= 0; --j) body = exists(yv(j), std::move(body));
    flat = mk_and(basis, std::move(body));
  }
  return {basis, flat};
}

// opentriangle_k(x0..xk,z)
FormulaPtr opentriangle(int k) {
  FormulaPtr ot = sbet(xv(0), "z", xv(1));
  for (int i = 2; i <= k; ++i)
    ot = mk_and(basis_flat(i).first,
                exists("y", mk_and(substitute(ot, Subst{{"z", "y"}}),
                                   sbet("y", "z", xv(i)))));
  return ot;
}

// Membership formula of a definable point set, used to relativize the
// sequence definitions to axis sets.
using Member = std::function<FormulaPtr(const std::string&)>;

// "the set is an omega-like sequence": Definitions of sequence, discrete
// spacing, discrete infiniteness with a base point, zero-point, and the
// omega-like refinement, with membership given by `in`.
FormulaPtr omega_core(const Member& in) {
  FormulaPtr sequence = mk_and(
      exists("x", in("x")),
      forall("x", forall("y", forall("z", mk_implies(mk_and({in("x"), in("y"),
                                                             in("z")}),
                                                     coll("x", "y", "z"))))));
  FormulaPtr spaced = forall(
      "s", forall("t", mk_implies(
                           mk_and({in("s"), in("t"), neq("s", "t")}),
                           exists("u", mk_and({neq("u", "s"), bet("s", "u", "t"),
                                               forall("r", mk_implies(
                                                               sbet("s", "r", "u"),
                                                               mk_not(in("r"))))})))));
  FormulaPtr infinite = exists(
      "s", mk_and(in("s"),
                  forall("u", mk_implies(in("u"),
                                         exists("v", mk_and({in("v"), neq("v", "u"),
                                                             bet("s", "u", "v")}))))));
  FormulaPtr zero = exists(
      "s", mk_and(in("s"),
                  mk_not(exists(
                      "u", exists("v", mk_and({in("u"), in("v"), neq("u", "s"),
                                               neq("v", "s"), bet("u", "s", "v")}))))));
  auto properly_inside = [&](FormulaPtr extra) {
    std::vector<FormulaPtr> parts{in("s"), in("u"), neq("s", "r"), neq("u", "r"),
                                  bet("s", "r", "u")};
    if (extra) parts.push_back(std::move(extra));
    return exists("s", exists("u", mk_and(std::move(parts))));
  };
  FormulaPtr adjacent_around = properly_inside(
      forall("v", mk_implies(mk_and(neq("v", "r"), sbet("s", "v", "u")),
                             mk_not(in("v")))));
  FormulaPtr omega =
      forall("r", mk_implies(properly_inside(nullptr), adjacent_around));
  return mk_and({sequence, spaced, infinite, zero, omega});
}

// The grid-interpretation formulas, built once with shared subtrees so an
// Evaluator can reuse node caches across all of them.
struct GridFormulas {
  FormulaPtr dom;            // free u
  FormulaPtr dom_r, dom_x, dom_z;
  FormulaPtr H, V;           // free u, v
  FormulaPtr diag;           // free u, v
  FormulaPtr diag_uz;        // free u, z
};

GridFormulas grid_formulas() {
  GridFormulas g;
  FormulaPtr crossing = exists(
      "x", exists("y", mk_and({app("P", {"x"}), app("P", {"y"}),
                               sbet("p0", "x", "px"), sbet("p0", "y", "py"),
                               sbet("x", "u", "py"), sbet("y", "u", "px")})));
  FormulaPtr on_axis =
      mk_and({neq("u", "px"), neq("u", "py"), app("P", {"u"}),
              mk_or(bet("p0", "u", "px"), bet("p0", "u", "py"))});
  g.dom = mk_or(std::move(crossing), std::move(on_axis));
  g.dom_r = substitute(g.dom, Subst{{"u", "r"}});
  g.dom_x = substitute(g.dom, Subst{{"u", "x"}});
  g.dom_z = substitute(g.dom, Subst{{"u", "z"}});

  FormulaPtr gap = forall("r", mk_implies(sbet("u", "r", "v"), mk_not(g.dom_r)));
  g.H = mk_and(exists("x", mk_and({bet("p0", "x", "py"), bet("x", "u", "v"),
                                   sbet("u", "v", "px")})),
               gap);
  g.V = mk_and(exists("x", mk_and({bet("p0", "x", "px"), bet("x", "u", "v"),
                                   sbet("u", "v", "py")})),
               gap);

  FormulaPtr h_ux = substitute(g.H, Subst{{"v", "x"}});
  FormulaPtr v_xv = substitute(g.V, Subst{{"u", "x"}});
  g.diag = exists("x", mk_and({g.dom_x, std::move(h_ux), std::move(v_xv)}));
  g.diag_uz = substitute(g.diag, Subst{{"v", "z"}});
  return g;
}

// phi_{P_t}(u): the cell diagonal from u to its diagonal successor carries
// exactly tile_index(t) points of P
FormulaPtr tile_pred(const GridFormulas& g, const tiles::TileType& t) {
  return exists(
      "z", mk_and({g.dom_z, g.diag_uz,
                   fo::count_exists(tiles::tile_index(t), "x",
                                    mk_and(app("P", {"x"}), sbet("u", "x", "z")))}));
}

// every diagonal-successor pair carries a point count from S's indices
FormulaPtr label_condition(const GridFormulas& g, const tiles::TileSet& S) {
  std::vector<FormulaPtr> counts;
  for (const auto& t : S.tiles)
    counts.push_back(fo::count_exists(
        tiles::tile_index(t), "x", mk_and(app("P", {"x"}), sbet("u", "x", "v"))));
  FormulaPtr dom_v = substitute(g.dom, Subst{{"u", "v"}});
  return forall(
      "u", forall("v", mk_implies(mk_and({g.dom, std::move(dom_v), g.diag}),
                                  mk_or(std::move(counts)))));
}

void require_nonempty(const tiles::TileSet& S) {
  if (S.tiles.empty()) throw std::invalid_argument("defgen: empty tile set");
}

}  // namespace

Vocabulary betweenness_vocabulary(bool with_P) {
  Vocabulary v;
  v.relations["B"] = 3;
  if (with_P) v.relations["P"] = 1;
  return v;
}

Vocabulary frame_vocabulary() {
  Vocabulary v = betweenness_vocabulary(true);
  v.constants = {"p0", "px", "py"};
  return v;
}

FormulaPtr geometry_formula(GeomKind kind, int k) {
  switch (kind) {
    case GeomKind::Collinear:
      return coll("x", "y", "z");
    case GeomKind::Parallel:
      return parallel_formula();
    case GeomKind::Basis:
      if (k < 0) throw std::invalid_argument("geometry_formula: basis needs k >= 0");
      return basis_flat(k).first;
    case GeomKind::Flat:
      if (k < 0) throw std::invalid_argument("geometry_formula: flat needs k >= 0");
      return basis_flat(k).second;
    case GeomKind::OpenTriangle:
      if (k < 1)
        throw std::invalid_argument("geometry_formula: opentriangle needs k >= 1");
      return opentriangle(k);
  }
  throw std::invalid_argument("geometry_formula: unknown kind");
}

FormulaPtr sepr_formula(int n) {
  if (n < 1) throw std::invalid_argument("sepr_formula: dimension must be >= 1");
  FormulaPtr ot = opentriangle(n);
  FormulaPtr around_x = substitute(ot, Subst{{"z", "x"}});
  FormulaPtr around_y = substitute(ot, Subst{{"z", "y"}});
  FormulaPtr body = mk_and(
      std::move(around_x),
      forall("y", mk_implies(mk_and(std::move(around_y), neq("y", "x")),
                             mk_not(app("P", {"y"})))));
  for (int i = n; i >= 0; --i) body = exists(xv(i), std::move(body));
  return body;
}

GeneratedSentence finiteness_sentence(int n) {
  if (n < 1)
    throw std::invalid_argument("finiteness_sentence: dimension must be >= 1");
  FormulaPtr sepr = sepr_formula(n);
  FormulaPtr closed =
      forall("x", mk_implies(mk_not(app("P", {"x"})), sepr));
  FormulaPtr isolated = forall("x", mk_implies(app("P", {"x"}), sepr));
  FormulaPtr ot_y = substitute(opentriangle(n), Subst{{"z", "y"}});
  FormulaPtr bounded_body =
      mk_and(basis_flat(n).first,
             forall("y", mk_implies(app("P", {"y"}), std::move(ot_y))));
  for (int i = n; i >= 0; --i) bounded_body = exists(xv(i), std::move(bounded_body));
  return {mk_and({std::move(closed), std::move(isolated), std::move(bounded_body)}),
          betweenness_vocabulary(true), Construct::Finiteness};
}

GeneratedSentence omega_sentence() {
  Member in = [](const std::string& v) { return app("P", {v}); };
  return {omega_core(in), betweenness_vocabulary(true), Construct::Omega};
}

namespace {

// P_c = {u in P | collinear(p0,u,c)}: the axis set through constant c,
// including the endpoint c itself
Member axis_member(const std::string& c) {
  return [c](const std::string& v) {
    return mk_and(app("P", {v}), coll("p0", v, c));
  };
}

// the axis minus its endpoint
Member interior_member(const std::string& c) {
  return [c](const std::string& v) {
    return mk_and({app("P", {v}), coll("p0", v, c), neq(v, c)});
  };
}

// c is the endpoint of its axis: no axis pair straddles it, and any
// straddled axis segment from c has a closer axis point
FormulaPtr endpoint_condition(const std::string& c) {
  Member in = axis_member(c);
  FormulaPtr extreme = mk_not(
      exists("s", exists("t", mk_and({in("s"), in("t"), sbet("s", c, "t")}))));
  FormulaPtr dense_toward = forall(
      "y", forall("z", mk_implies(mk_and({in("y"), in("z"), sbet(c, "y", "z")}),
                                  exists("v", mk_and(in("v"), sbet(c, "v", "y"))))));
  return mk_and(std::move(extreme), std::move(dense_toward));
}

// p0 is the zero-point of the axis interior
FormulaPtr zero_at_origin(const std::string& c) {
  Member in = interior_member(c);
  return mk_and(in("p0"),
                mk_not(exists(
                    "u", exists("v", mk_and({in("u"), in("v"), neq("u", "p0"),
                                             neq("v", "p0"), bet("u", "p0", "v")})))));
}

}  // namespace

GeneratedSentence frame_sentence_infinite(const tiles::TileSet& S) {
  require_nonempty(S);
  FormulaPtr nc = mk_not(coll("p0", "px", "py"));
  FormulaPtr axes = mk_and(
      {omega_core(interior_member("px")), endpoint_condition("px"),
       omega_core(interior_member("py")), endpoint_condition("py")});
  FormulaPtr zeros = mk_and(zero_at_origin("px"), zero_at_origin("py"));
  Member in_x = interior_member("px"), in_y = interior_member("py");
  FormulaPtr crossings = forall(
      "p", forall("q", mk_implies(mk_and(in_x("p"), in_y("q")),
                                  exists("u", mk_and(coll("p", "py", "u"),
                                                     coll("q", "px", "u"))))));
  GridFormulas g = grid_formulas();
  return {mk_and({std::move(nc), std::move(axes), std::move(zeros),
                  std::move(crossings), label_condition(g, S)}),
          frame_vocabulary(), Construct::FrameInf};
}

GeneratedSentence frame_sentence_finite(const tiles::TileSet& S) {
  require_nonempty(S);
  FormulaPtr consts =
      mk_and({app("P", {"p0"}), app("P", {"px"}), app("P", {"py"})});
  FormulaPtr nc = mk_not(coll("p0", "px", "py"));
  auto interior = [](const std::string& c) {
    return exists("u", mk_and(app("P", {"u"}), sbet("p0", "u", c)));
  };
  FormulaPtr crossings = forall(
      "p",
      forall("q", mk_implies(mk_and({app("P", {"p"}), app("P", {"q"}),
                                     sbet("p0", "p", "px"), sbet("p0", "q", "py")}),
                             exists("u", mk_and(coll("p", "py", "u"),
                                                coll("q", "px", "u"))))));
  GridFormulas g = grid_formulas();
  return {mk_and({std::move(consts), std::move(nc), interior("px"),
                  interior("py"), std::move(crossings), label_condition(g, S)}),
          frame_vocabulary(), Construct::FrameFin};
}

fo::InterpretationScheme scheme_grid(const tiles::TileSet& S) {
  require_nonempty(S);
  GridFormulas g = grid_formulas();
  fo::InterpretationScheme s;
  s.source = tiles::tiling_vocabulary(S);
  s.target = frame_vocabulary();
  s.dom_var = "u";
  s.dom = g.dom;
  s.rels["H"] = {{"u", "v"}, g.H};
  s.rels["V"] = {{"u", "v"}, g.V};
  for (const auto& t : S.tiles)
    s.rels[tiles::pred_name(t)] = {{"u"}, tile_pred(g, t)};
  return s;
}

fo::InterpretationScheme scheme_recurrence(const tiles::TileSet& S) {
  fo::InterpretationScheme s = scheme_grid(S);
  s.source.relations["R"] = 2;
  FormulaPtr dom_v = substitute(s.dom, Subst{{"u", "v"}});
  s.rels["R"] = {{"u", "v"},
                 mk_and({s.dom, std::move(dom_v), neq("u", "v"),
                         coll("p0", "u", "py"), coll("p0", "v", "py"),
                         bet("p0", "u", "v")})};
  return s;
}

fo::InterpretationScheme scheme_torus(const tiles::TileSet& S) {
  require_nonempty(S);
  GridFormulas g = grid_formulas();
  FormulaPtr dom_y = substitute(g.dom, Subst{{"u", "y"}});
  FormulaPtr h_ux = substitute(g.H, Subst{{"v", "x"}});
  FormulaPtr v_uy = substitute(g.V, Subst{{"v", "y"}});
  FormulaPtr fdom = mk_and(
      g.dom, exists("x", exists("y", mk_and({g.dom_x, std::move(dom_y),
                                             std::move(h_ux), std::move(v_uy)}))));
  FormulaPtr fdom_x = substitute(fdom, Subst{{"u", "x"}});
  auto wrap = [&](const std::string& along, const std::string& other) {
    // v on the other axis, u the row/column's last cell before `along`
    return mk_and({bet("p0", "v", other), bet("v", "u", along),
                   forall("x", mk_implies(sbet("u", "x", along), mk_not(fdom_x)))});
  };
  FormulaPtr fH = mk_or(g.H, wrap("px", "py"));
  FormulaPtr fV = mk_or(g.V, wrap("py", "px"));

  fo::InterpretationScheme s;
  s.source = tiles::tiling_vocabulary(S);
  s.target = frame_vocabulary();
  s.dom_var = "u";
  s.dom = std::move(fdom);
  s.rels["H"] = {{"u", "v"}, std::move(fH)};
  s.rels["V"] = {{"u", "v"}, std::move(fV)};
  for (const auto& t : S.tiles)
    s.rels[tiles::pred_name(t)] = {{"u"}, tile_pred(g, t)};
  return s;
}

GeneratedSentence reduction_sentence_grid(const tiles::TileSet& S) {
  GeneratedSentence frame = frame_sentence_infinite(S);
  FormulaPtr translated =
      fo::translate(scheme_grid(S), tiles::tiling_sentence(S));
  return {mk_and(frame.formula, std::move(translated)), frame_vocabulary(),
          Construct::PsiS};
}

GeneratedSentence reduction_sentence_torus(const tiles::TileSet& S) {
  GeneratedSentence frame = frame_sentence_finite(S);
  FormulaPtr translated =
      fo::translate(scheme_torus(S), tiles::tiling_sentence(S));
  return {mk_and(frame.formula, std::move(translated)), frame_vocabulary(),
          Construct::GammaS};
}

FormulaPtr weak_to_strong(const FormulaPtr& f, int n, const Vocabulary& vocab) {
  auto it = vocab.relations.find("B");
  if (it == vocab.relations.end() || it->second != 3)
    throw std::invalid_argument(
        "weak_to_strong: vocabulary lacks the ternary betweenness relation B");
  return fo::weak_to_strong(f, finiteness_sentence(n).formula, "P");
}

}  // namespace affine::gen
