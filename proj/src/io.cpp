#include "affine/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "affine/parser.hpp"
#include "json.hpp"

namespace affine::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

namespace {

json parse_object(const std::string& text, const std::string& format) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed file: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != format)
    throw std::runtime_error("expected a \"" + format + "\" file");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// all tuples over [0,n) of the given arity, lexicographic
void for_each_tuple(int n, int arity,
                    const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(arity, 0);
  while (true) {
    f(t);
    int i = arity - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) return;
  }
}

}  // namespace

std::string structure_to_text(const fo::FiniteStructure& M) {
  json j;
  j["format"] = "affine-structure 1";
  j["universe"] = M.universe;
  json rels = json::object();
  auto tuple_ids = [&](const std::vector<int>& t) {
    json row = json::array();
    for (int e : t) row.push_back(M.universe[e]);
    return row;
  };
  for (const auto& [name, tuples] : M.relations) {
    rels[name] = json::array();
    for (const auto& t : tuples) rels[name].push_back(tuple_ids(t));
  }
  for (const auto& [name, in] : M.intrinsics) {
    rels[name] = json::array();
    for_each_tuple(M.size(), in.arity, [&](const std::vector<int>& t) {
      if (in.holds(t)) rels[name].push_back(tuple_ids(t));
    });
  }
  j["relations"] = rels;
  json consts = json::object();
  for (const auto& [name, e] : M.constants) consts[name] = M.universe[e];
  j["constants"] = consts;
  if (!M.sets.empty()) {
    json sets = json::object();
    for (const auto& [name, members] : M.sets) {
      sets[name] = json::array();
      for (int e : members) sets[name].push_back(M.universe[e]);
    }
    j["sets"] = sets;
  }
  return dump(j);
}

fo::FiniteStructure structure_from_text(const std::string& text) {
  json j = parse_object(text, "affine-structure 1");
  fo::FiniteStructure M;
  for (const auto& id : j.at("universe")) M.add_element(id.get<std::string>());
  for (const auto& [name, tuples] : j.at("relations").items()) {
    M.relations[name];
    for (const auto& row : tuples) {
      std::vector<std::string> ids;
      for (const auto& id : row) ids.push_back(id.get<std::string>());
      M.add_tuple(name, ids);
    }
  }
  json consts = j.value("constants", json::object());
  for (const auto& [name, id] : consts.items())
    M.constants[name] = M.element(id.get<std::string>());
  json sets = j.value("sets", json::object());
  for (const auto& [name, members] : sets.items()) {
    auto& s = M.sets[name];
    for (const auto& id : members) s.insert(M.element(id.get<std::string>()));
  }
  return M;
}

std::string tiles_to_text(const tiles::TileSet& S) {
  json j;
  j["format"] = "affine-tiles 1";
  j["tiles"] = json::array();
  for (const auto& t : S.tiles)
    j["tiles"].push_back({t.top, t.right, t.bottom, t.left});
  return dump(j);
}

tiles::TileSet tiles_from_text(const std::string& text) {
  json j = parse_object(text, "affine-tiles 1");
  std::vector<tiles::TileType> ts;
  for (const auto& row : j.at("tiles")) {
    if (!row.is_array() || row.size() != 4)
      throw std::runtime_error("a tile must be [top,right,bottom,left]");
    ts.push_back({row[0].get<long>(), row[1].get<long>(), row[2].get<long>(),
                  row[3].get<long>()});
  }
  return tiles::TileSet(ts);
}

std::string labelling_to_text(const tiles::Labelling& L,
                              const tiles::TileSet& S) {
  json j;
  j["format"] = "affine-labelling 1";
  json cells = json::object();
  for (const auto& [cell, tile] : L) {
    auto it = std::find(S.tiles.begin(), S.tiles.end(), tile);
    if (it == S.tiles.end())
      throw std::runtime_error("labelling uses a tile outside the tile set");
    cells[cell] = it - S.tiles.begin();
  }
  j["cells"] = cells;
  return dump(j);
}

tiles::Labelling labelling_from_text(const std::string& text,
                                     const tiles::TileSet& S) {
  json j = parse_object(text, "affine-labelling 1");
  tiles::Labelling L;
  for (const auto& [cell, pos] : j.at("cells").items()) {
    std::size_t p = pos.get<std::size_t>();
    if (p >= S.tiles.size())
      throw std::runtime_error("tile position out of range in cell " + cell);
    L[cell] = S.tiles[p];
  }
  return L;
}

std::string frame_to_text(const frames::FiniteCartesianFrame& f) {
  json j;
  j["format"] = "affine-frame 1";
  j["dim"] = f.p0.dim();
  json points = json::object();
  json P = json::array();
  for (const auto& p : f.P) {
    std::string id = frames::closure_id(p);
    json coords = json::array();
    for (const auto& c : p.coords()) coords.push_back(c.str());
    points[id] = coords;
    P.push_back(id);
  }
  j["points"] = points;
  j["P"] = P;
  j["p0"] = frames::closure_id(f.p0);
  j["px"] = frames::closure_id(f.px);
  j["py"] = frames::closure_id(f.py);
  return dump(j);
}

frames::FiniteCartesianFrame frame_from_text(const std::string& text) {
  json j = parse_object(text, "affine-frame 1");
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::map<std::string, geom::Point> points;
  for (const auto& [id, coords] : j.at("points").items()) {
    if (coords.size() != dim)
      throw std::runtime_error("point " + id + " has the wrong dimension");
    std::vector<Rat> c;
    try {
      for (const auto& s : coords) c.push_back(Rat::parse(s.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("point ") + id + ": " + e.what());
    }
    points.emplace(id, geom::Point(std::move(c)));
  }
  auto lookup = [&](const std::string& id) {
    auto it = points.find(id);
    if (it == points.end()) throw std::runtime_error("unknown point id " + id);
    return it->second;
  };
  frames::FiniteCartesianFrame f;
  for (const auto& id : j.at("P")) f.P.push_back(lookup(id.get<std::string>()));
  f.p0 = lookup(j.at("p0").get<std::string>());
  f.px = lookup(j.at("px").get<std::string>());
  f.py = lookup(j.at("py").get<std::string>());
  return f;
}

namespace {

const std::string kFormulaHeader = "# affine-formula 1";
const std::string kSchemeHeader = "# affine-scheme 1";

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

// relation symbols used in atoms (with arities), ignoring set-quantified
// names
void collect_atoms(const fo::FormulaPtr& f, std::set<std::string> bound_sets,
                   std::map<std::string, int>& out) {
  if (!f) return;
  switch (f->kind) {
    case fo::Kind::App:
      if (!bound_sets.count(f->name))
        out[f->name] = static_cast<int>(f->args.size());
      return;
    case fo::Kind::SetExists:
    case fo::Kind::SetForall:
    case fo::Kind::SetExistsWeak:
    case fo::Kind::SetForallWeak:
      bound_sets.insert(f->name);
      break;
    default:
      break;
  }
  collect_atoms(f->child, bound_sets, out);
  collect_atoms(f->left, bound_sets, out);
  collect_atoms(f->right, bound_sets, out);
}

}  // namespace

std::string formula_to_text(const fo::FormulaPtr& f) {
  return kFormulaHeader + "\n" + fo::print(f) + "\n";
}

fo::FormulaPtr formula_from_text(const std::string& text) {
  if (first_line(text) != kFormulaHeader)
    throw std::runtime_error("expected a \"" + kFormulaHeader + "\" file");
  return fo::parse(text);
}

std::string scheme_to_text(const fo::InterpretationScheme& s) {
  std::ostringstream out;
  out << kSchemeHeader << "\n";
  out << "@dom " << s.dom_var << "\n" << fo::print(s.dom) << "\n";
  for (const auto& [name, def] : s.rels) {
    out << "@rel " << name;
    for (const auto& p : def.params) out << " " << p;
    out << "\n" << fo::print(def.formula) << "\n";
  }
  return out.str();
}

fo::InterpretationScheme scheme_from_text(const std::string& text) {
  if (first_line(text) != kSchemeHeader)
    throw std::runtime_error("expected a \"" + kSchemeHeader + "\" file");

  fo::InterpretationScheme s;
  std::istringstream in(text);
  std::string line, slot, body;
  std::vector<std::string> slot_words;
  auto flush = [&]() {
    if (slot.empty()) return;
    fo::FormulaPtr f = fo::parse(body);
    if (slot == "dom") {
      if (slot_words.size() != 1)
        throw std::runtime_error("@dom takes exactly one variable");
      s.dom_var = slot_words[0];
      s.dom = f;
    } else {
      if (slot_words.empty())
        throw std::runtime_error("@rel needs a relation name");
      std::string name = slot_words[0];
      s.rels[name] = {{slot_words.begin() + 1, slot_words.end()}, f};
      s.source.relations[name] = static_cast<int>(slot_words.size()) - 1;
    }
    slot.clear();
    body.clear();
  };
  while (std::getline(in, line)) {
    if (line.rfind("@", 0) == 0) {
      flush();
      std::istringstream ws(line.substr(1));
      ws >> slot;
      slot_words.clear();
      for (std::string w; ws >> w;) slot_words.push_back(w);
      if (slot != "dom" && slot != "rel")
        throw std::runtime_error("unknown slot @" + slot);
    } else {
      body += line + "\n";
    }
  }
  flush();
  if (!s.dom) throw std::runtime_error("scheme file has no @dom slot");

  // reconstruct the target vocabulary from the formulas themselves
  std::map<std::string, int> atoms;
  collect_atoms(s.dom, {}, atoms);
  std::set<std::string> declared{s.dom_var};
  std::set<std::string> frees = fo::free_vars(s.dom);
  for (const auto& [name, def] : s.rels) {
    collect_atoms(def.formula, {}, atoms);
    for (const auto& p : def.params) declared.insert(p);
    auto fv = fo::free_vars(def.formula);
    frees.insert(fv.begin(), fv.end());
  }
  s.target.relations = atoms;
  for (const auto& v : frees)
    if (!declared.count(v)) s.target.constants.insert(v);
  return s;
}

}  // namespace affine::io
