#include "affine/structure.hpp"

#include <stdexcept>

namespace affine::fo {

int FiniteStructure::add_element(const std::string& id) {
  if (index.count(id))
    throw std::invalid_argument("structure: duplicate element id '" + id + "'");
  int i = size();
  universe.push_back(id);
  index[id] = i;
  return i;
}

int FiniteStructure::element(const std::string& id) const {
  auto it = index.find(id);
  if (it == index.end())
    throw std::invalid_argument("structure: unknown element id '" + id + "'");
  return it->second;
}

void FiniteStructure::add_tuple(const std::string& rel,
                                const std::vector<std::string>& ids) {
  std::vector<int> t;
  t.reserve(ids.size());
  for (const auto& id : ids) t.push_back(element(id));
  auto it = relations.find(rel);
  if (it != relations.end() && !it->second.empty() &&
      it->second.begin()->size() != t.size())
    throw std::invalid_argument("structure: arity mismatch in relation '" + rel + "'");
  relations[rel].insert(std::move(t));
}

int FiniteStructure::relation_arity(const std::string& name) const {
  auto it = intrinsics.find(name);
  if (it != intrinsics.end()) return it->second.arity;
  auto rt = relations.find(name);
  if (rt == relations.end())
    throw std::invalid_argument("structure: unknown relation '" + name + "'");
  if (rt->second.empty())
    throw std::invalid_argument("structure: relation '" + name +
                                "' is empty; arity unknown");
  return static_cast<int>(rt->second.begin()->size());
}

bool FiniteStructure::holds(const std::string& rel,
                            const std::vector<int>& tuple) const {
  auto it = intrinsics.find(rel);
  if (it != intrinsics.end()) return it->second.holds(tuple);
  auto rt = relations.find(rel);
  if (rt == relations.end())
    throw std::invalid_argument("structure: unknown relation '" + rel + "'");
  return rt->second.count(tuple) != 0;
}

FiniteStructure FiniteStructure::permuted(const std::vector<int>& perm) const {
  if (perm.size() != universe.size())
    throw std::invalid_argument("permuted: size mismatch");
  FiniteStructure r;
  r.universe.resize(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    r.universe[perm[i]] = universe[i];
    r.index[universe[i]] = perm[i];
  }
  for (const auto& [name, table] : relations) {
    auto& out = r.relations[name];
    for (const auto& t : table) {
      std::vector<int> nt;
      nt.reserve(t.size());
      for (int e : t) nt.push_back(perm[e]);
      out.insert(std::move(nt));
    }
  }
  if (!intrinsics.empty())
    throw std::invalid_argument("permuted: intrinsic relations not supported");
  for (const auto& [name, e] : constants) r.constants[name] = perm[e];
  for (const auto& [name, set] : sets) {
    auto& out = r.sets[name];
    for (int e : set) out.insert(perm[e]);
  }
  return r;
}

}  // namespace affine::fo
