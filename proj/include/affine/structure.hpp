#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace affine::fo {

struct Vocabulary {
  std::map<std::string, int> relations;  // name -> arity (>= 1)
  std::set<std::string> constants;
  std::set<std::string> set_symbols;
};

/// Finite relational structure. Universe elements are opaque string ids,
/// addressed internally by index. A relation is either an explicit tuple
/// table or an intrinsic predicate (arity + callback over element indices);
/// the latter avoids materializing cubic tables for dense relations like
/// betweenness over point closures.
struct FiniteStructure {
  std::vector<std::string> universe;
  std::map<std::string, int> index;

  std::map<std::string, std::set<std::vector<int>>> relations;
  struct Intrinsic {
    int arity;
    std::function<bool(const std::vector<int>&)> holds;
  };
  std::map<std::string, Intrinsic> intrinsics;

  std::map<std::string, int> constants;
  std::map<std::string, std::set<int>> sets;

  int size() const { return static_cast<int>(universe.size()); }

  /// Adds a fresh element; throws on duplicate id.
  int add_element(const std::string& id);
  int element(const std::string& id) const;  // throws if unknown
  void add_tuple(const std::string& rel, const std::vector<std::string>& ids);

  bool has_relation(const std::string& name) const {
    return relations.count(name) || intrinsics.count(name);
  }
  int relation_arity(const std::string& name) const;
  bool holds(const std::string& rel, const std::vector<int>& tuple) const;

  /// Structure with the same universe whose id->index map is permuted by
  /// `perm` (perm[i] = new index of old element i); used by isomorphism
  /// invariance tests.
  FiniteStructure permuted(const std::vector<int>& perm) const;
};

}  // namespace affine::fo
