#ifndef NUCLEI_TREES_HPP_
#define NUCLEI_TREES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuclei/nuclei.hpp"

namespace nuclei {

/// Rooted nuclei grouped by (t, f). `count` is rho(t, f); it may exceed the
/// number of explicit examples. Examples are stored in rooted canonical
/// form (root (1, 2, 3)) and are addressed in tree codes by their position
/// in the concatenation of all example lists.
struct CatalogEntry {
  int t = 0;
  int f = 0;
  long count = 0;
  std::vector<Triangulation> examples;
};

class NucleusCatalog {
 public:
  NucleusCatalog() = default;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::optional<long> k1() const { return k1_; }
  void set_k1(std::optional<long> k1) { k1_ = k1; }

  /// All examples, in address order.
  std::vector<Triangulation> nuclei() const;
  const Triangulation& nucleus(int index) const;
  std::size_t size() const;

  /// Address of the rooted nucleus, or -1.
  int find(const Triangulation& rooted) const;
  /// Adds a rooted nucleus (canonicalized) if missing; returns its address.
  /// Addresses of existing examples never change.
  int add(const Triangulation& rooted);
  /// Sets rho(t, f) without adding examples.
  void set_count(int t, int f, long count);

  std::map<std::pair<int, int>, long> counts() const;

 private:
  CatalogEntry& entry(int t, int f);
  std::vector<CatalogEntry> entries_;
  std::optional<long> k1_;
};

/// The catalog holding only the tetrahedron: rho(1, 4) = 1.
NucleusCatalog tetrahedron_catalog();

/// JSON: {"K1": optional integer, "entries": [{"t", "f", "count",
/// "examples": [".tet text", ...]}]}.
NucleusCatalog parse_catalog(std::string_view json_text);
std::string format_catalog(const NucleusCatalog& catalog);
NucleusCatalog read_catalog_file(const std::string& path);

/// Ordered planar tree whose vertices carry nucleus addresses. Every
/// non-root vertex also carries the index of the parent face it is glued
/// to, counted among the parent's external faces other than its root, in
/// ascending order of their canonical node ids.
///
/// Text form: `a(b.i,c.j(...))`, e.g. `0(0.0,0.2(0.1))`.
struct TreeCode {
  int nucleus = 0;
  int face = -1;
  std::vector<TreeCode> children;

  bool operator==(const TreeCode&) const = default;
};

TreeCode parse_tree_code(std::string_view text);
std::string format_tree_code(const TreeCode& code);
int tree_vertices(const TreeCode& code);

/// Glues the nuclei of `code`: a child's root (1, 2, 3) goes onto the
/// chosen parent face with its nodes taken in ascending canonical order.
/// The result is canonically labeled. Throws kOutOfRange for a bad nucleus
/// address or face index and kFaceMultiplicity when two children share a
/// face.
Triangulation glue_tree(const NucleusCatalog& catalog, const TreeCode& code);

/// Inverse of glue_tree on the output of split_into_nuclei. Nuclei missing
/// from `catalog` are added to it. Children are listed by face index.
TreeCode encode_tree(const NucleusSplit& split, NucleusCatalog& catalog);

/// Ternary-tree count C(3v, v) / (2v + 1) from the slot recurrence.
std::uint64_t count_trees_by_recurrence(int v);

/// Number of distinct rooted trees of v tetrahedra, found by gluing a
/// tetrahedron onto every non-root external face and removing duplicates by
/// rooted canonical form.
std::uint64_t count_trees_by_gluing(int v);

struct TreeCount {
  int v = 0;
  std::uint64_t recurrence = 0;
  std::uint64_t gluing = 0;
  bool agree() const { return recurrence == gluing; }
};

/// Both counts. Throws kOutOfRange unless 1 <= v <= 8.
TreeCount count_trees_of_tetrahedra(int v);

}  // namespace nuclei

#endif  // NUCLEI_TREES_HPP_
