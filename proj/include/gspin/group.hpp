#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/report.hpp"

namespace gspin {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite group as a validated Cayley table.  Elements are dense indices
// 0..n-1; names are display-only.
struct FiniteGroup {
  int n = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[i][j] = index of i·j
  std::vector<int> inv;
  int unit = 0;

  int mul(int i, int j) const { return table[i][j]; }
  int inverse(int i) const { return inv[i]; }
  // h g h^-1
  int conjugate(int h, int g) const { return mul(mul(h, g), inv[h]); }
  int index_of(const std::string& name) const;  // -1 when absent
  int order_of(int g) const;
};

struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, File, Explicit };
  Kind kind = Kind::Cyclic;
  int n = 1;
  std::string path;  // Kind::File
  // Kind::Explicit
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;

  // "cyclic:4", "dihedral:3", "symmetric:3", "file:groups/q8.txt"
  static GroupSpec parse(const std::string& text);
  std::string describe() const;
};

// Builds and validates; throws GroupError("bad-spec: ...") or
// GroupError("invalid-table: ...").
FiniteGroup build_group(const GroupSpec& spec);

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup group_from_table(std::vector<std::string> names,
                             std::vector<std::vector<int>> table);
// Fills unit/inverses best-effort and skips validation; for feeding
// deliberately broken tables to validate_group.
FiniteGroup group_from_table_unchecked(std::vector<std::string> names,
                                       std::vector<std::vector<int>> table);

// Axiom-by-axiom report with the first counterexample on failure.
ValidationReport validate_group(const FiniteGroup& g);

// Text format: line 1 = n; line 2 = names; then n rows of n indices.
FiniteGroup read_group(std::istream& in);
void write_group(std::ostream& out, const FiniteGroup& g);
FiniteGroup read_group_file(const std::string& path);

}  // namespace gspin
