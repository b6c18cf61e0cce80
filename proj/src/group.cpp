#include "gspin/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gspin {

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < n; ++i)
    if (names[i] == name) return i;
  return -1;
}

int FiniteGroup::order_of(int g) const {
  int k = 1;
  int x = g;
  while (x != unit) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  GroupSpec s;
  if (head == "cyclic" || head == "dihedral" || head == "symmetric") {
    if (tail.empty()) throw GroupError("bad-spec: missing size in '" + text + "'");
    try {
      s.n = std::stoi(tail);
    } catch (const std::exception&) {
      throw GroupError("bad-spec: bad size in '" + text + "'");
    }
    s.kind = head == "cyclic" ? Kind::Cyclic
             : head == "dihedral" ? Kind::Dihedral
                                  : Kind::Symmetric;
    return s;
  }
  if (head == "file") {
    if (tail.empty()) throw GroupError("bad-spec: missing path in '" + text + "'");
    s.kind = Kind::File;
    s.path = tail;
    return s;
  }
  throw GroupError("bad-spec: unknown preset '" + head + "'");
}

std::string GroupSpec::describe() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic:" + std::to_string(n);
    case Kind::Dihedral: return "dihedral:" + std::to_string(n);
    case Kind::Symmetric: return "symmetric:" + std::to_string(n);
    case Kind::File: return "file:" + path;
    case Kind::Explicit: return "explicit[" + std::to_string(names.size()) + "]";
  }
  return "?";
}

namespace {

void require_valid(const FiniteGroup& g) {
  ValidationReport r = validate_group(g);
  if (!r.all_pass()) throw GroupError("invalid-table: " + r.first_failure());
}

FiniteGroup fill_unit_and_inverses(FiniteGroup g) {
  // Locate the unit (row equal to the identity permutation) and inverses.
  g.unit = -1;
  for (int i = 0; i < g.n; ++i) {
    bool id = true;
    for (int j = 0; j < g.n; ++j)
      if (g.table[i][j] != j) {
        id = false;
        break;
      }
    if (id) {
      g.unit = i;
      break;
    }
  }
  g.inv.assign(g.n, -1);
  if (g.unit >= 0)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (g.table[i][j] == g.unit && g.table[j][i] == g.unit) g.inv[i] = j;
  return g;
}

FiniteGroup finish(FiniteGroup g) {
  g = fill_unit_and_inverses(std::move(g));
  require_valid(g);
  return g;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw GroupError("bad-spec: cyclic size must be >= 1");
  FiniteGroup g;
  g.n = n;
  g.names.resize(n);
  g.names[0] = "u";
  // Powers of the generator: u, a, a2, ...
  for (int k = 1; k < n; ++k)
    g.names[k] = k == 1 ? "a" : "a" + std::to_string(k);
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return finish(std::move(g));
}

FiniteGroup dihedral_group(int n) {
  if (n < 2) throw GroupError("bad-spec: dihedral size must be >= 2");
  // Elements s^f r^k with f in {0,1}, k in 0..n-1; index = f*n + k.
  int order = 2 * n;
  FiniteGroup g;
  g.n = order;
  g.names.resize(order);
  for (int k = 0; k < n; ++k) {
    g.names[k] = k == 0 ? "u" : (k == 1 ? "r" : "r" + std::to_string(k));
    g.names[n + k] = k == 0 ? "s" : (k == 1 ? "sr" : "sr" + std::to_string(k));
  }
  auto idx = [n](int f, int k) { return f * n + ((k % n) + n) % n; };
  g.table.assign(order, std::vector<int>(order));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int k2 = 0; k2 < n; ++k2) {
          // s^f1 r^k1 · s^f2 r^k2 = s^(f1+f2) r^((-1)^f2 k1 + k2)
          int f = (f1 + f2) % 2;
          int k = (f2 == 0 ? k1 : -k1) + k2;
          g.table[idx(f1, k1)][idx(f2, k2)] = idx(f, k);
        }
  return finish(std::move(g));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw GroupError("bad-spec: symmetric size must be >= 1");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // next_permutation from the identity enumerates in lexicographic order.
  int order = static_cast<int>(perms.size());
  FiniteGroup g;
  g.n = order;
  g.names.resize(order);
  for (int i = 0; i < order; ++i) {
    std::string nm;
    for (int v : perms[i]) nm += std::to_string(v);
    g.names[i] = nm;
  }
  auto find_perm = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return static_cast<int>(it - perms.begin());
  };
  g.table.assign(order, std::vector<int>(order));
  std::vector<int> comp(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      // (p·q)(x) = p(q(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i][j] = find_perm(comp);
    }
  return finish(std::move(g));
}

FiniteGroup group_from_table(std::vector<std::string> names,
                             std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.n = static_cast<int>(names.size());
  if (g.n == 0) throw GroupError("bad-spec: empty group");
  g.names = std::move(names);
  g.table = std::move(table);
  if (static_cast<int>(g.table.size()) != g.n)
    throw GroupError("invalid-table: wrong row count");
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != g.n)
      throw GroupError("invalid-table: wrong column count");
    for (int v : row)
      if (v < 0 || v >= g.n) throw GroupError("invalid-table: entry out of range");
  }
  return finish(std::move(g));
}

FiniteGroup group_from_table_unchecked(std::vector<std::string> names,
                                       std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.n = static_cast<int>(names.size());
  g.names = std::move(names);
  g.table = std::move(table);
  return fill_unit_and_inverses(std::move(g));
}

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic_group(spec.n);
    case GroupSpec::Kind::Dihedral: return dihedral_group(spec.n);
    case GroupSpec::Kind::Symmetric: return symmetric_group(spec.n);
    case GroupSpec::Kind::File: return read_group_file(spec.path);
    case GroupSpec::Kind::Explicit:
      return group_from_table(spec.names, spec.table);
  }
  throw GroupError("bad-spec: unknown kind");
}

ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport rep;
  bool in_range = true;
  for (const auto& row : g.table)
    for (int v : row)
      if (v < 0 || v >= g.n) in_range = false;
  // Closure: every row and column is a permutation of 0..n-1.
  {
    bool ok = in_range;
    std::string wit = ok ? "" : "table entry out of range";
    for (int i = 0; i < g.n && ok; ++i) {
      std::vector<bool> seen_row(g.n, false), seen_col(g.n, false);
      for (int j = 0; j < g.n; ++j) {
        int r = g.table[i][j], c = g.table[j][i];
        if (seen_row[r]) {
          ok = false;
          wit = "row " + std::to_string(i) + " is not a permutation";
          break;
        }
        if (seen_col[c]) {
          ok = false;
          wit = "column " + std::to_string(i) + " is not a permutation";
          break;
        }
        seen_row[r] = true;
        seen_col[c] = true;
      }
    }
    rep.add("closure", ok, wit);
  }
  // Unit.
  {
    bool ok = g.unit >= 0 && g.unit < g.n;
    std::string wit = ok ? "" : "unit index out of range";
    for (int j = 0; ok && j < g.n; ++j) {
      if (g.table[g.unit][j] != j || g.table[j][g.unit] != j) {
        ok = false;
        wit = "unit fails at " + g.names[j];
      }
    }
    rep.add("unit", ok, wit);
  }
  // Inverses.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < g.n; ++i) {
      int v = g.inv[i];
      if (v < 0 || v >= g.n || g.table[i][v] != g.unit || g.table[v][i] != g.unit) {
        ok = false;
        wit = "inverse fails for " + g.names[i];
        break;
      }
    }
    rep.add("inverses", ok, wit);
  }
  // Associativity, first counterexample triple.
  {
    bool ok = in_range;
    std::string wit = ok ? "" : "table entry out of range";
    for (int i = 0; i < g.n && ok; ++i)
      for (int j = 0; j < g.n && ok; ++j)
        for (int k = 0; k < g.n; ++k) {
          if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]]) {
            ok = false;
            wit = "(" + g.names[i] + "," + g.names[j] + "," + g.names[k] + ")";
            break;
          }
        }
    rep.add("associativity", ok, wit);
  }
  return rep;
}

FiniteGroup read_group(std::istream& in) {
  int n;
  if (!(in >> n) || n <= 0) throw GroupError("bad-spec: bad group size");
  std::vector<std::string> names(n);
  for (auto& s : names)
    if (!(in >> s)) throw GroupError("bad-spec: missing names");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j])) throw GroupError("bad-spec: short table");
  return group_from_table(std::move(names), std::move(table));
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << g.n << "\n";
  for (int i = 0; i < g.n; ++i) out << g.names[i] << (i + 1 == g.n ? "\n" : " ");
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      out << g.table[i][j] << (j + 1 == g.n ? "\n" : " ");
}

FiniteGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("bad-spec: cannot open " + path);
  return read_group(in);
}

}  // namespace gspin
