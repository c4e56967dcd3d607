#include "mrr/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "mrr/errors.hpp"

namespace mrr {

namespace {

std::string triple(Index a, Index b, Index c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_multiplication_table(std::vector<std::vector<Index>> table,
                                                   std::vector<std::string> names,
                                                   std::string label) {
  const std::size_t r = table.size();
  if (r == 0) throw ValidationError("multiplication table is empty");
  if (names.size() != r) {
    throw ValidationError("expected " + std::to_string(r) + " element names, got " +
                          std::to_string(names.size()));
  }

  FiniteGroup g;
  g.order_ = r;
  g.table_.reserve(r * r);
  for (std::size_t a = 0; a < r; ++a) {
    if (table[a].size() != r) {
      throw ValidationError("table row " + std::to_string(a) + " has length " +
                            std::to_string(table[a].size()) + ", expected " +
                            std::to_string(r));
    }
    for (Index x : table[a]) {
      if (x >= r) {
        throw ValidationError("table entry " + std::to_string(x) + " in row " +
                              std::to_string(a) + " is out of range");
      }
      g.table_.push_back(x);
    }
  }

  // Two-sided identity.
  bool found = false;
  for (Index e = 0; e < r && !found; ++e) {
    bool ok = true;
    for (Index x = 0; x < r && ok; ++x) ok = g.mult(e, x) == x && g.mult(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("table has no two-sided identity");

  g.inverses_.assign(r, 0);
  for (Index x = 0; x < r; ++x) {
    bool has_inverse = false;
    for (Index y = 0; y < r && !has_inverse; ++y) {
      if (g.mult(x, y) == g.identity_ && g.mult(y, x) == g.identity_) {
        g.inverses_[x] = y;
        has_inverse = true;
      }
    }
    if (!has_inverse) {
      throw ValidationError("element " + std::to_string(x) + " has no two-sided inverse");
    }
  }

  if (r <= kAssociativityCheckLimit) {
    for (Index a = 0; a < r; ++a) {
      for (Index b = 0; b < r; ++b) {
        const Index ab = g.mult(a, b);
        for (Index c = 0; c < r; ++c) {
          if (g.mult(ab, c) != g.mult(a, g.mult(b, c))) {
            throw ValidationError("table is not associative at " + triple(a, b, c));
          }
        }
      }
    }
  } else {
    g.associativity_checked_ = false;
  }

  g.names_ = std::move(names);
  g.label_ = std::move(label);
  return g;
}

std::uint64_t FiniteGroup::element_order(Index a) const {
  std::uint64_t n = 1;
  for (Index x = a; x != identity_; x = mult(x, a)) ++n;
  return n;
}

InverseClassPartition inverse_class_partition(const FiniteGroup& group) {
  InverseClassPartition out;
  for (Index x = 0; x < group.order(); ++x) {
    if (x == group.identity()) continue;
    const Index y = group.inv(x);
    if (x == y) {
      out.involutions.push_back(x);
    } else if (x < y) {
      out.pairs.emplace_back(x, y);
    }
  }
  return out;
}

bool generates(const FiniteGroup& group, std::span<const Index> elements) {
  for (Index s : elements) {
    if (s >= group.order()) throw InvalidInput("element index out of range");
    if (s == group.identity()) throw InvalidInput("generating set contains the identity");
  }
  std::vector<bool> reached(group.order(), false);
  std::vector<Index> frontier{group.identity()};
  reached[group.identity()] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const Index x = frontier.back();
    frontier.pop_back();
    for (Index s : elements) {
      const Index y = group.mult(x, s);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count == group.order();
}

Permutation right_regular_action(const FiniteGroup& group, Index g) {
  std::vector<Index> images(group.order());
  for (Index x = 0; x < group.order(); ++x) images[x] = group.mult(x, g);
  return Permutation(std::move(images));
}

bool is_exceptional(const FiniteGroup& group) {
  if (group.order() == 3) return true;
  if (group.order() != 4) return false;
  for (Index x = 0; x < 4; ++x) {
    if (x != group.identity() && group.inv(x) != x) return false;
  }
  return true;
}

// --- builtin catalog -------------------------------------------------------

namespace {

using Table = std::vector<std::vector<Index>>;

constexpr std::size_t kMaxBuiltinOrder = 256;

FiniteGroup make(Table table, std::vector<std::string> names, const BuiltinSpec& spec) {
  return FiniteGroup::from_multiplication_table(std::move(table), std::move(names),
                                                to_string(spec));
}

struct RawGroup {
  Table table;
  std::vector<std::string> names;
};

RawGroup raw_cyclic(unsigned n) {
  RawGroup g;
  g.table.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    g.names.push_back(std::to_string(a));
    for (Index b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

// Index i < n is the rotation r^i, index n + i the reflection s r^i.
RawGroup raw_dihedral(unsigned n) {
  RawGroup g;
  const Index order = 2 * n;
  g.table.assign(order, std::vector<Index>(order));
  for (Index i = 0; i < n; ++i) g.names.push_back("r" + std::to_string(i));
  for (Index i = 0; i < n; ++i) g.names.push_back("s" + std::to_string(i));
  for (Index x = 0; x < order; ++x) {
    for (Index y = 0; y < order; ++y) {
      const bool xs = x >= n, ys = y >= n;
      const Index a = x % n, b = y % n;
      Index z;
      if (!xs && !ys) z = (a + b) % n;
      else if (!xs && ys) z = n + (b + n - a) % n;
      else if (xs && !ys) z = n + (a + b) % n;
      else z = (b + n - a) % n;
      g.table[x][y] = z;
    }
  }
  return g;
}

RawGroup raw_elem2(unsigned k) {
  RawGroup g;
  const Index order = Index{1} << k;
  g.table.assign(order, std::vector<Index>(order));
  for (Index a = 0; a < order; ++a) {
    std::string name(k, '0');
    for (unsigned bit = 0; bit < k; ++bit) {
      if (a >> bit & 1) name[k - 1 - bit] = '1';
    }
    g.names.push_back(name);
    for (Index b = 0; b < order; ++b) g.table[a][b] = a ^ b;
  }
  return g;
}

// Index 2u + s: unit u in {1, i, j, k}, sign s (1 = negative).
RawGroup raw_quaternion() {
  // unit_product[u][v] = {unit, negate}
  static constexpr std::pair<int, int> unit_product[4][4] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  static const char* unit_name[4] = {"1", "i", "j", "k"};
  RawGroup g;
  g.table.assign(8, std::vector<Index>(8));
  for (Index x = 0; x < 8; ++x) {
    g.names.push_back(std::string(x % 2 ? "-" : "") + unit_name[x / 2]);
    for (Index y = 0; y < 8; ++y) {
      const auto [unit, negate] = unit_product[x / 2][y / 2];
      const int sign = static_cast<int>(x % 2) ^ static_cast<int>(y % 2) ^ negate;
      g.table[x][y] = static_cast<Index>(2 * unit + sign);
    }
  }
  return g;
}

// Elements are permutations of {0..n-1} in lexicographic order of their
// image tables; the product applies the left factor first.
RawGroup raw_symmetric(unsigned n) {
  std::vector<std::vector<Index>> elements;
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<Index>, Index> index_of;
  for (Index i = 0; i < elements.size(); ++i) index_of[elements[i]] = i;

  RawGroup g;
  const std::size_t order = elements.size();
  g.table.assign(order, std::vector<Index>(order));
  for (Index a = 0; a < order; ++a) {
    std::string name = "[";
    for (unsigned i = 0; i < n; ++i) {
      if (i) name += ' ';
      name += std::to_string(elements[a][i]);
    }
    g.names.push_back(name + "]");
    for (Index b = 0; b < order; ++b) {
      std::vector<Index> prod(n);
      for (unsigned i = 0; i < n; ++i) prod[i] = elements[b][elements[a][i]];
      g.table[a][b] = index_of.at(prod);
    }
  }
  return g;
}

RawGroup raw_builtin(const BuiltinSpec& spec);

RawGroup raw_product(const std::vector<BuiltinSpec>& factors) {
  RawGroup acc = raw_builtin(factors.front());
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const RawGroup next = raw_builtin(factors[f]);
    const std::size_t na = acc.table.size(), nb = next.table.size();
    RawGroup prod;
    prod.table.assign(na * nb, std::vector<Index>(na * nb));
    for (Index a1 = 0; a1 < na; ++a1) {
      for (Index b1 = 0; b1 < nb; ++b1) {
        const std::string& left = acc.names[a1];
        // Strip the parentheses of an already-composite name.
        const bool composite = f > 1;
        prod.names.push_back("(" + (composite ? left.substr(1, left.size() - 2) : left) +
                             "," + next.names[b1] + ")");
        for (Index a2 = 0; a2 < na; ++a2) {
          for (Index b2 = 0; b2 < nb; ++b2) {
            prod.table[a1 * nb + b1][a2 * nb + b2] =
                static_cast<Index>(acc.table[a1][a2] * nb + next.table[b1][b2]);
          }
        }
      }
    }
    acc = std::move(prod);
  }
  return acc;
}

std::size_t builtin_order(const BuiltinSpec& spec) {
  switch (spec.family) {
    case BuiltinSpec::Family::Cyclic: return spec.parameter;
    case BuiltinSpec::Family::Dihedral: return 2 * std::size_t{spec.parameter};
    case BuiltinSpec::Family::Elem2: return std::size_t{1} << spec.parameter;
    case BuiltinSpec::Family::Quaternion: return 8;
    case BuiltinSpec::Family::Symmetric: {
      std::size_t f = 1;
      for (unsigned i = 2; i <= spec.parameter; ++i) f *= i;
      return f;
    }
    case BuiltinSpec::Family::Product: {
      std::size_t n = 1;
      for (const auto& f : spec.factors) {
        n *= builtin_order(f);
        if (n > kMaxBuiltinOrder) return n;
      }
      return n;
    }
  }
  return 0;
}

RawGroup raw_builtin(const BuiltinSpec& spec) {
  switch (spec.family) {
    case BuiltinSpec::Family::Cyclic: return raw_cyclic(spec.parameter);
    case BuiltinSpec::Family::Dihedral: return raw_dihedral(spec.parameter);
    case BuiltinSpec::Family::Elem2: return raw_elem2(spec.parameter);
    case BuiltinSpec::Family::Quaternion: return raw_quaternion();
    case BuiltinSpec::Family::Symmetric: return raw_symmetric(spec.parameter);
    case BuiltinSpec::Family::Product: return raw_product(spec.factors);
  }
  throw SpecError("unknown builtin family");
}

unsigned parse_parameter(std::string_view text, std::string_view whole) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw SpecError("bad parameter '" + std::string(text) + "' in group spec '" +
                    std::string(whole) + "'");
  }
  return value;
}

BuiltinSpec parse_simple(std::string_view text, std::string_view whole) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SpecError("group spec '" + std::string(whole) + "' lacks a ':' parameter");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view param = text.substr(colon + 1);
  BuiltinSpec spec;
  if (family == "cyclic") {
    spec.family = BuiltinSpec::Family::Cyclic;
  } else if (family == "dihedral") {
    spec.family = BuiltinSpec::Family::Dihedral;
  } else if (family == "elem2") {
    spec.family = BuiltinSpec::Family::Elem2;
  } else if (family == "quaternion") {
    spec.family = BuiltinSpec::Family::Quaternion;
  } else if (family == "sym") {
    spec.family = BuiltinSpec::Family::Symmetric;
  } else if (family == "product") {
    throw SpecError("nested products are not supported in '" + std::string(whole) + "'");
  } else {
    throw SpecError("unknown group family '" + std::string(family) + "'");
  }
  spec.parameter = parse_parameter(param, whole);

  bool ok = true;
  switch (spec.family) {
    case BuiltinSpec::Family::Cyclic: ok = spec.parameter >= 1; break;
    case BuiltinSpec::Family::Dihedral: ok = spec.parameter >= 2; break;
    case BuiltinSpec::Family::Elem2: ok = spec.parameter >= 1 && spec.parameter <= 8; break;
    case BuiltinSpec::Family::Quaternion: ok = spec.parameter == 8; break;
    case BuiltinSpec::Family::Symmetric: ok = spec.parameter >= 1 && spec.parameter <= 5; break;
    case BuiltinSpec::Family::Product: break;
  }
  if (!ok || builtin_order(spec) > kMaxBuiltinOrder) {
    throw SpecError("parameter out of range in group spec '" + std::string(whole) + "'");
  }
  return spec;
}

}  // namespace

BuiltinSpec parse_builtin_spec(std::string_view text) {
  constexpr std::string_view kProduct = "product:";
  if (!text.starts_with(kProduct)) return parse_simple(text, text);

  BuiltinSpec spec;
  spec.family = BuiltinSpec::Family::Product;
  std::string_view rest = text.substr(kProduct.size());
  while (true) {
    const auto comma = rest.find(',');
    spec.factors.push_back(parse_simple(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.factors.size() < 2) {
    throw SpecError("a product needs at least two factors: '" + std::string(text) + "'");
  }
  if (builtin_order(spec) > kMaxBuiltinOrder) {
    throw SpecError("product order exceeds " + std::to_string(kMaxBuiltinOrder));
  }
  return spec;
}

std::string to_string(const BuiltinSpec& spec) {
  switch (spec.family) {
    case BuiltinSpec::Family::Cyclic: return "cyclic:" + std::to_string(spec.parameter);
    case BuiltinSpec::Family::Dihedral: return "dihedral:" + std::to_string(spec.parameter);
    case BuiltinSpec::Family::Elem2: return "elem2:" + std::to_string(spec.parameter);
    case BuiltinSpec::Family::Quaternion: return "quaternion:8";
    case BuiltinSpec::Family::Symmetric: return "sym:" + std::to_string(spec.parameter);
    case BuiltinSpec::Family::Product: {
      std::string out = "product:";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += ',';
        out += to_string(spec.factors[i]);
      }
      return out;
    }
  }
  return {};
}

FiniteGroup builtin(const BuiltinSpec& spec) {
  if (spec.family == BuiltinSpec::Family::Product &&
      (spec.factors.size() < 2 ||
       std::any_of(spec.factors.begin(), spec.factors.end(), [](const BuiltinSpec& f) {
         return f.family == BuiltinSpec::Family::Product;
       }))) {
    throw SpecError("a product needs at least two non-product factors");
  }
  // Round-trip through the parser so hand-built specs get the same range checks.
  const BuiltinSpec checked = parse_builtin_spec(to_string(spec));
  RawGroup raw = raw_builtin(checked);
  return make(std::move(raw.table), std::move(raw.names), checked);
}

FiniteGroup builtin(std::string_view text) { return builtin(parse_builtin_spec(text)); }

}  // namespace mrr
