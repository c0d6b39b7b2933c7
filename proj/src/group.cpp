#include "srcfg/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "srcfg/errors.hpp"

namespace srcfg {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Group::Group(std::uint32_t order, std::vector<GroupElement> table, std::vector<std::string> names,
             bool check_associativity)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  const std::uint32_t n = order_;
  if (n == 0) throw InvalidCayleyTable("empty group");
  if (table_.size() != static_cast<std::size_t>(n) * n) throw InvalidCayleyTable("table is not n x n");
  for (auto x : table_)
    if (x >= n) throw InvalidCayleyTable("entry out of range");

  std::vector<char> seen(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (seen[mul(a, b)]) throw InvalidCayleyTable("row " + std::to_string(a) + " is not a permutation");
      seen[mul(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (seen[mul(b, a)]) throw InvalidCayleyTable("column " + std::to_string(a) + " is not a permutation");
      seen[mul(b, a)] = 1;
    }
  }

  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidCayleyTable("no identity element");

  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t b = 0;
    while (mul(a, b) != identity_) ++b;  // Latin row guarantees a hit
    if (mul(b, a) != identity_) throw InvalidCayleyTable("left and right inverses differ");
    inverse_[a] = b;
  }

  if (check_associativity) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const GroupElement ab = mul(a, b);
        for (std::uint32_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw InvalidCayleyTable("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
      }
  }

  if (names_.empty()) {
    names_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) names_[a] = std::to_string(a);
  }
  if (names_.size() != n) throw InvalidCayleyTable("label count differs from order");
}

std::optional<GroupElement> Group::find(std::string_view name) const {
  const std::string key = strip_spaces(name);
  for (std::uint32_t a = 0; a < order_; ++a)
    if (strip_spaces(names_[a]) == key) return a;
  return std::nullopt;
}

bool Group::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupSpec GroupSpec::cyclic(std::uint32_t n) { return GroupSpec{Kind::Cyclic, n, {}, nullptr, nullptr}; }
GroupSpec GroupSpec::symmetric(std::uint32_t n) { return GroupSpec{Kind::Symmetric, n, {}, nullptr, nullptr}; }
GroupSpec GroupSpec::quaternion8() { return GroupSpec{Kind::Quaternion8, 8, {}, nullptr, nullptr}; }
GroupSpec GroupSpec::frobenius_31_5() { return GroupSpec{Kind::Frobenius31_5, 155, {}, nullptr, nullptr}; }
GroupSpec GroupSpec::direct_product(GroupSpec a, GroupSpec b) {
  return GroupSpec{Kind::DirectProduct, 0, {}, std::make_shared<GroupSpec>(std::move(a)),
                   std::make_shared<GroupSpec>(std::move(b))};
}
GroupSpec GroupSpec::cayley_file(std::string path) {
  return GroupSpec{Kind::CayleyFile, 0, std::move(path), nullptr, nullptr};
}

namespace {

struct SpecParser {
  std::string_view s;
  std::size_t pos = 0;

  bool eat(std::string_view token) {
    if (s.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  std::uint32_t number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InvalidSpec("expected a number in group spec '" + std::string(s) + "'");
    return static_cast<std::uint32_t>(std::stoul(std::string(s.substr(start, pos - start))));
  }

  GroupSpec parse() {
    if (eat("product(") || eat("direct_product(")) {
      GroupSpec a = parse();
      if (!eat(",")) throw InvalidSpec("expected ',' in product group spec");
      GroupSpec b = parse();
      if (!eat(")")) throw InvalidSpec("expected ')' in product group spec");
      return GroupSpec::direct_product(std::move(a), std::move(b));
    }
    if (eat("cyclic:") || eat("Z")) return GroupSpec::cyclic(number());
    if (eat("symmetric:") || eat("S")) return GroupSpec::symmetric(number());
    if (eat("quaternion8") || eat("Q8")) return GroupSpec::quaternion8();
    if (eat("frobenius31_5") || eat("frobenius_31_5")) return GroupSpec::frobenius_31_5();
    if (eat("cayley:")) {
      std::string path(s.substr(pos));
      pos = s.size();
      return GroupSpec::cayley_file(path);
    }
    throw InvalidSpec("unrecognised group spec '" + std::string(s.substr(pos)) + "'");
  }
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.rfind("cayley:", 0) == 0) return GroupSpec::cayley_file(std::string(text.substr(text.find(':') + 1)));
  SpecParser p{compact};
  GroupSpec spec = p.parse();
  if (p.pos != compact.size()) throw InvalidSpec("trailing characters in group spec '" + compact + "'");
  return spec;
}

Group make_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return cyclic_group(spec.n);
    case GroupSpec::Kind::Symmetric:
      return symmetric_group(spec.n);
    case GroupSpec::Kind::Quaternion8:
      return quaternion_group();
    case GroupSpec::Kind::Frobenius31_5:
      return frobenius_31_5();
    case GroupSpec::Kind::DirectProduct:
      return direct_product(make_group(*spec.left), make_group(*spec.right));
    case GroupSpec::Kind::CayleyFile:
      return read_cayley_file(spec.path);
  }
  throw InvalidSpec("unknown group kind");
}

Group cyclic_group(std::uint32_t n) {
  if (n == 0) throw InvalidSpec("cyclic group of order 0");
  std::vector<GroupElement> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return Group(n, std::move(t), {}, n <= 200);
}

namespace {

using Perm = std::vector<std::uint32_t>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += "(";
    std::uint32_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ",";
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

// Builds a group from explicit permutations; product ab = "apply a, then b".
Group permutation_group(const std::vector<Perm>& elements, std::vector<std::string> names) {
  const auto n = static_cast<std::uint32_t>(elements.size());
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n; ++i) index.emplace(elements[i], i);
  std::vector<GroupElement> t(static_cast<std::size_t>(n) * n);
  Perm prod(elements.empty() ? 0 : elements[0].size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = elements[b][elements[a][x]];
      auto it = index.find(prod);
      if (it == index.end()) throw InvalidCayleyTable("permutation set is not closed");
      t[a * n + b] = it->second;
    }
  return Group(n, std::move(t), std::move(names), n <= 200);
}

}  // namespace

Group symmetric_group(std::uint32_t n) {
  if (n == 0 || n > 6) throw InvalidSpec("symmetric group degree must be in 1..6");
  std::vector<Perm> elems;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(cycle_notation(e));
  return permutation_group(elems, std::move(names));
}

Group quaternion_group() {
  // index = 2*unit + (negative ? 1 : 0), units 1,i,j,k
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<GroupElement> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int sign = (a % 2) ^ (b % 2) ^ unit_sign[ua][ub];
      t[a * 8 + b] = static_cast<GroupElement>(2 * unit_prod[ua][ub] + sign);
    }
  return Group(8, std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

Group frobenius_31_5() {
  std::vector<Perm> elems;
  std::vector<std::string> names;
  std::uint32_t pow2[5] = {1, 2, 4, 8, 16};
  for (std::uint32_t a = 0; a < 31; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) {
      Perm p(31);
      for (std::uint32_t x = 0; x < 31; ++x) p[x] = (pow2[b] * ((x + a) % 31)) % 31;
      elems.push_back(p);
      std::string name;
      if (a > 0) name += a == 1 ? "f" : "f^" + std::to_string(a);
      if (b > 0) name += b == 1 ? "g" : "g^" + std::to_string(b);
      names.push_back(name.empty() ? "id" : name);
    }
  return permutation_group(elems, std::move(names));
}

Group direct_product(const Group& a, const Group& b) {
  const std::uint32_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<GroupElement> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      t[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < n; ++x) names[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
  // Both factors were validated; associativity is inherited.
  return Group(n, std::move(t), std::move(names), false);
}

Group parse_cayley_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::uint32_t n = 0;
  std::vector<GroupElement> t;
  std::vector<std::string> names;
  bool have_n = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (!have_n) continue;
      std::istringstream ls(line.substr(first + 1));
      std::uint32_t idx;
      std::string name;
      if (ls >> idx >> name) {
        if (names.empty()) names.resize(n);
        if (idx >= n) throw InvalidCayleyTable("label index out of range");
        names[idx] = name;
      }
      continue;
    }
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> n) || n == 0) throw InvalidCayleyTable("first line must hold the group order");
      have_n = true;
      continue;
    }
    long long x;
    while (ls >> x) {
      if (x < 0) throw InvalidCayleyTable("negative entry");
      t.push_back(static_cast<GroupElement>(x));
    }
    if (!ls.eof()) throw InvalidCayleyTable("non-numeric entry in table");
  }
  if (!have_n) throw InvalidCayleyTable("empty Cayley table");
  for (std::uint32_t i = 0; i < names.size(); ++i)
    if (names[i].empty()) names[i] = std::to_string(i);
  return Group(n, std::move(t), std::move(names), true);
}

Group read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cayley_table(buf.str());
}

std::string format_cayley_table(const Group& g) {
  std::ostringstream out;
  const std::uint32_t n = g.order();
  out << n << '\n';
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  for (std::uint32_t a = 0; a < n; ++a) out << "# " << a << ' ' << g.name(a) << '\n';
  return out.str();
}

std::vector<std::uint32_t> parse_permutation(std::string_view text, std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  const std::string s = strip_spaces(text);
  if (s == "id" || s == "()") return p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("bad cycle notation '" + s + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced cycle notation '" + s + "'");
    std::vector<std::uint32_t> cycle;
    std::istringstream items(s.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto x = static_cast<std::uint32_t>(std::stoul(item));
      if (x == 0 || x > n) throw ParseError("point out of range in '" + s + "'");
      cycle.push_back(x - 1);
    }
    // Disjoint cycles compose in any order.
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return p;
}

}  // namespace srcfg
