#include "bisetcalc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace bisetcalc {

namespace {

std::vector<int> cycle_perm(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      img[from] = to;
    }
  }
  return img;
}

GroupPtr cyclic_group(int n, const std::string& label) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup::from_table(table, label);
}

GroupPtr symmetric_group(int n, const std::string& label) {
  if (n < 1 || n > 5) throw std::invalid_argument("S<n> supported for n <= 5");
  if (n == 1) return cyclic_group(1, label);
  std::vector<std::vector<std::vector<int>>> cycles;
  cycles.push_back({{1, 2}});
  if (n > 2) {
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    cycles.push_back({full});
  }
  std::vector<std::vector<int>> gens;
  for (const auto& c : cycles) gens.push_back(cycle_perm(n, c));
  return group_from_generators(n, gens, label);
}

GroupPtr alternating_group(int n, const std::string& label) {
  if (n < 1 || n > 5) throw std::invalid_argument("A<n> supported for n <= 5");
  if (n <= 2) return cyclic_group(1, label);
  if (n == 3) return group_from_generators(3, {cycle_perm(3, {{1, 2, 3}})}, label);
  std::vector<std::vector<int>> gens;
  gens.push_back(cycle_perm(n, {{1, 2, 3}}));
  if (n == 4)
    gens.push_back(cycle_perm(4, {{1, 2}, {3, 4}}));
  else
    gens.push_back(cycle_perm(5, {{1, 2, 3, 4, 5}}));
  return group_from_generators(n, gens, label);
}

GroupPtr dihedral_group(int order, const std::string& label) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("D<2n> requires an even order >= 4");
  const int n = order / 2;
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return group_from_generators(n, {rot, refl}, label);
}

GroupPtr quaternion_group(const std::string& label) {
  // elements 1,-1,i,-i,j,-j,k,-k; left multiplication by i and j
  std::vector<int> mi = {2, 3, 1, 0, 6, 7, 5, 4};
  std::vector<int> mj = {4, 5, 7, 6, 1, 0, 2, 3};
  return group_from_generators(8, {mi, mj}, label);
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  try {
    out = std::stoi(s);
  } catch (...) {
    return false;
  }
  return true;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GroupPtr elementary_abelian_rank2(int p) {
  if (!is_prime(p)) throw std::invalid_argument("E<p>^2 requires a prime p");
  const int n = p * p;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int i = (a / p + b / p) % p;
      int j = (a % p + b % p) % p;
      table[a][b] = i * p + j;
    }
  return FiniteGroup::from_table(table, "E" + std::to_string(p) + "^2");
}

bool is_catalog_name(const std::string& name) {
  try {
    catalog_group(name);
    return true;
  } catch (...) {
    return false;
  }
}

GroupPtr catalog_group(const std::string& name) {
  int n = 0;
  if (name.size() >= 2 && name[0] == 'C' && parse_int(name.substr(1), n))
    return cyclic_group(n, name);
  if (name.size() >= 2 && name[0] == 'S' && parse_int(name.substr(1), n))
    return symmetric_group(n, name);
  if (name.size() >= 2 && name[0] == 'A' && parse_int(name.substr(1), n))
    return alternating_group(n, name);
  if (name.size() >= 2 && name[0] == 'D' && parse_int(name.substr(1), n))
    return dihedral_group(n, name);
  if (name == "Q8") return quaternion_group(name);
  if (name.size() >= 4 && name[0] == 'E' &&
      name.substr(name.size() - 2) == "^2" &&
      parse_int(name.substr(1, name.size() - 3), n)) {
    if (n != 2 && n != 3 && n != 5 && n != 7)
      throw std::invalid_argument("E<p>^2 catalog entries: p in {2,3,5,7}");
    return elementary_abelian_rank2(n);
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

GroupPtr group_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw std::invalid_argument("group file needs \"degree\" and \"generators\"");
  const int degree = doc.at("degree").get<int>();
  std::string name = doc.value("name", std::string{});
  std::vector<std::vector<int>> gens;
  for (const auto& gen : doc.at("generators")) {
    std::vector<std::vector<int>> cycles;
    for (const auto& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
    gens.push_back(cycle_perm(degree, cycles));
  }
  return group_from_generators(degree, gens, name);
}

GroupPtr parse_group_spec(const std::string& arg) {
  if (is_catalog_name(arg)) return catalog_group(arg);
  if (std::filesystem::exists(arg)) return group_from_json_file(arg);
  throw std::invalid_argument("unknown group spec: " + arg);
}

namespace {

// Invariant factors of an abelian group: a maximal-order cyclic subgroup is
// always a direct summand, so recurse on the quotient.
std::vector<int> abelian_invariant_factors(GroupPtr g) {
  std::vector<int> factors;
  while (g->order() > 1) {
    int best = 0;
    for (int x = 0; x < g->order(); ++x)
      if (g->element_order(x) > g->element_order(best)) best = x;
    factors.push_back(g->element_order(best));
    auto [q, proj] = quotient(g, subgroup_closure(g, {best}));
    g = q;
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

std::string describe_group(const GroupPtr& g) {
  const int n = g->order();
  if (n == 1) return "1";
  if (g->is_cyclic()) return "C" + std::to_string(n);
  if (g->is_abelian()) {
    auto f = abelian_invariant_factors(g);
    bool elementary = true;
    for (int v : f) elementary = elementary && v == f[0];
    if (elementary && f.size() == 2 && is_prime(f[0]))
      return "E" + std::to_string(f[0]) + "^2";
    std::string s;
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) s += "x";
      s += "C" + std::to_string(f[i]);
    }
    return s;
  }
  // match against small named groups of this order
  std::vector<std::string> candidates;
  switch (n) {
    case 6: candidates = {"S3"}; break;
    case 8: candidates = {"D8", "Q8"}; break;
    case 10: candidates = {"D10"}; break;
    case 12: candidates = {"A4", "D12"}; break;
    case 14: candidates = {"D14"}; break;
    case 16: candidates = {"D16"}; break;
    case 20: candidates = {"D20"}; break;
    case 24: candidates = {"S4", "D24"}; break;
    case 60: candidates = {"A5"}; break;
    case 120: candidates = {"S5"}; break;
    default: break;
  }
  for (const auto& name : candidates) {
    GroupPtr c = catalog_group(name);
    if (!isomorphisms(c, g).empty()) return name;
  }
  return "G" + std::to_string(n);
}

}  // namespace bisetcalc
