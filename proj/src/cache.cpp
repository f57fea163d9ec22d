#include "bisetcalc/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "bisetcalc/character.hpp"

namespace bisetcalc {

namespace {
std::mutex g_cfg_mutex;
std::string g_dir;
bool g_enabled = true;

std::string hex_key(uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}
}  // namespace

std::string TableCache::directory() {
  std::lock_guard<std::mutex> lock(g_cfg_mutex);
  if (!g_dir.empty()) return g_dir;
  if (const char* env = std::getenv("BISETCALC_CACHE"); env && *env) return env;
  return ".bisetcalc-cache";
}

void TableCache::set_directory(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_cfg_mutex);
  g_dir = dir;
}

void TableCache::set_enabled(bool on) {
  std::lock_guard<std::mutex> lock(g_cfg_mutex);
  g_enabled = on;
}

bool TableCache::enabled() {
  std::lock_guard<std::mutex> lock(g_cfg_mutex);
  return g_enabled;
}

std::optional<CharacterTable> TableCache::load(const GroupPtr& g) {
  if (!enabled()) return std::nullopt;
  namespace fs = std::filesystem;
  fs::path file = fs::path(directory()) / (hex_key(g->table_hash()) + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (...) {
    return std::nullopt;
  }
  try {
    if (doc.at("order").get<int>() != g->order()) return std::nullopt;
    auto classes = conjugacy_classes(g);
    const auto& jc = doc.at("classes");
    if (static_cast<int>(jc.size()) != classes->num_classes()) return std::nullopt;
    for (int i = 0; i < classes->num_classes(); ++i) {
      if (jc[i].at("rep").get<int>() != classes->rep[i]) return std::nullopt;
      if (jc[i].at("size").get<int>() != classes->size[i]) return std::nullopt;
    }
    CharacterTable table;
    table.group = g;
    table.classes = classes;
    table.conductor = doc.at("conductor").get<int>();
    for (const auto& jchar : doc.at("characters")) {
      Character chi;
      chi.group = g;
      chi.classes = classes;
      for (const auto& jval : jchar) {
        std::vector<Rational> coeffs;
        for (const auto& s : jval) {
          Rational r(s.get<std::string>());
          r.canonicalize();
          coeffs.push_back(std::move(r));
        }
        Cyclotomic acc = Cyclotomic::zero_at(table.conductor);
        Cyclotomic z = Cyclotomic::root_of_unity(table.conductor, 1);
        Cyclotomic pow(Rational(1));
        for (const auto& c : coeffs) {
          acc += pow.scaled(c);
          pow *= z;
        }
        chi.values.push_back(acc.promoted(
            std::lcm(acc.conductor(), table.conductor)));
      }
      if (static_cast<int>(chi.values.size()) != classes->num_classes())
        return std::nullopt;
      table.irreducibles.push_back(std::move(chi));
    }
    return table;
  } catch (...) {
    return std::nullopt;
  }
}

void TableCache::store(const CharacterTable& table) {
  if (!enabled()) return;
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory(), ec);
  if (ec) return;
  nlohmann::ordered_json doc;
  doc["order"] = table.group->order();
  doc["fingerprint"] = hex_key(table.group->table_hash());
  doc["conductor"] = table.conductor;
  auto& jc = doc["classes"] = nlohmann::ordered_json::array();
  for (int i = 0; i < table.classes->num_classes(); ++i) {
    jc.push_back({{"rep", table.classes->rep[i]},
                  {"size", table.classes->size[i]},
                  {"order", table.group->element_order(table.classes->rep[i])}});
  }
  auto& jt = doc["characters"] = nlohmann::ordered_json::array();
  for (const auto& chi : table.irreducibles) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : chi.values) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      Cyclotomic p = v.promoted(std::lcm(v.conductor(), table.conductor));
      for (const auto& c : p.coeffs()) coeffs.push_back(rational_str(c));
      row.push_back(std::move(coeffs));
    }
    jt.push_back(std::move(row));
  }
  fs::path file = fs::path(directory()) / (hex_key(table.group->table_hash()) + ".json");
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump(1) << "\n";
  }
  fs::rename(tmp, file, ec);
}

}  // namespace bisetcalc
