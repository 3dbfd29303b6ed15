#include "vancalc/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef VANCALC_DEFAULT_DATA_DIR
#define VANCALC_DEFAULT_DATA_DIR "data"
#endif

namespace vancalc {

namespace fs = std::filesystem;

fs::path data_dir() {
  if (const char* env = std::getenv("VANCALC_DATA_DIR"); env && *env) return fs::path(env);
  return fs::path(VANCALC_DEFAULT_DATA_DIR);
}

FixtureRegistry FixtureRegistry::load(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw InputError("fixture directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  FixtureRegistry reg;
  for (const auto& path : files) {
    std::ifstream in(path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(path.string() + ": " + e.what());
    }
    if (!doc.contains("fixtures") || !doc["fixtures"].is_array())
      throw InputError(path.string() + ": expected a \"fixtures\" array");
    for (const auto& item : doc["fixtures"]) {
      Fixture f;
      f.file = path.filename().string();
      for (const char* key : {"name", "kind", "source"})
        if (!item.contains(key) || !item[key].is_string())
          throw InputError(path.string() + ": fixture without a '" + key + "' string");
      f.name = item["name"].get<std::string>();
      f.kind = item["kind"].get<std::string>();
      f.source = item["source"].get<std::string>();
      if (f.source.empty()) throw InputError(path.string() + ": fixture '" + f.name + "' has an empty source");
      if (!item.contains("value")) throw InputError(path.string() + ": fixture '" + f.name + "' has no value");
      f.value = item["value"];
      reg.add(std::move(f));
    }
  }
  return reg;
}

const FixtureRegistry& FixtureRegistry::global() {
  static const FixtureRegistry reg = load(data_dir() / "fixtures");
  return reg;
}

void FixtureRegistry::add(Fixture f) {
  if (items_.count(f.name)) throw InputError("duplicate fixture '" + f.name + "'");
  std::string key = f.name;
  items_.emplace(key, std::move(f));
}

const Fixture& FixtureRegistry::get(const std::string& name) const {
  auto it = items_.find(name);
  if (it == items_.end()) throw InputError("unknown fixture '" + name + "'");
  return it->second;
}

std::vector<std::string> FixtureRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : items_) out.push_back(k);
  return out;
}

WeightedSpectrum FixtureRegistry::weighted_spectrum(const std::string& name) const {
  const Fixture& f = get(name);
  if (f.kind != "weighted_spectrum")
    throw InputError("fixture '" + name + "' is a " + f.kind + ", not a weighted spectrum");
  return weighted_spectrum_from_json(f.value);
}

std::vector<EigenEntry> FixtureRegistry::eigen_entries(const std::string& name) const {
  const Fixture& f = get(name);
  if (f.kind != "eigen_entries")
    throw InputError("fixture '" + name + "' is a " + f.kind + ", not eigen entries");
  return eigen_entries_from_json(f.value);
}

}  // namespace vancalc
