#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "vancalc/json_io.hpp"

namespace vancalc {

// $VANCALC_DATA_DIR if set, else the directory compiled in at build time.
std::filesystem::path data_dir();

struct Fixture {
  std::string name;
  std::string kind;    // weighted_spectrum, eigen_entries, slc_row, ...
  std::string source;  // where the values were read from
  std::string file;
  json value;
};

// Named fixtures from every *.json under <data>/fixtures. Each file holds
// {"fixtures": [{"name", "kind", "source", "value"}, ...]}.
class FixtureRegistry {
 public:
  static FixtureRegistry load(const std::filesystem::path& dir);
  static const FixtureRegistry& global();  // loaded once from data_dir()/fixtures

  void add(Fixture f);
  bool has(const std::string& name) const { return items_.count(name) > 0; }
  const Fixture& get(const std::string& name) const;
  std::vector<std::string> names() const;

  WeightedSpectrum weighted_spectrum(const std::string& name) const;
  std::vector<EigenEntry> eigen_entries(const std::string& name) const;

 private:
  std::map<std::string, Fixture> items_;
};

}  // namespace vancalc
