#include "vacpol/registry.hpp"

#include "vacpol/constants.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>  // vendored single header
#endif

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace vacpol {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool looks_like_w_boson(const std::string& name) {
  const std::string n = lower(name);
  return n == "w" || n == "w+" || n == "w-" || n == "w boson" ||
         n == "wboson" || n == "w_boson";
}

// Line number of a byte offset, for parse diagnostics.
int line_of_offset(std::string_view text, size_t offset) {
  int line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

double require_number(const ordered_json& obj, const char* field,
                      const std::string& where) {
  if (!obj.contains(field)) {
    throw ParseError("registry: missing field '" + std::string(field) +
                     "' in " + where);
  }
  if (!obj[field].is_number()) {
    throw ParseError("registry: field '" + std::string(field) + "' in " +
                     where + " must be a number");
  }
  return obj[field].get<double>();
}

} // namespace

ParticleRegistry
ParticleRegistry::from_species(std::vector<ChargedSpecies> species,
                               std::optional<double> charge_sum_override,
                               std::optional<double> mean_log_mass_gev) {
  ParticleRegistry reg;
  std::set<std::string> seen;
  for (const auto& sp : species) {
    if (!seen.insert(sp.name).second) {
      throw ValidationError("registry: duplicate species '" + sp.name + "'");
    }
    if (!(sp.mass_gev > 0.0)) {
      throw ValidationError("registry: species '" + sp.name +
                            "' must have mass_gev > 0");
    }
    if (sp.multiplicity < 1) {
      throw ValidationError("registry: species '" + sp.name +
                            "' must have multiplicity >= 1");
    }
    if (sp.charge_over_e == 0.0) {
      throw ValidationError("registry: species '" + sp.name +
                            "' must carry a nonzero charge");
    }
    if (looks_like_w_boson(sp.name)) {
      reg.warnings_.push_back(
          "species '" + sp.name +
          "' accepted, but bosons contribute through the fermion-loop "
          "kernel here");
    }
  }
  reg.species_ = std::move(species);
  reg.override_ = charge_sum_override;
  reg.mean_mass_ = mean_log_mass_gev;
  if (reg.mean_mass_ && !(*reg.mean_mass_ > 0.0)) {
    throw ValidationError("registry: mean_log_mass_gev must be > 0");
  }
  if (!(reg.effective_charge_sum() > 0.0)) {
    throw ValidationError("registry: effective charge sum must be > 0");
  }
  if (reg.uses_mean_mass() && !reg.mean_mass_ && reg.species_.empty()) {
    throw ValidationError(
        "registry: an override-only registry needs mean_log_mass_gev");
  }
  return reg;
}

double ParticleRegistry::effective_charge_sum() const {
  if (override_) return *override_;
  double sum = 0.0;
  for (const auto& sp : species_) {
    sum += sp.multiplicity * sp.charge_over_e * sp.charge_over_e;
  }
  return sum;
}

double ParticleRegistry::mean_log_mass_gev() const {
  if (mean_mass_) return *mean_mass_;
  // charge-weighted geometric mean over the table
  double wsum = 0.0, lsum = 0.0;
  for (const auto& sp : species_) {
    const double w = sp.multiplicity * sp.charge_over_e * sp.charge_over_e;
    wsum += w;
    lsum += w * std::log(sp.mass_gev);
  }
  return std::exp(lsum / wsum);
}

std::vector<LoopTerm> ParticleRegistry::loop_terms() const {
  if (uses_mean_mass()) {
    return {{effective_charge_sum(), mean_log_mass_gev()}};
  }
  std::vector<LoopTerm> terms;
  terms.reserve(species_.size());
  for (const auto& sp : species_) {
    terms.push_back(
        {sp.multiplicity * sp.charge_over_e * sp.charge_over_e, sp.mass_gev});
  }
  return terms;
}

std::string ParticleRegistry::dump_json(int indent) const {
  ordered_json doc;
  doc["species"] = ordered_json::array();
  for (const auto& sp : species_) {
    ordered_json j;
    j["name"] = sp.name;
    j["charge_over_e"] = sp.charge_over_e;
    j["mass_gev"] = sp.mass_gev;
    j["multiplicity"] = sp.multiplicity;
    doc["species"].push_back(j);
  }
  if (override_) doc["charge_sum_override"] = *override_;
  if (mean_mass_) doc["mean_log_mass_gev"] = *mean_mass_;
  return doc.dump(indent);
}

ParticleRegistry load_registry(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("registry: parse error at line " +
                     std::to_string(line_of_offset(json_text, e.byte)) + ": " +
                     e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("registry: top level must be an object");
  }
  std::vector<ChargedSpecies> species;
  if (doc.contains("species")) {
    if (!doc["species"].is_array()) {
      throw ParseError("registry: field 'species' must be an array");
    }
    int idx = 0;
    for (const auto& item : doc["species"]) {
      const std::string where = "species[" + std::to_string(idx) + "]";
      if (!item.is_object()) {
        throw ParseError("registry: " + where + " must be an object");
      }
      ChargedSpecies sp;
      if (!item.contains("name") || !item["name"].is_string()) {
        throw ParseError("registry: missing or non-string 'name' in " + where);
      }
      sp.name = item["name"].get<std::string>();
      sp.charge_over_e = require_number(item, "charge_over_e", where);
      sp.mass_gev = require_number(item, "mass_gev", where);
      if (item.contains("multiplicity")) {
        if (!item["multiplicity"].is_number_integer()) {
          throw ParseError("registry: field 'multiplicity' in " + where +
                           " must be an integer");
        }
        sp.multiplicity = item["multiplicity"].get<int>();
      }
      species.push_back(std::move(sp));
      ++idx;
    }
  }
  std::optional<double> override_sum, mean_mass;
  if (doc.contains("charge_sum_override")) {
    if (!doc["charge_sum_override"].is_number()) {
      throw ParseError("registry: 'charge_sum_override' must be a number");
    }
    override_sum = doc["charge_sum_override"].get<double>();
  }
  if (doc.contains("mean_log_mass_gev")) {
    if (!doc["mean_log_mass_gev"].is_number()) {
      throw ParseError("registry: 'mean_log_mass_gev' must be a number");
    }
    mean_mass = doc["mean_log_mass_gev"].get<double>();
  }
  return ParticleRegistry::from_species(std::move(species), override_sum,
                                        mean_mass);
}

ParticleRegistry load_registry_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("registry: cannot open file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_registry(buf.str());
}

ParticleRegistry preset(Preset which) {
  switch (which) {
  case Preset::sm_paper:
    return ParticleRegistry::from_species({}, 9.0, 0.25);
  case Preset::susy_doubled:
    return ParticleRegistry::from_species({}, 18.0, 0.25);
  case Preset::sm_fermions: {
    const double u = 2.0 / 3.0, d = -1.0 / 3.0;
    std::vector<ChargedSpecies> table = {
        {"electron", -1.0, kElectronMassGev, 1},
        {"muon", -1.0, 0.1056583755, 1},
        {"tau", -1.0, 1.77686, 1},
        {"up", u, 0.00216, 3},
        {"down", d, 0.00467, 3},
        {"strange", d, 0.0934, 3},
        {"charm", u, 1.27, 3},
        {"bottom", d, 4.18, 3},
        {"top", u, 172.69, 3},
    };
    return ParticleRegistry::from_species(std::move(table));
  }
  }
  throw ValidationError("unknown preset");
}

ParticleRegistry preset(std::string_view name) {
  if (name == "sm_paper") return preset(Preset::sm_paper);
  if (name == "sm_fermions") return preset(Preset::sm_fermions);
  if (name == "susy_doubled") return preset(Preset::susy_doubled);
  throw ValidationError("unknown preset '" + std::string(name) +
                        "' (expected sm_paper, sm_fermions or susy_doubled)");
}

} // namespace vacpol
