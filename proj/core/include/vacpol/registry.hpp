#pragma once

#include "vacpol/errors.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vacpol {

/// One charged elementary particle type whose virtual pairs polarize the
/// vacuum. `multiplicity` counts internal degeneracy (color).
struct ChargedSpecies {
  std::string name;
  double charge_over_e = 0.0;  // q / e, may be negative
  double mass_gev = 0.0;       // rest energy m c^2 in GeV
  int multiplicity = 1;
};

/// (weight, mass) pair entering the one-loop sum: weight = mult * (q/e)^2.
struct LoopTerm {
  double weight;
  double mass_gev;
};

/// The set of species summed over in the polarizability. When
/// `charge_sum_override` is set the registry is treated as a single
/// effective species of that total charge weight at the mean mass, which is
/// how the headline Landau-pole numbers are quoted.
class ParticleRegistry {
public:
  static ParticleRegistry
  from_species(std::vector<ChargedSpecies> species,
               std::optional<double> charge_sum_override = std::nullopt,
               std::optional<double> mean_log_mass_gev = std::nullopt);

  const std::vector<ChargedSpecies>& species() const { return species_; }
  std::optional<double> charge_sum_override() const { return override_; }

  /// Override if present, else sum of multiplicity * (q/e)^2.
  double effective_charge_sum() const;

  /// Mean mass scale: the stored value if given, otherwise the
  /// charge-weighted geometric mean exp(sum w_j ln m_j / sum w_j). With
  /// that choice the mean-mass log form reproduces the per-species sum
  /// identically.
  double mean_log_mass_gev() const;

  /// True when the loop sum runs over the single (charge_sum, mean mass)
  /// effective term instead of the species table.
  bool uses_mean_mass() const { return override_.has_value() || species_.empty(); }

  /// Terms of the one-loop sum; a single effective term for override
  /// registries.
  std::vector<LoopTerm> loop_terms() const;

  /// Non-fatal notes attached during validation (e.g. W bosons accepted but
  /// run through the fermion-loop kernel).
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Canonical JSON echo of the registry (used by `registry dump` and for
  /// hashing); numbers round-trip exactly.
  std::string dump_json(int indent = 2) const;

private:
  ParticleRegistry() = default;
  std::vector<ChargedSpecies> species_;
  std::optional<double> override_;
  std::optional<double> mean_mass_;
  std::vector<std::string> warnings_;
};

/// Parse and validate a registry document. Top-level fields: `species`
/// (array of {name, charge_over_e, mass_gev, multiplicity}), optional
/// `charge_sum_override`, optional `mean_log_mass_gev`.
/// Throws ParseError with the line and field location, or ValidationError
/// naming the offending species.
ParticleRegistry load_registry(std::string_view json_text);
ParticleRegistry load_registry_file(const std::string& path);

enum class Preset {
  sm_paper,      // charge sum 9, mean mass 0.25 GeV (the quoted numbers)
  sm_fermions,   // 3 leptons + 6 quarks x 3 colors, charge sum 8
  susy_doubled,  // sm_paper with the particle count doubled
};

ParticleRegistry preset(Preset which);
ParticleRegistry preset(std::string_view name);  // throws ValidationError

} // namespace vacpol
