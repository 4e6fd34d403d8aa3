#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "alch/types.hpp"

namespace alch {

/// One insertion site: a fixed position and the species allowed there.
struct ScaffoldSite {
  Vec3 position_angstrom;
  std::vector<std::string> allowed_species;
};

/// Fixed molecular frame whose sites are alchemically mixed.
struct Scaffold {
  std::vector<ScaffoldSite> sites;

  std::size_t site_count() const { return sites.size(); }
  std::size_t species_count(std::size_t site) const {
    return sites[site].allowed_species.size();
  }
  /// Total number of ordered compositions, prod_I N_I.
  std::size_t composition_count() const;

  /// Throws ParseError on empty scaffolds, empty species lists, or
  /// non-finite coordinates.
  void validate() const;
};

/// External point charges (angstrom, units of e). May be empty (vacuum).
struct PointCharge {
  Vec3 position_angstrom;
  double charge;
};

struct ChargeField {
  std::vector<PointCharge> charges;

  bool empty() const { return charges.empty(); }
  std::size_t size() const { return charges.size(); }
  void validate() const;
};

/// Per-site simplex weights alpha^I_s over the allowed species of each site.
struct AlphaWeights {
  std::vector<std::vector<double>> site_weights;

  static AlphaWeights uniform(const Scaffold& scaffold);
  /// One-hot weights selecting species_index[I] at each site.
  static AlphaWeights one_hot(const Scaffold& scaffold,
                              const std::vector<std::size_t>& species_index);

  std::size_t site_count() const { return site_weights.size(); }
  /// Largest |sum_s alpha^I_s - 1| over sites.
  double simplex_residual() const;
  /// Throws if any component is outside [0,1] by more than tol or a site
  /// sum deviates from 1 by more than tol.
  void validate(double tol = 1e-10) const;

  std::vector<double> flatten() const;
  static AlphaWeights unflatten(const Scaffold& scaffold,
                                const std::vector<double>& flat);
};

/// Scaffold file: one line per site, `x y z species1,species2,...`
/// (coordinates in angstrom, `#` comments). Errors carry line numbers.
Scaffold parse_scaffold(std::istream& in, const std::string& origin = "<stream>");
Scaffold load_scaffold(const std::filesystem::path& file);

/// Charge-field file: one line per charge, `x y z q` (angstrom, e).
ChargeField parse_charge_field(std::istream& in,
                               const std::string& origin = "<stream>");
ChargeField load_charge_field(const std::filesystem::path& file);

}  // namespace alch
