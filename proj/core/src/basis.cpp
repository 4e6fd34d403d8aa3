#include "alch/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "alch/errors.hpp"

namespace alch {
namespace {

constexpr double kPi = std::numbers::pi;

struct RawShell {
  int l;
  std::array<double, 3> exps;
  std::array<double, 3> coeffs;
};

struct RawSpecies {
  int Z;
  int core;
  std::vector<RawShell> shells;
};

// Standard STO-3G exponents and contraction coefficients. SP shells appear
// as an s and a p shell sharing exponents.
const std::map<std::string, RawSpecies>& raw_table() {
  static const std::map<std::string, RawSpecies> table = {
      {"H",
       {1,
        0,
        {{0, {3.425250914, 0.6239137298, 0.1688554040},
             {0.1543289673, 0.5353281423, 0.4446345422}}}}},
      {"Li",
       {3,
        2,
        {{0, {16.11957475, 2.936200663, 0.7946504870},
             {0.1543289673, 0.5353281423, 0.4446345422}},
         {0, {0.6362897469, 0.1478600533, 0.0480886784},
             {-0.09996722919, 0.3995128261, 0.7001154689}},
         {1, {0.6362897469, 0.1478600533, 0.0480886784},
             {0.1559162750, 0.6076837186, 0.3919573931}}}}},
      {"C",
       {6,
        2,
        {{0, {71.61683735, 13.04509632, 3.530512160},
             {0.1543289673, 0.5353281423, 0.4446345422}},
         {0, {2.941249355, 0.6834830964, 0.2222899159},
             {-0.09996722919, 0.3995128261, 0.7001154689}},
         {1, {2.941249355, 0.6834830964, 0.2222899159},
             {0.1559162750, 0.6076837186, 0.3919573931}}}}},
      {"N",
       {7,
        2,
        {{0, {99.10616896, 18.05231239, 4.885660238},
             {0.1543289673, 0.5353281423, 0.4446345422}},
         {0, {3.780455879, 0.8784966449, 0.2857143744},
             {-0.09996722919, 0.3995128261, 0.7001154689}},
         {1, {3.780455879, 0.8784966449, 0.2857143744},
             {0.1559162750, 0.6076837186, 0.3919573931}}}}},
      {"O",
       {8,
        2,
        {{0, {130.7093214, 23.80886605, 6.443608313},
             {0.1543289673, 0.5353281423, 0.4446345422}},
         {0, {5.033151319, 1.169596125, 0.3803889600},
             {-0.09996722919, 0.3995128261, 0.7001154689}},
         {1, {5.033151319, 1.169596125, 0.3803889600},
             {0.1559162750, 0.6076837186, 0.3919573931}}}}},
      {"Na",
       {11,
        10,
        {{0, {250.7724300, 45.67851117, 12.36238776},
             {0.1543289673, 0.5353281423, 0.4446345422}},
         {0, {12.04019274, 2.797881859, 0.9099580170},
             {-0.09996722919, 0.3995128261, 0.7001154689}},
         {1, {12.04019274, 2.797881859, 0.9099580170},
             {0.1559162750, 0.6076837186, 0.3919573931}},
         {0, {1.478740622, 0.4125648801, 0.1614750979},
             {-0.2196203690, 0.2255954336, 0.9003984260}},
         {1, {1.478740622, 0.4125648801, 0.1614750979},
             {0.01058760429, 0.5951670053, 0.4620010120}}}}},
      {"S",
       {16,
        10,
        {{0, {533.1257359, 97.10951830, 26.28162542},
             {0.1543289673, 0.5353281423, 0.4446345422}},
         {0, {33.32975173, 7.745117521, 2.518952599},
             {-0.09996722919, 0.3995128261, 0.7001154689}},
         {1, {33.32975173, 7.745117521, 2.518952599},
             {0.1559162750, 0.6076837186, 0.3919573931}},
         {0, {2.029194274, 0.5661400518, 0.2215833792},
             {-0.2196203690, 0.2255954336, 0.9003984260}},
         {1, {2.029194274, 0.5661400518, 0.2215833792},
             {0.01058760429, 0.5951670053, 0.4620010120}}}}},
  };
  return table;
}

double primitive_norm(double a, int l) {
  // (2a/pi)^{3/4} (4a)^{L/2} / sqrt((2l-1)!!...) with one Cartesian axis
  // carrying all of L; the double factorial is 1 for l <= 1.
  return std::pow(2.0 * a / kPi, 0.75) * std::pow(4.0 * a, 0.5 * l);
}

// Self-overlap of two same-center primitives with identical angular part
// (all angular momentum on one axis, l <= 1).
double pair_self_overlap(double a, double b, int l) {
  const double p = a + b;
  double s = std::pow(kPi / p, 1.5);
  if (l == 1) s /= 2.0 * p;
  return s;
}

ContractedShell normalize_shell(const RawShell& raw) {
  ContractedShell shell;
  shell.angular_momentum = raw.l;
  shell.primitives.reserve(raw.exps.size());
  for (std::size_t i = 0; i < raw.exps.size(); ++i) {
    shell.primitives.push_back(
        {raw.exps[i], raw.coeffs[i] * primitive_norm(raw.exps[i], raw.l)});
  }
  double self = 0.0;
  for (const auto& pi : shell.primitives)
    for (const auto& pj : shell.primitives)
      self += pi.coefficient * pj.coefficient *
              pair_self_overlap(pi.exponent, pj.exponent, raw.l);
  const double scale = 1.0 / std::sqrt(self);
  for (auto& p : shell.primitives) p.coefficient *= scale;
  return shell;
}

SpeciesBasis build_species(const std::string& symbol, const RawSpecies& raw) {
  SpeciesBasis sp;
  sp.symbol = symbol;
  sp.total_Z = raw.Z;
  sp.core_electrons = raw.core;
  sp.valence_charge = static_cast<double>(raw.Z - raw.core);
  sp.shells.reserve(raw.shells.size());
  for (const auto& shell : raw.shells) sp.shells.push_back(normalize_shell(shell));
  return sp;
}

}  // namespace

std::size_t SpeciesBasis::function_count() const {
  std::size_t n = 0;
  for (const auto& shell : shells) n += shell.function_count();
  return n;
}

const SpeciesBasis& load_sto3g(const std::string& element) {
  static const std::map<std::string, SpeciesBasis> cache = [] {
    std::map<std::string, SpeciesBasis> m;
    for (const auto& [symbol, raw] : raw_table())
      m.emplace(symbol, build_species(symbol, raw));
    return m;
  }();
  auto it = cache.find(element);
  if (it == cache.end())
    throw UnsupportedSpeciesError("no bundled STO-3G data for element '" +
                                  element + "'");
  return it->second;
}

const std::vector<std::string>& sto3g_elements() {
  static const std::vector<std::string> elements = [] {
    std::vector<std::string> v;
    for (const auto& [symbol, raw] : raw_table()) v.push_back(symbol);
    return v;
  }();
  return elements;
}

std::optional<double> tabulated_bond_length(const std::string& a,
                                            const std::string& b) {
  // Experimental equilibrium distances for the species this artifact mixes,
  // angstrom (NIST diatomic tables).
  static const std::map<std::pair<std::string, std::string>, double> table = {
      {{"H", "H"}, 0.741},   {{"H", "Li"}, 1.595}, {{"H", "Na"}, 1.887},
      {{"Li", "Li"}, 2.673}, {{"Li", "Na"}, 2.889}, {{"Na", "Na"}, 3.079},
      {{"C", "C"}, 1.243},   {{"C", "N"}, 1.172},  {{"C", "O"}, 1.128},
      {{"C", "S"}, 1.535},   {{"N", "N"}, 1.098},  {{"N", "O"}, 1.154},
      {{"N", "S"}, 1.497},   {{"O", "O"}, 1.208},  {{"O", "S"}, 1.481},
      {{"S", "S"}, 1.889},
  };
  auto key = std::minmax(a, b);
  auto it = table.find({key.first, key.second});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

BasisSet build_union_basis(const Scaffold& scaffold) {
  scaffold.validate();
  BasisSet basis;
  for (std::size_t site = 0; site < scaffold.site_count(); ++site) {
    const auto& site_def = scaffold.sites[site];
    const Vec3 center = angstrom_to_bohr(site_def.position_angstrom);
    for (std::size_t s = 0; s < site_def.allowed_species.size(); ++s) {
      const SpeciesBasis& species = load_sto3g(site_def.allowed_species[s]);
      for (std::size_t sh = 0; sh < species.shells.size(); ++sh) {
        const ContractedShell& shell = species.shells[sh];
        if (shell.angular_momentum == 0) {
          basis.functions.push_back(
              {site, s, sh, {0, 0, 0}, center, &shell});
        } else {
          for (int axis = 0; axis < 3; ++axis) {
            std::array<int, 3> powers{0, 0, 0};
            powers[axis] = 1;
            basis.functions.push_back({site, s, sh, powers, center, &shell});
          }
        }
      }
    }
  }
  return basis;
}

}  // namespace alch
