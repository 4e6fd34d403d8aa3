#include "alch/scaffold.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "alch/basis.hpp"
#include "alch/errors.hpp"

namespace alch {
namespace {

// Strips comments and whitespace; returns false for blank lines.
bool payload_of(const std::string& line, std::string& out) {
  auto hash = line.find('#');
  out = line.substr(0, hash == std::string::npos ? line.size() : hash);
  return out.find_first_not_of(" \t\r\n") != std::string::npos;
}

[[noreturn]] void fail(const std::string& origin, std::size_t line_no,
                       const std::string& what) {
  throw ParseError(origin + ":" + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_species(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::size_t Scaffold::composition_count() const {
  std::size_t n = 1;
  for (const auto& site : sites) n *= site.allowed_species.size();
  return n;
}

void Scaffold::validate() const {
  if (sites.empty()) throw ParseError("scaffold has no sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& site = sites[i];
    if (site.allowed_species.empty())
      throw ParseError("scaffold site " + std::to_string(i) +
                       " allows no species");
    if (!site.position_angstrom.allFinite())
      throw ParseError("scaffold site " + std::to_string(i) +
                       " has a non-finite position");
    for (const auto& sp : site.allowed_species) load_sto3g(sp);
  }
}

void ChargeField::validate() const {
  for (const auto& c : charges) {
    if (!c.position_angstrom.allFinite() || !std::isfinite(c.charge))
      throw ParseError("charge field contains non-finite values");
  }
}

AlphaWeights AlphaWeights::uniform(const Scaffold& scaffold) {
  AlphaWeights alpha;
  alpha.site_weights.reserve(scaffold.site_count());
  for (const auto& site : scaffold.sites) {
    alpha.site_weights.emplace_back(site.allowed_species.size(),
                                    1.0 / site.allowed_species.size());
  }
  return alpha;
}

AlphaWeights AlphaWeights::one_hot(const Scaffold& scaffold,
                                   const std::vector<std::size_t>& species_index) {
  if (species_index.size() != scaffold.site_count())
    throw ShapeError("one_hot: species index count != site count");
  AlphaWeights alpha;
  for (std::size_t i = 0; i < scaffold.site_count(); ++i) {
    std::vector<double> w(scaffold.species_count(i), 0.0);
    if (species_index[i] >= w.size())
      throw ShapeError("one_hot: species index out of range at site " +
                       std::to_string(i));
    w[species_index[i]] = 1.0;
    alpha.site_weights.push_back(std::move(w));
  }
  return alpha;
}

double AlphaWeights::simplex_residual() const {
  double worst = 0.0;
  for (const auto& w : site_weights) {
    double sum = 0.0;
    for (double x : w) sum += x;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

void AlphaWeights::validate(double tol) const {
  for (std::size_t i = 0; i < site_weights.size(); ++i) {
    double sum = 0.0;
    for (double x : site_weights[i]) {
      if (!std::isfinite(x) || x < -tol || x > 1.0 + tol)
        throw NumericalError("alpha weight out of [0,1] at site " +
                             std::to_string(i));
      sum += x;
    }
    if (std::abs(sum - 1.0) > tol)
      throw NumericalError("alpha weights at site " + std::to_string(i) +
                           " violate the simplex constraint");
  }
}

std::vector<double> AlphaWeights::flatten() const {
  std::vector<double> flat;
  for (const auto& w : site_weights) flat.insert(flat.end(), w.begin(), w.end());
  return flat;
}

AlphaWeights AlphaWeights::unflatten(const Scaffold& scaffold,
                                     const std::vector<double>& flat) {
  AlphaWeights alpha;
  std::size_t k = 0;
  for (const auto& site : scaffold.sites) {
    if (k + site.allowed_species.size() > flat.size())
      throw ShapeError("unflatten: vector shorter than scaffold weights");
    alpha.site_weights.emplace_back(flat.begin() + k,
                                    flat.begin() + k + site.allowed_species.size());
    k += site.allowed_species.size();
  }
  if (k != flat.size())
    throw ShapeError("unflatten: vector longer than scaffold weights");
  return alpha;
}

Scaffold parse_scaffold(std::istream& in, const std::string& origin) {
  Scaffold scaffold;
  std::string line, payload;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!payload_of(line, payload)) continue;
    std::istringstream ss(payload);
    double x, y, z;
    std::string species_csv;
    if (!(ss >> x >> y >> z >> species_csv))
      fail(origin, line_no, "expected `x y z species1,species2,...`");
    std::string extra;
    if (ss >> extra) fail(origin, line_no, "trailing tokens: '" + extra + "'");
    auto species = split_species(species_csv);
    if (species.empty()) fail(origin, line_no, "empty species list");
    scaffold.sites.push_back({Vec3(x, y, z), std::move(species)});
  }
  scaffold.validate();
  return scaffold;
}

Scaffold load_scaffold(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open scaffold file: " + file.string());
  return parse_scaffold(in, file.string());
}

ChargeField parse_charge_field(std::istream& in, const std::string& origin) {
  ChargeField field;
  std::string line, payload;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!payload_of(line, payload)) continue;
    std::istringstream ss(payload);
    double x, y, z, q;
    if (!(ss >> x >> y >> z >> q))
      fail(origin, line_no, "expected `x y z q`");
    std::string extra;
    if (ss >> extra) fail(origin, line_no, "trailing tokens: '" + extra + "'");
    field.charges.push_back({Vec3(x, y, z), q});
  }
  field.validate();
  return field;
}

ChargeField load_charge_field(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open charge-field file: " + file.string());
  return parse_charge_field(in, file.string());
}

}  // namespace alch
