#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alch/scaffold.hpp"
#include "alch/types.hpp"

namespace alch {

/// One Cartesian Gaussian primitive, exponent in bohr^-2. The contraction
/// coefficient carries the primitive normalization and the contracted-shell
/// renormalization, so raw primitives integrate directly.
struct GaussianPrimitive {
  double exponent;
  double coefficient;
};

/// A contracted shell: shared primitives and an angular momentum l (0 = s,
/// 1 = p). Cartesian components of a p shell share the same radial part.
struct ContractedShell {
  int angular_momentum;
  std::vector<GaussianPrimitive> primitives;  // coefficients pre-normalized

  std::size_t function_count() const {
    return angular_momentum == 0 ? 1 : 3;
  }
};

/// Basis data plus effective-core bookkeeping for one element.
struct SpeciesBasis {
  std::string symbol;
  int total_Z = 0;
  int core_electrons = 0;     // N_e^ECP, replaced by the valence point charge
  double valence_charge = 0;  // Z~ = Z - N_core
  std::vector<ContractedShell> shells;

  std::size_t function_count() const;
};

/// STO-3G data for one element from the standard published parameterization
/// (bundled, s/p shells only). Throws UnsupportedSpeciesError for elements
/// outside the table.
const SpeciesBasis& load_sto3g(const std::string& element);

/// Elements available in the bundled table.
const std::vector<std::string>& sto3g_elements();

/// Experimental equilibrium bond length (angstrom) for a bundled set of
/// diatomics; symmetric in its arguments. Empty when untabulated.
std::optional<double> tabulated_bond_length(const std::string& a,
                                            const std::string& b);

/// One function of the union basis with its provenance tags.
struct BasisFunction {
  std::size_t site = 0;        // I
  std::size_t species = 0;     // index into the site's allowed list
  std::size_t shell = 0;       // index into the species' shell list
  std::array<int, 3> angular_powers{0, 0, 0};  // Cartesian l,m,n
  Vec3 center_bohr;
  const ContractedShell* data = nullptr;
};

/// Union atomic basis over all sites and all species allowed at each site.
/// Ordering is deterministic: sites ascending, species in declared order,
/// shells in data order, Cartesian components x,y,z.
struct BasisSet {
  std::vector<BasisFunction> functions;

  std::size_t size() const { return functions.size(); }
  const BasisFunction& operator[](std::size_t i) const { return functions[i]; }
};

BasisSet build_union_basis(const Scaffold& scaffold);

}  // namespace alch
