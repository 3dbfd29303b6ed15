#pragma once

#include <string>
#include <vector>

#include "vancalc/spectrum.hpp"

namespace vancalc {

enum class PunctureKind { pinch, total_space_node, j_kappa, gluing };

struct Puncture {
  PunctureKind kind = PunctureKind::pinch;
  int local_monodromy = 0;  // +1 / -1; 0 means "derive from kind"
  int kappa = 0;            // for j_kappa
};

struct CurveStratumConfig {
  std::string name;
  int component_genus = 0;
  std::vector<Puncture> punctures;
  int twist = 0;     // coefficients Q(-twist)
  int tss_sign = 1;  // T^ss acts by this sign on the local system
};

struct ShriekCohomology {
  long h0 = 0, h1 = 0, h2 = 0;
  HodgeDeligneDiagram H0, H1, H2;
};

// Cohomology of j_! L for a rank-one local system with +-1 monodromies on P^1 minus the
// non-gluing punctures. Gluing punctures are filled in.
ShriekCohomology shriek_cohomology(const CurveStratumConfig& config);

long branched_cover_genus(long g, long branch_points);

int default_monodromy(PunctureKind kind, int n, int kappa);
PunctureKind parse_puncture_kind(const std::string& s);
std::string puncture_kind_name(PunctureKind k);

struct SheafPiece {
  std::string support;
  std::string kind;  // "shriek_local_system", "constant", "skyscraper", "kernel_of_normalization"
  std::string description;
  ShriekCohomology cohomology;  // for curve pieces
  WeightedSpectrum stalk;       // for skyscrapers: V^n
};

struct SheafDescription {
  std::vector<SheafPiece> pieces;
  long total_h1() const;
};

struct S0Point {
  std::string label;
  WeightedSpectrum vn;      // V^n at the point
  WeightedSpectrum vn_1;    // V^{n-1} at the point
  int kappa = 0;            // J_kappa type, 0 otherwise
};

// Fills monodromies from puncture kinds, checks the product, and tensors twist/T^ss sign.
SheafDescription assemble_h_sheaf(std::vector<CurveStratumConfig> strata,
                                  const std::vector<S0Point>& s0, int n);

// Kernel of normalization for a type III Kulikov configuration.
SheafDescription kulikov_sheaf(long F, long E, long V);

}  // namespace vancalc
