#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohr/radii.hpp"

namespace bohr {

/// One (alpha, beta) cell of a radius sweep. Inadmissible cells carry no radius.
struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  Theorem theorem = Theorem::T31;
  std::optional<double> radius;
  std::string regime;  // "inadmissible" when radius is empty
  std::optional<double> residual;
};

struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// steps x steps grid, alpha outer, both ends included. Throws DomainError
/// when ranges leave (0, 1] x (0, inf) or steps < 2.
std::vector<SweepRow> sweep(Theorem t, SweepRange alpha, SweepRange beta, int steps);

inline constexpr const char* kSweepHeader = "alpha,beta,theorem,radius,regime,residual";

/// Header plus one line per row; reals with 17 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace bohr
