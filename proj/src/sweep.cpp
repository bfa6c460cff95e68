#include "bohr/sweep.hpp"

#include <sstream>

#include "bohr/errors.hpp"
#include "bohr/format.hpp"
#include "bohr/parallel.hpp"

namespace bohr {

std::vector<SweepRow> sweep(Theorem t, SweepRange alpha, SweepRange beta, int steps) {
  if (steps < 2) throw DomainError("sweep: steps must be >= 2");
  if (!(alpha.lo > 0.0 && alpha.hi <= 1.0 && alpha.lo <= alpha.hi)) {
    throw DomainError("sweep: alpha range must lie in (0, 1] with lo <= hi");
  }
  if (!(beta.lo > 0.0 && beta.lo <= beta.hi)) {
    throw DomainError("sweep: beta range must lie in (0, inf) with lo <= hi");
  }
  const auto n = static_cast<std::size_t>(steps);
  std::vector<SweepRow> rows(n * n);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const std::size_t i = idx / n;
    const std::size_t j = idx % n;
    SweepRow row;
    row.alpha = alpha.lo + (alpha.hi - alpha.lo) * static_cast<double>(i) / (steps - 1);
    row.beta = beta.lo + (beta.hi - beta.lo) * static_cast<double>(j) / (steps - 1);
    row.theorem = t;
    const WeightPair w{row.alpha, row.beta};
    if (is_admissible(t, w)) {
      const RadiusCertificate c = radius(t, w);
      row.radius = c.value;
      row.regime = std::string(to_string(c.regime));
      row.residual = c.residual;
    } else {
      row.regime = "inadmissible";
    }
    rows[idx] = std::move(row);
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    os << format_real(r.alpha) << ',' << format_real(r.beta) << ',' << to_string(r.theorem) << ','
       << (r.radius ? format_real(*r.radius) : "NA") << ',' << r.regime << ','
       << (r.residual ? format_real(*r.residual) : "NA") << '\n';
  }
  return os.str();
}

}  // namespace bohr
