#pragma once

#include <span>
#include <string>

#include "tategb/series.hpp"

namespace tategb {

struct VerifyReport {
  bool ok = true;
  /// Empty on success, otherwise names the first failing check.
  std::string counterexample;
};

/// Checks that `basis` is a Gröbner basis of the ideal generated by `system`
/// mod p^N:
///  - every generator top-reduces to zero,
///  - every pairwise S-series top-reduces to zero.
/// No separate check against the implicit generator p^N is needed: the
/// leading term carries the Gauss valuation v, so p^(N - v) * g is zero.
/// With `check_membership`, also checks that every basis element lies in the
/// ideal of `system`, using a reference basis computed by Buchberger.
VerifyReport verify_gb(std::span<const TateSeries> system, std::span<const TateSeries> basis,
                       bool check_membership = false);

}  // namespace tategb
