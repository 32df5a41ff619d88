#include "tategb/verify.hpp"

#include "tategb/engine.hpp"
#include "tategb/reduce.hpp"
#include "tategb/text.hpp"

namespace tategb {
namespace {

VerifyReport fail(std::string what) { return {false, std::move(what)}; }

}  // namespace

VerifyReport verify_gb(std::span<const TateSeries> system, std::span<const TateSeries> basis,
                       bool check_membership) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) return fail("basis element " + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    const TateSeries r = top_reduce(system[i], basis).result;
    if (!r.is_zero()) {
      return fail("generator " + std::to_string(i + 1) + " does not reduce to 0 (remainder " +
                  to_string(r) + ")");
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const TateSeries r = top_reduce(s_series(basis[i], basis[j]), basis).result;
      if (!r.is_zero()) {
        return fail("S-series of basis elements " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " does not reduce to 0 (remainder " + to_string(r) + ")");
      }
    }
  }
  if (check_membership) {
    const std::vector<TateSeries> reference = buchberger(system).basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!top_reduce(basis[i], reference).result.is_zero()) {
        return fail("basis element " + std::to_string(i + 1) + " is not in the ideal of the system");
      }
    }
  }
  return {};
}

}  // namespace tategb
