#include "tategb/context.hpp"

#include <algorithm>
#include <cctype>

#include "tategb/errors.hpp"

namespace tategb {
namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::string_view to_string(MonomialOrder order) noexcept {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

std::string_view to_string(RingMode mode) noexcept {
  return mode == RingMode::integral ? "integral" : "rational";
}

std::optional<MonomialOrder> parse_order(std::string_view s) noexcept {
  if (s == "grevlex") return MonomialOrder::grevlex;
  if (s == "lex") return MonomialOrder::lex;
  return std::nullopt;
}

std::optional<RingMode> parse_ring_mode(std::string_view s) noexcept {
  if (s == "integral") return RingMode::integral;
  if (s == "rational") return RingMode::rational;
  return std::nullopt;
}

Context::Context(std::uint64_t p, unsigned precision, std::vector<std::string> var_names,
                 MonomialOrder order, RingMode mode)
    : ring_(p, precision), vars_(std::move(var_names)), order_(order), mode_(mode) {
  if (vars_.empty()) throw ContextError("at least one variable is required");
  if (vars_.size() > kMaxVars) {
    throw ContextError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!valid_identifier(vars_[i])) throw ContextError("invalid variable name '" + vars_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw ContextError("duplicate variable name '" + vars_[i] + "'");
    }
  }
}

std::shared_ptr<const Context> Context::create(std::uint64_t p, unsigned precision,
                                               std::vector<std::string> var_names, MonomialOrder order,
                                               RingMode mode) {
  return std::make_shared<const Context>(p, precision, std::move(var_names), order, mode);
}

std::optional<std::size_t> Context::var_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace tategb
