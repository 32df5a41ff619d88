#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tategb/context.hpp"
#include "tategb/series.hpp"

namespace tategb {

/// Parses `term (+|- term)*` where a term is `[coeff][*][var^exp[*var^exp...]]`.
/// Whitespace is ignored. Throws ParseError carrying `line` and the 1-based
/// column of the offending character.
TateSeries parse_series(const ContextPtr& ctx, std::string_view text, std::size_t line = 0);

/// Canonical text: terms in decreasing Tate order, residues in [0, p^N),
/// coefficient 1 omitted on non-constant terms, `0` for the zero series.
std::string to_string(const TateSeries& f);
std::string to_string(const Context& ctx, const Monomial& m);
std::string to_string(const Context& ctx, const TateMonomial& m);

/// A parsed system file: header plus generators.
///
/// Layout:
///   p=<int> prec=<int> vars=<id,...> order=<grevlex|lex> ring=<integral|rational>
///   ---
///   <series>
///   ...
/// Blank lines and lines starting with `#` are ignored everywhere.
struct SystemFile {
  ContextPtr ctx;
  std::vector<TateSeries> generators;
};

/// Throws HeaderError for an invalid header (including composite p) and
/// ParseError for malformed generators.
SystemFile parse_system(std::string_view text);
SystemFile read_system_file(const std::string& path);

std::string format_header(const Context& ctx);
void write_system(std::ostream& os, const Context& ctx, const std::vector<TateSeries>& generators);
std::string format_system(const Context& ctx, const std::vector<TateSeries>& generators);

}  // namespace tategb
