#include "tategb/text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "tategb/errors.hpp"

namespace tategb {
namespace {

class SeriesParser {
 public:
  SeriesParser(const ContextPtr& ctx, std::string_view text, std::size_t line)
      : ctx_(ctx), text_(text), line_(line) {}

  TateSeries parse() {
    std::vector<std::pair<Monomial, Coeff>> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      skip_ws();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return TateSeries::from_terms(ctx_, std::move(terms));
  }

 private:
  std::pair<Monomial, Coeff> parse_term(bool negative) {
    const PadicRing& zp = ctx_->coeffs();
    Coeff coeff = zp.one();
    Monomial mono = ctx_->one_monomial();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      coeff = zp.from_decimal(text_.substr(start, pos_ - start), false);
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        mono = parse_factor(mono);
      } else if (is_ident_start(peek())) {
        mono = parse_factor(mono);
      }
    } else if (is_ident_start(peek())) {
      mono = parse_factor(mono);
    } else {
      fail(at_end() ? "unexpected end of input, expected a term" : "expected a coefficient or variable");
    }
    skip_ws();
    while (peek() == '*') {
      get();
      skip_ws();
      mono = parse_factor(mono);
      skip_ws();
    }
    if (negative) coeff = zp.neg(coeff);
    return {mono, coeff};
  }

  Monomial parse_factor(const Monomial& acc) {
    if (!is_ident_start(peek())) fail("expected a variable name");
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto idx = ctx_->var_index(name);
    if (!idx) fail("unknown variable '" + std::string(name) + "'", start);
    unsigned exp = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
      const std::size_t estart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      const auto digits = text_.substr(estart, pos_ - estart);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc{} || exp > std::numeric_limits<Monomial::exponent_type>::max()) {
        fail("exponent out of range", estart);
      }
      (void)ptr;
    }
    return acc.with_added(*idx, exp);
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, line_, at + 1);
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw HeaderError("header field " + std::string(key) + " has invalid value '" + std::string(value) + "'");
  }
  return out;
}

ContextPtr parse_header(std::string_view line) {
  std::optional<std::uint64_t> p;
  std::optional<unsigned> prec;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex;
  RingMode mode = RingMode::integral;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw HeaderError("header token '" + token + "' is not key=value");
    const std::string_view key = std::string_view(token).substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "p") {
      p = parse_unsigned<std::uint64_t>(key, value);
    } else if (key == "prec") {
      prec = parse_unsigned<unsigned>(key, value);
    } else if (key == "vars") {
      std::size_t start = 0;
      while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string_view::npos ? value.size() : comma;
        vars.emplace_back(value.substr(start, end - start));
        start = end + 1;
      }
    } else if (key == "order") {
      const auto o = parse_order(value);
      if (!o) throw HeaderError("unknown monomial order '" + std::string(value) + "'");
      order = *o;
    } else if (key == "ring") {
      const auto r = parse_ring_mode(value);
      if (!r) throw HeaderError("unknown ring mode '" + std::string(value) + "'");
      mode = *r;
    } else {
      throw HeaderError("unknown header field '" + std::string(key) + "'");
    }
  }
  if (!p || !prec || vars.empty()) throw HeaderError("header must define p, prec and vars");
  try {
    return Context::create(*p, *prec, std::move(vars), order, mode);
  } catch (const ContextError& e) {
    throw HeaderError(e.what());
  }
}

}  // namespace

TateSeries parse_series(const ContextPtr& ctx, std::string_view text, std::size_t line) {
  return SeriesParser(ctx, text, line).parse();
}

std::string to_string(const Context& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.var_names()[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Context& ctx, const TateMonomial& m) {
  const std::string mono = to_string(ctx, m.mono);
  if (m.val == 0) return mono;
  std::string out = std::to_string(ctx.p());
  if (m.val != 1) out += '^' + std::to_string(m.val);
  return m.mono.is_one() ? out : out + '*' + mono;
}

std::string to_string(const TateSeries& f) {
  if (f.is_zero()) return "0";
  const Context& ctx = f.context();
  std::string out;
  for (const Term& t : f.terms_by_tate_order()) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff.residue);
    } else if (t.coeff.residue == 1) {
      out += to_string(ctx, t.mono);
    } else {
      out += std::to_string(t.coeff.residue) + '*' + to_string(ctx, t.mono);
    }
  }
  return out;
}

SystemFile parse_system(std::string_view text) {
  SystemFile sys;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool in_body = false;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    if (skippable(line)) continue;
    if (!sys.ctx) {
      sys.ctx = parse_header(trim(line));
    } else if (!in_body) {
      if (trim(line) != "---") throw HeaderError("expected '---' after the header (line " + std::to_string(line_no) + ")");
      in_body = true;
    } else {
      sys.generators.push_back(parse_series(sys.ctx, line, line_no));
    }
  }
  if (!sys.ctx) throw HeaderError("missing header line");
  if (!in_body) throw HeaderError("missing '---' separator");
  return sys;
}

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string format_header(const Context& ctx) {
  std::string out = "p=" + std::to_string(ctx.p()) + " prec=" + std::to_string(ctx.prec()) + " vars=";
  for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
    if (i != 0) out += ',';
    out += ctx.var_names()[i];
  }
  out += " order=";
  out += to_string(ctx.order());
  out += " ring=";
  out += to_string(ctx.ring_mode());
  return out;
}

void write_system(std::ostream& os, const Context& ctx, const std::vector<TateSeries>& generators) {
  os << format_header(ctx) << "\n---\n";
  for (const TateSeries& g : generators) os << to_string(g) << '\n';
}

std::string format_system(const Context& ctx, const std::vector<TateSeries>& generators) {
  std::ostringstream os;
  write_system(os, ctx, generators);
  return os.str();
}

}  // namespace tategb
