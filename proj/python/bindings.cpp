#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tategb/engine.hpp"
#include "tategb/errors.hpp"
#include "tategb/systems.hpp"
#include "tategb/text.hpp"
#include "tategb/verify.hpp"

namespace py = pybind11;
using namespace tategb;

namespace {

py::dict stats_dict(const EngineStats& s) {
  py::dict d;
  d["jpairs_created"] = s.jpairs_created;
  d["jpairs_popped"] = s.jpairs_popped;
  d["skipped_cover"] = s.skipped_cover;
  d["skipped_sig"] = s.skipped_sig;
  d["reductions"] = s.reductions;
  d["zero_reductions"] = s.zero_reductions;
  d["interrupted_reductions"] = s.interrupted_reductions;
  d["diverted"] = s.diverted;
  d["reduction_steps"] = s.reduction_steps;
  d["increments"] = s.increments;
  d["wall_time_ms"] = std::chrono::duration<double, std::milli>(s.wall_time).count();
  return d;
}

std::vector<std::string> strings(const std::vector<TateSeries>& fs) {
  std::vector<std::string> out;
  for (const TateSeries& f : fs) out.push_back(to_string(f));
  return out;
}

py::dict gb(const std::string& system, const std::string& algo, bool interreduce, bool interrupt,
            bool monic_signatures) {
  const auto a = parse_algorithm(algo);
  if (!a) throw BadParameterError("unknown algorithm '" + algo + "'");
  const SystemFile sys = parse_system(system);
  EngineOptions opts;
  opts.interreduce = interreduce;
  opts.interrupt_on_valuation_rise = interrupt;
  opts.monic_signatures = monic_signatures;
  GbResult r;
  {
    py::gil_scoped_release release;
    r = reduced_gb(*a, sys.generators, opts);
  }
  py::dict out;
  out["basis"] = strings(r.basis);
  out["stats"] = stats_dict(r.stats);
  out["text"] = format_system(*sys.ctx, r.basis);
  return out;
}

std::pair<bool, std::string> verify(const std::string& system, const std::string& basis, bool membership) {
  const SystemFile sys = parse_system(system);
  const SystemFile b = parse_system(basis);
  if (!(*sys.ctx == *b.ctx)) throw HeaderError("system and basis headers differ");
  const VerifyReport report = verify_gb(sys.generators, b.generators, membership);
  return {report.ok, report.counterexample};
}

std::string gen_random(std::uint64_t seed, std::uint64_t p, unsigned prec, std::size_t n_vars,
                       const std::string& order, std::size_t gens, std::size_t terms, unsigned deg,
                       unsigned val) {
  const auto o = parse_order(order);
  if (!o) throw BadParameterError("unknown order '" + order + "'");
  const ContextPtr ctx = Context::create(p, prec, default_var_names(n_vars), *o);
  RandomSystemSpec spec{seed, gens, terms, deg, val};
  return format_system(*ctx, random_system(spec, ctx));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gröbner bases in Tate algebras mod p^N";

  const auto& error = py::register_exception<Error>(m, "TateError");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.def("gb", &gb, py::arg("system"), py::arg("algo") = "vapote", py::arg("interreduce") = true,
        py::arg("interrupt") = false, py::arg("monic_signatures") = true,
        "Minimized reduced Gröbner basis of a system file given as text.");
  m.def("verify", &verify, py::arg("system"), py::arg("basis"), py::arg("membership") = false,
        "Returns (ok, counterexample).");
  m.def(
      "gen_torsion",
      [](std::uint64_t p, unsigned ell, unsigned prec) {
        const SystemFile sys = torsion_system({p, ell, prec});
        return format_system(*sys.ctx, sys.generators);
      },
      py::arg("p") = 5, py::arg("ell") = 3, py::arg("prec") = 3);
  m.def("gen_random", &gen_random, py::arg("seed") = 0, py::arg("p") = 5, py::arg("prec") = 4,
        py::arg("vars") = 2, py::arg("order") = "grevlex", py::arg("gens") = 2, py::arg("terms") = 4,
        py::arg("deg") = 3, py::arg("val") = 1);
}
