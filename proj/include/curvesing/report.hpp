#pragma once

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvesing/parse.hpp"
#include "curvesing/singularity.hpp"

namespace curvesing {

inline constexpr const char* kVersion = "0.1.0";

inline const std::vector<std::string>& projective_checks() {
  static const std::vector<std::string> names{
      "mu_basis_valid",       "delta_factorization",       "seed_independence",         "hybrid_invariance",
      "fitting_ideals",       "bezout_divisor_chain",      "bezout_sylvester_relation", "d_resultant_factorization",
      "proper_point_divisibility"};
  return names;
}

inline const std::vector<std::string>& rational_pair_checks() {
  static const std::vector<std::string> names{"d_resultant_general"};
  return names;
}

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::optional<std::set<std::string>> checks;  // unset = all
  bool approx_roots = false;
  std::size_t max_enum = 8;
  bool dump_matrices = false;
};

struct ReportDocument {
  nlohmann::json json;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// "all" and "none" are accepted; anything else must name a check of the mode.
inline std::set<std::string> resolve_checks(const std::optional<std::set<std::string>>& req, InputMode mode) {
  const auto& known = mode == InputMode::Projective ? projective_checks() : rational_pair_checks();
  if (!req || req->count("all")) return {known.begin(), known.end()};
  std::set<std::string> out;
  for (const auto& name : *req) {
    if (name == "none") continue;
    require(std::find(known.begin(), known.end(), name) != known.end(), ErrorKind::Input, "cli",
            "unknown check '" + name + "' for " + to_string(mode) + " mode");
    out.insert(name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json rat_json(const Rat& r) { return to_string(r); }

inline nlohmann::json coeffs_json(const std::vector<Rat>& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : c) a.push_back(rat_json(x));
  return a;
}

/// Raw coefficients, ascending in the first variable.
inline nlohmann::json raw_json(const BiHomPoly& f) { return coeffs_json(f.coeffs()); }
inline nlohmann::json raw_json(const UniPoly& f) { return coeffs_json(f.coeffs()); }

/// Normalized primitive coefficients, ascending in the first variable.
inline nlohmann::json poly_json(const BiHomPoly& f) { return raw_json(f.is_zero() ? f : normalize_primitive(f)); }

inline nlohmann::json triple_json(const Triple& g) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& f : g) a.push_back(raw_json(f));
  return a;
}

inline nlohmann::json check_json(const CheckResult& c) {
  nlohmann::json j{{"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.witness.empty()) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, v] : c.witness) w[k] = v;
    j["witness"] = w;
  }
  return j;
}

inline nlohmann::json matrix_json(const HomMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(raw_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

inline std::string fmt_ld(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x == 0 ? 0.0L : x);
  return buf;
}

/// Coprime factorization for display, e.g. "t^2*(2*t + u)^2".
inline std::string factored_string(const BiHomPoly& f) {
  if (f.is_zero()) return "0";
  if (f.degree() == 0) return "1";
  std::string out;
  for (const auto& atom : coprime_atoms({f})) {
    const int e = multiplicity_in(atom, f);
    std::string s = to_string(atom);
    if (atom.degree() > 1 || (atom.coeff(0) != 0 && atom.coeff(1) != 0) || (atom.coeff(0) == 0 ? atom.coeff(1) : atom.coeff(0)) != 1)
      s = "(" + s + ")";
    if (e > 1) s += "^" + std::to_string(e);
    out += (out.empty() ? "" : "*") + s;
  }
  return out;
}

inline nlohmann::json stratification_json(const StratifiedReport& rep, bool approx) {
  nlohmann::json j;
  j["genus"] = {{"tally", rep.genus_tally}, {"target", rep.genus_target}, {"ok", rep.genus_ok}};
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& st : rep.strata) {
    auto sq = [](const std::vector<HomFactor>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& h : v) a.push_back({{"exponent", h.exponent}, {"factor", poly_json(h.factor)}});
      return a;
    };
    strata.push_back({{"k", st.k},
                      {"d_degree", st.d.degree()},
                      {"point_count", st.point_count},
                      {"count_integral", st.count_integral},
                      {"d_squarefree", sq(st.d_squarefree)},
                      {"reduced_squarefree", sq(st.reduced_squarefree)}});
  }
  j["strata"] = strata;
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : rep.atoms) {
    nlohmann::json x{{"factor", poly_json(a.factor)},
                     {"factor_text", to_string(normalize_primitive(a.factor))},
                     {"proper_multiplicity", a.proper_multiplicity},
                     {"best_effort", a.best_effort}};
    nlohmann::json ed = nlohmann::json::object(), er = nlohmann::json::object();
    for (std::size_t k = 2; k < a.exponent_d.size(); ++k) {
      if (a.exponent_d[k]) ed[std::to_string(k)] = a.exponent_d[k];
      if (a.exponent_reduced[k]) er[std::to_string(k)] = a.exponent_reduced[k];
    }
    x["exponent_d"] = ed;
    x["exponent_reduced"] = er;
    x["rational_parameter"] = a.rational_parameter
                                  ? nlohmann::json::array({rat_json(a.rational_parameter->first), rat_json(a.rational_parameter->second)})
                                  : nlohmann::json();
    if (approx) {
      nlohmann::json roots = nlohmann::json::array();
      for (std::size_t i = 0; i < a.roots.size(); ++i) {
        const auto& r = a.roots[i];
        nlohmann::json img = nlohmann::json::array();
        for (const auto& z : a.images[i]) img.push_back({fmt_ld(z.real()), fmt_ld(z.imag())});
        roots.push_back({{"t", {fmt_ld(r.value.real()), fmt_ld(r.value.imag())}},
                         {"at_infinity", a.factor.degree() == 1 && a.factor.coeff(1) == 0},
                         {"converged", r.converged},
                         {"image", img}});
      }
      x["roots"] = roots;
    }
    atoms.push_back(x);
  }
  j["atoms"] = atoms;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : rep.split.points) {
    points.push_back({{"point", {rat_json(p.point.x[0]), rat_json(p.point.x[1]), rat_json(p.point.x[2])}},
                      {"parameter", {rat_json(p.parameter.first), rat_json(p.parameter.second)}},
                      {"H", poly_json(p.H)},
                      {"multiplicity", p.multiplicity},
                      {"in_range", p.in_range}});
  }
  j["proper_points"] = points;
  nlohmann::json h = nlohmann::json::object(), psi = nlohmann::json::object(), cert = nlohmann::json::object();
  for (int k = 2; k <= rep.n - rep.mu; ++k) {
    const std::string key = std::to_string(k);
    h[key] = poly_json(rep.split.h[k]);
    nlohmann::json row = nlohmann::json::object();
    for (const auto& [s, f] : rep.split.psi[k]) row[std::to_string(s)] = poly_json(f);
    psi[key] = row;
    cert[key] = static_cast<bool>(rep.split.certified[k]);
  }
  j["split"] = {{"h", h}, {"psi", psi}, {"certified", cert}};
  j["flags"] = rep.flags;
  return j;
}

// ---------------------------------------------------------------------------
// Pipeline

inline void record(ReportDocument& doc, const CheckResult& c) {
  doc.json["checks"][c.name] = check_json(c);
  doc.checks.push_back(c);
}

inline ReportDocument run_projective(const InputSpec& spec, const PipelineOptions& opt) {
  const std::set<std::string> want = resolve_checks(opt.checks, InputMode::Projective);
  auto on = [&](const char* name) { return want.count(name) > 0; };
  ReportDocument doc;
  auto& j = doc.json;
  j["version"] = kVersion;
  j["mode"] = to_string(InputMode::Projective);
  j["seed"] = opt.seed;
  j["input"] = {{"a", raw_json(spec.a)}, {"b", raw_json(spec.b)}, {"c", raw_json(spec.c)}, {"degree", spec.a.degree()}};
  j["checks"] = nlohmann::json::object();

  const Parameterization phi(spec.a, spec.b, spec.c);
  const int n = phi.degree();
  const MuBasis b = compute_mu_basis(phi);
  j["mu"] = b.mu;
  j["mu_basis"] = {{"p", triple_json(b.p)}, {"q", triple_json(b.q)}};
  if (on("mu_basis_valid")) {
    const MuBasisReport r = validate_mu_basis(phi, b);
    CheckResult c = make_check("mu_basis_valid", r.failures.empty());
    for (const auto& f : r.failures) c.witness.push_back({"failure", f});
    record(doc, c);
  }

  const MovingForms m = build_moving_forms(phi, b);
  const HomMatrix s = build_sylvester(m);
  const DeltaInvariant delta = delta_subresultant(s, n, b.mu);
  j["delta"] = {{"degree", delta.delta.degree()}, {"coeffs", poly_json(delta.delta)}};

  const SingularFactorSet sf = reduced_singular_factors(singular_factors(s, n, b.mu, opt.seed));
  nlohmann::json d = nlohmann::json::object(), red = nlohmann::json::object();
  for (int k = 2; k <= n; ++k) {
    d[std::to_string(k)] = poly_json(sf.d[k]);
    red[std::to_string(k)] = poly_json(sf.reduced[k]);
  }
  j["d"] = d;
  j["reduced"] = red;
  bool ordinary = sf.d[2] == squarefree_part(sf.d[2]);
  for (int k = 3; k <= n; ++k) ordinary = ordinary && sf.d[k].degree() == 0;
  j["ordinary"] = ordinary;

  if (on("delta_factorization")) record(doc, check_delta_product(delta, sf));
  if (on("seed_independence")) {
    const std::uint64_t other = opt.seed ^ 0x9e3779b97f4a7c15ULL;
    const SingularFactorSet alt = singular_factors(s, n, b.mu, other);
    CheckResult c = make_check("seed_independence", same_factors(sf, alt));
    c.detail = "seeds " + std::to_string(opt.seed) + " and " + std::to_string(other);
    for (int k = 2; k <= n && !c.passed; ++k)
      if (sf.d[k] != alt.d[k]) c.witness.push_back({"d_" + std::to_string(k), to_string(sf.d[k]) + " vs " + to_string(alt.d[k])});
    record(doc, c);
  }
  if (on("hybrid_invariance")) {
    CheckResult c = make_check("hybrid_invariance", true);
    for (int jj = 0; jj <= b.mu; ++jj) {
      const SingularFactorSet h = singular_factors(build_hybrid(m, jj), n, b.mu, opt.seed + 1 + static_cast<std::uint64_t>(jj));
      if (!same_factors(sf, h)) {
        c.passed = false;
        c.witness.push_back({"j", std::to_string(jj)});
      }
    }
    c.detail = "j = 0.." + std::to_string(b.mu);
    record(doc, c);
  }
  if (on("fitting_ideals"))
    for (const auto& c : fitting_support_check(s, b.mu, delta)) record(doc, c);
  if (on("bezout_divisor_chain"))
    for (const auto& c : bezout_divisor_check(phi, sf, opt.max_enum)) record(doc, c);
  if (on("bezout_sylvester_relation")) record(doc, bezout_sylvester_check(phi, b));
  if (on("d_resultant_factorization")) record(doc, check_d_resultant_same_denominator(phi, sf));

  const StratifiedReport rep = stratification_report(phi, b, sf, opt.approx_roots);
  j["stratification"] = stratification_json(rep, opt.approx_roots);
  if (on("proper_point_divisibility")) record(doc, proper_point_divisibility_check(rep.split, sf));

  if (opt.dump_matrices) {
    j["matrices"] = {{"sylvester", matrix_json(s)}, {"bezout_fg", matrix_json(build_bezout_FG(phi))}};
    nlohmann::json hyb = nlohmann::json::object();
    for (int jj = 0; jj <= b.mu; ++jj) hyb[std::to_string(jj)] = matrix_json(build_hybrid(m, jj));
    j["matrices"]["hybrid"] = hyb;
  }
  return doc;
}

inline ReportDocument run_rational_pair(const InputSpec& spec, const PipelineOptions& opt) {
  const std::set<std::string> want = resolve_checks(opt.checks, InputMode::RationalPair);
  ReportDocument doc;
  auto& j = doc.json;
  j["version"] = kVersion;
  j["mode"] = to_string(InputMode::RationalPair);
  j["seed"] = opt.seed;
  j["input"] = {{"A", raw_json(spec.A)}, {"C", raw_json(spec.C)}, {"B", raw_json(spec.B)}, {"D", raw_json(spec.D)}};
  j["checks"] = nlohmann::json::object();

  const RationalFunctionPair rp(spec.A, spec.C, spec.B, spec.D);
  j["n1"] = rp.n1;
  j["n2"] = rp.n2;
  j["h"] = poly_json(rp.h);
  j["q"] = poly_json(rp.q);
  j["gcd_denominators"] = poly_json(rp.delta);
  const Parameterization nu = rp.nu();
  j["nu"] = {{"a", raw_json(nu.a)}, {"b", raw_json(nu.b)}, {"c", raw_json(nu.c)}, {"degree", nu.degree()}};
  const DResultantReport r = d_resultant_general(rp);
  j["d_resultant"] = poly_json(r.d_resultant);
  j["delta_nu"] = {{"degree", r.delta_nu.degree()}, {"coeffs", poly_json(r.delta_nu)}};
  if (want.count("d_resultant_general")) record(doc, r.check);
  return doc;
}

inline ReportDocument run_pipeline(const InputSpec& spec, const PipelineOptions& opt) {
  return spec.mode == InputMode::Projective ? run_projective(spec, opt) : run_rational_pair(spec, opt);
}

// ---------------------------------------------------------------------------
// Emission

inline std::string emit_json(const ReportDocument& doc) {
  nlohmann::json j = doc.json;
  j["status"] = doc.passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

namespace detail {

inline BiHomPoly from_json(const nlohmann::json& a, VarPair vars) {
  std::vector<Rat> c;
  for (const auto& x : a) c.push_back(parse_rat(x.get<std::string>()));
  return BiHomPoly(static_cast<int>(c.size()) - 1, c, vars);
}

}  // namespace detail

inline std::string emit_text(const ReportDocument& doc) {
  const auto& j = doc.json;
  std::ostringstream os;
  auto tu = [](const nlohmann::json& a) { return detail::from_json(a, VarPair::TU); };
  auto sv = [](const nlohmann::json& a) { return detail::from_json(a, VarPair::SV); };
  if (j["mode"] == "projective") {
    const int n = j["input"]["degree"];
    const int mu = j["mu"];
    os << "curve of degree " << n << " with mu = " << mu << "\n";
    os << "  a = " << to_string(sv(j["input"]["a"])) << "\n";
    os << "  b = " << to_string(sv(j["input"]["b"])) << "\n";
    os << "  c = " << to_string(sv(j["input"]["c"])) << "\n";
    os << "Delta has degree " << j["delta"]["degree"].get<int>() << "\n\n";
    os << "singular factors in (t,u):\n";
    for (int k = n; k >= 2; --k) {
      const BiHomPoly f = tu(j["d"][std::to_string(k)]);
      if (f.degree() > 0) os << "  d_" << k << " = " << factored_string(f) << "\n";
    }
    os << "  all other d_k = 1\n";
    os << "reduced singular factors:\n";
    for (int k = n; k >= 2; --k) {
      const BiHomPoly f = tu(j["reduced"][std::to_string(k)]);
      if (f.degree() > 0) os << "  d~_" << k << " = " << factored_string(f) << "\n";
    }
    os << "\n";
    const auto& st = j["stratification"];
    if (j["ordinary"].get<bool>()) os << "only ordinary singularities (d_2 square-free, d_k = 1 for k >= 3)\n";
    for (const auto& p : st["proper_points"]) {
      os << "proper point of multiplicity " << p["multiplicity"].get<int>() << " at (" << p["point"][0].get<std::string>() << " : "
         << p["point"][1].get<std::string>() << " : " << p["point"][2].get<std::string>() << "), parameter (t : u) = ("
         << p["parameter"][0].get<std::string>() << " : " << p["parameter"][1].get<std::string>() << "), H = "
         << factored_string(tu(p["H"])) << "\n";
    }
    for (const auto& a : st["atoms"]) {
      os << "factor " << a["factor_text"].get<std::string>() << ": exponents in d_k";
      for (const auto& [k, e] : a["exponent_d"].items()) os << " [" << k << "]=" << e.get<int>();
      const int pm = a["proper_multiplicity"];
      if (pm > 0) os << "; proper points of multiplicity " << pm;
      if (a["best_effort"].get<bool>()) os << " (best effort)";
      os << "\n";
      if (a.contains("roots"))
        for (const auto& r : a["roots"])
          os << "    t ~ " << r["t"][0].get<std::string>() << " + " << r["t"][1].get<std::string>() << "i\n";
    }
    for (const auto& s : st["strata"])
      if (s["point_count"].get<int>() > 0)
        os << "stratum k = " << s["k"].get<int>() << ": " << s["point_count"].get<int>() << " point(s) counted with branches\n";
    os << "genus budget: " << st["genus"]["tally"].get<int>() << " of " << st["genus"]["target"].get<int>()
       << (st["genus"]["ok"].get<bool>() ? " (exhausted)" : " (MISMATCH)") << "\n";
    for (const auto& f : st["flags"]) os << "note: " << f.get<std::string>() << "\n";
  } else {
    os << "rational pair with n1 = " << j["n1"].get<int>() << ", n2 = " << j["n2"].get<int>() << "\n";
    os << "  h = " << factored_string(sv(j["h"])) << ", q = " << factored_string(sv(j["q"]))
       << ", gcd of denominators = " << factored_string(sv(j["gcd_denominators"])) << "\n";
    os << "  Delta_nu has degree " << j["delta_nu"]["degree"].get<int>() << "\n";
  }
  os << "\nchecks:\n";
  if (doc.checks.empty()) os << "  (none)\n";
  for (const auto& c : doc.checks) {
    os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
    for (const auto& [k, v] : c.witness) os << "    " << k << ": " << v << "\n";
  }
  os << "status: " << (doc.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace curvesing
