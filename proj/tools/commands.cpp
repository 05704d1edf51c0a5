#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <variant>

#include <CLI11.hpp>

#include "adlie/catalog.hpp"
#include "adlie/construct.hpp"
#include "adlie/error.hpp"
#include "adlie/geometry.hpp"
#include "adlie/jmaps.hpp"
#include "adlie/liealg.hpp"
#include "adlie/linalg.hpp"
#include "adlie/rho.hpp"
#include "adlie/rmatrix.hpp"
#include "document.hpp"

namespace adlie::cli {

namespace {

struct Options {
  std::size_t dim = 0;
  std::string algebra;
  std::string algebra2;
  std::string rho;
  std::string inner = "identity";
  std::string matrix;
  std::string derivation;
  std::string out;
  bool json = false;
  unsigned seed = 7;
};

/// Where a command sends its result: the primary document goes to --out when
/// given, otherwise to stdout; text summaries are used unless --json is set.
class Emitter {
 public:
  Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void document(const Json& doc, const std::string& summary) {
    if (opt_.out.empty()) {
      out_ << doc.dump(2) << '\n';
      return;
    }
    std::ofstream f(opt_.out);
    if (!f) throw SchemaError("cannot write " + opt_.out);
    f << doc.dump(2) << '\n';
    if (opt_.json) {
      out_ << Json{{"written", opt_.out}, {"summary", summary}}.dump(2) << '\n';
    } else {
      out_ << summary << " (written to " << opt_.out << ")\n";
    }
  }

  /// Report on stdout, result document (if any) to --out.
  void report_with_document(const Json& rep, const std::string& text, const std::optional<Json>& doc) {
    if (!opt_.out.empty() && doc) {
      std::ofstream f(opt_.out);
      if (!f) throw SchemaError("cannot write " + opt_.out);
      f << doc->dump(2) << '\n';
    }
    out_ << (opt_.json ? rep.dump(2) + "\n" : text);
  }

  void report(const Json& rep, const std::string& text) {
    if (!opt_.out.empty()) {
      std::ofstream f(opt_.out);
      if (!f) throw SchemaError("cannot write " + opt_.out);
      f << rep.dump(2) << '\n';
    }
    if (opt_.json) {
      out_ << rep.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
}

BilinearSpace inner_from(const Options& opt, std::size_t dim) {
  if (opt.inner == "identity") return BilinearSpace::identity(dim);
  const Mat g = matrix_document_from(read_json_file(opt.inner));
  if (g.rows() != dim || g.cols() != dim) throw SchemaError(opt.inner + ": inner product has the wrong size");
  try {
    return BilinearSpace(g);
  } catch (const Error& e) {
    throw SchemaError(opt.inner + ": " + e.what());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json validation_json(const ValidationReport& r) {
  Json anti = Json::array();
  for (const auto& t : r.antisymmetry) anti.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  Json jac = Json::array();
  for (const auto& t : r.jacobi) jac.push_back({t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1});
  return Json{{"ok", r.ok()}, {"antisymmetry_violations", anti}, {"jacobi_violations", jac}};
}

Json series_json(const SeriesReport& s) {
  Json j;
  j["nilpotent"] = s.is_nilpotent();
  j["nilpotency_class"] = s.nilpotency_class ? Json(*s.nilpotency_class) : Json();
  j["two_step"] = s.is_two_step();
  j["center_dim"] = s.center.dim();
  j["commutator_dim"] = s.commutator.dim();
  j["corank"] = s.corank ? Json(*s.corank) : Json();
  return j;
}

Json invariance_json(const InvarianceReport& r) {
  Json j{{"ok", r.ok}};
  if (r.violation) j["violation"] = {(*r.violation)[0] + 1, (*r.violation)[1] + 1, (*r.violation)[2] + 1};
  return j;
}

Json descriptor_json(const IsometryDescriptor& d) {
  Json j;
  j["kind"] = d.kind == IsometryDescriptor::Kind::orthogonal_group ? "orthogonal_group" : "generic";
  if (d.kind == IsometryDescriptor::Kind::orthogonal_group) {
    j["p"] = d.p;
    j["q"] = d.q;
  }
  j["description"] = d.description;
  return j;
}

Json muller_json(const MullerReport& r) {
  return Json{{"ok", r.ok()}, {"orthogonal", r.orthogonal}, {"double_bracket", r.double_bracket}};
}

int cmd_generate(const Options& opt, std::ostream& out) {
  if (opt.dim == 0) throw CLI::ValidationError("--dim", "must be a positive integer");
  Emitter emit(opt, out);
  const auto result = generate(opt.dim);
  if (const auto* rho = std::get_if<RhoMap>(&result)) {
    const RhoReport r = validate_rho(*rho);
    if (!r.ok()) throw Error(Errc::InvariantBreach, "generated rho fails validation");
    emit.document(rho_json(*rho), "rho of dimension " + std::to_string(opt.dim));
    return kSuccess;
  }
  const auto& cert = std::get<NonexistenceCertificate>(result);
  emit.document(certificate_json(cert), "no admissible rho in dimension " + std::to_string(opt.dim) + ": " + cert.witness_rule);
  return kFailure;
}

int verify_rho(const Options& opt, std::ostream& out) {
  const RhoMap rho = rho_from(read_json_file(opt.rho));
  const RhoReport r = validate_rho(rho);
  Json ss = Json::array();
  for (const auto& [i, j] : r.ss_violations) ss.push_back({i + 1, j + 1});
  Json skew = Json::array();
  for (std::size_t i : r.skew_violations) skew.push_back(i + 1);
  Json rep{{"kind", "rho_report"}, {"ok", r.ok()}, {"skew", r.skew}, {"ss", r.ss}, {"injective", r.injective},
           {"skew_violations", skew}, {"ss_violations", ss}};
  std::string text = std::string("skew: ") + yes_no(r.skew) + "\nss: " + yes_no(r.ss) + "\ninjective: " +
                     yes_no(r.injective) + "\n" + (r.ok() ? "OK\n" : "FAILED\n");
  Emitter(opt, out).report(rep, text);
  return r.ok() ? kSuccess : kFailure;
}

/// Re-checks a normal-form document: rho, and the model rebuilt from rho,
/// corank and central gram.
int verify_normal_form(const Json& j, const Options& opt, std::ostream& out) {
  auto member = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw SchemaError(std::string("field /") + key + ": missing");
    return j.at(key);
  };
  if (!member("corank").is_number_unsigned()) throw SchemaError("field /corank: expected a non-negative integer");
  const std::size_t corank = member("corank").get<std::size_t>();
  const Mat central = matrix_from(member("central_gram"), "/central_gram");
  const RhoMap rho = rho_from(member("rho"));
  const MetricLieAlgebra model = metric_lie_from(member("model"));
  const Mat iso = matrix_from(member("iso"), "/iso");
  const RhoReport r = validate_rho(rho);
  bool rebuilt = false;
  if (r.ok()) {
    const MetricLieAlgebra expected = add_central_factor(modified_cotangent(rho), corank, central);
    rebuilt = expected.algebra == model.algebra && expected.gram() == model.gram();
  }
  const bool invariant = static_cast<bool>(is_ad_invariant(model));
  const bool iso_ok = iso.rows() == model.dim() && iso.cols() == model.dim() && is_invertible(iso);
  const bool ok = r.ok() && rebuilt && invariant && iso_ok;
  Json rep{{"kind", "normal_form_report"}, {"ok", ok},          {"rho_ok", r.ok()},
           {"model_rebuilt", rebuilt},     {"ad_invariant", invariant}, {"iso_invertible", iso_ok}};
  const std::string text = std::string("rho: ") + yes_no(r.ok()) + "\nmodel rebuilt: " + yes_no(rebuilt) +
                           "\nad-invariant: " + yes_no(invariant) + "\niso invertible: " + yes_no(iso_ok) + "\n" +
                           (ok ? "OK\n" : "FAILED\n");
  Emitter(opt, out).report(rep, text);
  return ok ? kSuccess : kFailure;
}

int verify_algebra(const Options& opt, std::ostream& out) {
  const Json input = read_json_file(opt.algebra);
  if (input.is_object() && input.value("kind", "") == "normal_form") return verify_normal_form(input, opt, out);
  const AlgebraDocument doc = parse_document(input);
  if (doc.kind == "rho") {
    Options o = opt;
    o.rho = opt.algebra;
    return verify_rho(o, out);
  }
  const ValidationReport v = validate(doc.algebra);
  Json rep{{"kind", "algebra_report"}, {"dim", doc.algebra.dim()}, {"validation", validation_json(v)}};
  std::string text = "dim: " + std::to_string(doc.algebra.dim()) + "\nLie algebra: " + yes_no(v.ok()) + "\n";
  bool ok = v.ok();
  if (v.ok()) {
    const SeriesReport s = series(doc.algebra);
    rep["series"] = series_json(s);
    text += std::string("two-step nilpotent: ") + yes_no(s.is_two_step()) + "\n";
    if (s.corank) text += "corank: " + std::to_string(*s.corank) + "\n";
  }
  if (doc.kind == "metric_lie") {
    const BilinearSpace metric(*doc.gram);
    const Signature sig = metric.signature();
    const bool nondeg = !sig.degenerate();
    rep["signature"] = {sig.positive, sig.negative, sig.zero};
    rep["nondegenerate"] = nondeg;
    const InvarianceReport inv = is_ad_invariant(doc.algebra, *doc.gram);
    rep["ad_invariant"] = invariance_json(inv);
    text += "signature: (" + std::to_string(sig.positive) + ", " + std::to_string(sig.negative) + ", " +
            std::to_string(sig.zero) + ")\n";
    text += std::string("ad-invariant: ") + yes_no(inv.ok) + "\n";
    ok = ok && nondeg && inv.ok;
    if (ok) {
      const PerpDualityReport p = check_perp_duality(MetricLieAlgebra(doc.algebra, metric));
      rep["perp_duality"] = p.ok();
      ok = p.ok();
    }
  }
  rep["ok"] = ok;
  text += ok ? "OK\n" : "FAILED\n";
  Emitter(opt, out).report(rep, text);
  return ok ? kSuccess : kFailure;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (!opt.rho.empty()) return verify_rho(opt, out);
  require(opt.algebra, "--algebra or --rho");
  return verify_algebra(opt, out);
}

int cmd_cotangent(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  const LieAlgebra h = lie_from(read_json_file(opt.algebra));
  if (!validate(h).ok()) throw Error(Errc::InvalidRho, "input is not a Lie algebra");
  const MetricLieAlgebra m = cotangent(h);
  Emitter(opt, out).document(metric_lie_json(m), "cotangent of dimension " + std::to_string(m.dim()));
  return kSuccess;
}

int cmd_modified_cotangent(const Options& opt, std::ostream& out) {
  require(opt.rho, "--rho");
  const MetricLieAlgebra m = modified_cotangent(rho_from(read_json_file(opt.rho)));
  Emitter(opt, out).document(metric_lie_json(m), "modified cotangent of dimension " + std::to_string(m.dim()));
  return kSuccess;
}

int cmd_double_extend(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  require(opt.derivation, "--derivation");
  const MetricLieAlgebra b = metric_lie_from(read_json_file(opt.algebra));
  const Mat s = matrix_document_from(read_json_file(opt.derivation));
  const MetricLieAlgebra ext = double_extension(b, s);
  Emitter(opt, out).document(metric_lie_json(ext), "double extension of dimension " + std::to_string(ext.dim()));
  return kSuccess;
}

int cmd_normal_form(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  const MetricLieAlgebra m = metric_lie_from(read_json_file(opt.algebra));
  const NormalFormResult nf = normal_form(m);
  Json doc{{"schema_version", kSchemaVersion},
           {"kind", "normal_form"},
           {"corank", nf.corank},
           {"central_gram", to_json(nf.central_gram)},
           {"rho", rho_json(nf.rho)},
           {"iso", to_json(nf.iso)},
           {"model", metric_lie_json(nf.model)}};
  Emitter(opt, out).document(doc, "corank " + std::to_string(nf.corank) + ", rho of dimension " +
                                      std::to_string(nf.rho.dim()));
  return kSuccess;
}

int cmd_decide(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  const LieAlgebra lie = lie_from(read_json_file(opt.algebra));
  if (!validate(lie).ok()) throw Error(Errc::InvalidRho, "input is not a Lie algebra");
  const BilinearSpace inner = inner_from(opt, lie.dim());
  const AdmitsDecision d = decide_admits_ad_invariant(lie, inner);
  Json rep{{"kind", "decision"}, {"admits", d.admits}};
  std::string text = std::string("admits ad-invariant metric: ") + yes_no(d.admits) + "\n";
  std::optional<Json> doc;
  if (d.admits) {
    doc = metric_lie_json(*d.metric);
    rep["metric"] = *doc;
    rep["s"] = to_json(d.s);
  } else {
    rep["failed"] = d.failed;
    text += "failed condition: " + d.failed + "\n";
    const JData j = compute_J(lie, inner);
    if (const auto w = singular_witness(j, opt.seed)) {
      Json z = Json::array();
      Json u = Json::array();
      for (const auto& c : w->first) z.push_back(to_string(c));
      for (const auto& c : w->second) u.push_back(to_string(c));
      rep["singular_witness"] = {{"z", z}, {"u", u}};
    }
  }
  if (d.family) rep["family_method"] = std::string(to_string(d.family->method));
  Emitter(opt, out).report_with_document(rep, text, doc);
  return d.admits ? kSuccess : kFailure;
}

int cmd_geom(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  const MetricLieAlgebra m = metric_lie_from(read_json_file(opt.algebra));
  const ConnectionCoeffs c = koszul(m);
  const bool invariant = static_cast<bool>(is_ad_invariant(m));
  const CurvatureResult cur = curvature(m);
  Json rep{{"kind", "geometry_report"},
           {"dim", m.dim()},
           {"ad_invariant", invariant},
           {"torsion_free", torsion_free(m.algebra, c)},
           {"metric_compatible", metric_compatible(m.gram(), c)},
           {"flat", cur.flat}};
  Json nabla = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) nabla.push_back(to_json(c.nabla(i)));
  rep["nabla"] = nabla;
  std::string text = std::string("ad-invariant: ") + yes_no(invariant) + "\nflat: " + yes_no(cur.flat) + "\n";
  if (invariant) {
    rep["curvature_matches_ad_formula"] = cur.matches_ad_formula.value_or(false);
    const RicciKilling rk = ricci_and_killing(m);
    rep["ricci"] = to_json(rk.ricci);
    rep["killing"] = to_json(rk.killing);
    rep["holonomy_dim"] = holonomy_span(m).size();
    rep["isometry"] = descriptor_json(isometry_descriptor(m));
    text += "holonomy dimension: " + std::to_string(rep["holonomy_dim"].get<std::size_t>()) + "\n";
    text += "isometries fixing the identity: " + isometry_descriptor(m).description + "\n";
  }
  Emitter(opt, out).report(rep, text);
  return kSuccess;
}

int cmd_rmatrix(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  require(opt.matrix, "--matrix");
  const MetricLieAlgebra g = metric_lie_from(read_json_file(opt.algebra));
  const Mat r = matrix_document_from(read_json_file(opt.matrix));
  const RBracketResult rb = r_bracket(g.algebra, r);
  const bool skew = is_skew(g.gram(), r);
  Json rep{{"kind", "rmatrix_report"},
           {"classical", rb.classical},
           {"skew", skew},
           {"r_bracket", lie_json(rb.bracket)},
           {"jacobi", validation_json(rb.jacobi)}};
  std::string text = std::string("classical: ") + yes_no(rb.classical) + "\nskew: " + yes_no(skew) + "\n";
  if (is_ad_invariant(g)) {
    const LiftResult lift = lift_r(g, r);
    rep["lift"] = {{"classical", lift.classical}, {"skew", lift.skew}, {"matrix", to_json(lift.lifted)}};
    text += std::string("lift classical: ") + yes_no(lift.classical) + "\nlift skew: " + yes_no(lift.skew) + "\n";
    if (skew) {
      const CobracketResult cb = coboundary(g, r);
      Json delta = Json::array();
      for (const Mat& d : cb.delta) delta.push_back(to_json(d));
      rep["cobracket"] = {{"delta", delta},
                          {"cocycle", cb.cocycle},
                          {"dual_jacobi", cb.dual_jacobi},
                          {"matches_r_bracket", cb.matches_r_bracket},
                          {"bialgebra", rb.classical && cb.cocycle && cb.dual_jacobi && cb.matches_r_bracket}};
      text += std::string("bialgebra: ") + yes_no(rb.classical && cb.cocycle && cb.dual_jacobi) + "\n";
    }
  }
  Emitter(opt, out).report(rep, text);
  return kSuccess;
}

int cmd_isometry(const Options& opt, std::ostream& out) {
  require(opt.algebra, "--algebra");
  const MetricLieAlgebra m = metric_lie_from(read_json_file(opt.algebra));
  const IsometryDescriptor d = isometry_descriptor(m);
  Json rep{{"kind", "isometry_report"}, {"descriptor", descriptor_json(d)}};
  std::string text = "isometries fixing the identity: " + d.description + "\n";
  bool ok = true;
  if (!opt.matrix.empty()) {
    const Mat a = matrix_document_from(read_json_file(opt.matrix));
    const MullerReport r = opt.algebra2.empty() ? muller_check(m, a)
                                                : muller_check(m, metric_lie_from(read_json_file(opt.algebra2)), a);
    rep["muller"] = muller_json(r);
    text += std::string("differential of an isometry: ") + yes_no(r.ok()) + "\n";
    ok = r.ok();
  } else if (!opt.algebra2.empty()) {
    const MetricLieAlgebra m2 = metric_lie_from(read_json_file(opt.algebra2));
    const Mat a = build_cross_isometry(m, m2);
    const MullerReport r = muller_check(m, m2, a);
    rep["cross_isometry"] = to_json(a);
    rep["muller"] = muller_json(r);
    text += std::string("cross isometry passes the Muller conditions: ") + yes_no(r.ok()) + "\n";
    ok = r.ok();
  }
  Emitter(opt, out).report(rep, text);
  return ok ? kSuccess : kFailure;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
      return kUsage;
    case Errc::InvariantBreach:
      return kInternal;
    default:
      return kFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact constructions for 2-step nilpotent Lie algebras with ad-invariant metrics", "adlie"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable output"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Write the result document to FILE"); };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", opt.seed, "Seed for randomized searches"); };
  std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> handlers;

  auto* gen = app.add_subcommand("generate", "Build an admissible rho of the given dimension");
  gen->add_option("--dim", opt.dim, "Dimension of V")->required();
  handlers.emplace_back(gen, cmd_generate);

  auto* ver = app.add_subcommand("verify", "Check a rho, Lie algebra or metric Lie algebra document");
  ver->add_option("--rho", opt.rho, "rho document");
  ver->add_option("--algebra", opt.algebra, "lie, metric_lie or rho document");
  handlers.emplace_back(ver, cmd_verify);

  auto* cot = app.add_subcommand("cotangent", "Cotangent algebra h* x h with the hyperbolic metric");
  cot->add_option("--algebra", opt.algebra, "lie document")->required();
  handlers.emplace_back(cot, cmd_cotangent);

  auto* mc = app.add_subcommand("modified-cotangent", "n(V, rho) from a rho document");
  mc->add_option("--rho", opt.rho, "rho document")->required();
  handlers.emplace_back(mc, cmd_modified_cotangent);

  auto* de = app.add_subcommand("double-extend", "Double extension by a skew derivation");
  de->add_option("--algebra", opt.algebra, "metric_lie document")->required();
  de->add_option("--derivation", opt.derivation, "matrix document")->required();
  handlers.emplace_back(de, cmd_double_extend);

  auto* nf = app.add_subcommand("normal-form", "Corank, rho and isometric isomorphism onto the model");
  nf->add_option("--algebra", opt.algebra, "metric_lie document")->required();
  handlers.emplace_back(nf, cmd_normal_form);

  auto* dec = app.add_subcommand("decide", "Decide whether a 2-step algebra admits an ad-invariant metric");
  dec->add_option("--algebra", opt.algebra, "lie or metric_lie document")->required();
  dec->add_option("--inner", opt.inner, "identity, or a matrix document with an inner product");
  add_seed(dec);
  handlers.emplace_back(dec, cmd_decide);

  auto* geo = app.add_subcommand("geom", "Levi-Civita connection, curvature, Ricci and isometry data");
  geo->add_option("--algebra", opt.algebra, "metric_lie document")->required();
  handlers.emplace_back(geo, cmd_geom);

  auto* rm = app.add_subcommand("rmatrix", "r-bracket, lift to the modified cotangent and cobracket");
  rm->add_option("--algebra", opt.algebra, "metric_lie document")->required();
  rm->add_option("--matrix", opt.matrix, "matrix document for r")->required();
  handlers.emplace_back(rm, cmd_rmatrix);

  auto* iso = app.add_subcommand("isometry", "Isometry descriptor, Muller check, cross isometry");
  iso->add_option("--algebra", opt.algebra, "metric_lie document")->required();
  iso->add_option("--algebra2", opt.algebra2, "second metric_lie document");
  iso->add_option("--matrix", opt.matrix, "matrix document to test");
  handlers.emplace_back(iso, cmd_isometry);

  for (auto& [sub, fn] : handlers) {
    add_json(sub);
    add_out(sub);
    if (sub != dec) add_seed(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  for (auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return fn(opt, out);
    } catch (const SchemaError& e) {
      err << "schema error: " << e.what() << '\n';
      return kUsage;
    } catch (const CLI::Error& e) {
      err << "usage error: " << e.what() << '\n';
      return kUsage;
    } catch (const Error& e) {
      const int code = exit_code_for(e.code());
      err << (code == kInternal ? "internal error: " : "failed: ") << e.what() << '\n';
      return code;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    }
  }
  return kUsage;
}

}  // namespace adlie::cli
