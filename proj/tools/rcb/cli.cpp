#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rcb/assembler.hpp"
#include "rcb/catalog.hpp"
#include "rcb/conics.hpp"
#include "rcb/invariant_rings.hpp"
#include "rcb/json_io.hpp"
#include "rcb/lens.hpp"
#include "rcb/reps.hpp"
#include "rcb/surgery.hpp"

namespace rcb::cli {
namespace {

struct RunConfig {
  std::string format = "json";
  double tolerance = 1e-9;
  std::string input_path;
};

// Result of one subcommand: a JSON report, its text rendering, and whether
// validation violations were found.
struct Report {
  Json json;
  std::string text;
  bool violations = false;
};

std::string read_document(const RunConfig& cfg, const std::vector<std::string>& inline_doc, std::istream& in) {
  if (!inline_doc.empty() && !cfg.input_path.empty())
    throw ValidationError("give the document either inline or with --input, not both");
  if (!inline_doc.empty()) {
    std::string joined;
    for (const auto& part : inline_doc) joined += part + " ";
    return joined;
  }
  if (cfg.input_path.empty()) throw ValidationError("missing input document (inline JSON, --input <path> or --input -)");
  if (cfg.input_path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(cfg.input_path);
  if (!file) throw ValidationError("cannot read input file '" + cfg.input_path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string violations_text(const std::vector<Violation>& vs) {
  if (vs.empty()) return "no violations\n";
  std::ostringstream os;
  for (const auto& v : vs) {
    os << "violation [" << v.clause << "]";
    if (v.component >= 0) os << " component " << v.component;
    os << ": " << v.message << "\n";
  }
  return os.str();
}

Report cmd_decompose(const std::string& doc) {
  const SurgeryProblem p = surgery_problem_from_json(parse_json(doc));
  const ManifoldType m = decompose(p);
  const AbelianGroup h1 = h1_of_manifold_type(m);
  Report r;
  r.json = {{"problem", to_json(p)}, {"manifold", to_json(m)}, {"h1", to_json(h1)}};
  r.text = "M   = " + to_string(m) + "\nH_1 = " + h1.to_string() + "\n";
  return r;
}

Report cmd_lens(std::int64_t p, std::int64_t q) {
  const LensSpace l = canonicalize_lens(p, q);
  Report r;
  r.json = {{"input", {p, q}}, {"canonical", to_json(l)}, {"name", l.to_string()}, {"h1_order", h1_order(l)}};
  const std::int64_t order = h1_order(l);
  r.text = l.to_string() + "  |H_1| = " + (order == 0 ? std::string("infinite") : std::to_string(order)) + "\n";
  return r;
}

Report cmd_reps(std::int64_t a, std::int64_t m, std::optional<std::int64_t> b, const std::string& central,
                bool isolated, double tolerance) {
  if (m < 1) throw ValidationError("m must be >= 1");
  Report r;
  std::ostringstream text;
  const InvariantQuadrics q = invariant_quadrics(a, m);
  r.json = {{"a", a}, {"m", m}, {"quadrics", to_json(q)}};
  text << "S^2(1(z) + R_{" << a << "," << m << "}(x,y)):\n";
  std::size_t width = 0;
  for (const auto& s : q.summands) width = std::max(width, s.label.size());
  for (const auto& s : q.summands)
    text << "  " << std::left << std::setw(static_cast<int>(width)) << s.label << "  = " << s.rep.to_string()
         << (s.invariant ? "   invariant" : "") << "\n";

  const CentralConicShape shape = admissible_central_conic(a, m, isolated);
  r.json["central_shape"] = {{"admissible", shape.admissible}, {"form", shape.form}, {"reason", shape.reason},
                             {"isolated_fixed_points", isolated}};
  text << "central conic: " << (shape.admissible ? shape.form : "none (" + shape.reason + ")") << "\n";

  if (b) {
    const RepMultiset dec = decompose_tensor(a, *b, m);
    const double residual = tensor_character_residual(a, *b, m);
    const bool ok = residual <= tolerance;
    r.json["tensor"] = to_json(dec);
    r.json["character_check"] = {{"residual", residual}, {"tolerance", tolerance}, {"pass", ok}};
    r.violations = !ok;
    text << "R_{" << *b << "," << m << "} (x) S^2(1 + R_{" << a << "," << m << "}) = " << dec.to_string() << "\n";
    text << "character check: " << (ok ? "pass" : "FAIL") << " (residual " << residual << ")\n";
  }
  if (!central.empty()) {
    if (!b) throw ValidationError("--central needs --b");
    const EquivariantNormalForm nf = classify_equivariant_conic(m, a, *b, parse_central_conic(central));
    r.json["normal_form"] = {{"case", to_string(nf.kind)}, {"equation", nf.equation}, {"reason", nf.reason}};
    text << "normal form: " << to_string(nf.kind);
    if (!nf.equation.empty()) text << "  Y = (" << nf.equation << " = 0)";
    text << "  [" << nf.reason << "]\n";
  }
  r.text = text.str();
  return r;
}

Report cmd_invariants(std::int64_t n) {
  if (n < 1) throw ValidationError("n must be >= 1");
  const auto un = static_cast<unsigned>(n);
  const IntPolynomial x = generator_xn(un);
  const IntPolynomial y = generator_yn(un);
  const bool relation = verify_relation(un);
  Json tower = Json::array();
  std::ostringstream text;
  text << "x_" << n << " = " << x.to_string() << "\n"
       << "y_" << n << " = " << y.to_string() << "\n"
       << "z   = " << generator_z().to_string() << "\n"
       << "x_n^2 + y_n^2 - z^n = 0: " << (relation ? "true" : "false") << "\n"
       << "quotients:\n";
  for (const auto& c : cover_degree_tower(n)) {
    tower.push_back(to_json(c));
    text << "  " << c.label << "  degree " << c.degree << "\n";
  }
  Report r;
  r.json = {{"n", n},          {"x_n", x.to_string()}, {"y_n", y.to_string()}, {"z", generator_z().to_string()},
            {"relation", relation}, {"tower", tower}};
  r.violations = !relation;
  r.text = text.str();
  return r;
}

Json matrix_json(const ConicForm& q) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_string(q(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Report conic_report(const ConicForm& q) {
  const Signature sig = signature(q);
  const FiberType t = classify_conic(q);
  Report r;
  r.json = {{"matrix", matrix_json(q)},
            {"signature", {{"positive", sig.positive}, {"negative", sig.negative}, {"rank", sig.rank()}}},
            {"type", to_string(t)}};
  r.text = to_string(t) + "  (rank " + std::to_string(sig.rank()) + ", signature (" + std::to_string(sig.positive) +
           "," + std::to_string(sig.negative) + "))\n";
  return r;
}

Report cmd_family(const std::string& form, const std::vector<std::string>& at) {
  const ConicFamily f = ConicFamily::from_form(form);
  const IntPolynomial disc = discriminant_polynomial(f);
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(f(i, j).to_string());
    rows.push_back(row);
  }
  Report r;
  r.json = {{"matrix", rows}, {"discriminant", disc.to_string()}};
  r.text = "discriminant = " + disc.to_string() + "\n";
  if (!at.empty()) {
    if (at.size() != 2) throw ValidationError("--at takes two rationals s t");
    const Rational s = parse_rational(at[0]);
    const Rational t = parse_rational(at[1]);
    const FiberType type = classify_family_over_point(f, s, t);
    r.json["point"] = {to_string(s), to_string(t)};
    r.json["type"] = to_string(type);
    r.text += "fiber over (" + to_string(s) + ", " + to_string(t) + "): " + to_string(type) + "\n";
    if (type != FiberType::DoubleLine) {
      const auto model = local_model_at(f, s, t);
      r.json["local_model"] = to_string(model.kind);
      r.text += "local model: " + to_string(model.kind) + "\n";
    } else {
      r.json["local_model"] = nullptr;
    }
  }
  return r;
}

Report cmd_duval(const std::string& descriptor) {
  const DuValType t = duval_classify(descriptor);
  Report r;
  r.json = {{"type", t.to_string()}, {"normal_form", t.equation()}};
  r.text = t.to_string() + "  (" + t.equation() + " = 0)\n";
  return r;
}

Report cmd_seifert_base(std::int64_t m) {
  const QuotientSingularity q = seifert_quotient_base_singularity(m);
  Report r;
  r.json = {{"equation", q.equation}, {"type", q.duval.to_string()}, {"separating_capable", q.separating_capable}};
  r.text = q.equation + " = 0  " + q.duval.to_string() + (q.separating_capable ? "  separating-capable" : "") + "\n";
  return r;
}

Report cmd_assemble(const std::string& doc) {
  const FibrationDescriptor f = fibration_from_json(parse_json(doc));
  Assembly a = assemble(f);
  for (auto& v : over_one_component_check(f)) a.violations.push_back(std::move(v));
  Report r;
  r.json = to_json(a);
  std::ostringstream text;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    text << "component " << i << ": " << to_string(a.components[i]) << "\n";
    if (a.components[i].note) text << "  note: " << *a.components[i].note << "\n";
  }
  text << violations_text(a.violations);
  r.text = text.str();
  r.violations = !a.violations.empty();
  return r;
}

Report cmd_validate_surface(const std::string& doc) {
  const auto vs = validate_surface(surface_component_from_json(parse_json(doc)));
  Report r;
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  r.json = {{"violations", arr}};
  r.text = violations_text(vs);
  r.violations = !vs.empty();
  return r;
}

Report cmd_torus_quotient(const std::vector<std::int64_t>& entries) {
  const Mat2 a{entries[0], entries[1], entries[2], entries[3]};
  const TorusQuotient t = torus_quotient(a);
  Report r;
  r.json = to_json(t);
  std::ostringstream text;
  text << "order " << t.order << "\nmultiplicities (";
  for (std::size_t i = 0; i < t.multiplicities.size(); ++i) text << (i ? "," : "") << t.multiplicities[i];
  text << ")\norbifold Euler characteristic " << to_string(t.orbifold_euler) << "\n";
  if (t.reflector_circles > 0) text << "reflector circles " << t.reflector_circles << "\n";
  r.text = text.str();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surgery calculus, representations and conic classification for real conic bundles", "rcb"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", cfg.tolerance, "Tolerance of numeric oracles, in (0, 1e-3]");
  app.add_option("--input", cfg.input_path, "Read the JSON document from a file, '-' for stdin");

  std::vector<std::string> doc;
  std::vector<std::int64_t> ints;
  std::optional<std::int64_t> rep_b;
  std::string central;
  bool isolated = true;
  std::vector<std::string> conic_entries;
  std::string form;
  std::string family;
  std::vector<std::string> at;
  std::string duval;
  std::optional<std::int64_t> seifert_base;

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a surgery problem given as JSON");
  decompose_cmd->add_option("document", doc, "Inline JSON document");

  auto* lens_cmd = app.add_subcommand("lens", "Canonical lens space L_{p,q}");
  lens_cmd->add_option("values", ints, "p q")->expected(2)->required();

  auto* reps_cmd = app.add_subcommand("reps", "Quadratic forms on 1 + R_{a,m} and the tensor decomposition");
  reps_cmd->add_option("values", ints, "a m")->expected(2)->required();
  reps_cmd->add_option("--b", rep_b, "Rotation index of the base representation R_{b,m}");
  reps_cmd->add_option("--central", central, "Central conic: smooth, smooth-empty, line-pair or double-line");
  reps_cmd->add_flag("!--non-isolated", isolated, "Drop the isolated fixed point hypothesis");

  auto* inv_cmd = app.add_subcommand("invariants", "Invariant generators of the rotation action of Z_n");
  inv_cmd->add_option("n", ints)->expected(1)->required();

  auto* conic_cmd = app.add_subcommand("classify-conic", "Classify a conic, a conic family or a Du Val form");
  conic_cmd->add_option("entries", conic_entries, "Nine rationals, row-major symmetric");
  conic_cmd->add_option("--form", form, "Quadratic form in x, y, z");
  conic_cmd->add_option("--family", family, "Quadratic form in x, y, z with coefficients in s, t");
  conic_cmd->add_option("--at", at, "Base point s t for --family")->expected(2);
  conic_cmd->add_option("--duval", duval, "Du Val normal form in x, y, z");
  conic_cmd->add_option("--seifert-base", seifert_base, "Base singularity of a Seifert fiber of multiplicity m");

  auto* assemble_cmd = app.add_subcommand("assemble", "Assemble a fibration descriptor given as JSON");
  assemble_cmd->add_option("document", doc, "Inline JSON document");

  auto* validate_cmd = app.add_subcommand("validate-surface", "Check a surface component descriptor");
  validate_cmd->add_option("document", doc, "Inline JSON document");

  auto* torus_cmd = app.add_subcommand("torus-quotient", "Seifert data of (T^2 x S^1)/Z_m for a matrix a b c d");
  torus_cmd->add_option("entries", ints)->expected(4)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rcb: " << e.what() << "\n\n" << app.help();
    return kMalformed;
  }

  try {
    if (!(cfg.tolerance > 0.0 && cfg.tolerance <= 1e-3)) throw ValidationError("--tolerance must lie in (0, 1e-3]");
    Report r;
    if (decompose_cmd->parsed()) {
      r = cmd_decompose(read_document(cfg, doc, in));
    } else if (lens_cmd->parsed()) {
      r = cmd_lens(ints[0], ints[1]);
    } else if (reps_cmd->parsed()) {
      r = cmd_reps(ints[0], ints[1], rep_b, central, isolated, cfg.tolerance);
    } else if (inv_cmd->parsed()) {
      r = cmd_invariants(ints[0]);
    } else if (conic_cmd->parsed()) {
      const int modes = !conic_entries.empty() + !form.empty() + !family.empty() + !duval.empty() +
                        seifert_base.has_value();
      if (modes != 1)
        throw ValidationError("classify-conic takes exactly one of: nine entries, --form, --family, --duval, --seifert-base");
      if (!at.empty() && family.empty()) throw ValidationError("--at needs --family");
      if (!conic_entries.empty()) {
        std::vector<Rational> e;
        for (const auto& s : conic_entries) e.push_back(parse_rational(s));
        r = conic_report(ConicForm::make(e));
      } else if (!form.empty()) {
        r = conic_report(ConicForm::from_polynomial(form));
      } else if (!family.empty()) {
        r = cmd_family(family, at);
      } else if (!duval.empty()) {
        r = cmd_duval(duval);
      } else {
        r = cmd_seifert_base(*seifert_base);
      }
    } else if (assemble_cmd->parsed()) {
      r = cmd_assemble(read_document(cfg, doc, in));
    } else if (validate_cmd->parsed()) {
      r = cmd_validate_surface(read_document(cfg, doc, in));
    } else if (torus_cmd->parsed()) {
      r = cmd_torus_quotient(ints);
    }
    if (cfg.format == "json")
      out << r.json.dump(2) << "\n";
    else
      out << r.text;
    return r.violations ? kViolations : kOk;
  } catch (const std::exception& e) {
    err << "rcb: " << e.what() << "\n";
    return kMalformed;
  }
}

}  // namespace rcb::cli
