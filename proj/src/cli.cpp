#include "homhopf/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "homhopf/document.hpp"
#include "homhopf/products.hpp"
#include "homhopf/rmatrix.hpp"

namespace homhopf {

using nlohmann::json;

namespace {

json sparse_json(const SparseVec& v) {
  json a = json::array();
  for (const auto& [i, c] : v.entries()) a.push_back(json::array({i, c.to_string()}));
  return a;
}

struct Outcome {
  std::vector<std::pair<AxiomReport, std::vector<std::string>>> reports;
  std::vector<std::string> notes;
  std::optional<std::string> output;
  std::optional<std::size_t> dim;
  std::optional<std::string> document;  // --json without -o
  std::optional<std::pair<std::string, std::string>> error;  // kind, message
  int code = kExitPass;
};

const char* verdict(int code) { return code == kExitPass ? "pass" : code == kExitViolation ? "fail" : "error"; }

void emit(const Outcome& o, const std::string& command, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    json j;
    j["command"] = command;
    j["verdict"] = verdict(o.code);
    j["exit_code"] = o.code;
    j["reports"] = json::array();
    for (const auto& [r, _] : o.reports) j["reports"].push_back(report_to_json(r));
    if (o.output) j["output"] = *o.output;
    if (o.dim) j["dim"] = *o.dim;
    if (o.document) j["document"] = json::parse(*o.document);
    if (o.error) j["error"] = {{"kind", o.error->first}, {"message", o.error->second}};
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [r, names] : o.reports) out << format_report(r, names);
  for (const auto& n : o.notes) out << n << "\n";
  if (o.error) err << "error: " << o.error->second << "\n";
}

HomAlgebra algebra_of(const AlgebraDocument& d) { return document_algebra(d); }

StructureTensor action_of(const AlgebraDocument& d, std::size_t d0, std::size_t d1, std::size_t d2,
                          const std::string& file) {
  if (!d.action) throw ParseError(file + ": field 'action': missing");
  return materialize(*d.action, d.field, d0, d1, d2, "action");
}

StructureTensor coaction_of(const AlgebraDocument& d, std::size_t nb, const std::string& file) {
  if (!d.coaction) throw ParseError(file + ": field 'coaction': missing");
  return materialize(*d.coaction, d.field, d.dim, d.dim, nb, "coaction");
}

// A copy fit to serve as a provenance base: structure only.
std::shared_ptr<AlgebraDocument> bare(const AlgebraDocument& d) {
  auto b = std::make_shared<AlgebraDocument>(d);
  b->action.reset();
  b->coaction.reset();
  b->r.reset();
  return b;
}

void require_inputs(const std::vector<std::string>& in, std::size_t n, const std::string& op) {
  if (in.size() != n)
    throw std::invalid_argument("--op " + op + " takes " + std::to_string(n) + " input file" + (n == 1 ? "" : "s") +
                                ", got " + std::to_string(in.size()));
}

void write_doc(Outcome& o, const AlgebraDocument& d, const std::optional<std::string>& path, std::ostream& out,
               bool as_json) {
  if (path) {
    save_document(d, *path);
    o.output = *path;
    o.notes.push_back("wrote " + *path + " (dim " + std::to_string(d.dim) + ")");
  } else if (!as_json) {
    out << serialize_document(d);
  } else {
    o.document = serialize_document(d);
  }
  o.dim = d.dim;
}

Outcome cmd_check(const std::string& file, const std::string& level, const CheckOptions& opts) {
  Outcome o;
  const AlgebraDocument doc = load_document(file);
  AxiomReport r;
  if (level == "algebra")
    r = check_hom_algebra(algebra_of(doc), opts);
  else if (level == "coalgebra")
    r = check_hom_coalgebra(document_coalgebra(doc), opts);
  else if (level == "bialgebra")
    r = check_hom_bialgebra(document_bialgebra(doc), opts);
  else
    r = check_hopf(document_hopf(doc), opts);
  o.code = r.passed() ? kExitPass : kExitViolation;
  o.reports.push_back({std::move(r), doc.basis});
  return o;
}

Outcome cmd_construct(const std::string& op, const std::vector<std::string>& inputs, const std::string& path,
                      const CheckOptions& opts, std::ostream& out, bool as_json) {
  Outcome o;
  AlgebraDocument result;
  if (op == "mirror") {
    require_inputs(inputs, 1, op);
    const AlgebraDocument h = load_document(inputs[0]);
    result = hopf_document(mirror_bicrossproduct(document_hopf(h), opts), smash_basis(h.basis, h.basis));
  } else {
    require_inputs(inputs, 2, op);
    const AlgebraDocument b = load_document(inputs[0]);
    const AlgebraDocument h = load_document(inputs[1]);
    if (b.field != h.field) throw FieldMismatch("input documents use different scalar fields");
    const std::size_t nb = b.dim, nh = h.dim;
    if (op == "smash") {
      const ModuleAction act{action_of(h, nh, nb, nb, inputs[1]), ActionSide::Left};
      HomAlgebra a = smash_product(algebra_of(b), document_bialgebra(h), act, opts);
      result.field = b.field;
      result.dim = a.dim;
      result.basis = smash_basis(b.basis, h.basis);
      result.mul = a.mul;
      result.unit = a.unit;
      result.alpha = a.alpha;
    } else if (op == "cosmash") {
      const Coaction co{coaction_of(h, nb, inputs[1])};
      HomCoalgebra c = smash_coproduct(document_bialgebra(b), document_coalgebra(h), co, opts);
      result.field = b.field;
      result.dim = c.dim;
      result.basis = smash_basis(b.basis, h.basis);
      result.has_algebra = false;
      result.mul = StructureTensor(b.field, c.dim, c.dim, c.dim);
      result.unit = Vec(b.field, c.dim);
      result.comul = c.comul;
      result.counit = c.counit;
      result.alpha = c.gamma;
    } else if (op == "bicross") {
      BicrossData d{document_hopf(b), document_hopf(h), ModuleAction{action_of(h, nh, nb, nb, inputs[1])},
                    Coaction{coaction_of(h, nb, inputs[1])}};
      result = hopf_document(bicrossproduct(d, opts), smash_basis(b.basis, h.basis));
    } else if (op == "dcp") {
      // The right action <| lives in the B document, the left action |> in the H document.
      MatchedPair p{document_hopf(b), document_hopf(h), action_of(h, nh, nb, nb, inputs[1]),
                    action_of(b, nh, nb, nh, inputs[0])};
      result = hopf_document(double_cross_product(p, opts), cross_basis(b.basis, h.basis));
    } else {
      throw std::invalid_argument("unknown --op '" + op + "'");
    }
  }
  result.provenance = DocumentProvenance{op, inputs, nullptr};
  write_doc(o, result, path, out, as_json);
  return o;
}

Outcome cmd_double(const std::string& file, const std::optional<std::string>& path, const CheckOptions& opts,
                   std::ostream& out, bool as_json) {
  Outcome o;
  const AlgebraDocument h = load_document(file);
  const HomHopfAlgebra d = drinfeld_double(document_hopf(h), opts);
  AlgebraDocument result = hopf_document(d, cross_basis(h.basis, dual_basis(h.basis)));
  result.provenance = DocumentProvenance{"drinfeld_double", {file}, bare(h)};
  write_doc(o, result, path, out, as_json);
  return o;
}

Outcome cmd_rcheck(const std::string& file, const std::optional<std::string>& r_file, bool canonical, bool qhybe,
                   const CheckOptions& opts) {
  Outcome o;
  const AlgebraDocument doc = load_document(file);
  auto host = std::make_shared<const HomHopfAlgebra>(document_hopf(doc));
  RVector r;
  if (canonical) {
    r = canonical_double_r(host);
  } else {
    std::optional<AlgebraDocument> other;
    if (r_file) other = load_document(*r_file);
    const AlgebraDocument& src = other ? *other : doc;
    const std::string where = r_file ? *r_file : file;
    if (!src.r) throw ParseError(where + ": field 'r': missing");
    if (src.dim != host->dim())
      throw DimMismatch(where + ": R document has dim " + std::to_string(src.dim) + ", host has " +
                        std::to_string(host->dim()));
    Vec c(host->field(), host->dim() * host->dim());
    for (const Entry2& e : *src.r) {
      if (e.c.field() != host->field()) throw FieldMismatch(where + ": R uses a different scalar field");
      c[pair_index(e.i, e.j, host->dim())] += e.c;
    }
    r = make_rvector(host, std::move(c));
  }
  o.reports.push_back({check_hopf(*host, opts), doc.basis});
  o.reports.push_back({check_quasitriangular(r, opts), doc.basis});
  if (qhybe) o.reports.push_back({check_qhybe(r, opts), doc.basis});
  bool ok = true;
  for (const auto& [rep, _] : o.reports) ok = ok && rep.passed();
  o.code = ok ? kExitPass : kExitViolation;
  return o;
}

Outcome cmd_example(const std::string& name, const std::optional<std::string>& path, std::ostream& out, bool as_json) {
  Outcome o;
  write_doc(o, builtin_example(name), path, out, as_json);
  return o;
}

std::string names_list() {
  std::string s;
  for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

json report_to_json(const AxiomReport& r) {
  json j;
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  j["violation_count"] = r.violation_count;
  j["identities"] = json::array();
  for (const auto& t : r.identities)
    j["identities"].push_back(
        {{"name", t.name}, {"instances", t.instances}, {"violations", t.violations}, {"passed", t.violations == 0}});
  j["violations"] = json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"identity", v.identity},
                               {"witness", v.witness},
                               {"dim", v.lhs.dim()},
                               {"lhs", sparse_json(v.lhs)},
                               {"rhs", sparse_json(v.rhs)}});
  return j;
}

std::vector<std::string> smash_basis(const std::vector<std::string>& b, const std::vector<std::string>& h) {
  std::vector<std::string> out;
  for (const auto& x : b)
    for (const auto& y : h) out.push_back(x + "#" + y);
  return out;
}

std::vector<std::string> cross_basis(const std::vector<std::string>& b, const std::vector<std::string>& h) {
  std::vector<std::string> out;
  for (const auto& x : b)
    for (const auto& y : h) out.push_back(x + "|" + y);
  return out;
}

std::vector<std::string> dual_basis(const std::vector<std::string>& h) {
  std::vector<std::string> out;
  for (const auto& x : h) out.push_back(x + "*");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure-constant kernel for monoidal Hom-Hopf algebras", "homhopf"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::size_t max_violations = kDefaultViolationCap;
  app.add_flag("--json", as_json, "Emit the result as JSON");
  app.add_option("--max-violations", max_violations, "Violations recorded per report")->check(CLI::PositiveNumber);

  std::string file, level = "hopf", op, name;
  std::vector<std::string> inputs;
  std::optional<std::string> out_path, r_file;
  bool canonical = false, qhybe = false;

  auto* check = app.add_subcommand("check", "Check the axioms of a document");
  check->add_option("file", file, "Document")->required();
  check->add_option("--level", level, "algebra, coalgebra, bialgebra or hopf")
      ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra", "hopf"}));

  auto* construct = app.add_subcommand("construct", "Build a product structure from documents");
  construct->add_option("--op", op, "smash, cosmash, bicross, mirror or dcp")
      ->required()
      ->check(CLI::IsMember({"smash", "cosmash", "bicross", "mirror", "dcp"}));
  construct->add_option("--inputs", inputs, "Input documents")->required()->expected(1, 2);
  construct->add_option("-o,--output", out_path, "Output document")->required();

  auto* dbl = app.add_subcommand("double", "Build the Drinfeld double");
  dbl->add_option("file", file, "Document")->required();
  dbl->add_option("-o,--output", out_path, "Output document")->required();

  auto* rcheck = app.add_subcommand("rcheck", "Check a quasitriangular structure");
  rcheck->add_option("file", file, "Host document")->required();
  auto* r_opt = rcheck->add_option("--r", r_file, "Document whose 'r' block is checked");
  rcheck->add_flag("--canonical", canonical, "Use the canonical R of a Drinfeld double")->excludes(r_opt);
  rcheck->add_flag("--qhybe", qhybe, "Also check the quantum Hom-Yang-Baxter equations");

  auto* example = app.add_subcommand("example", "Write a builtin example");
  example->add_option("--name", name, "One of: " + names_list())->required();
  example->add_option("-o,--output", out_path, "Output document (stdout if omitted)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitInputError;
  }

  const CheckOptions opts{max_violations};
  const std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  try {
    if (command == "check")
      o = cmd_check(file, level, opts);
    else if (command == "construct")
      o = cmd_construct(op, inputs, *out_path, opts, out, as_json);
    else if (command == "double")
      o = cmd_double(file, out_path, opts, out, as_json);
    else if (command == "rcheck")
      o = cmd_rcheck(file, r_file, canonical, qhybe, opts);
    else
      o = cmd_example(name, out_path, out, as_json);
  } catch (const AxiomFailure& e) {
    o = Outcome{};
    o.reports.push_back({e.report, {}});
    o.error = {{e.kind, e.what()}};
    o.code = kExitViolation;
  } catch (const NoAntipode& e) {
    o = Outcome{};
    o.error = {{"NoAntipode", e.what()}};
    o.code = kExitViolation;
  } catch (const NonUniqueAntipode& e) {
    o = Outcome{};
    o.error = {{"NonUniqueAntipode", e.what()}};
    o.code = kExitViolation;
  } catch (const UnknownExample& e) {
    o = Outcome{};
    o.error = {{"UnknownExample", std::string(e.what()) + " (known: " + names_list() + ")"}};
    o.code = kExitInputError;
  } catch (const ParseError& e) {
    o = Outcome{};
    o.error = {{"ParseError", e.what()}};
    o.code = kExitInputError;
  } catch (const FieldCharError& e) {
    o = Outcome{};
    o.error = {{"FieldCharError", e.what()}};
    o.code = kExitInputError;
  } catch (const MissingDoubleTag& e) {
    o = Outcome{};
    o.error = {{"MissingDoubleTag", e.what()}};
    o.code = kExitInputError;
  } catch (const SingularMap& e) {
    o = Outcome{};
    o.error = {{"SingularMap", e.what()}};
    o.code = kExitInputError;
  } catch (const std::exception& e) {
    o = Outcome{};
    o.error = {{"InputError", e.what()}};
    o.code = kExitInputError;
  }
  emit(o, command, as_json, out, err);
  return o.code;
}

}  // namespace homhopf
