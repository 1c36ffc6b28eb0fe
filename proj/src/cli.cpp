#include "lxmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lxmod/groupoid.hpp"
#include "lxmod/workspace.hpp"

namespace lxmod::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::string workspace_path;
  std::uint64_t budget = EnumerationOptions::kDefaultBudget;
  unsigned workers = 0;
  std::string format = "text";
  std::string kernel = "auto";
  std::string source, target, base, from, to, via, emit;
  std::vector<std::string> hom;

  bool structured() const { return format == "structured"; }

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.budget = budget;
    o.workers = workers;
    o.kernel = kernels::parse_isa(kernel);
    return o;
  }
};

Workspace load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

json matrix_json(const LinearMap& f) {
  json rows = json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json morphism_json(const CrossedMorphism& f) { return {{"f1", matrix_json(f.f1())}, {"f0", matrix_json(f.f0())}}; }

std::string morphism_text(const CrossedMorphism& f) { return "f1=" + f.f1().to_string() + " f0=" + f.f0().to_string(); }

std::string sizes_text(std::vector<std::size_t> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "]";
}

std::string indices_text(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

// One record per checked axiom: "<object> <axiom> PASS|FAIL [witness]".
struct CheckLog {
  json records = json::array();
  std::size_t failures = 0;

  void add(const std::string& object, const ValidationReport& report) {
    for (const auto& axiom : report.axioms()) {
      const auto failed = report.failures_of(axiom);
      json rec = {{"object", object}, {"axiom", axiom}, {"status", failed.empty() ? "PASS" : "FAIL"}};
      if (!failed.empty()) {
        rec["witness"] = failed.front().witness();
        rec["failures"] = failed.size();
        ++failures;
      }
      records.push_back(std::move(rec));
    }
  }

  void print(std::ostream& out, bool structured) const {
    if (structured) {
      out << json{{"checks", records}, {"ok", failures == 0}}.dump(2) << "\n";
      return;
    }
    for (const auto& rec : records) {
      out << rec["object"].get<std::string>() << " " << rec["axiom"].get<std::string>() << " "
          << rec["status"].get<std::string>();
      if (rec.contains("witness")) {
        out << " " << rec["witness"].get<std::string>();
        if (rec["failures"].get<std::size_t>() > 1) out << " (+" << rec["failures"].get<std::size_t>() - 1 << " more)";
      }
      out << "\n";
    }
    out << "checks=" << records.size() << " failures=" << failures << "\n";
  }
};

int cmd_validate(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  CheckLog log;
  for (const auto& [name, L] : ws.algebras) log.add("algebra:" + name, validate_lie_algebra(*L));
  for (const auto& [name, X] : ws.crossed_modules) {
    ValidationReport r = validate_action(X->action());
    r.merge(validate_crossed_module(*X));
    log.add("crossed_module:" + name, r);
  }
  for (const auto& [name, f] : ws.morphisms) log.add("morphism:" + name, validate_crossed_morphism(f));
  for (const auto& [name, cert] : ws.derivations) {
    log.add("derivation:" + name, is_f0_derivation(cert.d, ws.morphism(cert.base)));
  }
  log.print(out, s.structured());
  return log.failures == 0 ? kOk : kValidationFailure;
}

int cmd_enumerate_morphisms(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  const auto& X = ws.crossed_module(s.source);
  const auto& Y = ws.crossed_module(s.target);
  if (!ws.field.is_prime()) throw UnsupportedField("finite field required");
  const auto system = gf::compile_morphism_system(*X, *Y);
  const std::string space = candidate_space_size(system.modulus(), system.num_vars());
  const auto morphisms = enumerate_morphisms(X, Y, s.enumeration());
  if (s.structured()) {
    json list = json::array();
    for (const auto& f : morphisms) list.push_back(morphism_json(f));
    out << json{{"space", space}, {"morphisms", list}}.dump(2) << "\n";
  } else {
    out << "space=" << space << " morphisms=" << morphisms.size() << "\n";
    for (std::size_t i = 0; i < morphisms.size(); ++i) out << "morphism " << i << " " << morphism_text(morphisms[i]) << "\n";
  }
  return kOk;
}

int cmd_enumerate_derivations(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  const CrossedMorphism& f = ws.morphism(s.base);
  if (!ws.field.is_prime()) throw UnsupportedField("finite field required");
  const auto base_report = validate_crossed_morphism(f);
  if (!base_report.ok()) {
    out << "morphism:" << s.base << " invalid " << base_report.summary() << "\n";
    return kValidationFailure;
  }
  const auto system = gf::compile_derivation_system(f);
  const std::string space = candidate_space_size(system.modulus(), system.num_vars());
  const auto derivations = enumerate_derivations(f, s.enumeration());
  if (s.structured()) {
    json list = json::array();
    for (const auto& h : derivations) {
      list.push_back({{"d", matrix_json(h.d())}, {"target", morphism_json(detail::induced_morphism(f, h.d()))}});
    }
    out << json{{"space", space}, {"derivations", list}}.dump(2) << "\n";
  } else {
    out << "space=" << space << " derivations=" << derivations.size() << "\n";
    for (std::size_t i = 0; i < derivations.size(); ++i) {
      out << "derivation " << i << " d=" << derivations[i].d().to_string() << " target "
          << morphism_text(detail::induced_morphism(f, derivations[i].d())) << "\n";
    }
  }
  return kOk;
}

HomGroupoid build_from(const Settings& s, const Workspace& ws) {
  if (!ws.field.is_prime()) throw UnsupportedField("finite field required");
  return build_hom_groupoid(ws.crossed_module(s.hom.at(0)), ws.crossed_module(s.hom.at(1)), s.enumeration());
}

json groupoid_json(const HomGroupoid& G, const std::vector<std::vector<std::size_t>>& classes) {
  json objects = json::array();
  for (const auto& f : G.objects) objects.push_back(morphism_json(f));
  json arrows = json::array();
  for (const auto& a : G.arrows) arrows.push_back({{"src", a.source}, {"dst", a.target}, {"d", matrix_json(a.homotopy.d())}});
  return {{"objects", objects}, {"arrows", arrows}, {"classes", classes}};
}

int cmd_groupoid(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  const HomGroupoid G = build_from(s, ws);
  const ValidationReport report = validate_groupoid(G);
  const auto classes = report.ok() ? homotopy_classes(G) : std::vector<std::vector<std::size_t>>{};
  const json doc = groupoid_json(G, classes);
  if (!s.emit.empty()) {
    std::ofstream file(s.emit, std::ios::binary);
    if (!file) throw ParseError("", "cannot write '" + s.emit + "'");
    file << doc.dump(2) << "\n";
  }
  if (s.structured()) {
    json full = doc;
    full["valid"] = report.ok();
    if (!report.ok()) full["witness"] = report.summary();
    out << full.dump(2) << "\n";
  } else {
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    out << "objects=" << G.objects.size() << " arrows=" << G.arrows.size() << " groupoid="
        << (report.ok() ? "valid" : "invalid") << "\n";
    if (!report.ok()) {
      out << "witness " << report.summary() << "\n";
    } else {
      out << "classes=" << classes.size() << " sizes=" << sizes_text(sizes) << "\n";
    }
    for (std::size_t i = 0; i < G.objects.size(); ++i) out << "object " << i << " " << morphism_text(G.objects[i]) << "\n";
    for (std::size_t a = 0; a < G.arrows.size(); ++a) {
      out << "arrow " << a << " src=" << G.arrows[a].source << " dst=" << G.arrows[a].target
          << " d=" << G.arrows[a].homotopy.d().to_string() << "\n";
    }
    for (std::size_t c = 0; c < classes.size(); ++c) out << "class " << c << " members=" << indices_text(classes[c]) << "\n";
  }
  return report.ok() ? kOk : kValidationFailure;
}

int cmd_classes(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  const HomGroupoid G = build_from(s, ws);
  const auto classes = homotopy_classes(G);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  if (s.structured()) {
    std::sort(sizes.begin(), sizes.end());
    out << json{{"objects", G.objects.size()}, {"classes", classes}, {"sizes", sizes}}.dump(2) << "\n";
  } else {
    out << "objects=" << G.objects.size() << " classes=" << classes.size() << " sizes=" << sizes_text(sizes) << "\n";
  }
  return kOk;
}

int cmd_check_homotopy(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  const CrossedMorphism& f = ws.morphism(s.from);
  const CrossedMorphism& g = ws.morphism(s.to);
  const LinearMap& d = ws.derivation(s.via).d;
  const bool ok = connects(d, f, g);
  if (s.structured()) {
    json doc = {{"connects", ok}};
    if (!ok) {
      const auto law = is_f0_derivation(d, f);
      if (!law.ok()) doc["witness"] = law.summary();
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "connects=" << (ok ? "true" : "false") << "\n";
    if (!ok) {
      const CrossedMorphism induced = detail::induced_morphism(f, d);
      out << "equation g0=f0+bd'd " << (induced.f0() == g.f0() ? "PASS" : "FAIL") << "\n";
      out << "equation g1=f1+d.bd " << (induced.f1() == g.f1() ? "PASS" : "FAIL") << "\n";
      const auto law = is_f0_derivation(d, f);
      out << "derivation_law " << (law.ok() ? "PASS" : "FAIL " + law.failures().front().witness()) << "\n";
    }
  }
  return ok ? kOk : kValidationFailure;
}

int cmd_target(const Settings& s, std::ostream& out) {
  const Workspace ws = load(s.workspace_path);
  const CrossedMorphism& f = ws.morphism(s.from);
  const LinearMap& d = ws.derivation(s.via).d;
  try {
    const CrossedMorphism g = homotopy_target(f, d);
    if (s.structured()) {
      out << morphism_json(g).dump(2) << "\n";
    } else {
      out << morphism_text(g) << "\n";
    }
    return kOk;
  } catch (const DerivationLawViolated& e) {
    out << "derivation_law FAIL " << e.report().failures().front().witness() << "\n";
  } catch (const InvalidStructure& e) {
    out << "morphism:" << s.from << " invalid " << e.what() << "\n";
  }
  return kValidationFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Lie crossed modules: axiom validation, homotopies and Hom-groupoids"};
  app.require_subcommand(1);
  app.add_option("--budget", s.budget, "Largest candidate space to scan")->capture_default_str();
  app.add_option("--workers", s.workers, "Enumeration threads (0 = hardware)")->capture_default_str();
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_option("--kernel", s.kernel, "Enumeration kernel")->check(CLI::IsMember({"auto", "scalar", "avx2"}))->capture_default_str();

  const auto subcommand = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("workspace", s.workspace_path, "Workspace document (JSON)")->required();
    return sub;
  };
  CLI::App* validate = subcommand("validate", "Check every declared object against its axioms");
  CLI::App* enum_m = subcommand("enumerate-morphisms", "List all morphisms between two crossed modules");
  enum_m->add_option("--source", s.source)->required();
  enum_m->add_option("--target", s.target)->required();
  CLI::App* enum_d = subcommand("enumerate-derivations", "List all f0-derivations at a morphism");
  enum_d->add_option("--base", s.base)->required();
  CLI::App* groupoid = subcommand("groupoid", "Build and verify HOM(X, X')");
  groupoid->add_option("--hom", s.hom)->expected(2)->required();
  groupoid->add_option("--emit", s.emit, "Write the groupoid as JSON");
  CLI::App* classes = subcommand("classes", "Count homotopy classes in HOM(X, X')");
  classes->add_option("--hom", s.hom)->expected(2)->required();
  CLI::App* check = subcommand("check-homotopy", "Does a derivation connect two morphisms?");
  check->add_option("--from", s.from)->required();
  check->add_option("--to", s.to)->required();
  check->add_option("--via", s.via)->required();
  CLI::App* target = subcommand("target", "Morphism reached from a morphism along a derivation");
  target->add_option("--from", s.from)->required();
  target->add_option("--via", s.via)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(s, out);
    if (enum_m->parsed()) return cmd_enumerate_morphisms(s, out);
    if (enum_d->parsed()) return cmd_enumerate_derivations(s, out);
    if (groupoid->parsed()) return cmd_groupoid(s, out);
    if (classes->parsed()) return cmd_classes(s, out);
    if (check->parsed()) return cmd_check_homotopy(s, out);
    if (target->parsed()) return cmd_target(s, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const UnsupportedField& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace lxmod::cli
