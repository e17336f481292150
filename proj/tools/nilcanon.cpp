#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nilcanon/io.hpp"
#include "nilcanon/springer.hpp"

using namespace nilcanon;

namespace {

constexpr int kExitBadPartition = 2;
constexpr int kExitCharacteristic = 3;
constexpr int kExitParse = 4;
constexpr int kExitVerification = 5;

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BadPartition: return kExitBadPartition;
    case ErrorCode::SymmetricFormImpossible:
    case ErrorCode::CharacteristicTwo: return kExitCharacteristic;
    case ErrorCode::VerificationFailure: return kExitVerification;
    case ErrorCode::ParseError:
    case ErrorCode::NonPrime:
    case ErrorCode::NotPrimePower:
    case ErrorCode::TypeSizeMismatch:
    case ErrorCode::WrongField:
    case ErrorCode::NotSupported:
    case ErrorCode::TypeA: return kExitParse;
    default: return 1;
  }
}

struct Options {
  std::string type = "A";
  std::string partition;
  std::string field = "Q";
  std::optional<std::uint64_t> gu;
  int n = 0;
  std::string output = "text";
  std::optional<std::uint64_t> seed;
  bool show_script = false;
  bool unipotent = false;
  std::string matrix_file;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("NILCANON_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "NILCANON_SEED is not an integer");
    }
  }
  return 1;
}

bool is_unitary_field(const std::string& text) { return text.rfind("GU", 0) == 0; }

LieType lie_type(const Options& o, int n) {
  if (o.type.size() != 1) throw Error(ErrorCode::ParseError, "unknown Lie type '" + o.type + "'");
  return LieType::for_dimension(LieType::parse_kind(o.type), n);
}

CanonicalForm build_form(const Partition& mu, const Options& o) {
  const LieType type = lie_type(o, mu.n());
  if (is_unitary_field(o.field)) {
    if (type.kind != LieType::Kind::A)
      throw Error(ErrorCode::NotSupported, "GU fields only apply to type A");
    const Field field = FieldSpec::parse(o.field);
    return canonical_unitary_nilpotent(mu, field->base_order());
  }
  const Field field = FieldSpec::parse(o.field);
  if (type.kind == LieType::Kind::A) return canonical_gl(mu, field);
  return canonical_classical(mu, type, field);
}

void print_matrix(const Mat& m, const std::string& output) {
  if (output == "latex") std::cout << matrix_latex(m) << "\n";
  else std::cout << matrix_text(m);
}

Json script_json(const std::vector<ElementaryOp>& script) {
  Json ops = Json::array();
  for (const ElementaryOp& op : script) ops.push_back(op.describe());
  return ops;
}

std::vector<ElementaryOp> script_for(const Partition& mu, const Options& o) {
  const Field field = FieldSpec::parse(is_unitary_field(o.field) ? "Q" : o.field);
  const Mat x = generic_representative(mu, field, resolve_seed(o));
  return symmetrize(x, block_layout(mu)).script;
}

int run_form(const Options& o) {
  const Partition mu = Partition::parse(o.partition);
  const CanonicalForm form = build_form(mu, o);
  std::optional<std::vector<ElementaryOp>> script;
  if (o.show_script) {
    if (form.type.kind != LieType::Kind::A || form.variant != Variant::Symmetric)
      throw Error(ErrorCode::NotSupported, "--show-script applies to symmetric type A forms");
    script = script_for(mu, o);
  }
  if (o.output == "json") {
    Json j = form_json(form);
    if (script) j["script"] = script_json(*script);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "partition " << mu.to_string() << ", type " << form.type.to_string() << ", "
            << to_string(form.variant);
  if (form.alpha) std::cout << " (alpha = " << form.alpha->to_string() << ")";
  if (form.one_of_two) std::cout << ", one of the two very even orbits";
  std::cout << "\n";
  print_matrix(form.matrix, o.output);
  std::cout << certificate_text(form.certificate) << "\n";
  if (script) {
    std::cout << "elimination script (" << script->size() << " operations):\n";
    for (const ElementaryOp& op : *script) std::cout << "  " << op.describe() << "\n";
  }
  return 0;
}

UnipotentTarget unipotent_target(const Options& o, const LieType& type) {
  if (o.gu || is_unitary_field(o.field)) {
    if (type.kind != LieType::Kind::A)
      throw Error(ErrorCode::NotSupported, "GU targets only apply to type A");
    return UnipotentTarget::gu(o.gu ? *o.gu : FieldSpec::parse(o.field)->base_order());
  }
  const Field field = FieldSpec::parse(o.field);
  if (field->kind() != FieldKind::Prime)
    throw Error(ErrorCode::NotSupported, "unipotent targets need F<p> or GU<q>");
  if (type.kind == LieType::Kind::A) return UnipotentTarget::gl(field->characteristic());
  return UnipotentTarget::classical(type, field->characteristic());
}

Json unipotent_json(const UnipotentRep& rep, const LieType& type) {
  Json j;
  j["n"] = rep.mu.n();
  j["field"] = field_of(rep.u)->name();
  j["type"] = std::string(1, type.letter());
  j["partition"] = rep.mu.parts();
  j["group"] = rep.frobenius.kind == FrobeniusSpec::Kind::UnitaryTwisted
                   ? "GU" + std::to_string(rep.frobenius.q)
                   : (type.kind == LieType::Kind::A ? "GL" : type.to_string()) + "(" +
                         std::to_string(rep.frobenius.q) + ")";
  if (rep.alpha) j["alpha"] = rep.alpha->to_string();
  if (rep.jordan_fallback) j["nilpotent_form"] = "jordan";
  j["entries"] = matrix_entries_json(rep.u);
  j["jordan_type_u_minus_1"] = rep.mu.parts();
  j["group_fixed"] = rep.group_fixed;
  if (rep.preserves_form) j["preserves_form"] = *rep.preserves_form;
  return j;
}

void print_unipotent(const UnipotentRep& rep, const LieType& type, const Options& o) {
  if (o.output == "json") {
    std::cout << unipotent_json(rep, type).dump(2) << "\n";
    return;
  }
  std::cout << "partition " << rep.mu.to_string() << ", unipotent in "
            << unipotent_json(rep, type)["group"].get<std::string>();
  if (rep.alpha) std::cout << " (alpha = " << rep.alpha->to_string() << ")";
  if (rep.jordan_fallback) std::cout << ", from the Jordan form";
  std::cout << "\n";
  print_matrix(rep.u, o.output);
  std::cout << "jordan type of u-1 " << rep.jordan_type.to_string() << "; fixed by Frobenius "
            << (rep.group_fixed ? "yes" : "no");
  if (rep.preserves_form) std::cout << "; preserves form " << (*rep.preserves_form ? "yes" : "no");
  std::cout << "\n";
}

int run_unipotent(const Options& o) {
  const Partition mu = Partition::parse(o.partition);
  const LieType type = lie_type(o, mu.n());
  const UnipotentRep rep = unipotent_representative(mu, unipotent_target(o, type));
  print_unipotent(rep, type, o);
  return 0;
}

int run_enumerate(const Options& o) {
  if (o.n < 1) throw Error(ErrorCode::ParseError, "--n must be positive");
  const LieType type = lie_type(o, o.n);
  int status = 0;
  Json all = Json::array();
  for (const OrbitClass& cls : classify_orbits(o.n, type)) {
    try {
      if (o.unipotent) {
        const UnipotentRep rep = unipotent_representative(cls.mu, unipotent_target(o, type));
        if (o.output == "json") all.push_back(unipotent_json(rep, type));
        else print_unipotent(rep, type, o);
      } else {
        const CanonicalForm form = build_form(cls.mu, o);
        if (o.output == "json") {
          Json j = form_json(form);
          j["orbit_count"] = cls.orbit_count;
          all.push_back(std::move(j));
        } else {
          std::cout << "partition " << cls.mu.to_string();
          if (cls.orbit_count == 2) std::cout << " (two orbits; representative of one)";
          std::cout << "\n";
          print_matrix(form.matrix, o.output);
        }
      }
    } catch (const Error& e) {
      if (exit_code(e) != kExitCharacteristic) throw;
      status = kExitCharacteristic;
      if (o.output == "json") all.push_back({{"partition", cls.mu.parts()}, {"error", e.what()}});
      else std::cout << "partition " << cls.mu.to_string() << ": " << e.what() << "\n";
    }
    if (o.output != "json") std::cout << "\n";
  }
  if (o.output == "json") std::cout << all.dump(2) << "\n";
  return status;
}

int run_verify(const Options& o) {
  std::ifstream in(o.matrix_file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + o.matrix_file);
  Json document;
  try {
    document = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  const ParsedMatrix parsed = parse_matrix_json(document);
  if (parsed.matrix.rows() != parsed.matrix.cols())
    throw Error(ErrorCode::ParseError, "matrix is not square");
  const Index n = parsed.matrix.rows();

  std::optional<Certificate> claimed;
  if (document.contains("certificate")) claimed = parse_certificate_json(document["certificate"]);
  Partition mu;
  if (!o.partition.empty()) mu = Partition::parse(o.partition);
  else if (document.contains("partition")) mu = Partition(document["partition"].get<std::vector<int>>());
  else if (claimed) mu = claimed->jordan_type;
  else throw Error(ErrorCode::ParseError, "no partition given");
  if (mu.n() != n) throw Error(ErrorCode::ParseError, "partition does not match the matrix size");

  CertifyOptions options;
  options.expected = mu;
  std::string type_text = o.type;
  if (type_text == "A" && document.contains("type")) type_text = document["type"].get<std::string>();
  const LieType type = LieType::for_dimension(LieType::parse_kind(type_text), static_cast<int>(n));
  if (type.kind != LieType::Kind::A) {
    options.lie_type = type;
    options.form = structure_matrix(type, parsed.field).M;
  }
  if (parsed.field->kind() == FieldKind::QuadraticExt) options.q = parsed.field->base_order();

  Certificate cert;
  try {
    cert = certify(parsed.matrix, block_layout(mu), options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotNilpotent) throw;
    std::cerr << "verification failed: matrix is not nilpotent\n";
    return kExitVerification;
  }
  bool ok = cert.jordan_type == mu && cert.lie_condition.value_or(true);
  if (claimed) {
    // Compare only the fields the document claims.
    Certificate recomputed = cert;
    if (!claimed->dense_orbit) recomputed.dense_orbit.reset();
    if (!claimed->lie_condition) {
      recomputed.lie_condition.reset();
      recomputed.lie_type.reset();
    }
    if (!claimed->f_stable) {
      recomputed.f_stable.reset();
      recomputed.q.reset();
    }
    ok = ok && recomputed == *claimed;
  }
  if (o.output == "json") {
    Json j;
    j["verified"] = ok;
    j["certificate"] = certificate_json(cert);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << certificate_text(cert) << "\n" << (ok ? "verified" : "verification failed") << "\n";
  }
  return ok ? 0 : kExitVerification;
}

int run_layout(const Options& o) {
  const Partition mu = Partition::parse(o.partition);
  const BlockLayout layout = block_layout(mu);
  if (o.output == "json") std::cout << layout_json(layout).dump(2) << "\n";
  else std::cout << layout_text(layout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical representatives of nilpotent orbits and unipotent classes"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };

  CLI::App* form = app.add_subcommand("form", "canonical nilpotent representative");
  form->add_option("--type", o.type, "A, B, C or D");
  form->add_option("--partition", o.partition, "e.g. 4,4,2")->required();
  form->add_option("--field", o.field, "Q, F<p>, F<q>^2 or GU<q>");
  form->add_option("--seed", o.seed, "sampling seed for --show-script");
  form->add_flag("--show-script", o.show_script, "print the elimination script from a generic element");
  add_output(form);

  CLI::App* unip = app.add_subcommand("unipotent", "unipotent class representative");
  unip->add_option("--type", o.type, "A, B, C or D");
  unip->add_option("--partition", o.partition)->required();
  unip->add_option("--field", o.field, "F<p> or GU<q>");
  unip->add_option("--gu", o.gu, "q for GU_n(F_q)");
  add_output(unip);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all orbits of a given size");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--type", o.type, "A, B, C or D");
  enumerate->add_option("--field", o.field, "Q, F<p> or GU<q>");
  enumerate->add_option("--gu", o.gu, "q for GU_n(F_q)");
  enumerate->add_flag("--unipotent", o.unipotent, "list unipotent representatives");
  add_output(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "certify a matrix from a JSON document");
  verify->add_option("--matrix", o.matrix_file, "JSON file as written by form --output json")->required();
  verify->add_option("--partition", o.partition);
  verify->add_option("--type", o.type, "A, B, C or D");
  add_output(verify);

  CLI::App* layout = app.add_subcommand("layout", "block structure of g_2");
  layout->add_option("--partition", o.partition)->required();
  add_output(layout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitParse;
  }

  try {
    if (*form) return run_form(o);
    if (*unip) return run_unipotent(o);
    if (*enumerate) return run_enumerate(o);
    if (*verify) return run_verify(o);
    if (*layout) return run_layout(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
