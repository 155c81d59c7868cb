#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tatecoh/tatecoh.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string format = "text";
  std::string module = "trivial";
  std::string engine = "minimal";
  std::string which = "all";
  int from = -4;
  int to = 4;
  int upto = 4;
  int cap = 8;
  int i = 2;
  int j = 2;
  bool representatives = false;
  uint64_t seed = 0;
};

class Failure {
 public:
  Failure(int exit_code, std::string message) : exit_code(exit_code), message(std::move(message)) {}
  int exit_code;
  std::string message;
};

int exit_for(tc_status s) {
  switch (s) {
    case TC_ERR_PARSE:
    case TC_ERR_INVALID_FIELD:
    case TC_ERR_INVALID_ARGUMENT:
    case TC_ERR_NOT_HOPF:
    case TC_ERR_NO_PRIMITIVE_ROOT:
    case TC_ERR_SHAPE_MISMATCH:
      return kExitInput;
    default:
      return kExitFail;
  }
}

void check(tc_status s) {
  if (s != TC_OK) throw Failure(exit_for(s), tc_last_error_message());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  tc_string_free(s);
  return out;
}

using InputPtr = std::unique_ptr<tc_input, decltype(&tc_input_free)>;
using ModulePtr = std::unique_ptr<tc_module, decltype(&tc_module_free)>;
using TablePtr = std::unique_ptr<tc_table, decltype(&tc_table_free)>;

InputPtr load(const Options& o) {
  tc_input* in = nullptr;
  check(tc_input_load(o.input.c_str(), &in));
  return InputPtr(in, tc_input_free);
}

tc_format format_of(const Options& o) { return o.format == "json" ? TC_FORMAT_JSON : TC_FORMAT_TEXT; }

void check_range(const Options& o) {
  if (o.from > o.to) throw Failure(kExitInput, "--from must not exceed --to");
  if (std::abs(o.from) > o.cap || std::abs(o.to) > o.cap)
    throw Failure(kExitInput, "degree range exceeds the cap of " + std::to_string(o.cap) + " (use --cap)");
}

ModulePtr module_for(const tc_input* in, const std::string& which) {
  tc_module* m = nullptr;
  if (which == "trivial")
    check(tc_module_trivial(in, &m));
  else if (which == "adjoint")
    check(tc_module_adjoint(in, &m));
  else if (which == "counit-kernel")
    check(tc_module_counit_kernel(in, &m));
  else if (which == "regular")
    check(tc_module_regular(in, &m));
  else
    check(tc_module_load(in, which.c_str(), &m));
  return ModulePtr(m, tc_module_free);
}

tc_engine engine_of(const std::string& e) { return e == "free" ? TC_ENGINE_FREE : TC_ENGINE_MINIMAL; }

int cmd_list() {
  char* out = nullptr;
  check(tc_builtin_names(&out));
  std::cout << take(out);
  return kExitOk;
}

int cmd_validate(const Options& o) {
  auto in = load(o);
  int valid = 0;
  char* report = nullptr;
  check(tc_input_validate(in.get(), &valid, &report));
  std::string text = take(report);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["input"] = o.input;
    j["valid"] = valid != 0;
    j["violations"] = nlohmann::json::array();
    if (!valid) {
      std::size_t pos = 0, next;
      while ((next = text.find('\n', pos)) != std::string::npos) {
        j["violations"].push_back(text.substr(pos, next - pos));
        pos = next + 1;
      }
    }
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << text;
  }
  return valid ? kExitOk : kExitFail;
}

int cmd_info(const Options& o) {
  auto in = load(o);
  char* out = nullptr;
  check(tc_input_info(in.get(), format_of(o), &out));
  std::cout << take(out);
  return kExitOk;
}

int cmd_export(const Options& o) {
  auto in = load(o);
  char* out = nullptr;
  check(tc_input_export(in.get(), &out));
  std::cout << take(out);
  return kExitOk;
}

template <class Compute>
int emit_tables(const Options& o, Compute&& compute) {
  check_range(o);
  if (o.engine != "both") {
    TablePtr t = compute(engine_of(o.engine));
    char* out = nullptr;
    check(tc_table_render(t.get(), format_of(o), o.representatives, &out));
    std::cout << take(out);
    return kExitOk;
  }
  TablePtr a = compute(TC_ENGINE_MINIMAL);
  TablePtr b = compute(TC_ENGINE_FREE);
  bool match = true;
  for (int n = o.from; n <= o.to; ++n) {
    size_t da = 0, db = 0;
    check(tc_table_dim(a.get(), n, &da));
    check(tc_table_dim(b.get(), n, &db));
    match = match && da == db;
  }
  char* ra = nullptr;
  char* rb = nullptr;
  check(tc_table_render(a.get(), format_of(o), o.representatives, &ra));
  check(tc_table_render(b.get(), format_of(o), o.representatives, &rb));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["minimal"] = nlohmann::ordered_json::parse(take(ra));
    j["free"] = nlohmann::ordered_json::parse(take(rb));
    j["match"] = match;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << take(ra) << "\n" << take(rb) << "\nengines: " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitFail;
}

int cmd_tate(const Options& o) {
  auto in = load(o);
  auto m = module_for(in.get(), o.module);
  if (o.engine == "spliced") {
    check_range(o);
    if (o.module != "trivial") throw Failure(kExitInput, "the spliced engine takes trivial coefficients only");
    tc_table* t = nullptr;
    check(tc_tate_spliced(in.get(), o.from, o.to, &t));
    TablePtr p(t, tc_table_free);
    char* out = nullptr;
    check(tc_table_render(p.get(), format_of(o), 0, &out));
    std::cout << take(out);
    return kExitOk;
  }
  return emit_tables(o, [&](tc_engine e) {
    tc_table* t = nullptr;
    check(tc_tate_cohomology(in.get(), m.get(), o.from, o.to, e, &t));
    return TablePtr(t, tc_table_free);
  });
}

int cmd_hochschild(const Options& o) {
  auto in = load(o);
  return emit_tables(o, [&](tc_engine e) {
    tc_table* t = nullptr;
    check(tc_tate_hochschild(in.get(), o.from, o.to, e, &t));
    return TablePtr(t, tc_table_free);
  });
}

int cmd_check(const Options& o) {
  check_range(o);
  auto in = load(o);
  std::vector<std::string> names;
  if (o.which == "all")
    names = {"positive", "theorem", "summand", "symmetry"};
  else
    names = {o.which};
  bool ok = true;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& name : names) {
    tc_check_status result = TC_CHECK_PASS;
    char* report = nullptr;
    check(tc_check(in.get(), name.c_str(), o.from, o.to, o.upto, format_of(o), &result, &report));
    ok = ok && result != TC_CHECK_FAIL;
    if (o.format == "json")
      reports.push_back(nlohmann::ordered_json::parse(take(report)));
    else
      std::cout << take(report);
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["input"] = o.input;
    j["checks"] = std::move(reports);
    j["passed"] = ok;
    std::cout << j.dump(1) << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_cup(const Options& o) {
  auto in = load(o);
  if (std::abs(o.i) > o.cap || std::abs(o.j) > o.cap || std::abs(o.i + o.j) > o.cap)
    throw Failure(kExitInput, "degrees exceed the cap of " + std::to_string(o.cap) + " (use --cap)");
  char* out = nullptr;
  check(tc_cup(in.get(), o.i, o.j, format_of(o), &out));
  std::cout << take(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate and Tate-Hochschild cohomology of finite dimensional Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized summand search");
  app.add_option("--cap", o.cap, "Largest allowed |degree|")->check(CLI::NonNegativeNumber);

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "JSON file or builtin:<name>")->required();
    sub->fallthrough();
    return sub;
  };
  auto with_range = [&](CLI::App* sub) {
    sub->add_option("--from", o.from, "Lowest degree");
    sub->add_option("--to", o.to, "Highest degree");
    return sub;
  };

  auto* list = app.add_subcommand("list", "List builtin examples");
  auto* validate = with_input(app.add_subcommand("validate", "Check the algebra and Hopf axioms"));
  auto* info = with_input(app.add_subcommand("info", "Integrals, modular function and Nakayama automorphism"));
  auto* exp = with_input(app.add_subcommand("export", "Write the input in canonical JSON"));

  auto* tate = with_range(with_input(app.add_subcommand("tate", "Tate cohomology Ext(k, M)")));
  tate->add_option("--module", o.module, "trivial, adjoint, counit-kernel, regular or a module JSON file");
  tate->add_option("--engine", o.engine, "Syzygy engine")
      ->check(CLI::IsMember({"minimal", "free", "both", "spliced"}));
  tate->add_flag("--representatives", o.representatives, "Include class representatives (json)");

  auto* hh = with_range(with_input(app.add_subcommand("hochschild", "Tate-Hochschild cohomology HH(A, A)")));
  hh->add_option("--engine", o.engine, "Syzygy engine")->check(CLI::IsMember({"minimal", "free", "both"}));
  hh->add_flag("--representatives", o.representatives, "Include class representatives (json)");

  auto* chk = with_range(with_input(app.add_subcommand("check", "Run the cohomology comparisons")));
  chk->add_option("--which", o.which, "Which check")
      ->check(CLI::IsMember({"positive", "theorem", "summand", "symmetry", "all"}));
  chk->add_option("--upto", o.upto, "Top degree for the positive check")->check(CLI::PositiveNumber);

  auto* cup = with_input(app.add_subcommand("cup", "Cup products on Ext(k, k)"));
  cup->add_option("--i", o.i, "Degree of the left factor");
  cup->add_option("--j", o.j, "Degree of the right factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  tc_set_seed(o.seed);
  try {
    if (list->parsed()) return cmd_list();
    if (validate->parsed()) return cmd_validate(o);
    if (info->parsed()) return cmd_info(o);
    if (exp->parsed()) return cmd_export(o);
    if (tate->parsed()) return cmd_tate(o);
    if (hh->parsed()) return cmd_hochschild(o);
    if (chk->parsed()) return cmd_check(o);
    if (cup->parsed()) return cmd_cup(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitInput;
}
