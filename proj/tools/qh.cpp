// qh: command-line front end over the qhopf library.
// Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qhopf/dsl.hpp"

using namespace qhopf;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string report_mode = "text";

AlgebraData load_algebra_data(const std::string& arg) {
  if (std::filesystem::exists(arg)) return algebra_from_json(read_json_file(arg));
  auto names = builtin_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return builtin(arg);
  throw InputError(arg + ": no such file or built-in algebra");
}

Algebra load_algebra(const std::string& arg) {
  QuasiHopfAlgebra h(load_algebra_data(arg));
  try {
    return Algebra::validate(h);
  } catch (const ValidationError& e) {
    throw InputError(arg + ": not a quasi-Hopf algebra (" + [&] {
      std::string s;
      for (const auto& f : e.report().failures()) s += (s.empty() ? "" : ", ") + f;
      return s;
    }() + "); run verify for details");
  }
}

Context load_context(const Algebra& a, const std::string& path) {
  if (path.empty()) return Context(a);
  return Context::from_json(a, read_json_file(path));
}

std::string read_text(const std::string& arg) {
  if (arg != "-") return arg;
  std::stringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

int emit(const Report& r) {
  if (report_mode == "json")
    std::cout << dump(report_to_json(r));
  else
    std::cout << r.to_text() << (r.all_pass() ? "all checks pass\n" : "FAILED: " + std::to_string(r.failures().size()) + " check(s)\n");
  return r.all_pass() ? 0 : 1;
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols(), "0"));
  std::size_t w = 1;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, x] : m.column(c).entries) {
      cells[r][c] = x.str();
      w = std::max(w, cells[r][c].size());
    }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::string(w - row[c].size(), ' ') << row[c];
    os << "\n";
  }
  return os.str();
}

// Lines "lhs == rhs"; blank lines and '#' comments are skipped.
Report run_script(Context& ctx, const std::string& text) {
  Report r;
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find("==");
    if (eq == std::string::npos) throw InputError("script line " + std::to_string(no) + ": expected 'lhs == rhs'");
    const std::string lhs = line.substr(0, eq), rhs = line.substr(eq + 2);
    try {
      CheckResult c = check_equal(ctx, lhs, rhs);
      r.add("line" + std::to_string(no), c.pass, c.message);
    } catch (const ParseError& e) {
      throw InputError("script line " + std::to_string(no) + ": " + e.what());
    } catch (const ElabError& e) {
      throw InputError("script line " + std::to_string(no) + ": " + e.what());
    }
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification for finite-dimensional quasi-Hopf algebras over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--report", report_mode, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string algebra_arg, name, out_path, left, right, context, expr, lhs, rhs, script;
  bool derived = false;
  std::vector<std::string> objects;

  auto* builtins = app.add_subcommand("builtins", "List built-in algebras");

  auto* exp = app.add_subcommand("export", "Print a built-in algebra as JSON");
  exp->add_option("name", name)->required();
  exp->add_option("-o,--output", out_path, "Write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the quasi-Hopf axioms");
  verify->add_option("algebra", algebra_arg, "JSON file or built-in name")->required();
  verify->add_flag("--derived", derived, "Also check the derived identities");
  verify->add_option("--write", out_path, "Write the parsed algebra back out as JSON");

  auto* end = app.add_subcommand("end", "Compute the end over the regular module and compare with the closed form");
  end->add_option("algebra", algebra_arg)->required();
  end->add_option("--left", left, "Module JSON for P (default: unit)");
  end->add_option("--right", right, "Module JSON for Q (default: unit)");

  auto* equiv = app.add_subcommand("equiv", "Equivalence report on a list of objects");
  equiv->add_option("algebra", algebra_arg)->required();
  equiv->add_option("--objects", objects, "Object expressions (I, C, C*C, heart(C), ...) or module JSON files")
      ->delimiter(',');
  equiv->add_option("--context", context, "Context JSON with named objects");

  auto* eval = app.add_subcommand("eval", "Evaluate a morphism expression");
  eval->add_option("algebra", algebra_arg)->required();
  eval->add_option("--context", context, "Context JSON");
  eval->add_option("--expr", expr, "Expression text, or - for stdin")->required();

  auto* check = app.add_subcommand("check", "Compare two morphism expressions");
  check->add_option("algebra", algebra_arg)->required();
  check->add_option("--context", context, "Context JSON");
  check->add_option("--lhs", lhs, "Left-hand side, or - for stdin");
  check->add_option("--rhs", rhs, "Right-hand side");
  check->add_option("--script", script, "File of 'lhs == rhs' lines, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*builtins) {
      for (const auto& n : builtin_names()) std::cout << n << "\n";
      return 0;
    }
    if (*exp) {
      auto names = builtin_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError(name + ": unknown built-in");
      const std::string text = dump(algebra_to_json(builtin(name)));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path, std::ios::binary) << text;
      }
      return 0;
    }
    if (*verify) {
      AlgebraData d = load_algebra_data(algebra_arg);
      QuasiHopfAlgebra h(d);
      if (!out_path.empty()) std::ofstream(out_path, std::ios::binary) << dump(algebra_to_json(d));
      Report r = verify_axioms(h);
      if (derived && r.all_pass()) r.append(verify_derived_identities(Algebra::validate(h)));
      return emit(r);
    }
    Algebra a = load_algebra(algebra_arg);
    if (*end) {
      auto mod = [&](const std::string& path) {
        return path.empty() ? unit_module(a) : module_from_json(a, read_json_file(path), path);
      };
      EndResult e = end_over_regular(mod(left), mod(right));
      return emit(e.report);
    }
    if (*equiv) {
      Context ctx = load_context(a, context);
      if (objects.empty()) objects = {"I", "C", "C*C"};
      std::vector<HModule> mods;
      for (const auto& o : objects) {
        if (o.size() > 5 && o.substr(o.size() - 5) == ".json")
          mods.push_back(module_from_json(a, read_json_file(o), o));
        else
          mods.push_back(ctx.object(o)->mod);
      }
      return emit(equivalence_report(a, mods));
    }
    if (*eval) {
      Context ctx = load_context(a, context);
      Typed t = ctx.elaborate(parse_expr(read_text(expr)));
      Matrix m = ctx.eval(t);
      const bool linear = is_h_linear(HMap{t.src->mod, t.tgt->mod, m});
      if (report_mode == "json") {
        json j{{"src", t.src->key}, {"tgt", t.tgt->key}, {"rows", m.rows()}, {"cols", m.cols()},
               {"matrix", matrix_to_json(m)}, {"h_linear", linear}};
        std::cout << dump(j);
      } else {
        std::cout << t.src->key << " -> " << t.tgt->key << "  (" << m.rows() << "x" << m.cols() << ")\n"
                  << matrix_text(m);
        if (!linear) std::cout << "FAIL result is not H-linear\n";
      }
      return linear ? 0 : 1;
    }
    if (*check) {
      Context ctx = load_context(a, context);
      if (!script.empty()) {
        std::string text = script == "-" ? read_text("-") : [&] {
          std::ifstream in(script);
          if (!in) throw InputError(script + ": cannot open");
          std::stringstream ss;
          ss << in.rdbuf();
          return ss.str();
        }();
        return emit(run_script(ctx, text));
      }
      if (lhs.empty() || rhs.empty()) throw InputError("check needs --lhs and --rhs, or --script");
      CheckResult c = check_equal(ctx, read_text(lhs), read_text(rhs));
      Report r;
      r.add("check", c.pass, c.message);
      return emit(r);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ElabError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n" << e.report().to_text();
    return 2;
  }
  return 2;
}
