// ilocal: command-line front end. JSON goes to stdout, diagnostics to
// stderr. Exit status 0 on success, 1 on a domain error, 2 on bad usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ilocal/connected.hpp"
#include "ilocal/doubling.hpp"
#include "ilocal/errors.hpp"
#include "ilocal/expression.hpp"
#include "ilocal/homology.hpp"
#include "ilocal/json_io.hpp"
#include "ilocal/render.hpp"
#include "ilocal/suite.hpp"

using namespace ilocal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expr;
  std::vector<std::string> files;
  std::string d = "0";
  std::int64_t delta = 1;
  bool witnesses = false;
  std::string format = "ascii";
  std::uint64_t seed = 1;
  SuiteBounds bounds;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

const std::string& file_arg(const Options& o, std::size_t k, std::size_t need) {
  if (o.files.size() != need)
    throw UsageError("expected " + std::to_string(need) + " --file argument(s), got " + std::to_string(o.files.size()));
  return o.files[k];
}

LinearCombination expr_arg(const Options& o) {
  if (o.expr.empty()) throw UsageError("--expr is required");
  return parse_expression(o.expr);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json class_json(const LinearCombination& lc, const Grading& d) {
  const LocalClass cls{lc, d};
  json out = local_class_to_json(cls);
  out["expr"] = format_expression(lc);
  out["h"] = module_to_json(connected_homology(lc));
  out["hf_conn"] = module_to_json(hf_conn(cls));
  out["mu_bar"] = grading_to_json(predict_mu_bar(cls));
  out["rokhlin_parity"] = (d / 2).is_integer() ? json(predict_rokhlin_parity(cls)) : json(nullptr);
  return out;
}

ConnectedClass connected_from_json(const json& j) {
  if (!j.contains("d")) throw Error("connected class JSON needs a \"d\" member");
  return {module_from_json(j.contains("module") ? j.at("module") : j), grading_from_json(j.at("d"))};
}

int dispatch(const std::string& cmd, const Options& o) {
  const Grading d = Grading::parse(o.d);
  if (cmd == "build") {
    print(complex_to_json(representative(simplify(expr_arg(o)))));
  } else if (cmd == "homology") {
    const ReductionResult r = homology(geometric_from_json(read_json(file_arg(o, 0, 1))));
    json out = module_to_json(r.module);
    if (o.witnesses) out["witnesses"] = witnesses_to_json(r);
    print(out);
  } else if (cmd == "connected") {
    print(class_json(simplify(expr_arg(o)), d));
  } else if (cmd == "decode") {
    const json in = read_json(file_arg(o, 0, 1));
    const Grading dd = in.contains("d") ? grading_from_json(in.at("d")) : d;
    const LinearCombination lc = decode(module_from_json(in.contains("module") ? in.at("module") : in), dd);
    json out = local_class_to_json({lc, dd});
    out["expr"] = format_expression(lc);
    print(out);
  } else if (cmd == "sum") {
    const ConnectedClass a = connected_from_json(read_json(file_arg(o, 0, 2)));
    const ConnectedClass b = connected_from_json(read_json(file_arg(o, 1, 2)));
    const ConnectedClass s = connect_sum(a, b);
    json out = module_to_json(s.module);
    out["d"] = grading_to_json(s.d);
    out["expr"] = format_expression(simplify(decode(s.module.without_orientation(), s.d)));
    print(out);
  } else if (cmd == "double") {
    print(complex_to_json(double_complex(split_from_json(read_json(file_arg(o, 0, 1))), o.delta).complex));
  } else if (cmd == "half") {
    print(complex_to_json(half(split_from_json(read_json(file_arg(o, 0, 1))), o.delta)));
  } else if (cmd == "dual") {
    const json in = read_json(file_arg(o, 0, 1));
    print(in.contains("J") ? complex_to_json(dual(split_from_json(in))) : complex_to_json(dual(geometric_from_json(in))));
  } else if (cmd == "tensor") {
    const json a = read_json(file_arg(o, 0, 2));
    const json b = read_json(file_arg(o, 1, 2));
    if (a.contains("J") && b.contains("J")) print(complex_to_json(tensor(split_from_json(a), split_from_json(b))));
    else print(complex_to_json(tensor(geometric_from_json(a), geometric_from_json(b))));
  } else if (cmd == "verify") {
    const SplitComplex x = split_from_json(read_json(file_arg(o, 0, 1)));
    const Splitting s = canonical_splitting(x);
    const LocalPairReport r = verify_local_pair(local_map_f(x, o.delta, s), local_map_g(x, o.delta, s));
    print(report_to_json(r));
    return r.passed() ? 0 : 1;
  } else if (cmd == "render") {
    RenderFormat fmt;
    if (o.format == "ascii") fmt = RenderFormat::Ascii;
    else if (o.format == "svg") fmt = RenderFormat::Svg;
    else throw UsageError("--format must be ascii or svg");
    FUModule m;
    if (!o.expr.empty()) m = hf_conn({simplify(parse_expression(o.expr)), d});
    else m = module_from_json(read_json(file_arg(o, 0, 1)));
    std::cout << render(m, fmt);
  } else if (cmd == "suite") {
    std::uint64_t seed = o.seed;
    if (const char* env = std::getenv("ILOCAL_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("ILOCAL_SEED is not an unsigned integer: ") + env);
      }
    }
    const SuiteReport r = run_suite(seed, o.bounds);
    print(r.to_json());
    return r.passed() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local equivalence classes of involutive complexes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--file", o.files, "Input JSON file ('-' for stdin); repeat for two inputs");
    sub->add_option("--d", o.d, "d-invariant as n or n/d");
  };
  struct SubcommandInfo {
    const char* name;
    const char* help;
  };
  const SubcommandInfo specs[] = {
      {"build", "Representative split complex of --expr"},
      {"homology", "Homology of a complex (--file)"},
      {"connected", "Connected homology and invariants of --expr with --d"},
      {"decode", "Recover the combination from a module (--file) and --d"},
      {"sum", "Connected sum of two classes (--file A --file B)"},
      {"double", "Double a split complex (--file) with --delta"},
      {"half", "Halve a split complex (--file) with --delta"},
      {"dual", "Dual complex (--file)"},
      {"tensor", "Tensor product (--file A --file B)"},
      {"verify", "Check the local maps of a doubling (--file, --delta)"},
      {"render", "Tower diagram of --expr/--d or a module (--file)"},
      {"suite", "Randomized property suites"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    const std::string name = s.name;
    if (name == "build" || name == "connected" || name == "render") sub->add_option("--expr", o.expr, "Expression such as \"X5 - X4 + 2*X3\"");
    if (name == "double" || name == "half" || name == "verify")
      sub->add_option("--delta", o.delta, "Doubling parameter")->check(CLI::NonNegativeNumber);
    if (name == "homology") sub->add_flag("--witnesses", o.witnesses, "Include cycle representatives");
    if (name == "render") sub->add_option("--format", o.format, "ascii or svg");
    if (name == "suite") {
      sub->add_option("--seed", o.seed, "RNG seed (ILOCAL_SEED overrides)");
      sub->add_option("--cases", o.bounds.cases, "Random cases per suite")->check(CLI::NonNegativeNumber);
      sub->add_option("--n", o.bounds.max_terms, "Maximum number of terms")->check(CLI::NonNegativeNumber);
      sub->add_option("--i", o.bounds.max_index, "Maximum index")->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
