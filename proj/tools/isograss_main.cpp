// Command-line front end. Talks to the library only through the C API and
// renders its JSON documents as text unless --json is given.

#include "isograss/isograss.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnsupported = 3, kDimMismatch = 4 };

struct Config {
  bool json = false;
  int bound = 40;
  int s_max = 200;
};

class Failure {
 public:
  Failure(int code, std::string msg) : code(code), msg(std::move(msg)) {}
  int code;
  std::string msg;
};

int exit_code_for(isograss_status st) {
  switch (st) {
    case ISOGRASS_OK: return kOk;
    case ISOGRASS_UNSUPPORTED: return kUnsupported;
    case ISOGRASS_DIMENSION_MISMATCH: return kDimMismatch;
    case ISOGRASS_INVALID_ARGUMENT:
    case ISOGRASS_SPACE_SYNTAX:
    case ISOGRASS_PARSE:
    case ISOGRASS_UNKNOWN_GENERATOR: return kUsage;
    default: return kVerifyFailed;
  }
}

void check(isograss_status st) {
  if (st != ISOGRASS_OK) throw Failure(exit_code_for(st), isograss_last_error());
}

// Takes ownership of a string returned by the library.
Json take_json(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, isograss_free_string);
  return Json::parse(raw);
}

struct SpaceHandle {
  explicit SpaceHandle(const std::string& spec) { check(isograss_space_parse(spec.c_str(), &ptr)); }
  ~SpaceHandle() { isograss_space_destroy(ptr); }
  SpaceHandle(const SpaceHandle&) = delete;
  SpaceHandle& operator=(const SpaceHandle&) = delete;
  isograss_space* ptr = nullptr;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const Json& arr, const char* sep = " ") {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : sep) + v.dump();
  return out.empty() ? "(none)" : out;
}

void print_space(const Json& j) {
  std::cout << j["label"].get<std::string>() << "  " << j["kind"].get<std::string>() << "\n";
  std::cout << "dimension: " << j["dimension"] << "\n";
  if (!j["normalized"].is_null())
    std::cout << "normalized to " << j["normalized"].get<std::string>() << "\n";
  const auto& f = j["facts"];
  std::cout << "h1 rank: " << f["h1_rank"] << "\n";
  std::cout << "h4 rank: " << f["h4_rank"];
  if (!f["h4_generator"].is_null()) std::cout << " gen " << f["h4_generator"].get<std::string>();
  std::cout << "\n";
  std::cout << "orientable: " << yes_no(f["orientable"].get<bool>()) << "\n";
  if (f.contains("unoriented_orientable"))
    std::cout << "unoriented version orientable: " << yes_no(f["unoriented_orientable"].get<bool>())
              << "\n";
  if (!j["p1_height_formula"].is_null())
    std::cout << "p1 height (formula): " << j["p1_height_formula"] << "\n";
  if (!f["note"].get<std::string>().empty()) std::cout << "note: " << f["note"].get<std::string>() << "\n";
}

void print_presentation(const Json& j) {
  std::cout << j["space"]["label"].get<std::string>() << "  dimension " << j["space"]["dimension"]
            << "\n";
  std::cout << "generators:";
  for (const auto& g : j["generators"])
    std::cout << " " << g["name"].get<std::string>() << "(" << g["degree"] << ", "
              << g["bundle"].get<std::string>() << ")";
  std::cout << "\n";
  for (const auto& [name, value] : j["aliases"].items())
    std::cout << "alias: " << name << " = " << value.get<std::string>() << "\n";
  std::cout << "quotient relations:\n";
  if (j["relations"].empty()) std::cout << "  (none)\n";
  for (const auto& r : j["relations"]) std::cout << "  " << r.get<std::string>() << "\n";
  if (j.contains("sieve")) {
    std::cout << "sieve relations (over";
    for (const auto& g : j["sieve"]["generators"]) std::cout << " " << g["name"].get<std::string>();
    std::cout << "):";
    for (const auto& r : j["sieve"]["relations"]) std::cout << " {" << r.get<std::string>() << "}";
    std::cout << "\n";
  }
  std::cout << "exterior degrees: " << join_ints(j["exterior_degrees"]) << "\n";
  std::cout << "quotient top degree: " << j["quotient_top_degree"] << "\n";
  std::cout << "top degree: " << j["top_degree"] << "\n";
  if (j.contains("trace")) {
    const auto& t = j["trace"];
    std::cout << "sieve:\n";
    for (const auto& s : t["steps"])
      std::cout << "  x" << s["fiber_degree"] << ": d = " << s["differential"].get<std::string>()
                << "  reduced " << s["reduction"].get<std::string>() << "  -> "
                << s["outcome"].get<std::string>() << "\n";
    const auto& r = t["remark_formula"];
    std::cout << "consecutive-odd formula: " << join_ints(r["degrees"]) << " (top " << r["top_degree"]
              << ", identity " << yes_no(r["satisfies_top_degree_identity"].get<bool>()) << ")\n";
    std::cout << "discrepancy with sieve: " << yes_no(r["discrepancy"].get<bool>()) << "\n";
  }
}

void print_complex(const Json& j) {
  std::cout << j["space"]["label"].get<std::string>() << "  Schubert classes in a "
            << j["box"]["rows"] << "x" << j["box"]["width"] << " box\n";
  for (const auto& d : j["schubert_classes"]) {
    std::cout << "  degree " << d["degree"] << ":";
    for (const auto& p : d["partitions"]) std::cout << " (" << join_ints(p, ",") << ")";
    std::cout << "\n";
  }
  std::cout << "poincare: " << j["poincare"].get<std::string>() << "\n";
  std::cout << "euler: " << j["euler"] << "\n";
  std::cout << "sigma1 height: " << j["sigma1_height"] << "\n";
}

void print_verdict_line(const Json& v) {
  std::cout << "dim " << v["dim"] << "  " << v["source"].get<std::string>() << " -> "
            << v["target"].get<std::string>() << "  " << v["verdict"].get<std::string>();
  if (!v["reason"].get<std::string>().empty()) std::cout << " " << v["reason"].get<std::string>();
  std::cout << "\n";
}

void print_verdict(const Json& v) {
  std::cout << v["verdict"].get<std::string>();
  if (!v["reason"].get<std::string>().empty()) std::cout << " " << v["reason"].get<std::string>();
  std::cout << "\n";
  std::cout << v["source"].get<std::string>() << " -> " << v["target"].get<std::string>()
            << ", dimension " << v["dim"] << "\n";
  for (const auto& c : v["reason_trace"]) {
    std::cout << "  " << c["criterion"].get<std::string>() << ":";
    for (const auto& [k, val] : c["values"].items()) std::cout << " " << k << "=" << val;
    if (c["obstructs"].get<bool>()) std::cout << "  [obstructs]";
    if (c.contains("note")) std::cout << "  (" << c["note"].get<std::string>() << ")";
    std::cout << "\n";
  }
}

void print_summary(const Json& s) {
  for (const auto& [k, v] : s.items()) std::cout << "  " << k << ": " << v << "\n";
}

void emit(const Config& cfg, const Json& j, void (*text)(const Json&)) {
  if (cfg.json)
    std::cout << j.dump(2) << "\n";
  else
    text(j);
}

int run(CLI::App& app, const Config& cfg, const std::string& cmd, const std::string& spec,
        const std::string& spec2, const std::string& expr, bool trace, std::size_t cap,
        const std::string& family) {
  char* raw = nullptr;
  if (cmd == "space") {
    SpaceHandle s(spec);
    check(isograss_space_describe(s.ptr, &raw));
    emit(cfg, take_json(raw), print_space);
  } else if (cmd == "ring") {
    SpaceHandle s(spec);
    if (spec.rfind("CG:", 0) == 0) {
      check(isograss_complex_summary(s.ptr, &raw));
      emit(cfg, take_json(raw), print_complex);
      return kOk;
    }
    isograss_presentation* p = nullptr;
    const isograss_status st = isograss_presentation_create(s.ptr, &p);
    if (st == ISOGRASS_UNSUPPORTED && spec.rfind("RG:", 0) == 0)
      throw Failure(kUnsupported,
                    std::string(isograss_last_error()) +
                        "\nring presentations of oriented real Grassmannians exist only for odd "
                        "ambient dimension; even ambient dimension is limited to the height and "
                        "H^4 facts (see `space`)");
    check(st);
    std::unique_ptr<isograss_presentation, void (*)(isograss_presentation*)> guard(
        p, isograss_presentation_destroy);
    check(isograss_presentation_to_json(p, trace ? 1 : 0, &raw));
    emit(cfg, take_json(raw), print_presentation);
  } else if (cmd == "poincare") {
    SpaceHandle s(spec);
    check(isograss_poincare(s.ptr, &raw));
    emit(cfg, take_json(raw), [](const Json& j) {
      std::cout << "poincare: " << j["poincare"].get<std::string>() << "\n";
      std::cout << "top degree: " << j["top_degree"] << " (dimension " << j["dimension"] << ")\n";
      std::cout << "palindromic: " << yes_no(j["palindromic"].get<bool>()) << "\n";
      if (j.contains("euler")) std::cout << "euler: " << j["euler"] << "\n";
    });
  } else if (cmd == "height") {
    SpaceHandle s(spec);
    const isograss_status st = isograss_element_height(s.ptr, expr.c_str(), cap, &raw);
    if (st != ISOGRASS_OK && st != ISOGRASS_HEIGHT_OVERFLOW) check(st);
    const std::string err = st == ISOGRASS_HEIGHT_OVERFLOW ? isograss_last_error() : "";
    emit(cfg, take_json(raw), [](const Json& j) {
      if (j["overflow"].get<bool>())
        std::cout << "height: exceeds cap " << j["cap"] << "\n";
      else
        std::cout << "height: " << j["height"] << "\n";
      if (j.contains("formula")) {
        std::cout << "formula: " << j["formula"] << "\n";
        std::cout << "agree: " << yes_no(j["agree"].get<bool>()) << "\n";
      }
    });
    if (st == ISOGRASS_HEIGHT_OVERFLOW) throw Failure(kVerifyFailed, err);
  } else if (cmd == "eval") {
    SpaceHandle s(spec);
    check(isograss_element_eval(s.ptr, expr.c_str(), &raw));
    emit(cfg, take_json(raw), [](const Json& j) {
      std::cout << "value: " << j["value"].get<std::string>() << "\n";
      std::cout << "normal form: " << j["normal_form"].get<std::string>() << "\n";
    });
  } else if (cmd == "verdict") {
    SpaceHandle a(spec), b(spec2);
    check(isograss_verdict(a.ptr, b.ptr, &raw));
    emit(cfg, take_json(raw), print_verdict);
  } else if (cmd == "enumerate") {
    check(isograss_enumerate(family.c_str(), cfg.bound, &raw));
    emit(cfg, take_json(raw), [](const Json& j) {
      std::cout << j["family"].get<std::string>() << ", parameters <= " << j["bound"] << ": "
                << j["pairs"].size() << " pairs\n";
      for (const auto& v : j["pairs"]) print_verdict_line(v);
      std::cout << "summary:\n";
      print_summary(j["summary"]);
    });
  } else if (cmd == "verify") {
    int ok = 0;
    check(isograss_verify(cfg.bound, cfg.s_max, &ok, &raw));
    emit(cfg, take_json(raw), [](const Json& j) {
      std::cout << "pairs (parameters <= " << j["bound"] << "): " << j["pairs"].size() << "\n";
      for (const auto& v : j["pairs"]) {
        std::cout << "  " << v["family"].get<std::string>() << " ";
        print_verdict_line(v);
      }
      std::cout << "summary:\n";
      for (const auto& [fam, counts] : j["summary"].items()) {
        std::cout << " " << fam << "\n";
        print_summary(counts);
      }
      const auto& t = j["theorem41"];
      std::cout << "equal dimension and height tuples: " << t["tuples_checked"] << ", violations "
                << t["violations"].size() << "\n";
      for (const auto& c : j["case_families"])
        std::cout << "case l=" << c["l"] << ": s=1 gives (" << c["lhs_at_1"] << "," << c["rhs_at_1"]
                  << "), unequal through s=" << c["s_max"] << ": "
                  << yes_no(c["heights_always_differ"].get<bool>()) << "\n";
      std::cout << "minimum k(n-k)+k(k+1)/2: " << j["theorem42"]["minimum"] << "\n";
      std::size_t comparison_bad = 0, height_bad = 0;
      for (const auto& l : j["quotient_comparisons"])
        if (!l["dims_match"].get<bool>() || (l.contains("height_match") && !l["height_match"].get<bool>()))
          ++comparison_bad;
      for (const auto& h : j["height_formula"])
        if (!h["agree"].get<bool>()) ++height_bad;
      std::cout << "quotient comparisons: " << j["quotient_comparisons"].size() << " checked, " << comparison_bad
                << " mismatched\n";
      std::cout << "p1 height formula: " << j["height_formula"].size() << " checked, " << height_bad
                << " mismatched\n";
      std::cout << "counterexamples: " << j["failures"].size() << "\n";
      for (const auto& f : j["failures"]) std::cout << "  " << f.get<std::string>() << "\n";
      std::cout << (j["ok"].get<bool>() ? "OK" : "FAILED") << "\n";
    });
    return ok ? kOk : kVerifyFailed;
  } else {
    std::cerr << app.help();
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology presentations, heights and degree obstructions for oriented isotropic "
               "and real Grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--bound", cfg.bound, "Scan bound for enumerate/verify")
      ->envname("ISOGRASS_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--s-max", cfg.s_max, "Largest s for the parametric case families")
      ->check(CLI::PositiveNumber);

  std::string spec, spec2, expr, family = "IsoIso";
  bool trace = false;
  std::size_t cap = 0;

  auto* space = app.add_subcommand("space", "Dimension and cohomology facts of a space");
  space->add_option("space", spec, "I:2n,k | RG:m,l | CG:n,k | S:d")->required();

  auto* ring = app.add_subcommand("ring", "Ring presentation");
  ring->add_option("space", spec)->required();
  ring->add_flag("--trace", trace, "Show the survivor sieve");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial and duality check");
  poincare->add_option("space", spec)->required();

  auto* height = app.add_subcommand("height", "Nilpotency height of an element");
  height->add_option("space", spec)->required();
  height->add_option("--element", expr, "Element expression")->required();
  height->add_option("--cap", cap, "Largest power to try");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression and reduce it");
  eval->add_option("space", spec)->required();
  eval->add_option("expression", expr)->required();

  auto* verdict = app.add_subcommand("verdict", "Degree verdict for maps source -> target");
  verdict->add_option("source", spec)->required();
  verdict->add_option("target", spec2)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Verdicts for all equal-dimension pairs");
  enumerate->add_option("--family", family, "IsoIso, IsoReal or RealIso")
      ->check(CLI::IsMember({"IsoIso", "IsoReal", "RealIso"}));

  app.add_subcommand("verify", "Run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(app, cfg, cmd, spec, spec2, expr, trace, cap, family);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  }
}
