// rvcalc: exact computation in the Higman-Thompson groups V_{d,r}, their
// symmetric version V_{d,r}(Z/2), braided version bV_{d,r} and the ribbon
// groups RV_{d,r}, RV+_{d,r}, working with paired forest diagrams.
//
// Exit codes: 0 ok, 1 mathematical/domain failure (including selftest
// failures), 2 usage error, 3 parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rv/diagram.hpp"
#include "rv/literal.hpp"
#include "rv/selftest.hpp"

namespace {

using nlohmann::json;

struct LineOut {
  int severity = 0;  // 0 ok, 1 math, 3 parse
  std::string text;
  json record;
};

json invariants_json(const rv::Diagram& x) {
  const rv::Diagram red = rv::reduce(x);
  json inv;
  inv["l"] = red.leaves();
  inv["total_twist"] = rv::total_twist(red);
  inv["writhe"] = rv::writhe(red);
  inv["perm"] = rv::underlying_permutation(red).images();
  return inv;
}

std::string invariants_text(const json& inv) {
  std::string perm;
  for (const auto& v : inv["perm"]) {
    if (!perm.empty()) perm += ',';
    perm += std::to_string(v.get<int>());
  }
  return "[l=" + std::to_string(inv["l"].get<int>()) +
         " twist=" + std::to_string(inv["total_twist"].get<int>()) +
         " writhe=" + std::to_string(inv["writhe"].get<int>()) + " perm=" + perm + "]";
}

LineOut element_out(const std::string& verb, const rv::Diagram& x) {
  LineOut out;
  const std::string text = rv::serialize_diagram(x);
  const json inv = invariants_json(x);
  out.text = text + "  " + invariants_text(inv);
  out.record = {{"status", "ok"}, {"verb", verb}, {"result", text}, {"invariants", inv}};
  return out;
}

LineOut plain_out(const std::string& verb, const json& result, const std::string& text) {
  LineOut out;
  out.text = text;
  out.record = {{"status", "ok"}, {"verb", verb}, {"result", result}};
  return out;
}

LineOut error_out(const std::string& verb, int severity, const std::string& msg,
                  std::optional<std::size_t> pos) {
  LineOut out;
  out.severity = severity;
  out.text = "error: " + msg + (pos ? " (at offset " + std::to_string(*pos) + ")" : "");
  out.record = {{"status", "error"}, {"verb", verb}, {"message", msg}};
  if (pos) out.record["position"] = *pos;
  return out;
}

void emit(const LineOut& out, bool as_json) {
  if (as_json)
    std::cout << out.record.dump() << "\n";
  else
    std::cout << out.text << "\n";
}

// Splits a batch line into `args` whitespace-separated tokens; the last
// token absorbs the rest of the line (points may contain spaces).
std::vector<std::string> split_line(const std::string& line, std::size_t args) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (out.size() + 1 < args) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    out.push_back(line.substr(start, pos - start));
  }
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  std::size_t end = line.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  out.push_back(line.substr(pos, end - pos));
  return out;
}

class Runner {
 public:
  Runner(bool as_json) : json_(as_json) {}

  // Evaluates one input (possibly a batch line) and tracks the exit code.
  void run(const std::string& verb,
           const std::function<LineOut(const std::vector<std::string>&)>& eval,
           const std::vector<std::string>& args) {
    LineOut out;
    try {
      out = eval(args);
    } catch (const rv::ParseError& e) {
      out = error_out(verb, 3, e.what(), e.position());
    } catch (const std::exception& e) {
      out = error_out(verb, 1, e.what(), std::nullopt);
    }
    emit(out, json_);
    if (out.severity == 3) saw_parse_ = true;
    if (out.severity == 1) saw_math_ = true;
  }

  // Positional args if present, otherwise one evaluation per stdin line.
  void drive(const std::string& verb, std::size_t arity,
             const std::vector<std::string>& positionals,
             const std::function<LineOut(const std::vector<std::string>&)>& eval) {
    if (!positionals.empty()) {
      run(verb, eval, positionals);
      return;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      run(verb, eval, split_line(line, arity));
    }
  }

  int exit_code() const {
    if (saw_parse_) return 3;
    if (saw_math_) return 1;
    return 0;
  }

 private:
  bool json_;
  bool saw_parse_ = false;
  bool saw_math_ = false;
};

rv::Variant parse_variant_token(const std::string& s) {
  if (s == "V") return rv::Variant::Perm;
  if (s == "V2") return rv::Variant::SignedPerm;
  if (s == "bV") return rv::Variant::Braid;
  if (s == "RV") return rv::Variant::Ribbon;
  if (s == "RV+") return rv::Variant::RibbonOriented;
  throw CLI::ValidationError("--to", "unknown variant '" + s + "'");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RV_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return rv::selftest::kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in Higman-Thompson groups and their ribbon versions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit line-delimited JSON records");

  std::string ctx_text;
  std::string to_token;
  bool shift_inverse = false;
  std::uint64_t seed = default_seed();
  int carets = 3, braid_len = 4, twist_bound = 2, count = 1, depth = 0;
  int scale = 100;
  std::string suite_filter;
  std::vector<std::string> exprs;

  auto add_ctx = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--ctx", ctx_text, "group context, e.g. V{2,1} or RV{3,2}")->required();
  };

  CLI::App* c_norm = app.add_subcommand("normalize", "canonical reduced form");
  add_ctx(c_norm);
  c_norm->add_option("expr", exprs, "diagram literal (stdin lines when omitted)");

  CLI::App* c_mul = app.add_subcommand("mul", "product of two elements");
  add_ctx(c_mul);
  c_mul->add_option("expr", exprs, "two diagram literals");

  CLI::App* c_inv = app.add_subcommand("inv", "inverse");
  add_ctx(c_inv);
  c_inv->add_option("expr", exprs, "diagram literal");

  CLI::App* c_eq = app.add_subcommand("eq", "equality in the group");
  add_ctx(c_eq);
  c_eq->add_option("expr", exprs, "two diagram literals");

  CLI::App* c_proj = app.add_subcommand("project", "quotient homomorphism");
  add_ctx(c_proj);
  c_proj->add_option("--to", to_token, "target variant: V, V2, bV, RV, RV+")->required();
  c_proj->add_option("expr", exprs, "diagram literal");

  CLI::App* c_stab = app.add_subcommand("stabilize", "embed into the r+1 group");
  add_ctx(c_stab);
  c_stab->add_option("expr", exprs, "diagram literal");

  CLI::App* c_shift = app.add_subcommand("shift", "canonical isomorphism r <-> r+d-1");
  add_ctx(c_shift);
  c_shift->add_flag("--inverse", shift_inverse, "apply the inverse direction");
  c_shift->add_option("expr", exprs, "diagram literal");

  CLI::App* c_rand = app.add_subcommand("random", "seeded random element");
  add_ctx(c_rand);
  c_rand->add_option("--seed", seed, "PRNG seed");
  c_rand->add_option("--carets", carets, "leaf splits per forest");
  c_rand->add_option("--braid-len", braid_len, "braid letters");
  c_rand->add_option("--twist-bound", twist_bound, "twist bound");
  c_rand->add_option("--count", count, "number of elements");

  CLI::App* c_act = app.add_subcommand("act", "prefix action on a Cantor point");
  add_ctx(c_act);
  c_act->add_option("--depth", depth, "require the input point at least this deep");
  c_act->add_option("expr", exprs, "diagram literal and point");

  CLI::App* c_self = app.add_subcommand("selftest", "run the built-in verification suites");
  c_self->fallthrough();
  c_self->add_option("--seed", seed, "PRNG seed");
  c_self->add_option("--scale", scale, "percentage of the default scenario counts");
  c_self->add_option("--suite", suite_filter, "run only suites whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Runner runner(as_json);

  auto parse_ctx = [&]() { return rv::parse_context(ctx_text); };

  try {
    if (c_norm->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      runner.drive("normalize", 1, exprs, [&](const std::vector<std::string>& a) {
        return element_out("normalize", rv::reduce(rv::parse_diagram(a.at(0), ctx)));
      });
    } else if (c_mul->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      if (!exprs.empty() && exprs.size() != 2)
        throw CLI::ValidationError("mul", "expects exactly two diagram literals");
      runner.drive("mul", 2, exprs, [&](const std::vector<std::string>& a) {
        return element_out("mul", rv::multiply(rv::parse_diagram(a.at(0), ctx),
                                               rv::parse_diagram(a.at(1), ctx)));
      });
    } else if (c_inv->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      runner.drive("inv", 1, exprs, [&](const std::vector<std::string>& a) {
        return element_out("inv", rv::invert(rv::parse_diagram(a.at(0), ctx)));
      });
    } else if (c_eq->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      if (!exprs.empty() && exprs.size() != 2)
        throw CLI::ValidationError("eq", "expects exactly two diagram literals");
      runner.drive("eq", 2, exprs, [&](const std::vector<std::string>& a) {
        const bool eq = rv::equals(rv::parse_diagram(a.at(0), ctx),
                                   rv::parse_diagram(a.at(1), ctx));
        return plain_out("eq", eq, eq ? "true" : "false");
      });
    } else if (c_proj->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      const rv::Variant to = parse_variant_token(to_token);
      runner.drive("project", 1, exprs, [&](const std::vector<std::string>& a) {
        return element_out("project", rv::project(rv::parse_diagram(a.at(0), ctx), to));
      });
    } else if (c_stab->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      runner.drive("stabilize", 1, exprs, [&](const std::vector<std::string>& a) {
        return element_out("stabilize", rv::stabilize(rv::parse_diagram(a.at(0), ctx)));
      });
    } else if (c_shift->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      runner.drive("shift", 1, exprs, [&](const std::vector<std::string>& a) {
        const rv::Diagram x = rv::parse_diagram(a.at(0), ctx);
        return element_out("shift", shift_inverse ? rv::shift_iso_inverse(x) : rv::shift_iso(x));
      });
    } else if (c_rand->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      for (int i = 0; i < count; ++i) {
        runner.run("random", [&](const std::vector<std::string>&) {
          return element_out("random", rv::random_element(ctx, carets, braid_len, twist_bound,
                                                          seed + static_cast<std::uint64_t>(i)));
        }, {});
      }
    } else if (c_act->parsed()) {
      const rv::GroupContext ctx = parse_ctx();
      runner.drive("act", 2, exprs, [&](const std::vector<std::string>& a) {
        const rv::Diagram x = rv::parse_diagram(a.at(0), ctx);
        const rv::CantorPoint pt = rv::parse_point(a.at(1), ctx);
        if (depth > 0 && static_cast<int>(pt.word.size()) < depth)
          throw std::invalid_argument("point shallower than the requested depth");
        const rv::CantorPoint img = rv::cantor_action(x, pt);
        const std::string text = rv::serialize_point(img, ctx);
        return plain_out("act", text, text);
      });
    } else if (c_self->parsed()) {
      rv::selftest::Options opt;
      opt.seed = seed;
      opt.scale = scale;
      opt.only = suite_filter;
      const auto results = rv::selftest::run_all(opt);
      long failed_suites = 0;
      json jsuites = json::array();
      for (const auto& r : results) {
        if (!r.ok()) ++failed_suites;
        if (as_json) {
          jsuites.push_back({{"name", r.name},
                             {"cases", r.cases},
                             {"failures", r.failures},
                             {"notes", r.notes}});
        } else {
          std::cout << (r.ok() ? "ok    " : "FAIL  ") << r.name << "  " << r.cases
                    << " cases";
          if (!r.ok()) std::cout << ", " << r.failures << " failures";
          std::cout << "\n";
          for (const auto& note : r.notes) std::cout << "        " << note << "\n";
        }
      }
      if (as_json) {
        json rec = {{"status", failed_suites == 0 ? "ok" : "error"},
                    {"verb", "selftest"},
                    {"result", {{"suites", jsuites}, {"passed", failed_suites == 0}}}};
        std::cout << rec.dump() << "\n";
      } else {
        std::cout << "summary: " << results.size() << " suites, " << failed_suites
                  << " failed\n";
      }
      return failed_suites == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const rv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << " (at offset " << e.position() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return runner.exit_code();
}
