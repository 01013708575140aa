// hrmc -- build, verify and size highly resistant multicolorings.
//
// Exit codes: 0 pass, 1 semantic failure (check fails / construction
// infeasible), 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hrmc/builder.hpp"
#include "hrmc/instance.hpp"
#include "hrmc/kformula.hpp"
#include "hrmc/oracle.hpp"
#include "hrmc/resistance.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string set_text(hrmc::VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (hrmc::Vertex v : s) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw hrmc::input_error("cannot write " + path);
  f << text;
}

json witness_json(const std::optional<hrmc::Witness>& w) {
  if (!w) return nullptr;
  json j;
  j["attackers"] = w->attackers.to_vector();
  j["failures"] = w->failures.to_vector();
  return j;
}

const char* verdict_name(hrmc::Verdict v) {
  switch (v) {
    case hrmc::Verdict::pass: return "pass";
    case hrmc::Verdict::fail: return "fail";
    case hrmc::Verdict::vacuous_fail: return "vacuous_fail";
  }
  return "?";
}

const char* condition_name(hrmc::FailedCondition c) {
  switch (c) {
    case hrmc::FailedCondition::none: return "none";
    case hrmc::FailedCondition::hr: return "hr";
    case hrmc::FailedCondition::resistance: return "resistance";
  }
  return "?";
}

std::string n4_text(std::int64_t m) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%lld + sqrt(%lld) ~ %.4f",
                static_cast<long long>(m + 2),
                static_cast<long long>(4 * m + 1), hrmc::thresholds(m).n4);
  return buf;
}

int cmd_kvalue(std::int64_t a, std::int64_t m, std::int64_t n, bool machine) {
  if (a > 1)
    throw hrmc::input_error("unsupported: closed form only for a <= 1");
  if (a == 1 && m == 0)
    throw hrmc::input_error(
        "unsupported: the a = 1 closed form needs m >= 1");
  const hrmc::KValue k = a == 0 ? hrmc::k_zero(m, n) : hrmc::k_one(m, n);

  if (machine) {
    json j;
    j["command"] = "kvalue";
    j["a"] = a;
    j["m"] = m;
    j["n"] = n;
    j["finite"] = k.is_finite();
    j["k"] = k.is_finite() ? json(k.value()) : json(nullptr);
    if (a == 1) {
      j["n4"] = hrmc::thresholds(m).n4;
      j["above_threshold"] = k.is_finite();
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }

  std::cout << "K(" << a << ", " << m << ", " << n << ") = " << k.to_string()
            << "\n";
  if (a == 1) {
    std::cout << "threshold n4(" << m << ") = " << n4_text(m) << "\n";
    std::cout << "n = " << n
              << (k.is_finite() ? " clears the threshold\n"
                                : " does not clear the threshold\n");
  }
  return kExitPass;
}

int cmd_verify(const std::string& path, std::int64_t a, std::int64_t m,
               bool machine) {
  const hrmc::Instance inst = hrmc::load_instance(path);
  const hrmc::Scenario sc{static_cast<int>(a), static_cast<int>(m)};
  const hrmc::CheckReport rep =
      hrmc::check_highly_am_resistant(inst.graph, inst.coloring, sc);

  if (machine) {
    json j;
    j["command"] = "verify";
    j["a"] = a;
    j["m"] = m;
    j["n"] = inst.graph.vertex_count();
    j["k"] = inst.coloring.color_count();
    j["verdict"] = verdict_name(rep.verdict);
    j["condition"] = condition_name(rep.condition);
    j["witness"] = witness_json(rep.witness);
    j["pairs_examined"] = rep.pairs_examined;
    std::cout << j.dump(2) << "\n";
    return rep.passed() ? kExitPass : kExitFail;
  }

  switch (rep.verdict) {
    case hrmc::Verdict::pass:
      std::cout << "PASS: highly (" << a << ", " << m << ")-resistant ("
                << rep.pairs_examined << " candidate pairs examined)\n";
      return kExitPass;
    case hrmc::Verdict::vacuous_fail:
      std::cout << "FAIL (vacuous): the graph has only "
                << inst.graph.vertex_count()
                << " vertices, so sets with |A| = " << a << ", |M| = " << m
                << " cannot exist\n";
      return kExitFail;
    case hrmc::Verdict::fail:
      if (rep.condition == hrmc::FailedCondition::hr) {
        std::cout << "FAIL: attackers A = " << set_text(rep.witness->attackers)
                  << " jointly hold every color\n";
      } else {
        std::cout << "FAIL: no surviving component holds every color for\n"
                  << "  A = " << set_text(rep.witness->attackers) << "\n"
                  << "  M = " << set_text(rep.witness->failures) << "\n";
      }
      return kExitFail;
  }
  return kExitFail;
}

int cmd_construct(std::int64_t m, std::int64_t n, const std::string& out,
                  const std::string& format, bool machine) {
  const hrmc::Realization r = hrmc::build_clique_realization(m, n);

  // Fast exact self-check; the builder is proven, this guards the code.
  const hrmc::CheckReport rep = hrmc::check_highly_am_resistant(
      r.graph, r.coloring, r.scenario,
      {hrmc::Strategy::branch});
  if (!rep.passed())
    throw std::logic_error("construction failed its own verification");

  const std::string text = format == "dot"
                               ? hrmc::to_dot(r.graph, r.coloring)
                               : hrmc::to_json(r.graph, r.coloring);

  if (machine) {
    json j;
    j["command"] = "construct";
    j["m"] = m;
    j["n"] = n;
    j["k"] = r.coloring.color_count();
    j["verified"] = true;
    if (!out.empty() && out != "-") {
      j["out"] = out;
      write_out(out, text);
    } else if (format == "dot") {
      j["dot"] = text;
    } else {
      j["instance"] = json::parse(text);
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }

  write_out(out, text);
  if (!out.empty() && out != "-")
    std::cout << "wrote " << format << " instance with k = "
              << r.coloring.color_count() << " to " << out
              << " (self-verified)\n";
  return kExitPass;
}

int cmd_oracle(std::int64_t a, std::int64_t m, std::int64_t n,
               std::int64_t k_max, bool witness, const std::string& out,
               bool machine) {
  if (n > 7)
    throw hrmc::input_error(
        "refused: the exhaustive search is capped at n <= 7; every labeled "
        "graph on n vertices is enumerated, which explodes past that");
  const hrmc::SearchSpec spec{static_cast<int>(a), static_cast<int>(m),
                              static_cast<int>(n), static_cast<int>(k_max),
                              true};
  const hrmc::KValue brute = hrmc::brute_force_k(spec);

  std::optional<hrmc::KValue> formula;
  if (a == 0) formula = hrmc::k_zero(m, n);
  if (a == 1 && m >= 1) formula = hrmc::k_one(m, n);
  // An infinite formula value is genuinely infinite; a brute-force
  // "infinite" only means nothing exists up to k_max.  They agree when
  // equal, and also when the formula's answer simply exceeds the cap.
  bool agrees = true;
  if (formula) {
    agrees = (*formula == brute) ||
             (formula->is_finite() && brute.is_infinite() &&
              formula->value() > k_max);
  }

  std::optional<hrmc::Realization> found;
  if (witness && brute.is_finite())
    found = hrmc::search_witness(spec, static_cast<int>(brute.value()));

  if (machine) {
    json j;
    j["command"] = "oracle";
    j["a"] = a;
    j["m"] = m;
    j["n"] = n;
    j["k_max"] = k_max;
    j["finite"] = brute.is_finite();
    j["k"] = brute.is_finite() ? json(brute.value()) : json(nullptr);
    if (formula) {
      j["formula"] =
          formula->is_finite() ? json(formula->value()) : json(nullptr);
      j["agrees"] = agrees;
    }
    if (found) j["witness"] = json::parse(to_json(found->graph, found->coloring));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "brute-forced K(" << a << ", " << m << ", " << n
              << ") = " << brute.to_string() << " (searched k up to " << k_max
              << ")\n";
    if (formula)
      std::cout << "closed form says " << formula->to_string() << " -- "
                << (agrees ? "agreement" : "DISAGREEMENT") << "\n";
    else
      std::cout << "no closed form available for comparison\n";
    if (found) write_out(out, to_json(found->graph, found->coloring));
  }
  return agrees ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "verify, construct and size color distributions that stay "
      "reconstructable under attacker removal and node failures"};
  app.require_subcommand(1);

  std::int64_t a = 1, m = 0, n = 0, k_max = 4;
  std::string file, out = "-", format = "json";
  bool machine = false, witness = false;

  CLI::App* kv = app.add_subcommand(
      "kvalue", "closed-form minimal color count K(a, m, n)");
  kv->add_option("-a", a, "attacker count (0 or 1)")->required();
  kv->add_option("-m", m, "failure count")->required();
  kv->add_option("-n", n, "vertex count")->required();
  kv->add_flag("--machine", machine, "JSON report on stdout");

  CLI::App* vf = app.add_subcommand(
      "verify", "check an instance file for highly (a, m)-resistance");
  vf->add_option("file", file, "instance JSON file")->required();
  vf->add_option("-a", a, "attacker count")->required();
  vf->add_option("-m", m, "failure count")->required();
  vf->add_flag("--machine", machine, "JSON report on stdout");

  CLI::App* cs = app.add_subcommand(
      "construct", "build the optimal clique-union realization for (1, m)");
  cs->add_option("-m", m, "failure count")->required();
  cs->add_option("-n", n, "vertex count")->required();
  cs->add_option("-o,--out", out, "output path ('-' = stdout)");
  cs->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  cs->add_flag("--machine", machine, "JSON report on stdout");

  CLI::App* orc = app.add_subcommand(
      "oracle", "brute-force minimal color count on tiny graphs (n <= 7)");
  orc->add_option("-a", a, "attacker count")->required();
  orc->add_option("-m", m, "failure count")->required();
  orc->add_option("-n", n, "vertex count (at most 7)")->required();
  orc->add_option("-k,--k-max", k_max, "largest color count to try");
  orc->add_flag("--witness", witness,
                "emit the first realization found as an instance file");
  orc->add_option("-o,--out", out, "witness output path ('-' = stdout)");
  orc->add_flag("--machine", machine, "JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (kv->parsed()) return cmd_kvalue(a, m, n, machine);
    if (vf->parsed()) return cmd_verify(file, a, m, machine);
    if (cs->parsed()) return cmd_construct(m, n, out, format, machine);
    if (orc->parsed())
      return cmd_oracle(a, m, n, k_max, witness, out, machine);
  } catch (const hrmc::infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const hrmc::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
