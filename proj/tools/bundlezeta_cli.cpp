// bundlezeta-cli: builds a job document from flags (or reads one) and hands
// it to the library through the C interface.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bundlezeta/bundlezeta.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct Flags {
  std::string input;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::string format;
  // shortcuts that build the document
  std::string matrix, monodromy, variant, route, suite, construction;
  std::optional<int> genus, boundary, count, index;
};

int usage(const std::string& msg) {
  std::cerr << "usage error: " << msg << '\n';
  return BZ_USAGE;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

// Parses a matrix literal so that a typo is reported before the job runs.
std::optional<json> matrix_literal(const std::string& flag, const std::string& text) {
  json m = json::parse(text, nullptr, false);
  if (m.is_discarded() || !m.is_array()) {
    std::cerr << "usage error: " << flag << " expects a matrix like \"[[2,1],[1,1]]\"\n";
    return std::nullopt;
  }
  return m;
}

int run(const std::string& command, const Flags& f) {
  std::string text;
  bool shortcuts = !f.matrix.empty() || !f.monodromy.empty() || !f.variant.empty() || !f.route.empty() ||
                   !f.suite.empty() || !f.construction.empty() || f.genus || f.boundary || f.count || f.index;
  if (!f.input.empty()) {
    if (shortcuts) return usage("--input cannot be combined with flags that describe the job");
    if (!read_file(f.input, text)) return usage("cannot read " + f.input);
  } else if (command == "run") {
    return usage("run needs --input FILE");
  } else {
    json doc = {{"schema_version", 1}, {"command", command}};
    const std::string& m = !f.monodromy.empty() ? f.monodromy : f.matrix;
    if (!m.empty()) {
      auto lit = matrix_literal(f.monodromy.empty() ? "--matrix" : "--monodromy", m);
      if (!lit) return BZ_USAGE;
      const bool torus_map = command == "twisted-zeta" || command == "pi-zeta" || command == "product-mode";
      if (torus_map) {
        doc["torus_map"] = *lit;
      } else if (f.boundary) {
        doc["monodromy"] = {{"phi1", *lit}, {"boundary", *f.boundary}, {"genus", f.genus.value_or(0)}};
      } else {
        doc["monodromy"] = *lit;
      }
    }
    if (!f.variant.empty()) doc["variant"] = f.variant;
    if (!f.route.empty()) doc["route"] = f.route;
    if (!f.suite.empty()) doc["suite"] = f.suite;
    if (f.count) doc["count"] = *f.count;
    if (f.index) doc["index"] = *f.index;
    if (!f.construction.empty()) {
      doc["bundle"] = {{"construction", f.construction}};
      if (f.seed) doc["bundle"]["seed"] = *f.seed;
    }
    text = doc.dump();
  }

  bz_job* job = nullptr;
  if (bz_status s = bz_job_parse(text.c_str(), &job); s != BZ_OK) {
    std::cerr << "schema error: " << bz_last_error() << '\n';
    return s;
  }
  struct Free {
    bz_job* j;
    ~Free() { bz_job_free(j); }
  } guard{job};
  if (command != "run") {
    const char* c = bz_job_command(job);
    if (c && command != c) return usage(std::string("the document is a '") + c + "' job, not '" + command + "'");
  }
  if (const char* env = std::getenv("BUNDLEZETA_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v < 1 || v > 100000) return usage("BUNDLEZETA_N must be a positive integer");
    bz_job_set_default_n(job, static_cast<int>(v));
  }
  if (f.n && bz_job_set_n(job, *f.n) != BZ_OK) return usage(bz_last_error());
  if (f.seed) bz_job_set_seed(job, *f.seed);
  if (!f.format.empty()) bz_job_set_format(job, f.format == "json" ? BZ_FORMAT_JSON : BZ_FORMAT_TEXT);

  bz_result* res = nullptr;
  bz_status s = bz_job_run(job, &res);
  if (!res) {
    std::cerr << "error: " << bz_last_error() << '\n';
    return s;
  }
  std::fputs(bz_result_output(res), stdout);
  if (*bz_result_error(res)) std::cerr << bz_result_error(res) << '\n';
  bz_result_free(res);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zeta functions, torsions and Gromov-Taubes series of mapping tori"};
  app.set_version_flag("--version", std::string(bz_version()));
  app.require_subcommand(1);

  Flags f;
  std::string chosen;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", f.input, "job document (JSON or TOML)")->check(CLI::ExistingFile);
    sub->add_option("--n", f.n, "truncation (t-degree or weight); default from BUNDLEZETA_N, else 8")->check(CLI::PositiveNumber);
    sub->add_option("--seed", f.seed, "seed for randomized data and suites");
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };
  auto monodromy = [&](CLI::App* sub) {
    sub->add_option("--matrix,--monodromy", f.matrix, "action on H_1 of the fiber, e.g. \"[[2,1],[1,1]]\"");
    sub->add_option("--genus", f.genus, "fiber genus (with --boundary)");
    sub->add_option("--boundary", f.boundary, "number of boundary components of the fiber")->check(CLI::PositiveNumber);
  };

  auto* run_cmd = app.add_subcommand("run", "run a job document; the command comes from the document");
  common(run_cmd);

  for (size_t i = 0; const char* name = bz_command_name(i); ++i) {
    const std::string c = name;
    auto* sub = app.add_subcommand(c, "run a '" + c + "' job");
    common(sub);
    if (c == "zeta" || c == "torsion" || c == "alexander") {
      monodromy(sub);
      if (c != "alexander")
        sub->add_option("--variant", f.variant, "plain or total_abelian")->check(CLI::IsMember({"plain", "total_abelian"}));
      if (c == "zeta") sub->add_option("--route", f.route, "det, exp or orbits")->check(CLI::IsMember({"det", "exp", "orbits"}));
      if (c == "alexander") sub->add_option("--index", f.index, "chain degree i of det(1 - t phi_i)");
    }
    if (c == "twisted-zeta" || c == "pi-zeta" || c == "product-mode")
      sub->add_option("--matrix", f.matrix, "hyperbolic torus map whose orbits form the catalog");
    if (c == "pi-zeta" || c == "product-mode") {
      sub->add_option("--construction", f.construction, "bundle: disk, random or random_torus")
          ->check(CLI::IsMember({"disk", "random", "random_torus"}));
      if (c == "pi-zeta") sub->add_option("--route", f.route, "trace or theorem")->check(CLI::IsMember({"trace", "theorem"}));
    }
    if (c == "verify") {
      std::string names = "all";
      for (size_t k = 0; const char* s = bz_suite_name(k); ++k) names += std::string(", ") + s;
      sub->add_option("--suite", f.suite, "one of " + names);
      sub->add_option("--count", f.count, "instances (or seeds) per suite")->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : BZ_USAGE;
  }
  return run(chosen, f);
}
