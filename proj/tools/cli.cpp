#include "cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "plab/permutoid_c.h"

namespace plab::cli {

namespace {

constexpr int kUsage = 3;

struct Settings {
  std::string input;
  std::string second_input;
  std::string presentation;
  std::string table;
  std::string output;
  std::size_t radius = 0;
  std::size_t max_ground = 8;
  std::size_t budget = 1'000'000;
  std::size_t max_cosets = 10'000;
  std::size_t cap = 10;
  std::size_t m = 0;
  std::size_t group_cap = 100'000;
  bool nontrivial_only = false;
  bool deterministic = false;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using JsonString = std::unique_ptr<char, decltype(&plab_string_free)>;
template <class T>
using Handle = std::unique_ptr<T, void (*)(T*)>;

class Runner {
public:
  Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

  // Writes the report (or structured error) and maps the status to an exit code.
  int finish(plab_status status, char* raw) {
    JsonString text(raw, &plab_string_free);
    if (text) {
      if (s_.output.empty()) {
        out_ << text.get();
      } else {
        std::ofstream f(s_.output, std::ios::binary);
        if (!f) {
          err_ << "permutoid-lab: cannot write " << s_.output << "\n";
          return kUsage;
        }
        f << text.get();
      }
    }
    const int code = plab_status_class(status);
    if (status != PLAB_OK && status != PLAB_NEGATIVE && status != PLAB_INCONCLUSIVE)
      err_ << "permutoid-lab: " << plab_last_error() << "\n";
    return code;
  }

  int with_permutoid(const std::string& path, const std::function<plab_status(const plab_permutoid*, char**)>& f) {
    plab_permutoid* raw = nullptr;
    char* error = nullptr;
    const auto text = slurp(path);
    if (auto st = plab_permutoid_from_json(text.c_str(), &raw, &error); st != PLAB_OK) return finish(st, error);
    Handle<plab_permutoid> p(raw, &plab_permutoid_free);
    char* report = nullptr;
    const auto st = f(p.get(), &report);
    return finish(st, report);
  }

  int with_group(bool allow_table, const std::function<plab_status(const plab_group*, char**)>& f) {
    const bool has_p = !s_.presentation.empty();
    const bool has_t = !s_.table.empty();
    if (has_p == has_t) throw UsageError(allow_table ? "give exactly one of --presentation or --table"
                                                     : "--presentation is required");
    if (has_t && !allow_table) throw UsageError("this command needs --presentation");
    plab_group* raw = nullptr;
    char* error = nullptr;
    const auto text = slurp(has_p ? s_.presentation : s_.table);
    const auto st = has_p ? plab_group_from_presentation(text.c_str(), &raw, &error)
                          : plab_group_from_table_json(text.c_str(), &raw, &error);
    if (st != PLAB_OK) return finish(st, error);
    Handle<plab_group> g(raw, &plab_group_free);
    char* report = nullptr;
    const auto result = f(g.get(), &report);
    return finish(result, report);
  }

  int with_pseudogroup(const std::function<plab_status(const plab_pseudogroup*, char**)>& f) {
    plab_pseudogroup* raw = nullptr;
    char* error = nullptr;
    const auto text = slurp(s_.input);
    if (auto st = plab_pseudogroup_from_json(text.c_str(), &raw, &error); st != PLAB_OK) return finish(st, error);
    Handle<plab_pseudogroup> h(raw, &plab_pseudogroup_free);
    char* report = nullptr;
    const auto st = f(h.get(), &report);
    return finish(st, report);
  }

private:
  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_output(CLI::App* cmd, Settings& s) {
  cmd->add_option("-o,--output", s.output, "Write the report to this file instead of standard output");
}

void add_input(CLI::App* cmd, std::string& target, const char* name, const char* description) {
  cmd->add_option(name, target, description)->required()->check(CLI::ExistingFile);
}

void add_group_source(CLI::App* cmd, Settings& s, bool allow_table) {
  cmd->add_option("--presentation", s.presentation, "Presentation file (gens:/rels: lines)")
      ->check(CLI::ExistingFile);
  if (allow_table)
    cmd->add_option("--table", s.table, "Explicit multiplication-table file (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--max-cosets", s.max_cosets, "Live-coset cap for coset enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void add_search(CLI::App* cmd, Settings& s) {
  cmd->add_option("--max-size", s.max_ground, "Largest target ground set to try")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", s.budget, "Search node budget")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  std::function<int(Runner&)> action;

  CLI::App app{"Permutoids, Cameron permutoids, developments and pseudogroups", "permutoid-lab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* validate = app.add_subcommand("validate", "Validate a permutoid file and describe it");
  add_input(validate, s.input, "permutoid", "Permutoid file (JSON)");
  add_output(validate, s);
  validate->callback([&] {
    action = [&](Runner& r) {
      return r.with_permutoid(s.input, [](const plab_permutoid* p, char** o) { return plab_permutoid_describe(p, o); });
    };
  });

  auto* cameron = app.add_subcommand("cameron", "Build the Cameron permutoid of a marked group");
  add_group_source(cameron, s, true);
  cameron->add_option("--radius", s.radius, "Ball radius rho")->required()->check(CLI::PositiveNumber);
  add_output(cameron, s);
  cameron->callback([&] {
    action = [&](Runner& r) {
      return r.with_group(true, [&](const plab_group* g, char** o) { return plab_cameron(g, s.radius, s.max_cosets, o); });
    };
  });

  auto* develop = app.add_subcommand("develop", "Search for a finite development of a permutoid");
  add_input(develop, s.input, "permutoid", "Permutoid file (JSON)");
  add_search(develop, s);
  develop->add_flag("--deterministic", s.deterministic, "Single-threaded search with reproducible output");
  develop->add_flag("--timing", s.timing, "Include wall time in the statistics");
  add_output(develop, s);
  develop->callback([&] {
    action = [&](Runner& r) {
      return r.with_permutoid(s.input, [&](const plab_permutoid* p, char** o) {
        return plab_develop(p, s.max_ground, s.budget, s.deterministic, s.timing, o);
      });
    };
  });

  auto* verify = app.add_subcommand("verify-development", "Check a development file against its permutoid");
  add_input(verify, s.input, "permutoid", "Permutoid file (JSON)");
  add_input(verify, s.second_input, "development", "Development file (JSON)");
  add_output(verify, s);
  verify->callback([&] {
    action = [&](Runner& r) {
      const auto development = slurp(s.second_input);
      return r.with_permutoid(s.input, [&](const plab_permutoid* p, char** o) {
        return plab_verify_development(p, development.c_str(), o);
      });
    };
  });

  auto* quotients = app.add_subcommand("quotients", "List quotient permutoids up to isomorphism");
  add_input(quotients, s.input, "permutoid", "Permutoid file (JSON)");
  quotients->add_flag("--nontrivial-only", s.nontrivial_only, "Skip the trivial quotient");
  quotients->add_option("--cap", s.cap, "Largest ground set accepted for canonical forms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_output(quotients, s);
  quotients->callback([&] {
    action = [&](Runner& r) {
      return r.with_permutoid(s.input, [&](const plab_permutoid* p, char** o) {
        return plab_quotients(p, s.nontrivial_only, s.cap, o);
      });
    };
  });

  auto* universal = app.add_subcommand("universal-group", "Presentation of the universal group of a permutoid");
  add_input(universal, s.input, "permutoid", "Permutoid file (JSON)");
  universal->add_option("--max-cosets", s.max_cosets, "Live-coset cap when realizing the group (0 skips it)")
      ->capture_default_str();
  add_output(universal, s);
  universal->callback([&] {
    action = [&](Runner& r) {
      return r.with_permutoid(s.input, [&](const plab_permutoid* p, char** o) {
        return plab_universal_group(p, s.max_cosets, o);
      });
    };
  });

  auto* triangulate = app.add_subcommand("triangulate", "Triangular presentation on the ball of radius m");
  add_group_source(triangulate, s, false);
  triangulate->add_option("--m", s.m, "Ball radius m")->required()->check(CLI::PositiveNumber);
  add_output(triangulate, s);
  triangulate->callback([&] {
    action = [&](Runner& r) {
      return r.with_group(false, [&](const plab_group* g, char** o) { return plab_triangulate(g, s.m, s.max_cosets, o); });
    };
  });

  auto* coset = app.add_subcommand("coset-enum", "Realize a presentation by coset enumeration");
  add_group_source(coset, s, false);
  add_output(coset, s);
  coset->callback([&] {
    action = [&](Runner& r) {
      return r.with_group(false, [&](const plab_group* g, char** o) { return plab_coset_enum(g, s.max_cosets, o); });
    };
  });

  auto* probe = app.add_subcommand("probe-finite-quotient", "Look for a non-trivial finite quotient");
  add_group_source(probe, s, false);
  probe->add_option("--radius", s.radius, "Ball radius rho")->required()->check(CLI::PositiveNumber);
  add_search(probe, s);
  probe->add_option("--cap", s.cap, "Largest ground set accepted for canonical forms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  probe->add_flag("--deterministic", s.deterministic, "Single-threaded search with reproducible output");
  add_output(probe, s);
  probe->callback([&] {
    action = [&](Runner& r) {
      return r.with_group(false, [&](const plab_group* g, char** o) {
        plab_probe_options opt;
        plab_probe_options_init(&opt);
        opt.radius = s.radius;
        opt.max_ground = s.max_ground;
        opt.node_budget = s.budget;
        opt.max_cosets = s.max_cosets;
        opt.canonical_cap = s.cap;
        opt.deterministic = s.deterministic;
        return plab_probe(g, &opt, o);
      });
    };
  });

  auto* pseudo = app.add_subcommand("pseudogroup", "Finite pseudogroups given by generators");
  pseudo->require_subcommand(1);

  auto* generate = pseudo->add_subcommand("generate", "Saturate generators into maximal elements");
  add_input(generate, s.input, "file", "Pseudogroup or generator file (JSON)");
  add_output(generate, s);
  generate->callback([&] {
    action = [&](Runner& r) {
      return r.with_pseudogroup([](const plab_pseudogroup* h, char** o) { return plab_pseudogroup_generate(h, o); });
    };
  });

  auto* rigid = pseudo->add_subcommand("rigid", "Decide rigidity (exit 1 when not rigid)");
  add_input(rigid, s.input, "file", "Pseudogroup or generator file (JSON)");
  add_output(rigid, s);
  rigid->callback([&] {
    action = [&](Runner& r) {
      return r.with_pseudogroup([](const plab_pseudogroup* h, char** o) { return plab_pseudogroup_rigid(h, o); });
    };
  });

  auto* maximal = pseudo->add_subcommand("maximal", "The permutoid of maximal elements of a rigid pseudogroup");
  add_input(maximal, s.input, "file", "Pseudogroup or generator file (JSON)");
  add_output(maximal, s);
  maximal->callback([&] {
    action = [&](Runner& r) {
      return r.with_pseudogroup([](const plab_pseudogroup* h, char** o) { return plab_pseudogroup_maximal(h, o); });
    };
  });

  auto* pdevelop = pseudo->add_subcommand("develop", "Search for a free group action developing the pseudogroup");
  add_input(pdevelop, s.input, "file", "Pseudogroup or generator file (JSON)");
  add_search(pdevelop, s);
  pdevelop->add_option("--group-cap", s.group_cap, "Largest generated group examined per candidate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  pdevelop->add_flag("--timing", s.timing, "Include wall time in the statistics");
  add_output(pdevelop, s);
  pdevelop->callback([&] {
    action = [&](Runner& r) {
      return r.with_pseudogroup([&](const plab_pseudogroup* h, char** o) {
        return plab_pseudogroup_develop(h, s.max_ground, s.budget, s.group_cap, s.timing, o);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Runner runner(s, out, err);
  try {
    return action(runner);
  } catch (const UsageError& e) {
    err << "permutoid-lab: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace plab::cli
