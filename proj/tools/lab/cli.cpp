#include "lab/cli.hpp"

#include <CLI11.hpp>

namespace ellsl2::lab {

std::variant<RunConfig, RunResult> parse_command_line(int argc, const char* const* argv, const char* env_format) {
  RunConfig c;
  CLI::App app{"Elliptic deformations of sl(2): build, verify and sweep", "ellsl2"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a file of key = value lines");

  std::string format;
  std::size_t order = 0;
  app.add_option("--j", c.j, "Spin label, e.g. 1/2, 1, 3/2");
  app.add_option("--j1", c.j1, "Left tensor factor spin");
  app.add_option("--j2", c.j2, "Right tensor factor spin");
  app.add_option("--j3", c.j3, "Third factor for coassociativity");
  app.add_option("--h", c.h, "Deformation parameter");
  app.add_option("--k", c.k, "Elliptic modulus");
  auto* order_opt = app.add_option("--order", order, "Series order override")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", c.tol, "Residual tolerance (relative to the scale)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", c.seed, "Seed for randomized checks");
  app.add_option("--u", c.u, "Complex argument as re,im");
  app.add_option("--which", c.which, "Coproduct (1|uh|2) or shift (sign|uh-half|ell-iKp|ell-2KiKp)");
  app.add_option("--form", c.form, "Casimir form");
  app.add_flag("--jordanian", c.jordanian, "Use the Jordanian triplet");
  app.add_option("--expr", c.expr, "Operator expression in Jp, Jm, J0, Jpinv");
  std::vector<std::string> js;
  std::vector<std::string> hs;
  std::vector<std::string> ks;
  app.add_option("--js", js, "Sweep: comma-separated spins")->delimiter(',');
  app.add_option("--hs", hs, "Sweep: comma-separated h values")->delimiter(',');
  app.add_option("--ks", ks, "Sweep: comma-separated k values")->delimiter(',');
  app.add_flag("--scalar", c.scalar_checks, "Sweep: include numeric half-period identities");
  app.add_option("--threads", c.threads, "Sweep: worker count (0 = hardware)");

  auto verb = [&](const char* name, const char* help, std::initializer_list<std::pair<const char*, const char*>> actions) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (actions.size() != 0) {
      sub->require_subcommand(1);
      for (const auto& [a, ah] : actions) sub->add_subcommand(a, ah);
    }
    return sub;
  };
  verb("rep", "Spin representations", {{"build", "Classical matrices for --j"}});
  verb("deform", "Elliptic and Jordanian triplets",
       {{"build", "Deformed generators for --j"}, {"verify", "Relation, inversion and Casimir residuals"}});
  verb("hopf", "Coproducts", {{"delta", "Coproduct matrices on --j1 x --j2"}, {"verify", "Coproduct residuals"}});
  verb("auto", "Automorphisms", {{"shift", "Apply the shift named by --which"}});
  verb("rewrite", "Enveloping algebra rewriting", {{"nf", "Normal form of --expr"}});
  verb("elliptic", "Jacobi functions",
       {{"K", "Complete integrals"}, {"eval", "sn, cn, dn at --u"}, {"periods", "Period lattice"}});
  verb("verify-all", "Run every verification suite", {});
  verb("sweep", "Sweep the grid --js x --hs x --ks", {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return RunResult{kExitPass, app.help()};
  } catch (const CLI::CallForAllHelp& e) {
    return RunResult{kExitPass, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return RunResult{kExitUsage, std::string("usage error: ") + e.what() + "\n" + app.help()};
  }

  CLI::App* sub = app.get_subcommands().front();
  c.verb = sub->get_name();
  if (!sub->get_subcommands().empty()) c.action = sub->get_subcommands().front()->get_name();
  if (order_opt->count() > 0) c.order = order;
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
    return out;
  };
  c.js = join(js);
  c.hs = join(hs);
  c.ks = join(ks);

  if (format.empty() && env_format != nullptr && *env_format != '\0') {
    format = env_format;
    if (format != "json" && format != "csv") {
      return RunResult{kExitUsage, "usage error: ELLSL2_FORMAT must be json or csv\n"};
    }
  }
  if (format == "csv") {
    c.format = OutputFormat::csv;
  } else if (format.empty() && c.verb == "sweep") {
    c.format = OutputFormat::csv;
  }
  return c;
}

}  // namespace ellsl2::lab
