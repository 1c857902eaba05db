#include "kchi/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "kchi/error.hpp"
#include "kchi/immanant.hpp"
#include "kchi/json_io.hpp"
#include "kchi/norms.hpp"
#include "kchi/sampling.hpp"
#include "kchi/symclass.hpp"
#include "kchi/symgroup.hpp"
#include "kchi/verify.hpp"

namespace kchi {

namespace {

constexpr const char* kCommandNames[] = {"chartable", "power", "deriv", "norm",
                                         "immanant",  "bound", "perturb", "verify"};

// Stream id for the random T that `norm` draws when no input is given.
constexpr std::uint64_t kNormInputStream = 0x6e6f726d;

Json header(const RunConfig& c) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = kCommandNames[static_cast<int>(c.command)];
  return j;
}

Json basis_json(const SymmetryClass& sc) {
  Json basis = Json::array();
  for (const auto& alpha : sc.delta_hat()) basis.push_back(to_json(alpha));
  return basis;
}

CMatrix read_square(const std::string& path, int n) {
  CMatrix a = read_matrix(path);
  if (n > 0 && a.rows() != static_cast<std::size_t>(n))
    throw DomainError(path + ": expected a " + std::to_string(n) + " x " + std::to_string(n) + " matrix");
  return a;
}

Json chartable(const RunConfig& c) {
  const auto table = CharTable::table(c.m);
  Json j = header(c);
  j["m"] = c.m;
  Json labels = Json::array();
  for (const auto& p : table->partitions()) labels.push_back(p.to_string());
  j["partitions"] = labels;
  j["cycle_types"] = labels;
  Json rows = Json::array();
  for (std::size_t l = 0; l < table->partitions().size(); ++l) {
    Json row = Json::array();
    for (std::size_t r = 0; r < table->partitions().size(); ++r) row.push_back(table->value(l, r));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

Json power(const RunConfig& c) {
  const CMatrix a = read_square(c.input, c.n);
  const auto sc = SymmetryClass::build(c.chi, c.n);
  Json j = header(c);
  j["chi"] = c.chi.to_string();
  j["n"] = c.n;
  j["dim"] = sc.dim();
  j["basis"] = basis_json(sc);
  j["matrix"] = to_json(k_chi_matrix(sc, a));
  return j;
}

Json deriv(const RunConfig& c) {
  const CMatrix t = read_square(c.input, c.n);
  const int n = static_cast<int>(t.rows());
  std::vector<CMatrix> xs;
  for (const auto& path : c.xs) xs.push_back(read_square(path, n));
  const auto sc = SymmetryClass::build(c.chi, n);
  Json j = header(c);
  j["chi"] = c.chi.to_string();
  j["n"] = n;
  j["k"] = c.k;
  j["dim"] = sc.dim();
  j["basis"] = basis_json(sc);
  j["matrix"] = to_json(dk_kchi(sc, t, xs));
  return j;
}

Json norm(const RunConfig& c) {
  CMatrix t;
  if (c.input.empty()) {
    auto rng = sample_rng(c.seed, kNormInputStream, 0);
    t = random_gaussian(static_cast<std::size_t>(c.n), rng);
  } else {
    t = read_square(c.input, c.n);
  }
  DerivTolerances tol;
  if (c.tolerance) tol = {*c.tolerance, *c.tolerance, *c.tolerance};
  const auto sc = SymmetryClass::build(c.chi, c.n);
  Json j = header(c);
  j["input"] = c.input.empty() ? Json("random") : Json(c.input);
  j.update(to_json(dk_norm_verify(sc, t, c.k, c.samples, c.seed, tol)));
  return j;
}

Json immanant_value(const RunConfig& c) {
  const CMatrix a = read_square(c.input, 0);
  Json j = header(c);
  j["chi"] = c.chi.to_string();
  j["n"] = a.rows();
  j["value"] = to_json(immanant(c.chi, a));
  return j;
}

Json bound(const RunConfig& c) {
  const CMatrix a = read_square(c.input, 0);
  Json j = header(c);
  j.update(to_json(dk_immanant_verify(c.chi, a, c.k, c.samples, c.seed, c.tolerance.value_or(1e-7))));
  return j;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json perturb(const RunConfig& c) {
  const CMatrix t = read_square(c.input, 0);
  const SingularValues nu = svd(t).s;
  const auto b = perturbation_bounds(c.chi, nu, c.delta);
  Json j = header(c);
  j["chi"] = c.chi.to_string();
  j["n"] = t.rows();
  j["delta"] = c.delta;
  j["singular_values"] = nu.values();
  j["kchi_bound"] = b.kchi_bound;
  j["imm_bound"] = optional_number(b.imm_bound);
  j["imm_bound_degree_scaled"] = optional_number(b.imm_bound_degree_scaled);
  return j;
}

void emit(const RunConfig& c, const Json& j, std::ostream& out) {
  const std::string text = dump(j);
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file || !(file << text)) throw DomainError("cannot write " + c.output);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  std::string chi_text;

  CLI::App app{"Symmetry classes of tensors: norms of derivatives and immanant bounds", "kchi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto add_chi = [&](CLI::App* sub) {
    sub->add_option("--chi", chi_text, "Partition, comma separated and weakly decreasing")->required();
  };
  const auto add_output = [&](CLI::App* sub) { sub->add_option("--output", c.output, "Write JSON here instead of stdout"); };
  const auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", c.samples, "Random unit tuples")->check(CLI::Range(1, 10000000));
    sub->add_option("--seed", c.seed, "Seed for every random draw");
    sub->add_option("--tolerance", c.tolerance, "Override report tolerances")->check(CLI::PositiveNumber);
  };

  auto* chartable_cmd = app.add_subcommand("chartable", "Character table of S_m");
  chartable_cmd->add_option("--m", c.m)->required()->check(CLI::Range(1, 20));
  add_output(chartable_cmd);

  auto* power_cmd = app.add_subcommand("power", "K_chi(A) in the orthonormal basis");
  add_chi(power_cmd);
  power_cmd->add_option("--n", c.n)->required()->check(CLI::Range(1, 64));
  power_cmd->add_option("--input", c.input, "Matrix A")->required();
  add_output(power_cmd);

  auto* deriv_cmd = app.add_subcommand("deriv", "D^k K_chi(T)(X1,...,Xk)");
  add_chi(deriv_cmd);
  deriv_cmd->add_option("--n", c.n)->check(CLI::Range(1, 64));
  deriv_cmd->add_option("--k", c.k)->required()->check(CLI::Range(0, 64));
  deriv_cmd->add_option("--input", c.input, "Matrix T")->required();
  deriv_cmd->add_option("--x", c.xs, "Direction matrix; repeat k times")->allow_extra_args(false);
  add_output(deriv_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "Closed-form norm of D^k K_chi(T) with sampled checks");
  add_chi(norm_cmd);
  norm_cmd->add_option("--n", c.n)->required()->check(CLI::Range(1, 64));
  norm_cmd->add_option("--k", c.k)->required()->check(CLI::Range(1, 64));
  norm_cmd->add_option("--input", c.input, "Matrix T; random from the seed if omitted");
  add_sampling(norm_cmd);
  add_output(norm_cmd);

  auto* immanant_cmd = app.add_subcommand("immanant", "d_chi(A)");
  add_chi(immanant_cmd);
  immanant_cmd->add_option("--input", c.input, "Matrix A")->required();
  add_output(immanant_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "Immanant derivative bound with sampled check");
  add_chi(bound_cmd);
  bound_cmd->add_option("--k", c.k)->required()->check(CLI::Range(0, 64));
  bound_cmd->add_option("--input", c.input, "Matrix A")->required();
  add_sampling(bound_cmd);
  add_output(bound_cmd);

  auto* perturb_cmd = app.add_subcommand("perturb", "Perturbation bounds for K_chi and d_chi");
  add_chi(perturb_cmd);
  perturb_cmd->add_option("--delta", c.delta)->required()->check(CLI::NonNegativeNumber);
  perturb_cmd->add_option("--input", c.input, "Matrix T")->required();
  add_output(perturb_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_option("--max-n", c.max_n)->check(CLI::Range(2, 4));
  verify_cmd->add_option("--seed", c.seed);
  add_output(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError("", app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError("", app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    throw UsageError(e.what(), parsed.empty() ? app.help() : parsed.front()->help());
  }

  CLI::App* sub = app.get_subcommands().front();
  for (int i = 0; i < 8; ++i)
    if (sub->get_name() == kCommandNames[i]) c.command = static_cast<Command>(i);

  if (!chi_text.empty()) {
    try {
      c.chi = Partition::parse(chi_text);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--chi: ") + e.what(), sub->help());
    }
  }
  if (c.command == Command::deriv && static_cast<int>(c.xs.size()) != c.k)
    throw UsageError("deriv: expected " + std::to_string(c.k) + " --x matrices, got " + std::to_string(c.xs.size()),
                     sub->help());
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::chartable: emit(c, chartable(c), out); return 0;
      case Command::power: emit(c, power(c), out); return 0;
      case Command::deriv: emit(c, deriv(c), out); return 0;
      case Command::norm: emit(c, norm(c), out); return 0;
      case Command::immanant: emit(c, immanant_value(c), out); return 0;
      case Command::bound: emit(c, bound(c), out); return 0;
      case Command::perturb: emit(c, perturb(c), out); return 0;
      case Command::verify: {
        const VerifyOptions options{c.max_n, c.seed};
        const auto criteria = run_acceptance(options);
        const Json report = verify_report(options, criteria);
        emit(c, report, out);
        return report["pass"].get<bool>() ? 0 : 4;
      }
    }
  } catch (const DomainError& e) {
    err << "kchi: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    err << "kchi: numeric error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    err << "kchi: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::bad_alloc&) {
    err << "kchi: out of memory\n";
    return 3;
  }
  return 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    // An empty message marks an explicit help request.
    if (std::string(e.what()).empty()) {
      out << e.usage();
      return 0;
    }
    err << "kchi: " << e.what() << "\n" << e.usage();
    return 1;
  }
  return run(config, out, err);
}

}  // namespace kchi
