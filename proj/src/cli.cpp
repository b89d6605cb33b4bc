#include "orthostab/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

#include "orthostab/oracle.hpp"

namespace orthostab {

namespace {

json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) fail(ErrorKind::InvalidInput, "malformed JSON in '" + arg + "'");
  return parsed;
}

std::string residual_string(const Certificate& c) {
  if (c.exact && c.ok()) return "0";
  std::ostringstream os;
  os << c.residual();
  return os.str();
}

struct Options {
  std::string spec, matrix, q, problem, free, backend = "exact", out, report;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int count = 1, max_size = 6;
  bool inverse_direction = false;
};

CliResult cmd_canonical(const Options& opt) {
  CanonicalSpec spec = canonical_spec_from_json(load_json_arg(opt.spec));
  if (opt.backend == "float") return {0, matrix_to_json(assemble_canonical_float(spec)), opt.out};
  return {0, matrix_to_json(assemble_canonical(spec)), opt.out};
}

CliResult cmd_dim(const Options& opt) {
  CanonicalSpec spec = canonical_spec_from_json(load_json_arg(opt.spec));
  return {0, json{{"dim", isotropy_dim(spec)}}, opt.out};
}

CliResult cmd_sample(const Options& opt) {
  CanonicalSpec spec = canonical_spec_from_json(load_json_arg(opt.spec));
  if (opt.backend != "exact")
    fail(ErrorKind::BackendUnavailable, "sampling runs on the exact backend only");
  Rng rng(opt.seed);
  json elements = json::array();
  bool all_ok = true;
  for (int k = 0; k < opt.count; ++k) {
    IsotropyElement el = spec.pair_case()
        ? element_nonzero(spec, random_element(spec.segments, rng))
        : element_nilpotent(spec, random_free_data(
              nilpotent_stabilizer_problem(spec.segments), rng));
    all_ok = all_ok && el.cert.ok();
    elements.push_back(json{{"q", matrix_to_json(el.q)},
                            {"certificate", certificate_to_json(el.cert)}});
  }
  json out{{"spec", canonical_spec_to_json(spec)},
           {"seed", opt.seed},
           {"count", opt.count},
           {"elements", elements}};
  return {all_ok ? 0 : 1, out, opt.out};
}

CliResult cmd_verify(const Options& opt) {
  AnyMatrix m = matrix_from_json(load_json_arg(opt.matrix));
  AnyMatrix q = matrix_from_json(load_json_arg(opt.q));
  Certificate cert;
  if (opt.backend == "float" || !m.exact || !q.exact) {
    FMat mf = m.exact ? to_float(m.e) : m.f;
    FMat qf = q.exact ? to_float(q.e) : q.f;
    cert = verify(mf, qf, opt.tol);
  } else {
    cert = verify(m.e, q.e);
  }
  json out{{"stabilizes", cert.stabilizes},
           {"orthogonal", cert.orthogonal},
           {"residual", residual_string(cert)}};
  return {cert.ok() ? 0 : 1, out, opt.out};
}

CliResult cmd_solve(const Options& opt) {
  CongruenceProblem problem = problem_from_json(load_json_arg(opt.problem));
  FreeData free = free_data_from_json(load_json_arg(opt.free));
  ToeplitzElement x = congruence_solve(problem, free);
  EMat residual = congruence_residual(problem, x);
  json out{{"x", toeplitz_to_json(x)},
           {"residual", residual.is_zero() ? "0" : "nonzero"}};
  return {residual.is_zero() ? 0 : 1, out, opt.out};
}

CliResult cmd_reshuffle(const Options& opt) {
  SegmentSpec spec = segment_spec_from_json(load_json_arg(opt.spec));
  EMat m = exact_matrix_from_json(load_json_arg(opt.matrix));
  EMat res = opt.inverse_direction ? unshuffle(spec, m) : reshuffle(spec, m);
  return {0, matrix_to_json(res), opt.out};
}

CliResult cmd_oracle_dim(const Options& opt) {
  EMat m = exact_matrix_from_json(load_json_arg(opt.matrix));
  return {0, json{{"dim", commutant_so_dim(m)}}, opt.out};
}

CliResult cmd_oracle_sweep(const Options& opt) {
  std::vector<SweepRow> rows = dimension_sweep(opt.max_size);
  json table = json::array();
  bool all = true;
  for (const SweepRow& row : rows) {
    all = all && row.match;
    table.push_back(json{{"case", row.spec.kind == CanonicalCase::NonzeroPair ? "nonzero" : "nilpotent"},
                         {"alpha", row.spec.segments.alpha},
                         {"mu", row.spec.segments.mu},
                         {"formula", row.formula},
                         {"oracle", row.oracle},
                         {"match", row.match}});
  }
  json out{{"max_size", opt.max_size}, {"rows", table}, {"all_match", all}};
  if (!opt.report.empty()) {
    std::ofstream f(opt.report);
    if (!f) fail(ErrorKind::InvalidInput, "cannot write '" + opt.report + "'");
    f << out.dump(2) << "\n";
  }
  return {all ? 0 : 1, out, opt.out};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"canonical forms and isotropy groups of skew-symmetric and orthogonal matrices"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--backend", opt.backend)->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", opt.tol);
    sub->add_option("--seed", opt.seed);
    sub->add_option("--out", opt.out);
  };

  CLI::App* canonical = app.add_subcommand("canonical", "assemble a canonical form");
  canonical->add_option("--spec", opt.spec)->required();
  add_common(canonical);

  CLI::App* dim = app.add_subcommand("dim", "isotropy dimension of a canonical form");
  dim->add_option("--spec", opt.spec)->required();
  add_common(dim);

  CLI::App* sample = app.add_subcommand("sample", "draw verified isotropy elements");
  sample->add_option("--spec", opt.spec)->required();
  sample->add_option("--count", opt.count);
  add_common(sample);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check Q^T Q = I and Q^T M Q = M");
  verify_cmd->add_option("--matrix", opt.matrix)->required();
  verify_cmd->add_option("--q", opt.q)->required();
  add_common(verify_cmd);

  CLI::App* solve = app.add_subcommand("solve", "solve the block-Toeplitz congruence equation");
  solve->add_option("--problem", opt.problem)->required();
  solve->add_option("--free", opt.free)->required();
  add_common(solve);

  CLI::App* reshuffle_cmd = app.add_subcommand("reshuffle", "conjugate by the regrouping permutation");
  reshuffle_cmd->add_option("--spec", opt.spec)->required();
  reshuffle_cmd->add_option("--matrix", opt.matrix)->required();
  reshuffle_cmd->add_flag("--inverse", opt.inverse_direction);
  add_common(reshuffle_cmd);

  CLI::App* oracle_dim = app.add_subcommand("oracle-dim", "brute-force isotropy dimension");
  oracle_dim->add_option("--matrix", opt.matrix)->required();
  add_common(oracle_dim);

  CLI::App* oracle_sweep = app.add_subcommand("oracle-sweep", "formula vs oracle over a spec family");
  oracle_sweep->add_option("--max-size", opt.max_size);
  oracle_sweep->add_option("--report", opt.report);
  add_common(oracle_sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return {2, json{{"error", {{"kind", "InvalidInput"}, {"detail", e.what()}}}}, ""};
  }

  try {
    if (canonical->parsed()) return cmd_canonical(opt);
    if (dim->parsed()) return cmd_dim(opt);
    if (sample->parsed()) return cmd_sample(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (reshuffle_cmd->parsed()) return cmd_reshuffle(opt);
    if (oracle_dim->parsed()) return cmd_oracle_dim(opt);
    if (oracle_sweep->parsed()) return cmd_oracle_sweep(opt);
  } catch (const Error& e) {
    return {2, json{{"error", {{"kind", error_kind_name(e.kind())}, {"detail", e.detail()}}}}, opt.out};
  } catch (const std::exception& e) {
    return {2, json{{"error", {{"kind", "Internal"}, {"detail", e.what()}}}}, opt.out};
  }
  return {2, json{{"error", {{"kind", "InvalidInput"}, {"detail", "no subcommand"}}}}, ""};
}

}  // namespace orthostab
