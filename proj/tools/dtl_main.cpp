#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "dtl/json_io.hpp"
#include "dtl/obstruction.hpp"
#include "dtl/parse.hpp"
#include "dtl/verify.hpp"

namespace {

// Exit codes, fixed for scripting:
//   0 ok, 1 verified-false, 2 parse, 3 domain, 4 resource, 64 usage,
//   70 internal invariant violation.
enum ExitCode : int {
  kOk = 0,
  kVerifiedFalse = 1,
  kParse = 2,
  kDomain = 3,
  kResource = 4,
  kUsage = 64,
  kInternal = 70,
};

struct Options {
  std::string format = "text";
  std::uint64_t term_cap = dtl::kDefaultTermCap;
};

void add_common(CLI::App* cmd, Options* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--term-cap", opts->term_cap,
                  "Abort expansions above this many terms")
      ->envname("DTL_TERM_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void print_poly(const dtl::Polynomial& p, const Options& opts) {
  if (opts.format == "json")
    std::cout << dtl::poly_to_json(p).dump() << "\n";
  else
    std::cout << p.str() << "\n";
}

dtl::Cycle rehouse_empty(const dtl::Cycle& c, dtl::Family family) {
  if (!c.empty()) return c;
  return dtl::Cycle(family == dtl::Family::X ? dtl::VariableSpace::x(1)
                                             : dtl::VariableSpace::y(1));
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw dtl::DomainError("not a rational number: `" + s + "`");
  if (q.get_den() == 0) throw dtl::DomainError("zero denominator in `" + s + "`");
  q.canonicalize();
  return q;
}

int run_verify_suites(const std::string& suite_arg, const dtl::FuzzConfig& config) {
  std::vector<dtl::Suite> suites;
  if (suite_arg == "all")
    suites = dtl::all_suites();
  else
    suites.push_back(*dtl::suite_from_name(suite_arg));
  bool all_ok = true;
  bool first = true;
  for (dtl::Suite s : suites) {
    const dtl::SuiteResult result = dtl::run_suite(s, config);
    if (!first) std::cout << "\n";
    std::cout << result.report(config);
    all_ok = all_ok && result.ok();
    first = false;
  }
  return all_ok ? kOk : kVerifiedFalse;
}

int run_chern(std::uint32_t rank, std::uint32_t index, bool verify,
              std::uint32_t max_rank) {
  if (rank > 0) {
    const dtl::GradedClass formula = dtl::chern_tensor_formula(rank, index);
    std::cout << formula.str() << "\n";
    if (!verify) return kOk;
    const bool same = formula == dtl::chern_tensor_oracle(rank, index);
    std::cout << (same ? "oracle agrees" : "oracle DISAGREES") << "\n";
    return same ? kOk : kVerifiedFalse;
  }
  bool all_ok = true;
  for (std::uint32_t r = 1; r <= max_rank; ++r) {
    for (std::uint32_t i = 1; i <= r; ++i) {
      const bool same = dtl::chern_tensor_formula(r, i) == dtl::chern_tensor_oracle(r, i);
      std::cout << "rank " << r << " index " << i << ": "
                << (same ? "formula == oracle" : "MISMATCH") << "\n";
      all_ok = all_ok && same;
    }
  }
  std::cout << (all_ok ? "all cases agree" : "FAIL") << "\n";
  return all_ok ? kOk : kVerifiedFalse;
}

int run_obstruction(const std::vector<std::string>& ab, std::uint32_t left_gens) {
  const dtl::ObstructionSolution sol = dtl::obstruction_solve();
  std::cout << "side one = " << sol.side_one.str() << "\n";
  std::cout << "side two = " << sol.side_two_base.str() << " + a*(" << sol.side_two_a.str()
            << ") + b*(" << sol.side_two_b.str() << ")\n";
  std::cout << "coefficient rows:\n";
  for (const dtl::CoefficientRow& row : sol.rows)
    std::cout << "  " << row.str() << "\n";
  std::cout << "solution: a = " << sol.a.get_str() << ", b = " << sol.b.get_str()
            << "\n";

  mpq_class a = sol.a, b = sol.b;
  if (!ab.empty()) {
    a = parse_rational(ab[0]);
    b = parse_rational(ab[1]);
    std::cout << "membership target overridden: a = " << a.get_str()
              << ", b = " << b.get_str() << "\n";
  }
  const dtl::MembershipReport report = dtl::obstruction_membership(left_gens, a, b);
  std::cout << "projection image basis (weight 2):";
  for (const dtl::GradedClass& v : report.image_basis) std::cout << " " << v.str();
  std::cout << "\n";
  std::cout << "target = " << report.target.str() << "\n";
  if (report.member) {
    std::cout << "target lies in the image: no obstruction\n";
    return kVerifiedFalse;
  }
  std::cout << "witness outside the image: " << report.residual.str() << "\n";
  std::cout << "obstruction confirmed\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor pairing on divisors and codimension-1 cycles"};
  app.require_subcommand(1);

  // tensor
  auto* tensor_cmd = app.add_subcommand("tensor", "Pair two homogeneous forms");
  std::string tensor_f, tensor_g;
  Options tensor_opts;
  bool tensor_fast_path = false;
  tensor_cmd->add_option("f", tensor_f, "x-family form, e.g. \"x0^2 - 3*x1*x2\"")
      ->required();
  tensor_cmd->add_option("g", tensor_g, "y-family form, e.g. \"y5*y7\"")->required();
  tensor_cmd->add_flag("--fast", tensor_fast_path,
                       "Use the factored path (same output)");
  add_common(tensor_cmd, &tensor_opts);

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "Apply the multilinear pairing to slots");
  std::vector<std::string> psi_xs, psi_ys;
  Options psi_opts;
  psi_cmd->add_option("-x", psi_xs, "x slot (repeat; e slots of degree d)")
      ->required()
      ->take_all();
  psi_cmd->add_option("-y", psi_ys, "y slot (repeat; d slots of degree e)")
      ->required()
      ->take_all();
  add_common(psi_cmd, &psi_opts);

  // cycle-tensor
  auto* cycle_cmd = app.add_subcommand("cycle-tensor", "Pair two cycles");
  std::string cycle_left, cycle_right, eta0_src = "x0", xi0_src = "y0";
  bool reduced = false;
  Options cycle_opts;
  cycle_cmd->add_option("left", cycle_left, "x-family cycle, e.g. \"2*[x0] + -1*[x1]\"")
      ->required();
  cycle_cmd->add_option("right", cycle_right, "y-family cycle")->required();
  cycle_cmd->add_flag("--reduced", reduced, "Use the reduced pairing");
  cycle_cmd->add_option("--eta0", eta0_src, "Left basepoint hyperplane")
      ->capture_default_str();
  cycle_cmd->add_option("--xi0", xi0_src, "Right basepoint hyperplane")
      ->capture_default_str();
  add_common(cycle_cmd, &cycle_opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
  std::string suite_arg;
  dtl::FuzzConfig config;
  std::vector<std::string> suite_names{"all"};
  for (dtl::Suite s : dtl::all_suites()) suite_names.push_back(dtl::suite_name(s));
  verify_cmd->add_option("--suite", suite_arg, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--trials", config.trials)->capture_default_str();
  verify_cmd->add_option("--seed", config.seed)->capture_default_str();
  verify_cmd->add_option("--max-degree", config.max_degree)->capture_default_str();
  verify_cmd->add_option("--max-vars", config.max_vars)->capture_default_str();
  verify_cmd->add_option("--max-terms", config.max_terms)->capture_default_str();
  verify_cmd->add_option("--coeff-bound", config.coeff_bound)->capture_default_str();
  verify_cmd->add_option("--term-cap", config.term_cap)
      ->envname("DTL_TERM_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // chern
  auto* chern_cmd = app.add_subcommand("chern", "Chern class of a twisted bundle");
  std::uint32_t rank = 0, index = 0, max_rank = 5;
  bool chern_verify = false;
  auto* rank_opt = chern_cmd->add_option("--rank", rank, "Bundle rank");
  chern_cmd->add_option("--index", index, "Class index")->needs(rank_opt);
  chern_cmd->add_flag("--verify", chern_verify, "Compare against the root oracle");
  chern_cmd->add_option("--max-rank", max_rank, "Verify every rank up to this")
      ->capture_default_str();

  // obstruction
  auto* obstruction_cmd =
      app.add_subcommand("obstruction", "Replay the higher-codimension obstruction");
  std::vector<std::string> ab;
  std::uint32_t left_gens = 2;
  obstruction_cmd
      ->add_option("--ab", ab, "Override the membership target coefficients a b")
      ->expected(2);
  obstruction_cmd
      ->add_option("--left-gens", left_gens, "Generators on the projected factor")
      ->check(CLI::Range(2u, 16u))
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (*tensor_cmd) {
      const dtl::Polynomial f = dtl::parse_polynomial(tensor_f);
      const dtl::Polynomial g = dtl::parse_polynomial(tensor_g);
      const dtl::Polynomial result = tensor_fast_path
                                         ? dtl::tensor_fast(f, g, tensor_opts.term_cap)
                                         : dtl::tensor_divisor(f, g, tensor_opts.term_cap);
      print_poly(result, tensor_opts);
    } else if (*psi_cmd) {
      std::vector<dtl::Polynomial> xs, ys;
      for (const std::string& src : psi_xs) xs.push_back(dtl::parse_polynomial(src));
      for (const std::string& src : psi_ys) ys.push_back(dtl::parse_polynomial(src));
      // Slots must agree with the first slot's space before PsiInput sees
      // them, since parsing infers the smallest space per slot.
      for (auto* side : {&xs, &ys}) {
        std::uint32_t bound = 1;
        for (const dtl::Polynomial& p : *side) bound = std::max(bound, p.space().n());
        const dtl::VariableSpace common = side == &xs ? dtl::VariableSpace::x(bound)
                                                      : dtl::VariableSpace::y(bound);
        for (dtl::Polynomial& p : *side) p = p.stabilized(common);
      }
      print_poly(dtl::psi(dtl::PsiInput(std::move(xs), std::move(ys)), psi_opts.term_cap),
                 psi_opts);
    } else if (*cycle_cmd) {
      const dtl::Cycle left =
          rehouse_empty(dtl::parse_cycle(cycle_left), dtl::Family::X);
      const dtl::Cycle right =
          rehouse_empty(dtl::parse_cycle(cycle_right), dtl::Family::Y);
      dtl::Cycle result = [&] {
        if (!reduced) return dtl::tensor_cycles(left, right, cycle_opts.term_cap);
        const dtl::Hyperplane eta0(dtl::parse_polynomial(eta0_src));
        const dtl::Hyperplane xi0(dtl::parse_polynomial(xi0_src));
        return dtl::reduced_tensor(left, right, eta0, xi0, cycle_opts.term_cap);
      }();
      if (cycle_opts.format == "json") {
        nlohmann::json j{{"left_degree", degree(left).get_str()},
                         {"right_degree", degree(right).get_str()},
                         {"result_degree", degree(result).get_str()},
                         {"result", dtl::cycle_to_json(result)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "left degree: " << degree(left).get_str() << "\n";
        std::cout << "right degree: " << degree(right).get_str() << "\n";
        std::cout << "result: " << result.str() << "\n";
        std::cout << "result degree: " << degree(result).get_str() << "\n";
      }
    } else if (*verify_cmd) {
      return run_verify_suites(suite_arg, config);
    } else if (*chern_cmd) {
      if (rank == 0 && !chern_verify)
        throw CLI::ValidationError("chern", "needs --rank/--index or --verify");
      if (rank > 0 && index == 0)
        throw CLI::ValidationError("chern", "--rank needs --index");
      return run_chern(rank, index, chern_verify, max_rank);
    } else if (*obstruction_cmd) {
      return run_obstruction(ab, left_gens);
    }
    return kOk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const dtl::ParseError& e) {
    std::cerr << e.diagnostic() << "\n";
    return kParse;
  } catch (const dtl::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const dtl::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const dtl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
