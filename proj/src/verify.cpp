#include "dtl/verify.hpp"

#include <functional>
#include <sstream>

#include "dtl/chern.hpp"

namespace dtl {

void FuzzConfig::validate() const {
  if (trials < 1 || max_degree < 1 || max_vars < 1 || max_terms < 1 ||
      coeff_bound < 1 || term_cap < 1)
    throw DomainError("fuzz configuration bounds must be positive");
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::BiadditivityLeft: return "biadditivity-left";
    case Suite::BiadditivityRight: return "biadditivity-right";
    case Suite::LinearLemma: return "linear-lemma";
    case Suite::FastPath: return "fastpath";
    case Suite::Stabilization: return "stabilization";
    case Suite::Degree: return "degree";
    case Suite::Chern: return "chern";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      Suite::BiadditivityLeft, Suite::BiadditivityRight, Suite::LinearLemma,
      Suite::FastPath,         Suite::Stabilization,     Suite::Degree,
      Suite::Chern,
  };
  return suites;
}

std::uint32_t FuzzGen::uniform(std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(rng_() % (hi - lo + 1));
}

mpz_class FuzzGen::coefficient() {
  const std::uint32_t mag = uniform(1, config_.coeff_bound);
  return uniform(0, 1) ? mpz_class(mag) : mpz_class(-static_cast<std::int64_t>(mag));
}

mpz_class FuzzGen::multiplicity() {
  const std::uint32_t mag = uniform(1, 3);
  return uniform(0, 1) ? mpz_class(mag) : mpz_class(-static_cast<std::int64_t>(mag));
}

VariableSpace FuzzGen::space(Family family) {
  const std::uint32_t bound = uniform(1, config_.max_vars);
  return family == Family::X ? VariableSpace::x(bound) : VariableSpace::y(bound);
}

Polynomial FuzzGen::polynomial(const VariableSpace& space, std::uint32_t degree) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Polynomial::TermMap table;
    const std::uint32_t want = uniform(1, config_.max_terms);
    for (std::uint32_t t = 0; t < want; ++t) {
      IndexSeq key(degree);
      for (auto& v : key) v = {uniform(0, space.n() - 1), 0};
      std::sort(key.begin(), key.end());
      auto [it, fresh] = table.emplace(std::move(key), coefficient());
      if (!fresh) {
        it->second += coefficient();
        if (it->second == 0) table.erase(it);
      }
    }
    if (!table.empty())
      return Polynomial::from_terms(space, degree, std::move(table));
  }
  throw InternalError("could not draw a nonzero polynomial");
}

Polynomial FuzzGen::polynomial(Family family) {
  const VariableSpace s = space(family);
  return polynomial(s, uniform(1, config_.max_degree));
}

Cycle FuzzGen::cycle(const VariableSpace& space, std::uint32_t max_components) {
  const std::uint32_t k = uniform(1, max_components);
  std::vector<Cycle::Component> comps;
  for (std::uint32_t i = 0; i < k; ++i)
    comps.emplace_back(polynomial(space, uniform(1, config_.max_degree)),
                       multiplicity());
  return Cycle(space, std::move(comps));
}

namespace {

struct Case {
  bool ok;
  std::string counterexample;
};

// Runs `trials` checks, redrawing any case whose expansion trips the term
// cap; the redraw pattern is a pure function of the seed, so reports are
// reproducible byte for byte.
SuiteResult run_trials(Suite suite, const FuzzConfig& config,
                       const std::function<Case(FuzzGen&)>& one) {
  SuiteResult result{suite, 0, 0, 0, {}};
  FuzzGen gen(config);
  for (std::uint32_t t = 0; t < config.trials; ++t) {
    std::uint32_t redraws = 0;
    for (;;) {
      try {
        const Case c = one(gen);
        if (c.ok) {
          ++result.passed;
        } else {
          ++result.failed;
          if (result.first_counterexample.empty())
            result.first_counterexample =
                "trial " + std::to_string(t + 1) + ":\n" + c.counterexample;
        }
        break;
      } catch (const ResourceError&) {
        ++result.oversize_redraws;
        if (++redraws > 1000)
          throw ResourceError("term cap too small for the fuzz envelope");
      }
    }
  }
  return result;
}

std::string poly_line(const char* name, const Polynomial& p) {
  return std::string("  ") + name + " = " + p.str() + "\n";
}

Case check_equal(const Polynomial& lhs, const Polynomial& rhs, std::string header) {
  if (lhs == rhs) return {true, {}};
  header += "  lhs = " + lhs.str() + "\n  rhs = " + rhs.str() + "\n";
  return {false, std::move(header)};
}

SuiteResult run_biadditivity(Suite suite, const FuzzConfig& config, bool left) {
  return run_trials(suite, config, [&](FuzzGen& gen) -> Case {
    const VariableSpace xs = gen.space(Family::X);
    const VariableSpace ys = gen.space(Family::Y);
    if (left) {
      const Polynomial f1 = gen.polynomial(xs, gen.uniform(1, config.max_degree));
      const Polynomial f2 = gen.polynomial(xs, gen.uniform(1, config.max_degree));
      const Polynomial g = gen.polynomial(ys, gen.uniform(1, config.max_degree));
      const Polynomial lhs = tensor_divisor(mul(f1, f2, config.term_cap), g, config.term_cap);
      const Polynomial rhs = mul(tensor_divisor(f1, g, config.term_cap),
                                 tensor_divisor(f2, g, config.term_cap), config.term_cap);
      return check_equal(lhs, rhs,
                         poly_line("f1", f1) + poly_line("f2", f2) + poly_line("g", g));
    }
    const Polynomial f = gen.polynomial(xs, gen.uniform(1, config.max_degree));
    const Polynomial g1 = gen.polynomial(ys, gen.uniform(1, config.max_degree));
    const Polynomial g2 = gen.polynomial(ys, gen.uniform(1, config.max_degree));
    const Polynomial lhs = tensor_divisor(f, mul(g1, g2, config.term_cap), config.term_cap);
    const Polynomial rhs = mul(tensor_divisor(f, g1, config.term_cap),
                               tensor_divisor(f, g2, config.term_cap), config.term_cap);
    return check_equal(lhs, rhs,
                       poly_line("f", f) + poly_line("g1", g1) + poly_line("g2", g2));
  });
}

SuiteResult run_linear_lemma(const FuzzConfig& config) {
  return run_trials(Suite::LinearLemma, config, [&](FuzzGen& gen) -> Case {
    const Polynomial f = gen.polynomial(gen.space(Family::X), 1);
    const Polynomial g = gen.polynomial(Family::Y);
    return check_equal(suspend_linear(f, g, config.term_cap),
                       tensor_divisor(f, g, config.term_cap),
                       poly_line("f", f) + poly_line("g", g));
  });
}

SuiteResult run_fastpath(const FuzzConfig& config) {
  return run_trials(Suite::FastPath, config, [&](FuzzGen& gen) -> Case {
    const Polynomial f = gen.polynomial(Family::X);
    const Polynomial g = gen.polynomial(Family::Y);
    return check_equal(tensor_fast(f, g, config.term_cap),
                       tensor_divisor(f, g, config.term_cap),
                       poly_line("f", f) + poly_line("g", g));
  });
}

SuiteResult run_stabilization(const FuzzConfig& config) {
  return run_trials(Suite::Stabilization, config, [&](FuzzGen& gen) -> Case {
    const Polynomial f = gen.polynomial(Family::X);
    const Polynomial g = gen.polynomial(Family::Y);
    const VariableSpace bigger_x = VariableSpace::x(f.space().n() + gen.uniform(1, 3));
    const VariableSpace bigger_y = VariableSpace::y(g.space().n() + gen.uniform(1, 3));
    const Polynomial small = tensor_divisor(f, g, config.term_cap);
    const Polynomial big = tensor_divisor(f.stabilized(bigger_x),
                                          g.stabilized(bigger_y), config.term_cap);
    return check_equal(small.stabilized(VariableSpace::z(bigger_x.n(), bigger_y.n())),
                       big, poly_line("f", f) + poly_line("g", g));
  });
}

SuiteResult run_degree(const FuzzConfig& config) {
  return run_trials(Suite::Degree, config, [&](FuzzGen& gen) -> Case {
    const Cycle eta = gen.cycle(gen.space(Family::X));
    const Cycle xi = gen.cycle(gen.space(Family::Y));
    const mpz_class got = degree(tensor_cycles(eta, xi, config.term_cap));
    const mpz_class want = degree(eta) * degree(xi);
    if (got == want) return {true, {}};
    return {false, "  eta = " + eta.str() + "\n  xi = " + xi.str() +
                       "\n  deg(eta (x) xi) = " + got.get_str() +
                       "\n  deg(eta)*deg(xi) = " + want.get_str() + "\n"};
  });
}

// Fixed case list: formula vs oracle and the bigraded correspondence for
// every 1 <= i <= r <= 5. `trials` does not apply.
SuiteResult run_chern(const FuzzConfig& config) {
  SuiteResult result{Suite::Chern, 0, 0, 0, {}};
  (void)config;
  for (std::uint32_t r = 1; r <= 5; ++r) {
    for (std::uint32_t i = 1; i <= r; ++i) {
      const GradedClass formula = chern_tensor_formula(r, i);
      const GradedClass oracle = chern_tensor_oracle(r, i);
      if (formula == oracle) {
        ++result.passed;
      } else {
        ++result.failed;
        if (result.first_counterexample.empty())
          result.first_counterexample = "rank " + std::to_string(r) + " index " +
                                        std::to_string(i) + ":\n  formula = " +
                                        formula.str() + "\n  oracle = " + oracle.str() +
                                        "\n";
      }
      try {
        pairing_pullback_coefficients(r, i);  // asserts the correspondence internally
        ++result.passed;
      } catch (const InternalError& e) {
        ++result.failed;
        if (result.first_counterexample.empty())
          result.first_counterexample = "bigraded correspondence p=" +
                                        std::to_string(r) + " k=" + std::to_string(i) +
                                        ": " + e.what() + "\n";
      }
    }
  }
  return result;
}

}  // namespace

SuiteResult run_suite(Suite suite, const FuzzConfig& config) {
  config.validate();
  switch (suite) {
    case Suite::BiadditivityLeft:
      return run_biadditivity(suite, config, true);
    case Suite::BiadditivityRight:
      return run_biadditivity(suite, config, false);
    case Suite::LinearLemma:
      return run_linear_lemma(config);
    case Suite::FastPath:
      return run_fastpath(config);
    case Suite::Stabilization:
      return run_stabilization(config);
    case Suite::Degree:
      return run_degree(config);
    case Suite::Chern:
      return run_chern(config);
  }
  throw DomainError("unknown suite");
}

std::string SuiteResult::report(const FuzzConfig& config) const {
  std::ostringstream out;
  out << "suite " << suite_name(suite) << ": seed=" << config.seed
      << " trials=" << config.trials << " max-degree=" << config.max_degree
      << " max-vars=" << config.max_vars << " max-terms=" << config.max_terms
      << " coeff-bound=" << config.coeff_bound << " term-cap=" << config.term_cap
      << "\n";
  out << "result: pass=" << passed << " fail=" << failed
      << " oversize-redraws=" << oversize_redraws << "\n";
  if (!first_counterexample.empty())
    out << "first counterexample at " << first_counterexample;
  out << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace dtl
