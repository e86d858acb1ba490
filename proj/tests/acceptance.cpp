// Copyright 2026 The fentropy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
// line; the exit code is 0 only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "fentropy/markov.hpp"
#include "fentropy/rng.hpp"
#include "fentropy/scenarios.hpp"
#include "fentropy/separability.hpp"

using namespace fentropy;
using car::FockRep;
using car::Matrix;
using car::Region;
using states::StateDensity;
using states::StateKind;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& text, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, text.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct ScenarioOutcome {
  bool pass = true;
  double elapsed = 0.0;
  std::string detail;
};

ScenarioOutcome run(const scenarios::ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto result = scenarios::run_scenario(cfg);
  ScenarioOutcome out;
  out.elapsed = seconds_since(start);
  out.pass = result.all_pass();
  for (const auto& a : result.assertions) {
    if (!a.pass) {
      out.detail += " " + a.name + "=" + std::to_string(a.value);
    }
  }
  if (out.detail.empty()) out.detail = "all assertions pass";
  return out;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

Matrix random_hermitian(int n, Rng& rng) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Matrix random_psd(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  return g * g.adjoint();
}

}  // namespace

int main() {
  // 1. Strong subadditivity over 500 mixed-kind random states on 1+1+1 modes.
  {
    scenarios::ScenarioConfig cfg;
    cfg.scenario = "ssa-sweep";
    cfg.trials = 500;
    cfg.seed = 20260808;
    const auto out = run(cfg);
    const bool pass = out.pass && out.elapsed < 30.0;
    criterion(1, "strong subadditivity sweep, 500 states, residual <= 1e-9", pass,
              out.detail + ", " + fmt(out.elapsed) + " s (< 30 s)");
  }

  // 2. Commuting-square conditions on regional triples up to 5 modes and the
  //    twisted triple, with misuse rejection.
  {
    scenarios::ScenarioConfig cfg;
    cfg.scenario = "commuting-square";
    const auto out = run(cfg);
    criterion(2, "five commuting-square conditions <= 1e-10, misuse rejected", out.pass,
              out.detail + ", " + fmt(out.elapsed) + " s");
  }

  // 3. Entropy identities over 100 random states.
  {
    scenarios::ScenarioConfig cfg;
    cfg.scenario = "entropy-identities";
    cfg.trials = 100;
    cfg.seed = 31;
    const auto out = run(cfg);
    criterion(3, "entropy offset and restriction identities <= 1e-9", out.pass, out.detail);
  }

  // 4. Markov equivalence over 210 even states.
  {
    scenarios::ScenarioConfig cfg;
    cfg.scenario = "markov-equivalence";
    cfg.trials = 210;
    cfg.seed = 41;
    const auto out = run(cfg);
    criterion(4, "strong additivity <=> Petz recovery on 210 even states", out.pass,
              out.detail);
  }

  // 5. Counterexample at lambda in {0.25, 0.5, 1.0}.
  {
    bool pass = true;
    double worst_elapsed = 0.0;
    std::string detail;
    for (double lambda : {0.25, 0.5, 1.0}) {
      scenarios::ScenarioConfig cfg;
      cfg.scenario = "counterexample";
      cfg.lambda = lambda;
      cfg.seed = 7;
      const auto out = run(cfg);
      pass = pass && out.pass && out.elapsed < 60.0;
      worst_elapsed = std::max(worst_elapsed, out.elapsed);
      if (out.detail != "all assertions pass") {
        detail += " lambda=" + fmt(lambda) + ":" + out.detail;
      }
    }
    if (detail.empty()) detail = "all assertions pass";
    criterion(5, "nonseparable-marginal Markov state at lambda {0.25, 0.5, 1.0}", pass,
              detail + ", worst " + fmt(worst_elapsed) + " s (< 60 s)");
  }

  // 6. Regional and twisted triples agree on 100 random even states.
  {
    const FockRep rep(3);
    const states::Triple regional =
        states::regional_triple(rep, Region{1}, Region{2}, Region{3});
    const states::Triple twisted = states::twisted_triple(rep, Region{1}, Region{2}, Region{3});
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const StateDensity psi = states::random_state(rep, StateKind::Even, 60000 + t);
      const double gap = std::abs(entropy::ssa_residual(psi, regional).residual -
                                  entropy::ssa_residual(psi, twisted).residual);
      worst = std::max(worst, gap);
    }
    criterion(6, "even states: regional and twisted residuals agree to 1e-9", worst <= 1e-9,
              "max gap " + fmt(worst));
  }

  // 7. Additivity <=> product over 200 states on 1+1 modes.
  {
    scenarios::ScenarioConfig cfg;
    cfg.scenario = "additivity-product";
    cfg.trials = 200;
    cfg.seed = 71;
    const auto out = run(cfg);
    criterion(7, "entropy additivity <=> product property on 200 states", out.pass,
              out.detail);
  }

  // 8. Dense kernel at dimension <= 256.
  {
    Rng rng(80);
    bool pass = true;
    std::string detail;

    const Matrix m = random_hermitian(256, rng);
    const auto eig = linalg::hermitian_eig(m);
    const double rec =
        linalg::distance(eig.reconstruct(), m, linalg::Norm::Frobenius) / m.frobenius_norm();
    pass = pass && rec <= 256 * 1e-12;
    detail += "reconstruction " + fmt(rec);

    const Matrix p = random_psd(256, rng);
    const Matrix root = linalg::matrix_function(p, linalg::MatrixFunc::Sqrt);
    const double sq =
        linalg::distance(root * root, p, linalg::Norm::Frobenius) / p.frobenius_norm();
    pass = pass && sq <= 1e-10;
    detail += ", sqrt " + fmt(sq);

    const Matrix q = random_psd(64, rng) + Matrix::identity(64);
    const Matrix back = linalg::matrix_function(linalg::matrix_function(q, linalg::MatrixFunc::Log),
                                                linalg::MatrixFunc::Exp);
    const double exp_log =
        linalg::distance(back, q, linalg::Norm::Frobenius) / q.frobenius_norm();
    pass = pass && exp_log <= 1e-9;
    detail += ", exp(log) " + fmt(exp_log);

    // Kernel convention survives a rank-deficient input.
    Matrix singular = random_psd(128, rng);
    const auto seig = linalg::hermitian_eig(singular);
    Matrix proj(128, 128);
    for (int k = 16; k < 128; ++k)
      for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j)
          proj(i, j) += seig.eigenvalues[k] * seig.eigenvectors(i, k) *
                        std::conj(seig.eigenvectors(j, k));
    const Matrix isr = linalg::matrix_function(proj, linalg::MatrixFunc::InvSqrt);
    const Matrix support = isr * proj * isr;  // support projector
    const double idem =
        linalg::distance(support * support, support, linalg::Norm::Frobenius);
    pass = pass && idem <= 1e-9;
    detail += ", support idempotency " + fmt(idem);

    criterion(8, "eigendecomposition and matrix functions at dim <= 256", pass, detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
