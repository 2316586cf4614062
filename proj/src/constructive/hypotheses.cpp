#include "berge/constructive/hypotheses.hpp"

#include <string>

namespace berge {

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::AboveHalf:
      return "above-half";
    case Regime::Half:
      return "half";
    case Regime::NearHalfOdd:
      return "near-half-odd";
    case Regime::NearHalfEven:
      return "near-half-even";
    case Regime::BelowHalf:
      return "below-half";
    case Regime::Unsupported:
      return "unsupported";
  }
  return "unsupported";
}

Regime classify_regime(int n, int r) {
  if (r < 3 || r >= n) return Regime::Unsupported;
  if (2 * r > n) return Regime::AboveHalf;
  if (2 * r == n) return Regime::Half;
  if (n == 2 * r + 1) return Regime::NearHalfOdd;
  if (n == 2 * r + 2) return Regime::NearHalfEven;
  if (n == 2 * r + 3 || n == 2 * r + 4) return Regime::BelowHalf;
  return Regime::Unsupported;
}

int extra_edge_requirement(Regime regime, int r) {
  switch (regime) {
    case Regime::AboveHalf:
    case Regime::Half:
      return 1;
    case Regime::NearHalfOdd:
    case Regime::NearHalfEven:
      return 6;
    case Regime::BelowHalf:
      return 5 * (r - 1) + 2;
    case Regime::Unsupported:
      return -1;
  }
  return -1;
}

bool requirement_is_per_vertex(Regime regime) { return regime == Regime::BelowHalf; }

HypothesisReport check_hypotheses(const HamiltonianFrame& frame) {
  HypothesisReport report;
  const int n = frame.n();
  const int r = frame.r();
  report.regime = classify_regime(n, r);
  if (report.regime == Regime::Unsupported) {
    report.detail = "no extraction strategy for n=" + std::to_string(n) + ", r=" + std::to_string(r);
    return report;
  }
  report.required = extra_edge_requirement(report.regime, r);
  if (report.regime == Regime::BelowHalf) report.size_bound = 19;
  if (requirement_is_per_vertex(report.regime)) {
    report.vertex = 0;
    report.count = frame.extra_degree(0);
    for (int v = 1; v < n; ++v) {
      if (frame.extra_degree(v) < report.count) {
        report.vertex = v;
        report.count = frame.extra_degree(v);
      }
    }
    report.met = report.count >= report.required;
    report.detail = "every vertex needs " + std::to_string(report.required) + " extra edges; vertex " +
                    std::to_string(frame.input_vertex(report.vertex)) + " has " + std::to_string(report.count);
  } else {
    report.vertex = 0;
    report.count = frame.extra_degree(0);
    for (int v = 1; v < n; ++v) {
      if (frame.extra_degree(v) > report.count) {
        report.vertex = v;
        report.count = frame.extra_degree(v);
      }
    }
    report.met = report.count >= report.required;
    report.detail = "some vertex needs " + std::to_string(report.required) + " extra edges; best is vertex " +
                    std::to_string(frame.input_vertex(report.vertex)) + " with " + std::to_string(report.count);
  }
  return report;
}

}  // namespace berge
