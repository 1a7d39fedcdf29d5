#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "aemod/errors.hpp"

namespace aemod {

/// Default slack used to turn the model's strict inequalities (per-class
/// stability, charging-queue stability) into checkable non-strict ones:
/// LHS <= RHS - eps.
inline constexpr double kStrictSlack = 1e-6;

/// Tolerance for probability-sum and flow-conservation identities.
inline constexpr double kSumTolerance = 1e-9;

// Indexing convention (mirrors the model): vehicles arrive in SoC classes
// 0..n-1 and customers belong to classes 1..n. Vectors over arrival classes
// (p, q) are stored 0-based at their natural index. Vectors over customer
// classes (lambda_c, per-class rates, margins) are stored 0-based with
// element k holding the value for class k+1. Dispatch rows follow the
// customer-class convention: pi[r] is the row for vehicle class r+1 and has
// r+1 entries for sub-classes 1..r+1.

/// Exogenous parameters of one service zone. Rates are per minute.
struct ZoneConfig {
  int n = 0;                      ///< number of customer/vehicle classes
  double lambda_v = 0.0;          ///< zone vehicle arrival rate
  std::vector<double> p;          ///< SoC distribution of arrivals, classes 0..n-1
  std::vector<double> lambda_c;   ///< customer arrival rates, classes 1..n
  double mu_c = 0.0;              ///< full-charging rate; partial points run at n*mu_c
  int c_points = 0;               ///< number of rapid partial-charging points

  double total_customer_rate() const {
    return std::accumulate(lambda_c.begin(), lambda_c.end(), 0.0);
  }

  /// Partial-charging service capacity C * n * mu_c.
  double partial_capacity() const { return c_points * n * mu_c; }

  void validate() const {
    if (n < 2) throw validation_error("n: need at least 2 classes, got " + std::to_string(n));
    if (!(lambda_v > 0.0)) throw validation_error("lambda_v: must be positive");
    if (!(mu_c > 0.0)) throw validation_error("mu_c: must be positive");
    if (c_points < 1) throw validation_error("c_points: must be a positive integer");
    if (static_cast<int>(p.size()) != n)
      throw validation_error("p: expected " + std::to_string(n) + " entries, got " +
                             std::to_string(p.size()));
    if (static_cast<int>(lambda_c.size()) != n)
      throw validation_error("lambda_c: expected " + std::to_string(n) + " entries, got " +
                             std::to_string(lambda_c.size()));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (p[i] < 0.0 || p[i] > 1.0)
        throw validation_error("p: entry for class " + std::to_string(i) + " outside [0, 1]");
      sum += p[i];
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw validation_error("p: probabilities must sum to 1");
    for (int i = 0; i < n; ++i) {
      // Every customer class must carry demand; a demand-free class should
      // be removed by re-binning before optimization.
      if (!(lambda_c[i] > 0.0))
        throw validation_error("lambda_c: rate for class " + std::to_string(i + 1) +
                               " must be positive");
    }
  }
};

/// The decision variables: charging vector q and lower-triangular dispatch
/// matrix. q[0] is the probability a depleted vehicle fully (vs. partially)
/// charges; q[i], i>=1, the probability a class-i vehicle serves with its
/// current SoC instead of charging one class up. pi[r][c] is the
/// probability a service-ready class-(r+1) vehicle serves sub-class c+1.
struct DecisionSet {
  std::vector<double> q;
  std::vector<std::vector<double>> pi;

  /// Row-identity dispatch (every vehicle serves its own class).
  static DecisionSet same_class(int n, std::vector<double> q_values) {
    DecisionSet d;
    d.q = std::move(q_values);
    d.pi.resize(n);
    for (int r = 0; r < n; ++r) {
      d.pi[r].assign(r + 1, 0.0);
      d.pi[r][r] = 1.0;
    }
    return d;
  }

  void validate(const ZoneConfig& cfg) const {
    if (static_cast<int>(q.size()) != cfg.n)
      throw validation_error("q: expected " + std::to_string(cfg.n) + " entries, got " +
                             std::to_string(q.size()));
    for (int i = 0; i < cfg.n; ++i)
      if (!(q[i] >= 0.0 && q[i] <= 1.0))
        throw validation_error("q: entry " + std::to_string(i) + " outside [0, 1]");
    if (static_cast<int>(pi.size()) != cfg.n)
      throw validation_error("pi: expected " + std::to_string(cfg.n) + " rows");
    for (int r = 0; r < cfg.n; ++r) {
      if (static_cast<int>(pi[r].size()) != r + 1)
        throw validation_error("pi: row " + std::to_string(r + 1) + " must have " +
                               std::to_string(r + 1) + " entries");
      double row_sum = 0.0;
      for (double v : pi[r]) {
        if (!(v >= 0.0 && v <= 1.0))
          throw validation_error("pi: row " + std::to_string(r + 1) + " entry outside [0, 1]");
        row_sum += v;
      }
      if (std::abs(row_sum - 1.0) > kSumTolerance)
        throw validation_error("pi: row " + std::to_string(r + 1) + " must sum to 1");
    }
  }
};

/// Derived per-class flow rates and response-rate margins.
struct RateProfile {
  std::vector<double> lambda_v_class;  ///< service-ready vehicle rate per class 1..n
  std::vector<double> lambda_vs;       ///< effective dispatch rate per class 1..n
  std::vector<double> margins;         ///< lambda_vs - lambda_c per class 1..n
};

/// Outcome of the four stability condition families.
struct StabilityReport {
  std::vector<bool> per_class_stable;     ///< margin >= eps per class
  std::vector<bool> response_limit_met;   ///< margin >= r per class
  bool partial_charging_stable = false;   ///< partial flow <= C*n*mu_c - eps
  bool full_station_stable = false;       ///< lambda_v*p0*q0 <= mu_c - eps
  double lemma1_bound = 0.0;              ///< (lambda_v - sum lambda_c) / n

  bool all_stable() const {
    if (!partial_charging_stable || !full_station_stable) return false;
    return std::all_of(per_class_stable.begin(), per_class_stable.end(),
                       [](bool b) { return b; });
  }
};

/// Service-ready vehicle arrival rate per class. Class i (1..n-1) collects
/// class-(i-1) arrivals that partially charged and class-i arrivals that
/// serve as-is; class n collects partially charged class-(n-1) arrivals and
/// fully charged depleted ones.
inline std::vector<double> vehicle_class_rates(const ZoneConfig& cfg, const DecisionSet& d) {
  cfg.validate();
  d.validate(cfg);
  const int n = cfg.n;
  std::vector<double> rates(n);
  for (int k = 0; k + 1 < n; ++k)
    rates[k] = cfg.lambda_v * (cfg.p[k] * (1.0 - d.q[k]) + cfg.p[k + 1] * d.q[k + 1]);
  rates[n - 1] = cfg.lambda_v * (cfg.p[n - 1] * (1.0 - d.q[n - 1]) + cfg.p[0] * d.q[0]);
  return rates;
}

/// Effective dispatch rate to each customer class and resulting margins.
inline RateProfile effective_service_rates(const ZoneConfig& cfg, const DecisionSet& d) {
  RateProfile out;
  out.lambda_v_class = vehicle_class_rates(cfg, d);
  const int n = cfg.n;
  out.lambda_vs.assign(n, 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) out.lambda_vs[c] += out.lambda_v_class[r] * d.pi[r][c];
  out.margins.resize(n);
  for (int c = 0; c < n; ++c) out.margins[c] = out.lambda_vs[c] - cfg.lambda_c[c];
  return out;
}

/// Total flow into the partial-charging points: every class-i arrival that
/// was directed to charge one class up.
inline double partial_charging_flow(const ZoneConfig& cfg, const DecisionSet& d) {
  double flow = 0.0;
  for (int i = 0; i < cfg.n; ++i) flow += cfg.p[i] * (1.0 - d.q[i]);
  return cfg.lambda_v * flow;
}

/// Flow into the full-charging station.
inline double full_station_flow(const ZoneConfig& cfg, const DecisionSet& d) {
  return cfg.lambda_v * cfg.p[0] * d.q[0];
}

/// Largest response-rate margin the zone can support across all classes at
/// once: (lambda_v - sum lambda_c) / n. A negative value means the zone
/// cannot meet any positive margin.
inline double fleet_rate_bound(const ZoneConfig& cfg) {
  cfg.validate();
  return (cfg.lambda_v - cfg.total_customer_rate()) / cfg.n;
}

/// Evaluates the four stability condition families for the target margin r.
/// Strict model inequalities are checked with slack eps.
inline StabilityReport check_stability(const ZoneConfig& cfg, const DecisionSet& d, double r,
                                       double eps = kStrictSlack) {
  if (r < 0.0) throw validation_error("r: target margin must be nonnegative");
  const RateProfile rates = effective_service_rates(cfg, d);
  StabilityReport rep;
  rep.per_class_stable.resize(cfg.n);
  rep.response_limit_met.resize(cfg.n);
  for (int c = 0; c < cfg.n; ++c) {
    rep.per_class_stable[c] = rates.margins[c] >= eps;
    rep.response_limit_met[c] = rates.margins[c] >= r;
  }
  rep.partial_charging_stable = partial_charging_flow(cfg, d) <= cfg.partial_capacity() - eps;
  rep.full_station_stable = full_station_flow(cfg, d) <= cfg.mu_c - eps;
  rep.lemma1_bound = (cfg.lambda_v - cfg.total_customer_rate()) / cfg.n;
  return rep;
}

/// Per-class expected response times 1/(lambda_vs - lambda_c) plus the
/// maximum over classes. max_class is 1-based; ties go to the lowest class.
struct ResponseTimes {
  std::vector<double> per_class;
  double max_minutes = 0.0;
  int max_class = 0;
};

inline ResponseTimes analytic_response_times(const ZoneConfig& cfg, const DecisionSet& d) {
  const RateProfile rates = effective_service_rates(cfg, d);
  ResponseTimes out;
  out.per_class.resize(cfg.n);
  for (int c = 0; c < cfg.n; ++c) {
    if (!(rates.margins[c] > 0.0))
      throw instability_error("class " + std::to_string(c + 1) +
                              ": response-rate margin is not positive");
    out.per_class[c] = 1.0 / rates.margins[c];
  }
  out.max_class = 1;
  out.max_minutes = out.per_class[0];
  for (int c = 1; c < cfg.n; ++c) {
    if (out.per_class[c] > out.max_minutes) {
      out.max_minutes = out.per_class[c];
      out.max_class = c + 1;
    }
  }
  return out;
}

}  // namespace aemod
