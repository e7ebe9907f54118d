#include "jamopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "jamopt/channel.hpp"

namespace jamopt {
namespace {

double link_min(const std::vector<QuadraticCurve>& link, double t) {
  double best = std::numeric_limits<double>::infinity();
  for (const QuadraticCurve& curve : link) {
    best = std::min(best, eval(curve, t));
  }
  return best;
}

// v >= m by construction (m is the minimum over evals including v's curve).
bool attains_minimum(double v, double m, double eps) {
  return v - m <= eps * std::max(v, m);
}

bool dominates_other_link(double v, double other_min, double eps) {
  return other_min - v <= eps * std::max(v, other_min);
}

struct BestPick {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
  bool valid = false;

  void offer(double x_cand, double value_cand) {
    if (!valid || value_cand < value ||
        (value_cand == value && x_cand < x)) {
      x = x_cand;
      value = value_cand;
      valid = true;
    }
  }
};

PlacementResult solve_curves(const CurveSet& curves, double lo, double hi,
                             const SolveOptions& options) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("solve: empty jammer interval");
  }

  const CandidateSet candidates =
      enumerate_candidates(curves, options.eps_intersect);

  PlacementResult result;
  result.candidates_total = candidates.slot_count;
  result.feasible_list.reserve(candidates.points.size() + 2);

  for (const CandidatePoint& candidate : candidates.points) {
    if (candidate.x < lo || candidate.x > hi) {
      continue;
    }
    if (!is_feasible(candidate, curves, options.eps_feas)) {
      continue;
    }
    // Record the authoritative objective value, not the single-curve one, so
    // a tolerance-included candidate can never fake a lower minimum.
    result.feasible_list.push_back(
        {candidate.x, evaluate_sir_max(curves, candidate.x),
         candidate.origin});
  }
  if (options.include_endpoints) {
    result.feasible_list.push_back(
        {lo, evaluate_sir_max(curves, lo), EndpointOrigin{BoundSide::lower}});
    result.feasible_list.push_back(
        {hi, evaluate_sir_max(curves, hi), EndpointOrigin{BoundSide::upper}});
  }
  if (result.feasible_list.empty()) {
    throw std::runtime_error(
        "solve: no feasible candidate inside the jammer interval (endpoint "
        "candidates disabled)");
  }

  BestPick best;
  for (const CandidatePoint& candidate : result.feasible_list) {
    best.offer(candidate.x, candidate.value);
  }
  result.x_opt = best.x;
  result.sir_max_opt = best.value;
  result.sir_max_opt_db = sir_to_db(best.value);
  result.candidates_feasible = static_cast<int>(result.feasible_list.size());
  return result;
}

}  // namespace

double evaluate_sir_max(const CurveSet& curves, double t) {
  return std::max(link_min(curves.link1, t), link_min(curves.link2, t));
}

CandidateSet enumerate_candidates(const CurveSet& curves,
                                  double eps_intersect) {
  const int per_link = static_cast<int>(curves.link1.size());
  const int total = curves.curve_count();

  CandidateSet out;
  out.slot_count = 4 * per_link * per_link;  // 2N+2 + 2N(N+1) + 2(N+1)^2
  out.points.reserve(static_cast<std::size_t>(out.slot_count));

  for (int id = 0; id < total; ++id) {
    const VertexPoint v = vertex(curves.curve(id));
    out.points.push_back({v.x, v.value, VertexOrigin{id}});
  }

  auto add_roots = [&](const QuadraticCurve& a, const QuadraticCurve& b,
                       auto make_origin) {
    const IntersectionResult hit = intersect(a, b, eps_intersect);
    if (hit.kind != IntersectionResult::Kind::pair) {
      return;
    }
    out.points.push_back(
        {hit.x_minus, eval(a, hit.x_minus), make_origin(RootSign::minus)});
    out.points.push_back(
        {hit.x_plus, eval(a, hit.x_plus), make_origin(RootSign::plus)});
  };

  for (int link = 0; link < 2; ++link) {
    const auto& curves_of_link = link == 0 ? curves.link1 : curves.link2;
    const int base = link == 0 ? 0 : per_link;
    for (int i = 0; i < per_link; ++i) {
      for (int j = i + 1; j < per_link; ++j) {
        add_roots(curves_of_link[static_cast<std::size_t>(i)],
                  curves_of_link[static_cast<std::size_t>(j)],
                  [&](RootSign sign) -> CandidateOrigin {
                    return WithinLinkOrigin{base + i, base + j, sign};
                  });
      }
    }
  }

  for (int i = 0; i < per_link; ++i) {
    for (int j = 0; j < per_link; ++j) {
      add_roots(curves.link1[static_cast<std::size_t>(i)],
                curves.link2[static_cast<std::size_t>(j)],
                [&](RootSign sign) -> CandidateOrigin {
                  return CrossLinkOrigin{i, per_link + j, sign};
                });
    }
  }

  return out;
}

bool is_feasible(const CandidatePoint& candidate, const CurveSet& curves,
                 double eps_feas) {
  const double t = candidate.x;

  if (std::holds_alternative<EndpointOrigin>(candidate.origin)) {
    return true;
  }

  const double min1 = link_min(curves.link1, t);
  const double min2 = link_min(curves.link2, t);

  if (const auto* cross = std::get_if<CrossLinkOrigin>(&candidate.origin)) {
    const double v1 = eval(curves.curve(cross->curve_link1), t);
    const double v2 = eval(curves.curve(cross->curve_link2), t);
    return attains_minimum(v1, min1, eps_feas) &&
           attains_minimum(v2, min2, eps_feas);
  }

  int own_curve = 0;
  if (const auto* v = std::get_if<VertexOrigin>(&candidate.origin)) {
    own_curve = v->curve;
  } else {
    own_curve = std::get<WithinLinkOrigin>(candidate.origin).curve_a;
  }
  const bool in_link1 = curves.in_link1(own_curve);
  const double own_min = in_link1 ? min1 : min2;
  const double other_min = in_link1 ? min2 : min1;
  const double value = eval(curves.curve(own_curve), t);
  return attains_minimum(value, own_min, eps_feas) &&
         dominates_other_link(value, other_min, eps_feas);
}

PlacementResult solve(const Scenario& scenario, Axis axis,
                      double fixed_coordinate, const SolveOptions& options) {
  const CurveSet curves = build_curves(scenario, axis, fixed_coordinate);
  const std::pair<double, double> bounds = options.bounds.value_or(
      std::pair{scenario.jam_lower_m, scenario.jam_upper_m});
  return solve_curves(curves, bounds.first, bounds.second, options);
}

PlacementResult solve(const Scenario& scenario) {
  return solve(scenario, Axis::x, scenario.y_msi_m);
}

PlacementResult solve_dualhop(const Scenario& scenario,
                              double fixed_coordinate,
                              const SolveOptions& options) {
  if (scenario.uavs.size() != 1) {
    throw std::invalid_argument(
        "solve_dualhop: the specialization needs exactly one UAV");
  }
  if (auto issues = validate(scenario); has_errors(issues)) {
    throw ScenarioError(std::move(issues));
  }

  const UavRelay& uav = scenario.uavs.front();
  const double yhat = fixed_coordinate;
  const double big_d = scenario.distance_m;
  const double p_tr1 = dbm_to_linear(scenario.tr1_power_dbm);
  const double p_tr2 = dbm_to_linear(scenario.tr2_power_dbm);
  const double p_msi = dbm_to_linear(scenario.msi_power_dbm);
  const double p_u = dbm_to_linear(uav.power_dbm);

  const double den_near = uav.x_m * uav.x_m + uav.y_m * uav.y_m +
                          uav.h_m * uav.h_m;
  const double dx_far = big_d - uav.x_m;
  const double den_far = dx_far * dx_far + uav.y_m * uav.y_m +
                         uav.h_m * uav.h_m;
  const double ratio = scenario.channel.eta_nlos /
                       mu_factor(scenario.channel, PathKind::nlos);
  const double dy = yhat - uav.y_m;
  const double uav_offset = dy * dy + uav.h_m * uav.h_m;
  const double tr_offset = yhat * yhat;

  // The four receiver curves with their closed-form coefficient triples.
  const QuadraticCurve sir1{p_tr1 / (p_msi * den_near), uav.x_m, uav_offset};
  const QuadraticCurve sir2{p_u / (p_msi * den_far * ratio), big_d, tr_offset};
  const QuadraticCurve sir3{p_tr2 / (p_msi * den_far), uav.x_m, uav_offset};
  const QuadraticCurve sir4{p_u / (p_msi * den_near * ratio), 0.0, tr_offset};

  CurveSet curves;
  curves.axis = Axis::x;
  curves.fixed_coordinate = yhat;
  curves.link1 = {sir1, sir2};
  curves.link2 = {sir3, sir4};

  const std::pair<double, double> bounds = options.bounds.value_or(
      std::pair{scenario.jam_lower_m, scenario.jam_upper_m});
  const double lo = bounds.first;
  const double hi = bounds.second;
  if (!(lo <= hi)) {
    throw std::invalid_argument("solve_dualhop: empty jammer interval");
  }

  const double eps = options.eps_feas;
  PlacementResult result;
  result.candidates_total = 16;

  auto offer = [&](double x, CandidateOrigin origin) {
    if (x < lo || x > hi) {
      return;
    }
    result.feasible_list.push_back(
        {x, evaluate_sir_max(curves, x), origin});
  };

  // Vertices, guarded by own-link minimality and cross-link dominance.
  const QuadraticCurve* all[4] = {&sir1, &sir2, &sir3, &sir4};
  for (int i = 0; i < 4; ++i) {
    const double x = all[i]->vertex_x;
    const double value = eval(*all[i], x);
    const double min1 = std::min(eval(sir1, x), eval(sir2, x));
    const double min2 = std::min(eval(sir3, x), eval(sir4, x));
    const double own = i < 2 ? min1 : min2;
    const double other = i < 2 ? min2 : min1;
    if (attains_minimum(value, own, eps) &&
        dominates_other_link(value, other, eps)) {
      offer(x, VertexOrigin{i});
    }
  }

  // Within-link intersections: only the cross-link dominance guard is needed
  // with two curves per link.
  auto within = [&](const QuadraticCurve& a, const QuadraticCurve& b,
                    const QuadraticCurve& other_a,
                    const QuadraticCurve& other_b, int id_a, int id_b) {
    const IntersectionResult hit = intersect(a, b, options.eps_intersect);
    if (hit.kind != IntersectionResult::Kind::pair) {
      return;
    }
    for (RootSign sign : {RootSign::minus, RootSign::plus}) {
      const double x = sign == RootSign::minus ? hit.x_minus : hit.x_plus;
      const double value = eval(a, x);
      const double other = std::min(eval(other_a, x), eval(other_b, x));
      if (dominates_other_link(value, other, eps)) {
        offer(x, WithinLinkOrigin{id_a, id_b, sign});
      }
    }
  };
  within(sir1, sir2, sir3, sir4, 0, 1);
  within(sir3, sir4, sir1, sir2, 2, 3);

  // Cross-link intersections for the admissible pairs (the first-link and
  // second-link curves at the shared relay never meet; see intersect()).
  struct CrossPair {
    const QuadraticCurve* a;
    const QuadraticCurve* b;
    int id_a;
    int id_b;
  };
  const CrossPair pairs[] = {
      {&sir1, &sir4, 0, 3}, {&sir2, &sir3, 1, 2}, {&sir2, &sir4, 1, 3}};
  for (const CrossPair& pair : pairs) {
    const IntersectionResult hit =
        intersect(*pair.a, *pair.b, options.eps_intersect);
    if (hit.kind != IntersectionResult::Kind::pair) {
      continue;
    }
    for (RootSign sign : {RootSign::minus, RootSign::plus}) {
      const double x = sign == RootSign::minus ? hit.x_minus : hit.x_plus;
      const double va = eval(*pair.a, x);
      const double vb = eval(*pair.b, x);
      const double min1 = std::min(eval(sir1, x), eval(sir2, x));
      const double min2 = std::min(eval(sir3, x), eval(sir4, x));
      if (attains_minimum(va, min1, eps) && attains_minimum(vb, min2, eps)) {
        offer(x, CrossLinkOrigin{pair.id_a, pair.id_b, sign});
      }
    }
  }

  if (options.include_endpoints) {
    result.feasible_list.push_back(
        {lo, evaluate_sir_max(curves, lo), EndpointOrigin{BoundSide::lower}});
    result.feasible_list.push_back(
        {hi, evaluate_sir_max(curves, hi), EndpointOrigin{BoundSide::upper}});
  }
  if (result.feasible_list.empty()) {
    throw std::runtime_error(
        "solve_dualhop: no feasible candidate inside the jammer interval");
  }

  BestPick best;
  for (const CandidatePoint& candidate : result.feasible_list) {
    best.offer(candidate.x, candidate.value);
  }
  result.x_opt = best.x;
  result.sir_max_opt = best.value;
  result.sir_max_opt_db = sir_to_db(best.value);
  result.candidates_feasible = static_cast<int>(result.feasible_list.size());
  return result;
}

AlternatingResult solve_alternating(const Scenario& scenario, double initial_y,
                                    const AlternatingOptions& options) {
  if (options.max_rounds < 1) {
    throw std::invalid_argument("solve_alternating: max_rounds must be >= 1");
  }

  const auto y_bounds = options.y_bounds.value_or(
      std::pair{scenario.jam_lower_m, scenario.jam_upper_m});

  AlternatingResult state;
  state.y = initial_y;

  const PlacementResult first = solve(scenario, Axis::x, state.y, options.solve);
  state.x = first.x_opt;
  state.sir = first.sir_max_opt;
  state.rounds_used = 1;

  for (int round = 2; round <= options.max_rounds; ++round) {
    const bool along_y = round % 2 == 0;
    PlacementResult r;
    if (along_y) {
      SolveOptions per_round = options.solve;
      per_round.bounds = y_bounds;
      r = solve(scenario, Axis::y, state.x, per_round);
    } else {
      r = solve(scenario, Axis::x, state.y, options.solve);
    }
    state.rounds_used = round;
    if (r.sir_max_opt > state.sir) {
      break;  // the frozen point lay outside this round's interval
    }
    const double improvement =
        (state.sir - r.sir_max_opt) /
        std::max(state.sir, std::numeric_limits<double>::min());
    (along_y ? state.y : state.x) = r.x_opt;
    state.sir = r.sir_max_opt;
    if (improvement < options.tol_rel) {
      break;
    }
  }

  state.sir_db = sir_to_db(state.sir);
  return state;
}

}  // namespace jamopt
