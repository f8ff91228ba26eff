#include "heiscusp/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace heiscusp {

bool operator<(const SweepPoint& x, const SweepPoint& y) {
  return std::tuple(static_cast<int>(x.family), x.params.k, x.params.p,
                    x.params.k1, x.params.k2, x.d) <
         std::tuple(static_cast<int>(y.family), y.params.k, y.params.p,
                    y.params.k1, y.params.k2, y.d);
}

const char* to_cstring(SweepStatus s) {
  switch (s) {
    case SweepStatus::Certified: return "certified";
    case SweepStatus::Obstructed: return "obstructed";
    case SweepStatus::InvalidParams: return "invalid-params";
  }
  throw std::logic_error("unreachable sweep status");
}

int effective_workers(int requested) {
  const int hw = std::max(1, omp_get_max_threads());
  if (requested > 0) return std::min(requested, hw);
  if (const char* env = std::getenv("HEISCUSP_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<int>(std::min<long>(n, hw));
  }
  return hw;
}

namespace {

SweepOutcome evaluate(const SweepPoint& pt) {
  SweepOutcome out;
  try {
    const SquarefreeD d(pt.d);
    HolonomyCert cert = verify_holonomy(standard_rep(pt.family, pt.params, d));
    out.status = SweepStatus::Certified;
    out.note = cert.all_ok() ? "all checks pass" : "certificate has failures";
    out.cert = std::move(cert);
  } catch (const std::domain_error& e) {
    out.status = SweepStatus::Obstructed;
    out.note = e.what();
    out.cert.reset();
  } catch (const std::invalid_argument& e) {
    out.status = SweepStatus::InvalidParams;
    out.note = e.what();
    out.cert.reset();
  }
  return out;
}

}  // namespace

std::vector<SweepOutcome> run_sweep(const std::vector<SweepPoint>& points,
                                    SweepMode mode, int max_workers) {
  std::vector<SweepOutcome> out(points.size());
  const long n = static_cast<long>(points.size());
  if (mode == SweepMode::Serial) {
    for (long i = 0; i < n; ++i) out[i] = evaluate(points[i]);
    return out;
  }
  const int workers = effective_workers(max_workers);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (long i = 0; i < n; ++i) out[i] = evaluate(points[i]);
  return out;
}

std::vector<FamilyParams> enumerate_params(FamilyId f, long k) {
  std::vector<FamilyParams> candidates;
  switch (f) {
    case FamilyId::NilTorus:
    case FamilyId::VerticalHalfTwist:
    case FamilyId::HorizontalHalfTwist:
    case FamilyId::DoubleHalfTwist:
      candidates.push_back({k, 0, 0, 0});
      break;
    case FamilyId::QuarterTwist:
      candidates.push_back({k, 1, 0, 0});
      candidates.push_back({k, 3, 0, 0});
      break;
    case FamilyId::ThirdTwist:
      for (long k1 : {0L, 1L}) {
        for (long k2 : {1L, 2L}) candidates.push_back({k, 0, k1, k2});
      }
      break;
    case FamilyId::SixthTwist:
      candidates.push_back({k, 0, 1, 0});
      candidates.push_back({k, 0, 5, 0});
      break;
  }
  std::vector<FamilyParams> valid;
  for (const FamilyParams& P : candidates) {
    if (!params_violation(f, P)) valid.push_back(P);
  }
  return valid;
}

std::vector<SweepPoint> make_grid(FamilyId f, const std::vector<long>& ks,
                                  const std::vector<long>& ds) {
  std::vector<SweepPoint> points;
  for (long k : ks) {
    for (const FamilyParams& P : enumerate_params(f, k)) {
      for (long d : ds) points.push_back({f, P, d});
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace heiscusp
