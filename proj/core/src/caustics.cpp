#include "bozd/caustics.hpp"

#include <cmath>
#include <map>

namespace bozd {

namespace {

struct Segment {
  CausticPoint a, b;
};

// Bisection refinement of the discriminant zero along a grid edge.
CausticPoint refine_on_edge(const RationalInitialData& data, CausticPoint lo,
                            CausticPoint hi, double dlo, double dhi) {
  for (int it = 0; it < 30; ++it) {
    CausticPoint mid{0.5 * (lo.t + hi.t), 0.5 * (lo.x + hi.x)};
    if (mid.t <= 0.0) return hi;
    const double dm = discriminant_at(data, {mid.t, mid.x});
    if ((dm < 0.0) == (dlo < 0.0)) {
      lo = mid;
      dlo = dm;
    } else {
      hi = mid;
      dhi = dm;
    }
  }
  (void)dhi;
  return {0.5 * (lo.t + hi.t), 0.5 * (lo.x + hi.x)};
}

long key_of(double v, double eps) { return std::lround(v / eps); }

}  // namespace

JMap j_map(const RationalInitialData& data, double t0, double t1, double x0,
           double x1, int nt, int nx) {
  JMap map{t0, t1, x0, x1, nt, nx, {}};
  map.J.resize(static_cast<size_t>(nt) * nx, -1);
  for (int i = 0; i < nt; ++i) {
    const double t = t0 + (t1 - t0) * i / std::max(1, nt - 1);
    for (int j = 0; j < nx; ++j) {
      const double x = x0 + (x1 - x0) * j / std::max(1, nx - 1);
      if (t <= 0.0) {
        map.J[static_cast<size_t>(i) * nx + j] = 0;
        continue;
      }
      const int nreal = count_real_roots(data, {t, x});
      map.J[static_cast<size_t>(i) * nx + j] =
          (nreal > 0 && nreal % 2 == 1) ? (nreal - 1) / 2 : -1;
    }
  }
  return map;
}

std::vector<CausticCurve> caustic_scan(const RationalInitialData& data,
                                       double t0, double t1, double x0,
                                       double x1,
                                       const CausticScanOptions& opt) {
  const int nt = std::max(2, opt.nt), nx = std::max(2, opt.nx);
  std::vector<double> ts(nt), xs(nx);
  for (int i = 0; i < nt; ++i) ts[i] = t0 + (t1 - t0) * i / (nt - 1);
  for (int j = 0; j < nx; ++j) xs[j] = x0 + (x1 - x0) * j / (nx - 1);

  std::vector<double> disc(static_cast<size_t>(nt) * nx);
  std::vector<int> nreal(static_cast<size_t>(nt) * nx);
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nx; ++j) {
      const size_t idx = static_cast<size_t>(i) * nx + j;
      if (ts[i] <= 0.0) {
        disc[idx] = 1.0;  // t<=0 rows carry no caustic
        nreal[idx] = 1;
        continue;
      }
      disc[idx] = discriminant_at(data, {ts[i], xs[j]});
      nreal[idx] = count_real_roots(data, {ts[i], xs[j]});
    }

  auto corner = [&](int i, int j) { return static_cast<size_t>(i) * nx + j; };

  std::vector<Segment> segments;
  for (int i = 0; i + 1 < nt; ++i) {
    for (int j = 0; j + 1 < nx; ++j) {
      if (ts[i] <= 0.0) continue;
      const size_t c00 = corner(i, j), c01 = corner(i, j + 1),
                   c10 = corner(i + 1, j), c11 = corner(i + 1, j + 1);
      // Keep only cells where the real-root count changes: that restricts the
      // discriminant zero set to the caustic locus proper.
      const int r0 = nreal[c00];
      if (nreal[c01] == r0 && nreal[c10] == r0 && nreal[c11] == r0 && r0 >= 0)
        continue;

      struct Edge {
        size_t ca, cb;
        CausticPoint pa, pb;
      };
      const Edge edges[4] = {
          {c00, c01, {ts[i], xs[j]}, {ts[i], xs[j + 1]}},
          {c01, c11, {ts[i], xs[j + 1]}, {ts[i + 1], xs[j + 1]}},
          {c11, c10, {ts[i + 1], xs[j + 1]}, {ts[i + 1], xs[j]}},
          {c10, c00, {ts[i + 1], xs[j]}, {ts[i], xs[j]}},
      };
      std::vector<CausticPoint> crossings;
      for (const auto& e : edges) {
        const double da = disc[e.ca], db = disc[e.cb];
        if ((da < 0.0) != (db < 0.0))
          crossings.push_back(refine_on_edge(data, e.pa, e.pb, da, db));
      }
      if (crossings.size() >= 2)
        for (size_t k = 0; k + 1 < crossings.size(); k += 2)
          segments.push_back({crossings[k], crossings[k + 1]});
    }
  }

  // Chain segments into polylines by matching quantized endpoints.
  const double eps = 1e-9 * (std::abs(t1 - t0) + std::abs(x1 - x0) + 1.0);
  std::map<std::pair<long, long>, std::vector<size_t>> endpoint_index;
  auto key = [&](const CausticPoint& p) {
    return std::make_pair(key_of(p.t, eps), key_of(p.x, eps));
  };
  for (size_t s = 0; s < segments.size(); ++s) {
    endpoint_index[key(segments[s].a)].push_back(s);
    endpoint_index[key(segments[s].b)].push_back(s);
  }

  std::vector<bool> used(segments.size(), false);
  std::vector<CausticCurve> curves;
  for (size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    used[s] = true;
    std::vector<CausticPoint> chain{segments[s].a, segments[s].b};
    // Extend forward from the tail, then backward from the head.
    for (int dir = 0; dir < 2; ++dir) {
      bool grew = true;
      while (grew) {
        grew = false;
        const CausticPoint& tip = (dir == 0) ? chain.back() : chain.front();
        auto it = endpoint_index.find(key(tip));
        if (it == endpoint_index.end()) break;
        for (size_t cand : it->second) {
          if (used[cand]) continue;
          const auto ka = key(segments[cand].a), kb = key(segments[cand].b);
          CausticPoint next;
          if (ka == key(tip))
            next = segments[cand].b;
          else if (kb == key(tip))
            next = segments[cand].a;
          else
            continue;
          used[cand] = true;
          if (dir == 0)
            chain.push_back(next);
          else
            chain.insert(chain.begin(), next);
          grew = true;
          break;
        }
      }
    }
    CausticCurve curve;
    curve.id = static_cast<int>(curves.size());
    curve.points = std::move(chain);
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::vector<double> discriminant_zeros_in_x(const RationalInitialData& data,
                                            double t, double x0, double x1,
                                            int scan_points) {
  std::vector<double> zeros;
  if (t <= 0.0) return zeros;
  double prev_x = x0;
  double prev_d = discriminant_at(data, {t, x0});
  for (int k = 1; k <= scan_points; ++k) {
    const double x = x0 + (x1 - x0) * k / scan_points;
    const double d = discriminant_at(data, {t, x});
    if ((d < 0.0) != (prev_d < 0.0)) {
      double lo = prev_x, hi = x, dlo = prev_d;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double dm = discriminant_at(data, {t, mid});
        if ((dm < 0.0) == (dlo < 0.0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_d = d;
  }
  return zeros;
}

}  // namespace bozd
