#include "deltaconf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace deltaconf {

namespace {

int sign(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool near(Point a, Point b, double eps) { return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps; }

// p lies within the bounding box of s (collinearity checked by the caller).
bool in_box(Point p, const Segment& s, double eps) {
  return p.x >= std::min(s.a.x, s.b.x) - eps && p.x <= std::max(s.a.x, s.b.x) + eps &&
         p.y >= std::min(s.a.y, s.b.y) - eps && p.y <= std::max(s.a.y, s.b.y) + eps;
}

bool is_end(Point p, const Segment& s, double eps) { return near(p, s.a, eps) || near(p, s.b, eps); }

}  // namespace

bool segment_contact(const Segment& s, const Segment& t, double eps, Contact& out) {
  const double d1 = cross(t.a, t.b, s.a);
  const double d2 = cross(t.a, t.b, s.b);
  const double d3 = cross(s.a, s.b, t.a);
  const double d4 = cross(s.a, s.b, t.b);
  const int o1 = sign(d1, eps);
  const int o2 = sign(d2, eps);
  const int o3 = sign(d3, eps);
  const int o4 = sign(d4, eps);
  const double len_eps = eps > 0 ? std::sqrt(eps) : 0.0;

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear (or degenerate): intersect the projections on the dominant axis.
    const bool use_x = std::abs(s.b.x - s.a.x) + std::abs(t.b.x - t.a.x) >=
                       std::abs(s.b.y - s.a.y) + std::abs(t.b.y - t.a.y);
    auto key = [&](Point p) { return use_x ? p.x : p.y; };
    const double s0 = std::min(key(s.a), key(s.b));
    const double s1 = std::max(key(s.a), key(s.b));
    const double t0 = std::min(key(t.a), key(t.b));
    const double t1 = std::max(key(t.a), key(t.b));
    const double lo = std::max(s0, t0);
    const double hi = std::min(s1, t1);
    if (hi < lo - len_eps) return false;
    const Point ends[] = {s.a, s.b, t.a, t.b};
    for (Point p : ends) {
      if (!in_box(p, s, len_eps) || !in_box(p, t, len_eps)) continue;
      out.at = p;
      if (hi - lo > len_eps) {
        out.kind = ContactKind::Overlap;
        out.endpoint_of_both = false;
      } else {
        out.kind = ContactKind::Touch;
        out.endpoint_of_both = is_end(p, s, len_eps) && is_end(p, t, len_eps);
      }
      return true;
    }
    return false;
  }

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    const double f = d1 / (d1 - d2);
    out.kind = ContactKind::Crossing;
    out.at = {s.a.x + f * (s.b.x - s.a.x), s.a.y + f * (s.b.y - s.a.y)};
    out.endpoint_of_both = false;
    return true;
  }

  // Remaining contacts put an endpoint of one segment on the other.
  const std::pair<Point, int> s_ends[] = {{s.a, o1}, {s.b, o2}};
  for (const auto& [p, o] : s_ends) {
    if (o == 0 && in_box(p, t, len_eps) && o3 * o4 <= 0) {
      out.kind = ContactKind::Touch;
      out.at = p;
      out.endpoint_of_both = is_end(p, t, len_eps);
      return true;
    }
  }
  const std::pair<Point, int> t_ends[] = {{t.a, o3}, {t.b, o4}};
  for (const auto& [p, o] : t_ends) {
    if (o == 0 && in_box(p, s, len_eps) && o1 * o2 <= 0) {
      out.kind = ContactKind::Touch;
      out.at = p;
      out.endpoint_of_both = is_end(p, s, len_eps);
      return true;
    }
  }
  return false;
}

std::vector<Contact> segment_contacts(const std::vector<Segment>& segments, double eps, bool skip_same_owner) {
  std::vector<Contact> out;
  if (segments.size() < 2) return out;

  double min_x = segments[0].a.x;
  double min_y = segments[0].a.y;
  std::vector<double> extents;
  extents.reserve(segments.size());
  for (const auto& s : segments) {
    min_x = std::min({min_x, s.a.x, s.b.x});
    min_y = std::min({min_y, s.a.y, s.b.y});
    extents.push_back(std::max(std::abs(s.b.x - s.a.x), std::abs(s.b.y - s.a.y)));
  }
  // Cell size near the median extent keeps both bucket occupancy and the
  // number of cells per segment small.
  auto mid = extents.begin() + static_cast<std::ptrdiff_t>(extents.size() / 2);
  std::nth_element(extents.begin(), mid, extents.end());
  const double cell = std::max(*mid, 1e-9) * 1.5;
  const double pad = eps > 0 ? std::sqrt(eps) : 0.0;

  struct Range {
    std::int64_t x0, y0, x1, y1;
  };
  auto to_cell = [&](double v, double origin) { return static_cast<std::int64_t>(std::floor((v - origin) / cell)); };
  std::vector<Range> ranges(segments.size());
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
  auto cell_key = [](std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32) ^ static_cast<std::uint64_t>(y & 0xffffffff);
  };
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    Range r{to_cell(std::min(s.a.x, s.b.x) - pad, min_x), to_cell(std::min(s.a.y, s.b.y) - pad, min_y),
            to_cell(std::max(s.a.x, s.b.x) + pad, min_x), to_cell(std::max(s.a.y, s.b.y) + pad, min_y)};
    ranges[i] = r;
    for (auto x = r.x0; x <= r.x1; ++x)
      for (auto y = r.y0; y <= r.y1; ++y) grid[cell_key(x, y)].push_back(i);
  }

  for (const auto& [key, members] : grid) {
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        const auto i = std::min(members[p], members[q]);
        const auto j = std::max(members[p], members[q]);
        if (skip_same_owner && segments[i].owner == segments[j].owner) continue;
        // Test each pair only in the first cell its two ranges share.
        const auto& ri = ranges[i];
        const auto& rj = ranges[j];
        const auto fx = std::max(ri.x0, rj.x0);
        const auto fy = std::max(ri.y0, rj.y0);
        if (fx > std::min(ri.x1, rj.x1) || fy > std::min(ri.y1, rj.y1)) continue;
        if (cell_key(fx, fy) != key) continue;
        Contact c{i, j, ContactKind::Touch, {}, false};
        if (segment_contact(segments[i], segments[j], eps, c)) out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Contact& a, const Contact& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  return out;
}

}  // namespace deltaconf
