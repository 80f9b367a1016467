#include "engelkit/engel.hpp"

#include <algorithm>
#include <unordered_set>

#include "engelkit/errors.hpp"

namespace engelkit {

Element iterated_commutator(const Group &group, const Element &g, const Element &a, std::size_t n) {
  if (n == 0)
    throw InvalidArgument("iterated commutator is defined for n >= 1");
  auto c = group.commutator(g, a);
  for (std::size_t i = 1; i < n; ++i)
    c = group.commutator(c, a);
  return c;
}

std::string to_string(const EngelDegree &d) {
  switch (d.status) {
  case EngelStatus::engel: return std::to_string(d.degree);
  case EngelStatus::not_engel: return "not-engel";
  case EngelStatus::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Steps from [start, y] to 1 under c -> [c, y].
EngelDegree orbit_degree(const Group &group, const Element &start, const Element &y,
                         const Limits &limits) {
  const bool finite = group.is_finite();
  std::unordered_set<Payload, PayloadHash> seen;
  EngelDegree d;
  auto c = group.commutator(start, y);
  for (std::size_t n = 1;; ++n) {
    d.iterations = n;
    if (group.is_identity(c)) {
      d.status = EngelStatus::engel;
      d.degree = n;
      return d;
    }
    if (!seen.insert(c.payload()).second) {
      d.status = EngelStatus::not_engel;
      return d;
    }
    if (!finite && n >= limits.symbolic_iteration_cap) {
      d.status = EngelStatus::unknown;
      return d;
    }
    c = group.commutator(c, y);
  }
}

// dist[z] = minimal n >= 1 with f^n(z) = 1 for f(c) = [c, y]; -1 if never.
std::vector<std::int32_t> degrees_under(const FiniteGroup &g, Idx y) {
  const auto n = g.size();
  std::vector<std::int32_t> dist(n, -2); // -2 unvisited, -3 on the current path
  const auto one = g.identity();
  dist[one] = 0;
  std::vector<Idx> path;
  for (Idx z = 0; z < n; ++z) {
    if (dist[z] != -2)
      continue;
    path.clear();
    Idx c = z;
    while (dist[c] == -2) {
      dist[c] = -3;
      path.push_back(c);
      c = g.comm(c, y);
    }
    // dist[c] >= 0 (reached a resolved node), -1 (doomed) or -3 (a new cycle)
    std::int32_t next = dist[c] == -3 ? -1 : dist[c];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      next = next < 0 ? -1 : next + 1;
      dist[*it] = next;
    }
  }
  // [1,_1 y] = 1 already, so the minimal degree is at least 1
  dist[one] = 1;
  return dist;
}

} // namespace

EngelDegree left_engel_degree(const Group &group, const Element &a, const Element &g,
                              const Limits &limits) {
  return orbit_degree(group, g, a, limits);
}

EngelDegree right_engel_degree(const Group &group, const Element &a, const Element &g,
                               const Limits &limits) {
  return orbit_degree(group, a, g, limits);
}

EngelClassification classify(const FiniteGroup &group, const Limits &limits) {
  const auto n = group.size();
  if (n > limits.analysis_cap)
    throw CapacityError(group.group().name() + ": order " + std::to_string(n) +
                        " exceeds analysis cap " + std::to_string(limits.analysis_cap));

  // left[y] = sup_z deg_y(z) is the left degree of y; right[z] = sup_y deg_y(z)
  std::vector<std::int32_t> left(n, 0), right(n, 0);
  for (Idx y = 0; y < n; ++y) {
    const auto dist = degrees_under(group, y);
    for (Idx z = 0; z < n; ++z) {
      const auto d = dist[z];
      if (d < 0) {
        left[y] = -1;
        right[z] = -1;
        continue;
      }
      if (left[y] >= 0)
        left[y] = std::max(left[y], d);
      if (right[z] >= 0)
        right[z] = std::max(right[z], d);
    }
  }

  EngelClassification out;
  std::vector<Idx> l, r;
  for (Idx i = 0; i < n; ++i) {
    if (left[i] > 0) {
      l.push_back(i);
      out.left_degree.emplace(i, static_cast<std::size_t>(left[i]));
    }
    if (right[i] > 0) {
      r.push_back(i);
      out.right_degree.emplace(i, static_cast<std::size_t>(right[i]));
    }
  }
  // every pairwise degree is finite here, so the suprema are too
  out.left = Subset(n, l);
  out.bounded_left = Subset(n, l);
  out.right = Subset(n, r);
  out.bounded_right = Subset(n, r);
  return out;
}

} // namespace engelkit
