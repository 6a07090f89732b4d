#include "phylotoric/double_description.hpp"

#include "phylotoric/exact.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>

namespace phylotoric {

namespace {

struct Ray {
  LatticeVector y;
  boost::dynamic_bitset<> zeros;  // processed rows vanishing on y
};

LatticeVector primitive(LatticeVector v) {
  auto c = v.coords();
  make_primitive(c);
  return LatticeVector(std::move(c));
}

}  // namespace

std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("extreme_rays: no inequalities");
  const std::size_t d = rows[0].size();
  const std::size_t m = rows.size();

  // Greedy choice of d independent rows for the initial simplicial cone.
  std::vector<std::size_t> basis;
  IntMatrix chosen;
  for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
    chosen.push_back(rows[i].coords());
    if (rank(chosen) == chosen.size())
      basis.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis.size() < d) throw std::invalid_argument("extreme_rays: cone is not pointed");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix others;
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) others.push_back(chosen[k]);
    LatticeVector y(kernel_vector(others));
    if (dot(rows[basis[j]], y) < 0) y *= -1;
    rays.push_back({y, boost::dynamic_bitset<>(m)});
  }
  std::vector<bool> processed(m, false);
  for (std::size_t j = 0; j < d; ++j) processed[basis[j]] = true;
  for (auto& r : rays)
    for (std::size_t i = 0; i < m; ++i)
      if (processed[i] && dot(rows[i], r.y) == 0) r.zeros.set(i);

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    std::vector<std::int64_t> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(rows[i], rays[k].y);
      if (value[k] > 0) pos.push_back(k);
      if (value[k] < 0) neg.push_back(k);
      if (value[k] >= 0) {
        Ray r = rays[k];
        if (value[k] == 0) r.zeros.set(i);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        auto common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != n && common.is_subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        LatticeVector y = value[p] * rays[n].y - value[n] * rays[p].y;
        common.set(i);
        next.push_back({primitive(std::move(y)), std::move(common)});
      }
    rays = std::move(next);
    processed[i] = true;
  }

  std::vector<LatticeVector> out;
  for (auto& r : rays) out.push_back(primitive(r.y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace phylotoric
