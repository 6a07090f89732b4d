#include "phylotoric/face_lattice.hpp"

#include "phylotoric/exact.hpp"

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

#include <stdexcept>
#include <unordered_set>

namespace phylotoric {

std::vector<std::int64_t> IncidenceMatrix::f_vector() const {
  std::vector<std::int64_t> f;
  for (std::size_t i = 0; i < entries.size(); ++i) f.push_back(entries[i][i]);
  return f;
}

namespace {

using VertexSet = boost::dynamic_bitset<>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::size_t seed = 0;
    std::vector<VertexSet::block_type> blocks;
    boost::to_block_range(s, std::back_inserter(blocks));
    for (auto b : blocks) boost::hash_combine(seed, b);
    return seed;
  }
};

}  // namespace

IncidenceMatrix face_lattice(const SubcubePolytope& p) {
  const std::size_t nv = p.vertices.size();
  const std::size_t d = p.dim();
  if (nv == 0) throw std::invalid_argument("face_lattice: empty polytope");
  // Degenerate polytopes (point, segment) are handled directly.
  if (d == 0) return IncidenceMatrix{};
  if (d == 1) return IncidenceMatrix{{{2}}};

  std::vector<VertexSet> facet_sets;
  for (const auto& f : p.facets) {
    VertexSet s(nv);
    for (std::size_t i = 0; i < nv; ++i)
      if (f.tight(p.vertices[i])) s.set(i);
    facet_sets.push_back(std::move(s));
  }

  auto dimension = [&](const VertexSet& s) {
    std::vector<std::vector<std::int64_t>> pts;
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) pts.push_back(p.vertices[i].coords());
    return affine_rank(pts);
  };

  // Closure of the facet sets under intersection (proper faces only).
  std::unordered_set<VertexSet, VertexSetHash> faces;
  std::vector<VertexSet> queue;
  for (const auto& f : facet_sets)
    if (f.any() && dimension(f) + 1 == d && faces.insert(f).second) queue.push_back(f);
  if (faces.empty()) throw std::invalid_argument("face_lattice: no supporting facets");
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& f : facet_sets) {
      VertexSet g = queue[k] & f;
      if (g.any() && faces.insert(g).second) queue.push_back(std::move(g));
    }
  }

  std::vector<std::vector<VertexSet>> by_dim(d);
  for (const auto& f : faces) {
    auto k = dimension(f);
    if (k >= d) throw std::invalid_argument("face_lattice: polytope is not full-dimensional in its span");
    by_dim[k].push_back(f);
  }

  IncidenceMatrix m{std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0))};
  for (std::size_t i = 0; i < d; ++i) {
    m.entries[i][i] = static_cast<std::int64_t>(by_dim[i].size());
    for (std::size_t j = i + 1; j < d; ++j) {
      std::int64_t count = 0;
      for (const auto& a : by_dim[i])
        for (const auto& b : by_dim[j]) count += a.is_subset_of(b);
      m.entries[i][j] = m.entries[j][i] = count;
    }
  }
  return m;
}

}  // namespace phylotoric
