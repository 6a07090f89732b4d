#include "phylotoric/lattice_points.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace phylotoric {

unsigned worker_count() {
  if (const char* env = std::getenv("PHYLOTORIC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

enum class Kind { at_least, equal, even };

struct Constraint {
  Kind kind;
  std::vector<std::int64_t> coef;  // by position in the visiting order
  std::int64_t rhs = 0;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

class Scanner {
 public:
  Scanner(const SubcubePolytope& p, int n, LatticeKind kind) : dim_(p.ambient_dim), n_(n) {
    if (n < 0) throw std::invalid_argument("lattice_points: negative dilation");
    std::vector<Constraint> raw;
    for (const auto& f : p.facets) raw.push_back({Kind::at_least, f.normal.coords(), n * f.offset});
    for (const auto& q : p.equations) raw.push_back({Kind::equal, q.normal.coords(), n * q.offset});
    if (kind == LatticeKind::normalized)
      for (const auto& f : p.parity_forms) raw.push_back({Kind::even, f.coords(), 0});
    choose_order(raw);
    for (auto& c : raw) {
      std::vector<std::int64_t> by_pos(dim_);
      for (std::size_t k = 0; k < dim_; ++k) by_pos[k] = c.coef[order_[k]];
      c.coef = std::move(by_pos);
    }
    constraints_ = std::move(raw);
    prepare();
  }

  std::size_t dim() const { return dim_; }
  int n() const { return n_; }

  // Enumerates points whose first visited coordinate equals `first`.
  void scan(std::int64_t first, const std::function<void(const LatticeVector&)>& emit) const {
    std::vector<std::int64_t> partial(constraints_.size(), 0);
    std::vector<std::int64_t> x(dim_, 0);
    if (!admissible(0, first, partial)) return;
    assign(0, first, x, partial, +1);
    descend(1, x, partial, emit);
  }

  const std::vector<std::size_t>& order() const { return order_; }

 private:
  void choose_order(const std::vector<Constraint>& raw) {
    // Greedy: next coordinate completes the most constraints, then touches
    // the most partially assigned ones; ties by index.
    std::vector<bool> used(dim_, false);
    for (std::size_t step = 0; step < dim_; ++step) {
      std::size_t best = dim_;
      std::pair<int, int> best_score{-1, -1};
      for (std::size_t c = 0; c < dim_; ++c) {
        if (used[c]) continue;
        int completes = 0, touches = 0;
        for (const auto& k : raw) {
          if (k.coef[c] == 0) continue;
          bool open = false, started = false;
          for (std::size_t j = 0; j < dim_; ++j) {
            if (j == c || k.coef[j] == 0) continue;
            if (used[j])
              started = true;
            else
              open = true;
          }
          completes += !open;
          touches += started;
        }
        std::pair<int, int> score{completes, touches};
        if (score > best_score) {
          best_score = score;
          best = c;
        }
      }
      used[best] = true;
      order_.push_back(best);
    }
  }

  void prepare() {
    // For each position: constraints with a nonzero coefficient there and the
    // extreme values the later coordinates can still contribute.
    involved_.assign(dim_, {});
    rest_max_.assign(dim_, std::vector<std::int64_t>(constraints_.size(), 0));
    rest_min_.assign(dim_, std::vector<std::int64_t>(constraints_.size(), 0));
    last_.assign(constraints_.size(), 0);
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      const auto& coef = constraints_[c].coef;
      std::int64_t hi = 0, lo = 0;
      for (std::size_t k = dim_; k-- > 0;) {
        rest_max_[k][c] = hi;
        rest_min_[k][c] = lo;
        if (coef[k] > 0) hi += coef[k] * n_;
        if (coef[k] < 0) lo += coef[k] * n_;
        if (coef[k] != 0) {
          involved_[k].push_back(c);
          last_[c] = std::max(last_[c], k);
        }
      }
    }
  }

  // Feasible range [lo, hi] and step for position k given the partial sums.
  bool range(std::size_t k, const std::vector<std::int64_t>& partial, std::int64_t& lo, std::int64_t& hi,
             int& parity) const {
    lo = 0;
    hi = n_;
    parity = -1;
    for (std::size_t c : involved_[k]) {
      const auto& con = constraints_[c];
      const std::int64_t a = con.coef[k];
      const std::int64_t need = con.rhs - partial[c];
      switch (con.kind) {
        case Kind::at_least: {
          // a x >= need - rest_max
          std::int64_t r = need - rest_max_[k][c];
          if (a > 0)
            lo = std::max(lo, ceil_div(r, a));
          else
            hi = std::min(hi, floor_div(r, a));
          break;
        }
        case Kind::equal: {
          // need - rest_max <= a x <= need - rest_min
          std::int64_t r1 = need - rest_max_[k][c], r2 = need - rest_min_[k][c];
          if (a > 0) {
            lo = std::max(lo, ceil_div(r1, a));
            hi = std::min(hi, floor_div(r2, a));
          } else {
            lo = std::max(lo, ceil_div(r2, a));
            hi = std::min(hi, floor_div(r1, a));
          }
          break;
        }
        case Kind::even:
          if (last_[c] == k) {
            const int want = static_cast<int>(((partial[c] % 2) + 2) % 2);
            if (a % 2 == 0) {
              if (want != 0) return false;
            } else {
              if (parity >= 0 && parity != want) return false;
              parity = want;
            }
          }
          break;
      }
    }
    if (parity >= 0 && ((lo % 2) + 2) % 2 != parity) ++lo;
    return lo <= hi;
  }

  bool admissible(std::size_t k, std::int64_t v, const std::vector<std::int64_t>& partial) const {
    std::int64_t lo, hi;
    int parity;
    if (!range(k, partial, lo, hi, parity)) return false;
    return v >= lo && v <= hi && (parity < 0 || ((v % 2) + 2) % 2 == parity);
  }

  void assign(std::size_t k, std::int64_t v, std::vector<std::int64_t>& x, std::vector<std::int64_t>& partial,
              int sign) const {
    x[k] = sign > 0 ? v : 0;
    for (std::size_t c : involved_[k]) partial[c] += sign * constraints_[c].coef[k] * v;
  }

  void descend(std::size_t k, std::vector<std::int64_t>& x, std::vector<std::int64_t>& partial,
               const std::function<void(const LatticeVector&)>& emit) const {
    if (k == dim_) {
      LatticeVector point(dim_);
      for (std::size_t i = 0; i < dim_; ++i) point[order_[i]] = x[i];
      emit(point);
      return;
    }
    std::int64_t lo, hi;
    int parity;
    if (!range(k, partial, lo, hi, parity)) return;
    const std::int64_t step = parity >= 0 ? 2 : 1;
    for (std::int64_t v = lo; v <= hi; v += step) {
      assign(k, v, x, partial, +1);
      descend(k + 1, x, partial, emit);
      assign(k, v, x, partial, -1);
    }
  }

  std::size_t dim_;
  int n_;
  std::vector<Constraint> constraints_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> involved_;
  std::vector<std::vector<std::int64_t>> rest_max_, rest_min_;
  std::vector<std::size_t> last_;
};

template <class PerSlab>
void run_slabs(const Scanner& s, PerSlab&& per_slab) {
  if (s.dim() == 0) return;
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(s.n()) + 1);
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (std::int64_t v; (v = next.fetch_add(1)) <= s.n();) per_slab(v);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<LatticeVector> lattice_points(const SubcubePolytope& p, int n, LatticeKind kind) {
  Scanner s(p, n, kind);
  if (s.dim() == 0) return {LatticeVector()};
  std::vector<std::vector<LatticeVector>> slabs(n + 1);
  run_slabs(s, [&](std::int64_t v) { s.scan(v, [&](const LatticeVector& x) { slabs[v].push_back(x); }); });
  std::vector<LatticeVector> out;
  for (auto& slab : slabs) std::move(slab.begin(), slab.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_lattice_points(const SubcubePolytope& p, int n, LatticeKind kind) {
  Scanner s(p, n, kind);
  if (s.dim() == 0) return 1;
  std::vector<std::size_t> counts(n + 1, 0);
  run_slabs(s, [&](std::int64_t v) { s.scan(v, [&](const LatticeVector&) { ++counts[v]; }); });
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace phylotoric
