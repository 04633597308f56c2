#include "lenfact/factor.hpp"

#include <algorithm>
#include <unordered_set>

#include "lenfact/error.hpp"

namespace lenfact {

std::int64_t length(const Factorization& z) {
  std::int64_t s = 0;
  for (std::int64_t e : z) s += e;
  return s;
}

std::int64_t distance(const Factorization& z, const Factorization& w) {
  std::int64_t a = 0, b = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::int64_t g = std::min(z[i], w[i]);
    a += z[i] - g;
    b += w[i] - g;
  }
  return std::max(a, b);
}

namespace {

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class Knapsack {
 public:
  Knapsack(const std::vector<Vec>& atoms, const std::vector<std::int64_t>& degrees,
           const AmbientGroup& ambient, const Grading& grading,
           const std::function<bool(const Factorization&)>& emit)
      : atoms_(atoms), degrees_(degrees), ambient_(ambient), grading_(grading), emit_(emit),
        exps_(atoms.size(), 0) {
    // Coordinates on which every atom is nonnegative can never go negative
    // in a residual that is still reachable.
    for (std::size_t j = 0; j < ambient.free_rank; ++j) {
      bool nonneg = std::all_of(atoms.begin(), atoms.end(), [&](const Vec& a) { return a[j] >= 0; });
      if (nonneg) nonneg_.push_back(j);
    }
  }

  void run(const Vec& target) {
    std::int64_t deg = grading_(target);
    if (deg < 0 || !feasible(target)) return;
    search(0, target, deg);
  }

 private:
  bool feasible(const Vec& r) const {
    for (std::size_t j : nonneg_)
      if (r[j] < 0) return false;
    return true;
  }

  static bool is_zero(const Vec& r) {
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
  }

  // Returns true if at least one representation was emitted below this node.
  bool search(std::size_t i, const Vec& residual, std::int64_t rem) {
    if (stopped_) return true;
    if (rem == 0) {
      if (!is_zero(residual)) return false;
      if (!emit_(exps_)) stopped_ = true;
      return true;
    }
    if (i == atoms_.size()) return false;

    Vec key = residual;
    key.push_back(static_cast<std::int64_t>(i));
    if (dead_.count(key)) return false;

    const Vec& a = atoms_[i];
    std::int64_t cmax = rem / degrees_[i];
    for (std::size_t j : nonneg_)
      if (a[j] > 0) cmax = std::min(cmax, residual[j] / a[j]);

    bool found = false;
    Vec r = ambient_.subtract(residual, ambient_.scale(a, cmax));
    for (std::int64_t c = cmax; c >= 0; --c) {
      exps_[i] = c;
      if (search(i + 1, r, rem - c * degrees_[i])) found = true;
      if (stopped_) break;
      if (c > 0) r = ambient_.add(r, a);
    }
    exps_[i] = 0;
    if (!found && !stopped_) dead_.insert(std::move(key));
    return found;
  }

  const std::vector<Vec>& atoms_;
  const std::vector<std::int64_t>& degrees_;
  const AmbientGroup& ambient_;
  const Grading& grading_;
  const std::function<bool(const Factorization&)>& emit_;
  std::vector<std::size_t> nonneg_;
  Factorization exps_;
  std::unordered_set<Vec, VecHash> dead_;
  bool stopped_ = false;
};

}  // namespace

void enumerate_representations(const std::vector<Vec>& atoms, const std::vector<std::int64_t>& degrees,
                               const AmbientGroup& ambient, const Grading& grading, const Vec& target,
                               const std::function<bool(const Factorization&)>& emit) {
  Knapsack ks(atoms, degrees, ambient, grading, emit);
  ks.run(target);
}

std::vector<Factorization> factorizations(const Presentation& p, const Vec& x) {
  if (x.size() != p.ambient.dim())
    throw Error(ErrorCode::kInvalidInput, "element " + vec_to_string(x) + " has wrong dimension");
  Vec target = x;
  p.ambient.canonicalize(target);
  std::vector<Factorization> out;
  enumerate_representations(p.atoms, p.degrees, p.ambient, p.grading, target, [&](const Factorization& z) {
    out.push_back(z);
    return true;
  });
  return out;
}

bool contains(const Presentation& p, const Vec& x) {
  Vec target = x;
  p.ambient.canonicalize(target);
  bool found = false;
  enumerate_representations(p.atoms, p.degrees, p.ambient, p.grading, target, [&](const Factorization&) {
    found = true;
    return false;
  });
  return found;
}

std::set<std::int64_t> length_set(const Presentation& p, const Vec& x) {
  std::set<std::int64_t> out;
  for (const Factorization& z : factorizations(p, x)) out.insert(length(z));
  return out;
}

SweepTable sweep(const Presentation& p, SweepBound bound) {
  SweepTable table;
  const std::size_t k = p.atoms.size();
  Factorization z(k, 0);
  const bool by_length = bound.kind == SweepBound::Kind::kLength;
  // Exponents high-to-low in atom order: every list ends up lexicographically
  // descending without a final sort.
  auto rec = [&](auto&& self, std::size_t i, const Vec& x, std::int64_t rem) -> void {
    if (i == k) {
      table[x].push_back(z);
      return;
    }
    std::int64_t step = by_length ? 1 : p.degrees[i];
    std::int64_t cmax = rem / step;
    Vec y = p.ambient.add(x, p.ambient.scale(p.atoms[i], cmax));
    for (std::int64_t c = cmax; c >= 0; --c) {
      z[i] = c;
      self(self, i + 1, y, rem - c * step);
      if (c > 0) y = p.ambient.subtract(y, p.atoms[i]);
    }
    z[i] = 0;
  };
  rec(rec, 0, Vec(p.ambient.dim(), 0), std::max<std::int64_t>(bound.value, 0));
  return table;
}

}  // namespace lenfact
