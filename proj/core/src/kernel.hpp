#pragma once

// Low-level enumeration kernels shared by the resistance checker and the
// brute-force search.  Everything operates on raw adjacency/color masks so
// the hot loops stay allocation-free; the public entry points wrap these
// with the typed interfaces.

#include <array>
#include <bit>
#include <cstdint>
#include <span>

namespace hrmc::detail {

inline std::uint64_t bit64(int v) { return std::uint64_t{1} << v; }

// One instance flattened to plain arrays.
struct Flat {
  int n = 0;
  std::uint32_t full = 0;              // mask of all k colors
  std::span<const std::uint64_t> adj;  // adjacency masks
  std::span<const std::uint32_t> col;  // per-vertex color masks
  std::uint64_t all = 0;               // mask of all n vertices
};

inline std::uint64_t closed_neighborhood_mask(const Flat& f, std::uint64_t a) {
  std::uint64_t out = a;
  while (a) {
    out |= f.adj[static_cast<std::size_t>(std::countr_zero(a))];
    a &= a - 1;
  }
  return out;
}

// True iff some connected component of the graph induced on `alive`
// holds every color.  An empty `alive` has no components and reports
// false.
inline bool has_full_component(const Flat& f, std::uint64_t alive) {
  while (alive) {
    const int v = std::countr_zero(alive);
    std::uint64_t comp = bit64(v);
    std::uint32_t seen = f.col[static_cast<std::size_t>(v)];
    if (seen == f.full) return true;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      do {
        next |= f.adj[static_cast<std::size_t>(std::countr_zero(frontier))];
        frontier &= frontier - 1;
      } while (frontier);
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
      while (next) {
        seen |= f.col[static_cast<std::size_t>(std::countr_zero(next))];
        if (seen == f.full) return true;
        next &= next - 1;
      }
    }
    alive &= ~comp;
  }
  return false;
}

// Component of v within `alive`, fully expanded.
inline std::uint64_t component_mask(const Flat& f, std::uint64_t alive, int v) {
  std::uint64_t comp = bit64(v);
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    do {
      next |= f.adj[static_cast<std::size_t>(std::countr_zero(frontier))];
      frontier &= frontier - 1;
    } while (frontier);
    next &= alive & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

inline std::uint32_t color_union(const Flat& f, std::uint64_t s) {
  std::uint32_t out = 0;
  while (s) {
    out |= f.col[static_cast<std::size_t>(std::countr_zero(s))];
    s &= s - 1;
  }
  return out;
}

// Enumerates the size-m subsets of a fixed vertex pool in lexicographic
// order of their ascending member lists, maintaining the subset's bit
// mask incrementally (the common advance only touches the last slot).
class CombinationOdometer {
 public:
  CombinationOdometer(const int* pool, int pool_size, int m)
      : pool_(pool), size_(pool_size), m_(m) {
    if (m_ < 0 || m_ > size_) {
      done_ = true;
      return;
    }
    for (int i = 0; i < m_; ++i) idx_[static_cast<std::size_t>(i)] = i;
    rebuild(0);
  }

  bool done() const { return done_; }
  std::uint64_t mask() const { return pref_[static_cast<std::size_t>(m_)]; }

  void advance() {
    int j = m_ - 1;
    while (j >= 0 && idx_[static_cast<std::size_t>(j)] == size_ - m_ + j) --j;
    if (j < 0) {
      done_ = true;
      return;
    }
    ++idx_[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < m_; ++i)
      idx_[static_cast<std::size_t>(i)] = idx_[static_cast<std::size_t>(i - 1)] + 1;
    rebuild(j);
  }

 private:
  void rebuild(int from) {
    for (int i = from; i < m_; ++i)
      pref_[static_cast<std::size_t>(i + 1)] =
          pref_[static_cast<std::size_t>(i)] |
          bit64(pool_[idx_[static_cast<std::size_t>(i)]]);
  }

  const int* pool_ = nullptr;
  int size_ = 0;
  int m_ = 0;
  bool done_ = false;
  std::array<int, 64> idx_{};
  std::array<std::uint64_t, 65> pref_{};
};

inline int collect(std::uint64_t s, int* pool) {
  int n = 0;
  while (s) {
    pool[n++] = std::countr_zero(s);
    s &= s - 1;
  }
  return n;
}

// --- per-attacker-set deciders ------------------------------------------
//
// All three answer the same question: given the closed neighborhood n0 of
// an attacker set, does some failure set M of size m leave no component
// holding every color?  They differ only in how the M-space is walked.

// Literal enumeration of M over the remainder V \ n0 only.  Sound because
// removing vertices never revives a component: if deleting M kills every
// full component, deleting the smaller set M \ n0 does too (the induced
// survivors are identical), and that smaller set can be padded back to
// size m with vertices that are already gone or dead without changing the
// survivors' components.  Hence some M works iff some M inside the
// remainder works, provided the remainder has more than m vertices; a
// remainder of at most m vertices can be wiped out entirely.
inline bool attack_fails_pruned(const Flat& f, std::uint64_t n0, int m,
                                std::uint64_t* pairs) {
  const std::uint64_t rem = f.all & ~n0;
  if (std::popcount(rem) <= m) {
    ++*pairs;
    return true;
  }
  int pool[64];
  const int rn = collect(rem, pool);
  for (CombinationOdometer mo(pool, rn, m); !mo.done(); mo.advance()) {
    ++*pairs;
    if (!has_full_component(f, rem ^ mo.mask())) return true;
  }
  return false;
}

// Literal enumeration of M over all of V, in lexicographic order; on
// failure reports the first failing M, which is therefore the canonical
// one.
inline bool attack_fails_unpruned(const Flat& f, std::uint64_t n0, int m,
                                  std::uint64_t* first_kill,
                                  std::uint64_t* pairs) {
  int pool[64];
  const int n = collect(f.all, pool);
  for (CombinationOdometer mo(pool, n, m); !mo.done(); mo.advance()) {
    ++*pairs;
    if (!has_full_component(f, f.all & ~(n0 | mo.mask()))) {
      if (first_kill) *first_kill = mo.mask();
      return true;
    }
  }
  return false;
}

// Branch-and-prune search over the same space: any failure set must hit
// every component that still holds all colors, so branching on the
// vertices of one such component and recursing covers every candidate M
// (and only skips candidates that provably leave that component intact).
// Verdict-equivalent to the literal enumerations; used where those are
// too slow.
inline bool killing_set_exists(const Flat& f, std::uint64_t alive, int budget,
                               std::uint64_t* nodes) {
  ++*nodes;
  std::uint64_t target = 0;
  std::uint64_t rest = alive;
  while (rest) {
    const int v = std::countr_zero(rest);
    const std::uint64_t comp = component_mask(f, alive, v);
    if (color_union(f, comp) == f.full) {
      target = comp;
      break;
    }
    rest &= ~comp;
  }
  if (!target) return true;
  if (budget == 0) return false;
  while (target) {
    const int v = std::countr_zero(target);
    target &= target - 1;
    if (killing_set_exists(f, alive ^ bit64(v), budget - 1, nodes)) return true;
  }
  return false;
}

inline bool attack_fails_branch(const Flat& f, std::uint64_t n0, int m,
                                std::uint64_t* nodes) {
  const std::uint64_t rem = f.all & ~n0;
  if (std::popcount(rem) <= m) {
    ++*nodes;
    return true;
  }
  return killing_set_exists(f, rem, m, nodes);
}

// --- canonical witness ----------------------------------------------------
//
// Given an attacker set known to fail, rebuild the lexicographically least
// failing M over the full vertex set.  Greedy: walk v = 0, 1, ... and keep
// v iff the partial choice still extends to a failing M using only larger
// vertices.  Candidate extensions only ever need min(slots, |tail in
// remainder|) removals inside the remainder -- extra slots can always be
// parked on dead or already-removed vertices without changing the
// survivors -- and failing sets are closed upward under adding removals,
// so trying exactly that many inside the remainder decides feasibility.
inline bool extension_fails(const Flat& f, std::uint64_t rem,
                            std::uint64_t chosen_in_rem, std::uint64_t tail,
                            int slots) {
  const std::uint64_t tail_rem = tail & rem;
  const int tr = std::popcount(tail_rem);
  const int tn = std::popcount(tail & f.all & ~rem);
  const int q = slots < tr ? slots : tr;
  if (slots - q > tn) return false;  // not enough vertices left to fill M
  int pool[64];
  const int pn = collect(tail_rem, pool);
  for (CombinationOdometer qo(pool, pn, q); !qo.done(); qo.advance())
    if (!has_full_component(f, rem & ~(chosen_in_rem | qo.mask())))
      return true;
  return false;
}

inline std::uint64_t canonical_failing_m(const Flat& f, std::uint64_t n0,
                                         int m) {
  const std::uint64_t rem = f.all & ~n0;
  if (!has_full_component(f, rem)) {
    // Nothing to kill: every M fails, so the least one is {0, ..., m-1}.
    return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  }
  std::uint64_t chosen = 0;
  int cnt = 0;
  for (int v = 0; v < f.n && cnt < m; ++v) {
    const std::uint64_t tail = v + 1 >= 64 ? 0 : (~std::uint64_t{0} << (v + 1));
    if (extension_fails(f, rem, (chosen | bit64(v)) & rem, tail,
                        m - cnt - 1)) {
      chosen |= bit64(v);
      ++cnt;
    }
  }
  return chosen;
}

// --- whole-instance checks (used by the brute-force search) ---------------

inline bool hr_violating_set(const Flat& f, int a, std::uint64_t* found,
                             std::uint64_t* count) {
  int pool[64];
  const int n = collect(f.all, pool);
  for (CombinationOdometer ao(pool, n, a); !ao.done(); ao.advance()) {
    if (count) ++*count;
    if (color_union(f, ao.mask()) == f.full) {
      if (found) *found = ao.mask();
      return true;
    }
  }
  return false;
}

// Pass/fail only; vacuously unsatisfiable scenarios fail.
inline bool highly_resistant_pass(const Flat& f, int a, int m) {
  if (a > f.n || m > f.n) return false;
  if (hr_violating_set(f, a, nullptr, nullptr)) return false;
  int pool[64];
  const int n = collect(f.all, pool);
  std::uint64_t pairs = 0;
  for (CombinationOdometer ao(pool, n, a); !ao.done(); ao.advance()) {
    const std::uint64_t n0 = closed_neighborhood_mask(f, ao.mask());
    if (attack_fails_pruned(f, n0, m, &pairs)) return false;
  }
  return true;
}

}  // namespace hrmc::detail
