#include "cactus.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace zolotarev {

namespace {

constexpr int kMaxDegree = 9;

int env_thread_cap() {
  const char* s = std::getenv("ZOLOTAREV_THREADS");
  if (!s) return 1;
  int v = std::atoi(s);
  if (v < 1) return 1;
  return std::min(v, 64);
}

}  // namespace

Color color_succ(Color c) { return static_cast<Color>((static_cast<int>(c) + 1) % 3); }
Color color_pred(Color c) { return static_cast<Color>((static_cast<int>(c) + 2) % 3); }

const char* color_name(Color c) {
  switch (c) {
    case Color::star: return "star";
    case Color::circ: return "circ";
    case Color::bullet: return "bullet";
  }
  return "?";
}

Passport::Passport(int n_, int k_, int l_, int m_) : n(n_), k(k_), l(l_), m(m_) {
  if (n < 3) throw UsageError("passport degree must be at least 3");
  if (k < 0 || l < 0 || m < 0) throw UsageError("passport counts must be nonnegative");
  if (k + l + m != n - 1)
    throw UsageError("passport counts must sum to degree - 1");
  if (2 * k > n || 2 * l > n || 2 * m > n)
    throw UsageError("passport count exceeds degree/2");
}

std::string CactusClass::key() const {
  std::ostringstream os;
  for (const Perm* g : {&g_star, &g_circ, &g_bullet}) {
    for (uint8_t v : g->images0()) os << static_cast<int>(v + 1) << ',';
    os << ';';
  }
  return os.str();
}

std::vector<Perm> involutions_with(int n, int k) {
  if (k < 0 || 2 * k > n) throw UsageError("involution type 2^k needs 2k <= n");
  if (n > kMaxDegree) throw CapabilityError("degree above 9 is not supported");

  std::vector<Perm> out;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;

  // Choose k disjoint pairs; recursion on the smallest unassigned point.
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int pairs_left, int first) -> void {
    if (pairs_left == 0) {
      out.push_back(Perm::from_images(images));
      return;
    }
    int i = first;
    while (i < n && used[i]) ++i;
    if (n - i < 2 * pairs_left) return;  // not enough room
    // point i+1 stays fixed
    used[i] = true;
    self(self, pairs_left, i + 1);
    used[i] = false;
    // or pairs with some later point
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[i] = used[j] = true;
      images[i] = j + 1;
      images[j] = i + 1;
      self(self, pairs_left - 1, i + 1);
      images[i] = i + 1;
      images[j] = j + 1;
      used[i] = used[j] = false;
    }
  };
  rec(rec, k, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Perm, 3> canonical_triple(const Perm& a, const Perm& b, const Perm& c) {
  const int n = a.degree();
  Perm zeta = base_cycle(n);
  std::array<Perm, 3> best = {a, b, c};
  Perm s = zeta;
  for (int j = 1; j < n; ++j) {
    std::array<Perm, 3> cand = {a.conjugated_by(s), b.conjugated_by(s),
                                c.conjugated_by(s)};
    if (cand < best) best = cand;
    s = compose(s, zeta);
  }
  return best;
}

std::array<Perm, 3> normalized_triple(const Perm& a, const Perm& b, const Perm& c) {
  const int n = a.degree();
  Perm product = compose(compose(a, b), c);
  if (cycle_type(product) != std::vector<int>{n})
    throw InternalError("triple does not multiply to an n-cycle");
  // relabel so the product becomes the base cycle: s(product^t(1)) = t+1
  std::vector<int> s_images(n);
  int pt = 1;
  for (int t = 0; t < n; ++t) {
    s_images[pt - 1] = t + 1;
    pt = product.apply(pt);
  }
  Perm s = Perm::from_images(s_images);
  return canonical_triple(a.conjugated_by(s), b.conjugated_by(s), c.conjugated_by(s));
}

std::array<Perm, 3> rotate_colors(const std::array<Perm, 3>& t) {
  return normalized_triple(t[1], t[2], t[0]);
}

std::pair<std::array<Perm, 3>, int> rotation_canonical(const std::array<Perm, 3>& t) {
  std::array<Perm, 3> best = t, cur = t;
  int best_j = 0;
  for (int j = 1; j < 3; ++j) {
    cur = rotate_colors(cur);
    if (cur < best) {
      best = cur;
      best_j = j;
    }
  }
  return {best, best_j};
}

CactusClass make_canonical_class(const Passport& pp, const Perm& a, const Perm& b,
                                 const Perm& c) {
  auto t = canonical_triple(a, b, c);
  CactusClass cc{pp, t[0], t[1], t[2], -1, 1, {}};
  cc.aut_order = automorphism_order(cc);
  cc.group = monodromy(cc);
  return cc;
}

std::vector<CactusClass> enumerate_cacti(const Passport& p) {
  if (p.n > kMaxDegree) throw CapabilityError("degree above 9 is not supported");
  const Perm zeta = base_cycle(p.n);
  const auto as = involutions_with(p.n, p.k);
  const auto bs = involutions_with(p.n, p.l);
  const bool symmetric = (p.k == p.l && p.l == p.m);

  auto scan = [&](size_t a_begin, size_t a_end) {
    std::set<std::array<Perm, 3>> found;
    for (size_t ia = a_begin; ia < a_end; ++ia) {
      const Perm& a = as[ia];
      for (const Perm& b : bs) {
        Perm c = compose(compose(a, b).inverse(), zeta);
        if (!has_involution_type(c, p.m)) continue;
        auto canon = canonical_triple(a, b, c);
        // With all three counts equal the colors carry no intrinsic
        // identity; classes are reduced by cyclic color renaming.
        if (symmetric) canon = rotation_canonical(canon).first;
        found.insert(canon);
      }
    }
    return found;
  };

  std::set<std::array<Perm, 3>> reps;
  int threads = std::min<int>(env_thread_cap(), static_cast<int>(as.size()));
  if (threads <= 1) {
    reps = scan(0, as.size());
  } else {
    std::vector<std::future<std::set<std::array<Perm, 3>>>> parts;
    size_t chunk = (as.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t lo = t * chunk, hi = std::min(as.size(), lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& f : parts) reps.merge(f.get());
  }

  std::vector<CactusClass> out;
  out.reserve(reps.size());
  for (const auto& t : reps) {
    CactusClass cc{p, t[0], t[1], t[2], -1, 1, {}};
    cc.aut_order = automorphism_order(cc);
    cc.group = monodromy(cc);
    out.push_back(std::move(cc));
  }
  // std::set iterates in sorted order already; ids follow it.
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

int automorphism_order(const CactusClass& c) {
  const int n = c.passport.n;
  const Perm zeta = base_cycle(n);
  Perm s(n);
  int count = 0;
  for (int j = 0; j < n; ++j) {
    if (c.g_star.conjugated_by(s) == c.g_star &&
        c.g_circ.conjugated_by(s) == c.g_circ &&
        c.g_bullet.conjugated_by(s) == c.g_bullet)
      ++count;
    s = compose(s, zeta);
  }
  return count;
}

GroupClass monodromy(const CactusClass& c) {
  return group_order({c.g_star, c.g_circ, c.g_bullet});
}

}  // namespace zolotarev
