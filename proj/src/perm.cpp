#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace zolotarev {

namespace {

constexpr int kMaxClosureDegree = 9;

void require(bool ok, const char* msg) {
  if (!ok) throw UsageError(msg);
}

}  // namespace

Perm::Perm(int n) {
  require(n >= 0 && n <= 255, "permutation degree out of range");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(const std::vector<int>& images_1based) {
  const int n = static_cast<int>(images_1based.size());
  require(n <= 255, "permutation degree out of range");
  std::vector<bool> seen(n, false);
  Perm p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = images_1based[i];
    require(v >= 1 && v <= n, "image out of range");
    require(!seen[v - 1], "images are not a bijection");
    seen[v - 1] = true;
    p.img_[i] = static_cast<uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::parse(const std::string& text, int n) {
  require(n >= 0, "negative degree");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool any_cycle = false;
  while (pos < text.size()) {
    require(text[pos] == '(', "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      require(std::isdigit(static_cast<unsigned char>(text[pos])), "expected point in cycle");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      require(v >= 1 && v <= n, "cycle point out of range");
      require(!used[v - 1], "repeated point in cycle notation");
      used[v - 1] = true;
      cyc.push_back(v);
      skip_ws();
    }
    require(pos < text.size(), "unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i)
      images[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    any_cycle = true;
    skip_ws();
  }
  require(any_cycle, "empty permutation text");
  return from_images(images);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_even() const {
  // parity = (n - #cycles) mod 2
  const int n = degree();
  std::vector<bool> seen(n, false);
  int ncycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++ncycles;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return ((n - ncycles) % 2) == 0;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& s) const {
  require(degree() == s.degree(), "degree mismatch in conjugation");
  // q = s^-1 * this * s  (left-to-right), i.e. q(s(j)) = s(this(j)).
  Perm q;
  q.img_.resize(degree());
  for (int j = 0; j < degree(); ++j) q.img_[s.img_[j]] = s.img_[img_[j]];
  return q;
}

std::vector<std::vector<int>> Perm::cycles() const {
  const int n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  require(p.degree() == q.degree(), "degree mismatch in composition");
  std::vector<int> images(p.degree());
  const auto& pi = p.images0();
  const auto& qi = q.images0();
  for (int i = 0; i < p.degree(); ++i) images[i] = qi[pi[i]] + 1;
  return Perm::from_images(images);
}

std::vector<int> cycle_type(const Perm& p) {
  const int n = p.degree();
  const auto& img = p.images0();
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool has_involution_type(const Perm& p, int k) {
  auto type = cycle_type(p);
  int twos = 0, ones = 0;
  for (int len : type) {
    if (len == 2)
      ++twos;
    else if (len == 1)
      ++ones;
    else
      return false;
  }
  return twos == k && ones == p.degree() - 2 * k;
}

Perm base_cycle(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
  return Perm::from_images(images);
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string_view GroupClass::name_str() const {
  switch (name) {
    case Name::symmetric: return "symmetric";
    case Name::alternating: return "alternating";
    case Name::psl27: return "psl27";
    case Name::other: return "other";
  }
  return "other";
}

GroupClass group_order(const std::vector<Perm>& generators) {
  require(!generators.empty(), "group_order needs at least one generator");
  const int n = generators[0].degree();
  for (const auto& g : generators)
    require(g.degree() == n, "generators of mixed degree");
  if (n > kMaxClosureDegree)
    throw CapabilityError("group closure is exhaustive and limited to degree <= 9");

  std::set<std::vector<uint8_t>> seen;
  std::vector<Perm> frontier;
  Perm id(n);
  seen.insert(id.images0());
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& f : frontier) {
      for (const auto& g : generators) {
        Perm h = compose(f, g);
        if (seen.insert(h.images0()).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }

  GroupClass gc;
  gc.order = static_cast<long long>(seen.size());
  bool all_even = std::all_of(generators.begin(), generators.end(),
                              [](const Perm& g) { return g.is_even(); });
  if (gc.order == factorial(n))
    gc.name = GroupClass::Name::symmetric;
  else if (gc.order == factorial(n) / 2 && all_even)
    gc.name = GroupClass::Name::alternating;
  else if (n == 7 && gc.order == 168)
    gc.name = GroupClass::Name::psl27;
  else
    gc.name = GroupClass::Name::other;
  return gc;
}

std::vector<Perm> min_conjugate_tuple(const std::vector<Perm>& tuple) {
  require(!tuple.empty(), "empty tuple");
  const int n = tuple[0].degree();
  for (const auto& t : tuple) require(t.degree() == n, "tuple of mixed degree");
  if (n > kMaxClosureDegree)
    throw CapabilityError("tuple canonicalization is brute force and limited to degree <= 9");

  std::vector<int> s_images(n);
  std::iota(s_images.begin(), s_images.end(), 1);
  std::vector<Perm> best;
  do {
    Perm s = Perm::from_images(s_images);
    if (best.empty()) {
      best.reserve(tuple.size());
      for (const auto& t : tuple) best.push_back(t.conjugated_by(s));
      continue;
    }
    int cmp = 0;
    std::vector<Perm> cand;
    cand.reserve(tuple.size());
    for (const auto& t : tuple) {
      Perm c = t.conjugated_by(s);
      if (cmp == 0) {
        if (c < best[cand.size()])
          cmp = -1;
        else if (best[cand.size()] < c)
          cmp = 1;
      }
      if (cmp == 1) break;
      cand.push_back(std::move(c));
    }
    if (cmp == -1) best = std::move(cand);
  } while (std::next_permutation(s_images.begin(), s_images.end()));
  return best;
}

}  // namespace zolotarev
