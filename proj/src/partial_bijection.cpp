#include "iskit/partial_bijection.hpp"

#include <algorithm>

#include "iskit/errors.hpp"

namespace iskit {

PartialBijection::PartialBijection(int carrier) {
  if (carrier <= 0)
    throw InvalidInputError("carrier size must be positive");
  images_.assign(carrier, kUndefined);
}

PartialBijection::PartialBijection(std::vector<int> images)
    : images_(std::move(images)) {
  int n = carrier_size();
  if (n == 0) throw InvalidInputError("carrier size must be positive");
  std::vector<char> hit(n, 0);
  for (int v : images_) {
    if (v == kUndefined) continue;
    if (v < 0 || v >= n)
      throw InvalidInputError("image point out of carrier range");
    if (hit[v]) throw InvalidInputError("map is not injective");
    hit[v] = 1;
  }
}

PartialBijection PartialBijection::identity(int carrier) {
  PartialBijection f(carrier);
  for (int x = 0; x < carrier; ++x) f.images_[x] = x;
  return f;
}

PartialBijection PartialBijection::empty_map(int carrier) {
  return PartialBijection(carrier);
}

PartialBijection PartialBijection::identity_on(int carrier,
                                               const std::vector<int>& subset) {
  PartialBijection f(carrier);
  for (int x : subset) {
    if (x < 0 || x >= carrier)
      throw InvalidInputError("subset point out of carrier range");
    f.images_[x] = x;
  }
  return f;
}

PartialBijection PartialBijection::from_pairs(
    int carrier, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> images(carrier > 0 ? carrier : 0, kUndefined);
  if (carrier <= 0) throw InvalidInputError("carrier size must be positive");
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= carrier || y < 0 || y >= carrier)
      throw InvalidInputError("pair out of carrier range");
    if (images[x] != kUndefined && images[x] != y)
      throw InvalidInputError("conflicting images for one point");
    images[x] = y;
  }
  return PartialBijection(std::move(images));
}

std::vector<int> PartialBijection::domain() const {
  std::vector<int> out;
  for (int x = 0; x < carrier_size(); ++x)
    if (defined_at(x)) out.push_back(x);
  return out;
}

std::vector<int> PartialBijection::image() const {
  std::vector<int> out;
  for (int v : images_)
    if (v != kUndefined) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

int PartialBijection::rank() const {
  int r = 0;
  for (int v : images_)
    if (v != kUndefined) ++r;
  return r;
}

bool PartialBijection::is_idempotent() const {
  for (int x = 0; x < carrier_size(); ++x)
    if (defined_at(x) && images_[x] != x) return false;
  return true;
}

std::string PartialBijection::to_literal() const {
  std::string out = "[";
  bool first = true;
  for (int x = 0; x < carrier_size(); ++x) {
    if (!defined_at(x)) continue;
    if (!first) out += ' ';
    out += std::to_string(x) + ">" + std::to_string(images_[x]);
    first = false;
  }
  out += ']';
  return out;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.carrier_size() != g.carrier_size())
    throw InvalidInputError("carrier sizes differ");
  int n = f.carrier_size();
  std::vector<int> images(n, PartialBijection::kUndefined);
  for (int x = 0; x < n; ++x) {
    int y = g.apply(x);
    if (y == PartialBijection::kUndefined) continue;
    images[x] = f.apply(y);
  }
  return PartialBijection(std::move(images));
}

PartialBijection invert(const PartialBijection& f) {
  int n = f.carrier_size();
  std::vector<int> images(n, PartialBijection::kUndefined);
  for (int x = 0; x < n; ++x) {
    int y = f.apply(x);
    if (y != PartialBijection::kUndefined) images[y] = x;
  }
  return PartialBijection(std::move(images));
}

bool restriction_leq(const PartialBijection& f, const PartialBijection& g) {
  if (f.carrier_size() != g.carrier_size())
    throw InvalidInputError("carrier sizes differ");
  for (int x = 0; x < f.carrier_size(); ++x)
    if (f.defined_at(x) && f.apply(x) != g.apply(x)) return false;
  return true;
}

PartialBijection meet(const PartialBijection& f, const PartialBijection& g) {
  if (f.carrier_size() != g.carrier_size())
    throw InvalidInputError("carrier sizes differ");
  int n = f.carrier_size();
  std::vector<int> images(n, PartialBijection::kUndefined);
  for (int x = 0; x < n; ++x)
    if (f.defined_at(x) && f.apply(x) == g.apply(x)) images[x] = f.apply(x);
  return PartialBijection(std::move(images));
}

std::optional<PartialBijection> join_compatible(
    const std::vector<PartialBijection>& maps) {
  if (maps.empty()) return std::nullopt;
  int n = maps.front().carrier_size();
  std::vector<int> images(n, PartialBijection::kUndefined);
  std::vector<char> hit(n, 0);
  for (const auto& f : maps) {
    if (f.carrier_size() != n)
      throw InvalidInputError("carrier sizes differ");
    for (int x = 0; x < n; ++x) {
      int y = f.apply(x);
      if (y == PartialBijection::kUndefined) continue;
      if (images[x] != PartialBijection::kUndefined) {
        if (images[x] != y) return std::nullopt;  // disagree at x
        continue;
      }
      if (hit[y]) return std::nullopt;  // union not injective
      images[x] = y;
      hit[y] = 1;
    }
  }
  return PartialBijection(std::move(images));
}

bool compatible(const PartialBijection& f, const PartialBijection& g) {
  return compose(invert(f), g).is_idempotent() &&
         compose(f, invert(g)).is_idempotent();
}

namespace {

void enumerate_maps(int n, int x, std::vector<int>& images,
                    std::vector<char>& used,
                    std::vector<PartialBijection>& out) {
  if (x == n) {
    out.push_back(PartialBijection(images));
    return;
  }
  images[x] = PartialBijection::kUndefined;
  enumerate_maps(n, x + 1, images, used, out);
  for (int y = 0; y < n; ++y) {
    if (used[y]) continue;
    images[x] = y;
    used[y] = 1;
    enumerate_maps(n, x + 1, images, used, out);
    used[y] = 0;
  }
  images[x] = PartialBijection::kUndefined;
}

}  // namespace

std::vector<PartialBijection> symmetric_inverse_monoid(int n, int cap) {
  if (n <= 0) throw InvalidInputError("carrier size must be positive");
  if (n > cap)
    throw CapExceededError("carrier size " + std::to_string(n) +
                           " exceeds enumeration cap " + std::to_string(cap));
  std::vector<PartialBijection> out;
  std::vector<int> images(n, PartialBijection::kUndefined);
  std::vector<char> used(n, 0);
  enumerate_maps(n, 0, images, used, out);
  return out;
}

}  // namespace iskit
