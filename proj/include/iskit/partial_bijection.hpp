#ifndef ISKIT_PARTIAL_BIJECTION_HPP
#define ISKIT_PARTIAL_BIJECTION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iskit {

// Partial bijection on the carrier {0, ..., n-1}.  Stored as an image
// vector with kUndefined marking points outside the domain; injectivity
// is enforced on construction.
class PartialBijection {
 public:
  static constexpr int kUndefined = -1;

  // the empty map on a carrier of size n
  explicit PartialBijection(int carrier);

  // images[x] = f(x), or kUndefined; must be injective where defined
  explicit PartialBijection(std::vector<int> images);

  static PartialBijection identity(int carrier);
  static PartialBijection empty_map(int carrier);
  static PartialBijection identity_on(int carrier, const std::vector<int>& subset);
  static PartialBijection from_pairs(int carrier,
                                     const std::vector<std::pair<int, int>>& pairs);

  int carrier_size() const { return static_cast<int>(images_.size()); }
  bool defined_at(int x) const { return images_[x] != kUndefined; }
  int apply(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  std::vector<int> domain() const;
  std::vector<int> image() const;
  int rank() const;

  bool is_idempotent() const;  // identity on its domain
  bool is_total() const { return rank() == carrier_size(); }

  // canonical literal, e.g. "[0>2 1>0]", "[]" for the empty map
  std::string to_literal() const;

  bool operator==(const PartialBijection& other) const {
    return images_ == other.images_;
  }
  bool operator!=(const PartialBijection& other) const {
    return !(*this == other);
  }
  // lexicographic on image vectors; total order used for canonical numbering
  bool operator<(const PartialBijection& other) const {
    return images_ < other.images_;
  }

 private:
  std::vector<int> images_;
};

// (compose(f, g))(x) = f(g(x)): the right factor acts first, so that
// products of semigroup elements line up with products of their images.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

PartialBijection invert(const PartialBijection& f);

// true iff f is the restriction of g to domain(f)
bool restriction_leq(const PartialBijection& f, const PartialBijection& g);

// largest common restriction: defined where f and g agree
PartialBijection meet(const PartialBijection& f, const PartialBijection& g);

// union of graphs if that union is again a partial bijection
std::optional<PartialBijection> join_compatible(
    const std::vector<PartialBijection>& maps);

// f⁻¹g and fg⁻¹ both idempotent
bool compatible(const PartialBijection& f, const PartialBijection& g);

// all partial bijections on n points, in a fixed canonical order
std::vector<PartialBijection> symmetric_inverse_monoid(int n, int cap = 5);

}  // namespace iskit

template <>
struct std::hash<iskit::PartialBijection> {
  size_t operator()(const iskit::PartialBijection& f) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : f.images())
      h = h * 1099511628211ull + static_cast<size_t>(v + 2);
    return h;
  }
};

#endif
