#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Two-valued sign. Deliberately not an integer so a sign can never be
/// mistaken for a weight.
enum class Sign : int { plus = 1, minus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}

/// (-1)^e
constexpr Sign parity_sign(long long e) {
  return e % 2 == 0 ? Sign::plus : Sign::minus;
}

inline Rational operator*(Sign s, const Rational& x) {
  return s == Sign::plus ? x : Rational(-x);
}

/// Bijection between two equal-sized index sets J -> I.
class Bijection {
public:
  Bijection() = default;

  /// From (j, image) pairs. Domain elements must be distinct and the images
  /// must be distinct.
  explicit Bijection(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> dom, img;
    dom.reserve(pairs.size());
    img.reserve(pairs.size());
    for (auto& [j, i] : pairs) {
      if (!dom.empty() && dom.back() == j)
        fail(errc::domain_mismatch,
             "domain element " + std::to_string(j) + " mapped twice");
      dom.push_back(j);
      img.push_back(i);
    }
    domain_ = IndexSet(dom);
    images_ = std::move(img);
    codomain_ = IndexSet(images_);  // rejects repeated images
  }

  static Bijection identity(const IndexSet& set) {
    std::vector<std::pair<int, int>> pairs;
    for (int v : set) pairs.emplace_back(v, v);
    return Bijection(std::move(pairs));
  }

  size_t size() const { return images_.size(); }
  const IndexSet& domain() const { return domain_; }
  const IndexSet& codomain() const { return codomain_; }

  int operator()(int j) const {
    int r = domain_.rank(j);
    if (r < 0)
      fail(errc::index_out_of_range,
           std::to_string(j) + " is not in the domain " + domain_.str());
    return images_[static_cast<size_t>(r)];
  }

  /// Image of the k-th smallest domain element.
  int image_at(size_t k) const { return images_[k]; }

  Bijection inverse() const {
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < size(); ++k)
      pairs.emplace_back(images_[k], domain_[k]);
    return Bijection(std::move(pairs));
  }

  bool operator==(const Bijection&) const = default;

  std::string str() const {
    std::string s = "{";
    for (size_t k = 0; k < size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(domain_[k]) + "->" + std::to_string(images_[k]);
    }
    return s + "}";
  }

private:
  IndexSet domain_;
  IndexSet codomain_;
  std::vector<int> images_;  // images_[k] = image of domain_[k]
};

/// Pairs j < j' in the domain whose images are out of order.
inline long long inversions(const Bijection& beta) {
  long long count = 0;
  for (size_t a = 0; a < beta.size(); ++a)
    for (size_t b = a + 1; b < beta.size(); ++b)
      if (beta.image_at(a) > beta.image_at(b)) ++count;
  return count;
}

/// Sign of a bijection between index sets: (-1)^(inversions + sum of
/// codomain + sum of domain). Reduces to the permutation sign when the two
/// sets coincide.
inline Sign epsilon(const Bijection& beta) {
  return parity_sign(inversions(beta) + beta.codomain().sum() +
                     beta.domain().sum());
}

/// alpha after beta; requires codomain(beta) == domain(alpha).
inline Bijection compose(const Bijection& alpha, const Bijection& beta) {
  if (beta.codomain() != alpha.domain())
    fail(errc::domain_mismatch, "compose: codomain " + beta.codomain().str() +
                                    " does not match domain " +
                                    alpha.domain().str());
  std::vector<std::pair<int, int>> pairs;
  for (size_t k = 0; k < beta.size(); ++k)
    pairs.emplace_back(beta.domain()[k], alpha(beta.image_at(k)));
  return Bijection(std::move(pairs));
}

/// Disjoint cycles of a permutation, each cycle starting at its smallest
/// element, cycles ordered by smallest element.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
};

inline CycleDecomposition cycle_decomposition(const Bijection& sigma) {
  if (sigma.domain() != sigma.codomain())
    fail(errc::domain_mismatch,
         "cycle decomposition requires a permutation, got " + sigma.str());
  CycleDecomposition cd;
  std::vector<int> seen;
  for (int start : sigma.domain()) {
    if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      cycle.push_back(v);
      seen.push_back(v);
      v = sigma(v);
    } while (v != start);
    cd.cycles.push_back(std::move(cycle));
  }
  return cd;
}

/// Product over cycles of (-1)^(length - 1).
inline Sign sign_from_cycles(const CycleDecomposition& cd) {
  Sign s = Sign::plus;
  for (const auto& c : cd.cycles)
    s = s * parity_sign(static_cast<long long>(c.size()) - 1);
  return s;
}

}  // namespace harmonic
