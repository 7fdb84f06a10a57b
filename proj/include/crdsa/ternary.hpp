#pragma once

// Ternary set partitions over a finite labeled node set, the three-element
// chain 0 < S < 1, and the coordinatewise isomorphism alpha between the
// disjoint-pair representation and words over {0, S, 1}.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crdsa/config.hpp"

namespace crdsa {

// The three-element chain. Numeric values follow the chain order, so the
// digitwise product order on words is integer comparison and the canonical
// index of a word is its base-3 value.
enum class Trit : std::uint8_t { zero = 0, S = 1, one = 2 };

constexpr Trit tri_join(Trit a, Trit b) { return a < b ? b : a; }
constexpr Trit tri_meet(Trit a, Trit b) { return a < b ? a : b; }

// 0 -> 1, S -> 0, 1 -> 0
constexpr Trit tri_star(Trit a) { return a == Trit::zero ? Trit::one : Trit::zero; }

// 0 -> 1, S -> 1, 1 -> 0
constexpr Trit tri_plus(Trit a) { return a == Trit::one ? Trit::zero : Trit::one; }

constexpr char tri_char(Trit a) {
  return a == Trit::zero ? '0' : (a == Trit::S ? 'S' : '1');
}

inline Trit tri_from_char(char c) {
  switch (c) {
    case '0': return Trit::zero;
    case 'S': return Trit::S;
    case '1': return Trit::one;
    default: throw std::invalid_argument(std::string("invalid ternary digit '") + c + "', expected one of {0,S,1}");
  }
}

// An ordered set of distinct node labels. Order is the lexicographic sort of
// the labels and is the coordinate order used everywhere downstream.
class NodeSet {
 public:
  explicit NodeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw std::invalid_argument("node set must be nonempty");
    }
    if (labels_.size() > node_cap()) {
      throw std::invalid_argument("node set exceeds the node cap (" + std::to_string(node_cap()) + ")");
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
      throw std::invalid_argument("node labels must be distinct");
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool contains(std::string_view label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
  }

  std::size_t index_of(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
      throw std::invalid_argument("unknown node label '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::uint64_t full_mask() const {
    return size() == 64 ? ~0ull : ((1ull << size()) - 1);
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<std::string> labels_;
};

// An element of C_3^n as a word over {0, S, 1}, coordinate i being the digit
// for the i-th label in canonical order.
class TernaryVector {
 public:
  explicit TernaryVector(std::vector<Trit> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
      throw std::invalid_argument("ternary vector must have at least one coordinate");
    }
    if (digits_.size() > node_cap()) {
      throw std::invalid_argument("ternary vector exceeds the node cap");
    }
  }

  static TernaryVector from_word(std::string_view word) {
    std::vector<Trit> digits;
    digits.reserve(word.size());
    for (char c : word) digits.push_back(tri_from_char(c));
    return TernaryVector(std::move(digits));
  }

  // Base-3 index, first coordinate most significant.
  static TernaryVector from_index(std::size_t n, std::uint64_t index) {
    if (n == 0) throw std::invalid_argument("ternary vector must have at least one coordinate");
    std::vector<Trit> digits(n, Trit::zero);
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = static_cast<Trit>(index % 3);
      index /= 3;
    }
    if (index != 0) throw std::invalid_argument("index out of range for vector length");
    return TernaryVector(std::move(digits));
  }

  static TernaryVector bottom(std::size_t n) { return TernaryVector(std::vector<Trit>(n, Trit::zero)); }
  static TernaryVector top(std::size_t n) { return TernaryVector(std::vector<Trit>(n, Trit::one)); }
  static TernaryVector core_element(std::size_t n) { return TernaryVector(std::vector<Trit>(n, Trit::S)); }

  std::size_t size() const { return digits_.size(); }
  Trit digit(std::size_t i) const { return digits_.at(i); }
  const std::vector<Trit>& digits() const { return digits_; }

  std::string word() const {
    std::string w;
    w.reserve(digits_.size());
    for (Trit d : digits_) w.push_back(tri_char(d));
    return w;
  }

  std::uint64_t index() const {
    std::uint64_t v = 0;
    for (Trit d : digits_) v = v * 3 + static_cast<std::uint64_t>(d);
    return v;
  }

  friend bool operator==(const TernaryVector&, const TernaryVector&) = default;

 private:
  std::vector<Trit> digits_;
};

namespace detail {
inline void require_same_length(const TernaryVector& a, const TernaryVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("ternary vectors have different lengths");
  }
}
}  // namespace detail

inline TernaryVector join(const TernaryVector& a, const TernaryVector& b) {
  detail::require_same_length(a, b);
  std::vector<Trit> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tri_join(a.digit(i), b.digit(i));
  return TernaryVector(std::move(out));
}

inline TernaryVector meet(const TernaryVector& a, const TernaryVector& b) {
  detail::require_same_length(a, b);
  std::vector<Trit> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tri_meet(a.digit(i), b.digit(i));
  return TernaryVector(std::move(out));
}

inline TernaryVector pseudocomplement(const TernaryVector& a) {
  std::vector<Trit> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tri_star(a.digit(i));
  return TernaryVector(std::move(out));
}

inline TernaryVector dual_pseudocomplement(const TernaryVector& a) {
  std::vector<Trit> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tri_plus(a.digit(i));
  return TernaryVector(std::move(out));
}

inline bool leq(const TernaryVector& a, const TernaryVector& b) {
  detail::require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.digit(i) > b.digit(i)) return false;
  }
  return true;
}

// A pair of disjoint subsets of a node set: the "known good" nodes X1 and the
// "known bad" nodes X2. The unknown region (X1 u X2)^c is derived, never stored.
class TernaryPartition {
 public:
  TernaryPartition(std::shared_ptr<const NodeSet> nodes, std::uint64_t good_mask, std::uint64_t bad_mask)
      : nodes_(std::move(nodes)), good_(good_mask), bad_(bad_mask) {
    if (!nodes_) throw std::invalid_argument("node set must be nonempty");
    const std::uint64_t full = nodes_->full_mask();
    if ((good_ & ~full) != 0 || (bad_ & ~full) != 0) {
      throw std::invalid_argument("subset mask outside the node set");
    }
    if ((good_ & bad_) != 0) {
      throw std::invalid_argument("good and bad subsets overlap");
    }
  }

  static TernaryPartition top(std::shared_ptr<const NodeSet> nodes) {
    auto full = nodes->full_mask();
    return TernaryPartition(std::move(nodes), full, 0);
  }
  static TernaryPartition bottom(std::shared_ptr<const NodeSet> nodes) {
    auto full = nodes->full_mask();
    return TernaryPartition(std::move(nodes), 0, full);
  }
  static TernaryPartition core_element(std::shared_ptr<const NodeSet> nodes) {
    return TernaryPartition(std::move(nodes), 0, 0);
  }

  const NodeSet& nodes() const { return *nodes_; }
  const std::shared_ptr<const NodeSet>& nodes_ptr() const { return nodes_; }

  std::uint64_t good_mask() const { return good_; }
  std::uint64_t bad_mask() const { return bad_; }
  std::uint64_t unknown_mask() const { return nodes_->full_mask() & ~(good_ | bad_); }

  std::vector<std::string> good() const { return labels_of(good_); }
  std::vector<std::string> bad() const { return labels_of(bad_); }
  std::vector<std::string> unknown() const { return labels_of(unknown_mask()); }

  friend bool operator==(const TernaryPartition& a, const TernaryPartition& b) {
    return *a.nodes_ == *b.nodes_ && a.good_ == b.good_ && a.bad_ == b.bad_;
  }

 private:
  std::vector<std::string> labels_of(std::uint64_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nodes_->size(); ++i) {
      if (mask & (1ull << i)) out.push_back(nodes_->label(i));
    }
    return out;
  }

  std::shared_ptr<const NodeSet> nodes_;
  std::uint64_t good_;
  std::uint64_t bad_;
};

inline std::uint64_t label_mask(const NodeSet& nodes, std::span<const std::string> labels) {
  std::uint64_t mask = 0;
  for (const auto& label : labels) mask |= 1ull << nodes.index_of(label);
  return mask;
}

inline TernaryPartition make_partition(std::shared_ptr<const NodeSet> nodes,
                                       std::span<const std::string> good,
                                       std::span<const std::string> bad) {
  if (!nodes) throw std::invalid_argument("node set must be nonempty");
  const std::uint64_t good_mask = label_mask(*nodes, good);
  const std::uint64_t bad_mask  = label_mask(*nodes, bad);
  return TernaryPartition(std::move(nodes), good_mask, bad_mask);
}

namespace detail {
inline void require_same_nodes(const TernaryPartition& a, const TernaryPartition& b) {
  if (!(a.nodes() == b.nodes())) {
    throw std::invalid_argument("partitions are over different node sets");
  }
}
}  // namespace detail

// (X1,X2) v (Y1,Y2) = (X1 u Y1, X2 n Y2)
inline TernaryPartition join(const TernaryPartition& a, const TernaryPartition& b) {
  detail::require_same_nodes(a, b);
  return TernaryPartition(a.nodes_ptr(), a.good_mask() | b.good_mask(), a.bad_mask() & b.bad_mask());
}

// (X1,X2) ^ (Y1,Y2) = (X1 n Y1, X2 u Y2)
inline TernaryPartition meet(const TernaryPartition& a, const TernaryPartition& b) {
  detail::require_same_nodes(a, b);
  return TernaryPartition(a.nodes_ptr(), a.good_mask() & b.good_mask(), a.bad_mask() | b.bad_mask());
}

// (X1,X2)* = (X2, X2^c)
inline TernaryPartition pseudocomplement(const TernaryPartition& a) {
  const std::uint64_t full = a.nodes().full_mask();
  return TernaryPartition(a.nodes_ptr(), a.bad_mask(), full & ~a.bad_mask());
}

// (X1,X2)+ = (X1^c, X1)
inline TernaryPartition dual_pseudocomplement(const TernaryPartition& a) {
  const std::uint64_t full = a.nodes().full_mask();
  return TernaryPartition(a.nodes_ptr(), full & ~a.good_mask(), a.good_mask());
}

// (X1,X2) <= (Y1,Y2) iff X1 subset Y1 and Y2 subset X2
inline bool leq(const TernaryPartition& a, const TernaryPartition& b) {
  detail::require_same_nodes(a, b);
  return (a.good_mask() & ~b.good_mask()) == 0 && (b.bad_mask() & ~a.bad_mask()) == 0;
}

// alpha(X1,X2): coordinate i is 1 on X1, 0 on X2 and S on the unknown region.
inline TernaryVector alpha(const TernaryPartition& p) {
  std::vector<Trit> digits(p.nodes().size(), Trit::S);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (p.good_mask() & (1ull << i)) {
      digits[i] = Trit::one;
    } else if (p.bad_mask() & (1ull << i)) {
      digits[i] = Trit::zero;
    }
  }
  return TernaryVector(std::move(digits));
}

inline TernaryPartition alpha_inverse(std::shared_ptr<const NodeSet> nodes, const TernaryVector& v) {
  if (!nodes) throw std::invalid_argument("node set must be nonempty");
  if (nodes->size() != v.size()) {
    throw std::invalid_argument("vector length does not match the node set");
  }
  std::uint64_t good = 0;
  std::uint64_t bad  = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.digit(i) == Trit::one) good |= 1ull << i;
    if (v.digit(i) == Trit::zero) bad |= 1ull << i;
  }
  return TernaryPartition(std::move(nodes), good, bad);
}

}  // namespace crdsa
