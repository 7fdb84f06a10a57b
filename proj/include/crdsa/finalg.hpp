#pragma once

// Generic finite-algebra engine: operation tables, term evaluation,
// subuniverse closure and enumeration, congruence generation,
// homomorphism/automorphism search and the four-condition primality checker.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crdsa/config.hpp"

namespace crdsa {

// Ordered list of operation symbols with arities; constants are arity 0.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::pair<std::string, int>> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& [name, arity] : symbols_) {
      if (arity < 0) throw std::invalid_argument("negative arity for symbol '" + name + "'");
      if (!seen.insert(name).second) throw std::invalid_argument("duplicate symbol '" + name + "'");
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(std::size_t i) const { return symbols_.at(i).first; }
  int arity(std::size_t i) const { return symbols_.at(i).second; }
  const std::vector<std::pair<std::string, int>>& symbols() const { return symbols_; }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].first == name) return static_cast<int>(i);
    }
    return -1;
  }
  bool has(std::string_view name) const { return index_of(name) >= 0; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::pair<std::string, int>> symbols_;
};

// Carrier {0..m-1} plus one total operation table per symbol. Tables are
// stored flattened, first argument most significant.
class FiniteAlgebra {
 public:
  FiniteAlgebra(int carrier_size, Signature sig, std::vector<std::vector<int>> tables)
      : m_(carrier_size), sig_(std::move(sig)), tables_(std::move(tables)) {
    if (m_ < 1) throw std::invalid_argument("carrier must be nonempty");
    if (tables_.size() != sig_.size()) throw std::invalid_argument("one table per symbol required");
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      std::size_t expected = 1;
      for (int i = 0; i < sig_.arity(s); ++i) expected *= static_cast<std::size_t>(m_);
      if (tables_[s].size() != expected) {
        throw std::invalid_argument("table size mismatch for symbol '" + sig_.name(s) + "'");
      }
      for (int v : tables_[s]) {
        if (v < 0 || v >= m_) throw std::invalid_argument("table entry out of range for '" + sig_.name(s) + "'");
      }
    }
  }

  int carrier_size() const { return m_; }
  const Signature& signature() const { return sig_; }
  const std::vector<int>& table(std::size_t sym) const { return tables_.at(sym); }

  int apply(std::size_t sym, std::span<const int> args) const {
    const int arity = sig_.arity(sym);
    if (static_cast<int>(args.size()) != arity) {
      throw std::invalid_argument("arity mismatch for symbol '" + sig_.name(sym) + "'");
    }
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(m_) + static_cast<std::size_t>(a);
    return tables_[sym][idx];
  }

  int apply(std::string_view name, std::span<const int> args) const {
    int s = sig_.index_of(name);
    if (s < 0) throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
    return apply(static_cast<std::size_t>(s), args);
  }

  int constant(std::string_view name) const { return apply(name, {}); }

  int op2(std::string_view name, int a, int b) const {
    const int args[2] = {a, b};
    return apply(name, args);
  }
  int op1(std::string_view name, int a) const {
    const int args[1] = {a};
    return apply(name, args);
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  int m_;
  Signature sig_;
  std::vector<std::vector<int>> tables_;
};

// Keeps only the named symbols, in signature order.
inline FiniteAlgebra reduct(const FiniteAlgebra& a, const std::vector<std::string>& keep) {
  std::vector<std::pair<std::string, int>> symbols;
  std::vector<std::vector<int>> tables;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (std::find(keep.begin(), keep.end(), a.signature().name(s)) != keep.end()) {
      symbols.emplace_back(a.signature().name(s), a.signature().arity(s));
      tables.push_back(a.table(s));
    }
  }
  return FiniteAlgebra(a.carrier_size(), Signature(std::move(symbols)), std::move(tables));
}

// ---------------------------------------------------------------------------
// Terms: trees over variables v0,v1,... and signature symbols, written as
// parenthesized prefix expressions, e.g. (join (star v1) v0).

struct Term {
  int var = -1;  // >= 0: variable leaf, symbol/children unused
  std::string symbol;
  std::vector<Term> children;

  static Term variable(int index) {
    Term t;
    t.var = index;
    return t;
  }
  static Term apply(std::string symbol, std::vector<Term> children = {}) {
    Term t;
    t.symbol = std::move(symbol);
    t.children = std::move(children);
    return t;
  }

  static Term parse(std::string_view text) {
    std::size_t pos = 0;
    Term t = parse_expr(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing input after term");
    return t;
  }

  std::string str() const {
    if (var >= 0) return "v" + std::to_string(var);
    if (children.empty()) return symbol;
    std::string out = "(" + symbol;
    for (const Term& c : children) out += " " + c.str();
    return out + ")";
  }

  int max_var() const {
    int v = var;
    for (const Term& c : children) v = std::max(v, c.max_var());
    return v;
  }

 private:
  static void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
  }

  static std::string read_atom(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '\n' && s[pos] != '(' && s[pos] != ')') ++pos;
    if (pos == start) throw std::invalid_argument("expected atom in term");
    return std::string(s.substr(start, pos - start));
  }

  static Term atom_term(const std::string& atom) {
    if (atom.size() >= 2 && atom[0] == 'v' && std::all_of(atom.begin() + 1, atom.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return variable(std::stoi(atom.substr(1)));
    }
    return apply(atom);
  }

  static Term parse_expr(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of term");
    if (s[pos] != '(') return atom_term(read_atom(s, pos));
    ++pos;  // '('
    skip_ws(s, pos);
    std::string head = read_atom(s, pos);
    Term t = apply(head);
    while (true) {
      skip_ws(s, pos);
      if (pos >= s.size()) throw std::invalid_argument("unbalanced parentheses in term");
      if (s[pos] == ')') {
        ++pos;
        return t;
      }
      t.children.push_back(parse_expr(s, pos));
    }
  }
};

inline int eval_term(const FiniteAlgebra& a, const Term& t, std::span<const int> assignment) {
  if (t.var >= 0) {
    if (t.var >= static_cast<int>(assignment.size())) throw std::invalid_argument("variable out of range: v" + std::to_string(t.var));
    return assignment[static_cast<std::size_t>(t.var)];
  }
  int sym = a.signature().index_of(t.symbol);
  if (sym < 0) throw std::invalid_argument("unknown symbol '" + t.symbol + "'");
  if (a.signature().arity(static_cast<std::size_t>(sym)) != static_cast<int>(t.children.size())) {
    throw std::invalid_argument("arity mismatch for symbol '" + t.symbol + "'");
  }
  std::vector<int> args;
  args.reserve(t.children.size());
  for (const Term& c : t.children) args.push_back(eval_term(a, c, assignment));
  return a.apply(static_cast<std::size_t>(sym), args);
}

// ---------------------------------------------------------------------------
// Subuniverses.

namespace detail {

// Calls fn on every arity-length tuple over `pool` that uses `pinned` in at
// least one position. Tuples are (pool element)* with one slot forced.
template <typename Fn>
void for_tuples_with(const std::vector<int>& pool, int pinned, int arity, Fn&& fn) {
  std::vector<int> tuple(static_cast<std::size_t>(arity));
  for (int slot = 0; slot < arity; ++slot) {
    // positions before `slot` range over pool \ {pinned} to avoid revisiting
    // tuples counted at an earlier pinned slot; positions after range over pool
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    while (true) {
      bool ok = true;
      for (int p = 0; p < arity && ok; ++p) {
        if (p == slot) {
          tuple[static_cast<std::size_t>(p)] = pinned;
        } else {
          int v = pool[idx[static_cast<std::size_t>(p)]];
          if (p < slot && v == pinned) ok = false;
          tuple[static_cast<std::size_t>(p)] = v;
        }
      }
      if (ok) fn(tuple);
      int p = arity - 1;
      while (p >= 0) {
        if (p == slot) {
          --p;
          continue;
        }
        if (++idx[static_cast<std::size_t>(p)] < pool.size()) break;
        idx[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }
}

}  // namespace detail

// Least subset containing the generators and all constants, closed under
// every operation. Worklist closure: each new element is combined with
// everything already present.
inline std::vector<int> subalgebra_closure(const FiniteAlgebra& a, std::span<const int> generators) {
  const int m = a.carrier_size();
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = true;
      members.push_back(x);
    }
  };
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (a.signature().arity(s) == 0) add(a.table(s)[0]);
  }
  for (int g : generators) {
    if (g < 0 || g >= m) throw std::invalid_argument("generator out of range");
    add(g);
  }
  for (std::size_t next = 0; next < members.size(); ++next) {
    const int x = members[next];
    std::vector<int> pool(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(next) + 1);
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const int arity = a.signature().arity(s);
      if (arity == 0) continue;
      detail::for_tuples_with(pool, x, arity, [&](const std::vector<int>& tuple) { add(a.apply(s, tuple)); });
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// All subuniverses, canonically sorted. Breadth-first over the subuniverse
// lattice: every subuniverse strictly above a known one is reached by closing
// that one with a single extra element; closures are memoized per (set, x).
inline std::vector<std::vector<int>> enumerate_subalgebras(const FiniteAlgebra& a) {
  if (static_cast<std::size_t>(a.carrier_size()) > carrier_cap()) {
    throw std::invalid_argument("carrier cap exceeded (" + std::to_string(carrier_cap()) + ")");
  }
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  std::map<std::pair<std::vector<int>, int>, std::vector<int>> closure_memo;

  auto push = [&](std::vector<int> s) {
    if (found.insert(s).second) queue.push_back(std::move(s));
  };
  push(subalgebra_closure(a, {}));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> base = queue[head];
    for (int x = 0; x < a.carrier_size(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      auto key = std::make_pair(base, x);
      auto it  = closure_memo.find(key);
      if (it == closure_memo.end()) {
        std::vector<int> gens = base;
        gens.push_back(x);
        it = closure_memo.emplace(key, subalgebra_closure(a, gens)).first;
      }
      push(it->second);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Congruences.

// An equivalence relation on {0..n-1} stored as the map x -> least element of
// its block. Blocks are listed sorted by that representative.
class PartitionRelation {
 public:
  static PartitionRelation identity(int n) {
    PartitionRelation p;
    p.rep_.resize(static_cast<std::size_t>(n));
    std::iota(p.rep_.begin(), p.rep_.end(), 0);
    return p;
  }

  static PartitionRelation full(int n) {
    PartitionRelation p;
    p.rep_.assign(static_cast<std::size_t>(n), 0);
    return p;
  }

  static PartitionRelation from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    PartitionRelation p;
    p.rep_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& block : blocks) {
      if (block.empty()) throw std::invalid_argument("empty block");
      int rep = *std::min_element(block.begin(), block.end());
      for (int x : block) {
        if (x < 0 || x >= n) throw std::invalid_argument("block element out of range");
        if (p.rep_[static_cast<std::size_t>(x)] != -1) throw std::invalid_argument("blocks are not disjoint");
        p.rep_[static_cast<std::size_t>(x)] = rep;
      }
    }
    for (int r : p.rep_) {
      if (r == -1) throw std::invalid_argument("blocks do not cover the carrier");
    }
    return p;
  }

  // From an arbitrary x -> root map (roots normalized to least members).
  static PartitionRelation from_representatives(std::vector<int> rep) {
    PartitionRelation p;
    std::vector<int> least(rep.size(), -1);
    for (std::size_t x = 0; x < rep.size(); ++x) {
      int r = rep[x];
      if (least[static_cast<std::size_t>(r)] == -1) least[static_cast<std::size_t>(r)] = static_cast<int>(x);
    }
    p.rep_.resize(rep.size());
    for (std::size_t x = 0; x < rep.size(); ++x) p.rep_[x] = least[static_cast<std::size_t>(rep[x])];
    return p;
  }

  int size() const { return static_cast<int>(rep_.size()); }
  bool related(int x, int y) const { return rep_.at(static_cast<std::size_t>(x)) == rep_.at(static_cast<std::size_t>(y)); }
  int representative(int x) const { return rep_.at(static_cast<std::size_t>(x)); }

  std::vector<std::vector<int>> blocks() const {
    std::map<int, std::vector<int>> by_rep;
    for (std::size_t x = 0; x < rep_.size(); ++x) by_rep[rep_[x]].push_back(static_cast<int>(x));
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, block] : by_rep) out.push_back(std::move(block));
    return out;
  }

  std::size_t block_count() const { return std::set<int>(rep_.begin(), rep_.end()).size(); }
  bool is_identity() const { return block_count() == rep_.size(); }
  bool is_full() const { return block_count() == 1; }

  friend bool operator==(const PartitionRelation&, const PartitionRelation&) = default;
  friend bool operator<(const PartitionRelation& a, const PartitionRelation& b) { return a.rep_ < b.rep_; }

 private:
  std::vector<int> rep_;
};

// Compatibility with every operation table. Checking single-coordinate
// changes suffices: a componentwise-related tuple pair is a chain of such
// changes and congruence blocks are transitive.
inline bool is_congruence(const FiniteAlgebra& a, const PartitionRelation& theta) {
  if (theta.size() != a.carrier_size()) throw std::invalid_argument("relation size does not match carrier");
  const int m = a.carrier_size();
  std::vector<int> tuple;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const int arity = a.signature().arity(s);
    if (arity == 0) continue;
    tuple.assign(static_cast<std::size_t>(arity), 0);
    while (true) {
      const int base = a.apply(s, tuple);
      for (int p = 0; p < arity; ++p) {
        const int orig = tuple[static_cast<std::size_t>(p)];
        for (int y = 0; y < m; ++y) {
          if (y == orig || !theta.related(orig, y)) continue;
          tuple[static_cast<std::size_t>(p)] = y;
          if (!theta.related(base, a.apply(s, tuple))) {
            tuple[static_cast<std::size_t>(p)] = orig;
            return false;
          }
        }
        tuple[static_cast<std::size_t>(p)] = orig;
      }
      int p = arity - 1;
      while (p >= 0 && ++tuple[static_cast<std::size_t>(p)] == m) {
        tuple[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }
  return true;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[static_cast<std::size_t>(y)] = x;
    return true;
  }
};

}  // namespace detail

// Least congruence containing the given pairs: merge, then propagate each
// newly merged pair through every one-variable translation of every
// operation until fixpoint.
inline PartitionRelation congruence_generated(const FiniteAlgebra& a, std::span<const std::pair<int, int>> pairs) {
  const int m = a.carrier_size();
  detail::UnionFind uf(m);
  std::vector<std::pair<int, int>> work;
  auto merge = [&](int x, int y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m) throw std::invalid_argument("pair element out of range");
    merge(x, y);
  }
  std::vector<int> tuple;
  for (std::size_t head = 0; head < work.size(); ++head) {
    auto [x, y] = work[head];
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const int arity = a.signature().arity(s);
      if (arity == 0) continue;
      // context elements range over the full carrier in every other slot
      tuple.assign(static_cast<std::size_t>(arity), 0);
      for (int p = 0; p < arity; ++p) {
        std::fill(tuple.begin(), tuple.end(), 0);
        while (true) {
          tuple[static_cast<std::size_t>(p)] = x;
          const int fx = a.apply(s, tuple);
          tuple[static_cast<std::size_t>(p)] = y;
          const int fy = a.apply(s, tuple);
          if (fx != fy) merge(fx, fy);
          int q = arity - 1;
          while (q >= 0) {
            if (q == p) {
              --q;
              continue;
            }
            if (++tuple[static_cast<std::size_t>(q)] < m) break;
            tuple[static_cast<std::size_t>(q)] = 0;
            --q;
          }
          if (q < 0) break;
        }
      }
    }
  }
  std::vector<int> rep(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) rep[static_cast<std::size_t>(x)] = uf.find(x);
  return PartitionRelation::from_representatives(std::move(rep));
}

inline PartitionRelation principal_congruence(const FiniteAlgebra& a, int x, int y) {
  const std::pair<int, int> p[1] = {{x, y}};
  return congruence_generated(a, p);
}

// All congruences: every congruence is the join of the principal congruences
// it contains, so closing the principal ones under join is exhaustive.
inline std::vector<PartitionRelation> all_congruences(const FiniteAlgebra& a) {
  const int m = a.carrier_size();
  std::set<PartitionRelation> found;
  std::vector<PartitionRelation> queue;
  auto push = [&](PartitionRelation p) {
    if (found.insert(p).second) queue.push_back(std::move(p));
  };
  push(PartitionRelation::identity(m));
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) push(principal_congruence(a, x, y));
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::pair<int, int>> gen;
      for (int x = 0; x < m; ++x) {
        gen.emplace_back(x, queue[i].representative(x));
        gen.emplace_back(x, queue[j].representative(x));
      }
      push(congruence_generated(a, gen));
    }
  }
  return {found.begin(), found.end()};
}

struct SimplicityResult {
  bool simple = false;
  std::optional<PartitionRelation> witness;  // a proper nontrivial congruence
};

inline SimplicityResult is_simple(const FiniteAlgebra& a) {
  const int m = a.carrier_size();
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      PartitionRelation theta = principal_congruence(a, x, y);
      if (!theta.is_full()) return {false, theta};
    }
  }
  return {true, std::nullopt};
}

// Greedy generating set over the constants: repeatedly adjoin the least
// element outside the current closure.
inline std::vector<int> generating_set(const FiniteAlgebra& a) {
  std::vector<int> gens;
  std::vector<int> closed = subalgebra_closure(a, gens);
  while (static_cast<int>(closed.size()) < a.carrier_size()) {
    int missing = 0;
    while (std::binary_search(closed.begin(), closed.end(), missing)) ++missing;
    gens.push_back(missing);
    closed = subalgebra_closure(a, gens);
  }
  return gens;
}

namespace detail {

// Extends a partial map (constants + generator images) to a homomorphism by
// closing its graph under all operations; fails on any conflict.
inline std::optional<std::vector<int>> extend_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                  const std::vector<int>& gens, const std::vector<int>& images) {
  std::vector<int> h(static_cast<std::size_t>(a.carrier_size()), -1);
  std::vector<int> defined;
  auto assign = [&](int x, int y) {
    if (h[static_cast<std::size_t>(x)] == -1) {
      h[static_cast<std::size_t>(x)] = y;
      defined.push_back(x);
      return true;
    }
    return h[static_cast<std::size_t>(x)] == y;
  };
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (a.signature().arity(s) == 0 && !assign(a.table(s)[0], b.table(s)[0])) return std::nullopt;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!assign(gens[i], images[i])) return std::nullopt;
  }
  std::vector<int> mapped;
  for (std::size_t next = 0; next < defined.size(); ++next) {
    const int x = defined[next];
    std::vector<int> pool(defined.begin(), defined.begin() + static_cast<std::ptrdiff_t>(next) + 1);
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const int arity = a.signature().arity(s);
      if (arity == 0) continue;
      bool conflict = false;
      detail::for_tuples_with(pool, x, arity, [&](const std::vector<int>& tuple) {
        if (conflict) return;
        mapped.resize(tuple.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) mapped[i] = h[static_cast<std::size_t>(tuple[i])];
        if (!assign(a.apply(s, tuple), b.apply(s, mapped))) conflict = true;
      });
      if (conflict) return std::nullopt;
    }
  }
  if (static_cast<int>(defined.size()) != a.carrier_size()) return std::nullopt;
  return h;
}

}  // namespace detail

// All homomorphisms A -> B, searched over images of a generating set of A,
// sorted by the full image vector.
inline std::vector<std::vector<int>> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature())) throw std::invalid_argument("signature mismatch");
  const std::vector<int> gens = generating_set(a);
  std::vector<std::vector<int>> result;
  std::vector<int> images(gens.size(), 0);
  while (true) {
    if (auto h = detail::extend_hom(a, b, gens, images)) result.push_back(std::move(*h));
    std::size_t p = images.size();
    while (p > 0) {
      if (++images[p - 1] < b.carrier_size()) break;
      images[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline std::vector<std::vector<int>> automorphisms(const FiniteAlgebra& a) {
  std::vector<std::vector<int>> out;
  for (auto& h : homomorphisms(a, a)) {
    std::vector<bool> hit(static_cast<std::size_t>(a.carrier_size()), false);
    bool bijective = true;
    for (int y : h) {
      if (hit[static_cast<std::size_t>(y)]) {
        bijective = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = true;
    }
    if (bijective) out.push_back(std::move(h));
  }
  return out;
}

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<std::vector<int>> witness;
};

inline IsomorphismResult is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature())) throw std::invalid_argument("signature mismatch");
  if (a.carrier_size() != b.carrier_size()) return {false, std::nullopt};
  for (auto& h : homomorphisms(a, b)) {
    std::vector<bool> hit(static_cast<std::size_t>(b.carrier_size()), false);
    bool bijective = true;
    for (int y : h) {
      if (hit[static_cast<std::size_t>(y)]) {
        bijective = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = true;
    }
    if (bijective) return {true, std::move(h)};
  }
  return {false, std::nullopt};
}

// The subalgebra on a closed subset, reindexed to {0..k-1} in subset order.
struct InducedSubalgebra {
  FiniteAlgebra algebra;
  std::vector<int> elements;  // new index -> original element
};

inline InducedSubalgebra induced_subalgebra(const FiniteAlgebra& a, std::span<const int> subset) {
  std::vector<int> elements(subset.begin(), subset.end());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> to_new(static_cast<std::size_t>(a.carrier_size()), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= a.carrier_size()) throw std::invalid_argument("subset element out of range");
    to_new[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
  }
  const int k = static_cast<int>(elements.size());
  std::vector<std::vector<int>> tables;
  std::vector<int> tuple;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const int arity = a.signature().arity(s);
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(k);
    std::vector<int> table(size);
    tuple.assign(static_cast<std::size_t>(arity), 0);
    for (std::size_t flat = 0; flat < size; ++flat) {
      std::size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = elements[rest % static_cast<std::size_t>(k)];
        rest /= static_cast<std::size_t>(k);
      }
      const int image = a.apply(s, tuple);
      if (to_new[static_cast<std::size_t>(image)] == -1) {
        throw std::invalid_argument("subset is not closed under '" + a.signature().name(s) + "'");
      }
      table[flat] = to_new[static_cast<std::size_t>(image)];
    }
    tables.push_back(std::move(table));
  }
  return {FiniteAlgebra(k, a.signature(), std::move(tables)), std::move(elements)};
}

// ---------------------------------------------------------------------------
// Primality (no proper subalgebras, simple, rigid, arithmetical variety).

struct PrimalityReport {
  bool no_proper_subalgebras = false;
  std::optional<std::vector<int>> proper_subuniverse;

  bool simple = false;
  std::optional<PartitionRelation> congruence_witness;

  bool rigid = false;
  std::optional<std::vector<int>> automorphism_witness;

  bool malcev_ok = false;
  std::optional<std::array<int, 3>> malcev_witness;

  // congruence distributivity: a majority term or a lattice reduct
  bool majority_checked = false;
  bool majority_ok = false;
  std::optional<std::array<int, 3>> majority_witness;
  bool lattice_reduct = false;

  bool distributivity_granted() const { return lattice_reduct || (majority_checked && majority_ok); }
  bool arithmetical() const { return malcev_ok && distributivity_granted(); }
  bool primal() const { return no_proper_subalgebras && simple && rigid && arithmetical(); }
};

inline PrimalityReport check_primal(const FiniteAlgebra& a, const Term& malcev,
                                    const std::optional<Term>& majority, bool lattice_reduct) {
  if (malcev.max_var() > 2) throw std::invalid_argument("Mal'cev term must use at most v0,v1,v2");
  if (majority && majority->max_var() > 2) throw std::invalid_argument("majority term must use at most v0,v1,v2");

  PrimalityReport report;
  report.lattice_reduct = lattice_reduct;

  auto subs = enumerate_subalgebras(a);
  report.no_proper_subalgebras = subs.size() == 1 && static_cast<int>(subs[0].size()) == a.carrier_size();
  if (!report.no_proper_subalgebras) {
    for (auto& s : subs) {
      if (static_cast<int>(s.size()) != a.carrier_size()) {
        report.proper_subuniverse = s;
        break;
      }
    }
  }

  auto simplicity = is_simple(a);
  report.simple = simplicity.simple;
  report.congruence_witness = simplicity.witness;

  auto autos = automorphisms(a);
  report.rigid = autos.size() == 1;
  if (!report.rigid) {
    for (auto& f : autos) {
      bool ident = true;
      for (int x = 0; x < a.carrier_size(); ++x) ident = ident && f[static_cast<std::size_t>(x)] == x;
      if (!ident) {
        report.automorphism_witness = f;
        break;
      }
    }
  }

  report.malcev_ok = true;
  for (int x = 0; x < a.carrier_size() && report.malcev_ok; ++x) {
    for (int y = 0; y < a.carrier_size() && report.malcev_ok; ++y) {
      const int xyy[3] = {x, y, y};
      const int xxy[3] = {x, x, y};
      if (eval_term(a, malcev, xyy) != x) {
        report.malcev_ok = false;
        report.malcev_witness = {x, y, y};
      } else if (eval_term(a, malcev, xxy) != y) {
        report.malcev_ok = false;
        report.malcev_witness = {x, x, y};
      }
    }
  }

  if (majority) {
    report.majority_checked = true;
    report.majority_ok = true;
    for (int x = 0; x < a.carrier_size() && report.majority_ok; ++x) {
      for (int y = 0; y < a.carrier_size() && report.majority_ok; ++y) {
        const int xxy[3] = {x, x, y};
        const int xyx[3] = {x, y, x};
        const int yxx[3] = {y, x, x};
        if (eval_term(a, *majority, xxy) != x || eval_term(a, *majority, xyx) != x ||
            eval_term(a, *majority, yxx) != x) {
          report.majority_ok = false;
          report.majority_witness = {x, y, 0};
        }
      }
    }
  }
  return report;
}

}  // namespace crdsa
