#pragma once

// JSON forms for the wire types: partitions, vectors, algebras, bitopological
// spaces, point maps and subalgebra reports. Canonical output is
// nlohmann::json's compact dump with lexicographically ordered keys, so
// parse/print round-trips are byte-identical on canonical input.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "crdsa/bitop.hpp"
#include "crdsa/finalg.hpp"
#include "crdsa/structure.hpp"
#include "crdsa/ternary.hpp"

namespace crdsa {

using json = nlohmann::json;

// ---- ternary ---------------------------------------------------------------

inline json partition_to_json(const TernaryPartition& p) {
  return json{{"nodes", p.nodes().labels()}, {"good", p.good()}, {"bad", p.bad()}};
}

inline TernaryPartition partition_from_json(const json& j) {
  auto nodes = std::make_shared<NodeSet>(j.at("nodes").get<std::vector<std::string>>());
  auto good  = j.at("good").get<std::vector<std::string>>();
  auto bad   = j.at("bad").get<std::vector<std::string>>();
  return make_partition(std::move(nodes), good, bad);
}

inline json vector_to_json(const TernaryVector& v) {
  return json{{"n", v.size()}, {"word", v.word()}};
}

inline TernaryVector vector_from_json(const json& j) {
  auto v = TernaryVector::from_word(j.at("word").get<std::string>());
  if (j.at("n").get<std::size_t>() != v.size()) {
    throw std::invalid_argument("vector length does not match its word");
  }
  return v;
}

// ---- finite algebras -------------------------------------------------------

// Tables nest one array level per argument: constants are plain integers,
// unary tables flat arrays, binary tables arrays of rows.
inline json algebra_to_json(const FiniteAlgebra& a) {
  json signature = json::array();
  json tables    = json::object();
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const int arity = a.signature().arity(s);
    signature.push_back(json::array({a.signature().name(s), arity}));
    const auto& flat = a.table(s);
    if (arity == 0) {
      tables[a.signature().name(s)] = flat[0];
    } else {
      std::function<json(std::size_t, std::size_t, int)> nest = [&](std::size_t offset, std::size_t span,
                                                                    int depth) -> json {
        if (depth == 0) return flat[offset];
        json arr = json::array();
        const std::size_t step = span / static_cast<std::size_t>(a.carrier_size());
        for (int i = 0; i < a.carrier_size(); ++i) {
          arr.push_back(nest(offset + static_cast<std::size_t>(i) * step, step, depth - 1));
        }
        return arr;
      };
      tables[a.signature().name(s)] = nest(0, flat.size(), arity);
    }
  }
  return json{{"carrier", a.carrier_size()}, {"signature", signature}, {"tables", tables}};
}

inline FiniteAlgebra algebra_from_json(const json& j) {
  const int m = j.at("carrier").get<int>();
  std::vector<std::pair<std::string, int>> symbols;
  for (const auto& entry : j.at("signature")) {
    symbols.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<int>());
  }
  Signature sig(symbols);
  std::vector<std::vector<int>> tables;
  for (const auto& [name, arity] : symbols) {
    const json& t = j.at("tables").at(name);
    std::vector<int> flat;
    std::function<void(const json&, int)> flatten = [&](const json& node, int depth) {
      if (depth == 0) {
        flat.push_back(node.get<int>());
        return;
      }
      if (!node.is_array() || node.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("table for '" + name + "' has the wrong shape");
      }
      for (const auto& child : node) flatten(child, depth - 1);
    };
    flatten(t, arity);
    tables.push_back(std::move(flat));
  }
  return FiniteAlgebra(m, std::move(sig), std::move(tables));
}

// ---- bitopological spaces --------------------------------------------------

namespace detail {

inline json set_family_to_json(const std::vector<std::uint64_t>& family, int ground) {
  json arr = json::array();
  for (std::uint64_t u : family) {
    json pts = json::array();
    for (int p = 0; p < ground; ++p) {
      if ((u >> p) & 1) pts.push_back(p);
    }
    arr.push_back(std::move(pts));
  }
  return arr;
}

inline std::vector<std::uint64_t> set_family_from_json(const json& arr, int ground) {
  std::vector<std::uint64_t> out;
  for (const auto& pts : arr) {
    std::uint64_t u = 0;
    for (const auto& p : pts) {
      const int idx = p.get<int>();
      if (idx < 0 || idx >= ground) throw std::invalid_argument("point index out of range");
      u |= 1ull << idx;
    }
    out.push_back(u);
  }
  return out;
}

}  // namespace detail

// Set families are emitted sorted by bitset value.
inline json space_to_json(const BitopSpace& s) {
  return json{{"points", s.ground},
              {"t1_base", detail::set_family_to_json(s.base1, s.ground)},
              {"t2_base", detail::set_family_to_json(s.base2, s.ground)}};
}

inline BitopSpace space_from_json(const json& j) {
  const int ground = j.at("points").get<int>();
  return BitopSpace::from_bases(ground, detail::set_family_from_json(j.at("t1_base"), ground),
                                detail::set_family_from_json(j.at("t2_base"), ground));
}

inline json point_map_to_json(const std::vector<int>& f) { return json{{"map", f}}; }

inline std::vector<int> point_map_from_json(const json& j) {
  return j.at("map").get<std::vector<int>>();
}

// ---- subalgebra reports ----------------------------------------------------

inline json subalgebra_report_to_json(std::size_t n, const std::vector<SubalgebraInfo>& subs) {
  json arr = json::array();
  for (const auto& s : subs) {
    arr.push_back(json{{"elements", s.words}, {"iso_class", "C3^" + std::to_string(s.iso_power)}});
  }
  return json{{"n", n}, {"count", subs.size()}, {"subalgebras", arr}};
}

// ---- validation reports ----------------------------------------------------

inline json validation_to_json(const CrdsaValidation& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back(json{{"axiom", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return json{{"pass", v.pass}, {"checks", checks}};
}

inline std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace crdsa
