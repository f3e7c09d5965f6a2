#include "hibi/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hibi/errors.hpp"

namespace hibi {

using nlohmann::json;

Poset parse_poset_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid poset JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw InputError("poset JSON needs an \"elements\" array");
  }
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw InputError("poset element names must be strings");
    auto name = e.get<std::string>();
    if (!index.emplace(name, labels.size()).second) {
      throw InputError("duplicate element name \"" + name + "\"");
    }
    labels.push_back(std::move(name));
  }
  std::vector<Cover> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw InputError("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw InputError("each cover must be a pair of element names");
      }
      auto lo = index.find(c[0].get<std::string>());
      auto hi = index.find(c[1].get<std::string>());
      if (lo == index.end() || hi == index.end()) {
        throw InputError("cover refers to an unknown element: " + c.dump());
      }
      covers.emplace_back(lo->second, hi->second);
    }
  }
  const std::size_t n = labels.size();
  return Poset::from_covers(n, covers, std::move(labels));
}

Poset parse_poset_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Cover> covers;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!n) {
      long long v = -1;
      if (!(ls >> v) || v < 0) {
        throw InputError("line " + std::to_string(lineno) + ": expected element count");
      }
      n = static_cast<std::size_t>(v);
      continue;
    }
    long long a = -1, b = -1;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0) {
      throw InputError("line " + std::to_string(lineno) + ": expected \"i j\"");
    }
    covers.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  if (!n) throw InputError("empty poset text");
  return Poset::from_covers(*n, covers);
}

Poset parse_poset(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_poset_json(text);
  return parse_poset_text(text);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open poset file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  return json{{"elements", p.labels()}, {"covers", covers}};
}

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

namespace {

json bigints(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(bigint_to_json(x));
  return out;
}

}  // namespace

json to_json(const HibiReport& r) {
  json covers = json::array();
  for (auto [a, b] : r.covers) covers.push_back({r.labels[a], r.labels[b]});
  return json{
      {"poset", {{"size", r.size}, {"elements", r.labels}, {"covers", covers}}},
      {"rank_phat", r.rank_phat},
      {"dim", r.dim},
      {"hilbert_prefix", bigints(r.hilbert_prefix)},
      {"h_vector", bigints(r.h_vector)},
      {"generator_degrees", r.generator_degrees},
      {"type", r.type},
      {"is_level", r.is_level},
      {"filter_purity", r.filter_purity},
      {"ideal_purity", r.ideal_purity},
      {"generator_cap_used", r.generator_cap_used},
      {"stabilized", r.stabilized},
  };
}

json to_json(const SchubertReport& r) {
  json coords = json::array();
  for (auto [i, j] : r.embedding.coords) coords.push_back({i, j});
  return json{
      {"m", r.spec.m},
      {"n", r.spec.n},
      {"gamma", r.spec.gamma.entries()},
      {"a", r.spec.a_vector().entries()},
      {"lattice_size", r.lattice_size},
      {"nn_embedding", {{"found", r.embedding.found}, {"coords", coords}}},
      {"hibi", to_json(r.hibi)},
  };
}

json to_json(const SagbiSummary& s) {
  json scans = json::array();
  for (const auto& sc : s.scans) {
    scans.push_back({{"degree", sc.degree},
                     {"standard_monomials", sc.standard_monomials},
                     {"distinct_leading_monomials", sc.distinct_leading_monomials},
                     {"hilbert", bigint_to_json(sc.hilbert)}});
  }
  return json{
      {"m", s.spec.m},
      {"n", s.spec.n},
      {"gamma", s.spec.gamma.entries()},
      {"tuples", s.tuples},
      {"diagonal_ok", s.diagonal_ok},
      {"zero_minors_outside", s.zero_minors_outside},
      {"pairs", s.pairs},
      {"multiplicative_pairs", s.multiplicative_pairs},
      {"incomparable_pairs", s.incomparable_pairs},
      {"straightening_ok", s.straightening_ok},
      {"scans", scans},
      {"all_passed", s.all_passed},
  };
}

}  // namespace hibi
