#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hibi/hibi.hpp"
#include "hibi/poset.hpp"
#include "hibi/sagbi.hpp"
#include "hibi/schubert.hpp"

namespace hibi {

/// {"elements": ["a", ...], "covers": [["a", "b"], ...]}
Poset parse_poset_json(std::string_view text);

/// First line n, then one "i j" line per cover i < j (0-based). Blank lines
/// and lines starting with '#' are ignored.
Poset parse_poset_text(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON).
Poset parse_poset(std::string_view text);
Poset read_poset_file(const std::string& path);

nlohmann::json poset_to_json(const Poset& p);

/// Exact integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json bigint_to_json(const BigInt& v);

nlohmann::json to_json(const HibiReport& r);
nlohmann::json to_json(const SchubertReport& r);
nlohmann::json to_json(const SagbiSummary& s);

}  // namespace hibi
