#include "hibi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hibi/errors.hpp"
#include "hibi/hibi.hpp"
#include "hibi/io.hpp"
#include "hibi/sagbi.hpp"
#include "hibi/schubert.hpp"

namespace hibi::cli {

namespace {

using nlohmann::json;

template <class Range>
std::string join(const Range& r, const char* sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : r) {
    os << (first ? "" : sep) << x;
    first = false;
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string covers_text(const Poset& p) {
  std::vector<std::string> parts;
  for (auto [a, b] : p.covers()) parts.push_back(p.label(a) + "<" + p.label(b));
  return parts.empty() ? "(none)" : join(parts, ", ");
}

void print_report(std::ostream& os, const HibiReport& r) {
  os << "rank(P-hat): " << r.rank_phat << "\n"
     << "dim: " << r.dim << "\n"
     << "Hilbert prefix: " << join(r.hilbert_prefix) << "\n"
     << "h-vector: " << join(r.h_vector) << "\n"
     << "canonical generator degrees: " << join(r.generator_degrees) << "\n"
     << "type: " << r.type << "\n"
     << "level: " << yes_no(r.is_level) << "\n"
     << "filter purity: " << yes_no(r.filter_purity) << "\n"
     << "ideal purity: " << yes_no(r.ideal_purity) << "\n"
     << "generator scan cap: " << r.generator_cap_used
     << (r.stabilized ? " (stabilized)" : " (NOT stabilized)") << "\n";
}

struct Common {
  bool json = false;
  std::string out_file;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit JSON");
  sub->add_option("--out", c.out_file, "Write the report to FILE instead of stdout");
}

SchubertSpec make_spec(std::size_t m, std::size_t n, const std::vector<int>& gamma,
                       const std::vector<int>& a) {
  if (!gamma.empty() && !a.empty()) throw InputError("give either --gamma or --a, not both");
  if (gamma.empty() && a.empty()) throw InputError("one of --gamma or --a is required");
  return gamma.empty() ? SchubertSpec::from_a(m, n, a) : SchubertSpec::from_gamma(m, n, gamma);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levelness of Hibi rings and Schubert cycles"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  std::string poset_file;
  std::optional<std::size_t> cap;
  std::size_t m = 0, n = 0, max_n = 0, max_deg = 3, trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t extra_degrees = 3;
  std::vector<int> gamma, avec;
  bool all_gamma = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants of the Hibi ring of a poset");
  analyze_cmd->add_option("--poset", poset_file, "Poset file (JSON or text)")->required();
  analyze_cmd->add_option("--cap", cap, "Largest canonical-generator degree to scan");
  add_common(analyze_cmd, common);

  auto* schubert_cmd = app.add_subcommand("schubert", "Levelness pipeline for one Schubert cycle");
  schubert_cmd->add_option("--m", m, "Rows")->required();
  schubert_cmd->add_option("--n", n, "Columns")->required();
  schubert_cmd->add_option("--gamma", gamma, "b-vector, e.g. 1,3")->delimiter(',');
  schubert_cmd->add_option("--a", avec, "a-vector, e.g. 3,5")->delimiter(',');
  schubert_cmd->add_option("--cap", cap, "Largest canonical-generator degree to scan");
  add_common(schubert_cmd, common);

  auto* sweep_cmd = app.add_subcommand("sweep", "Levelness pipeline over every gamma");
  sweep_cmd->add_option("--m", m, "Rows")->required();
  sweep_cmd->add_option("--n", n, "Columns")->required();
  sweep_cmd->add_flag("--all-gamma", all_gamma, "Scan every gamma")->required();
  add_common(sweep_cmd, common);

  auto* search_cmd = app.add_subcommand("search-nonlevel", "Find posets with non-level Hibi rings");
  search_cmd->add_option("--max-n", max_n, "Largest poset size")->required();
  add_common(search_cmd, common);

  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Check the minimal strict map nu0");
  lemma_cmd->add_option("--poset", poset_file, "Poset file (JSON or text)")->required();
  lemma_cmd->add_option("--trials", trials, "Random strict maps to check");
  lemma_cmd->add_option("--seed", seed, "Random seed");
  lemma_cmd->add_option("--extra-degrees", extra_degrees,
                        "Exhaustive sweep up to rank(P-hat) + this degree");
  add_common(lemma_cmd, common);

  auto* sagbi_cmd = app.add_subcommand("sagbi-check", "Leading-term checks for Plucker minors");
  sagbi_cmd->add_option("--m", m, "Rows")->required();
  sagbi_cmd->add_option("--n", n, "Columns")->required();
  sagbi_cmd->add_option("--gamma", gamma, "b-vector, e.g. 1,3")->delimiter(',');
  sagbi_cmd->add_option("--a", avec, "a-vector, e.g. 3,5")->delimiter(',');
  sagbi_cmd->add_option("--max-deg", max_deg, "Largest standard-monomial degree");
  add_common(sagbi_cmd, common);

  auto* scan_cmd = app.add_subcommand("theorem-scan", "Check both purity criteria on all small posets");
  scan_cmd->add_option("--max-n", max_n, "Largest poset size")->required();
  add_common(scan_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR: " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!common.out_file.empty()) {
    file.open(common.out_file);
    if (!file) {
      err << "ERROR: cannot open " << common.out_file << " for writing\n";
      return kUsage;
    }
    os = &file;
  }

  AnalyzeOptions options;
  options.generator_cap = cap;

  try {
    if (*analyze_cmd) {
      const Poset p = read_poset_file(poset_file);
      const HibiReport r = analyze(p, options);
      if (common.json) {
        *os << to_json(r).dump(2) << "\n";
      } else {
        *os << "poset: " << p.size() << " elements; covers " << covers_text(p) << "\n";
        print_report(*os, r);
      }
      return kOk;
    }

    if (*schubert_cmd) {
      const SchubertReport r = check_level(make_spec(m, n, gamma, avec), options);
      if (common.json) {
        *os << to_json(r).dump(2) << "\n";
      } else {
        *os << "m=" << r.spec.m << " n=" << r.spec.n << " gamma=" << r.spec.gamma.to_string()
            << " a=" << r.spec.a_vector().to_string() << "\n"
            << "lattice size: " << r.lattice_size << "\n"
            << "join-irreducibles: " << r.join_irreducibles.size() << "; covers "
            << covers_text(r.join_irreducibles) << "\n";
        std::vector<std::string> cells;
        for (std::size_t x = 0; x < r.embedding.coords.size(); ++x) {
          auto [i, j] = r.embedding.coords[x];
          cells.push_back(r.join_irreducibles.label(x) + "->(" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
        }
        *os << "N x N embedding (order-reversing): " << (cells.empty() ? "(empty)" : join(cells, " "))
            << "\n";
        print_report(*os, r.hibi);
      }
      return kOk;
    }

    if (*sweep_cmd) {
      json rows = json::array();
      if (!common.json) *os << "gamma\ta\t|Gamma|\t|P|\tfilter\tideal\th-vector\ttype\tlevel\n";
      for (const auto& spec : all_specs(m, n)) {
        const SchubertReport r = check_level(spec, options);
        if (common.json) {
          rows.push_back(to_json(r));
        } else {
          *os << spec.gamma.to_string() << "\t" << spec.a_vector().to_string() << "\t"
              << r.lattice_size << "\t" << r.join_irreducibles.size() << "\t"
              << yes_no(r.hibi.filter_purity) << "\t" << yes_no(r.hibi.ideal_purity) << "\t"
              << join(r.hibi.h_vector, ",") << "\t" << r.hibi.type << "\t"
              << yes_no(r.hibi.is_level) << "\n";
        }
      }
      if (common.json) *os << rows.dump(2) << "\n";
      return kOk;
    }

    if (*search_cmd) {
      const auto found = search_nonlevel(max_n, options);
      if (common.json) {
        json rows = json::array();
        for (const auto& f : found) rows.push_back(to_json(f.report));
        *os << rows.dump(2) << "\n";
      } else {
        *os << "non-level posets with at most " << max_n << " elements: " << found.size() << "\n";
        for (const auto& f : found) {
          *os << "  n=" << f.poset.size() << " covers " << covers_text(f.poset)
              << " | generator degrees " << join(f.report.generator_degrees) << " | h "
              << join(f.report.h_vector) << " | filter purity "
              << yes_no(f.report.filter_purity) << ", ideal purity "
              << yes_no(f.report.ideal_purity) << "\n";
        }
      }
      return kOk;
    }

    if (*lemma_cmd) {
      const Poset p = read_poset_file(poset_file);
      if (!filter_purity(p)) {
        throw InputError("verify-lemma needs a poset whose principal filters are all pure");
      }
      const LemmaSummary ex = verify_lemma_exhaustive(p, extra_degrees);
      const LemmaSummary rnd = verify_lemma_random(p, trials, seed);
      if (common.json) {
        *os << json{{"exhaustive",
                     {{"maps", ex.maps_checked},
                      {"failures", ex.failures},
                      {"max_degree", ex.max_degree}}},
                    {"random",
                     {{"maps", rnd.maps_checked},
                      {"failures", rnd.failures},
                      {"max_degree", rnd.max_degree},
                      {"seed", seed}}}}
                   .dump(2)
            << "\n";
      } else {
        *os << "exhaustive: " << ex.maps_checked << " strict maps up to degree " << ex.max_degree
            << ", " << ex.failures << " failures\n"
            << "random: " << rnd.maps_checked << " strict maps (seed " << seed << "), "
            << rnd.failures << " failures\n";
      }
      return ex.failures + rnd.failures == 0 ? kOk : kAssertion;
    }

    if (*sagbi_cmd) {
      const SagbiSummary s = verify_sagbi(make_spec(m, n, gamma, avec), max_deg);
      if (common.json) {
        *os << to_json(s).dump(2) << "\n";
      } else {
        *os << "m=" << s.spec.m << " n=" << s.spec.n << " gamma=" << s.spec.gamma.to_string()
            << "\n"
            << "diagonal leading terms: " << s.diagonal_ok << "/" << s.tuples << "\n"
            << "vanishing minors outside Gamma: " << s.zero_minors_outside << "\n"
            << "lm multiplicativity: " << s.multiplicative_pairs << "/" << s.pairs << "\n"
            << "straightening cancels top term: " << s.straightening_ok << "/"
            << s.incomparable_pairs << "\n";
        for (const auto& sc : s.scans) {
          *os << "degree " << sc.degree << ": " << sc.standard_monomials
              << " standard monomials, " << sc.distinct_leading_monomials
              << " distinct leading monomials, H = " << sc.hilbert << "\n";
        }
        *os << (s.all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
      }
      return s.all_passed ? kOk : kAssertion;
    }

    if (*scan_cmd) {
      const TheoremScanSummary s = theorem_scan(max_n, options);
      const std::size_t bad = s.filter_counterexamples + s.ideal_counterexamples;
      if (common.json) {
        *os << json{{"posets", s.posets},
                    {"posets_by_size", s.posets_by_size},
                    {"filter_pure", s.filter_pure},
                    {"ideal_pure", s.ideal_pure},
                    {"level", s.level},
                    {"filter_counterexamples", s.filter_counterexamples},
                    {"ideal_counterexamples", s.ideal_counterexamples}}
                   .dump(2)
            << "\n";
      } else {
        *os << "posets scanned: " << s.posets << " (by size: " << join(s.posets_by_size, ", ")
            << ")\n"
            << "pure filters: " << s.filter_pure << ", pure ideals: " << s.ideal_pure
            << ", level: " << s.level << "\n"
            << bad << " counterexamples\n";
      }
      return bad == 0 ? kOk : kAssertion;
    }
  } catch (const InputError& e) {
    err << "ERROR: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "ERROR: resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const MathAssertion& e) {
    err << "ERROR: assertion failed: " << e.what() << "\n";
    return kAssertion;
  } catch (const InternalError& e) {
    err << "ERROR: internal: " << e.what() << "\n";
    return kAssertion;
  }
  return kUsage;
}

}  // namespace hibi::cli
