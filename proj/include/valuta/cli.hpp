#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "valuta/valuta.hpp"

namespace valuta::cli {

namespace detail {

inline RandomKind parse_kind(std::string s) {
  for (auto& ch : s)
    if (ch == '-') ch = '_';
  if (s == "sparse_paving") return RandomKind::sparse_paving;
  if (s == "graphic") return RandomKind::graphic;
  if (s == "relaxation_chain") return RandomKind::relaxation_chain;
  throw UsageError("cli", "unknown random kind: " + s);
}

inline BasisKind parse_basis(const std::string& s) {
  if (s == "cuspidal") return BasisKind::cuspidal;
  if (s == "class-u" || s == "class_u") return BasisKind::class_u;
  if (s == "class-t" || s == "class_t") return BasisKind::class_t;
  throw UsageError("cli", "unknown basis: " + s);
}

inline RankFamily parse_family(const std::string& s) {
  if (s == "all") return RankFamily::all;
  if (s == "split") return RankFamily::split;
  if (s == "simple") return RankFamily::simple;
  if (s == "cuspidal") return RankFamily::cuspidal;
  if (s == "class-u" || s == "class_u") return RankFamily::class_u;
  if (s == "class-t" || s == "class_t") return RankFamily::class_t;
  if (s == "class-n" || s == "class_n") return RankFamily::class_n;
  throw UsageError("cli", "unknown family: " + s);
}

inline WhichInvariant parse_invariant(const std::string& s) {
  if (s == "tutte") return WhichInvariant::tutte;
  if (s == "ginv") return WhichInvariant::ginv;
  throw UsageError("cli", "unknown invariant: " + s);
}

inline nlohmann::json matroid_json(const Matroid& m) {
  nlohmann::json j;
  j["n"] = m.size();
  j["k"] = m.rank();
  nlohmann::json bases = nlohmann::json::array();
  for (Mask b : m.bases()) bases.push_back(elements_of(b));
  j["bases"] = bases;
  return j;
}

inline ExpectedOverrides load_overrides(const std::string& path) {
  ExpectedOverrides overrides;
  if (path.empty()) return overrides;
  std::ifstream in(path);
  if (!in) throw ParseError("io", "cannot open overrides file " + path);
  nlohmann::json j;
  in >> j;
  for (auto it = j.begin(); it != j.end(); ++it)
    overrides[it.key()] = it.value().get<std::string>();
  return overrides;
}

}  // namespace detail

/// Entry point shared by the valuta binary and the test suite.
/// Exit status: 0 success, 1 usage or input error, 2 verification failure.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"valuta: exact Tutte/G-invariant computations, matroid "
               "classification and basis decompositions"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker thread bound");

  std::string input, basis = "cuspidal", family_name = "all", invariant,
              kind_name, suite, overrides_path;
  int n = -1, k = -1;
  std::uint64_t seed = 1;
  bool json = false, csv = false, labeled = false, force_cap = false;

  auto* show = app.add_subcommand("show", "parse and reprint a matroid");
  show->add_option("input", input)->required();
  show->add_flag("--json", json);

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  tutte_cmd->add_option("input", input)->required();
  tutte_cmd->add_flag("--json", json);

  auto* ginv_cmd = app.add_subcommand("ginv", "G-invariant");
  ginv_cmd->add_option("input", input)->required();
  ginv_cmd->add_flag("--json", json);

  auto* classify_cmd =
      app.add_subcommand("classify", "class memberships with witnesses");
  classify_cmd->add_option("input", input)->required();

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "integer decomposition of the Tutte polynomial");
  decompose_cmd->add_option("input", input)->required();
  decompose_cmd->add_option("--basis", basis,
                            "cuspidal | class-u | class-t");
  decompose_cmd->add_flag("--json", json);

  auto* rank_cmd =
      app.add_subcommand("rank-table", "invariant rank of a family");
  rank_cmd->add_option("--family", family_name,
                       "all | split | class-n | class-u | class-t | simple | "
                       "cuspidal");
  rank_cmd->add_option("--n", n)->required();
  rank_cmd->add_option("--k", k)->required();
  rank_cmd->add_option("--invariant", invariant, "tutte | ginv");
  rank_cmd->add_flag("--csv", csv);
  rank_cmd->add_flag("--json", json);

  auto* enum_cmd =
      app.add_subcommand("enumerate", "all matroids of a stratum");
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--k", k)->required();
  enum_cmd->add_flag("--labeled", labeled, "keep all labeled matroids");
  enum_cmd->add_flag("--force-cap-override", force_cap,
                     "allow n=7 (still refuses infeasible strata)");
  enum_cmd->add_flag("--json", json);

  auto* random_cmd = app.add_subcommand("random", "seeded random matroid");
  random_cmd->add_option("--n", n)->required();
  random_cmd->add_option("--k", k)->required();
  random_cmd
      ->add_option("--kind", kind_name,
                   "sparse-paving | graphic | relaxation-chain")
      ->required();
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "paper-examples | enumeration | formulas | decomposition");
  verify_cmd->add_option("suite", suite)->required();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--expected-overrides", overrides_path,
                         "JSON file overriding expected values (test hook)");
  verify_cmd->add_flag("--json", json);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  try {
    if (show->parsed()) {
      const Matroid m = load_input(input);
      if (json)
        out << detail::matroid_json(m).dump(2) << "\n";
      else
        out << to_mtx(m);
      return 0;
    }
    if (tutte_cmd->parsed()) {
      const BivarPoly t = tutte(load_input(input));
      if (json)
        out << to_json(t).dump() << "\n";
      else
        out << to_string(t) << "\n";
      return 0;
    }
    if (ginv_cmd->parsed()) {
      const GInvariantVector g = g_invariant(load_input(input));
      if (json)
        out << to_json(g).dump() << "\n";
      else
        out << to_string(g);
      return 0;
    }
    if (classify_cmd->parsed()) {
      const Matroid m = load_input(input);
      out << to_json(classify(m), m).dump(2) << "\n";
      return 0;
    }
    if (decompose_cmd->parsed()) {
      const Matroid m = load_input(input);
      const Decomposition d = decompose(m, detail::parse_basis(basis));
      if (json)
        out << to_json(d).dump() << "\n";
      else
        out << to_string(d);
      return 0;
    }
    if (rank_cmd->parsed()) {
      const RankFamily fam = detail::parse_family(family_name);
      std::optional<WhichInvariant> which;
      if (!invariant.empty()) which = detail::parse_invariant(invariant);
      const RankTable table = rank_table(fam, {{n, k}}, which);
      if (json) {
        out << to_json(table).dump() << "\n";
      } else if (csv) {
        out << to_csv(table);
      } else if (which) {
        const auto& row = table.rows.front();
        out << (*which == WhichInvariant::tutte ? *row.t_rank : *row.g_rank)
            << "\n";
      } else {
        out << to_aligned_text(table);
      }
      return 0;
    }
    if (enum_cmd->parsed()) {
      const auto list = enumerate_matroids(n, k, !labeled, force_cap);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : list) arr.push_back(detail::matroid_json(m));
        out << arr.dump() << "\n";
      } else {
        out << "# count=" << list.size() << "\n";
        for (const auto& m : list) out << to_mtx(m) << "\n";
      }
      return 0;
    }
    if (random_cmd->parsed()) {
      const Matroid m =
          random_matroid(n, k, detail::parse_kind(kind_name), seed);
      if (json)
        out << detail::matroid_json(m).dump(2) << "\n";
      else
        out << to_mtx(m);
      return 0;
    }
    if (verify_cmd->parsed()) {
      const auto overrides = detail::load_overrides(overrides_path);
      const auto checks = run_suite(suite, overrides, threads, seed);
      int failed = 0;
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
          if (!c.pass) ++failed;
          arr.push_back({{"criterion", c.criterion},
                         {"name", c.name},
                         {"pass", c.pass},
                         {"expected", c.expected},
                         {"actual", c.actual}});
        }
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& c : checks) {
          if (c.pass) {
            out << "PASS " << c.name << "\n";
          } else {
            ++failed;
            out << "FAIL " << c.name << ": expected " << c.expected
                << ", actual " << c.actual << "\n";
          }
        }
        out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
      }
      return failed == 0 ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace valuta::cli
