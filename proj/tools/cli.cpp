// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <filesystem>
#include <future>
#include <iostream>

#include "report.hpp"

#ifndef CYCLOHECKE_DEFAULT_DATA_DIR
#define CYCLOHECKE_DEFAULT_DATA_DIR "data"
#endif

namespace ct = cyclohecke::tools;
using cyclohecke::Dataset;
using cyclohecke::Json;
using cyclohecke::Specialization;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Settings {
  std::string data_dir = CYCLOHECKE_DEFAULT_DATA_DIR;
  std::string group;
  std::vector<std::string> q;
  std::string format = "text";
  std::string p = "lcm";
  int words_maxlen = 12;
  bool parallel = false;
  bool timings = false;
  bool no_lambda = false;
};

ct::RunOptions run_options(const Settings& s) {
  ct::RunOptions o;
  o.words_maxlen = s.words_maxlen;
  o.use_lambda = !s.no_lambda;
  o.p = s.p == "poincare" ? ct::PChoice::poincare : ct::PChoice::lcm;
  return o;
}

std::vector<std::string> split_q(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    size_t start = 0;
    while (start <= r.size()) {
      size_t comma = r.find(',', start);
      std::string part = r.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

// Runs every requested specialization, in parallel when asked; results keep
// the request order.
std::vector<ct::RunReport> run_all(const Dataset& ds, const std::vector<Specialization>& specs,
                                   const ct::RunOptions& opts, bool parallel) {
  std::vector<ct::RunReport> out;
  if (!parallel) {
    for (const auto& s : specs) out.push_back(ct::run_specialization(ds, s, opts));
    return out;
  }
  std::vector<std::future<ct::RunReport>> jobs;
  for (const auto& s : specs)
    jobs.push_back(std::async(std::launch::async, [&ds, s, &opts] { return ct::run_specialization(ds, s, opts); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int cmd_validate(const Settings& s) {
  auto files = ct::dataset_files(s.data_dir);
  if (files.empty()) {
    std::cerr << "no datasets in " << s.data_dir << "\n";
    return kUsage;
  }
  bool ok = true;
  Json all = Json::array();
  for (const auto& f : files) {
    Dataset ds = cyclohecke::load_dataset(f);
    auto rep = cyclohecke::validate_dataset(ds);
    ok = ok && rep.passed();
    if (s.format == "json") {
      all.push_back(ct::validation_to_json(ds, rep));
    } else {
      std::cout << ds.group.name << " (" << f << "): " << (rep.passed() ? "ok" : "FAILED") << ", "
                << rep.entries.size() << " checks\n";
      for (const auto& e : rep.failures())
        std::cout << "  check (" << e.check << ") failed on " << e.subject << ": " << e.detail << "\n";
    }
  }
  if (s.format == "json") std::cout << all.dump(2) << "\n";
  return ok ? kOk : kFailure;
}

int cmd_orders(const Settings& s) {
  Dataset ds = ct::load_group(s.data_dir, s.group);
  auto orders = cyclohecke::critical_orders(ds);
  if (s.format == "json") {
    Json j;
    j["group"] = ds.group.name;
    j["critical_orders"] = orders;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << ds.group.name << " critical orders of q:";
    for (long m : orders) std::cout << " " << m;
    std::cout << "\n";
  }
  return kOk;
}

enum class View { full, blocks, basic_sets, conjectures };

int cmd_run(const Settings& s, View view) {
  Dataset ds = ct::load_group(s.data_dir, s.group);
  auto qs = split_q(s.q);
  if (qs.empty()) throw ct::UsageError("--q is required");
  std::vector<Specialization> specs;
  for (const auto& q : qs) {
    try {
      specs.push_back(Specialization::from_q(cyclohecke::parse_q_spec(q), ds.group.mu_order));
    } catch (const std::invalid_argument& e) {
      throw ct::UsageError(e.what());
    }
  }
  auto reports = run_all(ds, specs, run_options(s), s.parallel);
  int status = kOk;
  Json all = Json::array();
  for (const auto& r : reports) {
    if (!r.dm.determined) status = kFailure;
    if (view == View::conjectures && r.conjectures && !(r.conjectures->conj1_pass && r.conjectures->conj2_pass))
      status = kFailure;
    if (s.format == "json") {
      Json j;
      switch (view) {
        case View::full:
          j = ct::report_to_json(ds, r);
          break;
        case View::blocks:
          j = {{"group", ds.group.name}, {"q", r.spec.xi.to_string()}, {"blocks", ct::blocks_to_json(ds, r)}};
          break;
        case View::basic_sets:
          j = {{"group", ds.group.name}, {"q", r.spec.xi.to_string()}, {"basic_sets", ct::basic_sets_to_json(ds, r)}};
          break;
        case View::conjectures:
          j = {{"group", ds.group.name}, {"q", r.spec.xi.to_string()}, {"conjectures", ct::conjectures_to_json(ds, r)}};
          break;
      }
      if (s.timings && r.seconds) j["timings"] = {{"seconds", *r.seconds}};
      all.push_back(j);
    } else {
      switch (view) {
        case View::full:
          std::cout << ct::report_to_text(ds, r);
          break;
        case View::blocks:
          std::cout << ds.group.name << " at " << r.spec.to_string() << "\n" << ct::blocks_to_text(ds, r);
          break;
        case View::basic_sets:
          std::cout << ds.group.name << " at " << r.spec.to_string() << "\n" << ct::basic_sets_to_text(ds, r);
          break;
        case View::conjectures:
          std::cout << ds.group.name << " at " << r.spec.to_string() << "\n" << ct::conjectures_to_text(ds, r);
          break;
      }
      if (s.timings && r.seconds) std::cout << "  time: " << *r.seconds << " s\n";
    }
  }
  if (s.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return status;
}

int cmd_golden(const Settings& s) {
  namespace fs = std::filesystem;
  fs::path gdir = fs::path(s.data_dir) / "golden";
  std::vector<std::string> files;
  std::error_code ec;
  if (fs::is_directory(gdir, ec))
    for (const auto& e : fs::directory_iterator(gdir))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no golden files in " << gdir.string() << "\n";
    return kUsage;
  }
  bool ok = true;
  Json all = Json::array();
  for (const auto& f : files) {
    auto records = ct::load_golden(f);
    std::map<std::string, Dataset> cache;
    std::vector<Specialization> specs;
    for (const auto& g : records) {
      if (!cache.count(g.group)) cache.emplace(g.group, ct::load_group(s.data_dir, g.group));
    }
    // One job per record; results compared in file order.
    std::vector<std::future<ct::RunReport>> jobs;
    std::vector<ct::RunReport> reports;
    const auto opts = run_options(s);
    for (const auto& g : records) {
      const Dataset& ds = cache.at(g.group);
      auto spec = Specialization::from_q(cyclohecke::parse_q_spec(ct::golden_q_spec(g)), ds.group.mu_order);
      if (s.parallel)
        jobs.push_back(std::async(std::launch::async, [&ds, spec, &opts] { return ct::run_specialization(ds, spec, opts); }));
      else
        reports.push_back(ct::run_specialization(ds, spec, opts));
    }
    for (auto& j : jobs) reports.push_back(j.get());
    for (size_t k = 0; k < records.size(); ++k) {
      const auto& g = records[k];
      auto outcome = ct::compare_golden(cache.at(g.group), reports[k], g);
      ok = ok && outcome.pass;
      if (s.format == "json") {
        all.push_back({{"group", g.group}, {"q_order", g.q_order}, {"pass", outcome.pass}, {"mismatches", outcome.mismatches}});
      } else {
        std::cout << (outcome.pass ? "match    " : "MISMATCH ") << g.group << " q=" << ct::golden_q_spec(g) << "\n";
        for (const auto& m : outcome.mismatches) std::cout << "  " << m << "\n";
      }
    }
  }
  if (s.format == "json") std::cout << all.dump(2) << "\n";
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition matrices, blocks and basic sets of cyclotomic Hecke algebras at roots of unity"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--data-dir", s.data_dir, "Directory holding <group>.json datasets and golden/")
      ->capture_default_str();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--words-maxlen", s.words_maxlen, "Cap on the word length used for character vectors")
      ->check(CLI::Range(0, 20))
      ->capture_default_str();
  app.add_flag("--parallel", s.parallel, "Compute independent specializations concurrently");
  app.add_flag("--timings", s.timings, "Include wall-clock times (output is then not reproducible)");
  app.add_option("--P", s.p, "Common multiple P of the Schur elements: lcm or poincare")
      ->check(CLI::IsMember({"lcm", "poincare"}))
      ->capture_default_str();
  app.add_flag("--no-lambda", s.no_lambda, "Skip the central-element block condition in the search");

  const std::string q_help =
      "Value of q: zetaN, zetaN^k, E(N), E(N)^k, 1, -1 or i; comma-separated or repeated for several";
  auto* validate = app.add_subcommand("validate", "Check every dataset in the data directory");
  auto* orders = app.add_subcommand("orders", "Orders of the roots of unity where the algebra is not semisimple");
  orders->add_option("--group", s.group, "Group name, e.g. G12")->required();
  std::map<CLI::App*, View> views;
  for (auto [name, view, help] : {std::tuple{"decompose", View::full, "Full report: decomposition matrix and audits"},
                                  std::tuple{"blocks", View::blocks, "Block partition with shape tags"},
                                  std::tuple{"basic-sets", View::basic_sets, "a-values, canonical and optimal basic sets"},
                                  std::tuple{"conjectures", View::conjectures, "Vanishing-order and Broue-invariant audits"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", s.group, "Group name, e.g. G12")->required();
    sub->add_option("--q", s.q, q_help)->required();
    views[sub] = view;
  }
  auto* golden = app.add_subcommand("golden", "Compare computed blocks against data-dir/golden/*.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    if (validate->parsed()) return cmd_validate(s);
    if (orders->parsed()) return cmd_orders(s);
    if (golden->parsed()) return cmd_golden(s);
    for (auto& [sub, view] : views)
      if (sub->parsed()) return cmd_run(s, view);
  } catch (const ct::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cyclohecke::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cyclohecke::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cyclohecke::LabelMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
