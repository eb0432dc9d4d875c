#pragma once

// Named verification suites over finite catalogs, the named morphism classes
// and factorizations used by the command line, and run manifests.
//
// A suite report is a function of its parameters alone: instances are
// checked in parallel, but results are assembled in catalog order and no
// timing or host data enters the report.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poswfs/json_io.hpp"
#include "poswfs/lifting.hpp"
#include "poswfs/limits.hpp"

namespace poswfs {

/// emb, cd, es, split-mono, unitary, surj, top. Throws StructuralError for
/// other names.
ClassPredicate named_class(std::string_view name, const Limits& limits = {});
std::vector<std::string> class_names();

/// cd-es, surj-emb, emb-top.
Factorizer named_factorizer(std::string_view name);
std::vector<std::string> factorizer_names();

struct SuiteParams {
  /// Overrides the suite's pomonoid where the suite has a single one.
  std::optional<std::string> pomonoid;
  /// Overrides the suite's catalog size bound.
  std::optional<std::size_t> max_size;
  Limits limits;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

struct RunManifest {
  std::string command;
  /// Catalog label -> FNV-1a 64 digest of its canonical JSON.
  std::map<std::string, std::string> input_digests;
  Limits budgets;
  bool deterministic = true;
  /// Some search ran out of budget; the verdict then covers only what was
  /// checked.
  bool budget_exhausted = false;
  std::string verdict;
  Json summary;
};

struct SuiteRun {
  RunManifest manifest;
  Json report;

  bool pass() const { return manifest.verdict == "PASS"; }
};

const std::vector<std::string>& suite_ids();
/// Throws StructuralError for an unknown id.
SuiteRun run_suite(std::string_view id, const SuiteParams& params = {});

Json to_json(const RunManifest& m);
/// "fnv1a64:" followed by 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace poswfs
