#pragma once

// Workbench documents (JSON), job execution and report streams.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace ctw::wb {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string id;
  std::string command;
  std::optional<json> expect;  // compared with result.value when present
};

/// A parsed document with every entity resolved and validated at load time.
class Document {
 public:
  static Document parse(const std::string& text);
  static Document load(const std::string& path);

  std::uint32_t p() const { return p_; }
  const std::vector<JobSpec>& jobs() const { return jobs_; }

  AlgebraPtr algebra(const std::string& name) const;
  Module module(const std::string& name) const;
  std::shared_ptr<const RingMap> ring_map(const std::string& name) const;
  DeltaPtr cdg(const std::string& name) const;
  ModuleMorphism morphism(const std::string& name) const;
  const CotorsionOracle& oracle(const std::string& name) const;

  /// Names per section, sorted.
  std::map<std::string, std::vector<std::string>> inventory() const;

 private:
  struct Builder;
  std::uint32_t p_ = 2;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, Module> modules_;
  std::map<std::string, std::shared_ptr<const RingMap>> ring_maps_;
  std::map<std::string, DeltaPtr> cdgs_;
  std::map<std::string, ModuleMorphism> morphisms_;
  std::map<std::string, CotorsionOracle> oracles_;
  std::vector<JobSpec> jobs_;
};

/// One report object: id, command, status (pass/fail/error), result, certificate, assumptions.
json run_job(const Document& doc, const JobSpec& job);

/// Runs the selected jobs ("all" or a comma-separated id list) on up to `threads` threads;
/// reports keep document order.
json run_document(const Document& doc, const std::string& selector = "all", unsigned threads = 1);

/// Re-verifies every certificate in a report stream.
json recheck_reports(const json& reports);

/// True when every entry has status pass (reports) or verified (rechecks).
bool all_passed(const json& stream);

}  // namespace ctw::wb
