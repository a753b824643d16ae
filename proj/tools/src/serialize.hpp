#pragma once

// Self-contained certificate encoding: algebras and modules are interned into
// an "objects" table and referenced by id.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctw/cdg.hpp"

namespace ctw::wb {

using json = nlohmann::json;

json matrix_json(const FpMatrix& m);
FpMatrix matrix_from_json(const json& j, std::uint32_t p);
json vec_json(const Vec& v);
json reldim_json(const RelDim& d);

class CertWriter {
 public:
  std::string algebra(const AlgebraPtr& a);
  std::string module(const Module& m);
  json morphism(const ModuleMorphism& f);
  json ses(const ShortExactSeq& s);
  json ring_map(const RingMap& rm);
  json tower(const Tower& t);
  json approximation(const ApproximationCertificate& c);
  /// Attach the object table to a certificate body.
  json finish(json body) const;

 private:
  json algebras_ = json::object();
  json modules_ = json::object();
  std::vector<AlgebraPtr> algs_;
  std::vector<Module> mods_;
};

class CertReader {
 public:
  explicit CertReader(const json& cert);
  AlgebraPtr algebra(const std::string& id);
  Module module(const std::string& id);
  ModuleMorphism morphism(const json& j);
  ShortExactSeq ses(const json& j);
  RingMap ring_map(const json& j);
  Tower tower(const json& j);
  ApproximationCertificate approximation(const json& j);

 private:
  const json& objects_;
  std::map<std::string, AlgebraPtr> algs_;
  std::map<std::string, Module> mods_;
};

/// Re-verifies a stored certificate without redoing the computation it certifies.
/// Returns the list of problems (empty = verified).
std::vector<std::string> recheck_certificate(const json& cert);

}  // namespace ctw::wb
