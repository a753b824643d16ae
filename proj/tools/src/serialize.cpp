#include "serialize.hpp"

#include <stdexcept>

namespace ctw::wb {

json matrix_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"shape", {m.rows(), m.cols()}}, {"rows", std::move(rows)}};
}

FpMatrix matrix_from_json(const json& j, std::uint32_t p) {
  const std::size_t r = j.at("shape").at(0).get<std::size_t>(), c = j.at("shape").at(1).get<std::size_t>();
  FpMatrix m(r, c, p);
  const json& rows = j.at("rows");
  if (rows.size() != r) throw std::runtime_error("matrix row count does not match its shape");
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::runtime_error("matrix row length does not match its shape");
    for (std::size_t k = 0; k < c; ++k) m.set(i, k, rows[i][k].get<std::int64_t>());
  }
  return m;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

json reldim_json(const RelDim& d) { return {{"value", d.value}, {"at_least", d.at_least}, {"text", d.str()}}; }

// ---------------------------------------------------------------------------

std::string CertWriter::algebra(const AlgebraPtr& a) {
  for (std::size_t i = 0; i < algs_.size(); ++i)
    if (algs_[i] == a || algs_[i]->same_as(*a)) return "a" + std::to_string(i);
  const std::string id = "a" + std::to_string(algs_.size());
  algs_.push_back(a);
  json st = json::array();
  for (auto x : a->structure()) st.push_back(x);
  algebras_[id] = {{"p", a->modulus()},        {"dim", a->dim()},         {"structure", std::move(st)},
                   {"unit", vec_json(a->unit())}, {"degrees", a->degrees()}, {"labels", a->labels()},
                   {"name", a->name()}};
  return id;
}

std::string CertWriter::module(const Module& m) {
  for (std::size_t i = 0; i < mods_.size(); ++i)
    if (mods_[i].same_object(m)) return "m" + std::to_string(i);
  const std::string id = "m" + std::to_string(mods_.size());
  mods_.push_back(m);
  json act = json::array();
  for (const auto& a : m.actions()) act.push_back(matrix_json(a));
  modules_[id] = {{"algebra", algebra(m.ring())}, {"side", side_name(m.side())}, {"dim", m.dim()},
                  {"degrees", m.degrees()},       {"action", std::move(act)}};
  return id;
}

json CertWriter::morphism(const ModuleMorphism& f) {
  return {{"source", module(f.source)}, {"target", module(f.target)}, {"matrix", matrix_json(f.matrix)}};
}

json CertWriter::ses(const ShortExactSeq& s) { return {{"i", morphism(s.i)}, {"q", morphism(s.q)}}; }

json CertWriter::ring_map(const RingMap& rm) {
  return {{"source", algebra(rm.base())}, {"target", algebra(rm.top())}, {"matrix", matrix_json(rm.morphism.matrix)}};
}

json CertWriter::tower(const Tower& t) {
  json layers = json::array();
  for (const auto& l : t.layers)
    layers.push_back({{"kind", layer_kind_name(l.kind)},
                      {"base", module(l.base)},
                      {"copies", l.copies},
                      {"module", module(l.module)},
                      {"witness", matrix_json(l.witness)}});
  json flag = json::array();
  for (const auto& f : t.flag) flag.push_back(matrix_json(f));
  json out = {{"direction", direction_name(t.direction)},
              {"target", module(t.target)},
              {"flag", std::move(flag)},
              {"layers", std::move(layers)},
              {"length", t.length()}};
  out["ring_map"] = t.ring_map ? ring_map(*t.ring_map) : json(nullptr);
  return out;
}

json CertWriter::approximation(const ApproximationCertificate& c) {
  return {{"seq", ses(c.seq)},
          {"side", c.side == ApproxSide::Precover ? "precover" : "preenvelope"},
          {"tower", tower(c.tower)},
          {"tower_on", c.tower_on},
          {"notes", c.notes}};
}

json CertWriter::finish(json body) const {
  body["objects"] = {{"algebras", algebras_}, {"modules", modules_}};
  return body;
}

// ---------------------------------------------------------------------------

CertReader::CertReader(const json& cert) : objects_(cert.at("objects")) {}

AlgebraPtr CertReader::algebra(const std::string& id) {
  if (auto it = algs_.find(id); it != algs_.end()) return it->second;
  const json& j = objects_.at("algebras").at(id);
  const auto p = j.at("p").get<std::uint32_t>();
  AlgebraPtr a = Algebra::make(checked_prime(p), j.at("dim").get<std::size_t>(),
                               j.at("structure").get<std::vector<std::uint32_t>>(), j.at("unit").get<Vec>(),
                               j.at("degrees").get<std::vector<int>>(), j.at("labels").get<std::vector<std::string>>(),
                               j.at("name").get<std::string>());
  if (auto v = validate_algebra(*a)) throw std::runtime_error("algebra " + id + ": " + v->message);
  algs_[id] = a;
  return a;
}

Module CertReader::module(const std::string& id) {
  if (auto it = mods_.find(id); it != mods_.end()) return it->second;
  const json& j = objects_.at("modules").at(id);
  AlgebraPtr a = algebra(j.at("algebra").get<std::string>());
  std::vector<FpMatrix> act;
  for (const auto& m : j.at("action")) act.push_back(matrix_from_json(m, a->modulus()));
  const Side side = j.at("side").get<std::string>() == "right" ? Side::Right : Side::Left;
  Module m = Module::create(a, std::move(act), j.at("degrees").get<std::vector<int>>(), side);
  mods_[id] = m;
  return m;
}

ModuleMorphism CertReader::morphism(const json& j) {
  Module s = module(j.at("source").get<std::string>());
  Module t = module(j.at("target").get<std::string>());
  return ModuleMorphism::create(s, t, matrix_from_json(j.at("matrix"), s.modulus()));
}

ShortExactSeq CertReader::ses(const json& j) { return {morphism(j.at("i")), morphism(j.at("q"))}; }

RingMap CertReader::ring_map(const json& j) {
  AlgebraPtr s = algebra(j.at("source").get<std::string>());
  AlgebraPtr t = algebra(j.at("target").get<std::string>());
  return RingMap::make(AlgebraMorphism{s, t, matrix_from_json(j.at("matrix"), s->modulus())});
}

Tower CertReader::tower(const json& j) {
  Tower t;
  t.direction = j.at("direction").get<std::string>() == "filtration" ? TowerDirection::Filtration
                                                                      : TowerDirection::Cofiltration;
  t.target = module(j.at("target").get<std::string>());
  const std::uint32_t p = t.target.modulus();
  for (const auto& f : j.at("flag")) t.flag.push_back(matrix_from_json(f, p));
  for (const auto& l : j.at("layers")) {
    TowerLayer layer;
    const std::string kind = l.at("kind").get<std::string>();
    layer.kind = kind == "coinduced" ? LayerKind::Coinduced : kind == "induced" ? LayerKind::Induced : LayerKind::Power;
    layer.base = module(l.at("base").get<std::string>());
    layer.copies = l.at("copies").get<std::size_t>();
    layer.module = module(l.at("module").get<std::string>());
    layer.witness = matrix_from_json(l.at("witness"), p);
    t.layers.push_back(std::move(layer));
  }
  if (!j.at("ring_map").is_null()) t.ring_map = std::make_shared<const RingMap>(ring_map(j.at("ring_map")));
  return t;
}

ApproximationCertificate CertReader::approximation(const json& j) {
  ApproximationCertificate c;
  c.seq = ses(j.at("seq"));
  c.side = j.at("side").get<std::string>() == "precover" ? ApproxSide::Precover : ApproxSide::Preenvelope;
  c.tower = tower(j.at("tower"));
  c.tower_on = j.at("tower_on").get<std::string>();
  return c;
}

// ---------------------------------------------------------------------------

namespace {

bool same_data(const Module& a, const Module& b) {
  return a.dim() == b.dim() && a.side() == b.side() && a.degrees() == b.degrees() &&
         same_algebra(a.ring(), b.ring()) && a.actions() == b.actions();
}

void homotopy_problems(const Module& m, const Vec& delta, const FpMatrix& t, std::size_t rdim,
                       std::vector<std::string>& bad, const std::string& tag) {
  if (t.rows() != m.dim() || t.cols() != m.dim()) {
    bad.push_back(tag + "homotopy has the wrong shape");
    return;
  }
  FpMatrix d = m.act(delta);
  if (!(d * t + t * d).is_identity()) bad.push_back(tag + "d t + t d != id");
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (t(r, c) != 0 && m.degree(r) != m.degree(c) - 1) {
        bad.push_back(tag + "homotopy is not of degree -1");
        r = m.dim();
        break;
      }
  for (std::size_t i = 0; i < rdim; ++i) {
    const bool odd = (m.acting()->degree(i) % 2) != 0;
    FpMatrix lhs = t * m.action(i);
    FpMatrix rhs = odd ? -(m.action(i) * t) : m.action(i) * t;
    if (!(lhs == rhs)) {
      bad.push_back(tag + "homotopy is not R-linear for basis element " + std::to_string(i));
      break;
    }
  }
}

void check_homotopy(CertReader& rd, const json& j, std::vector<std::string>& bad, const std::string& tag) {
  Module m = rd.module(j.at("module").get<std::string>());
  homotopy_problems(m, j.at("delta").get<Vec>(), matrix_from_json(j.at("t"), m.modulus()),
                    j.at("r_dim").get<std::size_t>(), bad, tag);
}

void check(CertReader& rd, const json& c, std::vector<std::string>& bad, const std::string& tag);

void check_membership(CertReader& rd, const json& c, std::vector<std::string>& bad, const std::string& tag) {
  ApproximationCertificate a = rd.approximation(c.at("approximation"));
  for (auto& s : verify_certificate(a)) bad.push_back(tag + s);
  const bool member = c.at("member").get<bool>();
  const bool retraction = a.side == ApproxSide::Preenvelope;
  if (member) {
    ModuleMorphism s = rd.morphism(c.at("splitting"));
    FpMatrix prod = retraction ? s.matrix * a.seq.i.matrix : a.seq.q.matrix * s.matrix;
    if (!prod.is_identity()) bad.push_back(tag + "stored splitting does not split the sequence");
  } else {
    bool splits = retraction ? split_retraction(a.seq).has_value() : split_section(a.seq).has_value();
    if (splits) bad.push_back(tag + "sequence splits but the verdict is non-member");
  }
}

void check(CertReader& rd, const json& c, std::vector<std::string>& bad, const std::string& tag) {
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "none") return;
  if (kind == "bundle") {
    const json& parts = c.at("parts");
    for (std::size_t i = 0; i < parts.size(); ++i) check(rd, parts[i], bad, tag + "part " + std::to_string(i) + ": ");
    return;
  }
  if (kind == "algebra") {
    rd.algebra(c.at("algebra").get<std::string>());
    return;
  }
  if (kind == "module") {
    rd.module(c.at("module").get<std::string>());
    return;
  }
  if (kind == "ses") {
    if (auto v = validate_ses(rd.ses(c.at("seq")))) bad.push_back(tag + *v);
    return;
  }
  if (kind == "approximation") {
    for (auto& s : verify_certificate(rd.approximation(c.at("approximation")))) bad.push_back(tag + s);
    return;
  }
  if (kind == "membership") {
    check_membership(rd, c, bad, tag);
    return;
  }
  if (kind == "salce") {
    for (const char* key : {"seq", "start", "approximation", "closure"})
      if (auto v = validate_ses(rd.ses(c.at(key)))) bad.push_back(tag + key + ": " + *v);
    return;
  }
  if (kind == "chain") {
    const json& steps = c.at("steps");
    const bool precover = c.at("direction").get<std::string>() == "precover";
    std::optional<Module> prev;
    for (std::size_t l = 0; l < steps.size(); ++l) {
      ShortExactSeq s = rd.ses(steps[l]);
      if (auto v = validate_ses(s)) bad.push_back(tag + "step " + std::to_string(l) + ": " + *v);
      const Module& start = precover ? s.right() : s.left();
      if (prev && !same_data(*prev, start)) bad.push_back(tag + "step " + std::to_string(l) + " does not continue the chain");
      prev = precover ? s.left() : s.right();
    }
    return;
  }
  if (kind == "resolution") {
    Module m = rd.module(c.at("module").get<std::string>());
    const json& steps = c.at("steps");
    std::vector<ModuleMorphism> maps;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      Module free = rd.module(steps[i].at("free").get<std::string>());
      Module expect = Module::free(m.ring(), steps[i].at("generator_degrees").get<std::vector<int>>(), m.side());
      if (!same_data(free, expect)) bad.push_back(tag + "P_" + std::to_string(i) + " is not the stated free module");
      maps.push_back(rd.morphism(steps[i].at("map")));
    }
    if (!maps.empty() && !maps[0].is_surjective()) bad.push_back(tag + "P_0 -> M is not surjective");
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
      if (!(maps[i].matrix * maps[i + 1].matrix).is_zero()) bad.push_back(tag + "d^2 != 0 at " + std::to_string(i));
      if (maps[i].rank() + maps[i + 1].rank() != maps[i].source.dim())
        bad.push_back(tag + "not exact at P_" + std::to_string(i));
    }
    return;
  }
  if (kind == "hom") {
    std::vector<ModuleMorphism> basis;
    for (const auto& f : c.at("basis")) basis.push_back(rd.morphism(f));
    if (!basis.empty()) {
      const auto& f0 = basis.front();
      FpMatrix flat = flatten(basis, f0.target.dim(), f0.source.dim(), f0.matrix.modulus());
      if (rank(flat) != basis.size()) bad.push_back(tag + "basis maps are linearly dependent");
    }
    return;
  }
  if (kind == "tilting") {
    std::vector<ModuleMorphism> w;
    for (const auto& f : c.at("witness")) w.push_back(rd.morphism(f));
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (!(w[j + 1].matrix * w[j].matrix).is_zero()) bad.push_back(tag + "witness maps do not compose to 0");
      if (w[j].rank() + w[j + 1].rank() != w[j].target.dim()) bad.push_back(tag + "witness not exact");
    }
    if (!w.empty() && (!w.front().is_injective() || !w.back().is_surjective()))
      bad.push_back(tag + "witness is not a short exact chain");
    for (const auto& a : c.at("add")) {
      ModuleMorphism into = rd.morphism(a.at("into")), back = rd.morphism(a.at("back"));
      if (!(back.matrix * into.matrix).is_identity()) bad.push_back(tag + "add witness does not split");
    }
    return;
  }
  if (kind == "homotopy") {
    check_homotopy(rd, c, bad, tag);
    return;
  }
  if (kind == "iso") {
    ModuleMorphism f = rd.morphism(c.at("map"));
    if (!f.is_iso()) bad.push_back(tag + "stored map is not an isomorphism");
    return;
  }
  if (kind == "filtration") {
    Module tot = rd.module(c.at("module").get<std::string>());
    const std::uint32_t p = tot.modulus();
    FpMatrix cols = matrix_from_json(c.at("sub"), p);
    Submodule sub = submodule(tot, cols);
    Quotient quo = quotient(tot, cols);
    const Vec delta = c.at("delta").get<Vec>();
    const std::size_t rdim = c.at("r_dim").get<std::size_t>();
    homotopy_problems(sub.module, delta, matrix_from_json(c.at("homotopies").at(0), p), rdim, bad, tag + "sub: ");
    homotopy_problems(quo.module, delta, matrix_from_json(c.at("homotopies").at(1), p), rdim, bad, tag + "quotient: ");
    return;
  }
  bad.push_back(tag + "unknown certificate kind '" + kind + "'");
}

}  // namespace

std::vector<std::string> recheck_certificate(const json& cert) {
  std::vector<std::string> bad;
  try {
    CertReader rd(cert);
    check(rd, cert, bad, "");
  } catch (const std::exception& e) {
    bad.push_back(std::string("malformed certificate: ") + e.what());
  }
  return bad;
}

}  // namespace ctw::wb
