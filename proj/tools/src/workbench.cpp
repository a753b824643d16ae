#include "workbench.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "ctw/fixtures.hpp"

namespace ctw::wb {

namespace {

constexpr std::size_t kAny = static_cast<std::size_t>(-1);

FpMatrix user_matrix(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p) {
  if (j.is_object()) return matrix_from_json(j, p);
  if (!j.is_array()) throw DocumentError("matrix must be an array of rows");
  if (rows != kAny && j.size() != rows)
    throw DocumentError("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  std::size_t c = cols;
  if (c == kAny) c = j.empty() ? 0 : j[0].size();
  FpMatrix m(j.size(), c, p);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != c)
      throw DocumentError("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t k = 0; k < c; ++k) m.set(r, k, j[r][k].get<std::int64_t>());
  }
  return m;
}

Vec user_vec(const json& j, std::size_t n, std::uint32_t p) {
  if (!j.is_array() || (n != kAny && j.size() != n)) throw DocumentError("vector has the wrong length");
  Vec v;
  for (const auto& x : j) v.push_back(reduce_mod(x.get<std::int64_t>(), p));
  return v;
}

Side user_side(const json& j) {
  if (!j.contains("side")) return Side::Left;
  const std::string s = j.at("side").get<std::string>();
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw DocumentError("side must be \"left\" or \"right\"");
}

std::string one_key(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (j.contains(k)) return k;
  std::string all;
  for (const char* k : keys) all += std::string(all.empty() ? "" : ", ") + k;
  throw DocumentError("expected one of: " + all);
}

}  // namespace

// ---------------------------------------------------------------------------
// document loading

struct Document::Builder {
  const json& raw;
  Document& doc;
  std::set<std::string> busy;

  const json& entry(const char* section, const std::string& name) {
    if (!raw.contains(section) || !raw.at(section).contains(name))
      throw DocumentError(std::string(section) + ": unknown identifier '" + name + "'");
    return raw.at(section).at(name);
  }

  template <class F>
  auto guarded(const char* section, const std::string& name, F&& f) {
    const std::string key = std::string(section) + "." + name;
    if (busy.count(key)) throw DocumentError(key + ": circular reference");
    busy.insert(key);
    try {
      auto out = f(entry(section, name));
      busy.erase(key);
      return out;
    } catch (const DocumentError& e) {
      busy.erase(key);
      const std::string msg = e.what();
      if (msg.rfind(key + ":", 0) == 0) throw;
      throw DocumentError(key + ": " + msg);
    } catch (const std::exception& e) {
      busy.erase(key);
      throw DocumentError(key + ": " + e.what());
    }
  }

  AlgebraPtr alg(const std::string& name) {
    if (auto it = doc.algebras_.find(name); it != doc.algebras_.end()) return it->second;
    AlgebraPtr a = guarded("algebras", name, [&](const json& j) { return build_alg(name, j); });
    if (auto v = validate_algebra(*a)) throw DocumentError("algebras." + name + ": " + v->message);
    doc.algebras_[name] = a;
    return a;
  }

  AlgebraPtr build_alg(const std::string& name, const json& j) {
    const std::uint32_t p = doc.p_;
    const std::string kind = one_key(j, {"builtin", "dim", "quiver", "tensor", "opposite", "delta_extension", "cdg_base"});
    if (kind == "builtin") return fixtures::builtin_algebra(j.at("builtin").get<std::string>(), p);
    if (kind == "tensor") return tensor_product(alg(j.at("tensor").at(0)), alg(j.at("tensor").at(1)));
    if (kind == "opposite") return opposite(alg(j.at("opposite")));
    if (kind == "delta_extension") return cdg(j.at("delta_extension").get<std::string>())->a;
    if (kind == "cdg_base") return cdg(j.at("cdg_base").get<std::string>())->cdg.r;
    if (kind == "quiver") {
      const json& q = j.at("quiver");
      QuiverSpec spec;
      spec.vertices = q.at("vertices").get<std::size_t>();
      for (const auto& a : q.value("arrows", json::array()))
        spec.arrows.emplace_back(a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>());
      for (const auto& rel : q.value("relations", json::array())) {
        PathRelation r;
        for (const auto& t : rel) r.push_back({t.value("coeff", std::int64_t{1}), t.at("path").get<std::vector<std::size_t>>()});
        spec.relations.push_back(std::move(r));
      }
      spec.arrow_labels = q.value("arrow_labels", std::vector<std::string>{});
      return path_algebra(spec, p, name);
    }
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::uint32_t> st(n * n * n, 0);
    if (j.contains("structure")) {
      Vec flat = user_vec(j.at("structure"), n * n * n, p);
      st.assign(flat.begin(), flat.end());
    } else {
      const json& t = j.at("table");
      if (t.size() != n) throw DocumentError("table must have dim rows");
      for (std::size_t a = 0; a < n; ++a) {
        if (t[a].size() != n) throw DocumentError("table row " + std::to_string(a) + " must have dim entries");
        for (std::size_t b = 0; b < n; ++b) {
          Vec v = user_vec(t[a][b], n, p);
          for (std::size_t c = 0; c < n; ++c) st[(a * n + b) * n + c] = v[c];
        }
      }
    }
    Vec unit = user_vec(j.at("unit"), n, p);
    std::vector<int> degrees = j.value("degrees", std::vector<int>{});
    if (!degrees.empty() && degrees.size() != n) throw DocumentError("degrees must have dim entries");
    return Algebra::make(p, n, std::move(st), std::move(unit), std::move(degrees),
                         j.value("labels", std::vector<std::string>{}), name);
  }

  DeltaPtr cdg(const std::string& name) {
    if (auto it = doc.cdgs_.find(name); it != doc.cdgs_.end()) return it->second;
    DeltaPtr d = guarded("cdg_rings", name, [&](const json& j) {
      CDGRing c;
      if (j.contains("builtin")) {
        const std::string b = j.at("builtin").get<std::string>();
        if (b == "graded_dual") c = fixtures::graded_dual_numbers_cdg(doc.p_);
        else if (b == "delta4") c = fixtures::delta4_cdg(doc.p_);
        else throw DocumentError("unknown builtin CDG-ring '" + b + "'");
      } else {
        c.r = alg(j.at("ring").get<std::string>());
        const std::size_t n = c.r->dim();
        c.d = j.contains("d") ? user_matrix(j.at("d"), n, n, doc.p_) : FpMatrix(n, n, doc.p_);
        c.h = j.contains("h") ? user_vec(j.at("h"), n, doc.p_) : Vec(n, 0);
        c.name = name;
      }
      return delta_extension(c);
    });
    doc.cdgs_[name] = d;
    return d;
  }

  std::shared_ptr<const RingMap> rmap(const std::string& name) {
    if (auto it = doc.ring_maps_.find(name); it != doc.ring_maps_.end()) return it->second;
    auto r = guarded("ring_maps", name, [&](const json& j) -> std::shared_ptr<const RingMap> {
      const std::string kind = one_key(j, {"scalar", "diagonal_inclusion", "tensor_inclusion", "delta", "source"});
      if (kind == "delta") {
        DeltaPtr d = cdg(j.at("delta").get<std::string>());
        return std::shared_ptr<const RingMap>(d, &d->rm);
      }
      AlgebraMorphism f;
      if (kind == "scalar") {
        f = fixtures::scalar_inclusion(alg(j.at("scalar")));
      } else if (kind == "diagonal_inclusion") {
        f = fixtures::diagonal_inclusion(alg(j.at(kind).at(0)), alg(j.at(kind).at(1)));
      } else if (kind == "tensor_inclusion") {
        f = fixtures::tensor_inclusion(alg(j.at(kind).at(0)), alg(j.at(kind).at(1)), alg(j.at(kind).at(2)));
      } else {
        AlgebraPtr s = alg(j.at("source")), t = alg(j.at("target"));
        f = {s, t, user_matrix(j.at("matrix"), t->dim(), s->dim(), doc.p_)};
      }
      return std::make_shared<const RingMap>(RingMap::make(std::move(f), name));
    });
    doc.ring_maps_[name] = r;
    return r;
  }

  Module mod(const std::string& name) {
    if (auto it = doc.modules_.find(name); it != doc.modules_.end()) return it->second;
    Module m = guarded("modules", name, [&](const json& j) { return build_mod(j).renamed(name); });
    if (auto v = validate_module(m)) throw DocumentError("modules." + name + ": " + *v);
    doc.modules_[name] = m;
    return m;
  }

  Module build_mod(const json& j) {
    const std::uint32_t p = doc.p_;
    const std::string kind =
        one_key(j, {"action", "regular", "free", "projective", "fixture", "dual", "sum", "power", "restrict", "induce",
                    "coinduce", "syzygy", "cosyzygy", "shift", "quotient", "g_plus", "g_minus", "cdg_module"});
    auto name_at = [&](std::size_t i) { return j.at(kind).at(i).get<std::string>(); };
    auto int_at = [&](std::size_t i) { return j.at(kind).at(i).get<long>(); };
    if (kind == "action") {
      AlgebraPtr a = alg(j.at("algebra"));
      const std::size_t n = j.at("dim").get<std::size_t>();
      std::vector<FpMatrix> act;
      if (j.at("action").size() != a->dim()) throw DocumentError("action must list one matrix per basis element");
      for (const auto& m : j.at("action")) act.push_back(user_matrix(m, n, n, p));
      std::vector<int> degrees = j.value("degrees", std::vector<int>(n, 0));
      return Module::create(a, std::move(act), std::move(degrees), user_side(j));
    }
    if (kind == "regular") return Module::regular(alg(j.at("regular")), user_side(j));
    if (kind == "free")
      return Module::free(alg(j.at("free")), j.at("generator_degrees").get<std::vector<int>>(), user_side(j));
    if (kind == "projective")
      return fixtures::projective_at(alg(name_at(0)), static_cast<std::size_t>(int_at(1)), user_side(j));
    if (kind == "fixture") {
      const std::string f = j.at("fixture").get<std::string>();
      AlgebraPtr a = alg(j.at("algebra"));
      if (f == "k") return fixtures::dual_trivial(a);
      if (f == "a2.p1" || f == "a2.s1" || f == "a2.s2") {
        auto ms = fixtures::a2_modules(a);
        return f == "a2.p1" ? ms.p1 : f == "a2.s1" ? ms.s1 : ms.s2;
      }
      if (f == "triangular.p1" || f == "triangular.p2" || f == "triangular.s2") {
        auto ms = fixtures::triangular_modules(a);
        return f == "triangular.p1" ? ms.p1 : f == "triangular.p2" ? ms.p2 : ms.s2;
      }
      throw DocumentError("unknown fixture module '" + f + "'");
    }
    if (kind == "dual") return dual(mod(j.at("dual")));
    if (kind == "sum") {
      std::vector<Module> parts;
      for (const auto& n : j.at("sum")) parts.push_back(mod(n));
      if (parts.empty()) throw DocumentError("sum needs at least one module");
      return direct_sum(parts).module;
    }
    if (kind == "power") return power(mod(name_at(0)), static_cast<std::size_t>(int_at(1))).module;
    if (kind == "restrict") return restrict(*rmap(name_at(0)), mod(name_at(1)));
    if (kind == "induce") return induce(*rmap(name_at(0)), mod(name_at(1))).module;
    if (kind == "coinduce") return coinduce(*rmap(name_at(0)), mod(name_at(1))).module;
    if (kind == "syzygy") return syzygy(mod(name_at(0)), static_cast<std::size_t>(int_at(1)), CoverKind::Greedy);
    if (kind == "cosyzygy") return cosyzygy(mod(name_at(0)), static_cast<std::size_t>(int_at(1)), CoverKind::Greedy);
    if (kind == "shift") return shift(mod(name_at(0)), static_cast<int>(int_at(1)));
    if (kind == "quotient") {
      Module m = mod(name_at(0));
      const json& vs = j.at("quotient").at(1);
      FpMatrix cols(m.dim(), 0, p);
      for (const auto& v : vs) cols = hstack(cols, FpMatrix::column_vector(user_vec(v, m.dim(), p), p));
      return fixtures::quotient_module(m, cols);
    }
    if (kind == "g_plus") return g_plus(cdg(name_at(0)), mod(name_at(1))).graded;
    if (kind == "g_minus") return g_minus(cdg(name_at(0)), mod(name_at(1))).graded;
    const json& c = j.at("cdg_module");
    DeltaPtr ext = cdg(c.at("cdg").get<std::string>());
    Module carrier = mod(c.at("carrier").get<std::string>());
    return cdg_to_graded(ext, carrier, user_matrix(c.at("d"), carrier.dim(), carrier.dim(), p)).graded;
  }

  ModuleMorphism morph(const std::string& name) {
    if (auto it = doc.morphisms_.find(name); it != doc.morphisms_.end()) return it->second;
    ModuleMorphism f = guarded("morphisms", name, [&](const json& j) {
      const std::string kind = one_key(j, {"matrix", "identity", "zero", "compose", "cover", "embedding"});
      if (kind == "identity") return ModuleMorphism::identity(mod(j.at("identity")));
      if (kind == "zero") return ModuleMorphism::zero(mod(j.at("zero").at(0)), mod(j.at("zero").at(1)));
      if (kind == "compose") {
        ModuleMorphism g = morph(j.at("compose").at(0)), h = morph(j.at("compose").at(1));
        if (auto v = validate_morphism(compose(g, h))) throw DocumentError(*v);
        return compose(g, h);
      }
      if (kind == "cover") return free_cover(mod(j.at("cover")), CoverKind::Greedy).q;
      if (kind == "embedding") return injective_embedding(mod(j.at("embedding")), CoverKind::Greedy).i;
      Module s = mod(j.at("source")), t = mod(j.at("target"));
      return ModuleMorphism::create(s, t, user_matrix(j.at("matrix"), t.dim(), s.dim(), doc.p_));
    });
    doc.morphisms_[name] = f;
    return f;
  }

  void oracle(const std::string& name) {
    if (doc.oracles_.count(name)) return;
    CotorsionOracle o = guarded("oracles", name, [&](const json& j) {
      const std::string kind = one_key(j, {"builtin", "generated", "cogenerated"});
      if (kind == "builtin") {
        const std::string b = j.at("builtin").get<std::string>();
        AlgebraPtr a = alg(j.at("algebra"));
        if (b == "proj_all") return proj_all(a);
        if (b == "all_inj") return all_inj(a);
        throw DocumentError("unknown builtin oracle '" + b + "'");
      }
      std::vector<Module> s;
      for (const auto& n : j.at(kind)) s.push_back(mod(n));
      return kind == "generated" ? generated_oracle(s, name) : cogenerated_oracle(s, name);
    });
    o.name = name;
    doc.oracles_[name] = std::move(o);
  }

  void run() {
    static const std::set<std::string> known = {"p",       "algebras",  "ring_maps", "modules",
                                                "morphisms", "cdg_rings", "oracles",   "jobs"};
    if (!raw.is_object()) throw DocumentError("document must be an object");
    for (auto it = raw.begin(); it != raw.end(); ++it)
      if (!known.count(it.key())) throw DocumentError("unknown section '" + it.key() + "'");
    if (!raw.contains("p")) throw DocumentError("p: missing prime");
    try {
      doc.p_ = checked_prime(raw.at("p").get<std::int64_t>());
    } catch (const std::exception& e) {
      throw DocumentError(std::string("p: ") + e.what());
    }
    auto each = [&](const char* section, auto&& f) {
      if (!raw.contains(section)) return;
      if (!raw.at(section).is_object()) throw DocumentError(std::string(section) + ": must be an object");
      for (auto it = raw.at(section).begin(); it != raw.at(section).end(); ++it) f(it.key());
    };
    each("algebras", [&](const std::string& n) { alg(n); });
    each("cdg_rings", [&](const std::string& n) { cdg(n); });
    each("ring_maps", [&](const std::string& n) { rmap(n); });
    each("modules", [&](const std::string& n) { mod(n); });
    each("morphisms", [&](const std::string& n) { morph(n); });
    each("oracles", [&](const std::string& n) { oracle(n); });
    if (raw.contains("jobs")) {
      std::set<std::string> ids;
      std::size_t idx = 0;
      for (const auto& j : raw.at("jobs")) {
        ++idx;
        JobSpec spec;
        if (j.is_string()) {
          spec.command = j.get<std::string>();
          spec.id = "job" + std::to_string(idx);
        } else {
          spec.command = j.at("command").get<std::string>();
          spec.id = j.value("id", "job" + std::to_string(idx));
          if (j.contains("expect")) spec.expect = j.at("expect");
        }
        if (!ids.insert(spec.id).second) throw DocumentError("jobs: duplicate id '" + spec.id + "'");
        doc.jobs_.push_back(std::move(spec));
      }
    }
  }
};

Document Document::parse(const std::string& text) {
  json raw;
  try {
    raw = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("parse error: ") + e.what());
  }
  Document doc;
  Builder b{raw, doc, {}};
  b.run();
  return doc;
}

Document Document::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open document '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& section, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw DocumentError(section + ": unknown identifier '" + name + "'");
  return it->second;
}

}  // namespace

AlgebraPtr Document::algebra(const std::string& n) const { return lookup(algebras_, "algebras", n); }
Module Document::module(const std::string& n) const { return lookup(modules_, "modules", n); }
std::shared_ptr<const RingMap> Document::ring_map(const std::string& n) const {
  return lookup(ring_maps_, "ring_maps", n);
}
DeltaPtr Document::cdg(const std::string& n) const { return lookup(cdgs_, "cdg_rings", n); }
ModuleMorphism Document::morphism(const std::string& n) const { return lookup(morphisms_, "morphisms", n); }
const CotorsionOracle& Document::oracle(const std::string& n) const { return lookup(oracles_, "oracles", n); }

std::map<std::string, std::vector<std::string>> Document::inventory() const {
  std::map<std::string, std::vector<std::string>> out;
  for (auto& [k, v] : algebras_) out["algebras"].push_back(k);
  for (auto& [k, v] : modules_) out["modules"].push_back(k);
  for (auto& [k, v] : ring_maps_) out["ring_maps"].push_back(k);
  for (auto& [k, v] : cdgs_) out["cdg_rings"].push_back(k);
  for (auto& [k, v] : morphisms_) out["morphisms"].push_back(k);
  for (auto& [k, v] : oracles_) out["oracles"].push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// jobs

namespace {

struct Outcome {
  json result = json::object();
  json certificate = nullptr;
  std::vector<std::string> assumptions;
  bool verdict = true;
};

class Args {
 public:
  Args(const std::string& cmd) {
    std::istringstream in(cmd);
    std::string t;
    while (in >> t) toks_.push_back(t);
    if (toks_.empty()) throw DocumentError("empty command");
  }
  const std::string& name() const { return toks_[0]; }
  std::size_t size() const { return toks_.size() - 1; }
  const std::string& str(std::size_t i) const {
    if (i + 1 >= toks_.size()) throw DocumentError(name() + ": missing argument " + std::to_string(i + 1));
    return toks_[i + 1];
  }
  std::size_t num(std::size_t i) const {
    const std::string& s = str(i);
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size() || v < 0) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw DocumentError(name() + ": argument " + std::to_string(i + 1) + " must be a non-negative integer");
    }
  }
  void at_most(std::size_t n) const {
    if (size() > n) throw DocumentError(name() + ": too many arguments");
  }
  std::vector<std::string> rest(std::size_t from) const {
    std::vector<std::string> out;
    for (std::size_t i = from + 1; i < toks_.size(); ++i) out.push_back(toks_[i]);
    return out;
  }

 private:
  std::vector<std::string> toks_;
};

json dims_json(const ShortExactSeq& s) { return json::array({s.left().dim(), s.middle().dim(), s.right().dim()}); }

json resolution_cert(CertWriter& w, const Module& m, std::size_t n) {
  auto res = m.greedy_resolution();
  json steps = json::array();
  for (std::size_t i = 0; i <= n; ++i) {
    const FreeCover& st = res->step(i);
    ModuleMorphism map = i == 0 ? st.q : compose(res->inclusion(i), st.q);
    steps.push_back({{"free", w.module(st.free)}, {"generator_degrees", st.degrees}, {"map", w.morphism(map)}});
  }
  return {{"kind", "resolution"}, {"module", w.module(m)}, {"steps", std::move(steps)}};
}

json membership_cert(CertWriter& w, const Membership& m) {
  return {{"kind", "membership"},
          {"approximation", w.approximation(m.approximation)},
          {"member", m.member},
          {"splitting", m.splitting ? w.morphism(*m.splitting) : json(nullptr)}};
}

json homotopy_cert(CertWriter& w, const CDGModule& x, const FpMatrix& t) {
  return {{"kind", "homotopy"},
          {"module", w.module(x.graded)},
          {"delta", vec_json(x.ext->delta)},
          {"r_dim", x.ext->dim_r()},
          {"t", matrix_json(t)}};
}

json decision_cert(CertWriter& w, const CDGModule& x, const AcyclicityDecision& d) {
  if (d.membership) return membership_cert(w, *d.membership);
  if (d.homotopy) return homotopy_cert(w, x, *d.homotopy);
  return {{"kind", "none"}};
}

json decision_json(const AcyclicityDecision& d) {
  return {{"member", d.member}, {"method", d.method}, {"graded_global_dimension", reldim_json(d.gldim)},
          {"contractible", d.homotopy.has_value()}, {"notes", d.notes}};
}

void add_oracle_assumptions(Outcome& o, const CotorsionOracle& orc) {
  for (const auto& a : orc.assumptions) o.assumptions.push_back(orc.name + ": " + a);
}

void require_cdg_module(const DeltaPtr& ext, const Module& m, const std::string& name) {
  if (!same_algebra(m.ring(), ext->a)) throw DocumentError("module '" + name + "' is not over R[δ] of this CDG-ring");
}

Outcome cmd_validate(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(1);
  Outcome o;
  if (a.size() == 0) {
    json inv = json::object();
    for (auto& [k, v] : doc.inventory()) inv[k] = v;
    o.result["inventory"] = inv;
    o.result["p"] = doc.p();
    o.certificate = {{"kind", "none"}};
    return o;
  }
  const std::string& n = a.str(0);
  auto inv = doc.inventory();
  auto has = [&](const char* s) {
    auto it = inv.find(s);
    return it != inv.end() && std::find(it->second.begin(), it->second.end(), n) != it->second.end();
  };
  if (has("algebras")) {
    AlgebraPtr al = doc.algebra(n);
    o.result = {{"kind", "algebra"}, {"dim", al->dim()}, {"degrees", al->degrees()}, {"valid", !validate_algebra(*al)}};
    o.certificate = {{"kind", "algebra"}, {"algebra", w.algebra(al)}};
  } else if (has("modules")) {
    Module m = doc.module(n);
    o.result = {{"kind", "module"}, {"dim", m.dim()}, {"side", side_name(m.side())}, {"valid", !validate_module(m)}};
    o.certificate = {{"kind", "module"}, {"module", w.module(m)}};
  } else if (has("ring_maps")) {
    auto rm = doc.ring_map(n);
    o.result = {{"kind", "ring_map"}, {"valid", !validate_morphism(rm->morphism)}};
    o.certificate = {{"kind", "algebra"}, {"algebra", w.algebra(rm->top())}};
  } else if (has("morphisms")) {
    ModuleMorphism f = doc.morphism(n);
    o.result = {{"kind", "morphism"}, {"rank", f.rank()}, {"valid", !validate_morphism(f)}};
    o.certificate = {{"kind", "hom"}, {"basis", json::array({w.morphism(f)})}};
  } else if (has("cdg_rings")) {
    DeltaPtr d = doc.cdg(n);
    o.result = {{"kind", "cdg_ring"}, {"valid", !validate_cdg_ring(d->cdg)}};
    o.certificate = {{"kind", "algebra"}, {"algebra", w.algebra(d->a)}};
  } else if (has("oracles")) {
    o.result = {{"kind", "oracle"}, {"name", n}};
    o.certificate = {{"kind", "none"}};
  } else {
    throw DocumentError("validate: unknown identifier '" + n + "'");
  }
  o.verdict = o.result.value("valid", true);
  o.result["value"] = o.verdict;
  return o;
}

Outcome cmd_ext(const Document& doc, const Args& a, CertWriter& w, bool tor) {
  a.at_most(3);
  Module m = doc.module(a.str(0)), n = doc.module(a.str(1));
  const std::size_t k = a.num(2);
  Outcome o;
  json value = json::array(), rows = json::array();
  const Module& resolved = tor ? n : m;
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t d = tor ? tor_dim(m, n, i) : ext_dim(m, n, i);
    value.push_back(d);
    rows.push_back({{"i", i}, {"dim", d}});
  }
  o.result = {{"value", value}, {"rows", rows}};
  o.certificate = resolution_cert(w, resolved, k);
  return o;
}

Outcome cmd_hom(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(2);
  auto basis = hom_space(doc.module(a.str(0)), doc.module(a.str(1)));
  Outcome o;
  o.result = {{"value", basis.size()}};
  json b = json::array();
  for (const auto& f : basis) b.push_back(w.morphism(f));
  o.certificate = {{"kind", "hom"}, {"basis", std::move(b)}};
  return o;
}

Outcome cmd_salce(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(3);
  const CotorsionOracle& orc = doc.oracle(a.str(0));
  Module m = doc.module(a.str(1));
  const std::string side = a.str(2);
  if (side != "precover" && side != "preenvelope") throw DocumentError("salce: side must be precover or preenvelope");
  SalceResult r = side == "precover" ? salce_precover_from_preenvelope(orc, m) : salce_preenvelope_from_precover(orc, m);
  Outcome o;
  o.result = {{"value", dims_json(r.seq)}, {"closure", dims_json(r.closure)}, {"certificate", r.certificate}};
  o.certificate = {{"kind", "salce"}, {"seq", w.ses(r.seq)}, {"start", w.ses(r.start)},
                   {"approximation", w.ses(r.approximation)}, {"closure", w.ses(r.closure)}};
  add_oracle_assumptions(o, orc);
  return o;
}

Outcome cmd_reldim(const Document& doc, const Args& a, CertWriter& w, bool resolution) {
  a.at_most(3);
  const CotorsionOracle& orc = doc.oracle(a.str(0));
  Module m = doc.module(a.str(1));
  const std::size_t cap = a.size() > 2 ? a.num(2) : default_cap();
  json steps = json::array();
  Module g = m;
  RelDim d{cap + 1, true};
  for (std::size_t l = 0; l <= cap; ++l) {
    if (resolution ? orc.in_F(g) : orc.in_C(g)) {
      d = {l, false};
      break;
    }
    ShortExactSeq s = resolution ? orc.precover(g) : orc.preenvelope(g);
    steps.push_back(w.ses(s));
    g = resolution ? s.left() : s.right();
  }
  Outcome o;
  o.result = {{"value", d.at_least ? json(d.str()) : json(d.value)}, {"dim", reldim_json(d)}};
  o.certificate = {{"kind", "chain"}, {"direction", resolution ? "precover" : "preenvelope"}, {"steps", steps}};
  add_oracle_assumptions(o, orc);
  return o;
}

Outcome cmd_tower(const Document& doc, const Args& a, CertWriter& w, bool q) {
  a.at_most(5);
  auto rm = doc.ring_map(a.str(0));
  const CotorsionOracle& orc = doc.oracle(a.str(1));
  Module m = doc.module(a.str(2));
  const std::size_t k = a.num(3);
  const bool other = a.size() > 4 && a.str(4) == (q ? "preenvelope" : "precover");
  if (a.size() > 4 && !other) throw DocumentError(a.name() + ": fifth argument must be " + (q ? "preenvelope" : "precover"));
  LiftedPairConfig cfg = LiftedPairConfig::make(*rm, orc, k, q ? LiftSide::Coinduced : LiftSide::Induced);
  ApproximationCertificate c = q ? (other ? q_preenvelope(cfg, m, k) : q_tower(cfg, m, k))
                                 : (other ? w_precover(cfg, m, k) : w_tower(cfg, m, k));
  auto problems = verify_certificate(c);
  Outcome o;
  o.result = {{"value", c.tower.length()}, {"dims", dims_json(c.seq)}, {"tower_on", c.tower_on},
              {"notes", c.notes},          {"problems", problems}};
  o.certificate = {{"kind", "approximation"}, {"approximation", w.approximation(c)}};
  o.assumptions = cfg.certificates;
  add_oracle_assumptions(o, orc);
  o.verdict = problems.empty();
  return o;
}

Outcome cmd_membership(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(5);
  const std::string cls = a.str(0);
  if (cls != "CA" && cls != "FA") throw DocumentError("membership: class must be CA or FA");
  auto rm = doc.ring_map(a.str(1));
  const CotorsionOracle& orc = doc.oracle(a.str(2));
  Module x = doc.module(a.str(3));
  const std::size_t k = a.num(4);
  LiftedPairConfig cfg = LiftedPairConfig::make(*rm, orc, k, cls == "CA" ? LiftSide::Coinduced : LiftSide::Induced);
  Membership m = cls == "CA" ? membership_in_CA(cfg, x) : membership_in_FA_dual(cfg, x);
  Outcome o;
  o.result = {{"value", m.member}, {"dims", dims_json(m.approximation.seq)},
              {"tower_length", m.approximation.tower.length()}};
  if (m.obstruction) o.result["obstruction_degree"] = m.obstruction->degree;
  o.certificate = membership_cert(w, m);
  o.assumptions = cfg.certificates;
  add_oracle_assumptions(o, orc);
  o.verdict = m.member;
  return o;
}

Outcome cmd_bongartz(const Document& doc, const Args& a, CertWriter& w, bool dual_side) {
  Module m = doc.module(a.str(0));
  std::vector<Module> s;
  for (const auto& n : a.rest(1)) s.push_back(doc.module(n));
  if (s.empty()) throw DocumentError(a.name() + ": needs S_0");
  ApproximationCertificate c = dual_side ? dual_bongartz_precover(s, m) : bongartz_preenvelope(s, m);
  auto problems = verify_certificate(c);
  json ext1 = json::array();
  bool vanish = true;
  for (const auto& si : s) {
    std::size_t d = dual_side ? ext_dim(c.seq.middle(), si, 1) : ext_dim(si, c.seq.middle(), 1);
    ext1.push_back(d);
    vanish = vanish && d == 0;
  }
  Outcome o;
  o.result = {{"value", ext1}, {"dims", dims_json(c.seq)}, {"tower_length", c.tower.length()},
              {"notes", c.notes}, {"problems", problems}};
  o.certificate = {{"kind", "approximation"}, {"approximation", w.approximation(c)}};
  o.assumptions.push_back("κ-indexed sums/products reduced to κ = 1");
  o.verdict = problems.empty() && vanish;
  return o;
}

Outcome cmd_tilting(const Document& doc, const Args& a, CertWriter& w, bool tilting) {
  Module t = doc.module(a.str(0));
  const std::size_t n = a.num(1);
  std::vector<ModuleMorphism> wit;
  for (const auto& name : a.rest(2)) wit.push_back(doc.morphism(name));
  TiltingReport r = tilting ? tilting_check(t, n, wit) : cotilting_check(t, n, wit);
  Outcome o;
  auto clause = [](const ClauseReport& c) { return json{{"pass", c.pass}, {"detail", c.detail}}; };
  o.result = {{"value", r.pass()},       {"dimension", reldim_json(r.dimension)}, {"self_ext", r.self_ext},
              {"clause_1", clause(r.c1)}, {"clause_2", clause(r.c2)},         {"clause_3", clause(r.c3)}};
  json wj = json::array(), add = json::array();
  for (const auto& f : wit) wj.push_back(w.morphism(f));
  for (std::size_t j = 0; j < wit.size(); ++j) {
    const Module& term = tilting ? wit[j].target : wit[j].source;
    if (auto aw = add_witness(term, t)) add.push_back({{"into", w.morphism(aw->into)}, {"back", w.morphism(aw->back)}});
  }
  o.certificate = {{"kind", "tilting"}, {"witness", wj}, {"add", add}};
  o.assumptions = r.assumptions;
  o.verdict = r.pass();
  return o;
}

Outcome cmd_cdg_validate(const Document& doc, const Args& a, CertWriter& w) {
  DeltaPtr ext = doc.cdg(a.str(0));
  Outcome o;
  json mods = json::array();
  json parts = json::array({json{{"kind", "algebra"}, {"algebra", w.algebra(ext->a)}}});
  bool ok = !validate_cdg_ring(ext->cdg);
  for (const auto& n : a.rest(1)) {
    Module m = doc.module(n);
    require_cdg_module(ext, m, n);
    CDGModule x = as_cdg(ext, m);
    std::string problem;
    try {
      auto [carrier, d] = graded_to_cdg(x);
      cdg_to_graded(ext, carrier, d);
    } catch (const std::exception& e) {
      problem = e.what();
      ok = false;
    }
    mods.push_back({{"module", n}, {"dim", m.dim()}, {"valid", problem.empty()}, {"problem", problem}});
    parts.push_back({{"kind", "module"}, {"module", w.module(m)}});
  }
  o.result = {{"value", ok}, {"ring_valid", !validate_cdg_ring(ext->cdg)}, {"modules", mods}};
  o.certificate = {{"kind", "bundle"}, {"parts", parts}};
  o.verdict = ok;
  return o;
}

Outcome cmd_delta_ext(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(1);
  DeltaPtr ext = doc.cdg(a.str(0));
  const Algebra& al = *ext->a;
  Outcome o;
  auto [lo, hi] = al.window();
  auto [rlo, rhi] = ext->cdg.r->window();
  o.result = {{"value", al.dim()},
              {"dim_r", ext->dim_r()},
              {"degrees", al.degrees()},
              {"labels", al.labels()},
              {"window", {lo, hi}},
              {"window_r", {rlo, rhi}},
              {"delta", vec_json(ext->delta)},
              {"delta_squared", vec_json(al.multiply(ext->delta, ext->delta))},
              {"valid", !validate_algebra(al)}};
  o.certificate = {{"kind", "algebra"}, {"algebra", w.algebra(ext->a)}};
  o.verdict = al.dim() == 2 * ext->dim_r() && !validate_algebra(al);
  return o;
}

Outcome cmd_totalize(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(4);
  DeltaPtr ext = doc.cdg(a.str(0));
  ModuleMorphism f = doc.morphism(a.str(1)), g = doc.morphism(a.str(2));
  const std::size_t k = a.size() > 3 ? a.num(3) : 0;
  require_cdg_module(ext, f.source, a.str(1));
  TotalizationReport r = verify_totalization_acyclicity(ext, {f, g}, k);
  Outcome o;
  o.result = {{"value", r.pass()}, {"dim", r.tot.dim()}, {"contraacyclic", decision_json(r.contra)},
              {"coacyclic", decision_json(r.co)}, {"certificate", r.certificate}};
  if (r.contra.method == "filtration" && r.sub_homotopy && r.quotient_homotopy) {
    o.certificate = {{"kind", "filtration"},
                     {"module", w.module(r.tot.graded)},
                     {"sub", matrix_json(r.filtration)},
                     {"delta", vec_json(ext->delta)},
                     {"r_dim", ext->dim_r()},
                     {"homotopies", json::array({matrix_json(*r.sub_homotopy), matrix_json(*r.quotient_homotopy)})}};
  } else {
    o.certificate = {{"kind", "bundle"},
                     {"parts", json::array({decision_cert(w, r.tot, r.contra), decision_cert(w, r.tot, r.co)})}};
  }
  o.verdict = r.pass();
  return o;
}

Outcome cmd_contractible(const Document& doc, const Args& a, CertWriter& w) {
  a.at_most(2);
  DeltaPtr ext = doc.cdg(a.str(0));
  Module m = doc.module(a.str(1));
  require_cdg_module(ext, m, a.str(1));
  CDGModule x = as_cdg(ext, m);
  auto t = contracting_homotopy(x);
  Outcome o;
  o.result = {{"value", t.has_value()}};
  o.certificate = t ? homotopy_cert(w, x, *t) : json{{"kind", "none"}};
  o.verdict = t.has_value();
  return o;
}

Outcome cmd_acyclic(const Document& doc, const Args& a, CertWriter& w, bool contra) {
  a.at_most(3);
  DeltaPtr ext = doc.cdg(a.str(0));
  Module m = doc.module(a.str(1));
  require_cdg_module(ext, m, a.str(1));
  CDGModule x = as_cdg(ext, m);
  AcyclicityDecision d = contra ? is_contraacyclic(ext, x, a.num(2)) : is_coacyclic(ext, x, a.num(2));
  Outcome o;
  o.result = decision_json(d);
  o.result["value"] = d.member;
  o.certificate = decision_cert(w, x, d);
  o.verdict = d.member;
  return o;
}

Outcome cmd_scan(const Document& doc, const Args& a, CertWriter& w) {
  DeltaPtr ext = doc.cdg(a.str(0));
  const std::size_t k = a.num(1);
  Outcome o;
  json rows = json::array(), parts = json::array();
  bool agree = true;
  for (const auto& n : a.rest(2)) {
    Module m = doc.module(n);
    require_cdg_module(ext, m, n);
    CDGModule x = as_cdg(ext, m);
    AcyclicityDecision c = is_contraacyclic(ext, x, k), co = is_coacyclic(ext, x, k);
    agree = agree && c.member == co.member;
    rows.push_back({{"module", n}, {"contraacyclic", c.member}, {"coacyclic", co.member}});
    parts.push_back(decision_cert(w, x, c));
    parts.push_back(decision_cert(w, x, co));
  }
  o.result = {{"value", agree}, {"rows", rows}};
  o.certificate = {{"kind", "bundle"}, {"parts", parts}};
  o.verdict = agree;
  return o;
}

Outcome dispatch(const Document& doc, const Args& a, CertWriter& w) {
  const std::string& c = a.name();
  if (c == "validate") return cmd_validate(doc, a, w);
  if (c == "ext") return cmd_ext(doc, a, w, false);
  if (c == "tor") return cmd_ext(doc, a, w, true);
  if (c == "hom") return cmd_hom(doc, a, w);
  if (c == "salce") return cmd_salce(doc, a, w);
  if (c == "rd") return cmd_reldim(doc, a, w, true);
  if (c == "cd") return cmd_reldim(doc, a, w, false);
  if (c == "q-tower") return cmd_tower(doc, a, w, true);
  if (c == "w-tower") return cmd_tower(doc, a, w, false);
  if (c == "membership") return cmd_membership(doc, a, w);
  if (c == "bongartz") return cmd_bongartz(doc, a, w, false);
  if (c == "dual-bongartz") return cmd_bongartz(doc, a, w, true);
  if (c == "tilting-check") return cmd_tilting(doc, a, w, true);
  if (c == "cotilting-check") return cmd_tilting(doc, a, w, false);
  if (c == "cdg-validate") return cmd_cdg_validate(doc, a, w);
  if (c == "delta-ext") return cmd_delta_ext(doc, a, w);
  if (c == "totalize") return cmd_totalize(doc, a, w);
  if (c == "contractible") return cmd_contractible(doc, a, w);
  if (c == "contraacyclic") return cmd_acyclic(doc, a, w, true);
  if (c == "coacyclic") return cmd_acyclic(doc, a, w, false);
  if (c == "co-eq-contra-scan") return cmd_scan(doc, a, w);
  throw DocumentError("unknown command '" + c + "'");
}

}  // namespace

json run_job(const Document& doc, const JobSpec& job) {
  json rep = {{"id", job.id}, {"command", job.command}};
  try {
    Args args(job.command);
    CertWriter w;
    Outcome o = dispatch(doc, args, w);
    if (!o.result.contains("value")) o.result["value"] = o.verdict;
    bool ok = o.verdict;
    if (job.expect) {
      ok = o.result.contains("value") && o.result.at("value") == *job.expect;
      rep["expect"] = *job.expect;
    }
    rep["status"] = ok ? "pass" : "fail";
    rep["result"] = std::move(o.result);
    rep["certificate"] = o.certificate.is_null() ? json(nullptr) : w.finish(std::move(o.certificate));
    rep["assumptions"] = o.assumptions;
  } catch (const CertificationError& e) {
    rep["status"] = "error";
    rep["error"] = e.what();
    rep["offending_dim"] = e.offending().valid() ? e.offending().dim() : 0;
  } catch (const std::exception& e) {
    rep["status"] = "error";
    rep["error"] = e.what();
  }
  return rep;
}

json run_document(const Document& doc, const std::string& selector, unsigned threads) {
  std::vector<const JobSpec*> chosen;
  if (selector == "all") {
    for (const auto& j : doc.jobs()) chosen.push_back(&j);
  } else {
    std::set<std::string> want;
    std::stringstream ss(selector);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) want.insert(id);
    for (const auto& j : doc.jobs())
      if (want.erase(j.id)) chosen.push_back(&j);
    if (!want.empty()) throw DocumentError("jobs: unknown job id '" + *want.begin() + "'");
  }
  std::vector<json> out(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) out[i] = run_job(doc, *chosen[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chosen.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  json reports = json::array();
  std::size_t pass = 0, fail = 0, error = 0;
  for (auto& r : out) {
    const std::string s = r.at("status");
    (s == "pass" ? pass : s == "fail" ? fail : error)++;
    reports.push_back(std::move(r));
  }
  return {{"reports", std::move(reports)}, {"summary", {{"status", fail + error == 0 ? "pass" : "fail"}, {"pass", pass}, {"fail", fail}, {"error", error}}}};
}

json recheck_reports(const json& stream) {
  json out = json::array();
  std::size_t ok = 0, bad = 0;
  for (const auto& r : stream.at("reports")) {
    json e = {{"id", r.at("id")}};
    if (!r.contains("certificate") || r.at("certificate").is_null()) {
      e["status"] = r.value("status", "") == "error" ? "no-certificate" : "rejected";
      e["problems"] = json::array({"report carries no certificate"});
    } else {
      auto problems = recheck_certificate(r.at("certificate"));
      e["status"] = problems.empty() ? "verified" : "rejected";
      e["problems"] = problems;
    }
    (e.at("status") == "verified" ? ok : bad)++;
    out.push_back(std::move(e));
  }
  return {{"rechecks", std::move(out)}, {"summary", {{"verified", ok}, {"other", bad}}}};
}

bool all_passed(const json& stream) {
  if (stream.contains("rechecks")) {
    for (const auto& r : stream.at("rechecks"))
      if (r.at("status") != "verified") return false;
    return true;
  }
  for (const auto& r : stream.at("reports"))
    if (r.at("status") != "pass") return false;
  return true;
}

}  // namespace ctw::wb
