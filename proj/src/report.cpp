#include "lenfact/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lenfact/error.hpp"
#include "lenfact/fixtures.hpp"
#include "lenfact/invariants.hpp"

namespace lenfact {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, "field '" + field + "': " + what);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, what + " is not valid JSON: " + e.what());
  }
}

std::int64_t get_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<std::int64_t>();
}

Vec get_vec(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of integers");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(get_int(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

Rational parse_rational(const std::string& s, const std::string& field) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) bad(field, "expected a fraction such as \"3/4\"");
  if (q.get_den() == 0) bad(field, "zero denominator");
  q.canonicalize();
  return q;
}

AmbientGroup parse_ambient(const Json& doc, const std::string& field) {
  if (!doc.is_object()) bad(field, "expected an object");
  AmbientGroup g;
  if (!doc.contains("free_rank")) bad(field + ".free_rank", "missing");
  std::int64_t d = get_int(doc["free_rank"], field + ".free_rank");
  if (d < 0) bad(field + ".free_rank", "must be >= 0");
  g.free_rank = static_cast<std::size_t>(d);
  if (doc.contains("torsion")) g.torsion = get_vec(doc["torsion"], field + ".torsion");
  return g;
}

MonoidKind parse_kind(const Json& j) {
  if (!j.is_string()) bad("kind", "expected a string");
  const std::string k = j.get<std::string>();
  if (k == "numerical") return MonoidKind::kNumerical;
  if (k == "puiseux") return MonoidKind::kPuiseux;
  if (k == "affine") return MonoidKind::kAffine;
  if (k == "affine_torsion") return MonoidKind::kAffineTorsion;
  if (k == "krull") return MonoidKind::kKrull;
  bad("kind", "unknown kind '" + k + "' (numerical, puiseux, affine, affine_torsion, krull)");
}

PrimeDistribution distribution_from(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kInvalidInput, "distribution document must be a JSON object");
  PrimeDistribution d;
  if (!doc.contains("class_group")) bad("class_group", "missing");
  AmbientGroup g = parse_ambient(doc["class_group"], "class_group");
  d.group = ClassGroup{g.free_rank, g.torsion};
  for (std::size_t j = 0; j < g.torsion.size(); ++j)
    if (g.torsion[j] < 1) bad("class_group.torsion[" + std::to_string(j) + "]", "modulus must be >= 1");
  if (!doc.contains("primes") || !doc["primes"].is_array()) bad("primes", "expected an array");
  const Json& primes = doc["primes"];
  static const std::string letters = "PQRSTUVWXYZABCDEFGHIJKLMNO";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::string f = "primes[" + std::to_string(i) + "]";
    if (!primes[i].is_object()) bad(f, "expected an object");
    PrimeFamily fam;
    if (!primes[i].contains("class")) bad(f + ".class", "missing");
    fam.cls = get_vec(primes[i]["class"], f + ".class");
    if (fam.cls.size() != d.group.dim()) bad(f + ".class", "dimension differs from the class group");
    fam.count = primes[i].contains("count") ? get_int(primes[i]["count"], f + ".count") : 1;
    if (fam.count < 1) bad(f + ".count", "must be >= 1");
    if (primes[i].contains("label")) {
      if (!primes[i]["label"].is_string() || primes[i]["label"].get<std::string>().empty())
        bad(f + ".label", "expected a nonempty string");
      fam.name = primes[i]["label"].get<std::string>();
    } else {
      fam.name = i < letters.size() ? std::string(1, letters[i]) : "F" + std::to_string(i + 1);
    }
    d.families.push_back(std::move(fam));
  }
  if (d.families.empty()) bad("primes", "no primes given");
  if (doc.contains("degree_bound")) {
    d.degree_bound = get_int(doc["degree_bound"], "degree_bound");
    if (*d.degree_bound < 1) bad("degree_bound", "must be >= 1");
  }
  return d;
}

MonoidSpec spec_from(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kInvalidInput, "input document must be a JSON object");
  if (!doc.contains("kind")) bad("kind", "missing");
  MonoidSpec s;
  s.kind = parse_kind(doc["kind"]);
  if (s.kind == MonoidKind::kKrull && !doc.contains("generators")) {
    IdealAtomList atoms = ideal_atoms(distribution_from(doc));
    s.ambient = AmbientGroup{atoms.primes.size(), {}};
    for (const IdealAtom& a : atoms.atoms) s.generators.push_back(a.exponents);
    return s;
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) bad("generators", "expected an array");
  const Json& gens = doc["generators"];
  if (gens.empty()) throw Error(ErrorCode::kEmptyGenerators, "generator list is empty");
  switch (s.kind) {
    case MonoidKind::kNumerical:
      s.ambient = AmbientGroup{1, {}};
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string f = "generators[" + std::to_string(i) + "]";
        Vec v = gens[i].is_array() ? get_vec(gens[i], f) : Vec{get_int(gens[i], f)};
        if (v.size() != 1 || v[0] <= 0) bad(f, "numerical generators are positive integers");
        s.generators.push_back(v);
      }
      break;
    case MonoidKind::kPuiseux:
      s.ambient = AmbientGroup{1, {}};
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string f = "generators[" + std::to_string(i) + "]";
        Rational q;
        if (gens[i].is_string()) q = parse_rational(gens[i].get<std::string>(), f);
        else q = Rational(Integer(get_int(gens[i], f)));
        if (q <= 0) throw Error(ErrorCode::kNonPositivePuiseuxGenerator, f + " = " + q.get_str() + " is not positive");
        s.rationals.push_back(q);
      }
      break;
    default:
      if (doc.contains("ambient")) {
        s.ambient = parse_ambient(doc["ambient"], "ambient");
      } else {
        if (s.kind == MonoidKind::kAffineTorsion) bad("ambient", "required for affine_torsion");
        if (!gens[0].is_array()) bad("generators[0]", "expected an array of integers");
        s.ambient = AmbientGroup{gens[0].size(), {}};
      }
      for (std::size_t j = 0; j < s.ambient.torsion.size(); ++j)
        if (s.ambient.torsion[j] < 2) bad("ambient.torsion[" + std::to_string(j) + "]", "modulus must be >= 2");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string f = "generators[" + std::to_string(i) + "]";
        Vec v = get_vec(gens[i], f);
        if (v.size() != s.ambient.dim())
          bad(f, "has " + std::to_string(v.size()) + " entries, ambient dimension is " + std::to_string(s.ambient.dim()));
        s.generators.push_back(v);
      }
  }
  return s;
}

Json echo(const MonoidSpec& s) {
  Json j;
  j["kind"] = monoid_kind_name(s.kind);
  Json gens = Json::array();
  if (s.kind == MonoidKind::kPuiseux) {
    for (const Rational& q : s.rationals) gens.push_back(q.get_str());
  } else if (s.kind == MonoidKind::kNumerical) {
    for (const Vec& v : s.generators) gens.push_back(v[0]);
  } else {
    for (const Vec& v : s.generators) gens.push_back(v);
  }
  j["generators"] = gens;
  j["ambient"] = {{"free_rank", s.ambient.free_rank}, {"torsion", s.ambient.torsion}};
  return j;
}

// ---------------------------------------------------------------------------
// Report pieces

std::string rational_str(const Rational& q) { return q.get_str(); }

Json atom_json(const Presentation& p, const Vec& a) {
  if (p.scale != 1) {
    Rational q(Integer(static_cast<long>(a[0])), p.scale);
    q.canonicalize();
    return rational_str(q);
  }
  return a;
}

Json atom_list(const Presentation& p, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(atom_json(p, p.atoms[i]));
  return out;
}

Json factorization_json(const Factorization& z) {
  return {{"exponents", z}, {"length", length(z)}};
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["ambient"] = {{"free_rank", p.ambient.free_rank}, {"torsion", p.ambient.torsion}};
  Json atoms = Json::array();
  for (const Vec& a : p.atoms) atoms.push_back(atom_json(p, a));
  j["atoms"] = atoms;
  if (p.scale != 1) {
    j["scale"] = p.scale.get_str();
    j["scaled_atoms"] = p.atoms;
  }
  j["grading"] = p.grading.functional;
  j["kernel_rank"] = p.kernel.rank();
  j["rank"] = gp_rank(p);
  return j;
}

Json sublattice_json(const Sublattice2& s) {
  Json j;
  j["rank"] = s.rank;
  if (s.generator) {
    j["generator"] = {s.generator->first.get_str(), s.generator->second.get_str()};
    j["multiplier"] = s.multiplier.get_str();
  }
  Json basis = Json::array();
  for (const auto& [x, y] : s.hermite_basis) basis.push_back({x.get_str(), y.get_str()});
  j["hermite_basis"] = basis;
  return j;
}

Json relation_json(const Factorization& a, const Factorization& b) {
  return {{"left", factorization_json(a)}, {"right", factorization_json(b)}};
}

Json catenary_json(const CatenaryReport& r) {
  return {{"c", r.c}, {"c_eq", r.c_eq}, {"c_adj", r.c_adj}, {"c_mon", r.c_mon}};
}

struct Context {
  const RunOptions& opt;
  Json report;
  std::vector<std::string> disagreements;
  std::vector<std::string> warnings;

  bool lattice() const { return opt.strategy != "brute"; }
  bool brute() const { return opt.strategy != "lattice"; }
  bool both() const { return opt.strategy == "all"; }
  void disagree(const std::string& what) { disagreements.push_back(what); }
};

std::int64_t bound_for(const Presentation& p, const RunOptions& opt) {
  return opt.bound ? *opt.bound : 4 * p.max_degree();
}

Vec parse_element(const Presentation& p, const MonoidSpec& spec, const std::string& text) {
  Json j = parse_json(text, "--element");
  Vec x;
  if (j.is_string()) {
    if (spec.kind != MonoidKind::kPuiseux) bad("element", "fractions are only meaningful for puiseux monoids");
    Rational q = parse_rational(j.get<std::string>(), "element") * Rational(p.scale);
    q.canonicalize();
    if (q.get_den() != 1) throw Error(ErrorCode::kElementNotInMonoid, text + " is not in the monoid");
    x = {to_int64(q.get_num())};
  } else if (j.is_array()) {
    x = get_vec(j, "element");
  } else {
    x = {get_int(j, "element")};
    if (spec.kind == MonoidKind::kPuiseux) x[0] = to_int64(Integer(static_cast<long>(x[0])) * p.scale);
  }
  if (x.size() != p.ambient.dim())
    bad("element", "has " + std::to_string(x.size()) + " entries, ambient dimension is " + std::to_string(p.ambient.dim()));
  p.ambient.canonicalize(x);
  return x;
}

void pure_section(Context& ctx, const Presentation& p, const PureSets& lattice, std::int64_t bound, bool consistent_only) {
  Json j;
  if (ctx.lattice()) {
    j["lattice"] = {{"purely_long", atom_list(p, lattice.purely_long)},
                    {"purely_short", atom_list(p, lattice.purely_short)}};
    Json sigs = Json::array();
    for (std::size_t i = 0; i < lattice.signatures.size(); ++i) {
      const AtomSignature& s = lattice.signatures[i];
      Json e = {{"atom", atom_json(p, p.atoms[i])}, {"verdict", pure_kind_name(s.verdict)},
                {"signature", sublattice_json(s.lattice)}};
      if (!s.witnesses.empty()) e["witnesses"] = s.witnesses;
      sigs.push_back(e);
    }
    j["signatures"] = sigs;
  }
  if (ctx.brute()) {
    // Sweep far enough to meet the signature witnesses where that stays
    // tractable; witnesses past the sweep join as separately checked
    // relations.
    std::vector<Vec> extra;
    if (!consistent_only) {
      std::int64_t want = witness_sweep_bound(p, lattice, bound);
      bound = std::max(bound, tractable_sweep_bound(p, want));
      if (bound < want) {
        extra = witness_relations(lattice);
        ctx.warnings.push_back("pure-set oracle sweep capped at grading " + std::to_string(bound) + " (witnesses reach " +
                               std::to_string(want) + "); witness relations are checked directly");
      }
    }
    PureSets oracle = pure_sets_oracle(p, SweepBound::degree(bound), extra);
    j["oracle"] = {{"purely_long", atom_list(p, oracle.purely_long)},
                   {"purely_short", atom_list(p, oracle.purely_short)},
                   {"bound", bound}};
    if (ctx.both()) {
      bool agree;
      if (consistent_only) {
        // A too-small sweep may only over-report pure atoms.
        auto sub = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
          return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        agree = sub(lattice.purely_long, oracle.purely_long) && sub(lattice.purely_short, oracle.purely_short);
        if (agree && (oracle.purely_long != lattice.purely_long || oracle.purely_short != lattice.purely_short))
          ctx.warnings.push_back("pure-set oracle at bound " + std::to_string(bound) +
                                 " over-reports pure atoms; the lattice witnesses refute them");
      } else {
        agree = oracle.purely_long == lattice.purely_long && oracle.purely_short == lattice.purely_short;
      }
      if (!agree) ctx.disagree("pure sets: signature lattice vs relation-sweep oracle at bound " + std::to_string(bound));
    }
  }
  ctx.report["pure"] = j;
}

void cmd_classify(Context& ctx, const Presentation& p, const MonoidSpec& spec) {
  const std::int64_t bound = bound_for(p, ctx.opt);
  Classification c = classify(p);
  ctx.report["classification"] = {{"factorial", c.factorial},
                                  {"half_factorial", c.half_factorial},
                                  {"length_factorial", c.length_factorial},
                                  {"proper_length_factorial", c.proper_length_factorial},
                                  {"pls", c.pls},
                                  {"atom_count", c.atom_count},
                                  {"rank", c.rank},
                                  {"torsion_free", c.torsion_free}};
  Json lf;
  if (ctx.lattice()) {
    lf["rank"] = is_length_factorial(p, LfStrategy::kRank).value;
    lf["kernel"] = c.lf.value;
  }
  if (ctx.brute()) {
    LfResult b = is_length_factorial(p, LfStrategy::kBrute, SweepBound::degree(bound));
    lf["brute"] = {{"value", b.value}, {"bound", bound}, {"exact", b.exact}};
    if (ctx.both() && b.value != c.length_factorial) ctx.disagree("length-factorial: brute sweep vs exact deciders");
  }
  ctx.report["length_factorial_strategies"] = lf;
  pure_section(ctx, p, c.pure, bound, false);

  Json certs = Json::array();
  for (const Certificate& cert : c.certificates) certs.push_back({{"name", cert.name}, {"detail", cert.detail}});
  ctx.report["certificates"] = certs;

  Json betti;
  BettiSet cert = betti_elements(p, BettiStrategy::kCertified, 0);
  betti["certified"] = cert.elements;
  if (ctx.brute()) {
    BettiSet sw = betti_elements(p, BettiStrategy::kSweep, bound);
    betti["sweep"] = {{"elements", sw.elements}, {"bound", bound}};
    for (const std::string& w : sw.warnings) ctx.warnings.push_back(w);
    std::vector<Vec> expected;
    for (const Vec& x : cert.elements)
      if (p.degree(x) <= bound) expected.push_back(x);
    if (ctx.both() && expected != sw.elements) ctx.disagree("Betti elements: certified vs sweep");
  }
  ctx.report["betti"] = betti;

  CatenaryMonoidReport cat = catenary_monoid(p, bound);
  ctx.report["catenary"] = {{"c", cat.c},     {"c_eq", cat.c_eq},   {"c_adj", cat.c_adj},
                            {"c_mon", cat.c_mon}, {"exact", cat.exact}, {"bound", bound}};
  for (const std::string& w : cat.warnings) ctx.warnings.push_back(w);

  if (spec.kind == MonoidKind::kNumerical || spec.kind == MonoidKind::kPuiseux) {
    PuiseuxReport r = puiseux_classify(p);
    Json L = Json::array(), S = Json::array();
    for (const Rational& q : r.purely_long) L.push_back(rational_str(q));
    for (const Rational& q : r.purely_short) S.push_back(rational_str(q));
    ctx.report["puiseux"] = {{"a_proper_lf", r.a}, {"b_pls", r.b}, {"c_inf_long_and_sup_short", r.c},
                             {"d_inf_long_or_sup_short", r.d}, {"e_two_atoms", r.e}, {"agree", r.agree},
                             {"purely_long", L}, {"purely_short", S}};
    if (!r.agree) ctx.disagree("puiseux statements (a)-(e) disagree");
  }
}

void cmd_factorize(Context& ctx, const Presentation& p, const MonoidSpec& spec) {
  if (!ctx.opt.element) bad("element", "factorize needs --element");
  Vec x = parse_element(p, spec, *ctx.opt.element);
  auto zs = factorizations(p, x);
  if (zs.empty()) throw Error(ErrorCode::kElementNotInMonoid, *ctx.opt.element + " is not in the monoid");
  Json list = Json::array();
  for (const Factorization& z : zs) list.push_back(factorization_json(z));
  ctx.report["element"] = x;
  ctx.report["count"] = zs.size();
  ctx.report["factorizations"] = list;
}

void cmd_lengths(Context& ctx, const Presentation& p, const MonoidSpec& spec) {
  if (ctx.opt.element) {
    Vec x = parse_element(p, spec, *ctx.opt.element);
    auto l = length_set(p, x);
    if (l.empty()) throw Error(ErrorCode::kElementNotInMonoid, *ctx.opt.element + " is not in the monoid");
    ctx.report["element"] = x;
    ctx.report["lengths"] = l;
    return;
  }
  const std::int64_t bound = bound_for(p, ctx.opt);
  SweepTable t = sweep(p, SweepBound::degree(bound));
  std::vector<Vec> xs;
  for (const auto& [x, zs] : t) xs.push_back(x);
  std::sort(xs.begin(), xs.end(), [&](const Vec& a, const Vec& b) { return graded_less(p.grading, a, b); });
  Json rows = Json::array();
  for (const Vec& x : xs) {
    std::set<std::int64_t> l;
    for (const Factorization& z : t.at(x)) l.insert(length(z));
    rows.push_back({{"element", x}, {"lengths", l}});
  }
  ctx.report["bound"] = bound;
  ctx.report["length_sets"] = rows;
}

void cmd_betti(Context& ctx, const Presentation& p) {
  const std::int64_t bound = bound_for(p, ctx.opt);
  BettiSet cert;
  if (ctx.lattice()) {
    cert = betti_elements(p, BettiStrategy::kCertified, 0);
    Json gens = Json::array();
    for (const Relation& r : kernel_generating_set(p)) gens.push_back(r.c);
    ctx.report["certified"] = {{"elements", cert.elements}, {"generating_set", gens}};
    Json mus = Json::array();
    for (const Vec& x : cert.elements) mus.push_back({{"element", x}, {"mu", mu(p, x)}});
    ctx.report["mu"] = mus;
  }
  if (ctx.brute()) {
    BettiSet sw = betti_elements(p, BettiStrategy::kSweep, bound);
    ctx.report["sweep"] = {{"elements", sw.elements}, {"bound", bound}};
    for (const std::string& w : sw.warnings) ctx.warnings.push_back(w);
    if (ctx.both()) {
      std::vector<Vec> expected;
      for (const Vec& x : cert.elements)
        if (p.degree(x) <= bound) expected.push_back(x);
      if (expected != sw.elements) ctx.disagree("Betti elements: certified vs sweep");
    }
  }
  if (auto m = master_relation(p)) ctx.report["master_relation"] = relation_json(m->w1, m->w2);
}

void cmd_catenary(Context& ctx, const Presentation& p, const MonoidSpec& spec) {
  if (ctx.opt.element) {
    Vec x = parse_element(p, spec, *ctx.opt.element);
    CatenaryReport r = catenary_element(p, x);
    ctx.report["element"] = r.element;
    ctx.report["catenary"] = catenary_json(r);
    if (ctx.brute()) {
      std::int64_t by_def = monotone_catenary_by_definition(factorizations(p, x));
      ctx.report["c_mon_by_definition"] = by_def;
      if (ctx.both() && by_def != r.c_mon) ctx.disagree("c_mon: max(c_eq, c_adj) vs definition");
    }
    return;
  }
  const std::int64_t bound = bound_for(p, ctx.opt);
  CatenaryMonoidReport cat = catenary_monoid(p, bound);
  ctx.report["catenary"] = {{"c", cat.c},     {"c_eq", cat.c_eq},   {"c_adj", cat.c_adj},
                            {"c_mon", cat.c_mon}, {"exact", cat.exact}, {"bound", bound}};
  for (const std::string& w : cat.warnings) ctx.warnings.push_back(w);
}

void cmd_pure(Context& ctx, const Presentation& p) {
  pure_section(ctx, p, pure_sets(p), bound_for(p, ctx.opt), false);
}

void cmd_decompose(Context& ctx, const Presentation& p) {
  const std::int64_t bound = bound_for(p, ctx.opt);
  Decomposition d = decompose(p, bound);
  ctx.report["o_atoms"] = atom_list(p, d.o_atoms);
  ctx.report["h_atoms"] = atom_list(p, d.h_atoms);
  ctx.report["checks"] = {{"h_half_factorial", d.h_half_factorial},
                          {"o_proper_length_factorial", d.o_proper_length_factorial},
                          {"trivial_intersection", d.trivial_intersection},
                          {"intersection_method", d.intersection_method},
                          {"construction", d.construction}};
  if (!d.h_half_factorial || !d.o_proper_length_factorial || !d.trivial_intersection)
    throw Error(ErrorCode::kAssertionFailed, "decomposition checks failed");
  RelationShapeReport shape = relation_shape_check(p, SweepBound::degree(bound));
  Json balanced = Json::array();
  for (const Relation& r : shape.balanced_generators) balanced.push_back(r.c);
  ctx.report["relation_shape"] = {{"anchor_atom", atom_json(p, p.atoms[shape.anchor_atom])},
                                  {"multiplicity", shape.multiplicity},
                                  {"w1", factorization_json(shape.w1)},
                                  {"w2", factorization_json(shape.w2)},
                                  {"balanced_generators", balanced},
                                  {"relations_checked", shape.relations_checked},
                                  {"unbalanced_checked", shape.unbalanced_checked},
                                  {"bound", bound},
                                  {"failures", shape.failures},
                                  {"notes", shape.notes}};
  if (!shape.failures.empty()) ctx.disagree("relation shape check failed");
}

Json ideal_atoms_json(const IdealAtomList& atoms) {
  Json primes = Json::array();
  for (const Prime& pr : atoms.primes) primes.push_back({{"label", pr.label}, {"class", pr.cls}});
  Json list = Json::array();
  for (const IdealAtom& a : atoms.atoms)
    list.push_back({{"name", a.name}, {"type", a.type_tag}, {"degree", a.degree}, {"exponents", a.exponents}});
  Json census_j = Json::array();
  for (const auto& [tag, n] : census(atoms)) census_j.push_back({{"type", tag}, {"count", n}});
  return {{"primes", primes},
          {"degree_bound", atoms.degree_bound},
          {"complete", atoms.complete},
          {"atom_count", atoms.atoms.size()},
          {"census", census_j},
          {"atoms", list}};
}

void cmd_krull(Context& ctx, const Json& doc) {
  if (doc.is_object() && doc.contains("example")) {
    if (!doc["example"].is_string()) bad("example", "expected \"6.2\" or \"6.3\"");
    DedekindReport r = verify_dedekind_example(doc["example"].get<std::string>());
    ctx.report["model"] = ideal_atoms_json(r.atoms);
    ctx.report["purely_long"] = r.purely_long;
    ctx.report["purely_short"] = r.purely_short;
    ctx.report["pls"] = r.pls;
    Json w = Json::array();
    for (const WitnessCheck& c : r.witnesses)
      w.push_back({{"name", c.name}, {"left", c.left}, {"right", c.right}, {"left_length", c.left_length},
                   {"right_length", c.right_length}, {"in_kernel", c.in_kernel}, {"irredundant", c.irredundant},
                   {"length_claim", c.length_claim}, {"counting_identity", c.counting_identity}});
    ctx.report["witnesses"] = w;
    ctx.report["swept_identity"] = {{"checked", r.identity_checked}, {"held", r.identity_held}, {"bound", r.sweep_bound}};
    ctx.report["oracle_consistent"] = r.oracle_agrees;
    ctx.report["pass"] = r.pass;
    if (!r.pass) ctx.disagree("Dedekind example verification failed");
    return;
  }
  PrimeDistribution dist = distribution_from(doc);
  IdealAtomList atoms = ideal_atoms(dist);
  ctx.report["model"] = ideal_atoms_json(atoms);
  if (!atoms.complete) ctx.warnings.push_back("atom list complete only up to degree " + std::to_string(atoms.degree_bound));
  Presentation p = to_presentation(atoms);
  PureSets pure = pure_sets(p);
  auto names = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx)
      for (const IdealAtom& a : atoms.atoms)
        if (a.exponents == p.atoms[i]) out.push_back(a.name);
    return out;
  };
  ctx.report["purely_long"] = names(pure.purely_long);
  ctx.report["purely_short"] = names(pure.purely_short);
  ctx.report["pls"] = !pure.purely_long.empty() && !pure.purely_short.empty();
  // Truncated models have many atoms; the oracle defaults to a smaller sweep.
  RunOptions local = ctx.opt;
  if (!local.bound) local.bound = 3 * p.max_degree();
  Context sub{local, Json::object(), {}, {}};
  pure_section(sub, p, pure, *local.bound, true);
  ctx.report["pure"] = sub.report["pure"];
  for (auto& d : sub.disagreements) ctx.disagree(d);
  for (auto& w : sub.warnings) ctx.warnings.push_back(w);
}

// ---------------------------------------------------------------------------
// Text rendering

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    os << pad << key << ":";
    bool nested_objects = value.is_array() && !value.empty() &&
                          std::any_of(value.begin(), value.end(), [](const Json& e) { return e.is_object(); });
    if (value.is_object() && !value.empty()) {
      os << "\n";
      render(os, value, indent + 2);
    } else if (nested_objects) {
      os << "\n";
      for (const Json& e : value) {
        if (e.is_object()) {
          std::ostringstream inner;
          render(inner, e, indent + 4);
          std::string s = inner.str();
          s.replace(indent + 2, 2, "- ");
          os << s;
        } else {
          os << pad << "  - " << e.dump() << "\n";
        }
      }
    } else if (value.is_string()) {
      os << " " << value.get<std::string>() << "\n";
    } else {
      os << " " << value.dump() << "\n";
    }
  }
}

std::string suite_text(const std::vector<SuiteRow>& rows) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const SuiteRow& r : rows) {
    passed += r.pass;
    os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(8) << r.id << " " << r.anchor << "\n"
       << "     expected: " << r.expected << "\n"
       << "     computed: " << r.computed << "\n"
       << "     checks:   " << r.cross_checks << "\n";
  }
  os << passed << "/" << rows.size() << " rows passed\n";
  return os.str();
}

}  // namespace

MonoidSpec parse_monoid_document(const std::string& text) { return spec_from(parse_json(text, "input")); }

PrimeDistribution parse_distribution_document(const std::string& text) {
  return distribution_from(parse_json(text, "input"));
}

std::string echo_monoid_document(const MonoidSpec& spec) { return echo(spec).dump(); }

RunResult run(const std::string& command, const std::string& input, const RunOptions& options) {
  static const std::vector<std::string> commands = {"classify", "factorize", "lengths", "betti",     "catenary",
                                                    "pure",     "decompose", "krull",   "paper-suite"};
  Context ctx{options, Json::object(), {}, {}};
  ctx.report["report_version"] = kReportVersion;
  ctx.report["command"] = command;
  RunResult res;
  const bool json = options.format == "json";
  try {
    if (std::find(commands.begin(), commands.end(), command) == commands.end())
      throw Error(ErrorCode::kInvalidInput, "unknown command '" + command + "'");
    if (options.strategy != "lattice" && options.strategy != "brute" && options.strategy != "all")
      throw Error(ErrorCode::kInvalidInput, "--strategy must be lattice, brute or all");
    if (options.format != "text" && options.format != "json")
      throw Error(ErrorCode::kInvalidInput, "--format must be text or json");
    if (options.bound && *options.bound < 0) throw Error(ErrorCode::kInvalidInput, "--bound must be >= 0");

    if (command == "paper-suite") {
      std::vector<SuiteRow> rows = paper_suite();
      bool ok = std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
      res.exit_code = ok ? kExitOk : kExitAssertion;
      if (!json) {
        res.output = suite_text(rows);
        return res;
      }
      Json arr = Json::array();
      for (const SuiteRow& r : rows)
        arr.push_back({{"id", r.id}, {"anchor", r.anchor}, {"expected", r.expected}, {"computed", r.computed},
                       {"cross_checks", r.cross_checks}, {"pass", r.pass}});
      ctx.report["rows"] = arr;
      ctx.report["passed"] = std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
      ctx.report["total"] = rows.size();
      res.output = ctx.report.dump(2) + "\n";
      return res;
    }

    Json doc = parse_json(input, "input");
    ctx.report["strategy"] = options.strategy;
    if (command == "krull") {
      ctx.report["input"] = doc;
      cmd_krull(ctx, doc);
    } else {
      MonoidSpec spec = spec_from(doc);
      ctx.report["input"] = echo(spec);
      Presentation p = normalize_spec(spec);
      ctx.report["presentation"] = presentation_json(p);
      for (const std::string& w : p.warnings) ctx.warnings.push_back(w);
      if (command == "classify") cmd_classify(ctx, p, spec);
      else if (command == "factorize") cmd_factorize(ctx, p, spec);
      else if (command == "lengths") cmd_lengths(ctx, p, spec);
      else if (command == "betti") cmd_betti(ctx, p);
      else if (command == "catenary") cmd_catenary(ctx, p, spec);
      else if (command == "pure") cmd_pure(ctx, p);
      else cmd_decompose(ctx, p);
    }
    ctx.report["warnings"] = ctx.warnings;
    ctx.report["disagreements"] = ctx.disagreements;
    res.exit_code = ctx.disagreements.empty() ? kExitOk : kExitAssertion;
  } catch (const Error& e) {
    ctx.report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    res.exit_code = e.code() == ErrorCode::kAssertionFailed ? kExitAssertion : kExitInputError;
  } catch (const std::exception& e) {
    ctx.report["error"] = {{"code", "Internal"}, {"message", e.what()}};
    res.exit_code = kExitAssertion;
  }
  if (json) {
    res.output = ctx.report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    render(os, ctx.report, 0);
    res.output = os.str();
  }
  return res;
}

}  // namespace lenfact
