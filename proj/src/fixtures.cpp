#include "lenfact/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "lenfact/error.hpp"
#include "lenfact/invariants.hpp"
#include "lenfact/krull.hpp"

namespace lenfact {

MonoidSpec numerical(std::initializer_list<std::int64_t> gens) {
  MonoidSpec s;
  s.kind = MonoidKind::kNumerical;
  s.ambient = AmbientGroup{1, {}};
  for (std::int64_t g : gens) s.generators.push_back({g});
  return s;
}

MonoidSpec interval_monoid(std::int64_t n) {
  MonoidSpec s;
  s.kind = MonoidKind::kNumerical;
  s.ambient = AmbientGroup{1, {}};
  for (std::int64_t g = n; g < 2 * n; ++g) s.generators.push_back({g});
  return s;
}

MonoidSpec diagonal_monoid(std::int64_t r) {
  MonoidSpec s;
  s.kind = MonoidKind::kAffine;
  s.ambient = AmbientGroup{static_cast<std::size_t>(r), {}};
  s.generators.push_back(Vec(r, 1));
  for (std::int64_t j = 0; j < r; ++j) {
    Vec e(r, 0);
    e[j] = r;
    s.generators.push_back(e);
  }
  return s;
}

MonoidSpec torsion_monoid(std::int64_t n) {
  MonoidSpec s;
  s.kind = MonoidKind::kAffineTorsion;
  s.ambient = AmbientGroup{2, {n - 2}};
  s.generators = {{0, 2, 0}, {0, 3, 0}};
  for (std::int64_t k = 3; k <= n; ++k) s.generators.push_back({1, 0, k - 3});
  return s;
}

namespace {

MonoidSpec affine(std::vector<Vec> gens) {
  MonoidSpec s;
  s.kind = MonoidKind::kAffine;
  s.ambient = AmbientGroup{gens.front().size(), {}};
  s.generators = std::move(gens);
  return s;
}

std::vector<Vec> square_base() { return {{0, 3}, {1, 2}, {2, 1}, {3, 0}}; }

std::vector<Vec> plus(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> f;
  f.push_back({"N23", "Cor 3.3, Prop 3.4, Prop 3.5 / <2,3>", numerical({2, 3})});
  for (std::int64_t n : {3, 4, 5})
    f.push_back({"Mn" + std::to_string(n), "Example after Cor 3.3 / n=" + std::to_string(n), interval_monoid(n)});
  f.push_back({"E46", "Example 4.6", affine({{0, 1, 1}, {0, 2, 1}, {1, 2, 3}, {2, 2, 2}, {3, 2, 1}})});
  f.push_back({"M0", "Example 4.7 / M0", affine(square_base())});
  f.push_back({"M1", "Example 4.7 / M1", affine(plus(square_base(), {{1, 1}}))});
  f.push_back({"M2", "Example 4.7 / M2", affine(plus(square_base(), {{2, 2}}))});
  f.push_back({"M3", "Example 4.7 / M3", affine(plus(square_base(), {{0, 2}, {1, 1}, {2, 0}}))});
  for (std::int64_t r : {2, 3})
    f.push_back({"MR" + std::to_string(r), "Example 5.2 / r=" + std::to_string(r), diagonal_monoid(r)});
  for (std::int64_t n : {4, 5})
    f.push_back({"T" + std::to_string(n), "Example 5.5 / n=" + std::to_string(n), torsion_monoid(n)});
  f.push_back({"DEC", "Theorem 4.7 converse / DEC", affine({{1, 1}, {0, 3}, {1, 2}, {2, 1}, {3, 0}})});
  return f;
}

// ---------------------------------------------------------------------------
// Row helpers

std::string atom_set(const Presentation& p, const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t j = 0; j < idx.size(); ++j) s += (j ? "," : "") + vec_to_string(p.atoms[idx[j]]);
  return s + "}";
}

std::string yn(bool b) { return b ? "true" : "false"; }

class Checks {
 public:
  void add(const std::string& name, bool ok) {
    os_ << (first_ ? "" : "; ") << name << (ok ? " ok" : " FAILED");
    first_ = false;
    ok_ &= ok;
  }
  bool ok() const { return ok_; }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
  bool first_ = true;
  bool ok_ = true;
};

SweepBound default_bound(const Presentation& p) { return SweepBound::degree(4 * p.max_degree()); }

// Cross-checks shared by every affine row: LF strategies agree, the lattice
// pure sets match the sweep oracle.
void standard_checks(const Presentation& p, const Classification& c, Checks& ck) {
  LfResult brute = is_length_factorial(p, LfStrategy::kBrute, default_bound(p));
  ck.add("lf rank/kernel/brute", brute.value == c.length_factorial);
  std::int64_t want = witness_sweep_bound(p, c.pure, 4 * p.max_degree());
  std::int64_t bound = tractable_sweep_bound(p, want);
  PureSets oracle = pure_sets_oracle(p, SweepBound::degree(bound), bound < want ? witness_relations(c.pure) : std::vector<Vec>{});
  ck.add("pure lattice/oracle",
         oracle.purely_long == c.pure.purely_long && oracle.purely_short == c.pure.purely_short);
}

void decomposition_checks(const Presentation& p, Checks& ck) {
  Decomposition d = decompose(p, 4 * p.max_degree());
  ck.add("decompose [" + d.construction + "] H HF", d.h_half_factorial);
  ck.add("decompose O proper LF", d.o_proper_length_factorial);
  ck.add("decompose H∩O=0 (" + d.intersection_method + ")", d.trivial_intersection);
}

bool in(const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); }

SuiteRow row_two_generator(const Fixture& f) {
  SuiteRow row{f.id, f.anchor, "LF, not factorial, master lengths {2,3}, Betti {6}, c=c_adj=c_mon=3, c_eq=0", "", "", false};
  Presentation p = normalize_spec(f.spec);
  Classification c = classify(p);
  auto m = master_relation(p);
  BettiSet betti = betti_elements(p, BettiStrategy::kCertified, 0);
  CatenaryMonoidReport cat = catenary_monoid(p, 4 * p.max_degree());
  std::ostringstream os;
  os << "LF " << yn(c.length_factorial) << ", factorial " << yn(c.factorial);
  if (m) os << ", master lengths {" << length(m->w1) << "," << length(m->w2) << "}";
  os << ", Betti {";
  for (std::size_t i = 0; i < betti.elements.size(); ++i) os << (i ? "," : "") << betti.elements[i][0];
  os << "}, c=" << cat.c << " c_adj=" << cat.c_adj << " c_mon=" << cat.c_mon << " c_eq=" << cat.c_eq;
  row.computed = os.str();
  Checks ck;
  standard_checks(p, c, ck);
  BettiSet swept = betti_elements(p, BettiStrategy::kSweep, 4 * p.max_degree());
  ck.add("betti certified/sweep", swept.elements == betti.elements);
  PuiseuxReport pr = puiseux_classify(p);
  ck.add("puiseux (a)-(e)", pr.agree && pr.a);
  decomposition_checks(p, ck);
  row.cross_checks = ck.str();
  row.pass = ck.ok() && c.length_factorial && !c.factorial && m && length(m->w1) == 2 && length(m->w2) == 3 &&
             betti.elements == std::vector<Vec>{{6}} && cat.c == 3 && cat.c_adj == 3 && cat.c_mon == 3 &&
             cat.c_eq == 0 && cat.exact;
  return row;
}

SuiteRow row_interval(const Fixture& f, std::int64_t n) {
  SuiteRow row{f.id, f.anchor,
               "not LF, 2(n+1) = n + (n+2), kernel generating set non-cyclic", "", "", false};
  Presentation p = normalize_spec(f.spec);
  Classification c = classify(p);
  Vec z1(p.size(), 0), z2(p.size(), 0);
  z1[p.atom_index({n + 1})] = 2;
  z2[p.atom_index({n})] = 1;
  z2[p.atom_index({n + 2})] = 1;
  auto zs = factorizations(p, {2 * (n + 1)});
  bool witness = std::count(zs.begin(), zs.end(), z1) && std::count(zs.begin(), zs.end(), z2);
  auto gens = kernel_generating_set(p);
  bool non_proportional = false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Vec& a = gens[i].c;
      const Vec& b = gens[j].c;
      for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t t = s + 1; t < a.size(); ++t) non_proportional |= a[s] * b[t] != a[t] * b[s];
    }
  std::ostringstream os;
  os << "LF " << yn(c.length_factorial) << ", Z(" << 2 * (n + 1) << ") has " << zs.size()
     << " factorizations incl. witness " << yn(witness) << ", generating set size " << gens.size()
     << (non_proportional ? " (non-proportional)" : " (proportional)");
  row.computed = os.str();
  Checks ck;
  standard_checks(p, c, ck);
  PuiseuxReport pr = puiseux_classify(p);
  ck.add("puiseux (a)-(e) all false", pr.agree && !pr.a);
  ck.add("generating set spans sweep", [&] {
    SweepTable t = sweep(p, default_bound(p));
    for (const auto& [x, zz] : t)
      if (!connected_by_moves(zz, gens)) return false;
    return true;
  }());
  row.cross_checks = ck.str();
  row.pass = ck.ok() && !c.length_factorial && witness && gens.size() >= 2 && non_proportional;
  return row;
}

SuiteRow row_e46(const Fixture& f) {
  SuiteRow row{f.id, f.anchor, "a1 purely long, PLS true, LF false", "", "", false};
  Presentation p = normalize_spec(f.spec);
  Classification c = classify(p);
  std::size_t a1 = p.atom_index({0, 1, 1});
  row.computed = "L=" + atom_set(p, c.pure.purely_long) + " S=" + atom_set(p, c.pure.purely_short) +
                 ", PLS " + yn(c.pls) + ", LF " + yn(c.length_factorial);
  Checks ck;
  standard_checks(p, c, ck);
  decomposition_checks(p, ck);
  RelationShapeReport shape = relation_shape_check(p, default_bound(p));
  ck.add("relation shape (" + std::to_string(shape.relations_checked) + " relations)", shape.failures.empty());
  row.cross_checks = ck.str();
  row.pass = ck.ok() && in(c.pure.purely_long, a1) && c.pls && !c.length_factorial;
  return row;
}

SuiteRow row_square(const Fixture& f) {
  Presentation p = normalize_spec(f.spec);
  Classification c = classify(p);
  SuiteRow row{f.id, f.anchor, "", "", "", false};
  bool verdict = false;
  if (f.id == "M0") {
    row.expected = "HF true";
    verdict = c.half_factorial;
  } else if (f.id == "M1") {
    row.expected = "L={(1,1)} S={}";
    verdict = atom_set(p, c.pure.purely_long) == "{(1,1)}" && c.pure.purely_short.empty();
  } else if (f.id == "M2") {
    row.expected = "L={} S={(2,2)}";
    verdict = c.pure.purely_long.empty() && atom_set(p, c.pure.purely_short) == "{(2,2)}";
  } else {
    row.expected = "L={} S={}, HF false";
    verdict = c.pure.purely_long.empty() && c.pure.purely_short.empty() && !c.half_factorial;
  }
  row.computed = "HF " + yn(c.half_factorial) + ", L=" + atom_set(p, c.pure.purely_long) +
                 " S=" + atom_set(p, c.pure.purely_short);
  Checks ck;
  standard_checks(p, c, ck);
  ck.add("atoms = generators", p.size() == f.spec.generators.size());
  row.cross_checks = ck.str();
  row.pass = ck.ok() && verdict;
  return row;
}

SuiteRow row_diagonal(const Fixture& f, std::int64_t r) {
  SuiteRow row{f.id, f.anchor, "HF true, LF false, |A| = r+1 = rank+1", "", "", false};
  Presentation p = normalize_spec(f.spec);
  Classification c = classify(p);
  row.computed = "HF " + yn(c.half_factorial) + ", LF " + yn(c.length_factorial) + ", |A|=" +
                 std::to_string(c.atom_count) + ", rank=" + std::to_string(c.rank);
  Checks ck;
  standard_checks(p, c, ck);
  row.cross_checks = ck.str();
  row.pass = ck.ok() && c.half_factorial && !c.length_factorial &&
             c.atom_count == static_cast<std::size_t>(r + 1) && c.atom_count == c.rank + 1;
  return row;
}

SuiteRow row_torsion(const Fixture& f, std::int64_t n) {
  SuiteRow row{f.id, f.anchor, "a1 in L, a2 in S, PLS true, LF false, (n-2)a3 = (n-2)a4", "", "", false};
  Presentation p = normalize_spec(f.spec);
  Classification c = classify(p);
  std::size_t a1 = p.atom_index({0, 2, 0}), a2 = p.atom_index({0, 3, 0});
  std::size_t a3 = p.atom_index({1, 0, 0}), a4 = p.atom_index({1, 0, 1});
  Vec w(p.size(), 0);
  w[a3] = n - 2;
  w[a4] = -(n - 2);
  bool witness = p.kernel.contains(std::span<const std::int64_t>(w));
  row.computed = "L=" + atom_set(p, c.pure.purely_long) + " S=" + atom_set(p, c.pure.purely_short) + ", PLS " +
                 yn(c.pls) + ", LF " + yn(c.length_factorial) + ", witness in kernel " + yn(witness);
  Checks ck;
  standard_checks(p, c, ck);
  decomposition_checks(p, ck);
  RelationShapeReport shape = relation_shape_check(p, default_bound(p));
  ck.add("relation shape (" + std::to_string(shape.relations_checked) + " relations)", shape.failures.empty());
  row.cross_checks = ck.str();
  row.pass = ck.ok() && in(c.pure.purely_long, a1) && in(c.pure.purely_short, a2) && c.pls &&
             !c.length_factorial && witness;
  return row;
}

SuiteRow row_dec(const Fixture& f) {
  SuiteRow row{f.id, f.anchor, "decompose -> NotPLS; H=<(1,2),(0,3)> factorial; O=<(1,1),(2,1),(3,0)> proper LF",
               "", "", false};
  Presentation p = normalize_spec(f.spec);
  bool not_pls = false;
  try {
    decompose(p, 4 * p.max_degree());
  } catch (const Error& e) {
    not_pls = e.code() == ErrorCode::kNotPLS;
  }
  Presentation h = present({{1, 2}, {0, 3}}, AmbientGroup{2, {}});
  Presentation o = present({{1, 1}, {2, 1}, {3, 0}}, AmbientGroup{2, {}});
  bool h_factorial = is_factorial(h);
  bool o_plf = !is_factorial(o) && is_length_factorial(o, LfStrategy::kKernel).value;
  std::vector<std::size_t> ha, oa;
  for (const Vec& v : h.atoms) ha.push_back(p.atom_index(v));
  for (const Vec& v : o.atoms) oa.push_back(p.atom_index(v));
  std::string method;
  bool trivial = trivial_intersection(p, ha, oa, 4 * p.max_degree(), &method);
  row.computed = "NotPLS " + yn(not_pls) + ", H factorial " + yn(h_factorial) + ", O proper LF " + yn(o_plf) +
                 ", H∩O=0 " + yn(trivial);
  Checks ck;
  Classification c = classify(p);
  standard_checks(p, c, ck);
  ck.add("O lf rank/kernel/brute", is_length_factorial(o, LfStrategy::kRank).value == o_plf &&
                                       is_length_factorial(o, LfStrategy::kBrute, default_bound(o)).value == o_plf);
  ck.add("O one Betti element", betti_elements(o, BettiStrategy::kCertified, 0).elements.size() == 1);
  row.cross_checks = ck.str();
  row.pass = ck.ok() && not_pls && h_factorial && o_plf && trivial;
  return row;
}

SuiteRow row_krull(const std::string& name) {
  const bool short_case = name == "6.2";
  SuiteRow row{short_case ? "K62" : "K63", "Example " + name, "", "", "", false};
  row.expected = short_case ? "S={P^3} L={}, 41 atoms" : "L={PQ} S={}, 37 atoms";
  DedekindReport rep = verify_dedekind_example(name);
  auto names = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
  };
  row.computed = (short_case ? "S=" + names(rep.purely_short) + " L=" + names(rep.purely_long)
                             : "L=" + names(rep.purely_long) + " S=" + names(rep.purely_short)) +
                 ", " + std::to_string(rep.atoms.atoms.size()) + " atoms";
  Checks ck;
  for (const WitnessCheck& w : rep.witnesses)
    ck.add("witness " + w.name, w.in_kernel && w.irredundant && w.length_claim && w.counting_identity);
  ck.add("counting identity on " + std::to_string(rep.identity_checked) + " swept relations",
         rep.identity_checked > 0 && rep.identity_held == rep.identity_checked);
  ck.add("oracle consistent (degree <= " + std::to_string(rep.sweep_bound) + ")", rep.oracle_agrees);
  row.cross_checks = ck.str();
  std::size_t expected_atoms = short_case ? 41 : 37;
  row.pass = ck.ok() && rep.pass && rep.atoms.atoms.size() == expected_atoms;
  return row;
}

SuiteRow row_krull_pls() {
  SuiteRow row{"K62,K63", "Thm 6.5 / K62,K63", "PLS false for both", "", "", false};
  bool a = verify_dedekind_example("6.2").pls, b = verify_dedekind_example("6.3").pls;
  row.computed = "PLS " + yn(a) + ", " + yn(b);
  row.cross_checks = "-";
  row.pass = !a && !b;
  return row;
}

SuiteRow guarded(const std::string& id, const std::string& anchor, const std::function<SuiteRow()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {id, anchor, "", std::string("error: ") + e.what(), "", false};
  }
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

const Fixture& fixture(const std::string& id) {
  for (const Fixture& f : fixtures())
    if (f.id == id) return f;
  throw Error(ErrorCode::kInvalidInput, "unknown fixture " + id);
}

std::vector<SuiteRow> paper_suite() {
  std::vector<std::future<SuiteRow>> jobs;
  auto launch = [&](const std::string& id, const std::string& anchor, std::function<SuiteRow()> fn) {
    jobs.push_back(std::async(std::launch::async, [=] { return guarded(id, anchor, fn); }));
  };
  for (const Fixture& f : fixtures()) {
    const Fixture* fp = &f;
    if (f.id == "N23") launch(f.id, f.anchor, [fp] { return row_two_generator(*fp); });
    else if (f.id.rfind("Mn", 0) == 0) launch(f.id, f.anchor, [fp] { return row_interval(*fp, fp->id[2] - '0'); });
    else if (f.id == "E46") launch(f.id, f.anchor, [fp] { return row_e46(*fp); });
    else if (f.id.rfind("MR", 0) == 0) launch(f.id, f.anchor, [fp] { return row_diagonal(*fp, fp->id[2] - '0'); });
    else if (f.id[0] == 'M') launch(f.id, f.anchor, [fp] { return row_square(*fp); });
    else if (f.id[0] == 'T') launch(f.id, f.anchor, [fp] { return row_torsion(*fp, fp->id[1] - '0'); });
    else if (f.id == "DEC") launch(f.id, f.anchor, [fp] { return row_dec(*fp); });
  }
  launch("K62", "Example 6.2", [] { return row_krull("6.2"); });
  launch("K63", "Example 6.3", [] { return row_krull("6.3"); });
  launch("K62,K63", "Thm 6.5 / K62,K63", [] { return row_krull_pls(); });
  std::vector<SuiteRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

}  // namespace lenfact
