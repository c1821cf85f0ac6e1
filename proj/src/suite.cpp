#include "mfcat/suite.hpp"

#include "mfcat/table3.hpp"

#include <chrono>

namespace mfcat {

CheckReport catalog_soundness(const ADEType& t, int b) {
  CheckReport rep;
  for (int k = 1; k <= t.l; ++k) {
    const GradedMF& g = base_object(t, b, k);
    ++rep.checked;
    std::string tag = t.str() + " M^" + std::to_string(k) + ": ";
    if (Report r = verify_mf(g.mf); !r) rep.fail(tag + r.message);
    if (Report r = verify_grading(g); !r) rep.fail(tag + r.message);
  }
  return rep;
}

CheckReport table3_check(const ADEType& t, int b) {
  CheckReport rep;
  for (int k = 1; k <= t.l; ++k)
    for (int kp = 1; kp <= t.l; ++kp) {
      ++rep.checked;
      Multiset got = hom_multiset(t, b, k, kp), want = golden_multiset(t, k, kp);
      if (got != want)
        rep.fail(t.str() + " C(" + std::to_string(k) + "," + std::to_string(kp) + ") = " + multiset_str(got) +
                 ", reference " + multiset_str(want));
    }
  return rep;
}

CheckReport counting_check(const ADEType& t, int b) {
  CheckReport rep;
  RootSystem rs = positive_roots(t);
  int heart = static_cast<int>(heart_objects(t, b).size());
  ++rep.checked;
  if (heart != rs.count())
    rep.fail(t.str() + " heart has " + std::to_string(heart) + " objects, " + std::to_string(rs.count()) + " roots");
  ++rep.checked;
  if (t.l * t.h() != 2 * rs.count()) rep.fail(t.str() + " l*h/2 differs from the root count");
  for (int k = 1; k <= t.l; ++k) {
    ++rep.checked;
    int nu = grading_data(t, b, k).nu;
    if (nu != rs.highest[k - 1])
      rep.fail(t.str() + " nu_" + std::to_string(k) + " = " + std::to_string(nu) + ", highest root coefficient " +
               std::to_string(rs.highest[k - 1]));
  }
  return rep;
}

CheckReport exceptional_suite(const ADEType& t, int b, int random, unsigned long seed) {
  CheckReport rep;
  DynkinQuiver principal = principal_orientation(t, b);
  rep.merge(strong_exceptionality_check(t, b, principal));
  auto ec = exceptional_collection(t, b, principal);
  Rational lo = make_rational(1, t.h()), hi = make_rational(2, t.h());
  for (const auto& o : ec.objects) {
    ++rep.checked;
    if (o.n != 0) rep.fail(t.str() + " principal collection has n_" + std::to_string(o.k) + " != 0");
    if (o.phase() < lo || o.phase() > hi)
      rep.fail(t.str() + " principal phase " + o.phase().get_str() + " outside [1/h, 2/h]");
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random; ++i) rep.merge(strong_exceptionality_check(t, b, random_orientation(t, rng)));
  return rep;
}

CheckReport jacobi_sample(const std::vector<TypeParam>& types, int count, unsigned long seed) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_type(0, types.size() - 1);
  for (int found = 0, tries = 0; found < count && tries < 100 * count; ++tries) {
    const TypeParam& tp = types[pick_type(rng)];
    const ADEType& t = tp.type;
    std::uniform_int_distribution<int> vertex(1, t.l), gap(0, t.h() - 2), var(0, 2);
    int k = vertex(rng), kp = vertex(rng), c = gap(rng);
    CatalogObject x = build_object(t, tp.b, k, 0);
    long n = 0;
    if (!n_for_phase(t, tp.b, kp, x.phase() + make_rational(c, t.h()), n)) continue;
    CatalogObject y = build_object(t, tp.b, kp, n);
    HomSpace hs(x.gmf, y.gmf);
    if (hs.dim() == 0) continue;
    std::uniform_int_distribution<int> pick(0, hs.dim() - 1);
    int i = pick(rng), v = var(rng);
    ++found;
    ++rep.checked;
    if (Report r = jacobi_annihilation_check(x.gmf, y.gmf, hs.basis()[i], v); !r)
      rep.fail(tp.str() + " Hom(M^" + std::to_string(k) + "_0, M^" + std::to_string(kp) + "_" + std::to_string(n) +
               ") basis " + std::to_string(i) + ", variable " + std::to_string(v) + ": " + r.message);
  }
  if (rep.checked < count) rep.fail("only " + std::to_string(rep.checked) + " nonzero classes sampled");
  return rep;
}

std::vector<SuiteStep> verify_type(const ADEType& t, int b, const std::function<void(const SuiteStep&)>& on_step) {
  PhaseWindow w{Rational(0), Rational(2)};
  std::vector<std::pair<std::string, std::function<CheckReport()>>> steps = {
      {"catalog", [&] { return catalog_soundness(t, b); }},
      {"table3", [&] { return table3_check(t, b); }},
      {"recursion", [&] { return coproduct_recursion_check(t, b); }},
      {"shape", [&] { return multiset_shape_check(t, b); }},
      {"serre", [&] { return serre_duality_check(t, b, w); }},
      {"ar",
       [&] {
         CheckReport r;
         for (int k = 1; k <= t.l; ++k) r.merge(ar_triangle_check(t, b, k, 0));
         return r;
       }},
      {"irreducible", [&] { return irreducible_check(t, b, w); }},
      {"counting", [&] { return counting_check(t, b); }},
      {"stability", [&] { return check_stability_axioms(t, b, w); }},
      {"projectivity", [&] { return projectivity_check(t, b); }},
      {"exceptional", [&] { return exceptional_suite(t, b, 5, 1); }},
      {"jacobi", [&] { return jacobi_sample({{t, b}}, 10, 1); }},
  };
  std::vector<SuiteStep> out;
  for (auto& [name, run] : steps) {
    auto start = std::chrono::steady_clock::now();
    SuiteStep s{name, run(), 0};
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_step) on_step(s);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mfcat
