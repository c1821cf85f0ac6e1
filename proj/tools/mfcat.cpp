// mfcat: command-line front end for the ADE matrix factorization catalog.
//
// Exit codes: 0 success, 1 a check failed, 2 unknown type or parameter,
// 3 malformed vertex, window or orientation, 4 I/O failure.

#include "mfcat/json_io.hpp"
#include "mfcat/suite.hpp"
#include "mfcat/table3.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace mfcat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadType = 2, kBadRange = 3, kIoError = 4 };

struct CliError {
  int code;
  std::string message;
};

struct Common {
  std::string type;
  int b = 1;
  std::string format = "text";
  int threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool need_type = true) {
  auto* opt = cmd->add_option("--type", c.type, "ADE type, e.g. A3, D5, E8");
  if (need_type) opt->required();
  cmd->add_option("--b", c.b, "base vertex of A_l (1..l)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

ADEType parse_type(const Common& c) {
  try {
    ADEType t = ADEType::parse(c.type);
    t.validate();
    if (t.family == Family::A ? (c.b < 1 || c.b > t.l) : c.b != 1)
      throw std::invalid_argument("--b " + std::to_string(c.b) + " is not valid for " + t.str());
    return t;
  } catch (const std::invalid_argument& e) {
    throw CliError{kBadType, e.what()};
  }
}

void check_vertex(const ADEType& t, int k, const char* flag) {
  if (k < 1 || k > t.l)
    throw CliError{kBadRange, std::string(flag) + " " + std::to_string(k) + " is not a vertex of " + t.str()};
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw CliError{kBadRange, "bad rational '" + s + "'"};
  q.canonicalize();
  return q;
}

// "lo..hi", read as the half-open window (lo, hi].
PhaseWindow parse_window(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw CliError{kBadRange, "window must look like lo..hi, got '" + s + "'"};
  PhaseWindow w{parse_rational(s.substr(0, pos)), parse_rational(s.substr(pos + 2))};
  if (!(w.lo < w.hi)) throw CliError{kBadRange, "empty window '" + s + "'"};
  return w;
}

std::string label(const ADEType& t, int b) { return TypeParam{t, b}.str(); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json multiset_json(const Multiset& m) {
  auto a = json::array();
  for (const auto& [c, d] : m) a.push_back({{"c", c}, {"dim", d}});
  return a;
}

int report_exit(const CheckReport& r, const std::string& what) {
  for (const auto& f : r.failures) std::cerr << what << ": " << f << '\n';
  return r.ok() ? kOk : kCheckFailed;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next++) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

int cmd_catalog(const Common& c, const std::string& window) {
  ADEType t = parse_type(c);
  auto objs = enumerate(t, c.b, parse_window(window));
  if (c.format == "json") {
    auto a = json::array();
    for (const auto& o : objs)
      a.push_back({{"k", o.k}, {"n", o.n}, {"phase", o.phase().get_str()}, {"size", o.gmf.size()}, {"nu", o.nu},
                   {"sigma", o.sigma}});
    print_json(a);
  } else {
    if (c.format == "tsv") std::cout << "type\tk\tn\tphase\tsize\n";
    for (const auto& o : objs) {
      if (c.format == "tsv")
        std::cout << label(t, c.b) << '\t' << o.k << '\t' << o.n << '\t' << o.phase().get_str() << '\t'
                  << o.gmf.size() << '\n';
      else
        std::cout << "M^" << o.k << "_" << o.n << "  phase " << o.phase().get_str() << "  size " << o.gmf.size()
                  << '\n';
    }
  }
  return kOk;
}

int cmd_hom(const Common& c, int from, int to, std::optional<int> gap) {
  ADEType t = parse_type(c);
  check_vertex(t, from, "--from");
  check_vertex(t, to, "--to");
  Multiset m;
  if (gap) {
    if (int d = hom_dim_at(t, c.b, from, to, *gap); d > 0) m[*gap] = d;
  } else {
    m = hom_multiset(t, c.b, from, to);
  }
  if (c.format == "json") {
    print_json(multiset_json(m));
  } else if (c.format == "tsv") {
    std::cout << "type\tk\tkprime\tc\tmult\n";
    for (const auto& [cc, d] : m) std::cout << label(t, c.b) << '\t' << from << '\t' << to << '\t' << cc << '\t' << d << '\n';
  } else if (gap) {
    std::cout << (m.empty() ? 0 : m.begin()->second) << '\n';
  } else {
    std::cout << multiset_str(m) << '\n';
  }
  return kOk;
}

int cmd_table3(const Common& c) {
  ADEType t = parse_type(c);
  int l = t.l;
  std::vector<Multiset> grid(static_cast<std::size_t>(l) * l);
  parallel_for(l * l, c.threads, [&](int i) { grid[i] = hom_multiset(t, c.b, i / l + 1, i % l + 1); });
  auto at = [&](int k, int kp) -> const Multiset& { return grid[(k - 1) * l + (kp - 1)]; };
  if (c.format == "json") {
    auto rows = json::array();
    for (int k = 1; k <= l; ++k) {
      auto row = json::array();
      for (int kp = 1; kp <= l; ++kp) row.push_back(multiset_json(at(k, kp)));
      rows.push_back(row);
    }
    print_json({{"type", label(t, c.b)}, {"grid", rows}});
  } else if (c.format == "tsv") {
    std::cout << "type\tk\tkprime\tc\tmult\n";
    for (int k = 1; k <= l; ++k)
      for (int kp = 1; kp <= l; ++kp)
        for (const auto& [cc, d] : at(k, kp))
          std::cout << label(t, c.b) << '\t' << k << '\t' << kp << '\t' << cc << '\t' << d << '\n';
  } else {
    std::cout << label(t, c.b) << '\n';
    for (int k = 1; k <= l; ++k)
      for (int kp = 1; kp <= l; ++kp) std::cout << "(" << k << "," << kp << ")  " << multiset_str(at(k, kp)) << '\n';
  }
  CheckReport rep;
  for (int k = 1; k <= l; ++k)
    for (int kp = 1; kp <= l; ++kp) {
      ++rep.checked;
      Multiset want = golden_multiset(t, k, kp);
      if (at(k, kp) != want)
        rep.fail("(" + std::to_string(k) + "," + std::to_string(kp) + ") computed " + multiset_str(at(k, kp)) +
                 ", reference " + multiset_str(want));
    }
  return report_exit(rep, "table3 mismatch");
}

int cmd_ar(const Common& c, std::optional<int> vertex) {
  ADEType t = parse_type(c);
  if (vertex) check_vertex(t, *vertex, "--vertex");
  CheckReport all;
  auto out = json::array();
  for (int k = 1; k <= t.l; ++k) {
    if (vertex && k != *vertex) continue;
    CheckReport r = ar_triangle_check(t, c.b, k, 0);
    all.merge(r);
    int neighbours = static_cast<int>(dynkin_diagram(t).neighbors(k).size());
    if (c.format == "json")
      out.push_back({{"k", k}, {"neighbours", neighbours}, {"ok", r.ok()}});
    else if (c.format == "tsv")
      std::cout << label(t, c.b) << '\t' << k << '\t' << neighbours << '\t' << (r.ok() ? "ok" : "FAIL") << '\n';
    else
      std::cout << "M^" << k << "_0  neighbours " << neighbours << "  " << (r.ok() ? "ok" : "FAIL") << '\n';
  }
  if (c.format == "json") print_json(out);
  return report_exit(all, "ar");
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v == 0 ? 0.0 : v);  // no "-0"
  return buf;
}

int cmd_stability(const Common& c, const std::string& window, bool check, int sums, unsigned long seed) {
  ADEType t = parse_type(c);
  PhaseWindow w = parse_window(window);
  auto objs = enumerate(t, c.b, w);
  auto rows = json::array();
  if (c.format == "tsv") std::cout << "type\tk\tn\tphase\tmass\tre\tim\n";
  for (const auto& o : objs) {
    CentralCharge z = central_charge(o.gmf);
    if (c.format == "json")
      rows.push_back({{"k", o.k}, {"n", o.n}, {"phase", z.phase.get_str()}, {"mass", z.mass},
                      {"Z", {z.value.real(), z.value.imag()}}});
    else if (c.format == "tsv")
      std::cout << label(t, c.b) << '\t' << o.k << '\t' << o.n << '\t' << z.phase.get_str() << '\t' << fixed(z.mass)
                << '\t' << fixed(z.value.real()) << '\t' << fixed(z.value.imag()) << '\n';
    else
      std::cout << "M^" << o.k << "_" << o.n << "  phase " << z.phase.get_str() << "  mass " << fixed(z.mass)
                << "  Z (" << fixed(z.value.real()) << ", " << fixed(z.value.imag()) << ")\n";
  }
  if (c.format == "json") print_json(rows);
  if (!check) return kOk;
  StabilityOptions opt;
  opt.random_sums = sums;
  opt.seed = seed;
  CheckReport r = check_stability_axioms(t, c.b, w, opt);
  std::cerr << "stability axioms: " << r.checked << " checks, " << r.failures.size() << " failures\n";
  return report_exit(r, "stability");
}

int cmd_quiver(const Common& c, const std::string& orientation, bool paths, bool roots) {
  ADEType t = parse_type(c);
  DynkinQuiver q;
  try {
    q = parse_orientation(t, c.b, orientation);
  } catch (const std::invalid_argument& e) {
    throw CliError{kBadRange, e.what()};
  }
  PathAlgebraSummary s = path_hom_dims(q);
  RootSystem rs = positive_roots(t);
  if (c.format == "json") {
    json j{{"type", label(t, c.b)}, {"arrows", q.arrows}};
    if (paths) j["paths"] = {{"dim", s.dim}, {"hom_dims", s.hom_dims}};
    if (roots) j["roots"] = {{"count", rs.count()}, {"highest", rs.highest}};
    print_json(j);
    return kOk;
  }
  std::cout << "arrows: " << q.str() << '\n';
  if (paths) {
    std::cout << "path algebra dimension " << s.dim << '\n';
    for (int k = 1; k <= t.l; ++k) {
      for (int kp = 1; kp <= t.l; ++kp) std::cout << (kp > 1 ? (c.format == "tsv" ? "\t" : " ") : "") << s.hom_dims[k][kp];
      std::cout << '\n';
    }
  }
  if (roots) {
    std::cout << "positive roots " << rs.count() << "\nhighest root";
    for (int a : rs.highest) std::cout << ' ' << a;
    std::cout << '\n';
  }
  return kOk;
}

json export_catalog(const ADEType& t, int b) {
  auto a = json::array();
  for (int k = 1; k <= t.l; ++k) a.push_back(to_json(build_object(t, b, k, 0).gmf, label(t, b)));
  return a;
}

int cmd_export(const Common& c, const std::string& out) {
  std::string text = export_catalog(parse_type(c), c.b).dump(1) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw CliError{kIoError, "cannot write " + out};
  return kOk;
}

// Reads one object or an array of objects in the mf schema and verifies each.
int verify_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{kIoError, "cannot read " + path};
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    throw CliError{kIoError, path + ": " + e.what()};
  }
  if (!doc.is_array()) doc = json::array({doc});
  CheckReport rep;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    GradedMF g;
    try {
      g = graded_mf_from_json(doc[i]);
    } catch (const std::exception& e) {
      throw CliError{kIoError, path + " entry " + std::to_string(i) + ": " + e.what()};
    }
    ++rep.checked;
    if (Report r = verify_mf(g.mf); !r) rep.fail("entry " + std::to_string(i) + ": " + r.message);
    if (Report r = verify_grading(g); !r) rep.fail("entry " + std::to_string(i) + ": " + r.message);
  }
  std::cout << path << ": " << rep.checked << " objects, " << rep.failures.size() << " failures\n";
  return report_exit(rep, "verify");
}

int cmd_verify(const Common& c, const std::string& input) {
  if (!input.empty()) return verify_file(input);
  if (c.type.empty()) throw CliError{kBadType, "verify needs --type or --input"};
  ADEType t = parse_type(c);
  bool ok = true;
  auto rows = json::array();
  verify_type(t, c.b, [&](const SuiteStep& s) {
    ok = ok && s.report.ok();
    for (const auto& f : s.report.failures) std::cerr << s.name << ": " << f << '\n';
    if (c.format == "json")
      rows.push_back({{"check", s.name}, {"checked", s.report.checked}, {"failures", s.report.failures.size()}});
    else if (c.format == "tsv")
      std::cout << label(t, c.b) << '\t' << s.name << '\t' << s.report.checked << '\t' << s.report.failures.size()
                << '\n';
    else
      std::cout << s.name << ": " << (s.report.ok() ? "ok" : "FAIL") << " (" << s.report.checked << " checks)"
                << std::endl;
  });
  if (c.format == "json") print_json({{"type", label(t, c.b)}, {"ok", ok}, {"checks", rows}});
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded matrix factorizations of ADE singularities"};
  app.require_subcommand(1);
  Common common;

  auto* catalog = app.add_subcommand("catalog", "list catalog objects in a phase window");
  add_common(catalog, common);
  std::string window = "0..1";
  catalog->add_option("--window", window, "phase window lo..hi, read as (lo, hi]");

  auto* hom = app.add_subcommand("hom", "multiset of c with Hom(M^k_0, M^k'_c) nonzero");
  add_common(hom, common);
  int from = 0, to = 0;
  std::optional<int> gap;
  hom->add_option("--from", from)->required();
  hom->add_option("--to", to)->required();
  hom->add_option("--c", gap, "single phase gap c; prints the dimension");

  auto* table3 = app.add_subcommand("table3", "full C(k, k') grid, compared against the reference");
  add_common(table3, common);

  auto* ar = app.add_subcommand("ar", "Auslander-Reiten triangle checks");
  add_common(ar, common);
  std::optional<int> vertex;
  ar->add_option("--vertex", vertex);

  auto* stab = app.add_subcommand("stability", "central charges; --check runs the stability axioms");
  add_common(stab, common);
  stab->add_option("--window", window, "phase window lo..hi, read as (lo, hi]");
  bool check = false;
  int sums = 100;
  unsigned long seed = 1;
  stab->add_flag("--check", check);
  stab->add_option("--sums", sums, "random direct sums for the HN check")->check(CLI::NonNegativeNumber);
  stab->add_option("--seed", seed);

  auto* quiver = app.add_subcommand("quiver", "Dynkin quiver, path counts and roots");
  add_common(quiver, common);
  std::string orientation = "principal";
  bool paths = false, roots = false;
  quiver->add_option("--orientation", orientation, "'principal' or arrows like 1->2,3->2");
  quiver->add_flag("--paths", paths);
  quiver->add_flag("--roots", roots);

  auto* exp = app.add_subcommand("export", "every M^k_0 in the mf JSON schema");
  add_common(exp, common);
  std::string out;
  exp->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "full invariant suite for a type, or check a JSON file");
  add_common(verify, common, false);
  std::string input;
  verify->add_option("--input", input, "JSON file in the mf schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*catalog) return cmd_catalog(common, window);
    if (*hom) return cmd_hom(common, from, to, gap);
    if (*table3) return cmd_table3(common);
    if (*ar) return cmd_ar(common, vertex);
    if (*stab) return cmd_stability(common, window, check, sums, seed);
    if (*quiver) return cmd_quiver(common, orientation, paths, roots);
    if (*exp) return cmd_export(common, out);
    if (*verify) return cmd_verify(common, input);
  } catch (const CliError& e) {
    std::cerr << "mfcat: " << e.message << '\n';
    return e.code;
  }
  return kOk;
}
