#include "skeinlab/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "skeinlab/diagram.hpp"
#include "skeinlab/qnum.hpp"
#include "skeinlab/rtw.hpp"
#include "skeinlab/shadow.hpp"
#include "skeinlab/tangle.hpp"
#include "skeinlab/torus_skein.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skeinlab {
namespace cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw diagram::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
     << "i";
  return os.str();
}

std::string ord_str(std::int64_t v) {
  if (v == kOrdPlusInf) return "inf";
  if (v == kOrdMinusInf) return "-inf";
  return std::to_string(v);
}

struct Options {
  bool as_json = false;
  std::string fixtures_dir = "fixtures";
};

void emit(std::ostream& out, const Options& opt, const json& report,
          const std::string& human) {
  if (opt.as_json)
    out << report.dump(2) << "\n";
  else
    out << human << "\n";
}

json diagram_report(const diagram::Diagram& d, const std::string& bytes,
                    const std::string& command) {
  RationalFunc br = diagram::bracket(d);
  json rep;
  rep["command"] = command;
  rep["input_digest"] = digest(bytes);
  rep["bracket"] = br.to_string();
  rep["breadth"] = br.breadth();
  rep["ord_i"] = ord_str(br.ord_at_i());
  rep["alternating"] = diagram::alternating(d);
  auto ad = diagram::adequacy(d);
  rep["adequate"] = {{"plus", ad.plus}, {"minus", ad.minus}};
  rep["z2_class"] = diagram::z2_class(d);
  rep["crossings"] = d.crossing_count();
  rep["genus"] = d.genus;
  return rep;
}

Rational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

int reproduce_table(const Options& opt, std::ostream& out) {
  fs::path dir = fs::path(opt.fixtures_dir) / "table";
  if (!fs::is_directory(dir))
    throw diagram::ValidationError("fixture directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  int failures = 0;
  for (const auto& f : files) {
    std::string bytes = slurp(f.string());
    json j = json::parse(bytes);
    std::string name = j.value("name", f.stem().string());
    diagram::Diagram d = diagram::Diagram::from_json(bytes);
    std::string diff;
    if (j.contains("expected")) {
      const json& e = j.at("expected");
      if (e.contains("bracket")) {
        RationalFunc want = RationalFunc::parse(e.at("bracket").get<std::string>());
        RationalFunc got = diagram::bracket(d);
        if (!(want == got)) diff += "bracket got " + got.to_string() + "; ";
      }
      if (e.contains("jones")) {
        RationalFunc want = RationalFunc::parse(e.at("jones").get<std::string>());
        RationalFunc got = diagram::jones_kauffman(d);
        if (!(want == got)) diff += "jones got " + got.to_string() + "; ";
      }
      if (e.contains("ord_i")) {
        std::string want = e.at("ord_i").is_string() ? e.at("ord_i").get<std::string>()
                                                     : std::to_string(e.at("ord_i").get<int>());
        std::string got = ord_str(diagram::bracket(d).ord_at_i());
        if (want != got) diff += "ord_i got " + got + "; ";
      }
      if (e.contains("alternating") && e.at("alternating").get<bool>() != diagram::alternating(d))
        diff += "alternating flag off; ";
      if (e.contains("z2_trivial") && e.at("z2_trivial").get<bool>() != diagram::z2_trivial(d))
        diff += "z2 flag off; ";
    }
    out << name << ": " << (diff.empty() ? "ok" : ("DIFF " + diff)) << "\n";
    failures += !diff.empty();
  }
  out << (failures == 0 ? "all table diffs empty" : "table diffs present") << "\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Kauffman brackets, shadows and quantum invariants in #_g(S^1 x S^2)"};
  app.require_subcommand(1);
  Options opt;
  int jobs = 0;
  app.add_flag("--json", opt.as_json, "emit a JSON report");
  app.add_option("--jobs", jobs, "worker threads (default: logical cores)");
  int state_cap = -1, color_cap = -1;
  double identity_tol = -1.0;
  app.add_option("--state-cap", state_cap, "max crossings for state sums");
  app.add_option("--color-cap", color_cap, "max color in shadow enumerations");
  app.add_option("--tol", identity_tol, "tolerance for the root-of-unity identity checks");

  std::string file;
  int ropt = 5;
  std::int64_t nopt = 0;
  std::vector<std::int64_t> pq4, pqr3;
  std::int64_t mont_e = 0;
  std::string fractions;

  auto* c_bracket = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  c_bracket->add_option("file", file)->required();
  auto* c_tait = app.add_subcommand("tait", "breadth report for an alternating diagram");
  c_tait->add_option("file", file)->required();
  auto* c_ordi = app.add_subcommand("ord-i", "order of the bracket at q = A^2 = i");
  c_ordi->add_option("file", file)->required();
  auto* c_z2 = app.add_subcommand("z2", "Z2 homology class of the diagram");
  c_z2->add_option("file", file)->required();
  auto* c_sheval = app.add_subcommand("shadow-eval", "Q(A) shadow state sum");
  c_sheval->add_option("file", file)->required();
  auto* c_shsig = app.add_subcommand("shadow-sig", "intersection form signature of a shadow");
  c_shsig->add_option("file", file)->required();
  auto* c_rtw = app.add_subcommand("rtw", "quantum invariant of a shadow at a root of unity");
  c_rtw->add_option("--r", ropt)->required();
  c_rtw->add_option("file", file)->required();
  auto* c_tv = app.add_subcommand("tv", "state-sum invariant of a gleamless polyhedron");
  c_tv->add_option("--r", ropt)->required();
  c_tv->add_option("file", file)->required();
  auto* c_lens = app.add_subcommand("lens", "closed-form invariant of the lens space L(n,1)");
  c_lens->add_option("--r", ropt)->required();
  c_lens->add_option("--n", nopt)->required();
  auto* c_t2 = app.add_subcommand("t2-mul", "product of torus curves (p,q)_T (r,s)_T");
  c_t2->add_option("coeffs", pq4)->expected(4);
  auto* c_t3 = app.add_subcommand("t3-reduce", "reduce a (p,q,r)-curve in the 3-torus");
  c_t3->add_option("coeffs", pqr3)->expected(3);
  auto* c_tangle = app.add_subcommand("tangle", "reduce a 2-tangle and report its number");
  c_tangle->add_option("file", file)->required();
  auto* c_mont = app.add_subcommand("montesinos", "slice obstruction for a Montesinos link");
  c_mont->add_option("--e", mont_e)->required();
  c_mont->add_option("--fractions", fractions, "comma separated a/b list");
  auto* c_table = app.add_subcommand("reproduce-table", "check the bundled fixture corpus");
  c_table->add_option("--fixtures", opt.fixtures_dir, "fixture directory");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (jobs > 0) {
#ifdef _OPENMP
    omp_set_num_threads(jobs);
#endif
  }
  if (state_cap > 0) diagram::global_config().state_cap = state_cap;
  if (color_cap > 0) diagram::global_config().color_cap = color_cap;

  try {
    if (c_bracket->parsed() || c_ordi->parsed() || c_z2->parsed() || c_tait->parsed()) {
      std::string bytes = slurp(file);
      diagram::Diagram d = diagram::Diagram::from_json(bytes);
      if (c_bracket->parsed()) {
        json rep = diagram_report(d, bytes, "bracket");
        emit(out, opt, rep, rep["bracket"].get<std::string>());
        return 0;
      }
      if (c_ordi->parsed()) {
        json rep = diagram_report(d, bytes, "ord-i");
        emit(out, opt, rep, rep["ord_i"].get<std::string>());
        return 0;
      }
      if (c_z2->parsed()) {
        json rep = diagram_report(d, bytes, "z2");
        std::ostringstream hs;
        hs << "(";
        auto z = diagram::z2_class(d);
        for (size_t i = 0; i < z.size(); ++i) hs << (i ? "," : "") << z[i];
        hs << ")";
        emit(out, opt, rep, hs.str());
        return 0;
      }
      auto rep = diagram_report(d, bytes, "tait");
      auto tr = diagram::tait_breadth_check(d);
      rep["tait"] = {{"preconditions_ok", tr.preconditions_ok},
                     {"skipped_reason", tr.skipped_reason},
                     {"breadth", tr.breadth},
                     {"n", tr.n},
                     {"g", tr.g},
                     {"k", tr.k},
                     {"formula_ok", tr.formula_ok},
                     {"upper_bound", tr.upper_bound},
                     {"bound_ok", tr.bound_ok}};
      std::ostringstream hs;
      if (!tr.preconditions_ok) hs << "check skipped: " << tr.skipped_reason << "\n";
      hs << "B = " << tr.breadth << ", n = " << tr.n << ", g = " << tr.g << ", k = " << tr.k
         << ", formula " << (tr.formula_ok ? "holds" : "fails") << ", bound "
         << (tr.bound_ok ? "holds" : "fails");
      emit(out, opt, rep, hs.str());
      return 0;
    }
    if (c_sheval->parsed() || c_shsig->parsed()) {
      std::string bytes = slurp(file);
      shadow::Shadow x = shadow::Shadow::from_json(bytes);
      json rep;
      rep["input_digest"] = digest(bytes);
      if (c_sheval->parsed()) {
        rep["command"] = "shadow-eval";
        RationalFunc v = shadow::shadow_eval_q(x);
        rep["value"] = v.to_string();
        rep["ord_i"] = ord_str(v.ord_at_i());
        rep["breadth"] = v.breadth();
        emit(out, opt, rep, v.to_string());
      } else {
        rep["command"] = "shadow-sig";
        auto f = shadow::intersection_form(x);
        rep["rank"] = f.h2_basis.size();
        rep["signature"] = f.signature;
        emit(out, opt, rep,
             "rank " + std::to_string(f.h2_basis.size()) + ", signature " +
                 std::to_string(f.signature));
      }
      return 0;
    }
    if (c_rtw->parsed() || c_tv->parsed()) {
      std::string bytes = slurp(file);
      shadow::Shadow x = shadow::Shadow::from_json(bytes);
      rtw::RootContext ctx = rtw::make_root_context(ropt);
      if (identity_tol > 0) ctx.identity_tol = identity_tol;
      json rep;
      rep["input_digest"] = digest(bytes);
      rep["r"] = ropt;
      if (c_rtw->parsed()) {
        auto v = rtw::rtw_from_shadow(ctx, x);
        rep["command"] = "rtw";
        rep["value"] = complex_str(v);
        rep["abs_squared"] = std::norm(v);
        emit(out, opt, rep, complex_str(v) + "  |.|^2 = " + std::to_string(std::norm(v)));
      } else {
        double v = rtw::tv_from_polyhedron(ctx, x);
        rep["command"] = "tv";
        rep["value"] = v;
        emit(out, opt, rep, std::to_string(v));
      }
      return 0;
    }
    if (c_lens->parsed()) {
      rtw::RootContext ctx = rtw::make_root_context(ropt);
      auto v = rtw::lens_rtw_closed(ctx, nopt);
      json rep;
      rep["command"] = "lens";
      rep["r"] = ropt;
      rep["n"] = nopt;
      rep["value"] = complex_str(v);
      rep["abs_squared"] = std::norm(v);
      emit(out, opt, rep, complex_str(v) + "  |.|^2 = " + std::to_string(std::norm(v)));
      return 0;
    }
    if (c_t2->parsed()) {
      torus_skein::T2Element v =
          torus_skein::fg_product(torus_skein::PQ(pq4[0], pq4[1]), torus_skein::PQ(pq4[2], pq4[3]));
      json rep;
      rep["command"] = "t2-mul";
      rep["value"] = v.to_string();
      emit(out, opt, rep, v.to_string());
      return 0;
    }
    if (c_t3->parsed()) {
      auto v = torus_skein::reduce_t3_curve(pqr3[0], pqr3[1], pqr3[2]);
      json rep;
      rep["command"] = "t3-reduce";
      rep["value"] = torus_skein::to_string(v);
      emit(out, opt, rep, torus_skein::to_string(v));
      return 0;
    }
    if (c_tangle->parsed()) {
      std::string bytes = slurp(file);
      tangle::TangleDiagram t = tangle::TangleDiagram::from_json(bytes);
      auto [a, b] = tangle::tangle_reduce(t);
      json rep;
      rep["command"] = "tangle";
      rep["input_digest"] = digest(bytes);
      rep["a"] = a.to_string();
      rep["b"] = b.to_string();
      std::string ctext;
      try {
        auto c = tangle::conway_number(t);
        ctext = c.infinite ? "inf" : c.value.str();
      } catch (const std::domain_error& e) {
        ctext = std::string("undefined (") + e.what() + ")";
      }
      rep["conway"] = ctext;
      emit(out, opt, rep, "a = " + a.to_string() + "\nb = " + b.to_string() + "\nC = " + ctext);
      return 0;
    }
    if (c_mont->parsed()) {
      std::vector<Rational> fr;
      std::stringstream ss(fractions);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) fr.push_back(parse_fraction(tok));
      bool obstructed = tangle::montesinos_obstruction(mont_e, fr);
      json rep;
      rep["command"] = "montesinos";
      rep["obstructed"] = obstructed;
      emit(out, opt, rep,
           obstructed ? "obstructed: not slice (given at least two components)"
                      : "no obstruction from this criterion");
      return 0;
    }
    if (c_table->parsed()) return reproduce_table(opt, out);
  } catch (const diagram::ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "unknown subcommand\n";
  return 1;
}

}  // namespace cli
}  // namespace skeinlab
