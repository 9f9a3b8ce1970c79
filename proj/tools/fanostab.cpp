// Command line front end: one subcommand per library module.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fanostab/chow/chow.hpp"
#include "fanostab/git/walls.hpp"
#include "fanostab/io/parse.hpp"
#include "fanostab/io/report.hpp"
#include "fanostab/k3/lattice.hpp"
#include "fanostab/verdict/sarkisov.hpp"
#include "json.hpp"

using namespace fanostab;
using ojson = nlohmann::ordered_json;

namespace {

struct Global {
  bool json = false;
  int precision = kDefaultPrecision;
  int bound = 9;
  int threads = 1;
};

struct CurveArgs {
  std::string q, g, bidegree;
  std::vector<std::string> points;

  void add(CLI::App* c) {
    c->add_option("--q", q, "quadric in x0..x3");
    c->add_option("--g", g, "cubic in x0..x3");
    c->add_option("--bidegree", bidegree, "bidegree (3,3) form in u,v,s,w instead of --q/--g");
  }
  void add_points(CLI::App* c) {
    c->add_option("--point", points, "known singular point a,b,c,d (repeatable)");
  }
  CurvePair pair() const {
    if (!bidegree.empty()) return pair_from_bidegree(parse_poly(bidegree, Convention::Bidegree, 3).poly);
    if (q.empty() || g.empty()) throw Error(ErrorCode::InvalidInput, "give --q and --g, or --bidegree");
    return CurvePair::make(parse_poly(q, Convention::P3, 2).poly, parse_poly(g, Convention::P3, 3).poly);
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<Rat> rats(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& x : split(s, ',')) out.push_back(Rat::parse(x));
  return out;
}

std::vector<long> longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& r : rats(s)) {
    if (!r.is_integer()) throw Error(ErrorCode::InvalidInput, "weights must be integers");
    out.push_back(r.num().get_si());
  }
  return out;
}

RMatrix frame_arg(const std::string& s) {
  if (s.empty()) return RMatrix::identity(4);
  const auto v = rats(s);
  if (v.size() != 16) throw Error(ErrorCode::InvalidInput, "--frame needs 16 entries, row by row");
  RMatrix m(4, 4);
  for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = v[i];
  return m;
}

std::vector<QVector> point_args(const std::vector<std::string>& pts) {
  std::vector<QVector> out;
  for (const auto& p : pts) {
    const auto v = rats(p);
    if (v.size() != 4) throw Error(ErrorCode::InvalidInput, "a point needs four coordinates");
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

void emit(const Global& gl, const ojson& j, const std::string& text) {
  if (gl.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

ojson hm_json(const HMValue& v) {
  return {{"eta", v.constant.str()}, {"xi", v.slope.str()}, {"affine", v.str()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of (2,3) complete intersection curves in P^3 and the blow-ups along them"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--precision", gl.precision, "series precision for germ classification")
      ->envname("FANOSTAB_PRECISION")
      ->check(CLI::Range(3, 4096));
  app.add_option("--bound", gl.bound, "max |w_i| in destabilizer searches")->check(CLI::Range(1, 64));
  app.add_option("--threads", gl.threads, "worker threads")->check(CLI::Range(1, 256));

  int exit_code = 0;

  // classify
  auto* classify = app.add_subcommand("classify", "K-stability (or GIT at --t) verdicts");
  std::string input, t_text;
  bool timings = false;
  CurveArgs ccurve;
  classify->add_option("--input", input, "JSON array of {q, g, points?} or {bidegree, points?}");
  classify->add_option("--t", t_text, "GIT slope in [0, 2/3]");
  classify->add_flag("--timings", timings, "include per-entry timings");
  ccurve.add(classify);
  ccurve.add_points(classify);
  classify->callback([&] {
    BatchOptions bo;
    if (!t_text.empty()) bo.t = Rat::parse(t_text);
    bo.verdict.precision = gl.precision;
    bo.verdict.bound = gl.bound;
    bo.threads = gl.threads;
    bo.timings = timings;
    RunReport rep;
    if (!input.empty()) {
      rep = run_batch_file(input, bo);
    } else {
      ojson entry;
      if (!ccurve.bidegree.empty()) entry["bidegree"] = ccurve.bidegree;
      else entry = {{"q", ccurve.q}, {"g", ccurve.g}};
      if (!ccurve.points.empty()) {
        ojson pts = ojson::array();
        for (const auto& p : ccurve.points) pts.push_back(split(p, ','));
        entry["points"] = pts;
      }
      rep = run_batch(ojson::array({entry}).dump(), bo);
    }
    exit_code = rep.exit_code;
    if (gl.json) {
      std::cout << rep.json << "\n";
      return;
    }
    const ojson j = ojson::parse(rep.json);
    if (j.contains("error")) {
      std::cerr << "error: " << j["error"].get<std::string>() << "\n";
      return;
    }
    for (const auto& r : j["results"]) {
      std::cout << "#" << r["index"].get<std::size_t>() << " " << r["verdict"].get<std::string>() << "\n";
      if (r.contains("error")) std::cout << "  " << r["error"]["message"].get<std::string>() << "\n";
      if (r.contains("reasons"))
        for (const auto& s : r["reasons"]) std::cout << "  " << s.get<std::string>() << "\n";
      if (r.contains("certificate") && !r["certificate"].is_null())
        std::cout << "  certificate: weights " << r["certificate"]["weights"].dump() << " in the "
                  << r["certificate"]["frame_origin"].get<std::string>() << " frame, mu = "
                  << r["certificate"]["mu"]["affine"].get<std::string>() << "\n";
    }
  });

  // hm
  auto* hm = app.add_subcommand("hm", "Hilbert-Mumford index of a pair under a 1-PS");
  CurveArgs hcurve;
  std::string weights, frame, hm_t;
  bool general = false;
  hcurve.add(hm);
  hm->add_option("--weights", weights, "integer weights w0,w1,w2,w3 with sum 0")->required();
  hm->add_option("--frame", frame, "16 entries of F (x = F y), row by row");
  hm->add_option("--t", hm_t, "evaluate at this slope");
  hm->add_flag("--general", general, "allow q that is not semi-invariant");
  hm->callback([&] {
    const CurvePair p = hcurve.pair();
    const OnePS l = OnePS::make(frame_arg(frame), longs(weights));
    std::optional<HMValue> v;
    if (general) v = hm_index_general(p, l);
    else v = hm_index(p, l);
    ojson j = v ? hm_json(*v) : ojson{{"mu", nullptr}};
    std::string text = v ? "mu = " + v->str() + "\n" : "g lies in q*(linear forms)\n";
    if (v && !hm_t.empty()) {
      const Rat t = Rat::parse(hm_t);
      j["t"] = t.str();
      j["value"] = v->at(t).str();
      text += "at t = " + t.str() + ": " + v->at(t).str() + (v->at(t).sign() < 0 ? " (destabilizing)" : "") + "\n";
    }
    emit(gl, j, text);
  });

  // limit
  auto* limit = app.add_subcommand("limit", "limit of a pair under a 1-PS");
  CurveArgs lcurve;
  std::string lweights, lframe;
  lcurve.add(limit);
  limit->add_option("--weights", lweights, "integer weights with sum 0")->required();
  limit->add_option("--frame", lframe, "16 entries of F, row by row");
  limit->callback([&] {
    const CurvePair p = lcurve.pair();
    const CurvePair r = one_ps_limit(p, OnePS::make(frame_arg(lframe), longs(lweights)));
    emit(gl, {{"q", r.q.str()}, {"g", r.g.str()}}, "q = " + r.q.str() + "\ng = " + r.g.str() + "\n");
  });

  // search
  auto* search = app.add_subcommand("search", "bounded search for a destabilizing 1-PS");
  CurveArgs scurve;
  std::string s_t = "22/51";
  std::vector<std::string> sframes;
  scurve.add(search);
  search->add_option("--t", s_t, "slope in [0, 2/3]")->capture_default_str();
  search->add_option("--frame", sframes, "extra frame, 16 entries (repeatable)");
  search->callback([&] {
    const CurvePair p = scurve.pair();
    std::vector<RMatrix> fr;
    for (const auto& f : sframes) fr.push_back(frame_arg(f));
    const auto c = destabilizer_search(p, Rat::parse(s_t), fr, gl.bound, gl.threads);
    if (!c) {
      emit(gl, {{"certificate", nullptr}, {"bound", gl.bound}},
           "no destabilizing 1-PS with |w_i| <= " + std::to_string(gl.bound) + " (not a proof of stability)\n");
      return;
    }
    ojson frame_rows = ojson::array();
    std::string text = "weights";
    for (long w : c->ps.weights) text += " " + std::to_string(w);
    text += " in the " + c->frame_origin + " frame, mu = " + c->value.str() + "\n";
    for (int i = 0; i < 4; ++i) {
      ojson row = ojson::array();
      text += " ";
      for (int k = 0; k < 4; ++k) {
        row.push_back(c->ps.frame(i, k).str());
        text += " " + c->ps.frame(i, k).str();
      }
      text += "\n";
      frame_rows.push_back(row);
    }
    emit(gl,
         {{"certificate",
           {{"weights", c->ps.weights}, {"frame", frame_rows}, {"frame_origin", c->frame_origin}, {"mu", hm_json(c->value)}}}},
         text);
  });

  // walls
  auto* walls = app.add_subcommand("walls", "VGIT walls and the chamber of a slope");
  std::string w_t;
  walls->add_option("--t", w_t, "slope to locate");
  walls->callback([&] {
    ojson j;
    std::string text;
    ojson ws = ojson::array();
    for (std::size_t i = 0; i < vgit_walls().size(); ++i) {
      ws.push_back(vgit_walls()[i].str());
      text += "T" + std::to_string(i) + " = " + vgit_walls()[i].str() + "\n";
    }
    j["walls"] = ws;
    if (!w_t.empty()) {
      const Chamber c = chamber_of(Rat::parse(w_t));
      j["chamber"] = c.str();
      text += w_t + " lies in " + c.str() + "\n";
    }
    emit(gl, j, text);
  });

  // hk
  auto* hk = app.add_subcommand("hk", "Hassett-Keel parameter map between alpha and t");
  std::string alpha_text, hk_t;
  auto* ao = hk->add_option("--alpha", alpha_text, "alpha in [8/17, 5/9]");
  auto* to = hk->add_option("--t", hk_t, "t in [0, 2/3]");
  ao->excludes(to);
  hk->callback([&] {
    if (alpha_text.empty() == hk_t.empty()) throw Error(ErrorCode::InvalidInput, "give exactly one of --alpha, --t");
    if (!alpha_text.empty()) {
      const Rat a = Rat::parse(alpha_text), t = hk_map(a, HKDirection::AlphaToT);
      emit(gl, {{"alpha", a.str()}, {"t", t.str()}}, "t = " + t.str() + "\n");
    } else {
      const Rat t = Rat::parse(hk_t), a = hk_map(t, HKDirection::TToAlpha);
      emit(gl, {{"t", t.str()}, {"alpha", a.str()}}, "alpha = " + a.str() + "\n");
    }
  });

  // cm
  auto* cm = app.add_subcommand("cm", "CM class of the family and its slope");
  cm->callback([&] {
    const ChowClass c = cm_class();
    const Rat t0 = slope(c);
    const Rat xi = c.coeff(0, 0, 1), eta = c.coeff(0, 1, 0);
    std::string text;
    for (int b = 2; b <= 4; ++b)
      text += "f_*(H^" + std::to_string(4 - b) + " E^" + std::to_string(b) + ") = " + blowup_push(4 - b, b).str() + "\n";
    text += "lambda_CM = " + c.str() + "\nt0 = " + t0.str() + " in " + chamber_of(t0).str() + "\n";
    emit(gl, {{"class", {{"xi", xi.str()}, {"eta", eta.str()}}}, {"t0", t0.str()}}, text);
  });

  // sing
  auto* sing = app.add_subcommand("sing", "quadric rank and singular points of the curve");
  CurveArgs icurve;
  icurve.add(sing);
  icurve.add_points(sing);
  sing->callback([&] {
    const CurvePair p = icurve.pair();
    const QuadricInfo info = quadric_normal_form(p.q);
    ojson j{{"quadric_rank", info.rank}, {"frame_exact", info.exact}};
    std::string text = "quadric rank " + std::to_string(info.rank) + "\n";
    if (info.rank <= 2 || !info.frame) {
      emit(gl, j, text + "no singular point analysis for this quadric\n");
      return;
    }
    const SingularLocus loc = singular_points(p, info, point_args(icurve.points), gl.precision);
    ojson pts = ojson::array();
    for (const auto& s : loc.points) {
      ojson pt = ojson::array();
      for (const auto& x : s.p3) pt.push_back(x.str());
      pts.push_back({{"type", s.type.str()}, {"point", pt}, {"field", s.field()}});
      text += s.type.str() + " at " + s.str() + "\n";
    }
    if (info.rank == 3) {
      const ConePoint cp = cone_point_type(p, info, gl.precision);
      j["cone_point"] = cp.str();
      text += "vertex: " + cp.str() + "\n";
    }
    j["points"] = pts;
    j["complete"] = loc.complete;
    j["unresolved"] = loc.unresolved;
    if (!loc.complete) {
      text += "incomplete; unresolved:\n";
      for (const auto& u : loc.unresolved) text += "  " + u + "\n";
      exit_code = 2;
    }
    emit(gl, j, text);
  });

  // sarkisov
  auto* sark = app.add_subcommand("sarkisov", "cubic threefold through the pair, or the inverse");
  CurveArgs kcurve;
  std::string cubic, vertex = "1,0,0,0,0";
  kcurve.add(sark);
  sark->add_option("--cubic", cubic, "cubic in x0..x4 (inverse direction)");
  sark->add_option("--vertex", vertex, "double point of the cubic")->capture_default_str();
  sark->callback([&] {
    if (!cubic.empty()) {
      const Poly f = parse_poly(cubic, Convention::P4, 3).poly;
      const CurvePair p = extract_pair(f, rats(vertex));
      emit(gl, {{"q", p.q.str()}, {"g", p.g.str()}}, "q = " + p.q.str() + "\ng = " + p.g.str() + "\n");
      return;
    }
    const CubicThreefold c = sarkisov_cubic(kcurve.pair());
    emit(gl, {{"cubic", c.f.str()}, {"integral", c.integral}},
         "F = " + c.f.str() + "\n" + (c.integral ? "integral\n" : "not integral (q and g share a factor)\n"));
  });

  // k3
  auto* k3 = app.add_subcommand("k3", "lattice computations on K3 surfaces");
  k3->require_subcommand(1);
  auto* rr = k3->add_subcommand("rr", "h^0 of a big and nef line bundle of degree d");
  int degree = 0;
  rr->add_option("--degree", degree, "even degree >= 2")->required();
  rr->callback([&] {
    const int h = rr_h0(degree);
    emit(gl, {{"degree", degree}, {"h0", h}}, "h0 = " + std::to_string(h) + "\n");
  });
  auto* uni = k3->add_subcommand("unigonal", "exhaustive unigonal obstruction search");
  std::string ucase = "smooth";
  int scale = 1;
  uni->add_option("--case", ucase, "smooth or a1")->capture_default_str()->check(CLI::IsMember({"smooth", "a1"}));
  uni->add_option("--scale", scale, "box scale factor")->capture_default_str()->check(CLI::Range(1, 64));
  uni->callback([&] {
    const UnigonalReport r = unigonal_obstruction(ucase == "a1" ? UnigonalCase::A1 : UnigonalCase::Smooth, scale);
    ojson table = ojson::array();
    std::string text;
    if (!r.forced.empty()) text += "degree constraints force Gamma = " + r.forced + "\n";
    for (const auto& row : r.table) {
      table.push_back({{"class", row.cls}, {"check", row.condition}, {"value", row.value.str()}, {"holds", row.holds}});
      text += row.cls + ": " + row.condition + " fails, value " + row.value.str() + "\n";
    }
    text += r.solutions.empty() ? "no solution\n" : std::to_string(r.solutions.size()) + " solution(s)\n";
    ojson j{{"case", ucase}, {"table", table}, {"solutions", r.solutions}};
    if (!r.forced.empty()) j["forced"] = r.forced;
    if (ucase == "a1") {
      j["b"] = r.b_values;
      j["c"] = r.c_values;
    }
    emit(gl, j, text);
  });
  auto* kpair = k3->add_subcommand("pair", "v^T G w for a gram matrix G");
  std::string gram, vtext, wtext;
  kpair->add_option("--gram", gram, "rows separated by ';', entries by ','")->required();
  kpair->add_option("--v", vtext, "coordinates of v")->required();
  kpair->add_option("--w", wtext, "coordinates of w (default v)");
  kpair->callback([&] {
    std::vector<std::vector<long>> rows;
    std::vector<std::string> names;
    for (const auto& r : split(gram, ';')) {
      rows.push_back(longs(r));
      names.push_back("e" + std::to_string(names.size()));
    }
    const GramLattice lat(names, rows);
    const auto v = rats(vtext);
    const auto w = wtext.empty() ? v : rats(wtext);
    const Rat val = pair(lat, v, w);
    emit(gl, {{"value", val.str()}}, val.str() + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
