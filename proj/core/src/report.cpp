#include "fanostab/io/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "fanostab/io/parse.hpp"
#include "fanostab/sing/points.hpp"
#include "json.hpp"

namespace fanostab {

using ojson = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

ojson qvec_json(const QVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ojson certificate_json(const Certificate& c) {
  ojson frame = ojson::array();
  for (int i = 0; i < 4; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < 4; ++j) row.push_back(c.ps.frame(i, j).str());
    frame.push_back(row);
  }
  return {{"weights", c.ps.weights},
          {"frame", frame},
          {"frame_origin", c.frame_origin},
          {"mu", {{"eta", c.value.constant.str()}, {"xi", c.value.slope.str()}, {"affine", c.value.str()}}}};
}

ojson verdict_object(const Verdict& v) {
  ojson o;
  o["verdict"] = to_string(v.level);
  o["reasons"] = v.reasons;
  o["certificate"] = v.certificate ? certificate_json(*v.certificate) : ojson(nullptr);
  o["quadric_rank"] = v.quadric_rank;
  ojson sing = ojson::array();
  for (const auto& p : v.singularities)
    sing.push_back({{"type", p.type.str()}, {"point", qvec_json(p.p3)}, {"field", p.field()}});
  o["singularities"] = sing;
  if (v.cone_point) o["cone_point"] = v.cone_point->str();
  ojson rul = ojson::array();
  for (const auto& r : v.rulings) {
    ojson e{{"family", r.family == 0 ? "u:v" : "s:w"},
            {"factor", r.factor.str()},
            {"multiplicity", r.profile.multiplicity},
            {"contact_points", r.profile.contact_points},
            {"perfect_cube", r.profile.perfect_cube}};
    if (r.profile.contact) e["contact"] = qvec_json(*r.profile.contact);
    if (r.profile.perfect_cube) e["singular_on_residual"] = r.profile.singular_on_residual;
    rul.push_back(e);
  }
  o["rulings"] = rul;
  if (!v.family.empty()) o["family"] = v.family;
  return o;
}

struct EntryResult {
  ojson json;
  int status = 0;  // 0 ok, 1 input error, 2 incomplete geometry
};

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

std::string text_field(const ojson& e, const char* key) {
  const auto it = e.find(key);
  if (it == e.end()) schema(std::string("missing field '") + key + "'");
  if (!it->is_string()) schema(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

Rat rat_field(const ojson& x) {
  if (x.is_number_integer()) return Rat(x.get<long>());
  if (x.is_string()) return Rat::parse(x.get<std::string>());
  schema("point coordinates must be integers or \"p/q\" strings");
}

EntryResult run_entry(const ojson& e, const BatchOptions& opt) {
  EntryResult r;
  try {
    if (!e.is_object()) schema("entry must be an object");
    CurvePair p;
    if (e.contains("bidegree")) {
      p = pair_from_bidegree(parse_poly(text_field(e, "bidegree"), Convention::Bidegree, 3).poly);
    } else {
      p = CurvePair::make(parse_poly(text_field(e, "q"), Convention::P3, 2).poly,
                          parse_poly(text_field(e, "g"), Convention::P3, 3).poly);
    }
    VerdictOptions vo = opt.verdict;
    if (const auto it = e.find("points"); it != e.end()) {
      if (!it->is_array()) schema("'points' must be an array");
      for (const auto& pt : *it) {
        if (!pt.is_array() || pt.size() != 4) schema("each point needs four coordinates");
        QVector v;
        for (const auto& x : pt) v.emplace_back(rat_field(x));
        vo.assist.push_back(v);
      }
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = opt.t ? git_verdict(p, *opt.t, vo) : k_verdict(p, vo);
    r.json = verdict_object(v);
    if (opt.timings)
      r.json["time_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } catch (const Error& err) {
    r.status = err.code() == ErrorCode::IncompleteGeometry ? 2 : 1;
    r.json = {{"verdict", r.status == 2 ? "IncompleteGeometry" : "InputError"},
              {"error", {{"code", std::string(to_string(err.code()))}, {"message", err.what()}}}};
  }
  return r;
}

}  // namespace

std::string verdict_json(const Verdict& v, int indent) { return verdict_object(v).dump(indent); }

RunReport run_batch(std::string_view input, const BatchOptions& opt) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(input)));
  ojson report{{"tool", "fanostab"}, {"version", FANOSTAB_VERSION}, {"input_hash", std::string("fnv1a:") + hash}};
  report["mode"] = opt.t ? "git" : "k";
  if (opt.t) report["t"] = opt.t->str();

  ojson entries;
  try {
    entries = ojson::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    report["error"] = std::string("malformed JSON: ") + e.what();
    return {report.dump(opt.indent), 1};
  }
  if (!entries.is_array()) {
    report["error"] = "input must be a JSON array";
    return {report.dump(opt.indent), 1};
  }

  std::vector<EntryResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < results.size();) results[i] = run_entry(entries[i], opt);
  };
  const int n = std::max(1, std::min<int>(opt.threads, static_cast<int>(results.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = 0;
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    ojson e{{"index", i}};
    e.update(results[i].json);
    arr.push_back(e);
    if (results[i].status == 1) code = 1;
    else if (results[i].status == 2 && code == 0) code = 2;
  }
  report["results"] = arr;
  return {report.dump(opt.indent), code};
}

RunReport run_batch_file(const std::string& path, const BatchOptions& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ojson r{{"tool", "fanostab"}, {"error", "cannot read " + path}};
    return {r.dump(opt.indent), 1};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_batch(ss.str(), opt);
}

}  // namespace fanostab
