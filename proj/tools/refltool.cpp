// Command-line front end: group inspection, orbit queries, verification
// suites, counting tables, and reduction traces.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "refl/report.hpp"

namespace {

// Exit codes: 0 success, 2 parse/input error, 3 feasibility-gate
// violation, 4 cap exhausted, 5 verification failure.
constexpr int kExitParse = 2;
constexpr int kExitGate = 3;
constexpr int kExitCap = 4;
constexpr int kExitVerify = 5;

struct Options {
  std::string group;
  std::string coxeter = "default";
  std::string format = "table";
  std::string cache_dir;
  size_t cap = size_t(1) << 22;
  int parallel = 1;  // accepted for interface stability; runs are
                     // single-threaded to keep outputs bit-identical
  bool slow = false;
};

using refl::GroupContext;

refl::ElemId resolve_coxeter(const GroupContext& ctx, const std::string& sel) {
  refl::ElemId c =
      sel == "default" ? ctx.default_coxeter() : ctx.group().id_of(sel);
  if (!ctx.is_coxeter(c))
    throw std::invalid_argument("'" + sel + "' is not a Coxeter element");
  return c;
}

std::string cache_path(const Options& opt, const GroupContext& ctx,
                       const std::string& key) {
  std::string dir = opt.cache_dir;
  if (const char* env = std::getenv("REFL_CACHE_DIR"); env && dir.empty())
    dir = env;
  if (dir.empty()) return {};
  std::ostringstream os;
  os << dir << "/" << ctx.name() << "-" << std::hex
     << ctx.group().spec().content_hash() << "-" << key << ".json";
  return os.str();
}

// Returns the cached JSON if present; otherwise computes, stores, returns.
nlohmann::json cached(const Options& opt, const GroupContext& ctx,
                      const std::string& key,
                      const std::function<nlohmann::json()>& compute) {
  std::string path = cache_path(opt, ctx, key);
  if (!path.empty()) {
    std::ifstream in(path);
    if (in) {
      nlohmann::json j;
      in >> j;
      return j;
    }
  }
  nlohmann::json j = compute();
  if (!path.empty()) {
    std::filesystem::create_directories(
        std::filesystem::path(path).parent_path());
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
  return j;
}

void parse_lengths(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoi(text);
  } else {
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad length range");
}

// Feasibility gates: lengths above these need --slow.
int gate_length(const std::string& group) {
  if (group == "g4") return 6;
  if (group == "g5") return 5;
  return 5;
}

int cmd_info(const Options& opt) {
  const GroupContext& ctx = GroupContext::get(opt.group);
  nlohmann::json j;
  j["schema_version"] = refl::kSchemaVersion;
  j["group"] = ctx.name();
  j["order"] = ctx.group().size();
  j["rank"] = ctx.group().rank();
  j["reflections"] = ctx.num_reflections();
  j["hyperplanes"] = ctx.refl().num_hyperplanes;
  j["coxeter_number"] = ctx.coxeter().h;
  j["coxeter_elements"] = ctx.coxeter().coxeter_elements.size();
  j["default_coxeter"] = ctx.group().name(ctx.default_coxeter());
  nlohmann::json classes = nlohmann::json::array();
  for (size_t i = 0; i < ctx.refl().classes.size(); ++i) {
    nlohmann::json row;
    row["label"] = "R" + std::to_string(i + 1);
    row["size"] = ctx.refl().classes[i].size();
    nlohmann::json members = nlohmann::json::array();
    for (refl::ElemId e : ctx.refl().classes[i])
      members.push_back(ctx.group().name(e));
    row["members"] = std::move(members);
    classes.push_back(std::move(row));
  }
  j["reflection_classes"] = std::move(classes);
  if (ctx.name() == "g5") {
    nlohmann::json sets = nlohmann::json::array();
    for (int r = 0; r < ctx.num_reflections(); ++r) {
      nlohmann::json row;
      row["element"] = ctx.group().name(ctx.refl_elem(r));
      row["square"] =
          ctx.group().name(ctx.refl_elem(ctx.g5().square_of[r]));
      row["adjacent"] =
          ctx.group().name(ctx.refl_elem(ctx.g5().adjacent_of[r]));
      row["semisquare"] =
          ctx.group().name(ctx.refl_elem(ctx.g5().semisquare_of[r]));
      sets.push_back(std::move(row));
    }
    j["structural_maps"] = std::move(sets);
  }
  if (ctx.name() == "g25") {
    nlohmann::json triples = nlohmann::json::array();
    for (size_t t = 0; t < ctx.g25().triples.size(); ++t) {
      nlohmann::json row = nlohmann::json::array();
      for (int r : ctx.g25().triples[t])
        row.push_back(ctx.group().name(ctx.refl_elem(r)));
      triples.push_back(std::move(row));
    }
    j["triples"] = std::move(triples);
  }
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group " << ctx.name() << ": |W|=" << ctx.group().size()
              << " |R|=" << ctx.num_reflections()
              << " |A|=" << ctx.refl().num_hyperplanes
              << " n=" << ctx.group().rank() << " h=" << ctx.coxeter().h
              << "\n";
    for (const auto& row : j["reflection_classes"])
      std::cout << "  " << row["label"].get<std::string>() << " ("
                << row["size"].get<size_t>() << " elements)\n";
  }
  return 0;
}

int cmd_orbit(const Options& opt, const std::string& text) {
  const GroupContext& ctx = GroupContext::get(opt.group);
  refl::Factorization f = refl::parse_factorization(ctx, text);
  refl::OrbitReport rep = refl::orbit(ctx, f, opt.cap);
  if (rep.truncated) {
    std::cerr << "orbit cap exceeded; size is at least " << rep.size << "\n";
    return kExitCap;
  }
  if (opt.format == "json") {
    std::ostringstream key;
    key << "orbit-";
    for (int p : f.parts) key << p << "_";
    nlohmann::json j = cached(opt, ctx, key.str(),
                              [&] { return orbit_report_json(ctx, rep); });
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "orbit size " << rep.size << ", signature "
              << rep.signature.to_string() << "\n";
    for (const refl::Factorization& g : rep.members)
      std::cout << "  (" << factorization_to_string(ctx, g) << ")\n";
  }
  return 0;
}

int cmd_count(const Options& opt, int max_m) {
  const GroupContext& ctx = GroupContext::get(opt.group);
  refl::ElemId c = resolve_coxeter(ctx, opt.coxeter);
  int gate = gate_length(opt.group) + (opt.slow ? 1 : 0);
  std::cout << "m,egf_count,enumerated,orbits";
  if (opt.group == "g4") std::cout << ",ceil(m/3)";
  std::cout << "\n";
  for (int m = ctx.group().rank(); m <= max_m; ++m) {
    refl::Integer egf = refl::count_via_egf(ctx, m);
    std::cout << m << "," << egf;
    if (m <= gate) {
      refl::CensusReport rep = refl::verify_transitivity(ctx, c, m, opt.cap);
      std::cout << "," << rep.total << "," << rep.orbits.size();
    } else {
      std::cout << ",,";
    }
    if (opt.group == "g4") std::cout << "," << (m + 2) / 3;
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite,
               const std::string& lengths) {
  const GroupContext& ctx = GroupContext::get(opt.group);
  refl::ElemId c = resolve_coxeter(ctx, opt.coxeter);
  nlohmann::json out;
  out["schema_version"] = refl::kSchemaVersion;
  out["group"] = ctx.name();
  out["suite"] = suite;
  bool pass = true;

  if (suite == "pair-orbits") {
    refl::PairOrbitCheckReport rep = refl::verify_pair_orbits(ctx);
    out["pairs_checked"] = rep.pairs_checked;
    out["violations"] = rep.violations;
    pass = rep.ok();
  } else if (suite == "transitivity" || suite == "pair-existence" ||
             suite == "g25-program") {
    int lo = ctx.group().rank(), hi = lo;
    if (!lengths.empty()) parse_lengths(lengths, lo, hi);
    if (hi > gate_length(opt.group) && !opt.slow) {
      std::cerr << "length " << hi << " is gated; pass --slow\n";
      return kExitGate;
    }
    nlohmann::json runs = nlohmann::json::array();
    for (int m = lo; m <= hi; ++m) {
      refl::CensusReport rep =
          suite == "g25-program"
              ? refl::g25_program(ctx, c, m, opt.cap)
              : refl::verify_transitivity(ctx, c, m, opt.cap);
      if (suite == "pair-existence") {
        for (const refl::OrbitSummary& o : rep.orbits)
          if (!o.has_square_pair)
            rep.failures.push_back("orbit of signature " +
                                   o.signature.to_string() +
                                   " has no adjacent equal pair");
      }
      pass = pass && rep.ok();
      runs.push_back(census_report_json(ctx, rep));
      if (opt.format == "csv") std::cout << refl::census_csv(rep);
    }
    out["runs"] = std::move(runs);
  } else if (suite == "reduction-roundtrip") {
    int lo = ctx.group().rank() + 1, hi = lo;
    if (!lengths.empty()) parse_lengths(lengths, lo, hi);
    size_t checked = 0, failures = 0;
    for (int m = lo; m <= hi; ++m) {
      auto all = refl::enumerate_factorizations(ctx, c, m);
      size_t stride = std::max<size_t>(1, all.size() / 200);
      for (size_t i = 0; i < all.size(); i += stride) {
        refl::ReduceTrace tr = refl::canonical_reduce(ctx, all[i]);
        if (!refl::replay(ctx, tr)) ++failures;
        ++checked;
      }
    }
    out["sampled"] = checked;
    out["replay_failures"] = failures;
    pass = failures == 0;
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return kExitParse;
  }

  out["pass"] = pass;
  std::cout << out.dump(2) << "\n";
  return pass ? 0 : kExitVerify;
}

int cmd_reduce(const Options& opt, const std::string& text) {
  const GroupContext& ctx = GroupContext::get(opt.group);
  refl::Factorization f = refl::parse_factorization(ctx, text);
  if (static_cast<int>(f.length()) <= refl::base_length(ctx)) {
    std::cerr << "already at base length\n";
    return kExitParse;
  }
  refl::ReduceTrace tr = refl::canonical_reduce(ctx, f);
  std::cout << trace_json(ctx, tr).dump(2) << "\n";
  return 0;
}

int cmd_replay(const Options& opt, const std::string& path) {
  const GroupContext& ctx = GroupContext::get(opt.group);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open trace file: " << path << "\n";
    return kExitParse;
  }
  nlohmann::json j;
  in >> j;
  auto parse_fact = [&](const nlohmann::json& fj) {
    std::string s;
    for (const auto& p : fj["parts"]) {
      if (!s.empty()) s += ",";
      s += p.get<std::string>();
    }
    return refl::parse_factorization(ctx, s);
  };
  refl::ReduceTrace tr;
  tr.input = parse_fact(j["input"]);
  tr.base = parse_fact(j["base"]);
  for (const auto& sj : j["steps"]) {
    refl::ReduceStep step;
    step.word = refl::braid_parse(sj["word"].get<std::string>());
    step.before = parse_fact(sj["before"]);
    step.position = sj["position"].get<int>();
    std::string label = sj["class_label"].get<std::string>();
    step.class_label = std::stoi(label.substr(1)) - 1;
    step.after = parse_fact(sj["after"]);
    tr.steps.push_back(std::move(step));
  }
  bool ok = refl::replay(ctx, tr);
  std::cout << (ok ? "replay ok\n" : "replay failed\n");
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz-orbit toolkit for the order-24/72/648 reflection groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--coxeter", opt.coxeter, "Coxeter element name or 'default'");
  app.add_option("--cap", opt.cap, "orbit state cap");
  app.add_option("--parallel", opt.parallel, "worker count (reports are deterministic)");
  app.add_option("--format", opt.format, "table | json | csv");
  app.add_option("--cache-dir", opt.cache_dir, "report cache directory");
  app.add_flag("--slow", opt.slow, "enable long-running lengths");

  std::string text, suite, lengths, trace_path;
  int max_m = 6;

  CLI::App* info = app.add_subcommand("info", "group summary");
  info->add_option("group", opt.group)->required();

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "orbit of a factorization");
  orbit_cmd->add_option("group", opt.group)->required();
  orbit_cmd->add_option("factorization", text)->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("group", opt.group)->required();
  verify->add_option("suite", suite)->required();
  verify->add_option("--lengths", lengths, "length or a..b range");

  CLI::App* count = app.add_subcommand("count", "counting table");
  count->add_option("group", opt.group)->required();
  count->add_option("--max", max_m, "maximum length");

  CLI::App* reduce = app.add_subcommand("reduce", "canonical reduction trace");
  reduce->add_option("group", opt.group)->required();
  reduce->add_option("factorization", text)->required();

  CLI::App* replay = app.add_subcommand("replay", "replay a reduction trace");
  replay->add_option("group", opt.group)->required();
  replay->add_option("trace", trace_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(opt);
    if (orbit_cmd->parsed()) return cmd_orbit(opt, text);
    if (verify->parsed()) return cmd_verify(opt, suite, lengths);
    if (count->parsed()) return cmd_count(opt, max_m);
    if (reduce->parsed()) return cmd_reduce(opt, text);
    if (replay->parsed()) return cmd_replay(opt, trace_path);
  } catch (const refl::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const refl::ReductionStuck& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
