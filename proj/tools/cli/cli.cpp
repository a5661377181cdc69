#include "cli.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "oracles.hpp"

namespace hyperlat::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<Int> max_height;
  bool oracle = false;
};

// A command may report a failed verification without throwing.
struct Outcome {
  json doc;
  bool ok = true;
};

json read_input(const Options& opt) {
  if (opt.input.empty()) throw InputError("missing-input", "this command needs --input PATH");
  std::ifstream in(opt.input);
  if (!in) throw InputError("io", "cannot read " + opt.input);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_text(ss.str());
}

const LatticeVector& pick_vector(const io::LatticeDoc& doc, const char* preferred) {
  if (auto it = doc.vectors.find(preferred); it != doc.vectors.end()) return it->second;
  if (doc.vectors.size() == 1) return doc.vectors.begin()->second;
  throw InputError("malformed-input", std::string("expected a vector named \"") + preferred + "\" or exactly one vector");
}

const LatticeVector& named_vector(const io::LatticeDoc& doc, const char* name) {
  auto it = doc.vectors.find(name);
  if (it == doc.vectors.end()) throw InputError("malformed-input", std::string("missing vector \"") + name + "\"");
  return it->second;
}

void require_diagonal(const io::LatticeDoc& doc) {
  if (!doc.lattice.is_diagonal())
    throw DomainError("unsupported-lattice", "this command works in the diagonal lattice of type (1,n)");
}

json words(const Isometry& phi) {
  json w = json::array();
  for (const auto& g : phi.word()) w.push_back(g.str());
  return w;
}

Outcome cmd_canonicalize(const Options& opt) {
  const auto doc = io::lattice_from_json(read_input(opt));
  require_diagonal(doc);
  const LatticeVector& k = pick_vector(doc, "kappa");
  const auto res = canonicalize(k);
  json o{{"n", doc.lattice.negative_rank()},
         {"input", io::to_json(k)},
         {"target", io::to_json(res.target)},
         {"word", words(res.phi)},
         {"matrix", io::to_json(res.phi.matrix())},
         {"steps", res.steps},
         {"leading", res.leading},
         {"reached_canonical", res.reached_canonical}};
  Outcome out{o};
  if (opt.oracle) {
    const bool verified = verify_isometry(res.phi, doc.lattice) && res.phi.apply(k) == res.target;
    out.doc["verified"] = verified;
    out.ok = verified;
  }
  return out;
}

json shape_array(const std::array<std::size_t, kShapeCount>& counts) { return json(counts); }

json oracle_walls(std::size_t n, Int bound, const std::vector<FundamentalWall>& walls, bool* agrees) {
  std::vector<LatticeVector> expected;
  for (const auto& w : walls) expected.push_back(w.alpha);
  const auto brute = oracle::brute_force_walls(n, bound);
  *agrees = brute == expected;
  return json{{"bound", bound}, {"count", brute.size()}, {"agrees", *agrees}};
}

Outcome cmd_walls(const Options& opt) {
  std::size_t n = kMaxChamberRank;
  if (!opt.input.empty()) {
    const auto doc = io::lattice_from_json(read_input(opt));
    require_diagonal(doc);
    n = doc.lattice.negative_rank();
  }
  const auto walls = fundamental_walls(n);
  json table = json::array();
  for (const auto& w : walls) table.push_back(json{{"alpha", io::to_json(w.alpha)}, {"shape", w.shape}});
  Outcome out{json{{"n", n}, {"count", walls.size()}, {"by_shape", shape_array(shape_counts(n))}, {"walls", table}}};
  if (opt.oracle) {
    bool agrees = false;
    out.doc["oracle"] = oracle_walls(n, opt.max_height.value_or(6), walls, &agrees);
    out.ok = agrees;
  }
  return out;
}

Outcome cmd_verify_240(const Options& opt) {
  const auto walls = fundamental_walls(8);
  const auto pairs = e8_wall_bijection();
  std::set<LatticeVector> gammas;
  std::set<LatticeVector> alphas;
  for (const auto& w : walls) alphas.insert(w.alpha);
  bool inverse = true;
  for (const auto& p : pairs) {
    gammas.insert(p.gamma);
    inverse = inverse && alphas.count(p.gamma + kappa(8)) == 1;
  }
  const bool distinct = gammas.size() == pairs.size();
  Outcome out{json{{"count", walls.size()},
                   {"by_shape", shape_array(shape_counts(8))},
                   {"e8", json{{"roots", gammas.size()}, {"distinct", distinct}, {"inverse", inverse}}}}};
  out.ok = walls.size() == 240 && distinct && inverse;
  if (opt.oracle) {
    bool agrees = false;
    out.doc["oracle"] = oracle_walls(8, opt.max_height.value_or(6), walls, &agrees);
    out.ok = out.ok && agrees;
  }
  return out;
}

Outcome cmd_wall_chain(const Options& opt) {
  const json input = read_input(opt);
  const auto doc = io::lattice_from_json(input);
  if (!input.contains("wall_type")) throw InputError("malformed-input", "missing field \"wall_type\"");
  const WallType type = io::wall_type_from_json(input["wall_type"]);
  const LatticeVector& x = named_vector(doc, "x");
  const LatticeVector& y = named_vector(doc, "y");
  const auto chain = wall_chain(doc.lattice, x, y, type);
  json crossings = json::array();
  for (const auto& c : chain)
    crossings.push_back(json{{"wall", io::to_json(c.wall)}, {"parameter", io::to_json(c.parameter)}, {"tied", c.tied}});
  return {json{{"wall_type", io::to_json(type)},
               {"bound", wall_search_bound(doc.lattice, x, y, type)},
               {"same_chamber", chain.empty()},
               {"chain", crossings}}};
}

Outcome cmd_fundamental_cycle(const Options& opt) {
  const DualGraph g = io::graph_from_json(read_input(opt));
  FundamentalCycle fc;
  if (opt.seed) {
    std::mt19937_64 rng(*opt.seed);
    fc = fundamental_cycle(g, rng);
  } else {
    fc = fundamental_cycle(g);
  }
  Outcome out{json{{"Z0", io::to_json(fc.z0)}, {"sequence", fc.sequence}, {"pa_Z0", arithmetic_genus(g, fc.z0)}}};
  if (opt.seed) out.doc["seed"] = *opt.seed;
  if (opt.oracle) {
    const Int bound = opt.max_height.value_or(6);
    const bool agrees = oracle::minimal_anti_nef_cycle(g.matrix(), bound) == fc.z0;
    out.doc["oracle"] = json{{"bound", bound}, {"agrees", agrees}};
    out.ok = agrees;
  }
  return out;
}

json multiplicity_json(const Multiplicity& m) {
  json o{{"multiplicity", m.value}};
  if (m.smooth_point) o["smooth_point"] = true;
  return o;
}

Outcome cmd_classify(const Options& opt) {
  const DualGraph g = io::graph_from_json(read_input(opt));
  const Cycle z0 = fundamental_cycle(g).z0;
  const Int pa = arithmetic_genus(g, z0);
  Outcome out{json{{"Z0", io::to_json(z0)}, {"pa_Z0", pa}}};
  if (pa <= 0) {
    out.doc["type"] = "rational";
    out.doc.update(multiplicity_json(multiplicity(g)));
    out.doc["peel"] = peel_sequence(g);
  } else {
    const auto cert = nonrationality_certificate(g);
    const auto kind = classify_minimally_elliptic(g);
    out.doc["type"] = kind ? "minimally_elliptic" : "nonrational";
    if (kind) out.doc["kind"] = to_string(*kind);
    json c{{"D", io::to_json(cert.d)}, {"E_set", cert.e_set}};
    if (cert.me_kind) c["kind"] = to_string(*cert.me_kind);
    out.doc["certificate"] = c;
  }
  if (opt.oracle) {
    Cycle bound = z0;
    for (std::size_t i = 0; i < bound.size(); ++i) bound[i] *= 3;
    const bool agrees = oracle::all_subcycles_nonpositive(g, bound) == (pa <= 0);
    out.doc["oracle"] = json{{"artin_agrees", agrees}};
    out.ok = agrees;
  }
  return out;
}

Outcome cmd_nef_search(const Options& opt) {
  const SurfaceModel model = io::model_from_json(read_input(opt));
  const auto dom = reflect_to_dominant(model);
  const SurfaceModel dominant = model.with_exceptional(dom.e);
  const auto res = build_nef_orthogonal(dominant);
  const Lattice& L = dominant.lattice();

  json classifications = json::array();
  for (const auto& c : res.report.components) {
    json o{{"curves", c.curves}, {"type", c.rational ? "rational" : "minimally_elliptic"}};
    if (c.rational) o.update(multiplicity_json(c.multiplicity));
    if (c.me_kind) o["kind"] = to_string(*c.me_kind);
    classifications.push_back(o);
  }
  Outcome out{json{{"case", res.case_number},
                   {"M", io::to_json(res.m)},
                   {"M_squared", io::to_json(res.m.square(L))},
                   {"M_dot_E", io::to_json(res.m.dot(L, dominant.exceptional()))},
                   {"contracted", res.report.contracted},
                   {"classifications", classifications},
                   {"ample", res.report.ample()},
                   {"reflection", json{{"word", words(dom.gamma)}, {"E", io::to_json(dom.e)}, {"steps", dom.steps}}}}};
  if (res.certificate)
    out.doc["certificate"] = json{{"cycle", io::to_json(*res.certificate)}, {"curves", res.certificate_curves}};
  if (res.case2) {
    out.doc["case2"] = json{{"curve", *res.violating_curve},
                            {"branch", to_string(res.case2->branch)},
                            {"value", io::to_json(res.case2->value)},
                            {"lambda", io::to_json(res.case2->lambda)},
                            {"citation", res.case2->citation}};
  }
  return out;
}

json certify_one(const LatticeVector& k) {
  const Lattice L = Lattice::diagonal(9);
  const LatticeVector delta = hyperbolic_certificate(k);
  const auto descent = canonicalize(k);
  return json{{"kappa", io::to_json(k)},
              {"delta", io::to_json(delta)},
              {"delta_dot_kappa", inner_product(L, delta, k)},
              {"q_delta", square(L, delta)},
              {"descent", json{{"target", io::to_json(descent.target)},
                               {"steps", descent.steps},
                               {"reached_canonical", descent.reached_canonical}}}};
}

Outcome cmd_certify_n9(const Options& opt) {
  if (!opt.input.empty()) {
    const auto doc = io::lattice_from_json(read_input(opt));
    require_diagonal(doc);
    if (doc.lattice.negative_rank() != 9) throw DomainError("unsupported-rank", "certify-n9 needs n = 9");
    return {certify_one(pick_vector(doc, "kappa"))};
  }
  const std::uint64_t seed = opt.seed.value_or(0);
  const Int max_length = opt.max_height.value_or(12);
  if (max_length < 1) throw InputError("bad-flag", "--max-height must be positive");
  std::mt19937_64 rng(seed);
  const Lattice L = Lattice::diagonal(9);
  constexpr std::size_t kSamples = 200;
  std::size_t certified = 0, canonical = 0, failures = 0, samples = 0;
  while (samples < kSamples) {
    const auto word = oracle::random_word(9, static_cast<std::size_t>(max_length), rng);
    LatticeVector k;
    try {
      k = Isometry(evaluate_word(L, word), word).apply(kappa(9));
    } catch (const OverflowError&) {
      continue;
    }
    ++samples;
    const LatticeVector delta = hyperbolic_certificate(k);
    if (inner_product(L, delta, k) == 1 && square(L, delta) == 1)
      ++certified;
    else
      ++failures;
    if (canonicalize(k).reached_canonical) ++canonical;
  }
  Outcome out{json{{"seed", seed},
                   {"samples", samples},
                   {"certified", certified},
                   {"failures", failures},
                   {"descent_reached_kappa9", canonical}}};
  out.ok = failures == 0;
  return out;
}

void write_output(const Options& opt, const json& doc, std::ostream& out) {
  const std::string text = io::dump(doc);
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw InputError("io", "cannot write " + opt.output);
  f << text;
}

void report_error(std::ostream& err, const std::string& code, const std::string& reason) {
  err << io::dump(json{{"error", json{{"code", code}, {"reason", reason}}}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for (1,n) lattices, chambers and resolution graphs", "hyperlat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  Int max_height = 0;
  std::uint64_t seed = 0;
  app.add_option("--input", opt.input, "input document (JSON)");
  app.add_option("--output", opt.output, "output path (default stdout)");
  auto* seed_opt = app.add_option("--seed", seed, "random seed for sampling drivers");
  auto* height_opt = app.add_option("--max-height", max_height, "search bound for oracle and sampling drivers");
  app.add_flag("--oracle", opt.oracle, "cross-check against brute force");

  using Handler = Outcome (*)(const Options&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"canonicalize", "reduce a characteristic vector to kappa_n", cmd_canonicalize},
      {"walls", "list the oriented walls of the fundamental chamber", cmd_walls},
      {"wall-chain", "walls crossed by the segment from x to y", cmd_wall_chain},
      {"classify-singularity", "rational / minimally elliptic classification", cmd_classify},
      {"fundamental-cycle", "fundamental cycle by a computation sequence", cmd_fundamental_cycle},
      {"nef-search", "nef and big divisor orthogonal to E", cmd_nef_search},
      {"verify-240", "wall count of C_8 and the E8 bijection", cmd_verify_240},
      {"certify-n9", "hyperbolic pair certificate for n = 9", cmd_certify_n9},
  };
  for (const auto& [name, desc, handler] : commands) app.add_subcommand(name, desc);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitInput;
  }
  if (*seed_opt) opt.seed = seed;
  if (*height_opt) opt.max_height = max_height;

  Handler handler = nullptr;
  for (const auto& [name, desc, h] : commands)
    if (app.got_subcommand(name)) handler = h;

  try {
    const Outcome res = handler(opt);
    write_output(opt, res.doc, out);
    if (!res.ok) {
      report_error(err, "verification-failed", "a cross-check disagreed; see the output document");
      return kExitDomain;
    }
    return kExitOk;
  } catch (const InputError& e) {
    report_error(err, e.code(), e.reason());
    return kExitInput;
  } catch (const Error& e) {
    report_error(err, e.code(), e.reason());
    return kExitDomain;
  } catch (const io::json::exception& e) {
    report_error(err, "malformed-input", e.what());
    return kExitInput;
  }
}

}  // namespace hyperlat::cli
