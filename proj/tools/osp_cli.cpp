// osp: command-line front end.
//
// Exit status: 0 success, 1 bad input, 2 a complexity identity failed (report still printed).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "osp/osp.hpp"
#include "osp/serialize.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitIdentity = 2;
constexpr int kDefaultDepth = 60;
constexpr int kMinDepth = 12;

struct Config {
  int k = 0;
  std::string weight_text;
  std::optional<int> depth;
  std::string mode = "lower";
  std::string format = "text";
  std::string range = "-3..3";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int resolve_depth(const Config& cfg) {
  int depth = kDefaultDepth;
  if (cfg.depth) {
    depth = *cfg.depth;
  } else if (const char* env = std::getenv("OSP_DEPTH")) {
    try {
      std::size_t used = 0;
      depth = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InputError(std::string("OSP_DEPTH is not an integer: ") + env);
    }
  }
  if (depth < kMinDepth) throw InputError("depth must be at least " + std::to_string(kMinDepth));
  return depth;
}

osp::Weight resolve_weight(const Config& cfg) {
  if (cfg.weight_text.empty()) return osp::Weight::zero(cfg.k);
  return osp::parse_weight(cfg.k, cfg.weight_text);
}

osp::ProxyMode resolve_mode(const Config& cfg) { return cfg.mode == "upper" ? osp::ProxyMode::Upper : osp::ProxyMode::Lower; }

std::pair<long, long> resolve_range(const Config& cfg) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch mt;
  if (!std::regex_match(cfg.range, mt, re)) throw InputError("range must look like a..b, got " + cfg.range);
  const long a = std::stol(mt[1]), b = std::stol(mt[2]);
  if (a > b) throw InputError("empty range " + cfg.range);
  return {a, b};
}

std::string sset_text(const osp::AtypicalityInfo& info) {
  std::string out = "{";
  for (std::size_t i = 0; i < info.sset.size(); ++i) out += (i ? "," : "") + info.sset[i].str();
  return out + "}";
}

int cmd_rootsys(const Config& cfg) {
  const auto rs = osp::build_root_system(cfg.k);
  if (cfg.format == "json") {
    std::cout << osp::to_json(rs).dump(2) << '\n';
    return 0;
  }
  std::cout << "osp(" << rs.k << "|2)  m=" << rs.m << "  s=" << rs.s << '\n'
            << "rho  = " << rs.rho.str() << '\n'
            << "rho0 = " << rs.rho0.str() << '\n'
            << "rho1 = " << rs.rho1.str() << '\n';
  auto list = [](const char* title, const std::vector<osp::Root>& roots) {
    std::cout << title << " (" << roots.size() << "):\n";
    for (const auto& r : roots)
      std::cout << "  " << r.label << "  " << r.vec.str() << (r.isotropic ? "  isotropic" : "") << '\n';
  };
  list("simple roots", rs.simple_roots);
  list("positive even roots", rs.pos_even);
  list("positive odd roots", rs.pos_odd);
  return 0;
}

int cmd_atyp(const Config& cfg) {
  const osp::Weight w = resolve_weight(cfg);
  if (!osp::is_g0_dominant(w)) throw InputError("weight " + w.str() + " is not g0-dominant");
  const auto info = osp::atypicality(w);
  if (cfg.format == "json") {
    auto j = osp::to_json(info);
    j["weight"] = w.str();
    if (!info.atypical()) j["complexity"] = 0;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (!info.atypical())
    std::cout << "typical, complexity 0\n";
  else
    std::cout << "atypical, degree 1, root " << info.root->label() << ", S = " << sset_text(info) << '\n';
  return 0;
}

int cmd_sz(const Config& cfg) {
  const osp::Weight w = resolve_weight(cfg);
  if (!osp::is_g0_dominant(w)) throw InputError("weight " + w.str() + " is not g0-dominant");
  const auto [lo, hi] = resolve_range(cfg);
  const auto ab = osp::a_plus_minus(w);
  const auto block = osp::classify_block(w);
  if (block.quiver != osp::Quiver::DInfinity)
    throw InputError("lambda^(i) is only defined in D_infinity blocks; " + w.str() + " lies in an " +
                     osp::to_string(block.quiver) + " block");
  if (cfg.format == "json") {
    osp::Json j;
    j["weight"] = w.str();
    j["a_plus"] = ab.plus;
    j["a_minus"] = ab.minus;
    j["hat"] = osp::hat(w).str();
    j["check"] = osp::check(w).str();
    osp::Json orbit = osp::Json::array();
    for (long i = lo; i <= hi; ++i) orbit.push_back(osp::Json{{"i", i}, {"weight", block.orbit->at(i).str()}});
    j["orbit"] = orbit;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (cfg.format == "csv") {
    std::cout << "i,weight\n";
    for (long i = lo; i <= hi; ++i) std::cout << i << ",\"" << block.orbit->at(i).str() << "\"\n";
    return 0;
  }
  std::cout << "a+ = " << ab.plus << ", a- = " << ab.minus << '\n'
            << "hat   = " << osp::hat(w).str() << '\n'
            << "check = " << osp::check(w).str() << '\n';
  for (long i = lo; i <= hi; ++i) std::cout << "lambda^(" << i << ") = " << block.orbit->at(i).str() << '\n';
  return 0;
}

int cmd_block(const Config& cfg) {
  const osp::Weight w = resolve_weight(cfg);
  if (!osp::is_g0_dominant(w)) throw InputError("weight " + w.str() + " is not g0-dominant");
  const auto block = osp::classify_block(w);
  if (cfg.format == "json") {
    std::cout << osp::Json{{"weight", w.str()}, {"quiver", osp::to_string(block.quiver)}, {"base", block.base.str()}}.dump(2)
              << '\n';
    return 0;
  }
  std::cout << osp::to_string(block.quiver) << "  base " << block.base.str() << '\n';
  return 0;
}

int cmd_resolution(const Config& cfg) {
  const int depth = resolve_depth(cfg);
  const osp::TrivialResolution res(cfg.k);
  const auto terms = res.terms(depth);
  if (cfg.format == "json") {
    osp::Json a = osp::Json::array();
    for (const auto& t : terms) a.push_back(osp::to_json(t));
    std::cout << a.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    osp::write_resolution_csv(std::cout, terms);
  } else {
    const auto mode = resolve_mode(cfg);
    for (const auto& t : terms) {
      std::cout << "d=" << t.d << "  count=" << t.count << "  proxy=" << t.proxy(mode) << "  summands";
      for (int i : t.summands) std::cout << ' ' << i;
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_report(const Config& cfg) {
  const osp::Weight w = resolve_weight(cfg);
  if (!osp::is_g_dominant(w)) throw InputError("weight " + w.str() + " is not in P+");
  const int depth = resolve_depth(cfg);
  if (depth < osp::min_proxy_depth(cfg.k))
    throw InputError("depth " + std::to_string(depth) + " is below 4m+8 = " + std::to_string(osp::min_proxy_depth(cfg.k)));
  osp::GrowthReport rep;
  try {
    rep = osp::full_report(w, depth, resolve_mode(cfg));
  } catch (const osp::NotPolynomialError& e) {
    throw InputError(e.what());
  }
  if (cfg.format == "json") {
    std::cout << osp::to_json(rep).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "k,weight,atypicality,depth,mode,complexity,z_complexity,dim_associated_variety,dim_support_variety,"
                 "dim_detecting_support,identities_hold\n"
              << rep.k << ",\"" << rep.weight.str() << "\"," << rep.atypicality << ',' << rep.depth << ','
              << osp::to_string(rep.mode) << ',' << rep.complexity << ',' << rep.z_complexity << ','
              << rep.geometry.associated_variety << ',' << rep.geometry.support_variety << ','
              << rep.geometry.detecting_support << ',' << (rep.identities_hold() ? "true" : "false") << '\n';
  } else {
    std::cout << "osp(" << rep.k << "|2)  weight " << rep.weight.str() << "  atypicality " << rep.atypicality << '\n'
              << "depth " << rep.depth << ", " << osp::to_string(rep.mode) << " proxy\n"
              << "complexity          " << rep.complexity << '\n'
              << "z-complexity        " << rep.z_complexity << '\n'
              << "dim X               " << rep.geometry.associated_variety << '\n'
              << "dim support         " << rep.geometry.support_variety << '\n'
              << "dim detecting       " << rep.geometry.detecting_support << '\n'
              << "c = dim X + dim support: " << (rep.complexity_identity_holds ? "holds" : "FAILS") << '\n'
              << "z = dim detecting:       " << (rep.z_identity_holds ? "holds" : "FAILS") << '\n';
  }
  return rep.identities_hold() ? 0 : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weights, blocks and resolution growth for osp(k|2)"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool weight, bool depth) {
    sub->add_option("--k", cfg.k, "k > 2")->required()->check(CLI::Range(3, 1 << 20));
    if (weight) sub->add_option("--weight", cfg.weight_text, "weight literal l0|l1,...,lm (default: trivial)");
    if (depth) {
      sub->add_option("--depth", cfg.depth, "resolution depth (default 60, or OSP_DEPTH)");
      sub->add_option("--mode", cfg.mode, "dimension proxy")->check(CLI::IsMember({"lower", "upper"}));
    }
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  std::function<int(const Config&)> run;
  auto sub = [&](const char* name, const char* help, bool weight, bool depth, int (*fn)(const Config&)) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, weight, depth);
    s->callback([&run, fn] { run = fn; });
    return s;
  };
  sub("rootsys", "rho and the root system", false, false, cmd_rootsys);
  sub("atyp", "atypicality, atypical root and type", true, false, cmd_atyp);
  sub("sz", "translation operators and the orbit lambda^(i)", true, false, cmd_sz)
      ->add_option("--range", cfg.range, "orbit indices a..b (default -3..3)");
  sub("block", "quiver type and base weight of the block", true, false, cmd_block);
  sub("resolution", "terms of the projective resolution of the trivial module", false, true, cmd_resolution);
  sub("report", "complexity, z-complexity and geometric dimensions", true, true, cmd_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return run(cfg);
  } catch (const osp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "  " << cfg.weight_text << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
