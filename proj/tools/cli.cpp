#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "wmult/bz.hpp"
#include "wmult/oracle.hpp"
#include "wmult/rootsystem.hpp"
#include "wmult/survey.hpp"

namespace wmult::cli {

namespace {

using nlohmann::json;

const char* kUsage =
    "usage: wmult <command> [arguments]\n"
    "\n"
    "commands:\n"
    "  roots <TYPE>                              highest short and long roots\n"
    "  mult <lambda> <mu>                        exact weight multiplicity dim V_mu\n"
    "  diagram <lambda>                          dominant weight diagram of V(lambda), TSV\n"
    "  pair <lambda> <mu>                        primitive / nonprimitive classification\n"
    "  multone <lambda> <mu> [--projection drop|restrict] [--oracle]\n"
    "                                            multiplicity-one fast path\n"
    "  project <lambda> <mu> [--projection drop|restrict]\n"
    "                                            support components and projections\n"
    "  survey <TYPE> [--cap N] [--target short|long|both] [--crossval] [--e8-full]\n"
    "                                            nonprimitive multiplicity-one sweep, TSV\n"
    "  verify-paper [--cap N]                    verify the classification table, JSON\n"
    "\n"
    "weights: <FAMILY><rank>:<m1>,<m2>,... (root coordinates)\n"
    "         <FAMILY><rank>:w:<c1>,<c2>,... (fundamental-weight coordinates)\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LieType parse_type(const std::string& tok) {
  if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'G')
    throw UsageError("bad type '" + tok + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), rank);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw UsageError("bad type '" + tok + "'");
  LieType t{static_cast<Family>(tok[0]), rank};
  require_valid(t);
  return t;
}

Int parse_cap(const std::string& tok) {
  Int cap = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), cap);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || cap < 1)
    throw UsageError("bad cap '" + tok + "'");
  return cap;
}

std::string node_set_text(const std::vector<int>& nodes) {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nodes[i] + 1);
  }
  return s + "}";
}

std::string pair_class_text(const bz::PairClass& pc) {
  switch (pc.kind) {
    case bz::PairKind::Primitive: return "primitive";
    case bz::PairKind::Nonprimitive: return "nonprimitive S=" + node_set_text(pc.support);
    case bz::PairKind::Equal: return "equal";
    case bz::PairKind::NotComparable: return "incomparable";
  }
  return "";
}

int cmd_roots(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw UsageError("roots expects one type");
  auto [s, l] = highest_roots(parse_type(args[0]));
  out << "short " << to_text(s) << "  long " << to_text(l) << "\n";
  return 0;
}

int cmd_mult(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 2) throw UsageError("mult expects two weights");
  RootCoordWeight lambda = parse_weight(args[0]);
  RootCoordWeight mu = parse_weight(args[1]);
  out << oracle::multiplicity(lambda, mu) << "\n";
  return 0;
}

int cmd_diagram(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw UsageError("diagram expects one weight");
  RootCoordWeight lambda = parse_weight(args[0]);
  oracle::WeightDiagram wd = oracle::weight_diagram(lambda);
  std::vector<IntVec> keys;
  keys.reserve(wd.table.size());
  for (auto& [nu, m] : wd.table) keys.push_back(nu);
  std::sort(keys.begin(), keys.end(), [&](const IntVec& a, const IntVec& b) {
    Int ha = 0, hb = 0;
    for (Int x : a) ha += x;
    for (Int x : b) hb += x;
    if (ha != hb) return ha > hb;  // highest weight first
    return a < b;
  });
  for (const IntVec& nu : keys)
    out << to_text(RootCoordWeight{lambda.type, nu}) << "\t" << wd.table.at(nu) << "\n";
  return 0;
}

int cmd_pair(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 2) throw UsageError("pair expects two weights");
  RootCoordWeight lambda = parse_weight(args[0]);
  RootCoordWeight mu = parse_weight(args[1]);
  out << pair_class_text(bz::classify_pair(lambda, mu)) << "\n";
  return 0;
}

bz::Projection parse_projection(const std::string& tok) {
  if (tok == "drop") return bz::Projection::Drop;
  if (tok == "restrict") return bz::Projection::Restrict;
  throw UsageError("bad projection '" + tok + "'");
}

int cmd_multone(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> pos;
  bz::Projection proj = bz::Projection::Restrict;
  bool with_oracle = false;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--projection") {
      if (++i == args.size()) throw UsageError("--projection needs a value");
      proj = parse_projection(args[i]);
    } else if (args[i] == "--oracle") {
      with_oracle = true;
    } else if (!args[i].empty() && args[i][0] == '-') {
      throw UsageError("unknown flag '" + args[i] + "'");
    } else {
      pos.push_back(args[i]);
    }
  }
  if (pos.size() != 2) throw UsageError("multone expects two weights");
  RootCoordWeight lambda = parse_weight(pos[0]);
  RootCoordWeight mu = parse_weight(pos[1]);
  bool verdict = bz::multiplicity_one(lambda, mu, proj);
  if (!with_oracle) {
    out << (verdict ? "yes" : "no") << "\n";
    return 0;
  }
  Int k = oracle::multiplicity(lambda, mu);
  out << (verdict ? "yes" : "no") << "\t" << k << "\n";
  return verdict == (k == 1) ? 0 : 1;
}

int cmd_project(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> pos;
  bz::Projection proj = bz::Projection::Restrict;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--projection") {
      if (++i == args.size()) throw UsageError("--projection needs a value");
      proj = parse_projection(args[i]);
    } else if (!args[i].empty() && args[i][0] == '-') {
      throw UsageError("unknown flag '" + args[i] + "'");
    } else {
      pos.push_back(args[i]);
    }
  }
  if (pos.size() != 2) throw UsageError("project expects two weights");
  RootCoordWeight lambda = parse_weight(pos[0]);
  RootCoordWeight mu = parse_weight(pos[1]);
  bz::PairClass pc = bz::classify_pair(lambda, mu);
  if (pc.kind == bz::PairKind::NotComparable) throw UsageError("pair is incomparable");
  std::vector<int> nodes =
      pc.kind == bz::PairKind::Primitive ? bz::support(lambda - mu) : pc.support;
  for (const std::vector<int>& comp_nodes : bz::components(lambda.type, nodes)) {
    bz::SubdiagramComponent comp = bz::classify_subdiagram(lambda.type, comp_nodes);
    out << "S=" << node_set_text(comp.nodes) << "\t" << comp.classified.to_string()
        << "\trelabel ";
    for (size_t k = 0; k < comp.nodes.size(); ++k) {
      if (k) out << ",";
      out << comp.nodes[k] + 1 << "->" << comp.standard_of[k] + 1;
    }
    if (proj == bz::Projection::Drop) {
      out << "\tp(lambda)=" << to_text(bz::project_drop(lambda, comp))
          << "\tp(mu)=" << to_text(bz::project_drop(mu, comp));
    } else {
      out << "\tp(lambda)=" << to_text(bz::project_restrict(lambda, comp))
          << "\tp(mu)=" << to_text(bz::project_restrict(mu, comp));
    }
    out << "\n";
  }
  return 0;
}

json record_json(const survey::SurveyRecord& rec) {
  json j;
  j["type"] = rec.type.to_string();
  j["zeta"] = to_text(rec.zeta);
  j["target"] = survey::target_name(rec.target);
  j["mu"] = to_text(rec.mu);
  j["class"] = "nonprimitive";
  j["fastpath"] = rec.fastpath_verdict;
  j["oracle"] = rec.oracle_value;
  return j;
}

int cmd_survey(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> pos;
  Int cap = 8;
  std::string target = "both";
  bool crossval = false, e8_full = false, as_json = false;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--cap") {
      if (++i == args.size()) throw UsageError("--cap needs a value");
      cap = parse_cap(args[i]);
    } else if (args[i] == "--target") {
      if (++i == args.size()) throw UsageError("--target needs a value");
      target = args[i];
      if (target != "short" && target != "long" && target != "both")
        throw UsageError("bad target '" + target + "'");
    } else if (args[i] == "--crossval") {
      crossval = true;
    } else if (args[i] == "--e8-full") {
      e8_full = true;
    } else if (args[i] == "--json") {
      as_json = true;
    } else if (args[i] == "--tsv") {
      as_json = false;
    } else if (!args[i].empty() && args[i][0] == '-') {
      throw UsageError("unknown flag '" + args[i] + "'");
    } else {
      pos.push_back(args[i]);
    }
  }
  if (pos.size() != 1) throw UsageError("survey expects one type");
  LieType t = parse_type(pos[0]);

  if (crossval) {
    out << "type\tlambda\tmu\tdrop\trestrict\toracle\n";
    for (const survey::Divergence& d : survey::cross_validate(t, cap))
      out << t.to_string() << "\t" << to_text(d.lambda) << "\t" << to_text(d.mu) << "\t"
          << (d.drop_verdict ? "yes" : "no") << "\t" << (d.restrict_verdict ? "yes" : "no")
          << "\t" << d.oracle_value << "\n";
    return 0;
  }

  survey::SweepOptions opt;
  opt.cap = cap;
  opt.e8_full = e8_full;
  std::vector<survey::SurveyRecord> recs = survey::find_nonprimitive_multone(t, opt);
  auto want = [&](const survey::SurveyRecord& r) {
    if (target == "both") return true;
    return survey::target_name(r.target) == target;
  };
  if (as_json) {
    json arr = json::array();
    for (const auto& r : recs)
      if (want(r)) arr.push_back(record_json(r));
    out << arr.dump(2) << "\n";
    return 0;
  }
  out << "type\tzeta\ttarget\tmu\tclass\tfastpath\toracle\n";
  for (const auto& r : recs) {
    if (!want(r)) continue;
    out << r.type.to_string() << "\t" << to_text(r.zeta) << "\t" << survey::target_name(r.target)
        << "\t" << to_text(r.mu) << "\tnonprimitive\t" << (r.fastpath_verdict ? "true" : "false")
        << "\t" << r.oracle_value << "\n";
  }
  return 0;
}

int cmd_verify_paper(const std::vector<std::string>& args, std::ostream& out) {
  Int cap = 8;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--cap") {
      if (++i == args.size()) throw UsageError("--cap needs a value");
      cap = parse_cap(args[i]);
    } else {
      throw UsageError("unknown argument '" + args[i] + "'");
    }
  }
  survey::PaperVerification pv = survey::verify_paper(cap);
  json lemmas = json::object();
  for (const auto& [name, reports] : pv.lemmas) {
    json lj;
    bool pass = true;
    Int lemma_cap = 0;
    json types = json::array();
    std::vector<std::string> witnesses;
    json not_one = json::array();
    json not_in_table = json::array();
    json missed = json::array();
    json disagreements = json::array();
    for (const survey::TypeReport& r : reports) {
      pass = pass && r.pass();
      lemma_cap = std::max(lemma_cap, r.cap);
      types.push_back(r.type.to_string() + (r.e8_slice ? ":m8=2" : ""));
      for (const auto& rec : r.multone) witnesses.push_back(to_text(rec.zeta));
      for (const auto& rec : r.not_one) not_one.push_back(record_json(rec));
      for (const auto& w : r.not_in_table) not_in_table.push_back(to_text(w));
      for (const auto& w : r.missed_by_enumeration) missed.push_back(to_text(w));
      for (const auto& rec : r.disagreements) disagreements.push_back(record_json(rec));
    }
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    lj["pass"] = pass;
    lj["cap"] = lemma_cap;
    lj["types"] = types;
    lj["witnesses"] = witnesses;
    lj["confirmed_not_one"] = not_one;
    lj["failures"] = {{"not_in_table", not_in_table},
                      {"missed_by_enumeration", missed},
                      {"fastpath_oracle_disagreements", disagreements}};
    lemmas[name] = lj;
  }
  lemmas["theorem_main"] = {{"pass", pv.pass()}};
  json j;
  j["schema"] = 1;
  j["cap"] = pv.cap;
  j["pass"] = pv.pass();
  j["lemmas"] = lemmas;
  out << j.dump(2) << "\n";
  return pv.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    if (cmd == "roots") return cmd_roots(rest, out);
    if (cmd == "mult") return cmd_mult(rest, out);
    if (cmd == "diagram") return cmd_diagram(rest, out);
    if (cmd == "pair") return cmd_pair(rest, out);
    if (cmd == "multone") return cmd_multone(rest, out);
    if (cmd == "project") return cmd_project(rest, out);
    if (cmd == "survey") return cmd_survey(rest, out);
    if (cmd == "verify-paper") return cmd_verify_paper(rest, out);
    err << "unknown command '" << cmd << "'\n" << kUsage;
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wmult::cli
