// Command-line front end: multiplicity-freeness verdicts for restrictions to
// the principal rank-1 subgroup, restricted-character tables, certificates,
// reproduction sweeps for the stored tables, and TSV ingestion.
//
// Exit codes: 0 multiplicity-free / success, 1 not multiplicity-free (or a
// reproduction diff), 2 unknown or usage/input error.

#include "mfa1/ingest.hpp"
#include "mfa1/paperdata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace mfa1;

namespace {

struct WeightArgs {
  std::string family;
  int rank = 0;
  std::string coords;
  Int p = 0;
};

GroupType parse_type(const WeightArgs& a) {
  if (a.family.size() != 1) throw error("family must be a single letter A..G");
  GroupType t{family_from_letter(a.family[0]), a.rank};
  if (!t.valid()) throw invalid_rank("invalid rank " + std::to_string(a.rank) + " for family");
  return t;
}

Weight parse_weight(const std::string& coords, int rank) {
  std::vector<Int> c;
  std::string cur;
  for (char ch : coords + ",") {
    if (ch == ',') {
      if (cur.empty()) throw error("empty coordinate in '" + coords + "'");
      c.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (static_cast<int>(c.size()) != rank)
    throw error("expected " + std::to_string(rank) + " coordinates in '" + coords + "'");
  return Weight(std::move(c));
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

json factors_json(const std::map<Int, BigInt>& factors) {
  // flat list, descending; refuse to expand absurd multiplicities
  BigInt total = 0;
  for (const auto& [t, m] : factors) total += m;
  if (total > 100000) throw error("factor list too large to print");
  json a = json::array();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    for (BigInt k = 0; k < it->second; ++k) a.push_back(it->first);
  return a;
}

json certificate_json(const principal::Certificate& c) {
  json j;
  j["kind"] = c.kind_name();
  j["r"] = c.r;
  j["p"] = c.p;
  switch (c.kind) {
    case principal::Certificate::Kind::Tilting:
      j["weyl_irreducible"] = true;
      j["tilting_reducible"] = true;
      j["in_root_lattice"] = c.in_root_lattice;
      if (c.side_condition_bound != 0) j["side_condition_bound"] = c.side_condition_bound;
      break;
    case principal::Certificate::Kind::DimBound:
    case principal::Certificate::Kind::DimBoundOmega:
      j["dim_lower"] = c.dim_lower.get_str();
      j["dim_exact"] = c.dim_exact;
      j["bound"] = c.bound;
      break;
    case principal::Certificate::Kind::WeightCount: {
      j["d"] = c.d;
      j["count"] = c.count.get_str();
      json ws = json::array();
      for (const auto& [w, lb] : c.weight_witnesses)
        ws.push_back(json{{"weight", weight_json(w)}, {"dim_at_least", lb}});
      j["witnesses"] = ws;
      break;
    }
    case principal::Certificate::Kind::Recurrence: {
      j["d"] = c.d;
      j["m_d"] = c.count.get_str();
      json np = json::array();
      for (const auto& n : c.n_prefix) np.push_back(n.get_str());
      j["n_prefix"] = np;
      json fs = json::array();
      for (const auto& [t, m] : c.factors_so_far)
        fs.push_back(json{{"hw", t}, {"mult", m.get_str()}});
      j["factors_so_far"] = fs;
      break;
    }
  }
  return j;
}

// Factor multiset of the full restriction via per-layer characters; empty
// optional when some layer's character is unavailable.
std::optional<std::map<Int, BigInt>> layered_factors(const RootSystem& rs, const Weight& lambda,
                                                     Int p, const Character* ingested) {
  if (ingested) return a1::decompose(principal::project(rs, *ingested), p);
  auto layers = paperdata::p_layers(lambda, p);
  principal::A1Char total;
  total.mult[0] = 1;
  WeylSolver solver(rs, p);
  Int scale = 1;
  for (const auto& li : layers) {
    auto ch = principal::irreducible_character_for(rs, li, p, &solver);
    if (!ch) return std::nullopt;
    total = total * principal::project(rs, *ch).twist(scale);
    scale *= p;
  }
  return a1::decompose(total, p);
}

int cmd_verdict(const WeightArgs& args, const std::string& source_path) {
  GroupType t = parse_type(args);
  RootSystem rs = build(t);
  Weight lambda = parse_weight(args.coords, t.rank);
  if (!lambda.dominant()) throw error("lambda must be dominant");
  if (!is_prime(args.p)) throw error("p must be prime");
  std::optional<Character> ing;
  if (!source_path.empty()) {
    IngestedTable tab = ingest_file(source_path);
    if (!(tab.lambda == lambda) || tab.p != args.p)
      throw ingest_error("ingested table does not match the requested weight and prime");
    ing = tab.to_character(rs);
  }

  principal::Verdict v = paperdata::corollary_verdict(rs, lambda, args.p);
  json out;
  out["schema"] = 1;
  out["command"] = "verdict";
  out["group"] = t.name();
  out["lambda"] = weight_json(lambda);
  out["p"] = args.p;
  out["r"] = principal::restrict_weight(rs, lambda);
  out["verdict"] = v.status == principal::Status::MF ? "MF" : "NotMF";
  out["branch"] = v.branch;
  if (auto factors = layered_factors(rs, lambda, args.p, ing ? &*ing : nullptr)) {
    out["factors"] = factors_json(*factors);
    bool repeat = std::any_of(factors->begin(), factors->end(),
                              [](const auto& kv) { return kv.second > 1; });
    if ((v.status == principal::Status::MF) == repeat)
      throw error("internal: computed decomposition contradicts the classification");
  }
  if (v.status == principal::Status::NotMF && lambda.p_restricted(args.p)) {
    if (auto cert = principal::certify_not_mf(rs, lambda, args.p, nullptr, ing ? &*ing : nullptr,
                                              paperdata::weight_dim_oracle()))
      out["certificate"] = certificate_json(*cert);
  }
  std::cout << out.dump(2) << "\n";
  return v.status == principal::Status::MF ? 0 : 1;
}

int cmd_restrict(const WeightArgs& args, const std::string& source, const std::string& dump_path) {
  GroupType t = parse_type(args);
  RootSystem rs = build(t);
  Weight lambda = parse_weight(args.coords, t.rank);
  if (!lambda.dominant()) throw error("lambda must be dominant");
  const bool char0 = args.p == 0;
  if (!char0 && !is_prime(args.p)) throw error("p must be prime (or 0 for characteristic zero)");

  std::optional<Character> ch;
  std::string used_source = source.empty() ? (char0 ? "weyl" : "irreducible") : source;
  if (used_source.rfind("file:", 0) == 0) {
    auto tab = ingest_file(used_source.substr(5));
    if (!(tab.lambda == lambda) || tab.p != args.p)
      throw ingest_error("ingested table does not match the requested weight and characteristic");
    ch = tab.to_character(rs);
  } else if (used_source == "weyl" || char0) {
    ch = freudenthal(rs, lambda);
  } else if (used_source == "irreducible") {
    ch = principal::irreducible_character_for(rs, lambda, args.p);
    if (!ch) throw character_unavailable("irreducible character not derivable; ingest a table");
  } else {
    throw error("unknown --source '" + used_source + "'");
  }

  auto a1char = principal::project(rs, *ch);
  std::map<Int, BigInt> factors =
      char0 ? a1::char0_decompose(a1char) : a1::decompose(a1char, args.p);

  json out;
  out["schema"] = 1;
  out["command"] = "restrict";
  out["group"] = t.name();
  out["lambda"] = weight_json(lambda);
  out["p"] = args.p;
  out["r"] = principal::restrict_weight(rs, lambda);
  out["source"] = used_source;
  json table = json::array();
  for (auto it = a1char.mult.rbegin(); it != a1char.mult.rend(); ++it)
    table.push_back(json{{"weight", it->first}, {"mult", it->second.get_str()}});
  out["restriction"] = table;
  out["factors"] = factors_json(factors);
  bool mf = std::none_of(factors.begin(), factors.end(),
                         [](const auto& kv) { return kv.second > 1; });
  out["multiplicity_free"] = mf;
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw error("cannot write '" + dump_path + "'");
    f << to_tsv(t, lambda, args.p, *ch);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_certify(const WeightArgs& args) {
  GroupType t = parse_type(args);
  RootSystem rs = build(t);
  Weight lambda = parse_weight(args.coords, t.rank);
  if (!lambda.dominant()) throw error("lambda must be dominant");
  if (!is_prime(args.p)) throw error("p must be prime");
  if (!lambda.p_restricted(args.p)) throw error("certify requires a p-restricted weight");

  auto cert =
      principal::certify_not_mf(rs, lambda, args.p, nullptr, nullptr, paperdata::weight_dim_oracle());
  json out;
  out["schema"] = 1;
  out["command"] = "certify";
  out["group"] = t.name();
  out["lambda"] = weight_json(lambda);
  out["p"] = args.p;
  out["r"] = principal::restrict_weight(rs, lambda);
  if (cert) {
    out["certificate"] = certificate_json(*cert);
    out["verified"] = principal::verify_certificate(rs, lambda, args.p, *cert,
                                                    paperdata::weight_dim_oracle());
  } else {
    out["certificate"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return cert ? 1 : 2;
}

int cmd_jantzen(const WeightArgs& args) {
  GroupType t = parse_type(args);
  RootSystem rs = build(t);
  Weight lambda = parse_weight(args.coords, t.rank);
  if (!lambda.dominant()) throw error("lambda must be dominant");
  if (!is_prime(args.p)) throw error("p must be prime");
  JsfSum js = jsf_sum(rs, lambda, args.p);
  json out;
  out["schema"] = 1;
  out["command"] = "jantzen";
  out["group"] = t.name();
  out["lambda"] = weight_json(lambda);
  out["p"] = args.p;
  json terms = json::array();
  for (const auto& [mu, c] : js.terms)
    terms.push_back(json{{"mu", weight_json(mu)}, {"coeff", c}});
  out["terms"] = terms;
  out["weyl_irreducible"] = js.empty();
  if (auto series = simple_solve(rs, lambda, args.p)) {
    json fs = json::array();
    for (const auto& [mu, m] : series->factors)
      fs.push_back(json{{"hw", weight_json(mu)}, {"mult", m}});
    out["composition_factors"] = fs;
  } else {
    out["composition_factors"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

std::vector<GroupType> sweep_types(int max_rank) {
  std::vector<GroupType> types;
  for (int l = 2; l <= max_rank; ++l) types.push_back({Family::A, l});
  for (int l = 2; l <= max_rank; ++l) types.push_back({Family::B, l});
  for (int l = 3; l <= max_rank; ++l) types.push_back({Family::C, l});
  for (int l = 4; l <= max_rank; ++l) types.push_back({Family::D, l});
  for (int l = 6; l <= std::min(8, max_rank); ++l) types.push_back({Family::E, l});
  if (max_rank >= 4) types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  return types;
}

// Weights with support on at most two nodes, all coefficients <= max_coeff.
template <class F>
void for_each_sweep_weight(const RootSystem& rs, Int max_coeff, F&& fn) {
  const int l = rs.rank();
  for (int i = 0; i < l; ++i)
    for (Int c = 1; c <= max_coeff; ++c) {
      Weight w = Weight::zero(l);
      w[i] = c;
      fn(w);
    }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (Int ci = 1; ci <= max_coeff; ++ci)
        for (Int cj = 1; cj <= max_coeff; ++cj) {
          Weight w = Weight::zero(l);
          w[i] = ci;
          w[j] = cj;
          fn(w);
        }
}

int cmd_table1(int max_rank, Int max_coeff, Int max_r) {
  json out;
  out["schema"] = 1;
  out["command"] = "table1";
  json diffs = json::array();
  long checked = 0, hits = 0;
  for (GroupType t : sweep_types(max_rank)) {
    RootSystem rs = build(t);
    for_each_sweep_weight(rs, max_coeff, [&](const Weight& w) {
      if (principal::restrict_weight(rs, w) > max_r) return;
      if (!principal::support_filter(rs, w).pass) return;
      ++checked;
      bool computed = paperdata::char0_mf(rs, w);
      bool stored = paperdata::table1_contains(rs, w);
      if (computed) ++hits;
      if (computed != stored)
        diffs.push_back(json{{"group", t.name()},
                             {"lambda", weight_json(w)},
                             {"computed", computed},
                             {"stored", stored}});
    });
  }
  out["checked"] = checked;
  out["multiplicity_free"] = hits;
  out["diff"] = diffs;
  std::cout << out.dump(2) << "\n";
  return diffs.empty() ? 0 : 1;
}

int cmd_rvalues(int max_rank, Int max_coeff) {
  json out;
  out["schema"] = 1;
  out["command"] = "rvalues";
  json diffs = json::array();
  long checked = 0;
  std::vector<GroupType> types{{Family::A, 1}};
  for (GroupType t : sweep_types(max_rank)) types.push_back(t);
  for (GroupType t : types) {
    RootSystem rs = build(t);
    const int l = t.rank;
    std::vector<Int> c(l, 0);
    for (;;) {
      ++checked;
      Weight w{std::vector<Int>(c)};
      Int computed = principal::restrict_weight(rs, w);
      Int closed = paperdata::table2_closed_form(t, c);
      if (computed != closed)
        diffs.push_back(json{{"group", t.name()},
                             {"lambda", weight_json(w)},
                             {"computed", computed},
                             {"closed_form", closed}});
      int k = 0;
      while (k < l && c[k] == max_coeff) c[k++] = 0;
      if (k == l) break;
      ++c[k];
    }
  }
  out["checked"] = checked;
  out["diff"] = diffs;
  std::cout << out.dump(2) << "\n";
  return diffs.empty() ? 0 : 1;
}

int cmd_ingest(const std::string& path) {
  IngestedTable tab = ingest_file(path);
  RootSystem rs = build(tab.type);
  Character ch = tab.to_character(rs);
  json out;
  out["schema"] = 1;
  out["command"] = "ingest";
  out["group"] = tab.type.name();
  out["lambda"] = weight_json(tab.lambda);
  out["p"] = tab.p;
  out["rows"] = tab.rows.size();
  out["dimension"] = ch.mass().get_str();
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restrictions of irreducible modules to a principal rank-1 subgroup"};
  app.require_subcommand(1);

  WeightArgs vargs;
  std::string vsource;
  auto* verdict = app.add_subcommand("verdict", "decide multiplicity-freeness");
  verdict->add_option("family", vargs.family)->required();
  verdict->add_option("rank", vargs.rank)->required();
  verdict->add_option("lambda", vargs.coords)->required();
  verdict->add_option("p", vargs.p)->required();
  verdict->add_option("--source", vsource, "TSV character table (file path)");

  WeightArgs rargs;
  std::string rsource, rdump;
  auto* restrict_cmd = app.add_subcommand("restrict", "restricted character and factors");
  restrict_cmd->add_option("family", rargs.family)->required();
  restrict_cmd->add_option("rank", rargs.rank)->required();
  restrict_cmd->add_option("lambda", rargs.coords)->required();
  restrict_cmd->add_option("p", rargs.p)->required();
  restrict_cmd->add_option("--source", rsource, "weyl | irreducible | file:PATH");
  restrict_cmd->add_option("--dump-tsv", rdump, "write the character used as ingestible TSV");

  WeightArgs cargs;
  auto* certify = app.add_subcommand("certify", "produce a not-MF certificate");
  certify->add_option("family", cargs.family)->required();
  certify->add_option("rank", cargs.rank)->required();
  certify->add_option("lambda", cargs.coords)->required();
  certify->add_option("p", cargs.p)->required();

  WeightArgs jargs;
  auto* jantzen = app.add_subcommand("jantzen", "dump the Jantzen sum");
  jantzen->add_option("family", jargs.family)->required();
  jantzen->add_option("rank", jargs.rank)->required();
  jantzen->add_option("lambda", jargs.coords)->required();
  jantzen->add_option("p", jargs.p)->required();

  int t1_rank = 9;
  Int t1_coeff = 6, t1_r = 100;
  auto* table1 = app.add_subcommand("table1", "reproduce the stored characteristic-0 table");
  table1->add_option("--max-rank", t1_rank);
  table1->add_option("--max-coeff", t1_coeff);
  table1->add_option("--max-r", t1_r);

  int rv_rank = 8;
  Int rv_coeff = 3;
  auto* rvalues = app.add_subcommand("rvalues", "check the closed forms for r");
  rvalues->add_option("--max-rank", rv_rank);
  rvalues->add_option("--max-coeff", rv_coeff);

  std::string ingest_path;
  auto* ingest_cmd = app.add_subcommand("ingest", "validate a TSV character table");
  ingest_cmd->add_option("path", ingest_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verdict) return cmd_verdict(vargs, vsource);
    if (*restrict_cmd) return cmd_restrict(rargs, rsource, rdump);
    if (*certify) return cmd_certify(cargs);
    if (*jantzen) return cmd_jantzen(jargs);
    if (*table1) return cmd_table1(t1_rank, t1_coeff, t1_r);
    if (*rvalues) return cmd_rvalues(rv_rank, rv_coeff);
    if (*ingest_cmd) return cmd_ingest(ingest_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
