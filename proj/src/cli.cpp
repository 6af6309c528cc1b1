// Copyright 2026 The qzeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qzeta/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "qzeta/closed_forms.hpp"
#include "qzeta/discover.hpp"
#include "qzeta/exact_arith.hpp"
#include "qzeta/qmzv.hpp"
#include "qzeta/symmetric.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace qzeta {

namespace {

int default_parallelism() {
  if (const char* env = std::getenv("QZETA_PARALLELISM")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

int run_eval(long n, long q_order, const std::string& index_text, bool star, bool real_part,
             std::ostream& out, std::ostream& err) {
  const Composition index = Composition::parse(index_text);
  if (q_order == 0) q_order = n;
  const ZetaValue zv = evaluate(n, q_order, index, star);
  nlohmann::json j{{"n", n}, {"q_order", q_order}, {"index", index.str()}, {"star", star}};
  if (real_part) {
    const CycloElement re = zv.value.real_part();
    if (!re.is_rational()) {
      err << "real part is not rational; element = " << re.str() << "\n";
      err << re.to_json().dump() << "\n";
      return 1;
    }
    j["rational"] = re.as_rational().str();
    out << j.dump() << "\n";
    return 0;
  }
  if (zv.value.is_rational()) {
    j["rational"] = zv.value.as_rational().str();
  } else {
    j["element"] = zv.value.to_json();
  }
  out << j.dump() << "\n";
  return 0;
}

int run_eval_t(long n, long m, std::ostream& out, std::ostream& err) {
  const CycloElement value = evaluate_t(n, static_cast<int>(m));
  if (!value.is_rational()) {
    err << "internal inconsistency: T value is not rational: " << value.str() << "\n";
    return 1;
  }
  out << nlohmann::json{{"rational", value.as_rational().str()},
                        {"n", n},
                        {"m", m}}
             .dump()
      << "\n";
  return 0;
}

int run_discover(const std::string& index_text, bool star, const std::string& mode_text,
                 long n_max, int holdout, std::ostream& out, std::ostream& err) {
  const Composition index = Composition::parse(index_text);
  DiscoveryMode mode;
  if (mode_text == "full") {
    mode = DiscoveryMode::kFullValue;
  } else if (mode_text == "re") {
    mode = DiscoveryMode::kRealPart;
  } else if (mode_text == "pair") {
    mode = DiscoveryMode::kSymmetricPair;
  } else {
    err << "unknown mode '" << mode_text << "' (expected full|re|pair)\n";
    return 2;
  }
  const DiscoveryResult result = discover(index, star, mode, n_max, holdout);
  out << result.to_json().dump() << "\n";
  if (!result.holdout_verified) {
    err << "holdout points do not match the interpolated polynomial\n";
    return 1;
  }
  return 0;
}

int run_verify(const std::string& suite, long n_max, int depth_max, int parallelism,
               const std::string& format, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  if (suite == "all") {
    reports = verify_all(n_max, depth_max, parallelism);
  } else {
    reports.push_back(verify_default(suite, n_max, depth_max));
  }
  bool all_pass = true;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) {
      arr.push_back(r.to_json());
      all_pass = all_pass && r.pass();
    }
    out << arr.dump() << "\n";
  } else {
    for (const VerificationReport& r : reports) {
      out << r.id << (r.pass() ? " pass " : " FAIL ") << "points=" << r.points_tested
          << " failures=" << r.failures.size() << " ms=" << r.ms << "\n";
      all_pass = all_pass && r.pass();
    }
  }
  if (!all_pass) {
    err << "verification failed\n";
    return 1;
  }
  return 0;
}

int run_table(const std::string& family, long s_max, long n_max, std::ostream& out,
              std::ostream& err) {
  if (family != "single-s") {
    err << "unknown family '" << family << "' (expected single-s)\n";
    return 2;
  }
  out << "n,s,value\n";
  for (long n = 2; n <= n_max; ++n) {
    for (long s = 2; s <= s_max; ++s) {
      const CycloElement v = evaluate(n, Composition({s})).value;
      out << n << "," << s << "," << v.as_rational().str() << "\n";
    }
  }
  return 0;
}

int run_bernoulli(int max_index, std::ostream& out) {
  const BernoulliTable table(max_index);
  nlohmann::json values = nlohmann::json::array();
  for (int k = 0; k <= max_index; ++k) values.push_back(table.at(k).str());
  out << nlohmann::json{{"max", max_index}, {"values", std::move(values)}}.dump() << "\n";
  return 0;
}

int run_cotsum(long n, int u, const std::string& method, std::ostream& out, std::ostream& err) {
  if (method != "exact" && method != "bernoulli" && method != "both") {
    err << "unknown method '" << method << "' (expected exact|bernoulli|both)\n";
    return 2;
  }
  nlohmann::json j{{"n", n}, {"u", u}};
  if (method == "exact" || method == "both") {
    j["exact"] = cot_sum_exact(n, u).str();
  }
  if (method == "bernoulli" || method == "both") {
    j["bernoulli"] = cot_sum_bernoulli(n, u).str();
  }
  if (method == "both") {
    const bool equal = j["exact"] == j["bernoulli"];
    j["equal"] = equal;
    out << j.dump() << "\n";
    if (!equal) {
      err << "cross-method mismatch\n";
      return 1;
    }
    return 0;
  }
  out << j.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact finite multiple zeta values at roots of unity"};
  app.name("qzeta");
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate Z_n(index) exactly");
  long eval_n = 0;
  long eval_q = 0;
  std::string eval_index;
  bool eval_star = false;
  bool eval_re = false;
  eval_cmd->add_option("--n", eval_n, "summation bound parameter")->required();
  eval_cmd->add_option("--q-order", eval_q, "root-of-unity order (default n)");
  eval_cmd->add_option("--index", eval_index, "comma-separated exponents, e.g. 1,2,1")->required();
  eval_cmd->add_flag("--star", eval_star, "use non-strict chains");
  eval_cmd->add_flag("--real-part", eval_re, "emit the real part (must be rational)");

  // eval-t
  auto* evalt_cmd = app.add_subcommand("eval-t", "evaluate T_n(m) exactly");
  long evalt_n = 0;
  long evalt_m = 0;
  evalt_cmd->add_option("--n", evalt_n, "summation bound")->required();
  evalt_cmd->add_option("--m", evalt_m, "chain length")->required();

  // discover
  auto* disc_cmd = app.add_subcommand("discover", "interpolate a closed form in n");
  std::string disc_index;
  bool disc_star = false;
  std::string disc_mode = "full";
  long disc_nmax = 0;
  int disc_holdout = 3;
  disc_cmd->add_option("--index", disc_index, "comma-separated exponents")->required();
  disc_cmd->add_flag("--star", disc_star, "use non-strict chains");
  disc_cmd->add_option("--mode", disc_mode, "full|re|pair (default full)");
  disc_cmd->add_option("--n-max", disc_nmax, "largest sample n (default weight+4)");
  disc_cmd->add_option("--holdout", disc_holdout, "extra certification points (default 3)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "check catalog identities exactly");
  std::string ver_suite;
  long ver_nmax = 30;
  int ver_depth = 6;
  int ver_par = default_parallelism();
  std::string ver_format = "json";
  ver_cmd->add_option("--suite", ver_suite, "identity id or 'all'")->required();
  ver_cmd->add_option("--n-max", ver_nmax, "clip grids to n <= n-max (default 30)");
  ver_cmd->add_option("--depth-max", ver_depth, "clip grids to depth <= depth-max (default 6)");
  ver_cmd->add_option("--parallelism", ver_par, "worker threads (default $QZETA_PARALLELISM or 1)");
  ver_cmd->add_option("--format", ver_format, "json|pretty (default json)");

  // table
  auto* tab_cmd = app.add_subcommand("table", "CSV table of single-exponent values");
  std::string tab_family = "single-s";
  long tab_smax = 9;
  long tab_nmax = 0;
  tab_cmd->add_option("--family", tab_family, "table family (single-s)");
  tab_cmd->add_option("--s-max", tab_smax, "largest exponent (default 9)");
  tab_cmd->add_option("--n-max", tab_nmax, "largest n")->required();

  // bernoulli
  auto* bern_cmd = app.add_subcommand("bernoulli", "exact Bernoulli numbers B_0..B_K");
  int bern_max = 0;
  bern_cmd->add_option("--max", bern_max, "largest index")->required();

  // cotsum
  auto* cot_cmd = app.add_subcommand("cotsum", "cotangent power sum S_{2u}(n)");
  long cot_n = 0;
  int cot_u = 0;
  std::string cot_method = "both";
  cot_cmd->add_option("--n", cot_n, "denominator of the angle")->required();
  cot_cmd->add_option("--u", cot_u, "half the power")->required();
  cot_cmd->add_option("--method", cot_method, "exact|bernoulli|both (default both)");

  std::vector<std::string> argv_store;
  argv_store.push_back("qzeta");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // app.exit prints help to out and errors to err; normalize to 0 / 2.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_n, eval_q, eval_index, eval_star, eval_re, out, err);
    if (evalt_cmd->parsed()) return run_eval_t(evalt_n, evalt_m, out, err);
    if (disc_cmd->parsed())
      return run_discover(disc_index, disc_star, disc_mode, disc_nmax, disc_holdout, out, err);
    if (ver_cmd->parsed())
      return run_verify(ver_suite, ver_nmax, ver_depth, ver_par, ver_format, out, err);
    if (tab_cmd->parsed()) return run_table(tab_family, tab_smax, tab_nmax, out, err);
    if (bern_cmd->parsed()) return run_bernoulli(bern_max, out);
    if (cot_cmd->parsed()) return run_cotsum(cot_n, cot_u, cot_method, out, err);
  } catch (const NotRationalError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace qzeta
