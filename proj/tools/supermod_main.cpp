// Copyright 2026 The supermod Authors.
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

// Command-line front end. Data goes to --out (or standard output), the
// human-readable summary goes to standard output (or standard error when data
// occupies standard output). Boolean results map to exit code 0 (true) /
// 1 (false); usage and input errors exit 2; internal invariant violations
// exit 3.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supermod/balanced.hpp"
#include "supermod/cone.hpp"
#include "supermod/json_io.hpp"
#include "supermod/matroid.hpp"
#include "supermod/nondecreasing.hpp"
#include "supermod/set_function.hpp"
#include "supermod/supermodular_cone.hpp"
#include "supermod/transform.hpp"
#include "supermod/twolayer.hpp"

namespace {

using namespace supermod;

struct Output {
  std::ofstream file;
  bool to_file = false;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw Error("cannot open output file " + path);
      to_file = true;
    }
  }
  std::ostream& data() { return to_file ? file : std::cout; }
  // Summary goes to stdout unless data occupies it.
  std::ostream& log() { return to_file ? std::cout : std::cerr; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

SetFunction load_set_function(const std::string& path) {
  return set_function_from_json(load_json(path));
}

SubsetMultiset load_multiset(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return multiset_from_text(in, n);
}

int cmd_enumerate(int n, const std::string& out_path, int threads,
                  bool allow_big) {
  if (n < 2 || n > 5) throw ParamOutOfRange("enumerate supports 2 <= n <= 5");
  if (n == 5 && !allow_big)
    throw ParamOutOfRange("n = 5 takes minutes; pass --allow-big to confirm");
  auto start = std::chrono::steady_clock::now();
  Output out(out_path);
  if (n == 5) std::cerr << "enumerating extreme rays for n = 5...\n";
  DDOptions opts;
  opts.threads = threads;
  std::vector<SetFunction> rays = enumerate_irreducible_supermodular(n, opts);
  Int max_c = 0;
  for (const SetFunction& f : rays) {
    out.data() << set_function_to_json(f).dump() << "\n";
    Int c = complexity_of(f);
    if (c > max_c) max_c = c;
  }
  out.log() << "count=" << rays.size() << " max_complexity=" << max_c
            << " seconds=" << seconds_since(start) << "\n";
  return 0;
}

int cmd_check_supermodular(const std::string& in_path) {
  SetFunction f = load_set_function(in_path);
  if (is_modular(f)) {
    std::cout << "modular\n";
    return 0;
  }
  if (is_supermodular(f)) {
    std::cout << "supermodular\n";
    return 0;
  }
  std::cout << "not-supermodular\n";
  return 1;
}

int cmd_check_irreducible(const std::string& in_path,
                          const std::string& out_path) {
  SetFunction f = load_set_function(in_path);
  IrreducibilityCertificate cert = is_irreducible_supermodular(f);
  Json j{{"irreducible", cert.irreducible},
         {"tight_pairs", cert.tight_pairs},
         {"tight_rank", cert.tight_rank},
         {"required_rank", cert.required_rank}};
  Output out(out_path);
  out.data() << j.dump(2) << "\n";
  return cert.irreducible ? 0 : 1;
}

std::vector<SetFunction> load_rays(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<SetFunction> rays;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rays.push_back(set_function_from_json(Json::parse(line)));
  }
  return rays;
}

int cmd_decompose(const std::string& in_path, const std::string& rays_path,
                  const std::string& out_path) {
  SetFunction f = load_set_function(in_path);
  std::vector<SetFunction> rays = load_rays(rays_path);
  std::vector<DecompositionTerm> terms = conic_decompose(f, rays);
  Json arr = Json::array();
  for (const auto& [coef, idx] : terms)
    arr.push_back({{"coefficient", to_string(coef)}, {"ray", idx}});
  Output out(out_path);
  out.data() << Json{{"terms", arr}}.dump(2) << "\n";
  out.log() << "terms=" << terms.size() << "\n";
  return 0;
}

int cmd_reconstruct(const std::string& in_path, const std::string& out_path) {
  SupermodularityVector s = supermodularity_vector_from_json(load_json(in_path));
  SetFunction f = reconstruct(s);
  Output out(out_path);
  out.data() << set_function_to_json(f).dump(2) << "\n";
  return 0;
}

int cmd_path_sums(const std::string& in_path, const std::string& out_path) {
  // Accepts either a set function ("values") or a supermodularity
  // vector ("entries").
  Json j = load_json(in_path);
  SupermodularityVector s = j.contains("values")
      ? apply_transform(set_function_from_json(j))
      : supermodularity_vector_from_json(j);
  bool image = in_image(s);
  Json result{{"n", s.n()}, {"in_image", image}};
  if (image) {
    SetFunction f = reconstruct(s);
    Json weights = Json::array();
    for (const Rat& m : color_weights(f)) weights.push_back(to_string(m));
    result["color_weights"] = weights;
  }
  Output out(out_path);
  out.data() << result.dump(2) << "\n";
  return image ? 0 : 1;
}

int cmd_balanced_check(const std::string& in_path, int n,
                       const std::string& out_path) {
  BalancedVector v = load_multiset(in_path, n).to_vector();
  auto m = balance_of(v);
  Json j{{"N", n}, {"balanced", m.has_value()}};
  if (m) {
    j["balance"] = to_string(*m);
    BalancedCertificate cert = is_irreducible_balanced(v);
    j["irreducible"] = cert.irreducible;
    j["support_independent"] = cert.support_independent;
    j["support_size"] = cert.support_size;
    j["solution_dim"] = cert.solution_dim;
  }
  Output out(out_path);
  out.data() << j.dump(2) << "\n";
  return m.has_value() ? 0 : 1;
}

int cmd_balanced_z_irreducible(const std::string& in_path, int n) {
  SubsetMultiset m = load_multiset(in_path, n);
  bool zi = is_z_irreducible(m);
  std::cout << (zi ? "z-irreducible" : "z-reducible") << "\n";
  return zi ? 0 : 1;
}

int cmd_balanced_enumerate(int n, const std::string& out_path) {
  if (n < 1 || n > 4)
    throw ParamOutOfRange("balanced enumerate supports 1 <= N <= 4");
  auto start = std::chrono::steady_clock::now();
  Output out(out_path);
  std::vector<BalancedVector> vecs = enumerate_irreducible_balanced(n);
  Int max_m = 0;
  for (const BalancedVector& v : vecs) {
    out.data() << balanced_vector_to_json(v).dump() << "\n";
    Int m = complexity_of_balanced(v);
    if (m > max_m) max_m = m;
  }
  out.log() << "count=" << vecs.size() << " max_complexity=" << max_m
            << " seconds=" << seconds_since(start) << "\n";
  return 0;
}

int cmd_balanced_complexity(const std::string& in_path, int n) {
  BalancedVector v = load_multiset(in_path, n).to_vector();
  std::cout << complexity_of_balanced(v) << "\n";
  return 0;
}

int cmd_matroid_check(const std::string& in_path) {
  Json j = load_json(in_path);
  try {
    Matroid m = matroid_from_json(j);
    Json out{{"valid", true},
             {"rank", m.rank()},
             {"loops", subset_to_json(m.loops())},
             {"coloops", subset_to_json(m.coloops())}};
    auto red = is_reducible_matroid(m);
    out["reducible"] = red.has_value();
    if (red)
      out["partition"] = Json::array(
          {subset_to_json(red->first), subset_to_json(red->second)});
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cout << Json{{"valid", false}, {"reason", e.what()}}.dump(2) << "\n";
    return 1;
  }
}

int cmd_matroid_to_supermodular(const std::string& in_path,
                                const std::string& out_path) {
  Matroid m = matroid_from_json(load_json(in_path));
  Output out(out_path);
  out.data() << set_function_to_json(matroid_to_supermodular(m)).dump(2)
             << "\n";
  return 0;
}

int cmd_matroid_from_supermodular(const std::string& in_path,
                                  const std::string& out_path) {
  SetFunction f = load_set_function(in_path);
  Matroid m = supermodular_to_matroid(f);
  Output out(out_path);
  out.data() << matroid_to_json(m).dump(2) << "\n";
  return 0;
}

int cmd_matroid_enumerate(int n, const std::string& out_path) {
  auto start = std::chrono::steady_clock::now();
  Output out(out_path);
  std::vector<Matroid> all = enumerate_loopless_matroids(n);
  for (const Matroid& m : all) out.data() << matroid_to_json(m).dump() << "\n";
  out.log() << "count=" << all.size() << " seconds=" << seconds_since(start)
            << "\n";
  return 0;
}

int cmd_two_layer(int n, int t, bool verify, bool oracle,
                  const std::string& out_path, int threads) {
  Output out(out_path);
  std::vector<SetFunction> family = enumerate_two_layer(n, t);
  for (const SetFunction& f : family)
    out.data() << set_function_to_json(f).dump() << "\n";
  out.log() << "count=" << family.size() << "\n";
  bool ok = true;
  if (verify) {
    bool identity = verify_two_layer_identity(n, t);
    out.log() << "identity=" << (identity ? "pass" : "FAIL") << "\n";
    ok = ok && identity;
  }
  if (oracle) {
    if (n > 5) throw ParamOutOfRange("cone oracle supports n <= 5");
    DDOptions opts;
    opts.threads = threads;
    std::vector<SetFunction> expected;
    for (const SetFunction& f : enumerate_irreducible_supermodular(n, opts)) {
      SupermodularityVector s = apply_transform(f);
      bool two_layer_support = true;
      for (std::size_t i = 0; i < s.entries().size(); ++i) {
        int layer = s.pairs()[i].layer();
        if (s.entries()[i] != 0 && layer != t && layer != t + 1)
          two_layer_support = false;
      }
      if (two_layer_support) expected.push_back(f);
    }
    bool match = expected == family;
    out.log() << "oracle=" << (match ? "pass" : "FAIL") << "\n";
    ok = ok && match;
  }
  return ok ? 0 : 1;
}

int cmd_det_experiment(int n, long trials, std::uint64_t seed,
                       const std::string& out_path,
                       const std::string& format) {
  DeterminantExperiment e = determinant_experiment(n, trials, seed);
  Output out(out_path);
  if (format == "csv") {
    out.data() << "N,trials,seed,singular_count,max_abs_det\n"
               << e.n << "," << e.trials << "," << e.seed << ","
               << e.singular_count << "," << e.max_abs_det << "\n";
    out.data() << "scaled_abs_det,occurrences\n";
    for (const auto& [d, c] : e.histogram) out.data() << d << "," << c << "\n";
  } else {
    Json hist = Json::array();
    for (const auto& [d, c] : e.histogram)
      hist.push_back({{"scaled_abs_det", d.get_str()}, {"occurrences", c}});
    Json j{{"N", e.n},
           {"trials", e.trials},
           {"seed", e.seed},
           {"singular_count", e.singular_count},
           {"max_abs_det", e.max_abs_det.get_str()},
           {"histogram", hist}};
    out.data() << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_self_test() {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  auto check = [&](const std::string& name, bool pass) {
    items.push_back({name, pass});
  };

  check("close pair count n=3", close_pairs(3).size() == 6);
  check("close pair count n=4", close_pairs(4).size() == 24);
  check("ray count n=3", enumerate_irreducible_supermodular(3).size() == 5);
  check("ray count n=4", enumerate_irreducible_supermodular(4).size() == 37);
  {
    RatMatrix t = transform_matrix(4);
    check("rank of T n=4", rank(std::move(t)) == 16 - 4 - 1);
  }
  {
    SetFunction f = alpha(4, 2);
    check("transform roundtrip", reconstruct(apply_transform(f)) == f);
  }
  check("two-layer identity n=4 t=1", verify_two_layer_identity(4, 1));
  check("two-layer identity n=4 t=2", verify_two_layer_identity(4, 2));
  check("two-layer family (4,1)", enumerate_two_layer(4, 1).size() == 10);
  check("balanced enumeration N=3",
        enumerate_irreducible_balanced(3).size() >= 3);
  check("balanced complexity bound N=3", verify_complexity_bound(3));
  {
    std::vector<Matroid> ms = enumerate_loopless_matroids(3);
    bool ok = true;
    for (const Matroid& m : ms)
      ok = ok && supermodular_to_matroid(matroid_to_supermodular(m)) == m;
    check("matroid roundtrip n=3", ok);
  }

  bool all = true;
  for (const Item& it : items) {
    std::cout << (it.pass ? "pass" : "FAIL") << "  " << it.name << "\n";
    all = all && it.pass;
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for supermodular functions and "
               "generalized permutohedra"};
  app.require_subcommand(1);

  std::string out_path, in_path, rays_path, format = "json";
  int n = 3, t = 1, threads = 1;
  long trials = 1000;
  std::uint64_t seed = 1;
  bool allow_big = false, verify = false, oracle = false;

  app.add_option("--out", out_path, "Output file (default: standard output)");
  app.add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Random seed for experiments");
  app.add_option("--threads", threads, "Worker thread budget")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-big", allow_big, "Permit multi-minute jobs (n = 5)");

  auto* c_enum = app.add_subcommand("enumerate",
                                    "Enumerate irreducible supermodular "
                                    "functions (standard representatives)");
  c_enum->add_option("--n", n, "Ground-set size")->required();

  auto* c_chk = app.add_subcommand("check-supermodular",
                                   "Classify a set function");
  c_chk->add_option("--in", in_path, "SetFunction JSON")->required();

  auto* c_irr = app.add_subcommand("check-irreducible",
                                   "Irreducibility certificate");
  c_irr->add_option("--in", in_path, "SetFunction JSON")->required();

  auto* c_dec = app.add_subcommand("decompose",
                                   "Conic decomposition into irreducibles");
  c_dec->add_option("--in", in_path, "SetFunction JSON")->required();
  c_dec->add_option("--rays", rays_path, "Ray list JSONL")->required();

  auto* c_rec = app.add_subcommand("reconstruct",
                                   "Rebuild f from its supermodularity vector");
  c_rec->add_option("--in", in_path, "SupermodularityVector JSON")->required();

  auto* c_ps = app.add_subcommand("path-sums",
                                  "Color weights and image membership");
  c_ps->add_option("--in", in_path,
                   "SetFunction or SupermodularityVector JSON")->required();

  auto* c_bal = app.add_subcommand("balanced", "Balanced multiset operations");
  c_bal->require_subcommand(1);
  int big_n = 2;
  auto* b_chk = c_bal->add_subcommand("check", "Balance and irreducibility");
  b_chk->add_option("--in", in_path, "Multiset text file")->required();
  b_chk->add_option("--N", big_n, "Ground-set size")->required();
  auto* b_zi = c_bal->add_subcommand("z-irreducible",
                                     "Integral irreducibility");
  b_zi->add_option("--in", in_path, "Multiset text file")->required();
  b_zi->add_option("--N", big_n, "Ground-set size")->required();
  auto* b_en = c_bal->add_subcommand("enumerate",
                                     "All irreducible balanced vectors");
  b_en->add_option("--N", big_n, "Ground-set size")->required();
  auto* b_cx = c_bal->add_subcommand("complexity", "Complexity of a multiset");
  b_cx->add_option("--in", in_path, "Multiset text file")->required();
  b_cx->add_option("--N", big_n, "Ground-set size")->required();

  auto* c_mat = app.add_subcommand("matroid", "Matroid operations");
  c_mat->require_subcommand(1);
  auto* m_chk = c_mat->add_subcommand("check", "Validate a basis list");
  m_chk->add_option("--in", in_path, "Matroid JSON")->required();
  auto* m_to = c_mat->add_subcommand("to-supermodular", "Nullity function");
  m_to->add_option("--in", in_path, "Matroid JSON")->required();
  auto* m_from = c_mat->add_subcommand("from-supermodular",
                                       "Matroid of a simple function");
  m_from->add_option("--in", in_path, "SetFunction JSON")->required();
  auto* m_en = c_mat->add_subcommand("enumerate", "All loopless matroids");
  m_en->add_option("--n", n, "Ground-set size")->required();

  auto* c_tl = app.add_subcommand("two-layer", "The two-layer family");
  c_tl->add_option("--n", n, "Ground-set size")->required();
  c_tl->add_option("--t", t, "Lower layer index")->required();
  c_tl->add_flag("--verify", verify, "Check the beta/alpha identity");
  c_tl->add_flag("--oracle", oracle, "Cross-check against the cone oracle");

  auto* c_det = app.add_subcommand("det-experiment",
                                   "Random 0/1 determinant statistics");
  c_det->add_option("--N", n, "Matrix size")->required();
  c_det->add_option("--trials", trials, "Sample count");

  app.add_subcommand("self-test", "Run the embedded invariant suite");

  // Let the global flags (--out, --seed, ...) appear after a subcommand.
  auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
    for (CLI::App* sub : a->get_subcommands(
             [](const CLI::App*) { return true; })) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_enum->parsed())
      return cmd_enumerate(n, out_path, threads, allow_big);
    if (c_chk->parsed()) return cmd_check_supermodular(in_path);
    if (c_irr->parsed()) return cmd_check_irreducible(in_path, out_path);
    if (c_dec->parsed()) return cmd_decompose(in_path, rays_path, out_path);
    if (c_rec->parsed()) return cmd_reconstruct(in_path, out_path);
    if (c_ps->parsed()) return cmd_path_sums(in_path, out_path);
    if (b_chk->parsed()) return cmd_balanced_check(in_path, big_n, out_path);
    if (b_zi->parsed()) return cmd_balanced_z_irreducible(in_path, big_n);
    if (b_en->parsed()) return cmd_balanced_enumerate(big_n, out_path);
    if (b_cx->parsed()) return cmd_balanced_complexity(in_path, big_n);
    if (m_chk->parsed()) return cmd_matroid_check(in_path);
    if (m_to->parsed()) return cmd_matroid_to_supermodular(in_path, out_path);
    if (m_from->parsed())
      return cmd_matroid_from_supermodular(in_path, out_path);
    if (m_en->parsed()) return cmd_matroid_enumerate(n, out_path);
    if (c_tl->parsed())
      return cmd_two_layer(n, t, verify, oracle, out_path, threads);
    if (c_det->parsed())
      return cmd_det_experiment(n, trials, seed, out_path, format);
    return cmd_self_test();
  } catch (const Infeasible& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
