// forestweave: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 hypothesis violation,
// 3 internal assertion, 4 search budget exceeded.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "forestweave/bench.hpp"
#include "forestweave/conjecture.hpp"
#include "forestweave/embedder.hpp"
#include "forestweave/errors.hpp"
#include "forestweave/generators.hpp"
#include "forestweave/graph_io.hpp"
#include "forestweave/instance_io.hpp"
#include "forestweave/oracle.hpp"

using namespace forestweave;

namespace {

enum Exit : int { kOk = 0, kInput = 1, kHypothesis = 2, kInternal = 3, kBudget = 4 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item.front() == '-') throw ParseError(0, "not a non-negative integer: '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void print(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

void report_error(const char* kind, const std::exception& e) {
  std::cerr << Json{{"error", kind}, {"message", e.what()}}.dump() << '\n';
}

// --- subcommands --------------------------------------------------------------

struct EmbedArgs {
  std::string instance;
  bool certificate = false;
  bool json = false;
  bool pretty = false;
};

int cmd_embed(const EmbedArgs& a) {
  Instance inst = parse_instance(read_file(a.instance));
  try {
    EmbedResult r = embed_forest(inst.graph, inst.forest);
    if (a.json || a.certificate) {
      Json out{{"embedding", embedding_to_json(r.embedding)}};
      if (a.certificate) out["certificate"] = certificate_to_json(r.certificate);
      print(out, a.pretty);
    } else {
      for (std::size_t t = 0; t < inst.forest.tree_count(); ++t) {
        std::cout << "tree " << t << ":";
        for (Vertex v : r.embedding.maps[t]) std::cout << ' ' << inst.graph.label(v);
        std::cout << '\n';
      }
    }
    return kOk;
  } catch (const HypothesisViolation& e) {
    print(Json{{"error", "HypothesisViolation"},
               {"reason", e.reason()},
               {"degree_short", e.degree_short()},
               {"n_short", e.n_short()},
               {"n", e.order()},
               {"min_degree", e.min_degree()},
               {"d", e.d()},
               {"p", e.p()}},
          false);
    return kHypothesis;
  }
}

struct VerifyArgs {
  std::string instance;
  std::string embedding;
};

int cmd_verify(const VerifyArgs& a) {
  Instance inst = parse_instance(read_file(a.instance));
  Json doc = parse_json(read_file(a.embedding));
  const Json& emb_json = doc.contains("embedding") ? doc.at("embedding") : doc;
  Embedding emb = embedding_from_json(emb_json, inst.graph.order());
  VerifyReport rep = verify_embedding(inst.graph, inst.forest, emb);
  Json out{{"valid", rep.ok}, {"violations", rep.violations}};
  if (rep.ok && doc.contains("certificate")) {
    Certificate cert = certificate_from_json(doc.at("certificate"));
    try {
      out["certificate_replays"] = replay_certificate(inst.graph, inst.forest, cert) == emb;
    } catch (const CertificateMismatch& e) {
      out["certificate_replays"] = false;
      out["certificate_error"] = e.what();
    }
    if (!out["certificate_replays"].get<bool>()) out["valid"] = false;
  }
  print(out, false);
  return out["valid"].get<bool>() ? kOk : kInput;
}

struct GenArgs {
  std::size_t n = 0;
  std::string sizes;
  std::string model = "MinDegreePad";
  std::string format = "edgelist";
  std::optional<std::uint64_t> seed;
  bool pretty = false;
};

int cmd_gen(const GenArgs& a) {
  InstanceSpec spec;
  spec.n = a.n;
  spec.sizes = parse_list(a.sizes);
  spec.model = parse_model(a.model);
  spec.seed = a.seed.value_or(fresh_seed());
  GeneratedInstance g = gen_instance(spec);
  Instance inst{std::move(g.graph), parse_graph_format(a.format), std::move(g.forest), Json::object()};
  inst.meta = Json{{"seed", spec.seed},
                   {"spec", {{"n", inst.graph.order()}, {"sizes", spec.sizes}, {"model", model_name(spec.model)}}}};
  print(instance_to_json(inst), a.pretty);
  return kOk;
}

struct OracleArgs {
  std::string instance;
  std::string budget;
  bool count = false;
};

SearchBudget budget_from(const std::string& flag) {
  return flag.empty() ? SearchBudget::from_env() : SearchBudget::parse(flag);
}

int cmd_oracle(const OracleArgs& a) {
  Instance inst = parse_instance(read_file(a.instance));
  const SearchBudget budget = budget_from(a.budget);
  if (a.count) {
    CountResult c = count_embeddings(inst.graph, inst.forest, budget);
    print(Json{{"complete", c.complete}, {"count", c.count}, {"nodes", c.nodes}, {"budget", budget.to_string()}},
          false);
    return c.complete ? kOk : kBudget;
  }
  OracleResult r = oracle_embed(inst.graph, inst.forest, budget);
  Json out{{"status", status_name(r.status)}, {"nodes", r.nodes}, {"budget", budget.to_string()}};
  if (r.embedding) out["embedding"] = embedding_to_json(*r.embedding);
  print(out, false);
  return r.status == SearchStatus::BudgetExceeded ? kBudget : kOk;
}

struct ConjectureArgs {
  std::string corpus;
  std::size_t min_order = 2;
  std::size_t max_order = 7;
  bool stars_only = false;
  bool min_degree_only = false;
  bool notable_only = false;
  std::size_t jobs = 1;
  std::string budget;
};

int cmd_conjecture(const ConjectureArgs& a) {
  std::vector<Graph> corpus = parse_graph6_stream(read_file(a.corpus));
  std::vector<Forest> forests = enumerate_forests(a.min_order, a.max_order, a.stars_only);
  SweepOptions opt;
  opt.budget = budget_from(a.budget);
  opt.jobs = a.jobs;
  opt.all_records = !a.notable_only;
  SweepReport rep = sweep(corpus, forests, opt, [&](const Json& rec) {
    if (!a.min_degree_only || rec.at("min_degree_holds").get<bool>()) std::cout << rec.dump() << '\n';
  });
  std::cout << rep.summary().dump() << '\n';
  return rep.skipped > 0 ? kBudget : kOk;
}

struct BenchArgs {
  std::string orders;
  std::size_t d = 16;
  std::size_t p = 4;
  std::size_t repeat = 1;
  std::string model = "MinDegreePad";
  std::optional<std::uint64_t> seed;
  bool csv = false;
};

int cmd_bench(const BenchArgs& a) {
  BenchConfig cfg;
  cfg.orders = parse_list(a.orders);
  cfg.d = a.d;
  cfg.p = a.p;
  cfg.repeat = a.repeat;
  cfg.model = parse_model(a.model);
  cfg.seed = a.seed.value_or(fresh_seed());
  BenchResult r = run_bench(cfg);

  std::ostream& summary = a.csv ? std::cerr : std::cout;
  if (a.csv) std::cout << bench_csv(r);
  summary << "seed " << cfg.seed << '\n';
  for (auto [n, median] : r.medians) {
    double mean = 0, var = 0;
    std::size_t k = 0;
    for (const auto& row : r.rows)
      if (row.n == n) mean += row.millis, ++k;
    mean /= static_cast<double>(k);
    for (const auto& row : r.rows)
      if (row.n == n) var += (row.millis - mean) * (row.millis - mean);
    var = k > 1 ? var / static_cast<double>(k - 1) : 0.0;
    summary << "n=" << n << " d=" << cfg.d << " p=" << cfg.p << " median_ms=" << median << " stddev_ms=" << std::sqrt(var)
            << '\n';
  }
  if (r.slope) summary << "loglog_slope " << *r.slope << '\n';
  return kOk;
}

struct NaiveArgs {
  std::string budget;
  std::optional<std::uint64_t> seed;
  std::string format = "edgelist";
};

int cmd_naive(const NaiveArgs& a) {
  const SearchBudget budget = budget_from(a.budget);
  const std::uint64_t seed = a.seed.value_or(fresh_seed());
  auto hit = find_naive_failure(budget, seed);
  if (!hit) {
    print(Json{{"found", false}, {"seed", seed}, {"budget", budget.to_string()}}, false);
    return kBudget;
  }
  Instance inst{hit->graph, parse_graph_format(a.format), hit->forest, Json::object()};
  inst.meta = Json{{"seed", seed},
                   {"budget", budget.to_string()},
                   {"instances_tried", hit->instances_tried},
                   {"stuck_tree", hit->stuck.tree},
                   {"stuck_vertex", hit->stuck.tree_vertex}};
  print(instance_to_json(inst), true);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forest embedding in graphs of large minimum degree"};
  app.require_subcommand(1);

  EmbedArgs embed;
  auto* c_embed = app.add_subcommand("embed", "Embed the instance's forest into its host graph");
  c_embed->add_option("instance", embed.instance, "Instance JSON file ('-' for stdin)")->required();
  c_embed->add_flag("--certificate", embed.certificate, "Include the construction certificate");
  c_embed->add_flag("--json", embed.json, "Machine-readable output");
  c_embed->add_flag("--pretty", embed.pretty, "Indent JSON output");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check an embedding (and certificate, if present)");
  c_verify->add_option("instance", verify.instance)->required();
  c_verify->add_option("embedding", verify.embedding, "Output of 'embed --json'")->required();

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate an instance satisfying the hypothesis");
  c_gen->add_option("--n", gen.n, "Host order");
  c_gen->add_option("--sizes", gen.sizes, "Tree sizes, comma separated")->required();
  c_gen->add_option("--model", gen.model, "MinDegreePad | NearRegular | DisjointCliques | TightOrder");
  c_gen->add_option("--format", gen.format, "Graph format inside the instance file");
  c_gen->add_option("--seed", gen.seed, "RNG seed (chosen and recorded in meta when absent)");
  c_gen->add_flag("--pretty", gen.pretty);

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Exact backtracking search");
  c_oracle->add_option("instance", oracle.instance)->required();
  c_oracle->add_option("--budget", oracle.budget, "NODES[,SECONDS]; defaults to FORESTWEAVE_BUDGET");
  c_oracle->add_flag("--count", oracle.count, "Count embeddings instead");

  ConjectureArgs conj;
  auto* c_conj = app.add_subcommand("conjecture", "Sweep the average-degree variant over a graph6 corpus");
  c_conj->add_option("--corpus", conj.corpus, "graph6 file")->required();
  c_conj->add_option("--min-order", conj.min_order, "Smallest forest order d+p");
  c_conj->add_option("--max-order", conj.max_order, "Largest forest order d+p");
  c_conj->add_flag("--stars-only", conj.stars_only, "Forests of stars only");
  c_conj->add_flag("--min-degree-only", conj.min_degree_only, "Print only records where min degree >= d");
  c_conj->add_flag("--notable-only", conj.notable_only, "Print only candidates and skips");
  c_conj->add_option("--jobs", conj.jobs, "Worker threads");
  c_conj->add_option("--budget", conj.budget, "NODES[,SECONDS] per instance");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Time embed_forest against host order");
  c_bench->add_option("--n", bench.orders, "Host orders, comma separated (empty: no rows)");
  c_bench->add_option("--d", bench.d);
  c_bench->add_option("--p", bench.p);
  c_bench->add_option("--repeat", bench.repeat);
  c_bench->add_option("--model", bench.model);
  c_bench->add_option("--seed", bench.seed);
  c_bench->add_flag("--csv", bench.csv, "CSV on stdout, summary on stderr");

  NaiveArgs naive;
  auto* c_naive = app.add_subcommand("naive", "Search for an instance that defeats the naive greedy embedding");
  c_naive->add_option("--budget", naive.budget, "INSTANCES[,SECONDS]");
  c_naive->add_option("--seed", naive.seed);
  c_naive->add_option("--format", naive.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*c_embed) return cmd_embed(embed);
    if (*c_verify) return cmd_verify(verify);
    if (*c_gen) return cmd_gen(gen);
    if (*c_oracle) return cmd_oracle(oracle);
    if (*c_conj) return cmd_conjecture(conj);
    if (*c_bench) return cmd_bench(bench);
    if (*c_naive) return cmd_naive(naive);
  } catch (const HypothesisViolation& e) {
    report_error("HypothesisViolation", e);
    return kHypothesis;
  } catch (const InternalLogicError& e) {
    report_error("InternalLogicError", e);
    return kInternal;
  } catch (const Error& e) {
    report_error("InputError", e);
    return kInput;
  } catch (const Json::exception& e) {
    report_error("InputError", e);
    return kInput;
  }
  return kInput;
}
