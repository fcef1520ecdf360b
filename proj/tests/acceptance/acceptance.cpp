// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.
//
//   acceptance [--only N] [--quick]
//
// --quick shrinks the long-running criteria for local iteration; ctest runs
// the full suite.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bridge.hpp"
#include "forestweave/bench.hpp"
#include "forestweave/conjecture.hpp"
#include "forestweave/embedder.hpp"
#include "forestweave/errors.hpp"
#include "forestweave/generators.hpp"
#include "forestweave/graph_io.hpp"
#include "forestweave/instance_io.hpp"
#include "forestweave/oracle.hpp"
#include "lemma1.hpp"

using namespace forestweave;

namespace {

bool quick = false;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- shared random suite ---------------------------------------------------

struct SuiteStats {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t internal_errors = 0;
  std::size_t avenue_checks = 0;
  std::size_t phase_two_checks = 0;
  std::size_t fallback_checks = 0;
  std::size_t independent_breaches = 0;
  EmbedTrace totals;
  std::string transcript;  // serialized embeddings and certificates
  std::string first_problem;
};

InstanceSpec suite_spec(Rng& rng, std::size_t i) {
  static const GraphModel models[] = {GraphModel::MinDegreePad, GraphModel::NearRegular, GraphModel::TightOrder};
  InstanceSpec s;
  const std::size_t p = rng.between(1, 6);
  std::size_t d = 0;
  for (std::size_t t = 0; t < p; ++t) {
    const std::size_t cap = std::min<std::size_t>(10, 20 - d);
    s.sizes.push_back(rng.between(0, cap));
    d += s.sizes.back();
  }
  s.model = models[i % 3];
  s.n = d + p + rng.below(60 - d - p + 1);
  s.seed = rng.next();
  return s;
}

// Direct recount of everything the construction asserts about one level.
void install_checks(EmbedTrace& tr, const Graph& g, SuiteStats& st) {
  auto breach = [&](const std::string& why) {
    ++st.independent_breaches;
    if (st.first_problem.empty()) st.first_problem = why;
  };
  tr.on_avenue_a = [&](const VertexSet& active, const VertexSet& image, std::size_t d, std::size_t a) {
    ++st.avenue_checks;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!active.contains(v) || image.contains(v)) continue;
      bool universal = true;
      image.for_each([&](Vertex u) { universal = universal && g.adjacent(u, v); });
      if (universal) breach("avenue A image has a universal vertex");
      std::size_t deg = 0;
      for (Vertex w = 0; w < g.order(); ++w)
        if (active.contains(w) && !image.contains(w) && g.adjacent(v, w)) ++deg;
      if (deg + a < d) breach("avenue A leaves a vertex below d-a");
    }
  };
  tr.on_phase_two = [&](const PhaseTwoContext& c) {
    ++st.phase_two_checks;
    if (c.q[0] + c.q[1] + c.q[2] + c.q[3] != c.p - 1) breach("class counts do not sum to p-1");
    if (c.y_set.count() != c.p - 2) breach("|Y| != p-2");
    if (c.q[0] < 1 + c.q[3]) breach("q1 < 1 + q4");
    if (c.clique.count() != c.a || !is_clique(g, c.clique)) breach("K is not an a-clique");
    if (c.x_set.count() != c.d - c.a + 1) breach("|X| != d-a+1");
    if (!c.x_set.is_subset_of(g.neighbors(c.x)) || c.x_set.intersects(c.clique)) breach("X not inside N(x)\\K");
    if (c.y_set.intersects(c.clique) || c.y_set.intersects(c.x_set) || c.s_set.intersects(c.clique) ||
        c.s_set.intersects(c.x_set) || c.s_set.intersects(c.y_set))
      breach("K, X, Y, S overlap");
  };
  tr.on_fallback_vertex = [&](const PhaseTwoContext& c, const FallbackCounts& fc) {
    ++st.fallback_checks;
    std::size_t in_k = 0, in_xy = 0, in_s = 0;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!g.adjacent(fc.s, w)) continue;
      in_k += c.clique.contains(w);
      in_xy += c.x_set.contains(w) || c.y_set.contains(w);
      in_s += c.s_set.contains(w);
    }
    if (in_k != fc.in_clique || in_xy != fc.in_xy || in_s != fc.in_s) breach("fallback counts disagree");
    if (in_s + in_k + in_xy < c.d) breach("d - |N(s)nK| - |N(s)n(XuY)| > |N(s)nS|");
    if (in_s + c.q[3] < c.a + c.q[0]) breach("|N(s)nS| < a + q1 - q4");
  };
}

SuiteStats run_suite(std::size_t count, std::uint64_t seed) {
  SuiteStats st;
  Rng rng(seed, Rng::kBench);
  for (std::size_t i = 0; i < count; ++i) {
    InstanceSpec spec = suite_spec(rng, i);
    GeneratedInstance inst = gen_instance(spec);
    EmbedTrace tr;
    install_checks(tr, inst.graph, st);
    ++st.instances;
    try {
      EmbedResult r = embed_forest(inst.graph, inst.forest, &tr);
      if (!verify_embedding(inst.graph, inst.forest, r.embedding).ok ||
          !bridge::valid(inst.graph, inst.forest, r.embedding)) {
        ++st.failures;
        if (st.first_problem.empty()) st.first_problem = "invalid embedding at instance " + std::to_string(i);
      }
      st.transcript += embedding_to_json(r.embedding).dump();
      st.transcript += certificate_to_json(r.certificate).dump();
      st.transcript += '\n';
    } catch (const InternalLogicError& e) {
      ++st.internal_errors;
      ++st.failures;
      if (st.first_problem.empty()) st.first_problem = e.what();
    } catch (const std::exception& e) {
      ++st.failures;
      if (st.first_problem.empty()) st.first_problem = e.what();
    }
    auto& t = st.totals;
    t.levels += tr.levels;
    t.avenue_a += tr.avenue_a;
    t.lemma2_checks += tr.lemma2_checks;
    t.clique_route += tr.clique_route;
    t.unused_x += tr.unused_x;
    t.k_neighbor += tr.k_neighbor;
    t.full_swap += tr.full_swap;
    t.near_full_remap += tr.near_full_remap;
    t.fallback += tr.fallback;
    t.phase_two_checks += tr.phase_two_checks;
    t.fallback_vertex_checks += tr.fallback_vertex_checks;
  }
  return st;
}

const std::uint64_t kSuiteSeed = 20240601;

SuiteStats& suite_once() {
  static SuiteStats st = run_suite(quick ? 1000 : 10000, kSuiteSeed);
  return st;
}

// --- criteria --------------------------------------------------------------

Verdict criterion1() {
  Verdict v;
  auto t0 = Clock::now();
  const SuiteStats& st = suite_once();
  const double secs = seconds_since(t0);
  if (st.failures) v.fail(std::to_string(st.failures) + " failures; first: " + st.first_problem);
  if (secs > 60) v.fail("took " + std::to_string(secs) + " s");
  v.detail << (v.pass ? "" : "; ") << st.instances << " instances in " << secs << " s";
  return v;
}

Verdict criterion2() {
  Verdict v;
  auto t0 = Clock::now();
  auto corpus = parse_graph6_stream(bridge::read_data("graphs_n1-7.g6"));
  auto forests = enumerate_forests(1, 7);
  std::size_t applicable = 0, checked = 0;
  for (const auto& g : corpus) {
    for (const auto& f : forests) {
      ++checked;
      const bool hyp = hypothesis_holds(g, f);
      try {
        EmbedResult r = embed_forest(g, f);
        if (!hyp) v.fail("embedded although the hypothesis fails: " + to_graph6(g));
        if (!verify_embedding(g, f, r.embedding).ok || !bridge::valid(g, f, r.embedding))
          v.fail("invalid embedding on " + to_graph6(g) + " / " + forest_code(f));
      } catch (const HypothesisViolation&) {
        if (hyp) v.fail("violation reported under the hypothesis: " + to_graph6(g));
      } catch (const std::exception& e) {
        v.fail(std::string("error on ") + to_graph6(g) + " / " + forest_code(f) + ": " + e.what());
      }
      if (!hyp) continue;
      ++applicable;
      auto o = oracle_embed(g, f);
      if (o.status != SearchStatus::Found) v.fail("oracle did not find an embedding on " + to_graph6(g));
      if (o.embedding && !bridge::valid(g, f, *o.embedding)) v.fail("oracle returned an invalid embedding");
    }
  }
  const double secs = seconds_since(t0);
  if (secs > 600) v.fail("took " + std::to_string(secs) + " s");
  v.detail << (v.pass ? "" : "; ") << checked << " pairs, " << applicable << " under the hypothesis, " << secs << " s";
  return v;
}

Verdict criterion3() {
  Verdict v;
  Rng rng(5000, 0);
  std::size_t stuck = 0;
  std::string first;
  for (int i = 0; i < 5000; ++i) {
    auto out = lemma1::random_case(rng);
    if (!out.ok && stuck++ == 0) first = out.message;
  }
  if (stuck) v.fail("single-tree extension failed " + std::to_string(stuck) + " times: " + first);

  // Pinned instances that reach the fallback branch, so the degree-split
  // recount runs even when the random suite happens to miss it.
  SuiteStats pinned;
  for (auto [g6, forest] : {std::pair{"E`N?", "0-1;0-1"}, {"E`oo", "0-1;0-1"}, {"EwCW", "0-1;0-1"}}) {
    Graph g = parse_graph6(g6);
    EmbedTrace tr;
    install_checks(tr, g, pinned);
    try {
      embed_forest(g, parse_forest_code(forest), &tr);
    } catch (const InternalLogicError& e) {
      v.fail(e.what());
    }
  }

  const SuiteStats& st = suite_once();
  if (st.internal_errors) v.fail(std::to_string(st.internal_errors) + " internal assertion failures");
  if (st.independent_breaches + pinned.independent_breaches)
    v.fail("independent recount disagreed: " + (st.first_problem.empty() ? pinned.first_problem : st.first_problem));
  if (st.avenue_checks != st.totals.avenue_a || st.avenue_checks == 0) v.fail("avenue A branch not re-checked");
  if (st.phase_two_checks == 0) v.fail("no phase-two state observed");
  if (st.fallback_checks + pinned.fallback_checks == 0) v.fail("fallback branch never observed");
  v.detail << (v.pass ? "" : "; ") << "5000 extension cases; " << st.avenue_checks << " avenue-A, "
           << st.phase_two_checks << " phase-two, " << st.fallback_checks + pinned.fallback_checks
           << " fallback-vertex re-checks (routes: unused X " << st.totals.unused_x << ", K-neighbour "
           << st.totals.k_neighbor << ", full swap " << st.totals.full_swap << ", near-full remap "
           << st.totals.near_full_remap << ", fallback " << st.totals.fallback << ")";
  return v;
}

Verdict criterion4() {
  Verdict v;
  auto t0 = Clock::now();
  auto hit = find_naive_failure(SearchBudget{1'000'000, std::chrono::milliseconds(300'000)}, 1);
  const double search_secs = seconds_since(t0);
  if (!hit) {
    v.fail("no naive failure within 10^6 instances");
  } else {
    if (!hypothesis_holds(hit->graph, hit->forest)) v.fail("found instance violates the hypothesis");
    if (!std::holds_alternative<NaiveStuck>(naive_sequential_embed(hit->graph, hit->forest)))
      v.fail("naive embedding does not get stuck");
    auto r = embed_forest(hit->graph, hit->forest);
    if (!bridge::valid(hit->graph, hit->forest, r.embedding)) v.fail("construction failed on the found instance");
  }

  auto t1 = Clock::now();
  Instance fx = parse_instance(bridge::read_data("naive_failure.json"));
  const bool fx_ok = hypothesis_holds(fx.graph, fx.forest) &&
                     std::holds_alternative<NaiveStuck>(naive_sequential_embed(fx.graph, fx.forest)) &&
                     bridge::valid(fx.graph, fx.forest, embed_forest(fx.graph, fx.forest).embedding);
  const double replay_secs = seconds_since(t1);
  if (!fx_ok) v.fail("pinned fixture no longer reproduces");
  if (replay_secs > 1.0) v.fail("fixture replay took " + std::to_string(replay_secs) + " s");
  if (hit && !(hit->graph == fx.graph)) v.fail("search result differs from the pinned fixture");
  v.detail << (v.pass ? "" : "; ") << "found after " << (hit ? hit->instances_tried : 0) << " instances in "
           << search_secs << " s; fixture replay " << replay_secs << " s";
  return v;
}

Verdict criterion5() {
  Verdict v;
  BenchConfig cfg;
  cfg.orders = quick ? std::vector<std::size_t>{500, 1000, 2000} : std::vector<std::size_t>{2000, 4000, 8000, 16000};
  cfg.d = 16;
  cfg.p = 4;
  cfg.repeat = 3;
  cfg.seed = 7;
  auto t0 = Clock::now();
  BenchResult r = run_bench(cfg);
  const double secs = seconds_since(t0);
  if (!r.slope) {
    v.fail("no slope");
    return v;
  }
  if (*r.slope > 2.3) v.fail("slope " + std::to_string(*r.slope) + " > 2.3");
  if (secs > 300) v.fail("took " + std::to_string(secs) + " s");
  v.detail << (v.pass ? "" : "; ") << "slope " << *r.slope << " over";
  for (auto [n, ms] : r.medians) v.detail << " n=" << n << ":" << ms << "ms";
  return v;
}

// Zero candidates is the criterion. A candidate is still checked against the
// reference enumerator and the published list, so the line tells a genuine
// counterexample apart from a search bug.
Verdict criterion6() {
  Verdict v;
  auto t0 = Clock::now();
  auto corpus = parse_graph6_stream(bridge::read_data("graphs_n1-7.g6"));
  auto forests = enumerate_forests(1, 7);
  SweepOptions opt;
  opt.all_records = false;
  try {
    SweepReport rep = sweep(corpus, forests, opt);
    std::size_t genuine = 0;
    for (const Json& rec : rep.candidate_records) {
      Graph g = parse_graph6(rec["graph6"].get<std::string>());
      Forest f = parse_forest_code(rec["forest"].get<std::string>());
      const bool hyp = 2 * g.edge_count() >= f.total_size() * g.order() && g.order() >= f.order();
      if (hyp && ref::count_injections(bridge::small(g), bridge::flat(f), true) == 0) ++genuine;
    }
    std::vector<std::string> published;
    std::istringstream in(bridge::read_data("conjecture_candidates_n7.ndjson"));
    for (std::string line; std::getline(in, line);)
      if (!Json::parse(line).contains("summary")) published.push_back(line);
    std::vector<std::string> found;
    for (const Json& rec : rep.candidate_records) found.push_back(rec.dump());

    if (rep.skipped) v.fail(std::to_string(rep.skipped) + " incomplete searches; ");
    if (genuine != rep.candidates) v.fail("a candidate is refuted by the reference enumerator (search bug); ");
    if (found != published) v.fail("candidates differ from tests/data/conjecture_candidates_n7.ndjson; ");
    if (rep.candidates) {
      v.fail("");
      v.detail << rep.candidates << " counterexample candidates, all confirmed by the reference enumerator and "
               << "published in tests/data/conjecture_candidates_n7.ndjson (first: " << found.front()
               << "); minimum-degree sub-sweep: 0 hits; ";
    }
    v.detail << rep.summary().dump();
  } catch (const InternalLogicError& e) {
    v.fail(std::string("minimum-degree sub-sweep hit: ") + e.what());
  }
  const double secs = seconds_since(t0);
  if (secs > 900) v.fail("took " + std::to_string(secs) + " s");
  v.detail << " in " << secs << " s";
  return v;
}

Verdict criterion7() {
  Verdict v;
  const SuiteStats& first = suite_once();
  SuiteStats again = run_suite(first.instances, kSuiteSeed);
  if (again.transcript != first.transcript) v.fail("embeddings or certificates differ between runs");
  v.detail << (v.pass ? "" : "; ") << first.transcript.size() << " bytes compared";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) quick = true;
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::function<Verdict()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                                criterion5, criterion6, criterion7};
  const char* names[] = {"theorem suite",         "exhaustive oracle equivalence", "lemma-level checks",
                         "naive-failure exhibit", "quadratic bench",               "conjecture sweep",
                         "determinism"};
  bool all = true;
  for (int c = 1; c <= 7; ++c) {
    if (only && c != only) continue;
    Verdict v;
    try {
      v = criteria[c - 1]();
    } catch (const std::exception& e) {
      v.fail(std::string("unexpected exception: ") + e.what());
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c << " (" << names[c - 1] << "): " << v.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
