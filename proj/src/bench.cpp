#include "forestweave/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "forestweave/embedder.hpp"

namespace forestweave {

std::vector<std::size_t> even_sizes(std::size_t d, std::size_t p) {
  std::vector<std::size_t> sizes(p, p ? d / p : 0);
  for (std::size_t i = 0; i < (p ? d % p : 0); ++i) ++sizes[i];
  return sizes;
}

BenchResult run_bench(const BenchConfig& config) {
  BenchResult out;
  for (std::size_t n : config.orders) {
    InstanceSpec spec{n, even_sizes(config.d, config.p), config.model, config.seed};
    GeneratedInstance inst = gen_instance(spec);
    std::vector<double> times;
    for (std::size_t r = 0; r < config.repeat; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      EmbedResult res = embed_forest(inst.graph, inst.forest);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      times.push_back(ms);
      out.rows.push_back(BenchRow{n, config.d, config.p, config.seed, ms});
    }
    if (times.empty()) continue;
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size();
    out.medians.emplace_back(n, m % 2 ? times[m / 2] : 0.5 * (times[m / 2 - 1] + times[m / 2]));
  }
  out.slope = loglog_slope(out.medians);
  return out;
}

std::optional<double> loglog_slope(const std::vector<std::pair<std::size_t, double>>& points) {
  if (points.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, t] : points) {
    const double x = std::log(static_cast<double>(n)), y = std::log(std::max(t, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(points.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (k * sxy - sx * sy) / denom;
}

std::string bench_csv(const BenchResult& r) {
  std::ostringstream os;
  os << "n,d,p,seed,millis\n";
  for (const auto& row : r.rows)
    os << row.n << ',' << row.d << ',' << row.p << ',' << row.seed << ',' << row.millis << '\n';
  return os.str();
}

}  // namespace forestweave
