#include "ttone/scan.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "ttone/enumerate.hpp"
#include "ttone/errors.hpp"
#include "ttone/generators.hpp"

namespace ttone {

std::string to_string(Conjecture c) { return c == Conjecture::halin6 ? "halin6" : "tone-step"; }

Conjecture parse_conjecture(const std::string& text) {
  if (text == "halin6") return Conjecture::halin6;
  if (text == "tone-step" || text == "toneStep") return Conjecture::tone_step;
  fail(ErrorKind::invalid_input, "unknown-conjecture", "unknown conjecture: " + text);
}

namespace {

std::vector<ScanRow> instances(Conjecture which, const ScanParams& p) {
  std::vector<ScanRow> rows;
  auto add = [&](const Graph& g, const char* source) {
    ScanRow r;
    r.id = static_cast<int>(rows.size());
    r.source = source;
    r.graph = g;
    rows.push_back(std::move(r));
  };
  Rng rng(p.seed);
  if (which == Conjecture::halin6) {
    for (const auto& h : enumerate_cubic_halin(std::min(p.max_n, 12)))
      if (h.graph.order() >= 6) add(h.graph, "enumerated");
    if (p.max_n > 12)
      for (int i = 0; i < p.sample_count; ++i) {
        int n = 2 * rng.between(7, p.max_n / 2);
        add(generate("cubicHalin", {n, 3, "any"}, rng.below(1ULL << 62)).graph, "random");
      }
  } else {
    for (int n = 3; n <= std::min(p.max_n, 6); ++n)
      for (const auto& e : enumerate_subcubic_outerplanar(n)) add(e.graph, "enumerated");
    for (int i = 0; i < p.sample_count; ++i) {
      int n = rng.between(3, p.max_n);
      add(generate("outerplanar", {n, 0, "any"}, rng.below(1ULL << 62)).graph, "random");
    }
  }
  return rows;
}

void evaluate(Conjecture which, const ScanParams& p, ScanRow& r) {
  int t_max = which == Conjecture::halin6 ? 2 : p.t_max;
  int t_min = which == Conjecture::halin6 ? 2 : 1;
  for (int t = t_min; t <= t_max; ++t) {
    try {
      r.tau.push_back(exact_tau(r.graph, t, p.budget).k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget_exhausted) throw;
      r.tau.push_back(-1);
      r.exhausted = true;
    }
  }
  if (which == Conjecture::halin6) {
    r.flagged = r.tau[0] > 6;
  } else {
    // The inequality is only conjectured from t = 3 on.
    for (std::size_t i = 2; i < r.tau.size(); ++i) {
      int t = static_cast<int>(i) + 1;
      if (r.tau[i] >= 0 && r.tau[i - 1] >= 0 && r.tau[i] > r.tau[i - 1] + t + 1) r.flagged = true;
    }
  }
}

}  // namespace

ScanReport scan_conjecture(Conjecture which, const ScanParams& p) {
  if (which == Conjecture::halin6 && p.max_n > 14)
    fail(ErrorKind::invalid_input, "bad-params", "halin6 scans are limited to max_n <= 14");
  if (which == Conjecture::tone_step && (p.max_n > 9 || p.t_max != 3))
    fail(ErrorKind::invalid_input, "bad-params", "tone-step scans need max_n <= 9 and t_max = 3");
  if (p.sample_count < 0 || p.jobs < 1) fail(ErrorKind::invalid_input, "bad-params", "negative count or jobs");

  ScanReport report;
  report.which = which;
  report.rows = instances(which, p);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < report.rows.size(); i = next++) evaluate(which, p, report.rows[i]);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < p.jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& r : report.rows) {
    report.flagged += r.flagged;
    report.exhausted += r.exhausted;
  }
  return report;
}

std::string format_scan_csv(const ScanReport& report) {
  std::ostringstream out;
  bool halin = report.which == Conjecture::halin6;
  out << "id,source,n,m,";
  if (halin) {
    out << "tau2";
  } else {
    int t_count = report.rows.empty() ? 0 : static_cast<int>(report.rows.front().tau.size());
    for (int t = 1; t <= t_count; ++t) out << (t > 1 ? "," : "") << "tau" << t;
  }
  out << ",status,flagged,edges\n";
  for (const auto& r : report.rows) {
    out << r.id << ',' << r.source << ',' << r.graph.order() << ',' << r.graph.size();
    for (int v : r.tau) out << ',' << v;
    out << ',' << (r.exhausted ? "budget-exhausted" : "ok") << ',' << (r.flagged ? 1 : 0) << ',';
    bool first = true;
    for (auto [u, v] : r.graph.edges()) {
      out << (first ? "" : " ") << u << '-' << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ttone
