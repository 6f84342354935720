#include "unicas/harness/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace unicas::harness {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

CheckResult compare(std::string check_id, std::string subject, std::string expected, std::string actual) {
  CheckResult r{std::move(check_id), std::move(subject), Status::Fail, std::move(expected), std::move(actual), {}};
  if (r.expected == r.actual) r.status = Status::Pass;
  return r;
}

CheckResult skipped(std::string check_id, std::string subject, std::string reason) {
  return CheckResult{std::move(check_id), std::move(subject), Status::Skipped, {}, {}, std::move(reason)};
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, CheckTask>>& tasks, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));

  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i].second();
      } catch (const std::exception& e) {
        slots[i] = {CheckResult{tasks[i].first, "", Status::Fail, "", "", std::string("exception: ") + e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CheckResult> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return out;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (text, json, csv)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string render_report(const Report& report, Format format) {
  std::ostringstream os;
  const Summary s = report.summary();
  switch (format) {
    case Format::Json: {
      for (const auto& r : report.results) {
        nlohmann::ordered_json j;
        j["check_id"] = r.check_id;
        j["subject"] = r.subject;
        j["status"] = status_name(r.status);
        j["expected"] = r.expected;
        j["actual"] = r.actual;
        if (!r.reason.empty()) j["reason"] = r.reason;
        os << j.dump() << '\n';
      }
      nlohmann::ordered_json sum;
      sum["version"] = report.version;
      sum["suite"] = report.suite;
      sum["seed"] = report.seed;
      sum["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"total", s.total()}};
      os << sum.dump() << '\n';
      break;
    }
    case Format::Csv:
      os << "check_id,subject,status,expected,actual,reason\n";
      for (const auto& r : report.results) {
        os << csv_field(r.check_id) << ',' << csv_field(r.subject) << ',' << status_name(r.status) << ','
           << csv_field(r.expected) << ',' << csv_field(r.actual) << ',' << csv_field(r.reason) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : report.results) {
        switch (r.status) {
          case Status::Pass: os << "PASS " << r.check_id << "  " << r.actual << '\n'; break;
          case Status::Skipped: os << "SKIP " << r.check_id << "  " << r.reason << '\n'; break;
          case Status::Fail:
            os << "FAIL " << r.check_id << "  expected " << r.expected << ", got " << r.actual;
            if (!r.reason.empty()) os << "  (" << r.reason << ')';
            os << '\n';
            break;
        }
      }
      os << "unicas " << report.version << " verify " << report.suite << " (seed " << report.seed << "): " << s.pass
         << " passed, " << s.fail << " failed, " << s.skipped << " skipped, " << s.total() << " total\n";
      break;
  }
  return os.str();
}

}  // namespace unicas::harness
