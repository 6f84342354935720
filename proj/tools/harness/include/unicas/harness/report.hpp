#pragma once

#include <functional>
#include <string>
#include <vector>

namespace unicas::harness {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

struct CheckResult {
  std::string check_id;
  std::string subject;
  Status status = Status::Fail;
  std::string expected;
  std::string actual;
  std::string reason;  // skip reason or error text
};

/// Pass iff the exact text forms agree.
CheckResult compare(std::string check_id, std::string subject, std::string expected, std::string actual);
CheckResult skipped(std::string check_id, std::string subject, std::string reason);

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int total() const { return pass + fail + skipped; }
};

struct Report {
  std::string version;
  std::string suite;
  unsigned long long seed = 0;
  std::vector<CheckResult> results;

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

using CheckTask = std::function<std::vector<CheckResult>()>;

/// Runs tasks on at most `workers` threads (0 = hardware concurrency). A task
/// that throws becomes one failing result under its task id. Results are
/// sorted by check_id, so the output never depends on scheduling.
std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, CheckTask>>& tasks, unsigned workers = 0);

enum class Format { Text, Json, Csv };

/// Throws std::invalid_argument on an unknown name.
Format parse_format(const std::string& name);

/// Text: one line per check plus a summary. Json: one object per line, the
/// last line being the summary. Csv: header row and one row per check.
std::string render_report(const Report& report, Format format);

}  // namespace unicas::harness
