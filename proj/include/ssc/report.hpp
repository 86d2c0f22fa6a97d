#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssc {

/// `Violated` marks a law that is known not to hold and is reported with a
/// witness instead of failing the run.
enum class Status { Pass, Fail, Violated };

struct ReportLine {
  Status status;
  std::string subject;
  std::string detail;
};

/// Ordered list of checked facts, rendered one line each with a
/// `PASS`/`FAIL`/`VIOLATED` prefix.
class Report {
 public:
  void add(Status status, std::string subject, std::string detail = {});
  void check(bool ok, std::string subject, std::string detail = {});
  void append(const Report& other);

  const std::vector<ReportLine>& lines() const noexcept { return lines_; }
  bool ok() const;
  std::size_t failures() const;
  std::string to_string() const;

 private:
  std::vector<ReportLine> lines_;
};

std::string status_name(Status status);

/// Counts cases per named law and keeps the first counterexample. `flush`
/// writes one line per law, in first-seen order.
class LawTally {
 public:
  LawTally(Report& out, std::string prefix) : out_(out), prefix_(std::move(prefix)) {}

  /// `witness` is a callable returning the counterexample text; it runs only
  /// for the first failure of each law.
  template <class Witness>
  void expect(bool ok, std::string_view law, Witness&& witness) {
    Entry& e = entry(law);
    ++e.cases;
    if (!ok && !e.failed) {
      e.failed = true;
      e.witness = witness();
    }
  }

  void flush();

 private:
  struct Entry {
    std::string law;
    std::size_t cases = 0;
    bool failed = false;
    std::string witness;
  };
  Entry& entry(std::string_view law);

  Report& out_;
  std::string prefix_;
  std::vector<Entry> entries_;
};

}  // namespace ssc
