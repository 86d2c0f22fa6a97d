#include "ssc/report.hpp"

#include <algorithm>

namespace ssc {

void Report::add(Status status, std::string subject, std::string detail) {
  lines_.push_back({status, std::move(subject), std::move(detail)});
}

void Report::check(bool ok, std::string subject, std::string detail) {
  add(ok ? Status::Pass : Status::Fail, std::move(subject), ok ? std::string() : std::move(detail));
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      lines_.begin(), lines_.end(), [](const ReportLine& l) { return l.status == Status::Fail; }));
}

std::string Report::to_string() const {
  std::string out;
  for (const auto& l : lines_) {
    out += status_name(l.status) + " " + l.subject;
    if (!l.detail.empty()) out += ": " + l.detail;
    out += '\n';
  }
  return out;
}

LawTally::Entry& LawTally::entry(std::string_view law) {
  for (auto& e : entries_)
    if (e.law == law) return e;
  Entry e;
  e.law = std::string(law);
  entries_.push_back(std::move(e));
  return entries_.back();
}

void LawTally::flush() {
  for (const auto& e : entries_) {
    if (e.failed)
      out_.add(Status::Fail, prefix_ + e.law, "counterexample " + e.witness);
    else
      out_.add(Status::Pass, prefix_ + e.law, std::to_string(e.cases) + " cases");
  }
  entries_.clear();
}

std::string status_name(Status status) {
  switch (status) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Violated:
      return "VIOLATED";
  }
  return "?";
}

}  // namespace ssc
