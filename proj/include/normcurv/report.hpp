#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace normcurv {

/// How a measured value is compared against its expectation.
enum class Comparison {
  Equal,        // |measured - expected| <= tolerance
  AtMost,       // measured <= expected + tolerance
  AtLeast,      // measured >= expected - tolerance
  StrictlyAbove // measured > expected + tolerance
};

const char* comparison_symbol(Comparison c) noexcept;

struct ClaimEntry {
  std::string label;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Equal;

  bool pass() const noexcept;
};

/// One verified statement. A claim passes iff every entry passes.
struct ClaimRow {
  std::string id;
  std::string anchor;  // short statement of the mathematical fact checked
  std::vector<ClaimEntry> entries;

  ClaimRow& add(std::string label, double measured, double expected, double tolerance,
                Comparison cmp = Comparison::Equal);
  bool pass() const noexcept;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> environment;
  std::vector<ClaimRow> claims;
  /// Omitted from the written report unless set, so that reports stay
  /// byte-identical across runs.
  std::optional<double> runtime_seconds;

  bool all_pass() const noexcept;
  const ClaimRow* find(const std::string& id) const noexcept;
  void append(const VerificationReport& other);
};

/// Shortest round-trip decimal representation ("%.17g" trimmed).
std::string format_real(double v);

/// Line-oriented key = value document with a fixed field order.
void write_report(std::ostream& out, const VerificationReport& report);

}  // namespace normcurv
