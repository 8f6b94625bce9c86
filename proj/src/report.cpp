#include "normcurv/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace normcurv {

const char* comparison_symbol(Comparison c) noexcept {
  switch (c) {
    case Comparison::Equal: return "eq";
    case Comparison::AtMost: return "le";
    case Comparison::AtLeast: return "ge";
    case Comparison::StrictlyAbove: return "gt";
  }
  return "?";
}

bool ClaimEntry::pass() const noexcept {
  if (!std::isfinite(measured)) return false;
  switch (comparison) {
    case Comparison::Equal: return std::abs(measured - expected) <= tolerance;
    case Comparison::AtMost: return measured <= expected + tolerance;
    case Comparison::AtLeast: return measured >= expected - tolerance;
    case Comparison::StrictlyAbove: return measured > expected + tolerance;
  }
  return false;
}

ClaimRow& ClaimRow::add(std::string label, double measured, double expected, double tolerance, Comparison cmp) {
  entries.push_back({std::move(label), measured, expected, tolerance, cmp});
  return *this;
}

bool ClaimRow::pass() const noexcept {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const ClaimEntry& e) { return e.pass(); });
}

bool VerificationReport::all_pass() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimRow& c) { return c.pass(); });
}

const ClaimRow* VerificationReport::find(const std::string& id) const noexcept {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& kv : other.environment) {
    if (std::find(environment.begin(), environment.end(), kv) == environment.end()) environment.push_back(kv);
  }
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::string format_real(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report(std::ostream& out, const VerificationReport& report) {
  std::size_t passed = 0;
  for (const auto& c : report.claims) passed += c.pass() ? 1 : 0;

  out << "suite = " << report.suite << '\n';
  for (const auto& [key, value] : report.environment) out << "env." << key << " = " << value << '\n';
  if (report.runtime_seconds) out << "runtime_seconds = " << format_real(*report.runtime_seconds) << '\n';
  out << "claims = " << report.claims.size() << '\n';
  out << "passed = " << passed << '\n';
  out << "result = " << (report.all_pass() ? "pass" : "fail") << '\n';
  for (const auto& c : report.claims) {
    out << '\n';
    out << "[claim]\n";
    out << "id = " << c.id << '\n';
    out << "anchor = " << c.anchor << '\n';
    out << "pass = " << (c.pass() ? "true" : "false") << '\n';
    for (const auto& e : c.entries) {
      out << "entry = " << e.label << " | measured " << format_real(e.measured) << " | expected "
          << comparison_symbol(e.comparison) << ' ' << format_real(e.expected) << " | tolerance "
          << format_real(e.tolerance) << " | " << (e.pass() ? "ok" : "FAIL") << '\n';
    }
  }
}

}  // namespace normcurv
