#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catnet {

/// One failed axiom together with the identifiers that witness the failure.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;

  bool operator==(const Violation&) const = default;
};

/// Ordered list of violations. Empty means every checked law holds.
class ValidationReport {
 public:
  void add(std::string axiom, std::vector<std::string> witness) {
    items_.push_back({std::move(axiom), std::move(witness)});
  }
  void add(Violation v) { items_.push_back(std::move(v)); }
  void append(const ValidationReport& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  bool ok() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Violation>& violations() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Violation& front() const { return items_.front(); }

  bool has(std::string_view axiom) const {
    for (const auto& v : items_)
      if (v.axiom == axiom) return true;
    return false;
  }

  /// First violation for `axiom`, or nullptr.
  const Violation* find(std::string_view axiom) const {
    for (const auto& v : items_)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }

  bool operator==(const ValidationReport&) const = default;

 private:
  std::vector<Violation> items_;
};

/// Malformed input: unknown identifiers, wrong arities, schema mismatches.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation refused its input because a law failed; carries the witnesses.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : Error(what + describe(report)), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    if (r.ok()) return {};
    const auto& v = r.front();
    std::string s = ": " + v.axiom + " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) s += ", ";
      s += v.witness[i];
    }
    s += ")";
    if (r.size() > 1) s += " and " + std::to_string(r.size() - 1) + " more";
    return s;
  }

  ValidationReport report_;
};

}  // namespace catnet
