#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace speclab {

/// Outcome of one identity checked over a sweep of inputs.
struct IdentityResult {
  std::string identity_id;
  std::string paper_eq;  ///< the identity written out as a formula
  int dimension = 0;
  int degree_cap = 0;
  bool pass = true;
  std::size_t cases = 0;
  std::string counterexample;  ///< empty on pass
};

struct VerificationReport {
  std::string suite;
  std::vector<IdentityResult> results;

  bool all_pass() const;
  void append(const VerificationReport& other);

  std::string to_json() const;
  /// identity_id,paper_eq,dimension,degree_cap,status,cases,counterexample
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace speclab
