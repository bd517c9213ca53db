#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kscyc {

// Malformed input: unknown ids, bad rational strings, schema problems.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (no unit, degenerate form,
// non-minimal algebra, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Something that the mathematics guarantees did not hold.  Always a bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Pass/fail verdict with human readable witnesses.
struct Report {
  bool pass = true;
  std::vector<std::string> witnesses;

  void fail(std::string w) {
    pass = false;
    if (witnesses.size() < 64) witnesses.push_back(std::move(w));
  }
  void merge(const Report& o) {
    if (!o.pass) pass = false;
    for (const auto& w : o.witnesses)
      if (witnesses.size() < 64) witnesses.push_back(w);
  }
};

}  // namespace kscyc
