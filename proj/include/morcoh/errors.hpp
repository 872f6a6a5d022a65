#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace morcoh {

/* Error taxonomy used across the library.  The CLI maps these onto process
   exit codes (input 2, math 3, inconclusive 4), so every throw site picks the
   category by *who has to act*: the caller fixing their data (input_error),
   a genuine inconsistency in supplied mathematical data (math_error), or a
   computation that is valid but cannot certify an answer (inconclusive_error). */

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource-bound refusals (oracle instance too large, recursion past its cap).
// A capacity problem is an input problem: shrink the instance.
struct capacity_error : input_error {
  explicit capacity_error(const std::string& what) : input_error(what) {}
};

struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct inconclusive_error : std::runtime_error {
  explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal diagnostics carried alongside results.  `code` is a stable
// machine-readable tag; `message` is for humans and may change wording.
struct Warning {
  std::string code;
  std::string message;
};

using WarningSink = std::vector<Warning>;

inline void warn(WarningSink& sink, std::string code, std::string message) {
  sink.push_back(Warning{std::move(code), std::move(message)});
}

}  // namespace morcoh
