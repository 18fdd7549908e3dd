#pragma once

#include <memory>
#include <string>

#include "hanabi_tom/policy.h"

namespace hanabi_tom {

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bridges a seat to an external process over line-delimited JSON on the
// child's stdin/stdout. Request per turn:
//   {"observation": [...], "layout": {...}, "legal_actions": [...],
//    "player": seat, "turn": t}
// Response: {"action": <index into legal_actions>}.
// A malformed response, a bad index, or 10 s of silence raises ProtocolError
// and aborts the episode.
class ExternalPolicy : public Policy {
 public:
  explicit ExternalPolicy(const std::string& command,
                          int timeout_ms = 10'000);
  ~ExternalPolicy() override;

  ExternalPolicy(const ExternalPolicy&) = delete;
  ExternalPolicy& operator=(const ExternalPolicy&) = delete;

  Action Act(const PolicyContext& ctx) override;
  std::string Name() const override { return "external"; }

 private:
  struct Subprocess;
  std::unique_ptr<Subprocess> child_;
  int timeout_ms_;
  int turn_ = 0;
};

}  // namespace hanabi_tom
