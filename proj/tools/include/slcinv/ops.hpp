#pragma once

// Operation registry shared by the slcinv subcommands and batch mode. Every
// operation takes a JSON object and returns JSON output plus a short text
// rendering for terminals.

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace slcinv {

using nlohmann::json;

/// Malformed request: unknown op, missing or mistyped fields, bad literals.
/// Distinct from slc::Error, which reports a domain failure on well-formed
/// input.
class RequestError : public std::runtime_error {
 public:
  RequestError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct OpResult {
  json output;
  std::string text;
  std::vector<std::string> provenance;
};

/// Throws RequestError or slc::Error.
OpResult run_op(const std::string& op, const json& input);

/// Registered op names in sorted order.
std::vector<std::string> op_names();

/// Comma-separated integers, e.g. "6,2,2,3,3,2,2,4". Whitespace
/// around entries is ignored. Throws RequestError on anything else.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace slcinv
