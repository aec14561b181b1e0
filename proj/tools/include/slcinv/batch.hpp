#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "slcinv/ops.hpp"

namespace slcinv {

inline constexpr const char* kSchemaVersion = "1";

/// One NDJSON request line -> one response object. Never throws.
///   {"ok":true,"output":{...},"provenance":[...]}
///   {"ok":false,"error":{"code":"...","message":"..."}}
json evaluate_request(const std::string& line);

/// Reads requests line by line, evaluates them on up to `threads` workers
/// and writes one response per non-blank input line, in input order.
/// threads == 0 picks std::thread::hardware_concurrency().
void run_batch(std::istream& in, std::ostream& out, unsigned threads = 0);

}  // namespace slcinv
