#include "slcinv/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "slc/error.hpp"

namespace slcinv {

namespace {

json error_response(const std::string& code, const std::string& message) {
  return {{"ok", false}, {"error", {{"code", code}, {"message", message}}}};
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

json evaluate_request(const std::string& line) {
  try {
    const json request = json::parse(line);
    if (!request.is_object()) return error_response("InvalidRequest", "request must be a JSON object");
    for (const auto& [key, value] : request.items()) {
      if (key != "op" && key != "input" && key != "version") {
        return error_response("InvalidRequest", "unknown request field '" + key + "'");
      }
    }
    if (!request.contains("op") || !request["op"].is_string()) {
      return error_response("InvalidRequest", "request needs a string 'op'");
    }
    if (request.contains("version") && request["version"] != kSchemaVersion) {
      return error_response("UnsupportedVersion", "request version must be \"1\"");
    }
    const json input = request.value("input", json::object());
    OpResult r = run_op(request["op"].get<std::string>(), input);
    return {{"ok", true}, {"output", std::move(r.output)}, {"provenance", std::move(r.provenance)}};
  } catch (const json::parse_error& e) {
    return error_response("MalformedJson", e.what());
  } catch (const RequestError& e) {
    return error_response(e.code(), e.what());
  } catch (const slc::Error& e) {
    return error_response(std::string(slc::code_name(e.code())), e.what());
  } catch (const std::exception& e) {
    return error_response("InternalError", e.what());
  }
}

void run_batch(std::istream& in, std::ostream& out, unsigned threads) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!blank(line)) lines.push_back(std::move(line));
  }
  if (lines.empty()) return;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(lines.size()));

  std::vector<std::string> responses(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) responses[i] = evaluate_request(lines[i]).dump();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : responses) out << r << '\n';
  out.flush();
}

}  // namespace slcinv
