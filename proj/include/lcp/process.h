#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace lcp {

struct ProcessResult {
  enum class Status { Exited, Signaled, TimedOut, SpawnFailed };
  Status status = Status::Exited;
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs `argv` (looked up on PATH), feeds `input` on stdin and collects
/// stdout/stderr. The child is killed once `timeout` elapses.
ProcessResult run_process(const std::vector<std::string>& argv, std::string_view input,
                          std::chrono::duration<double> timeout);

/// Whitespace split honouring single and double quotes.
std::vector<std::string> split_command(std::string_view command);

}  // namespace lcp
