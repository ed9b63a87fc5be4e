#include "lcp/process.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cerrno>
#include <csignal>

namespace lcp {

namespace {

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  Fd(Fd&& other) noexcept : fd_(other.release()) {}
  Fd& operator=(Fd&& other) noexcept {
    reset(other.release());
    return *this;
  }
  ~Fd() { reset(); }

  int get() const { return fd_; }
  int release() {
    const int fd = fd_;
    fd_ = -1;
    return fd;
  }
  void reset(int fd = -1) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = fd;
  }
  explicit operator bool() const { return fd_ >= 0; }

 private:
  int fd_ = -1;
};

bool make_pipe(Fd& read_end, Fd& write_end) {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) return false;
  read_end.reset(fds[0]);
  write_end.reset(fds[1]);
  return true;
}

}  // namespace

std::vector<std::string> split_command(std::string_view command) {
  std::vector<std::string> out;
  std::string current;
  bool in_token = false;
  char quote = 0;
  for (const char c : command) {
    if (quote) {
      if (c == quote) quote = 0;
      else current += c;
      continue;
    }
    if (c == '\'' || c == '"') {
      quote = c;
      in_token = true;
    } else if (c == ' ' || c == '\t' || c == '\n') {
      if (in_token) out.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current += c;
      in_token = true;
    }
  }
  if (in_token) out.push_back(std::move(current));
  return out;
}

ProcessResult run_process(const std::vector<std::string>& argv, std::string_view input,
                          std::chrono::duration<double> timeout) {
  ProcessResult result;
  if (argv.empty()) {
    result.status = ProcessResult::Status::SpawnFailed;
    result.err = "empty command";
    return result;
  }

  Fd in_r, in_w, out_r, out_w, err_r, err_w, exec_r, exec_w;
  if (!make_pipe(in_r, in_w) || !make_pipe(out_r, out_w) || !make_pipe(err_r, err_w) ||
      !make_pipe(exec_r, exec_w)) {
    result.status = ProcessResult::Status::SpawnFailed;
    result.err = "pipe() failed";
    return result;
  }

  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) {
    result.status = ProcessResult::Status::SpawnFailed;
    result.err = "fork() failed";
    return result;
  }
  if (pid == 0) {
    ::dup2(in_r.get(), STDIN_FILENO);
    ::dup2(out_w.get(), STDOUT_FILENO);
    ::dup2(err_w.get(), STDERR_FILENO);
    ::execvp(args[0], args.data());
    const int err = errno;
    [[maybe_unused]] auto n = ::write(exec_w.get(), &err, sizeof err);
    ::_exit(127);
  }

  in_r.reset();
  out_w.reset();
  err_w.reset();
  exec_w.reset();

  // The exec pipe is close-on-exec: EOF means exec succeeded, data is errno.
  int exec_errno = 0;
  if (::read(exec_r.get(), &exec_errno, sizeof exec_errno) == static_cast<ssize_t>(sizeof exec_errno)) {
    ::waitpid(pid, nullptr, 0);
    result.status = ProcessResult::Status::SpawnFailed;
    result.err = "cannot execute '" + argv[0] + "' (errno " + std::to_string(exec_errno) + ")";
    return result;
  }

  ::fcntl(in_w.get(), F_SETFL, O_NONBLOCK);
  std::signal(SIGPIPE, SIG_IGN);

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(timeout);
  std::size_t written = 0;
  if (input.empty()) in_w.reset();
  bool timed_out = false;
  std::array<char, 65536> buffer{};

  while (out_r || err_r) {
    std::vector<pollfd> fds;
    if (in_w) fds.push_back({in_w.get(), POLLOUT, 0});
    if (out_r) fds.push_back({out_r.get(), POLLIN, 0});
    if (err_r) fds.push_back({err_r.get(), POLLIN, 0});

    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      timed_out = true;
      break;
    }
    const int ready = ::poll(fds.data(), fds.size(), static_cast<int>(std::min<long long>(remaining.count(), 1000)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (const auto& p : fds) {
      if (!p.revents) continue;
      if (in_w && p.fd == in_w.get()) {
        const auto n = ::write(in_w.get(), input.data() + written, input.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 && errno != EAGAIN) in_w.reset();
        if (written == input.size()) in_w.reset();
        continue;
      }
      Fd& source = (out_r && p.fd == out_r.get()) ? out_r : err_r;
      std::string& sink = (&source == &out_r) ? result.out : result.err;
      const auto n = ::read(source.get(), buffer.data(), buffer.size());
      if (n > 0) sink.append(buffer.data(), static_cast<std::size_t>(n));
      else if (n == 0 || errno != EAGAIN) source.reset();
    }
  }

  int status = 0;
  if (timed_out) {
    ::kill(pid, SIGKILL);
    ::waitpid(pid, &status, 0);
    result.status = ProcessResult::Status::TimedOut;
    return result;
  }
  // Output closed; the child should be exiting. Bound the wait by the deadline too.
  while (::waitpid(pid, &status, WNOHANG) == 0) {
    if (std::chrono::steady_clock::now() >= deadline) {
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      result.status = ProcessResult::Status::TimedOut;
      return result;
    }
    ::usleep(1000);
  }
  if (WIFSIGNALED(status)) {
    result.status = ProcessResult::Status::Signaled;
    result.exit_code = WTERMSIG(status);
  } else {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

}  // namespace lcp
