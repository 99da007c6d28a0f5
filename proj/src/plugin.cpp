#include "robbo/plugin.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <mutex>

#include "json.hpp"

#include "robbo/error.hpp"

namespace robbo {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::SamplerFailure, msg); }

struct Pipe {
  int fd[2] = {-1, -1};
  Pipe() {
    if (::pipe(fd) != 0) fail(std::string("pipe: ") + std::strerror(errno));
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  Pipe(const Pipe&) = delete;
  Pipe& operator=(const Pipe&) = delete;
  void close_read() {
    if (fd[0] >= 0) ::close(fd[0]);
    fd[0] = -1;
  }
  void close_write() {
    if (fd[1] >= 0) ::close(fd[1]);
    fd[1] = -1;
  }
};

struct ProcessOutput {
  int status = 0;
  std::string out;
  std::string err;
};

ProcessOutput run_process(const std::string& command, const std::string& input, double timeout_s) {
  Pipe in;
  Pipe out;
  Pipe err;
  const pid_t pid = ::fork();
  if (pid < 0) fail(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::dup2(in.fd[0], STDIN_FILENO);
    ::dup2(out.fd[1], STDOUT_FILENO);
    ::dup2(err.fd[1], STDERR_FILENO);
    for (int fd : {in.fd[0], in.fd[1], out.fd[0], out.fd[1], err.fd[0], err.fd[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  in.close_read();
  out.close_write();
  err.close_write();

  // The request is one short line; a write into an empty pipe does not block.
  // A child that exits without reading yields EPIPE here and is judged by its exit status.
  static std::once_flag sigpipe_once;
  std::call_once(sigpipe_once, [] { ::signal(SIGPIPE, SIG_IGN); });
  const ssize_t written = ::write(in.fd[1], input.data(), input.size());
  (void)written;
  in.close_write();

  ProcessOutput result;
  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);
  bool timed_out = false;
  while (out.fd[0] >= 0 || err.fd[0] >= 0) {
    pollfd fds[2];
    nfds_t n = 0;
    if (out.fd[0] >= 0) fds[n++] = {out.fd[0], POLLIN, 0};
    if (err.fd[0] >= 0) fds[n++] = {err.fd[0], POLLIN, 0};
    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      timed_out = true;
      break;
    }
    const int rc = ::poll(fds, n, static_cast<int>(std::min<long long>(remaining.count(), 1000)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (nfds_t i = 0; i < n; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      char buf[4096];
      const ssize_t got = ::read(fds[i].fd, buf, sizeof buf);
      const bool is_out = fds[i].fd == out.fd[0];
      if (got <= 0) {
        if (is_out) {
          out.close_read();
        } else {
          err.close_read();
        }
      } else {
        (is_out ? result.out : result.err).append(buf, static_cast<std::size_t>(got));
      }
    }
  }
  if (timed_out) ::kill(pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (timed_out) fail("plugin timed out after " + std::to_string(timeout_s) + " s: " + command);
  result.status = status;
  return result;
}

}  // namespace

double plugin_timeout_from_env() {
  const char* env = std::getenv(kPluginTimeoutEnv);
  if (env == nullptr || *env == '\0') return kDefaultPluginTimeoutS;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || !std::isfinite(v) || v <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, std::string(kPluginTimeoutEnv) + " must be a positive number");
  }
  return v;
}

PluginBackend::PluginBackend(std::string command, double timeout_s)
    : command_(std::move(command)), timeout_s_(timeout_s) {
  if (command_.empty()) throw Error(ErrorKind::InvalidArgument, "empty plugin command");
  if (!(timeout_s_ > 0.0)) throw Error(ErrorKind::InvalidArgument, "plugin timeout must be positive");
}

SampleResult parse_plugin_reply(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    fail(std::string("malformed plugin reply: ") + e.what());
  }
  if (!j.is_object() || !j.contains("z") || !j["z"].is_array() || j["z"].size() != 2 ||
      !j["z"][0].is_number() || !j["z"][1].is_number()) {
    fail("plugin reply must carry \"z\": [f1, f2]");
  }
  SampleResult r;
  r.z = {j["z"][0].get<double>(), j["z"][1].get<double>()};
  if (!std::isfinite(r.z.z1) || !std::isfinite(r.z.z2)) fail("plugin returned non-finite objectives");
  if (j.contains("x") && !j["x"].is_null()) {
    if (!j["x"].is_array()) fail("plugin \"x\" must be an array");
    for (const auto& e : j["x"]) {
      if (!e.is_number()) fail("plugin \"x\" entries must be numbers");
      r.x.push_back(e.get<double>());
    }
  }
  return r;
}

SampleResult PluginBackend::call(const std::string& request_line) const {
  const ProcessOutput po = run_process(command_, request_line + "\n", timeout_s_);
  const auto diagnostics = [&po]() {
    return po.err.empty() ? std::string() : "; stderr: " + po.err.substr(0, 2000);
  };
  if (!WIFEXITED(po.status) || WEXITSTATUS(po.status) != 0) {
    const std::string how = WIFEXITED(po.status)
                                ? "exited with status " + std::to_string(WEXITSTATUS(po.status))
                                : "terminated by a signal";
    fail("plugin " + how + diagnostics());
  }
  const auto nl = po.out.find('\n');
  const std::string line = po.out.substr(0, nl);
  if (line.empty()) fail("plugin produced no output" + diagnostics());
  return parse_plugin_reply(line);
}

SampleResult PluginBackend::anchor(AnchorWhich which) const {
  const std::lock_guard lock(mutex_);
  auto& slot = anchors_[which == AnchorWhich::A1 ? 0 : 1];
  if (!slot) {
    const json req = {{"kind", "anchor"}, {"which", which == AnchorWhich::A1 ? "a1" : "a2"}};
    slot = call(req.dump());
  }
  return *slot;
}

SampleResult PluginBackend::sample(const SampleRequest& request) const {
  const std::lock_guard lock(mutex_);
  const json req = {{"kind", "sample"},
                    {"tilde_v", request.tilde_v},
                    {"delta", {request.delta.delta1, request.delta.delta2}}};
  return call(req.dump());
}

}  // namespace robbo
