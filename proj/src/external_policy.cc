#include "hanabi_tom/external_policy.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "hanabi_tom/json_io.h"
#include "hanabi_tom/logging.h"

namespace hanabi_tom {

struct ExternalPolicy::Subprocess {
  pid_t pid = -1;
  int to_child = -1;    // write end
  int from_child = -1;  // read end
  std::string read_buffer;

  explicit Subprocess(const std::string& command) {
    int in_pipe[2];   // parent -> child
    int out_pipe[2];  // child -> parent
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) {
      throw ProtocolError("failed to create pipes for external policy");
    }
    pid = fork();
    if (pid < 0) {
      throw ProtocolError("failed to fork external policy process");
    }
    if (pid == 0) {
      dup2(in_pipe[0], STDIN_FILENO);
      dup2(out_pipe[1], STDOUT_FILENO);
      close(in_pipe[0]);
      close(in_pipe[1]);
      close(out_pipe[0]);
      close(out_pipe[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), nullptr);
      _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    to_child = in_pipe[1];
    from_child = out_pipe[0];
  }

  ~Subprocess() {
    if (to_child >= 0) close(to_child);
    if (from_child >= 0) close(from_child);
    if (pid > 0) {
      kill(pid, SIGTERM);
      int status = 0;
      waitpid(pid, &status, 0);
    }
  }

  void WriteLine(const std::string& line) {
    std::string payload = line + "\n";
    size_t written = 0;
    while (written < payload.size()) {
      ssize_t n =
          write(to_child, payload.data() + written, payload.size() - written);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ProtocolError(std::string("external policy write failed: ") +
                            std::strerror(errno));
      }
      written += static_cast<size_t>(n);
    }
  }

  std::string ReadLine(int timeout_ms) {
    for (;;) {
      size_t newline = read_buffer.find('\n');
      if (newline != std::string::npos) {
        std::string line = read_buffer.substr(0, newline);
        read_buffer.erase(0, newline + 1);
        return line;
      }
      struct pollfd pfd {
        from_child, POLLIN, 0
      };
      int ready = poll(&pfd, 1, timeout_ms);
      if (ready == 0) {
        throw ProtocolError("external policy timed out after " +
                            std::to_string(timeout_ms) + " ms");
      }
      if (ready < 0) {
        if (errno == EINTR) continue;
        throw ProtocolError(std::string("external policy poll failed: ") +
                            std::strerror(errno));
      }
      char chunk[4096];
      ssize_t n = read(from_child, chunk, sizeof(chunk));
      if (n == 0) {
        throw ProtocolError("external policy closed its output stream");
      }
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ProtocolError(std::string("external policy read failed: ") +
                            std::strerror(errno));
      }
      read_buffer.append(chunk, static_cast<size_t>(n));
    }
  }
};

ExternalPolicy::ExternalPolicy(const std::string& command, int timeout_ms)
    : child_(std::make_unique<Subprocess>(command)), timeout_ms_(timeout_ms) {
  Log(LogLevel::kInfo, "spawned external policy: " + command);
}

ExternalPolicy::~ExternalPolicy() = default;

Action ExternalPolicy::Act(const PolicyContext& ctx) {
  Json request = EncodedObservationToJson(ctx.encoded);
  request["legal_actions"] = ctx.legal;
  request["player"] = ctx.obs.viewer;
  request["turn"] = turn_++;
  // Rename for the wire: the encoded vector is the observation.
  request["observation"] = std::move(request["values"]);
  request.erase("values");

  child_->WriteLine(CanonicalDump(request));
  std::string line = child_->ReadLine(timeout_ms_);

  Json response;
  try {
    response = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ProtocolError(std::string("external policy sent malformed JSON: ") +
                        e.what());
  }
  if (!response.contains("action") ||
      !response["action"].is_number_integer()) {
    throw ProtocolError("external policy response lacks an action index");
  }
  int index = response["action"].get<int>();
  if (index < 0 || index >= static_cast<int>(ctx.legal.size())) {
    throw ProtocolError("external policy chose action index " +
                        std::to_string(index) + " outside the legal list of " +
                        std::to_string(ctx.legal.size()));
  }
  return ctx.legal[index];
}

}  // namespace hanabi_tom
