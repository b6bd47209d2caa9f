#pragma once

// Runs the command-line tool and captures stdout and the exit status.
// KREIN_CLI and KREIN_TEST_DATA are absolute paths set by the build.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <string>

namespace cli {

struct Result {
  int status = -1;
  std::string out;
};

inline std::string data(const std::string& name) {
  return std::string(KREIN_TEST_DATA) + "/" + name;
}

inline Result run(const std::string& args) {
  const std::string command = std::string(KREIN_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cli
