#pragma once
// Shared plumbing for test binaries: run a CLI command and capture its exit
// code and stdout bytes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <utility>

namespace testo {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_cli(const std::string& args) {
#ifdef G1B_CLI_PATH
  std::string cmd = std::string("'") + G1B_CLI_PATH + "' " + args + " 2>/dev/null";
#else
  std::string cmd = "false";
#endif
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testo
