#pragma once
// The worked CLI examples shared by the golden test and the acceptance
// binary. Each runs the fortdesign executable and compares standard output
// with tests/golden/<name>.out.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace golden {

struct Case {
  const char* name;
  const char* args;  ///< paths are relative to the test data directory
  int exit_code;
};

inline constexpr std::array kCases{
    Case{"decide_c1_case2", "decide decide_c1_case2.query", 0},
    Case{"decide_embedding_failure", "decide decide_embedding_failure.query", 1},
    Case{"decide_missing_cosize", "decide decide_missing_cosize.query", 2},
    Case{"verify_oddtail", "verify verify_oddtail.query fin:0,2 fin:0,8 --cutoff 50", 0},
    Case{"verify_refutation", "verify verify_refutation.query fin:0,5 fin:5,6 --refutation-demo",
         1},
    Case{"brute_all_3_subsets_of_7", "brute all_3_subsets_of_7.inst --t 2", 0},
    Case{"brute_matching_4", "brute matching_4.inst --t 1", 0},
    Case{"brute_unbalanced_7", "brute unbalanced_7.inst --t 2", 1},
};

struct Output {
  int exit_code = -1;
  std::string out;
};

/// Runs `cli args` inside the data directory, capturing stdout.
inline Output run(const std::string& cli, const std::string& args) {
  const std::string command =
      "cd '" FORTDESIGN_TEST_DATA "' && '" + cli + "' " + args + " 2>/dev/null";
  Output result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(FORTDESIGN_GOLDEN) + "/" + name + ".out", std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace golden
