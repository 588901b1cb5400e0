#include "corner/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  // honor --out here so the report lands both on stdout and in the file
  std::string out_path;
  for (size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--out") out_path = args[i + 1];

  const corner::RunResult result = corner::run_job(args);
  std::fputs(result.report.c_str(), stdout);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << result.report;
  }
  if (result.exit_code == 2) std::cerr << "input error (see report)\n";
  return result.exit_code;
}
