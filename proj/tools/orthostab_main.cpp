#include <fstream>
#include <iostream>
#include <vector>

#include "orthostab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  orthostab::CliResult result = orthostab::run_cli(args);
  const std::string text = result.output.dump();
  if (result.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(result.out_path);
    if (!out) {
      std::cerr << "cannot write " << result.out_path << "\n";
      return 2;
    }
    out << text << "\n";
  }
  return result.exit_code;
}
