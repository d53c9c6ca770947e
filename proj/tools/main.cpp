#include <iostream>

#include "cockcroft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = cockcroft::cli::run(args);
  if (!result.text.empty()) {
    std::cout << result.text;
  } else {
    std::cout << result.render() << '\n';
  }
  if (!result.diagnostic.empty()) std::cerr << "error: " << result.diagnostic << '\n';
  return result.exit_code;
}
