#include <cstdlib>
#include <iostream>

#include "lab/cli.hpp"

int main(int argc, char** argv) {
  using namespace ellsl2::lab;
  const auto parsed = parse_command_line(argc, argv, std::getenv("ELLSL2_FORMAT"));
  RunResult result;
  if (const auto* early = std::get_if<RunResult>(&parsed)) {
    result = *early;
  } else {
    result = run(std::get<RunConfig>(parsed));
  }
  (result.exit_code == kExitUsage ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
