#include <cstdlib>
#include <iostream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.hpp"

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("preproj");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("PREPROJ_LOG")) spdlog::set_level(spdlog::level::from_str(level));
  return preproj::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
