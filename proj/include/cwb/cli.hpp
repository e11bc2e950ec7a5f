#pragma once

#include <string>
#include <vector>

namespace cwb::cli {

// Exit codes: 0 pass, 1 mathematical failure, 2 usage or input error.
struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

// args excludes the program name, e.g. {"check", "fixtures/rc.json"}.
Outcome run(const std::vector<std::string>& args);

}  // namespace cwb::cli
