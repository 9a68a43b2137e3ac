#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "support.hpp"

int main(int argc, char** argv) {
  if (const char* env = std::getenv("AXIALKIT_TEST_SEED")) testing::set_seed(std::strtoull(env, nullptr, 10));
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      testing::set_seed(std::strtoull(argv[i] + 7, nullptr, 10));
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::cout << "random seed " << testing::seed() << " (rerun with --seed=N)\n";
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
