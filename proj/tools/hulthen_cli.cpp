#include <string>
#include <vector>

#include "hulthen/report.hpp"

int main(int argc, char** argv) {
  return hulthen::run(std::vector<std::string>(argv + 1, argv + argc));
}
