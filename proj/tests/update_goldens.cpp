// Rewrites every golden output file from the current build.

#include <fstream>
#include <iostream>

#include "support/golden.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : ARISTOTLE_GOLDEN_DIR;
  int status = 0;
  for (const auto& c : golden::load_manifest(dir)) {
    const auto o = golden::run(c.args);
    if (o.exit_code != c.exit_code) {
      std::cerr << c.name << ": exit " << o.exit_code << ", manifest says " << c.exit_code << "\n";
      status = 1;
    }
    if (!c.stdout_file) continue;
    std::ofstream(dir / *c.stdout_file, std::ios::binary) << o.out;
    std::cout << "wrote " << *c.stdout_file << "\n";
  }
  return status;
}
