#include <iostream>

#include "aristotle/app/app.hpp"

int main(int argc, char** argv) {
  return aristotle::app::main(argc, argv, std::cout, std::cerr);
}
