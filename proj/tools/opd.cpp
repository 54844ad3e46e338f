#include <iostream>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::cerr << "opd: command-line interface not wired up yet\n";
  return 2;
}
