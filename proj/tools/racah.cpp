#include <iostream>

int main() {
  std::cout << "racah: not wired up yet\n";
  return 0;
}
