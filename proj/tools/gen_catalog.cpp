#include <iostream>

int main() {
  std::cout << "gen_catalog: not wired up yet\n";
  return 0;
}
