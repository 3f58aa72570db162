#include <iostream>

int main() {
  std::cout << "jumploci\n";
  return 0;
}
