#include <cstdio>

int main() {
  std::puts("ties: cli not wired yet");
  return 0;
}
