#include <cstdio>

int main() {
  std::puts("risemf: not wired up yet");
  return 1;
}
