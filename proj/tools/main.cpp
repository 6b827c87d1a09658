#include <cstdio>

int main() {
  std::puts("sketchsynth: subcommands not wired yet");
  return 2;
}
