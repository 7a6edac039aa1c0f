#include <cstdio>

int main() {
  std::puts("fcat: subcommands not wired up yet");
  return 2;
}
