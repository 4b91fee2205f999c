#include <cstdio>

int main() {
  std::puts("pegdraw: subcommands not wired up yet");
  return 2;
}
