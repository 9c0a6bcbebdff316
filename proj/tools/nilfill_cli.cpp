// CLI entry point; subcommands are wired in as the library grows.
#include <cstdio>

int main() {
  std::puts("nilfill: placeholder");
  return 0;
}
