// rootgap command line tool. Subcommands are registered incrementally as the
// library modules land; see README for usage.
#include <cstdio>

int main() {
  std::puts("rootgap: no subcommands registered yet");
  return 2;
}
