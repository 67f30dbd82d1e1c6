// qtw: command-line front end (verbs are filled in as the library grows).

#include <cstdio>

int main() {
  std::fprintf(stderr, "qtw: no verbs wired up yet\n");
  return 2;
}
