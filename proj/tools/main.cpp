#include "cli.hpp"

int main(int argc, char** argv) {
  return hedgehog::cli_run({argv + 1, argv + argc});
}
